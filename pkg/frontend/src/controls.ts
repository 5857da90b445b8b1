import type { ActiveView, ViewState } from "./state.js";

export interface ControlHandlers {
  onAddTerm(term: string): void;
  onExportSnapshot(): void;
  onExportTerms(): void;
  onImportFile(file: File): void;
  onSwitchView(view: ActiveView): void;
}

export function downloadFile(name: string, text: string, type: string): void {
  const blob = new Blob([text], { type });
  const url = URL.createObjectURL(blob);
  const link = document.createElement("a");
  link.href = url;
  link.download = name;
  link.click();
  URL.revokeObjectURL(url);
}

/** Toolbar: import/export top left, then term entry and the view switch. */
export function renderControls(state: ViewState, handlers: ControlHandlers): HTMLElement {
  const bar = document.createElement("div");
  bar.className = "toolbar";

  const fileInput = document.createElement("input");
  fileInput.type = "file";
  fileInput.accept = ".json,.txt,text/plain,application/json";
  fileInput.className = "import-input";
  fileInput.hidden = true;
  fileInput.addEventListener("change", () => {
    const file = fileInput.files?.[0];
    if (file) handlers.onImportFile(file);
    fileInput.value = "";
  });

  const importBtn = document.createElement("button");
  importBtn.className = "import-button";
  importBtn.type = "button";
  importBtn.textContent = "Import";
  importBtn.disabled = state.pending;
  importBtn.addEventListener("click", () => fileInput.click());

  const exportSnapshotBtn = document.createElement("button");
  exportSnapshotBtn.className = "export-snapshot-button";
  exportSnapshotBtn.type = "button";
  exportSnapshotBtn.textContent = "Export snapshot";
  exportSnapshotBtn.disabled = state.pending;
  exportSnapshotBtn.addEventListener("click", handlers.onExportSnapshot);

  const exportTermsBtn = document.createElement("button");
  exportTermsBtn.className = "export-terms-button";
  exportTermsBtn.type = "button";
  exportTermsBtn.textContent = "Export terms";
  exportTermsBtn.disabled = state.pending;
  exportTermsBtn.addEventListener("click", handlers.onExportTerms);

  const addForm = document.createElement("form");
  addForm.className = "add-term-form";
  const termInput = document.createElement("input");
  termInput.type = "text";
  termInput.className = "add-term-input";
  termInput.placeholder = "Add a term...";
  termInput.disabled = state.pending;
  const addBtn = document.createElement("button");
  addBtn.className = "add-term-button";
  addBtn.type = "submit";
  addBtn.textContent = "Add";
  addBtn.disabled = state.pending;
  addForm.append(termInput, addBtn);
  addForm.addEventListener("submit", (event) => {
    event.preventDefault();
    const value = termInput.value.trim();
    if (value) {
      handlers.onAddTerm(value);
      termInput.value = "";
    }
  });

  const viewSwitch = document.createElement("div");
  viewSwitch.className = "view-switch";
  for (const target of ["list", "graph"] as ActiveView[]) {
    const btn = document.createElement("button");
    btn.className = `switch-${target}`;
    btn.type = "button";
    btn.textContent = target === "list" ? "List" : "Graph";
    if (state.activeView === target) btn.classList.add("active");
    btn.addEventListener("click", () => handlers.onSwitchView(target));
    viewSwitch.append(btn);
  }

  bar.append(importBtn, fileInput, exportSnapshotBtn, exportTermsBtn, addForm, viewSwitch);
  return bar;
}
