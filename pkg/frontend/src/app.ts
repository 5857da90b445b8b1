import type { SessionApi } from "./api.js";
import { downloadFile, renderControls } from "./controls.js";
import { renderGraphView } from "./graphView.js";
import { renderListView } from "./listView.js";
import { Store } from "./state.js";

/** Detect whether an uploaded file is a snapshot or a plain term list. */
export function classifyImport(name: string, text: string): "snapshot" | "terms" {
  if (name.toLowerCase().endsWith(".json")) return "snapshot";
  if (name.toLowerCase().endsWith(".txt")) return "terms";
  return text.trimStart().startsWith("{") ? "snapshot" : "terms";
}

export interface App {
  store: Store;
  render(): void;
}

export function createApp(root: HTMLElement, api: SessionApi): App {
  const store = new Store(api);

  const handleImportFile = async (file: File) => {
    const text = await file.text();
    await store.importPayload(text, classifyImport(file.name, text));
  };

  const render = () => {
    const state = store.state;
    root.replaceChildren();

    root.append(
      renderControls(state, {
        onAddTerm: (term) => void store.accept(term),
        onExportSnapshot: () =>
          void store.exportSnapshot().then((text) =>
            downloadFile("vocabulary-snapshot.json", text, "application/json")),
        onExportTerms: () =>
          void store.exportTerms().then((text) =>
            downloadFile("vocabulary-terms.txt", text, "text/plain")),
        onImportFile: (file) => void handleImportFile(file),
        onSwitchView: (view) => store.setActiveView(view),
      }),
    );

    const banner = document.createElement("div");
    banner.className = "error-banner";
    if (state.error !== null) {
      banner.classList.add("visible");
      banner.textContent = state.error;
      const dismiss = document.createElement("button");
      dismiss.type = "button";
      dismiss.textContent = "dismiss";
      dismiss.addEventListener("click", () => store.clearError());
      banner.append(dismiss);
    } else {
      banner.hidden = true;
    }
    root.append(banner);

    const main = document.createElement("main");
    if (state.activeView === "list") {
      main.append(
        renderListView(state, {
          onAccept: (term) => void store.accept(term),
          onReject: (term) => void store.reject(term),
          onRemove: (term) => void store.remove(term),
          onSelectAnchor: (anchor) => store.selectAnchor(anchor),
        }),
      );
    } else {
      main.append(renderGraphView(state));
    }
    root.append(main);
  };

  store.subscribe(render);
  return { store, render };
}
