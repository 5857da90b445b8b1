import type { ViewState } from "./state.js";
import type { SuggestionPayload } from "./types.js";

export interface ListViewHandlers {
  onAccept(term: string): void;
  onReject(term: string): void;
  onRemove(term: string): void;
  onSelectAnchor(anchor: string): void;
}

function suggestionRow(
  sugg: SuggestionPayload,
  pending: boolean,
  handlers: ListViewHandlers,
): HTMLLIElement {
  const li = document.createElement("li");
  li.className = "suggestion";
  li.dataset.term = sugg.term;
  if (sugg.below_threshold) li.classList.add("dimmed");

  // clicking the suggestion accepts it; the adjacent "x" rejects it
  const acceptBtn = document.createElement("button");
  acceptBtn.className = "suggestion-accept";
  acceptBtn.type = "button";
  acceptBtn.disabled = pending;
  acceptBtn.textContent = sugg.display;
  acceptBtn.title = `accept "${sugg.display}"`;
  acceptBtn.addEventListener("click", () => handlers.onAccept(sugg.term));

  const score = document.createElement("span");
  score.className = "suggestion-score";
  score.textContent = sugg.score.toFixed(3);

  const rejectBtn = document.createElement("button");
  rejectBtn.className = "suggestion-reject";
  rejectBtn.type = "button";
  rejectBtn.disabled = pending;
  rejectBtn.textContent = "x";
  rejectBtn.title = `reject "${sugg.display}"`;
  rejectBtn.addEventListener("click", () => handlers.onReject(sugg.term));

  li.append(acceptBtn, score, rejectBtn);
  return li;
}

/** Accepted terms with their top suggestions, straight from the payload. */
export function renderListView(state: ViewState, handlers: ListViewHandlers): HTMLElement {
  const root = document.createElement("section");
  root.className = "list-view";
  const view = state.view;
  if (view === null) return root;

  if (view.accepted.length === 0) {
    const hint = document.createElement("p");
    hint.className = "empty-hint";
    hint.textContent = "Add a first term to start building the vocabulary.";
    root.append(hint);
    return root;
  }

  const displayByTerm = new Map(view.accepted.map((e) => [e.term, e.display]));
  for (const group of view.groups) {
    const card = document.createElement("article");
    card.className = "anchor-group";
    card.dataset.anchor = group.anchor;
    if (state.selectedAnchor === group.anchor) card.classList.add("selected");

    const header = document.createElement("header");
    const title = document.createElement("button");
    title.className = "anchor-term";
    title.type = "button";
    title.textContent = displayByTerm.get(group.anchor) ?? group.anchor;
    title.addEventListener("click", () => handlers.onSelectAnchor(group.anchor));

    const removeBtn = document.createElement("button");
    removeBtn.className = "anchor-remove";
    removeBtn.type = "button";
    removeBtn.disabled = state.pending;
    removeBtn.textContent = "remove";
    removeBtn.title = `remove "${group.anchor}" from accepted`;
    removeBtn.addEventListener("click", () => handlers.onRemove(group.anchor));

    header.append(title, removeBtn);
    card.append(header);

    const list = document.createElement("ul");
    list.className = "suggestion-list";
    for (const sugg of group.suggestions) {
      list.append(suggestionRow(sugg, state.pending, handlers));
    }
    card.append(list);
    root.append(card);
  }
  return root;
}
