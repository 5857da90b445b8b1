import { ApiError, type SessionApi } from "./api.js";
import type { SessionView } from "./types.js";

export type ActiveView = "list" | "graph";

/**
 * What the UI renders from: the last server-acknowledged payload plus
 * purely local bits (selection, active view, pending flag, error banner).
 */
export interface ViewState {
  sessionId: string | null;
  view: SessionView | null;
  selectedAnchor: string | null;
  activeView: ActiveView;
  pending: boolean;
  error: string | null;
}

export function initialState(): ViewState {
  return {
    sessionId: null,
    view: null,
    selectedAnchor: null,
    activeView: "list",
    pending: false,
    error: null,
  };
}

type Mutation = (api: SessionApi, sessionId: string) => Promise<SessionView>;

export class Store {
  readonly state: ViewState = initialState();
  private listeners: Array<() => void> = [];

  constructor(readonly api: SessionApi) {}

  subscribe(listener: () => void): void {
    this.listeners.push(listener);
  }

  private emit(): void {
    for (const listener of this.listeners) listener();
  }

  private applyView(view: SessionView): void {
    this.state.view = view;
    this.state.sessionId = view.session_id;
    if (
      this.state.selectedAnchor !== null &&
      !view.accepted.some((e) => e.term === this.state.selectedAnchor)
    ) {
      this.state.selectedAnchor = null;
    }
  }

  async init(existingSessionId?: string): Promise<void> {
    if (existingSessionId) {
      this.applyView(await this.api.getSession(existingSessionId));
    } else {
      const created = await this.api.createSession();
      this.applyView(created.state);
    }
    this.emit();
  }

  /**
   * Run one mutation against the server and rerender from its response.
   * Only a single mutation may be in flight; further requests are
   * ignored until it settles, keeping the rendered state linear with
   * the server's.
   */
  private async mutate(mutation: Mutation): Promise<void> {
    if (this.state.pending || this.state.sessionId === null) return;
    this.state.pending = true;
    this.state.error = null;
    this.emit();
    try {
      this.applyView(await mutation(this.api, this.state.sessionId));
    } catch (err) {
      this.state.error = err instanceof ApiError
        ? `${err.code}: ${err.message}`
        : `request failed: ${String(err)}`;
    } finally {
      this.state.pending = false;
      this.emit();
    }
  }

  accept(term: string): Promise<void> {
    return this.mutate((api, sid) => api.accept(sid, term));
  }

  reject(term: string): Promise<void> {
    return this.mutate((api, sid) => api.reject(sid, term));
  }

  remove(term: string): Promise<void> {
    return this.mutate((api, sid) => api.remove(sid, term));
  }

  importPayload(body: string, kind: "snapshot" | "terms"): Promise<void> {
    return this.mutate((api, sid) => api.importPayload(sid, body, kind));
  }

  exportSnapshot(): Promise<string> {
    if (this.state.sessionId === null) return Promise.reject(new Error("no session"));
    return this.api.exportSnapshot(this.state.sessionId);
  }

  exportTerms(): Promise<string> {
    if (this.state.sessionId === null) return Promise.reject(new Error("no session"));
    return this.api.exportTerms(this.state.sessionId);
  }

  setActiveView(view: ActiveView): void {
    if (this.state.activeView !== view) {
      this.state.activeView = view;
      this.emit();
    }
  }

  selectAnchor(anchor: string | null): void {
    this.state.selectedAnchor = anchor;
    this.emit();
  }

  clearError(): void {
    if (this.state.error !== null) {
      this.state.error = null;
      this.emit();
    }
  }
}
