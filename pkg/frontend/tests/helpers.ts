import { ApiError, type SessionApi } from "../src/api.js";
import type {
  CreateSessionResponse,
  ModelInfo,
  ParamsPayload,
  SessionView,
  SuggestionPayload,
  TermEntry,
} from "../src/types.js";

export const defaultParams: ParamsPayload = {
  k: 10,
  lambda: 0.5,
  display_threshold: 0.3,
  graph_edge_threshold: 0.25,
  per_anchor_display: 3,
  model_ids: ["alpha"],
};

export function suggestion(overrides: Partial<SuggestionPayload> & { term: string }): SuggestionPayload {
  return {
    display: overrides.term,
    score: 0.5,
    anchor: "seed",
    below_threshold: false,
    contributions: {},
    ...overrides,
  };
}

export function view(overrides: Partial<SessionView> = {}): SessionView {
  return {
    session_id: "sess-1",
    params: defaultParams,
    accepted: [],
    rejected: [],
    suggestions: [],
    groups: [],
    graph: { nodes: [], edges: [] },
    ...overrides,
  };
}

export function acceptedEntry(term: string, display?: string): TermEntry {
  return { term, display: display ?? term };
}

type Handlers = Partial<{
  listModels(): Promise<ModelInfo[]>;
  createSession(params?: Record<string, unknown>): Promise<CreateSessionResponse>;
  getSession(id: string): Promise<SessionView>;
  accept(id: string, term: string): Promise<SessionView>;
  reject(id: string, term: string): Promise<SessionView>;
  remove(id: string, term: string): Promise<SessionView>;
  exportSnapshot(id: string): Promise<string>;
  exportTerms(id: string): Promise<string>;
  importPayload(id: string, body: string, kind: "snapshot" | "terms"): Promise<SessionView>;
}>;

/** Scripted stand-in for the backend; unstubbed calls fail the test. */
export class FakeApi implements SessionApi {
  calls: Array<{ method: string; args: unknown[] }> = [];

  constructor(private handlers: Handlers = {}) {}

  stub(handlers: Handlers): void {
    this.handlers = { ...this.handlers, ...handlers };
  }

  private dispatch<T>(method: keyof Handlers, args: unknown[]): Promise<T> {
    this.calls.push({ method, args });
    const handler = this.handlers[method] as ((...a: unknown[]) => Promise<T>) | undefined;
    if (!handler) return Promise.reject(new Error(`FakeApi: ${method} not stubbed`));
    return handler(...args);
  }

  callsTo(method: string): Array<{ method: string; args: unknown[] }> {
    return this.calls.filter((c) => c.method === method);
  }

  listModels(): Promise<ModelInfo[]> {
    return this.dispatch("listModels", []);
  }
  createSession(params?: Record<string, unknown>): Promise<CreateSessionResponse> {
    return this.dispatch("createSession", [params]);
  }
  getSession(id: string): Promise<SessionView> {
    return this.dispatch("getSession", [id]);
  }
  accept(id: string, term: string): Promise<SessionView> {
    return this.dispatch("accept", [id, term]);
  }
  reject(id: string, term: string): Promise<SessionView> {
    return this.dispatch("reject", [id, term]);
  }
  remove(id: string, term: string): Promise<SessionView> {
    return this.dispatch("remove", [id, term]);
  }
  exportSnapshot(id: string): Promise<string> {
    return this.dispatch("exportSnapshot", [id]);
  }
  exportTerms(id: string): Promise<string> {
    return this.dispatch("exportTerms", [id]);
  }
  importPayload(id: string, body: string, kind: "snapshot" | "terms"): Promise<SessionView> {
    return this.dispatch("importPayload", [id, body, kind]);
  }
}

/**
 * Minimal stateful backend double for round-trip tests: it tracks the
 * accepted/rejected lists exactly as the real service persists them and
 * rebuilds views from them, with no scoring of its own.
 */
export class StatefulFakeApi extends FakeApi {
  accepted: TermEntry[] = [];
  rejected: TermEntry[] = [];

  constructor(readonly sessionId = "stateful-1") {
    super();
    this.stub({
      createSession: async () => ({ session_id: this.sessionId, state: this.currentView() }),
      getSession: async () => this.currentView(),
      accept: async (_id, term) => {
        if (!this.accepted.some((e) => e.term === term)) {
          this.accepted.push({ term, display: term });
        }
        return this.currentView();
      },
      exportSnapshot: async () =>
        JSON.stringify({
          format_version: 1,
          params: defaultParams,
          accepted: this.accepted,
          rejected: this.rejected,
        }),
      importPayload: async (_id, body, kind) => {
        if (kind !== "snapshot") throw new ApiError(400, "invalid_payload", "expected snapshot");
        let parsed: { accepted?: TermEntry[]; rejected?: TermEntry[]; format_version?: number };
        try {
          parsed = JSON.parse(body);
        } catch {
          throw new ApiError(400, "invalid_payload", "bad snapshot payload");
        }
        if (parsed.format_version !== 1) {
          throw new ApiError(400, "unsupported_version", "unsupported format_version");
        }
        this.accepted = parsed.accepted ?? [];
        this.rejected = parsed.rejected ?? [];
        return this.currentView();
      },
    });
  }

  currentView(): SessionView {
    return view({
      session_id: this.sessionId,
      accepted: [...this.accepted],
      rejected: [...this.rejected],
      groups: this.accepted.map((e) => ({ anchor: e.term, suggestions: [] })),
      graph: { nodes: this.accepted.map((e) => e.term), edges: [] },
    });
  }
}

export function flush(): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, 0));
}
