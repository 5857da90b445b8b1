import type { CreateSessionResponse, ModelInfo, SessionView } from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

async function toApiError(resp: Response): Promise<ApiError> {
  let code = "error";
  let message = `request failed with status ${resp.status}`;
  try {
    const body = await resp.json();
    if (typeof body.code === "string") code = body.code;
    if (typeof body.message === "string") message = body.message;
  } catch {
    // non-JSON error body; keep the generic message
  }
  return new ApiError(resp.status, code, message);
}

/** The surface the UI needs from the backend. */
export interface SessionApi {
  listModels(): Promise<ModelInfo[]>;
  createSession(params?: Record<string, unknown>): Promise<CreateSessionResponse>;
  getSession(id: string): Promise<SessionView>;
  accept(id: string, term: string): Promise<SessionView>;
  reject(id: string, term: string): Promise<SessionView>;
  remove(id: string, term: string): Promise<SessionView>;
  exportSnapshot(id: string): Promise<string>;
  exportTerms(id: string): Promise<string>;
  importPayload(id: string, body: string, kind: "snapshot" | "terms"): Promise<SessionView>;
}

/** Thin fetch wrapper for the session service; all scoring stays server-side. */
export class ApiClient implements SessionApi {
  constructor(readonly baseUrl: string = "") {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const resp = await fetch(this.baseUrl + path, init);
    if (!resp.ok) throw await toApiError(resp);
    return (await resp.json()) as T;
  }

  private postJson<T>(path: string, body: unknown): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  listModels(): Promise<ModelInfo[]> {
    return this.request<ModelInfo[]>("/api/models");
  }

  createSession(params?: Record<string, unknown>): Promise<CreateSessionResponse> {
    return this.postJson<CreateSessionResponse>("/api/sessions", params ? { params } : {});
  }

  getSession(id: string): Promise<SessionView> {
    return this.request<SessionView>(`/api/sessions/${id}`);
  }

  accept(id: string, term: string): Promise<SessionView> {
    return this.postJson<SessionView>(`/api/sessions/${id}/accept`, { term });
  }

  reject(id: string, term: string): Promise<SessionView> {
    return this.postJson<SessionView>(`/api/sessions/${id}/reject`, { term });
  }

  remove(id: string, term: string): Promise<SessionView> {
    return this.postJson<SessionView>(`/api/sessions/${id}/remove`, { term });
  }

  async exportSnapshot(id: string): Promise<string> {
    const resp = await fetch(`${this.baseUrl}/api/sessions/${id}/export?format=snapshot`);
    if (!resp.ok) throw await toApiError(resp);
    return resp.text();
  }

  async exportTerms(id: string): Promise<string> {
    const resp = await fetch(`${this.baseUrl}/api/sessions/${id}/export?format=terms`);
    if (!resp.ok) throw await toApiError(resp);
    return resp.text();
  }

  /** Upload a snapshot (JSON) or term list (plain text) into the session. */
  importPayload(id: string, body: string, kind: "snapshot" | "terms"): Promise<SessionView> {
    return this.request<SessionView>(`/api/sessions/${id}/import`, {
      method: "POST",
      headers: {
        "content-type": kind === "snapshot" ? "application/json" : "text/plain",
      },
      body,
    });
  }
}
