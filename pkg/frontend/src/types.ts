/** Wire types mirroring the JSON the backend serves. */

export interface ParamsPayload {
  k: number;
  lambda: number;
  display_threshold: number;
  graph_edge_threshold: number;
  per_anchor_display: number;
  model_ids: string[];
}

export interface TermEntry {
  term: string;
  display: string;
}

export interface SuggestionPayload {
  term: string;
  display: string;
  score: number;
  anchor: string;
  below_threshold: boolean;
  contributions: Record<string, number>;
}

export interface AnchorGroup {
  anchor: string;
  suggestions: SuggestionPayload[];
}

export interface GraphEdgePayload {
  a: string;
  b: string;
  weight: number;
}

export interface GraphPayload {
  nodes: string[];
  edges: GraphEdgePayload[];
}

export interface SessionView {
  session_id: string;
  params: ParamsPayload;
  accepted: TermEntry[];
  rejected: TermEntry[];
  suggestions: SuggestionPayload[];
  groups: AnchorGroup[];
  graph: GraphPayload;
}

export interface ModelInfo {
  id: string;
  dimension: number;
  vocab_size: number;
}

export interface CreateSessionResponse {
  session_id: string;
  state: SessionView;
}
