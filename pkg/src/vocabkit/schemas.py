"""Pydantic request/response models for the HTTP API.

The wire format keeps the session parameter key ``lambda`` (the rejection
penalty weight), aliased here because it is a Python keyword.
"""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field

from .session import Session, SessionParams


class ParamsModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True, protected_namespaces=())

    k: int = 10
    reject_weight: float = Field(default=0.5, alias="lambda")
    display_threshold: float = 0.3
    graph_edge_threshold: float = 0.25
    per_anchor_display: int = 3
    model_ids: list[str] = Field(default_factory=list)

    def to_engine(self, default_model_ids: list[str]) -> SessionParams:
        return SessionParams(
            model_ids=tuple(self.model_ids or default_model_ids),
            k=self.k,
            reject_weight=self.reject_weight,
            display_threshold=self.display_threshold,
            graph_edge_threshold=self.graph_edge_threshold,
            per_anchor_display=self.per_anchor_display,
        )

    @classmethod
    def from_engine(cls, params: SessionParams) -> "ParamsModel":
        return cls(
            k=params.k,
            reject_weight=params.reject_weight,
            display_threshold=params.display_threshold,
            graph_edge_threshold=params.graph_edge_threshold,
            per_anchor_display=params.per_anchor_display,
            model_ids=list(params.model_ids),
        )


class ModelInfo(BaseModel):
    model_config = ConfigDict(protected_namespaces=())

    id: str
    dimension: int
    vocab_size: int


class TermEntry(BaseModel):
    term: str
    display: str


class SuggestionModel(BaseModel):
    term: str
    display: str
    score: float
    anchor: str
    below_threshold: bool
    contributions: dict[str, float]


class AnchorGroup(BaseModel):
    anchor: str
    suggestions: list[SuggestionModel]


class GraphEdgeModel(BaseModel):
    a: str
    b: str
    weight: float


class GraphModel(BaseModel):
    nodes: list[str]
    edges: list[GraphEdgeModel]


class SessionView(BaseModel):
    session_id: str
    params: ParamsModel
    accepted: list[TermEntry]
    rejected: list[TermEntry]
    suggestions: list[SuggestionModel]
    groups: list[AnchorGroup]
    graph: GraphModel


class CreateSessionRequest(BaseModel):
    params: ParamsModel | None = None


class CreateSessionResponse(BaseModel):
    session_id: str
    state: SessionView


class TermRequest(BaseModel):
    term: str


class ErrorBody(BaseModel):
    code: str
    message: str


def view_of(session: Session) -> SessionView:
    """Serialize the full session state the UI renders from."""
    suggestions = [
        SuggestionModel(
            term=s.term, display=s.display, score=s.score, anchor=s.anchor,
            below_threshold=s.below_threshold, contributions=dict(s.contributions))
        for s in session.ranked_suggestions()
    ]
    groups = [
        AnchorGroup(anchor=anchor, suggestions=[
            SuggestionModel(
                term=s.term, display=s.display, score=s.score, anchor=s.anchor,
                below_threshold=s.below_threshold, contributions=dict(s.contributions))
            for s in members
        ])
        for anchor, members in session.list_view().items()
    ]
    graph = session.graph_view()
    return SessionView(
        session_id=session.id,
        params=ParamsModel.from_engine(session.params),
        accepted=[TermEntry(term=t, display=d) for t, d in session.accepted.items()],
        rejected=[TermEntry(term=t, display=d) for t, d in session.rejected.items()],
        suggestions=suggestions,
        groups=groups,
        graph=GraphModel(
            nodes=graph.nodes,
            edges=[GraphEdgeModel(a=e.a, b=e.b, weight=e.weight) for e in graph.edges]),
    )
