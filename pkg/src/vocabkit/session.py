"""The interactive expansion session: accepted/rejected/suggested term sets.

A session keeps three pairwise-disjoint term sets. Accepting a term
fetches ensemble candidates for it and folds the new ones into the
suggested set; every mutation then rescores all suggestions, so scores,
anchors, and threshold flags are never stale.

A suggestion's score is the sum of its ensemble similarities to accepted
terms minus ``reject_weight`` times the sum of its similarities to
rejected terms (undefined similarities count as zero). Each suggestion is
anchored to the accepted term it is most similar to.

Sessions also keep an event history of successful accepts/rejects;
``remove_accepted`` is defined as replaying that history without the
removed term's accept, which keeps its semantics exactly replay-equivalent.

A session instance is not thread-safe; callers serialize mutations per
session (the HTTP layer holds one lock per session).
"""

from __future__ import annotations

import uuid
from dataclasses import dataclass, field

from .embeddings import EmbeddingModel, normalize_term
from .ensemble import Ensemble
from .errors import (
    InvalidParamsError,
    MalformedSnapshotError,
    NotAcceptedError,
    TermConflictError,
    UnsupportedVersionError,
)

SNAPSHOT_VERSION = 1


@dataclass(frozen=True)
class SessionParams:
    model_ids: tuple[str, ...]
    k: int = 10
    reject_weight: float = 0.5
    display_threshold: float = 0.3
    graph_edge_threshold: float = 0.25
    per_anchor_display: int = 3

    def __post_init__(self):
        if not self.model_ids:
            raise InvalidParamsError("model_ids must be non-empty")
        if self.k < 1:
            raise InvalidParamsError("k must be >= 1")
        if self.reject_weight < 0:
            raise InvalidParamsError("reject_weight must be >= 0")
        if self.per_anchor_display < 1:
            raise InvalidParamsError("per_anchor_display must be >= 1")

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "lambda": self.reject_weight,
            "display_threshold": self.display_threshold,
            "graph_edge_threshold": self.graph_edge_threshold,
            "per_anchor_display": self.per_anchor_display,
            "model_ids": list(self.model_ids),
        }

    @classmethod
    def from_dict(cls, data: dict, default_model_ids: list[str]) -> "SessionParams":
        if not isinstance(data, dict):
            raise MalformedSnapshotError("params must be an object")
        known = {"k", "lambda", "display_threshold", "graph_edge_threshold",
                 "per_anchor_display", "model_ids"}
        unknown = set(data) - known
        if unknown:
            raise MalformedSnapshotError(f"unknown params keys: {sorted(unknown)}")
        try:
            return cls(
                model_ids=tuple(data.get("model_ids") or default_model_ids),
                k=int(data.get("k", 10)),
                reject_weight=float(data.get("lambda", 0.5)),
                display_threshold=float(data.get("display_threshold", 0.3)),
                graph_edge_threshold=float(data.get("graph_edge_threshold", 0.25)),
                per_anchor_display=int(data.get("per_anchor_display", 3)),
            )
        except (TypeError, ValueError) as exc:
            raise MalformedSnapshotError(f"bad params: {exc}") from None


@dataclass
class Suggestion:
    term: str
    display: str
    score: float
    anchor: str
    below_threshold: bool
    contributions: dict[str, float] = field(default_factory=dict)


@dataclass(frozen=True)
class GraphEdge:
    a: str
    b: str
    weight: float


@dataclass(frozen=True)
class GraphView:
    nodes: list[str]
    edges: list[GraphEdge]


class Session:
    def __init__(self, params: SessionParams, ensemble: Ensemble,
                 session_id: str | None = None):
        self.id = session_id or uuid.uuid4().hex
        self.params = params
        self.ensemble = ensemble
        self.accepted: dict[str, str] = {}   # normalized term -> display form
        self.rejected: dict[str, str] = {}
        self.suggestions: dict[str, Suggestion] = {}
        self.history: list[tuple[str, str]] = []  # ("accept"|"reject", display)

    # -- mutations ---------------------------------------------------------

    def accept_term(self, raw: str) -> None:
        """Move a term into the accepted set and fetch its candidates.

        Accepting an already-accepted term is a no-op; accepting a
        suggested or rejected term moves it out of that set first. New
        candidates (terms not yet known to the session) become
        suggestions, and everything is rescored.
        """
        term = normalize_term(raw)
        if term in self.accepted:
            return
        display = raw.strip()
        self.rejected.pop(term, None)
        self.suggestions.pop(term, None)
        self.accepted[term] = display
        self.history.append(("accept", display))

        exclude = frozenset(self.accepted) | frozenset(self.rejected)
        for cand in self.ensemble.candidates(term, self.params.k, exclude):
            if cand.term not in self.suggestions:
                self.suggestions[cand.term] = Suggestion(
                    term=cand.term, display=cand.term, score=0.0,
                    anchor=term, below_threshold=False)
        self._rescore()

    def reject_term(self, raw: str) -> None:
        """Move a term into the rejected set.

        The term is usually a current suggestion, but rejecting an
        arbitrary never-suggested term is allowed too. Rejecting an
        accepted term is a conflict; rejecting an already-rejected term
        is a no-op.
        """
        term = normalize_term(raw)
        if term in self.accepted:
            raise TermConflictError(
                f"{term!r} is accepted; remove it from the accepted set first")
        if term in self.rejected:
            return
        display = raw.strip()
        self.suggestions.pop(term, None)
        self.rejected[term] = display
        self.history.append(("reject", display))
        self._rescore()

    def remove_accepted(self, raw: str) -> None:
        """Undo an accept: replay the history without that term's accept.

        Suggestions that only existed because of the removed term's
        candidate fetch disappear; if the term had been rejected before
        being accepted, the rejection is restored.
        """
        term = normalize_term(raw)
        if term not in self.accepted:
            raise NotAcceptedError(f"{term!r} is not an accepted term")
        events = [ev for ev in self.history
                  if not (ev[0] == "accept" and normalize_term(ev[1]) == term)]
        self._replay(events)

    def _replay(self, events: list[tuple[str, str]]) -> None:
        self.accepted.clear()
        self.rejected.clear()
        self.suggestions.clear()
        self.history = []
        for kind, raw in events:
            if kind == "accept":
                self.accept_term(raw)
            elif kind == "reject":
                self.reject_term(raw)
            else:
                raise ValueError(f"unknown history event {kind!r}")

    def _rescore(self) -> None:
        """Recompute score, anchor, and threshold flag of every suggestion."""
        lam = self.params.reject_weight
        threshold = self.params.display_threshold
        for term, sugg in self.suggestions.items():
            contributions: dict[str, float] = {}
            accept_sum = 0.0
            best: tuple[float, str] | None = None
            for a in self.accepted:
                p = self.ensemble.similarity(term, a)
                if p is not None:
                    contributions[a] = p
                    accept_sum += p
                key = (-(p if p is not None else 0.0), a)
                if best is None or key < best:
                    best = key
            reject_sum = 0.0
            for r in self.rejected:
                p = self.ensemble.similarity(term, r)
                if p is not None:
                    contributions[r] = p
                    reject_sum += p
            score = accept_sum - lam * reject_sum
            sugg.score = score
            sugg.anchor = best[1] if best is not None else ""
            sugg.below_threshold = score < threshold
            sugg.contributions = contributions

    # -- read views --------------------------------------------------------

    def ranked_suggestions(self) -> list[Suggestion]:
        """All suggestions, score descending, ties by term ascending."""
        return sorted(self.suggestions.values(), key=lambda s: (-s.score, s.term))

    def list_view(self) -> dict[str, list[Suggestion]]:
        """Suggestions grouped under their anchor, truncated per group.

        Every accepted term appears as a key (possibly with an empty
        list), in acceptance order; each group holds at most
        ``per_anchor_display`` suggestions, best first.
        """
        groups: dict[str, list[Suggestion]] = {a: [] for a in self.accepted}
        for sugg in self.ranked_suggestions():
            group = groups.get(sugg.anchor)
            if group is not None and len(group) < self.params.per_anchor_display:
                group.append(sugg)
        return groups

    def graph_view(self) -> GraphView:
        """Accepted terms as nodes, similarity-weighted edges between them.

        Edges exist for unordered accepted pairs whose ensemble
        similarity is defined and at least ``graph_edge_threshold``;
        ordering is lexicographic on the pair.
        """
        nodes = list(self.accepted)
        ordered = sorted(nodes)
        edges = []
        for i, a in enumerate(ordered):
            for b in ordered[i + 1:]:
                p = self.ensemble.similarity(a, b)
                if p is not None and p >= self.params.graph_edge_threshold:
                    edges.append(GraphEdge(a=a, b=b, weight=p))
        return GraphView(nodes=nodes, edges=edges)

    # -- serialization -----------------------------------------------------

    def export_snapshot(self) -> dict:
        return {
            "format_version": SNAPSHOT_VERSION,
            "params": self.params.to_dict(),
            "accepted": [{"term": t, "display": d} for t, d in self.accepted.items()],
            "rejected": [{"term": t, "display": d} for t, d in self.rejected.items()],
        }

    def export_term_list(self) -> str:
        """Accepted display forms, one per line, acceptance order."""
        return "".join(d + "\n" for d in self.accepted.values())


def new_session(params: SessionParams, registry: dict[str, EmbeddingModel],
                session_id: str | None = None) -> Session:
    ensemble = Ensemble.from_registry(list(params.model_ids), registry)
    return Session(params, ensemble, session_id=session_id)


def _entry_display(entry) -> str:
    if not isinstance(entry, dict) or not (entry.get("display") or entry.get("term")):
        raise MalformedSnapshotError(f"bad term entry: {entry!r}")
    return entry.get("display") or entry["term"]


def import_snapshot(data: dict, registry: dict[str, EmbeddingModel],
                    session_id: str | None = None) -> Session:
    """Rebuild a session from a snapshot.

    Accepted terms are re-accepted in order, then rejections are
    re-applied in order; suggestions are recomputed along the way rather
    than persisted.
    """
    if not isinstance(data, dict):
        raise MalformedSnapshotError("snapshot must be a JSON object")
    if "format_version" not in data:
        raise MalformedSnapshotError("snapshot is missing format_version")
    version = data["format_version"]
    if version != SNAPSHOT_VERSION:
        raise UnsupportedVersionError(f"unsupported format_version: {version!r}")
    params = SessionParams.from_dict(data.get("params", {}), list(registry))
    accepted = data.get("accepted", [])
    rejected = data.get("rejected", [])
    if not isinstance(accepted, list) or not isinstance(rejected, list):
        raise MalformedSnapshotError("accepted/rejected must be lists")

    session = new_session(params, registry, session_id=session_id)
    for entry in accepted:
        session.accept_term(_entry_display(entry))
    for entry in rejected:
        session.reject_term(_entry_display(entry))
    return session


def import_term_list(text: str, params: SessionParams,
                     registry: dict[str, EmbeddingModel],
                     session_id: str | None = None) -> Session:
    """Build a session by accepting each non-empty line in order."""
    session = new_session(params, registry, session_id=session_id)
    for line in text.splitlines():
        if line.strip():
            session.accept_term(line)
    return session
