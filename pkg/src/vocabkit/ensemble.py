"""Ensemble similarity: averaging per-model cosines and pooling candidates.

The ensemble similarity of two terms is the arithmetic mean of their
cosine over exactly those models whose vocabulary contains both; terms
missing from every shared model have no defined similarity. Candidate
generation unions the per-model top-k lists (k applies per model, so a
query can yield up to k * len(models) candidates).
"""

from __future__ import annotations

from dataclasses import dataclass

from .embeddings import EmbeddingModel
from .errors import UnknownModelError


@dataclass(frozen=True)
class Candidate:
    """A pooled suggestion candidate with its ensemble-average score."""

    term: str
    avg_similarity: float
    per_model: dict[str, float]


class Ensemble:
    """An immutable, ordered collection of embedding models.

    Pairwise similarities are cached internally (models never change, so
    cached values stay valid); the cache key is order-independent, which
    also makes similarity() exactly symmetric.
    """

    def __init__(self, models: list[EmbeddingModel]):
        if not models:
            raise ValueError("ensemble needs at least one model")
        ids = [m.id for m in models]
        if len(set(ids)) != len(ids):
            raise ValueError(f"duplicate model ids: {ids}")
        self.models = tuple(models)
        self._sim_cache: dict[tuple[str, str], float | None] = {}

    @classmethod
    def from_registry(cls, model_ids: list[str], registry: dict[str, EmbeddingModel]) -> "Ensemble":
        missing = [mid for mid in model_ids if mid not in registry]
        if missing:
            raise UnknownModelError(f"unknown model id(s): {', '.join(missing)}")
        return cls([registry[mid] for mid in model_ids])

    @property
    def model_ids(self) -> list[str]:
        return [m.id for m in self.models]

    def _per_model(self, a: str, b: str) -> dict[str, float]:
        sims: dict[str, float] = {}
        for model in self.models:
            s = model.similarity(a, b)
            if s is not None:
                sims[model.id] = s
        return sims

    def similarity(self, a: str, b: str) -> float | None:
        """Mean cosine over models containing both terms, else None."""
        key = (a, b) if a <= b else (b, a)
        if key in self._sim_cache:
            return self._sim_cache[key]
        sims = self._per_model(key[0], key[1])
        value = sum(sims.values()) / len(sims) if sims else None
        self._sim_cache[key] = value
        return value

    def candidates(self, query: str, k: int, exclude: set[str] | frozenset[str] = frozenset()) -> list[Candidate]:
        """Union of per-model top-k neighbors of `query`, ensemble-scored.

        Sorted by average similarity descending, ties by term ascending.
        A query absent from every model yields an empty list.
        """
        pooled: set[str] = set()
        for model in self.models:
            for neighbor in model.top_k(query, k, exclude):
                pooled.add(neighbor.term)
        out = []
        for term in pooled:
            key = (term, query) if term <= query else (query, term)
            per_model = self._per_model(*key)
            avg = sum(per_model.values()) / len(per_model)
            self._sim_cache.setdefault(key, avg)
            out.append(Candidate(term=term, avg_similarity=avg, per_model=per_model))
        out.sort(key=lambda c: (-c.avg_similarity, c.term))
        return out
