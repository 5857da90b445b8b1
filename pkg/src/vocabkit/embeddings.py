"""Word-embedding model storage and exact similarity queries.

Models are loaded from word2vec text files (header ``"<count> <dim>"``,
then one ``term c1 .. c_dim`` row per line), unit-normalized at load so
cosine similarity is a plain dot product, and kept immutable afterwards.
Immutability makes a loaded model safe to share across threads.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import InvalidTermError, ModelFormatError

logger = logging.getLogger(__name__)

_WHITESPACE_RUN = re.compile(r"\s+")


def normalize_term(raw: str) -> str:
    """Canonical vocabulary key for a user-supplied term.

    Trims, lowercases, and replaces every internal whitespace run with a
    single underscore ("Smart  Cities" -> "smart_cities"). Idempotent.

    Raises:
        InvalidTermError: if the input is empty after trimming.
    """
    trimmed = raw.strip()
    if not trimmed:
        raise InvalidTermError("term is empty")
    return _WHITESPACE_RUN.sub("_", trimmed.lower())


@dataclass(frozen=True)
class Neighbor:
    """One nearest-neighbor hit: a vocabulary term and its cosine score."""

    term: str
    score: float


class EmbeddingModel:
    """Immutable map from normalized term to a unit-length vector.

    All query methods are read-only; instances can be shared across
    concurrent readers without synchronization.
    """

    def __init__(self, model_id: str, dimension: int, terms: list[str],
                 matrix: np.ndarray, warnings: tuple[str, ...] = ()):
        if matrix.shape != (len(terms), dimension):
            raise ValueError("matrix shape does not match terms/dimension")
        self.id = model_id
        self.dimension = dimension
        self._terms = list(terms)
        self._terms_arr = np.array(terms, dtype=np.str_) if terms else np.array([], dtype=np.str_)
        self._matrix = matrix
        self._index = {t: i for i, t in enumerate(terms)}
        self.load_warnings = warnings

    @property
    def vocab_size(self) -> int:
        return len(self._terms)

    @property
    def terms(self) -> list[str]:
        return list(self._terms)

    def __contains__(self, term: str) -> bool:
        return term in self._index

    def vector(self, term: str) -> np.ndarray | None:
        """Unit vector for `term`, or None if out of vocabulary."""
        i = self._index.get(term)
        if i is None:
            return None
        return self._matrix[i]

    def similarity(self, a: str, b: str) -> float | None:
        """Cosine similarity of two in-vocabulary terms, else None.

        Exactly symmetric: similarity(a, b) == similarity(b, a).
        """
        ia = self._index.get(a)
        ib = self._index.get(b)
        if ia is None or ib is None:
            return None
        return float(np.dot(self._matrix[ia], self._matrix[ib]))

    def top_k(self, query: str, k: int, exclude: set[str] | frozenset[str] = frozenset()) -> list[Neighbor]:
        """The k most cosine-similar terms to `query`.

        The query itself and every member of `exclude` are skipped.
        Ordering is score descending with ties broken by term ascending,
        which makes the result deterministic. An out-of-vocabulary query
        yields an empty list.
        """
        if k < 1:
            raise ValueError("k must be >= 1")
        row = self._index.get(query)
        if row is None:
            return []
        scores = self._matrix @ self._matrix[row]
        mask = np.ones(len(self._terms), dtype=bool)
        mask[row] = False
        for term in exclude:
            i = self._index.get(term)
            if i is not None:
                mask[i] = False
        idx = np.flatnonzero(mask)
        if idx.size == 0:
            return []
        sub_scores = scores[idx]
        sub_terms = self._terms_arr[idx]
        # lexsort: last key is primary, so sort by score desc, then term asc
        order = np.lexsort((sub_terms, -sub_scores))[:k]
        # report scores through the same per-pair dot used by similarity();
        # the BLAS matvec above can differ from it in the last ulp
        query_vec = self._matrix[row]
        picked = [(str(sub_terms[i]), float(np.dot(self._matrix[idx[i]], query_vec)))
                  for i in order]
        picked.sort(key=lambda ts: (-ts[1], ts[0]))
        return [Neighbor(term, score) for term, score in picked]


def load_model(path: str | Path, model_id: str) -> EmbeddingModel:
    """Parse a word2vec text file into an EmbeddingModel.

    Every vector is unit-normalized. Rows that cannot be normalized
    (zero or non-finite vectors) and duplicate terms are skipped with a
    recorded warning; structural problems (bad header, wrong component
    count, non-numeric component) abort the load with the offending row
    named.
    """
    path = Path(path)
    warnings: list[str] = []
    terms: list[str] = []
    rows: list[np.ndarray] = []
    seen: set[str] = set()

    with open(path, encoding="utf-8") as fh:
        header = fh.readline()
        parts = header.split()
        if len(parts) != 2:
            raise ModelFormatError(path, 1, f"malformed header {header.strip()!r}")
        try:
            count, dim = int(parts[0]), int(parts[1])
        except ValueError:
            raise ModelFormatError(path, 1, f"malformed header {header.strip()!r}") from None
        if count < 0 or dim < 1:
            raise ModelFormatError(path, 1, f"malformed header {header.strip()!r}")

        for line_no, line in enumerate(fh, start=2):
            if not line.strip():
                continue
            fields = line.split()
            if len(fields) != dim + 1:
                raise ModelFormatError(
                    path, line_no,
                    f"expected {dim} components, got {len(fields) - 1}")
            term = normalize_term(fields[0])
            try:
                vec = np.array([float(x) for x in fields[1:]], dtype=np.float64)
            except ValueError as exc:
                raise ModelFormatError(path, line_no, f"bad component: {exc}") from None
            if not np.all(np.isfinite(vec)):
                warnings.append(f"line {line_no}: non-finite vector for {term!r}, skipped")
                continue
            norm = float(np.linalg.norm(vec))
            if norm == 0.0 or not np.isfinite(norm):
                warnings.append(f"line {line_no}: zero vector for {term!r}, skipped")
                continue
            if term in seen:
                warnings.append(f"line {line_no}: duplicate term {term!r}, first occurrence kept")
                continue
            seen.add(term)
            terms.append(term)
            rows.append(vec / norm)

    if len(terms) != count:
        warnings.append(f"header declared {count} entries, loaded {len(terms)}")
    for message in warnings:
        logger.warning("%s [%s]: %s", model_id, path, message)

    matrix = np.vstack(rows) if rows else np.empty((0, dim), dtype=np.float64)
    return EmbeddingModel(model_id, dim, terms, matrix, warnings=tuple(warnings))
