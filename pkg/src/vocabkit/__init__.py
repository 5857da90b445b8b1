"""Interactive vocabulary expansion over an ensemble of word embeddings."""

from .embeddings import EmbeddingModel, Neighbor, load_model, normalize_term
from .ensemble import Candidate, Ensemble
from .fixtures import generate_fixture
from .session import (
    GraphEdge,
    GraphView,
    Session,
    SessionParams,
    Suggestion,
    import_snapshot,
    import_term_list,
    new_session,
)

__version__ = "0.1.0"

__all__ = [
    "Candidate",
    "EmbeddingModel",
    "Ensemble",
    "GraphEdge",
    "GraphView",
    "Neighbor",
    "Session",
    "SessionParams",
    "Suggestion",
    "generate_fixture",
    "import_snapshot",
    "import_term_list",
    "load_model",
    "new_session",
    "normalize_term",
]
