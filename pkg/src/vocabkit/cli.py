"""Command line entry points: serve the HTTP API, generate fixture models,
and run non-interactive batch expansion."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .embeddings import EmbeddingModel, load_model
from .errors import ModelFormatError
from .fixtures import generate_fixture
from .session import SessionParams, new_session


def _parse_model_spec(spec: str) -> tuple[str, str]:
    if "=" not in spec:
        raise argparse.ArgumentTypeError(f"expected id=path, got {spec!r}")
    model_id, path = spec.split("=", 1)
    if not model_id or not path:
        raise argparse.ArgumentTypeError(f"expected id=path, got {spec!r}")
    return model_id, path


def _load_registry(specs: list[tuple[str, str]]) -> dict[str, EmbeddingModel]:
    registry: dict[str, EmbeddingModel] = {}
    for model_id, path in specs:
        if model_id in registry:
            raise SystemExit(f"error: duplicate model id {model_id!r}")
        try:
            registry[model_id] = load_model(path, model_id)
        except FileNotFoundError:
            raise SystemExit(f"error: model file not found: {path}") from None
        except ModelFormatError as exc:
            raise SystemExit(f"error: cannot load model {model_id!r}: {exc}") from None
    return registry


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .api import create_app
    from .schemas import ParamsModel

    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")
    registry = _load_registry(args.model)
    for model in registry.values():
        logging.getLogger(__name__).info(
            "loaded model %s: %d terms, dim %d", model.id, model.vocab_size, model.dimension)

    defaults = ParamsModel(
        k=args.k, reject_weight=args.reject_weight, display_threshold=args.threshold)
    app = create_app(registry, snapshot_dir=args.snapshot_dir,
                     static_dir=args.static_dir, defaults=defaults)

    host, _, port = args.listen.rpartition(":")
    if not host or not port.isdigit():
        raise SystemExit(f"error: --listen expects host:port, got {args.listen!r}")
    uvicorn.run(app, host=host, port=int(port), log_level="info")
    return 0


def cmd_fixture(args: argparse.Namespace) -> int:
    path = generate_fixture(args.out, seed=args.seed, n=args.n,
                            dim=args.dim, clusters=args.clusters)
    print(f"wrote {args.n} terms (dim {args.dim}, {args.clusters} clusters) to {path}")
    return 0


def cmd_expand(args: argparse.Namespace) -> int:
    registry = _load_registry(args.model)
    seeds_path = Path(args.seeds)
    try:
        seed_lines = [ln for ln in seeds_path.read_text(encoding="utf-8").splitlines()
                      if ln.strip()]
    except FileNotFoundError:
        raise SystemExit(f"error: seeds file not found: {seeds_path}") from None
    if not seed_lines:
        raise SystemExit(f"error: seeds file {seeds_path} has no terms")

    params = SessionParams(
        model_ids=tuple(registry), k=args.k, reject_weight=args.reject_weight,
        display_threshold=args.threshold)
    session = new_session(params, registry)
    for seed in seed_lines:
        session.accept_term(seed)

    for _ in range(args.rounds):
        ranked = session.ranked_suggestions()
        if not ranked:
            break
        session.accept_term(ranked[0].term)

    for sugg in session.ranked_suggestions()[:args.top_n]:
        print(f"{sugg.term}\t{sugg.score:.6f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vocabkit",
        description="Vocabulary expansion via an ensemble of word-embedding models.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_serve = sub.add_parser("serve", help="load models and run the HTTP service")
    p_serve.add_argument("--model", metavar="ID=PATH", type=_parse_model_spec,
                         action="append", required=True,
                         help="embedding model to load (repeatable)")
    p_serve.add_argument("--listen", default="127.0.0.1:8080", help="listen address")
    p_serve.add_argument("--snapshot-dir", default=None,
                         help="directory for durable per-session snapshots")
    p_serve.add_argument("--static-dir", default=None,
                         help="directory with the built web UI to serve at /")
    p_serve.add_argument("--k", type=int, default=10,
                         help="default per-model top-k for new sessions")
    p_serve.add_argument("--lambda", dest="reject_weight", type=float, default=0.5,
                         help="default rejection penalty weight")
    p_serve.add_argument("--threshold", type=float, default=0.3,
                         help="default display threshold")
    p_serve.set_defaults(func=cmd_serve)

    p_fix = sub.add_parser("fixture", help="generate a deterministic model file")
    p_fix.add_argument("--seed", type=int, default=42)
    p_fix.add_argument("--n", type=int, default=100)
    p_fix.add_argument("--dim", type=int, default=16)
    p_fix.add_argument("--clusters", type=int, default=5)
    p_fix.add_argument("--out", required=True)
    p_fix.set_defaults(func=cmd_fixture)

    p_exp = sub.add_parser("expand", help="batch expansion: seeds in, ranked terms out")
    p_exp.add_argument("--model", metavar="ID=PATH", type=_parse_model_spec,
                       action="append", required=True)
    p_exp.add_argument("--seeds", required=True, help="file with one seed term per line")
    p_exp.add_argument("--k", type=int, default=10)
    p_exp.add_argument("--lambda", dest="reject_weight", type=float, default=0.5)
    p_exp.add_argument("--threshold", type=float, default=0.3)
    p_exp.add_argument("--rounds", type=int, default=0,
                       help="auto-accept the top suggestion this many times")
    p_exp.add_argument("--top-n", type=int, default=20,
                       help="number of ranked suggestions to print")
    p_exp.set_defaults(func=cmd_expand)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
