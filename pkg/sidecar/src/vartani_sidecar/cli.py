"""Run the sidecar: load a checkpoint, serve the wire protocol."""

from __future__ import annotations

import argparse
import sys

import uvicorn

from .app import create_app
from .model import STRATEGIES, MaskedWordModel

__all__ = ["main"]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vartani-sidecar",
        description="Masked-LM inference server for the vartani wire protocol.",
    )
    parser.add_argument(
        "--model",
        required=True,
        help="HuggingFace model id or local checkpoint directory "
        "(any masked LM with a Devanagari-capable vocabulary)",
    )
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument("--port", type=int, default=8900)
    parser.add_argument(
        "--top-k-cap",
        type=int,
        default=100,
        dest="top_k_cap",
        help="upper bound on candidates per response",
    )
    parser.add_argument(
        "--strategy",
        choices=STRATEGIES,
        default="single",
        help="sub-word aggregation: 'single' keeps one-piece words only, "
        "'iterative' also reconstructs multi-piece words",
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.top_k_cap < 1:
        print("error: --top-k-cap must be >= 1", file=sys.stderr)
        return 1
    try:
        model = MaskedWordModel(args.model, strategy=args.strategy)
    except Exception as exc:
        print(f"error: cannot load model {args.model!r}: {exc}", file=sys.stderr)
        return 1
    app = create_app(model, top_k_cap=args.top_k_cap)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
