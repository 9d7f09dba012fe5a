"""Command-line front-end.

Subcommands:
  translit   line-by-line WX transliteration (to-wx / from-wx)
  detect     list detected OOV words, one per line
  correct    correct a document, optionally writing an audit JSON
  eval       accuracy-vs-k report over a gold TSV

Configuration comes from a key=value file (--config or $VARTANI_CONFIG)
overridden by flags. Exit codes: 0 success, 1 I/O or configuration
failure, 2 malformed input data, 3 degraded (some errors skipped because
the provider was unreachable).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .detect import detect_errors
from .errors import (
    ConfigError,
    FormatError,
    InvalidTable,
    MalformedWx,
    VartaniError,
)
from .evalharness import evaluate, load_gold, report_json
from .lexicon import bundled_lexicon_path
from .mlm import MlmConfig, RemoteProvider, load_mock_table
from .ner import bundled_gazetteer_dir, find_entities
from .pipeline import SKIP_PROVIDER_ERROR, Pipeline, PipelineConfig
from .script import from_wx, load_wx_table, set_default_table, split_sentences, to_wx

__all__ = ["main"]

EXIT_OK = 0
EXIT_IO = 1
EXIT_MALFORMED = 2
EXIT_DEGRADED = 3

CONFIG_ENV_VAR = "VARTANI_CONFIG"

_CONFIG_KEYS = {
    "lexicon_path",
    "gazetteer_dir",
    "wx_table_path",
    "mlm.endpoint",
    "mlm.top_k",
    "mlm.timeout_ms",
    "emit_audit",
}


@dataclass
class CliConfig:
    lexicon_path: str | None = None
    gazetteer_dir: str | None = None
    wx_table_path: str | None = None
    endpoint: str | None = None
    top_k: int = 10
    timeout_ms: int = 10_000
    emit_audit: bool = False


def _parse_config_file(path: str) -> dict[str, str]:
    values: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{lineno}: expected key = value")
            key, _, value = line.partition("=")
            key = key.strip()
            value = value.strip().strip("\"'")
            if key not in _CONFIG_KEYS:
                raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
            values[key] = value
    return values


def _load_cli_config(args: argparse.Namespace) -> CliConfig:
    cfg = CliConfig()
    path = args.config or os.environ.get(CONFIG_ENV_VAR)
    if path:
        try:
            raw = _parse_config_file(path)
        except OSError as exc:
            raise ConfigError(f"cannot read config {path!r}: {exc}") from None
        cfg.lexicon_path = raw.get("lexicon_path", cfg.lexicon_path)
        cfg.gazetteer_dir = raw.get("gazetteer_dir", cfg.gazetteer_dir)
        cfg.wx_table_path = raw.get("wx_table_path", cfg.wx_table_path)
        cfg.endpoint = raw.get("mlm.endpoint", cfg.endpoint)
        try:
            if "mlm.top_k" in raw:
                cfg.top_k = int(raw["mlm.top_k"])
            if "mlm.timeout_ms" in raw:
                cfg.timeout_ms = int(raw["mlm.timeout_ms"])
        except ValueError as exc:
            raise ConfigError(f"bad integer in config: {exc}") from None
        if "emit_audit" in raw:
            cfg.emit_audit = raw["emit_audit"].lower() in ("1", "true", "yes")
    # Flags win over the file.
    if getattr(args, "lexicon", None):
        cfg.lexicon_path = args.lexicon
    if getattr(args, "gazetteers", None):
        cfg.gazetteer_dir = args.gazetteers
    if getattr(args, "endpoint", None):
        cfg.endpoint = args.endpoint
    if getattr(args, "top_k", None) is not None:
        cfg.top_k = args.top_k
    if getattr(args, "timeout_ms", None) is not None:
        cfg.timeout_ms = args.timeout_ms
    if not 1 <= cfg.top_k <= 100:
        raise ConfigError("top_k must be between 1 and 100")
    if cfg.timeout_ms < 1:
        raise ConfigError("timeout_ms must be >= 1")
    return cfg


def _pipeline_config(cfg: CliConfig, emit_audit: bool = False) -> PipelineConfig:
    return PipelineConfig(
        lexicon_path=cfg.lexicon_path or bundled_lexicon_path(),
        gazetteer_dir=cfg.gazetteer_dir or bundled_gazetteer_dir(),
        mlm=MlmConfig(
            top_k=cfg.top_k,
            endpoint=cfg.endpoint,
            timeout_s=cfg.timeout_ms / 1000.0,
        ),
        emit_audit=emit_audit or cfg.emit_audit,
    )


def _provider(args: argparse.Namespace, cfg: CliConfig):
    if getattr(args, "mock_table", None):
        return load_mock_table(args.mock_table)
    if cfg.endpoint:
        return RemoteProvider(
            MlmConfig(top_k=cfg.top_k, endpoint=cfg.endpoint, timeout_s=cfg.timeout_ms / 1000.0)
        )
    raise ConfigError("no provider: pass --mock-table or configure mlm.endpoint")


def _read_input(args: argparse.Namespace) -> str:
    if getattr(args, "input", None) and args.input != "-":
        with open(args.input, "rb") as fh:
            return fh.read().decode("utf-8")
    return sys.stdin.read()


def _install_wx_table(cfg: CliConfig) -> None:
    if cfg.wx_table_path:
        try:
            set_default_table(load_wx_table(cfg.wx_table_path))
        except ValueError as exc:
            raise ConfigError(f"wx table {cfg.wx_table_path!r}: {exc}") from None


def _cmd_translit(args: argparse.Namespace) -> int:
    cfg = _load_cli_config(args)
    _install_wx_table(cfg)
    text = _read_input(args)
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    out: list[str] = []
    for lineno, line in enumerate(lines, start=1):
        if args.direction == "to-wx":
            out.append(str(to_wx(line)))
        else:
            try:
                out.append(from_wx(line))
            except MalformedWx as exc:
                print(f"line {lineno}: {exc}", file=sys.stderr)
                return EXIT_MALFORMED
    for line in out:
        print(line)
    return EXIT_OK


def _cmd_detect(args: argparse.Namespace) -> int:
    cfg = _load_cli_config(args)
    _install_wx_table(cfg)
    pipeline = Pipeline(_pipeline_config(cfg))
    text = _read_input(args)
    for si, sentence in enumerate(split_sentences(text)):
        entities = find_entities(sentence, pipeline.gazetteers)
        for err in detect_errors(sentence, pipeline.lexicon, entities):
            print(f"{si}\t{err.token_index}\t{err.surface}")
    return EXIT_OK


def _cmd_correct(args: argparse.Namespace) -> int:
    cfg = _load_cli_config(args)
    _install_wx_table(cfg)
    provider = _provider(args, cfg)
    pipeline = Pipeline(_pipeline_config(cfg, emit_audit=bool(args.audit)))
    text = _read_input(args)
    doc = pipeline.correct(text, provider)
    sys.stdout.write(doc.text)
    sys.stdout.flush()
    if args.audit:
        with open(args.audit, "w", encoding="utf-8") as fh:
            json.dump(doc.audit, fh, ensure_ascii=False, indent=2)
            fh.write("\n")
    if any(sk.reason == SKIP_PROVIDER_ERROR for sk in doc.skipped):
        print(f"{len(doc.skipped)} error(s) skipped: provider unreachable", file=sys.stderr)
        return EXIT_DEGRADED
    return EXIT_OK


def _format_percent(value: float | None) -> str:
    return "-" if value is None else f"{100.0 * value:.2f}"


def _cmd_eval(args: argparse.Namespace) -> int:
    cfg = _load_cli_config(args)
    _install_wx_table(cfg)
    provider = _provider(args, cfg)
    try:
        ks = [int(k) for k in args.ks.split(",") if k.strip()]
    except ValueError:
        raise ConfigError(f"bad --ks value {args.ks!r}") from None
    if not ks or any(k < 1 for k in ks):
        raise ConfigError("--ks needs positive integers")
    corpus = load_gold(args.gold)
    report = evaluate(corpus, _pipeline_config(cfg), provider, ks)
    if args.json:
        print(json.dumps(report_json(report), ensure_ascii=False, indent=2))
        return EXIT_OK
    if not len(corpus):
        print("warning: gold corpus is empty", file=sys.stderr)
    print("S.No.\tCandidates\tAccuracy %")
    for i, row in enumerate(report.rows, start=1):
        print(f"{i}\t{row.k}\t{_format_percent(row.accuracy)}")
    print()
    print("k\tdetected\tcorrected\twrong\tskipped\tsentence acc %")
    for row in report.rows:
        print(
            f"{row.k}\t{row.detected}\t{row.corrected}\t{row.wrong}\t"
            f"{row.skipped}\t{_format_percent(row.sentence_accuracy)}"
        )
    if report.warnings:
        print(f"{report.warnings} misaligned pair(s) skipped", file=sys.stderr)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vartani",
        description="Context-sensitive spelling correction for OCR-generated Hindi text.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, provider_flags: bool = True) -> None:
        p.add_argument("--config", help=f"key=value config file (or ${CONFIG_ENV_VAR})")
        p.add_argument("--lexicon", help="wordlist path (default: bundled sample)")
        p.add_argument("--gazetteers", help="gazetteer directory (default: bundled)")
        if provider_flags:
            p.add_argument("--mock-table", help="JSON mock-provider table for offline runs")
            p.add_argument("--endpoint", help="remote MLM endpoint, e.g. http://host:8000")
            p.add_argument("--top-k", type=int, dest="top_k", help="candidate list size")
            p.add_argument("--timeout-ms", type=int, dest="timeout_ms", help="request timeout")

    p_translit = sub.add_parser("translit", help="WX transliteration, line by line")
    p_translit.add_argument("direction", choices=["to-wx", "from-wx"])
    p_translit.add_argument("--input", help="input file (default: stdin)")
    common(p_translit, provider_flags=False)
    p_translit.set_defaults(func=_cmd_translit)

    p_detect = sub.add_parser("detect", help="list detected OOV words")
    p_detect.add_argument("--input", help="input file (default: stdin)")
    common(p_detect, provider_flags=False)
    p_detect.set_defaults(func=_cmd_detect)

    p_correct = sub.add_parser("correct", help="correct a document")
    p_correct.add_argument("--input", help="input file (default: stdin)")
    p_correct.add_argument("--audit", help="write the audit trail JSON here")
    common(p_correct)
    p_correct.set_defaults(func=_cmd_correct)

    p_eval = sub.add_parser("eval", help="accuracy-vs-k report over a gold TSV")
    p_eval.add_argument("gold", help="gold corpus TSV (noisy<TAB>gold)")
    p_eval.add_argument("--ks", default="1,3,5,10,20", help="comma-separated k values")
    p_eval.add_argument("--json", action="store_true", help="emit a JSON report")
    common(p_eval)
    p_eval.set_defaults(func=_cmd_eval)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, InvalidTable) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except (ConfigError, OSError, UnicodeDecodeError, VartaniError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    raise SystemExit(main())
