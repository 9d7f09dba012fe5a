"""End-to-end correction pipeline.

Per sentence: tokenize, recognize entities, detect errors, mask all of them
at once, query the provider per mask, select each replacement, then splice
the chosen words back at the original spans. Text outside corrected spans
is preserved byte for byte. A provider failure or an empty candidate list
skips that one error and never aborts the document.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field, replace

from .correct import Correction, select_correction
from .detect import DetectedError, detect_errors, mask
from .errors import ConfigError, NoCandidates, ProviderError
from .lexicon import Lexicon, load_lexicon
from .mlm import CandidateProvider, MlmConfig
from .ner import Gazetteers, find_entities, load_gazetteers
from .script import split_sentences, to_wx

__all__ = [
    "PipelineConfig",
    "AppliedCorrection",
    "SkippedError",
    "CorrectedDocument",
    "Pipeline",
    "correct_document",
    "build_audit",
]

SKIP_NO_CANDIDATES = "no_candidates"
SKIP_PROVIDER_ERROR = "provider_error"


@dataclass(frozen=True)
class PipelineConfig:
    lexicon_path: str
    gazetteer_dir: str | None = None
    mlm: MlmConfig = field(default_factory=MlmConfig)
    emit_audit: bool = False


@dataclass(frozen=True)
class AppliedCorrection:
    """One replacement, tied to its sentence and source location."""

    sentence: int
    error: DetectedError
    correction: Correction


@dataclass(frozen=True)
class SkippedError:
    """A detected error left unchanged, with the reason."""

    sentence: int
    error: DetectedError
    reason: str


@dataclass(frozen=True)
class CorrectedDocument:
    text: str
    corrections: tuple[AppliedCorrection, ...]
    skipped: tuple[SkippedError, ...]
    audit: dict | None = None


class Pipeline:
    """Loaded resources plus the correction loop.

    Loading happens once at construction; all held state (lexicon,
    gazetteers, transliteration table) is read-only afterwards, so one
    Pipeline may serve any number of concurrent callers.
    """

    def __init__(self, cfg: PipelineConfig):
        self.cfg = cfg
        try:
            self.lexicon: Lexicon = load_lexicon(cfg.lexicon_path)
        except (OSError, UnicodeDecodeError) as exc:
            raise ConfigError(f"lexicon {cfg.lexicon_path!r}: {exc}") from None
        if cfg.gazetteer_dir is None:
            self.gazetteers = Gazetteers.empty()
        else:
            try:
                self.gazetteers = load_gazetteers(cfg.gazetteer_dir)
            except (OSError, UnicodeDecodeError) as exc:
                raise ConfigError(f"gazetteers {cfg.gazetteer_dir!r}: {exc}") from None

    def correct(
        self, text: str, provider: CandidateProvider, top_k: int | None = None
    ) -> CorrectedDocument:
        k = top_k if top_k is not None else self.cfg.mlm.top_k
        applied: list[AppliedCorrection] = []
        skipped: list[SkippedError] = []
        pieces: list[tuple[tuple[int, int], str]] = []

        for si, sentence in enumerate(split_sentences(text)):
            entities = find_entities(sentence, self.gazetteers)
            errors = detect_errors(sentence, self.lexicon, entities)
            if not errors:
                continue
            masked = mask(sentence, errors)
            for err in errors:
                try:
                    cands = provider.predict(masked, err.token_index, k)
                    correction = select_correction(err.surface, cands)
                except ProviderError:
                    skipped.append(SkippedError(si, err, SKIP_PROVIDER_ERROR))
                    continue
                except NoCandidates:
                    skipped.append(SkippedError(si, err, SKIP_NO_CANDIDATES))
                    continue
                applied.append(AppliedCorrection(si, err, correction))
                pieces.append((err.span, correction.chosen.word))

        out_text = _splice(text, pieces)
        doc = CorrectedDocument(
            text=out_text,
            corrections=tuple(applied),
            skipped=tuple(skipped),
        )
        if self.cfg.emit_audit:
            doc = replace(doc, audit=build_audit(doc, text))
        return doc


def _splice(text: str, pieces: list[tuple[tuple[int, int], str]]) -> str:
    if not pieces:
        return text
    out: list[str] = []
    pos = 0
    for (start, end), replacement in sorted(pieces):
        out.append(text[pos:start])
        out.append(replacement)
        pos = end
    out.append(text[pos:])
    return "".join(out)


def correct_document(
    text: str, cfg: PipelineConfig, provider: CandidateProvider
) -> CorrectedDocument:
    """One-shot convenience wrapper around :class:`Pipeline`.

    Raises:
        ConfigError: the configured lexicon or gazetteer paths are unusable.
    """
    return Pipeline(cfg).correct(text, provider)


def build_audit(doc: CorrectedDocument, source_text: str) -> dict:
    """Audit trail for one document, JSON-serializable."""
    return {
        "source_digest": hashlib.sha256(source_text.encode("utf-8")).hexdigest(),
        "corrections": [
            {
                "sentence": ac.sentence,
                "index": ac.error.token_index,
                "original": ac.error.surface,
                "chosen": ac.correction.chosen.word,
                "prob": ac.correction.chosen.probability,
                "med": ac.correction.med,
                "candidates": [
                    {
                        "token": cand.word,
                        "prob": cand.probability,
                        "wx": str(to_wx(cand.word)),
                        "med": med,
                    }
                    for cand, med in ac.correction.ranked
                ],
            }
            for ac in doc.corrections
        ],
        "skipped": [
            {
                "sentence": sk.sentence,
                "index": sk.error.token_index,
                "original": sk.error.surface,
                "reason": sk.reason,
            }
            for sk in doc.skipped
        ],
    }
