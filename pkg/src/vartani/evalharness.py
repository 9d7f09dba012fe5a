"""Evaluation harness: accuracy as a function of candidate-list size.

The gold corpus is a UTF-8 TSV with two columns, ``noisy<TAB>gold``, one
sentence pair per line, '#' comments. Pairs are positionally aligned, so
both sides must tokenize to the same number of words; violating lines are
skipped and counted as warnings.

A detected error counts as correct when the word finally standing at its
position equals the aligned gold word (NFC exact match). That makes a
false-positive detection (noisy word already equal to gold) correct
precisely when it was left unchanged. Accuracy is reported per error and,
separately, per sentence (every detected error in the sentence correct).
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass

from .errors import FormatError
from .mlm import CandidateProvider
from .pipeline import Pipeline, PipelineConfig
from .script import Sentence, TokenKind, split_sentences

__all__ = [
    "GoldPair",
    "GoldCorpus",
    "EvalRow",
    "EvalReport",
    "load_gold",
    "evaluate",
    "report_json",
]


@dataclass(frozen=True)
class GoldPair:
    noisy: str
    gold: str


@dataclass(frozen=True)
class GoldCorpus:
    """Loaded pairs plus the count of misaligned lines that were skipped."""

    pairs: tuple[GoldPair, ...]
    warnings: int

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)


@dataclass(frozen=True)
class EvalRow:
    """Per-k counters; corrected + wrong + skipped == detected."""

    k: int
    detected: int
    corrected: int
    wrong: int
    skipped: int
    correct: int
    sentences: int
    sentences_correct: int

    @property
    def accuracy(self) -> float | None:
        return self.correct / self.detected if self.detected else None

    @property
    def sentence_accuracy(self) -> float | None:
        return self.sentences_correct / self.sentences if self.sentences else None


@dataclass(frozen=True)
class EvalReport:
    ks: tuple[int, ...]
    rows: tuple[EvalRow, ...]
    warnings: int

    @property
    def per_k(self) -> dict[int, float | None]:
        return {row.k: row.accuracy for row in self.rows}

    @property
    def detected(self) -> int:
        return self.rows[0].detected if self.rows else 0


def _word_surfaces(text: str) -> list[str]:
    return [t.surface for t in Sentence.from_text(text).words]


def load_gold(path) -> GoldCorpus:
    """Read a gold TSV; misaligned pairs are dropped with a warning count.

    Raises:
        OSError: missing or unreadable file.
        UnicodeDecodeError: not valid UTF-8.
        FormatError: a line does not have exactly two columns (carries the
            1-based line number).
    """
    with open(path, "rb") as fh:
        text = fh.read().decode("utf-8")
    pairs: list[GoldPair] = []
    warnings = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) != 2:
            raise FormatError(f"expected 2 tab-separated columns, got {len(cols)}", lineno)
        noisy, gold = cols[0].strip(), cols[1].strip()
        if not noisy or not gold:
            raise FormatError("empty column", lineno)
        if len(_word_surfaces(noisy)) != len(_word_surfaces(gold)):
            warnings += 1
            continue
        pairs.append(GoldPair(noisy=noisy, gold=gold))
    return GoldCorpus(pairs=tuple(pairs), warnings=warnings)


def _nfc(s: str) -> str:
    return unicodedata.normalize("NFC", s)


def _sentence_word_offsets(text: str) -> list[int]:
    """Word index of each sentence's first word within the whole text."""
    offsets = []
    total = 0
    for sent in split_sentences(text):
        offsets.append(total)
        total += sum(1 for t in sent.tokens if t.kind is TokenKind.WORD)
    return offsets


def evaluate(
    pairs,
    cfg: PipelineConfig,
    provider: CandidateProvider,
    ks,
    warnings: int = 0,
) -> EvalReport:
    """Run the pipeline over every pair at each k and count outcomes.

    ``pairs`` is any iterable of GoldPair (a GoldCorpus contributes its own
    warning count). Detection does not depend on k, so ``detected`` is
    constant across rows.
    """
    ks = tuple(ks)
    if not ks or any(k < 1 for k in ks):
        raise ValueError("ks must be a non-empty list of positive integers")
    if isinstance(pairs, GoldCorpus):
        warnings += pairs.warnings
        pairs = pairs.pairs
    aligned = []
    for pair in pairs:
        if len(_word_surfaces(pair.noisy)) == len(_word_surfaces(pair.gold)):
            aligned.append(pair)
        else:
            warnings += 1
    pairs = tuple(aligned)
    pipeline = Pipeline(cfg)

    rows: list[EvalRow] = []
    for k in ks:
        detected = corrected = wrong = skipped = correct = 0
        sentences = sentences_correct = 0
        for pair in pairs:
            gold_words = [_nfc(w) for w in _word_surfaces(pair.gold)]
            noisy_words = [_nfc(w) for w in _word_surfaces(pair.noisy)]
            offsets = _sentence_word_offsets(pair.noisy)
            doc = pipeline.correct(pair.noisy, provider, top_k=k)
            n_err = len(doc.corrections) + len(doc.skipped)
            if n_err == 0:
                continue
            detected += n_err
            sentences += 1
            all_ok = True
            for ac in doc.corrections:
                idx = offsets[ac.sentence] + ac.error.token_index
                if _nfc(ac.correction.chosen.word) == gold_words[idx]:
                    corrected += 1
                    correct += 1
                else:
                    wrong += 1
                    all_ok = False
            for sk in doc.skipped:
                skipped += 1
                idx = offsets[sk.sentence] + sk.error.token_index
                if noisy_words[idx] == gold_words[idx]:
                    correct += 1
                else:
                    all_ok = False
            if all_ok:
                sentences_correct += 1
        rows.append(
            EvalRow(
                k=k,
                detected=detected,
                corrected=corrected,
                wrong=wrong,
                skipped=skipped,
                correct=correct,
                sentences=sentences,
                sentences_correct=sentences_correct,
            )
        )
    return EvalReport(ks=ks, rows=tuple(rows), warnings=warnings)


def report_json(report: EvalReport) -> dict:
    """JSON document for the report.

    ``accuracy`` aligns with ``ks``; the scalar totals come from the
    largest evaluated k, with the full per-k detail under ``per_k``.
    """
    by_largest = max(report.rows, key=lambda r: r.k) if report.rows else None
    return {
        "ks": list(report.ks),
        "accuracy": [r.accuracy for r in report.rows],
        "sentence_accuracy": [r.sentence_accuracy for r in report.rows],
        "detected": report.detected,
        "corrected": by_largest.corrected if by_largest else 0,
        "skipped": by_largest.skipped if by_largest else 0,
        "warnings": report.warnings,
        "per_k": [
            {
                "k": r.k,
                "accuracy": r.accuracy,
                "sentence_accuracy": r.sentence_accuracy,
                "corrected": r.corrected,
                "wrong": r.wrong,
                "skipped": r.skipped,
            }
            for r in report.rows
        ],
    }
