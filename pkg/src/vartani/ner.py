"""Rule- and gazetteer-based named entity recognition.

Entities are never flagged as spelling errors, so the recognizer only has
to be precise, not complete. Four categories are produced:

  Temporal  dates DD/MM/YYYY or DD-MM-YYYY with plausible fields, times HH:MM
  Numeral   digit tokens; currency amounts marked with a rupee sign
  Pattern   email addresses, 10-digit phone numbers (optional +91 / 0 prefix)
  Textual   exact gazetteer matches of one to three words

The recognizer is deterministic and pluggable: anything that maps a
Sentence to non-overlapping EntitySpans can stand in for it.
"""

from __future__ import annotations

import os
import re
import unicodedata
from dataclasses import dataclass
from enum import Enum
from importlib import resources

from .script import Sentence, Token, TokenKind

__all__ = [
    "EntityKind",
    "EntitySpan",
    "Gazetteers",
    "load_gazetteers",
    "find_entities",
    "bundled_gazetteer_dir",
]

_D = "[0-9०-९]"  # ASCII or Devanagari digit

_EMAIL_RE = re.compile(
    r"(?<![A-Za-z0-9._%+-])[A-Za-z0-9._%+-]+@(?:[A-Za-z0-9-]+\.)+[A-Za-z]{2,}"
)
_PHONE_RE = re.compile(rf"(?<!{_D})(?:\+91|0)?{_D}{{10}}(?!{_D})")
_DATE_RE = re.compile(rf"(?<!{_D})({_D}{{1,2}})([/-])({_D}{{1,2}})\2({_D}{{4}})(?!{_D})")
_TIME_RE = re.compile(rf"(?<!{_D})({_D}{{1,2}}):({_D}{{2}})(?!{_D})")

_DIGIT_TRANS = str.maketrans({chr(0x0966 + d): str(d) for d in range(10)})

_CURRENCY_MARKERS = frozenset({"₹", "रु"})  # ₹ and the common abbreviation


class EntityKind(Enum):
    TEMPORAL = "temporal"
    NUMERAL = "numeral"
    PATTERN = "pattern"
    TEXTUAL = "textual"


@dataclass(frozen=True)
class EntitySpan:
    """A contiguous, half-open range of token ordinals with one label."""

    token_indices: tuple[int, int]
    kind: EntityKind
    label: str

    def covers(self, token_index: int) -> bool:
        return self.token_indices[0] <= token_index < self.token_indices[1]


class Gazetteers:
    """Named entry lists keyed by label, entries normalized and pre-split."""

    def __init__(self, entries: dict[str, frozenset[tuple[str, ...]]]):
        self._entries = entries

    @property
    def labels(self) -> list[str]:
        return sorted(self._entries)

    def entries(self, label: str) -> frozenset[tuple[str, ...]]:
        return self._entries.get(label, frozenset())

    def size(self, label: str) -> int:
        return len(self._entries.get(label, ()))

    def items(self):
        return self._entries.items()

    @classmethod
    def empty(cls) -> "Gazetteers":
        return cls({})


def load_gazetteers(directory) -> Gazetteers:
    """Load every ``<label>.txt`` in ``directory`` as one gazetteer.

    Entries follow the lexicon file conventions (one per line, '#'
    comments, blank lines ignored) and may span up to three words;
    longer entries are dropped.

    Raises:
        OSError: missing or unreadable directory.
        UnicodeDecodeError: an entry file is not valid UTF-8.
    """
    names = sorted(os.listdir(directory))
    loaded: dict[str, frozenset[tuple[str, ...]]] = {}
    for name in names:
        if not name.endswith(".txt"):
            continue
        label = name[: -len(".txt")]
        path = os.path.join(directory, name)
        with open(path, "rb") as fh:
            text = fh.read().decode("utf-8")
        entries = set()
        for line in text.splitlines():
            entry = line.strip()
            if not entry or entry.startswith("#"):
                continue
            parts = tuple(unicodedata.normalize("NFC", p) for p in entry.split())
            if 1 <= len(parts) <= 3:
                entries.add(parts)
        loaded[label] = frozenset(entries)
    return Gazetteers(loaded)


def bundled_gazetteer_dir() -> str:
    """Filesystem path of the sample gazetteers shipped with the package."""
    return str(resources.files("vartani").joinpath("data/gazetteers"))


def _tokens_overlapping(tokens: tuple[Token, ...], start: int, end: int) -> tuple[int, int] | None:
    """Map a char span (relative to the sentence text) to a token range."""
    first = last = None
    for t in tokens:
        if t.span[0] < end and t.span[1] > start:
            if first is None:
                first = t.index
            last = t.index
    if first is None:
        return None
    return (first, last + 1)


def _plausible_date(m: re.Match) -> bool:
    day = int(m.group(1).translate(_DIGIT_TRANS))
    month = int(m.group(3).translate(_DIGIT_TRANS))
    return 1 <= day <= 31 and 1 <= month <= 12


def _plausible_time(m: re.Match) -> bool:
    hh = int(m.group(1).translate(_DIGIT_TRANS))
    mm = int(m.group(2).translate(_DIGIT_TRANS))
    return hh <= 23 and mm <= 59


def _pattern_candidates(sentence: Sentence) -> list[EntitySpan]:
    text = sentence.text
    base = sentence.source_span[0]
    found: list[EntitySpan] = []

    def add(m: re.Match, kind: EntityKind, label: str) -> None:
        rng = _tokens_overlapping(sentence.tokens, base + m.start(), base + m.end())
        if rng is not None:
            found.append(EntitySpan(rng, kind, label))

    for m in _DATE_RE.finditer(text):
        if _plausible_date(m):
            add(m, EntityKind.TEMPORAL, "date")
    for m in _TIME_RE.finditer(text):
        if _plausible_time(m):
            add(m, EntityKind.TEMPORAL, "time")
    for m in _EMAIL_RE.finditer(text):
        add(m, EntityKind.PATTERN, "email")
    for m in _PHONE_RE.finditer(text):
        add(m, EntityKind.PATTERN, "phone")
    return found


def _numeral_candidates(sentence: Sentence) -> list[EntitySpan]:
    toks = sentence.tokens
    found: list[EntitySpan] = []
    for t in toks:
        if t.kind is not TokenKind.NUMBER:
            continue
        found.append(EntitySpan((t.index, t.index + 1), EntityKind.NUMERAL, "number"))
        # Currency: a marker next to the number, one optional space between.
        for step in (-1, 1):
            j = t.index + step
            if 0 <= j < len(toks) and toks[j].kind is TokenKind.SPACE:
                j += step
            if 0 <= j < len(toks) and toks[j].surface in _CURRENCY_MARKERS:
                lo, hi = min(t.index, j), max(t.index, j)
                found.append(
                    EntitySpan((lo, hi + 1), EntityKind.NUMERAL, "currency")
                )
    return found


def _textual_candidates(sentence: Sentence, gazetteers: Gazetteers) -> list[EntitySpan]:
    # Positions of Word tokens, so multiword entries may skip single spaces.
    word_toks = [t for t in sentence.tokens if t.kind is TokenKind.WORD]
    surfaces = [unicodedata.normalize("NFC", t.surface) for t in word_toks]
    found: list[EntitySpan] = []
    for label, entries in gazetteers.items():
        for entry in entries:
            k = len(entry)
            for i in range(len(surfaces) - k + 1):
                if tuple(surfaces[i : i + k]) != entry:
                    continue
                first = word_toks[i]
                last = word_toks[i + k - 1]
                # Multiword entries must be space-separated, nothing else.
                if k > 1:
                    between = sentence.tokens[first.index + 1 : last.index]
                    if any(
                        t.kind not in (TokenKind.WORD, TokenKind.SPACE)
                        for t in between
                    ):
                        continue
                found.append(
                    EntitySpan((first.index, last.index + 1), EntityKind.TEXTUAL, label)
                )
    return found


def find_entities(sentence: Sentence, gazetteers: Gazetteers | None = None) -> list[EntitySpan]:
    """All entity spans of a sentence, non-overlapping, ordered by position.

    Overlaps are resolved longest-match-wins; equal lengths go to the
    leftmost span, then to a fixed kind order, so the result is
    deterministic for any rule/gazetteer combination.
    """
    gaz = gazetteers or Gazetteers.empty()
    candidates = (
        _pattern_candidates(sentence)
        + _numeral_candidates(sentence)
        + _textual_candidates(sentence, gaz)
    )
    # Tie rank puts specific rules before the generic digit-token rule.
    kind_rank = {
        EntityKind.TEMPORAL: 0,
        EntityKind.PATTERN: 1,
        EntityKind.TEXTUAL: 2,
        EntityKind.NUMERAL: 3,
    }
    candidates.sort(
        key=lambda e: (
            -(e.token_indices[1] - e.token_indices[0]),
            e.token_indices[0],
            kind_rank[e.kind],
            e.label,
        )
    )
    chosen: list[EntitySpan] = []
    for cand in candidates:
        lo, hi = cand.token_indices
        if any(lo < c.token_indices[1] and hi > c.token_indices[0] for c in chosen):
            continue
        chosen.append(cand)
    chosen.sort(key=lambda e: e.token_indices)
    return chosen
