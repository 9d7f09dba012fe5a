"""Devanagari text model: sentence splitting, tokenization, WX transliteration.

Tokenization partitions text into Word / Space / Punct / Number tokens so
that concatenating the token surfaces reproduces the input exactly. The WX
transliteration maps Devanagari to printable ASCII and back; the mapping
lives in a versioned data file (``data/wx_table.tsv``) so the scheme is
reproducible without a network dependency.

Round-trip guarantee: ``from_wx(to_wx(s)) == s`` for any all-Devanagari,
NFC-normalized string built from table-covered codepoints. Non-Devanagari
input passes through ``to_wx`` unchanged, which keeps edit distances over
mixed-script OCR output meaningful.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from typing import NewType

from .errors import MalformedWx

__all__ = [
    "Token",
    "TokenKind",
    "Sentence",
    "WxString",
    "WxTable",
    "tokenize",
    "split_sentences",
    "to_wx",
    "from_wx",
    "load_wx_table",
    "set_default_table",
]

#: ASCII transliteration of a Devanagari string under the WX scheme.
WxString = NewType("WxString", str)

ZWNJ = "‌"
ZWJ = "‍"
DANDA = "।"
DOUBLE_DANDA = "॥"

_DEVANAGARI_DIGITS = frozenset(chr(c) for c in range(0x0966, 0x0970))
_SENTENCE_TERMINATORS = frozenset({DANDA, DOUBLE_DANDA, ".", "?", "!"})
_WESTERN_TERMINATORS = frozenset({".", "?", "!"})


class TokenKind(Enum):
    WORD = "word"
    SPACE = "space"
    PUNCT = "punct"
    NUMBER = "number"


@dataclass(frozen=True)
class Token:
    """A classified span of source text.

    ``span`` is a half-open codepoint interval into the text that was
    tokenized; ``index`` is the token's ordinal within its sentence.
    """

    surface: str
    kind: TokenKind
    span: tuple[int, int]
    index: int


@dataclass(frozen=True)
class Sentence:
    """An ordered token cover of one sentence of the source document."""

    tokens: tuple[Token, ...]
    source_span: tuple[int, int]

    @classmethod
    def from_text(cls, text: str) -> "Sentence":
        """Tokenize ``text`` as a single sentence (spans relative to it)."""
        return cls(tokens=tuple(tokenize(text)), source_span=(0, len(text)))

    @property
    def text(self) -> str:
        return "".join(t.surface for t in self.tokens)

    @property
    def words(self) -> tuple[Token, ...]:
        """The Word tokens only, in order (the x_i the predictor sees)."""
        return tuple(t for t in self.tokens if t.kind is TokenKind.WORD)


def _is_devanagari(ch: str) -> bool:
    return "ऀ" <= ch <= "ॿ"


def _is_word_char(ch: str) -> bool:
    if not _is_devanagari(ch):
        return False
    if ch in (DANDA, DOUBLE_DANDA) or ch in _DEVANAGARI_DIGITS:
        return False
    return True


def _is_digit_char(ch: str) -> bool:
    return ("0" <= ch <= "9") or ch in _DEVANAGARI_DIGITS


def _is_combining(ch: str) -> bool:
    return unicodedata.category(ch) in ("Mn", "Mc")


def tokenize(sentence_text: str) -> list[Token]:
    """Partition ``sentence_text`` into maximal same-kind runs.

    Word runs accept any Devanagari codepoint except danda and digits, plus
    ZWJ/ZWNJ when they follow a word character. A combining sign with no
    base to attach to cannot start a Word run and falls into a Punct token.
    Spans are relative to ``sentence_text``.
    """
    tokens: list[Token] = []
    n = len(sentence_text)
    i = 0
    while i < n:
        ch = sentence_text[i]
        start = i
        if ch.isspace():
            while i < n and sentence_text[i].isspace():
                i += 1
            kind = TokenKind.SPACE
        elif _is_digit_char(ch):
            while i < n and _is_digit_char(sentence_text[i]):
                i += 1
            kind = TokenKind.NUMBER
        elif _is_word_char(ch) and not _is_combining(ch):
            i += 1
            while i < n and (
                _is_word_char(sentence_text[i]) or sentence_text[i] in (ZWJ, ZWNJ)
            ):
                i += 1
            kind = TokenKind.WORD
        else:
            # Punct: anything else, including orphan combining signs and
            # joiners with no preceding word character.
            i += 1
            while i < n:
                nxt = sentence_text[i]
                if nxt.isspace() or _is_digit_char(nxt):
                    break
                if _is_word_char(nxt) and not _is_combining(nxt):
                    break
                i += 1
            kind = TokenKind.PUNCT
        tokens.append(
            Token(
                surface=sentence_text[start:i],
                kind=kind,
                span=(start, i),
                index=len(tokens),
            )
        )
    return tokens


def split_sentences(text: str) -> list[Sentence]:
    """Split ``text`` into tokenized sentences.

    A boundary falls after a danda or double danda, or after '.', '?', '!'
    when followed by whitespace or end of text. Runs of terminators stay
    together and trailing whitespace attaches to the preceding sentence, so
    concatenating the sentence sources reproduces the input exactly.
    """
    if not text:
        return []
    boundaries: list[int] = []
    n = len(text)
    i = 0
    while i < n:
        ch = text[i]
        if ch not in _SENTENCE_TERMINATORS:
            i += 1
            continue
        # Consume the whole terminator run, then decide.
        j = i
        while j < n and text[j] in _SENTENCE_TERMINATORS:
            j += 1
        run = text[i:j]
        ends = any(c in (DANDA, DOUBLE_DANDA) for c in run) or (
            j >= n or text[j].isspace()
        )
        if ends:
            while j < n and text[j].isspace():
                j += 1
            boundaries.append(j)
        i = j

    if not boundaries or boundaries[-1] != n:
        boundaries.append(n)

    sentences: list[Sentence] = []
    start = 0
    for end in boundaries:
        if end <= start:
            continue
        chunk = text[start:end]
        toks = tuple(
            Token(t.surface, t.kind, (t.span[0] + start, t.span[1] + start), t.index)
            for t in tokenize(chunk)
        )
        sentences.append(Sentence(tokens=toks, source_span=(start, end)))
        start = end
    return sentences


# --------------------------------------------------------------------------
# WX transliteration
# --------------------------------------------------------------------------

_MATRA_RANGE = frozenset(
    [*range(0x093A, 0x093C), *range(0x093E, 0x094D), 0x0955, 0x0956, 0x0957,
     0x0962, 0x0963]
)
_IND_VOWEL_RANGE = frozenset([*range(0x0904, 0x0915), 0x0960, 0x0961, 0x0972])
_CONSONANT_RANGE = frozenset(
    [*range(0x0915, 0x093A), *range(0x0958, 0x0960), *range(0x0978, 0x0980)]
)
_SIGN_RANGE = frozenset(range(0x0900, 0x0904))
_NUKTA = "़"
_HALANT = "्"


@dataclass(frozen=True)
class WxTable:
    """Loaded transliteration scheme, split by the role of each codepoint."""

    consonants: dict[str, str]
    ind_vowels: dict[str, str]
    matras: dict[str, str]
    signs: dict[str, str]
    digits: dict[str, str]
    standalone: dict[str, str]
    # Reverse maps, NFC-canonical rows only.
    rev_consonants: dict[str, str] = field(repr=False, default_factory=dict)
    rev_ind_vowels: dict[str, str] = field(repr=False, default_factory=dict)
    rev_matras: dict[str, str] = field(repr=False, default_factory=dict)
    rev_signs: dict[str, str] = field(repr=False, default_factory=dict)
    rev_digits: dict[str, str] = field(repr=False, default_factory=dict)
    rev_standalone: dict[str, str] = field(repr=False, default_factory=dict)


def _classify_row(deva: str) -> str:
    cp = ord(deva[0])
    if len(deva) == 1:
        if cp in _CONSONANT_RANGE:
            return "consonant"
        if cp in _IND_VOWEL_RANGE:
            return "ind_vowel"
        if cp in _MATRA_RANGE:
            return "matra"
        if cp in _SIGN_RANGE or deva == _NUKTA:
            return "sign"
        if 0x0966 <= cp <= 0x096F:
            return "digit"
    return "standalone"


def load_wx_table(path=None) -> WxTable:
    """Parse a WX table file (default: the bundled ``wx_table.tsv``)."""
    if path is None:
        src = resources.files("vartani").joinpath("data/wx_table.tsv")
        content = src.read_text(encoding="utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            content = fh.read()

    buckets: dict[str, dict[str, str]] = {
        "consonant": {}, "ind_vowel": {}, "matra": {},
        "sign": {}, "digit": {}, "standalone": {},
    }
    rev: dict[str, dict[str, str]] = {k: {} for k in buckets}
    for lineno, raw in enumerate(content.splitlines(), start=1):
        line = raw.strip("\n\r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2 or not parts[0] or not parts[1]:
            raise ValueError(f"wx table line {lineno}: expected two tab-separated fields")
        deva, wx = parts
        role = _classify_row(deva)
        buckets[role][deva] = wx
        # Reverse direction keeps only canonical rows: a precomposed nukta
        # consonant decomposes under NFC and must invert to its NFC form.
        if unicodedata.normalize("NFC", deva) == deva and wx not in rev[role]:
            rev[role][wx] = deva

    return WxTable(
        consonants=buckets["consonant"],
        ind_vowels=buckets["ind_vowel"],
        matras=buckets["matra"],
        signs=buckets["sign"],
        digits=buckets["digit"],
        standalone=buckets["standalone"],
        rev_consonants=rev["consonant"],
        rev_ind_vowels=rev["ind_vowel"],
        rev_matras=rev["matra"],
        rev_signs=rev["sign"],
        rev_digits=rev["digit"],
        rev_standalone=rev["standalone"],
    )


_active_table: WxTable | None = None


def _default_table() -> WxTable:
    global _active_table
    if _active_table is None:
        _active_table = load_wx_table()
    return _active_table


def set_default_table(table: WxTable) -> None:
    """Replace the process-wide transliteration scheme (config override)."""
    global _active_table
    _active_table = table


def to_wx(s: str, table: WxTable | None = None) -> WxString:
    """Transliterate Devanagari to WX ASCII.

    A consonant with no following matra or halant carries the inherent
    vowel, emitted as an explicit 'a'; the halant suppresses it and produces
    no output character of its own. Codepoints outside the table pass
    through unchanged.
    """
    t = table or _default_table()
    out: list[str] = []
    pending_a = False

    def flush() -> None:
        nonlocal pending_a
        if pending_a:
            out.append("a")
            pending_a = False

    for ch in s:
        if ch in t.consonants:
            flush()
            out.append(t.consonants[ch])
            pending_a = True
        elif ch in t.matras:
            out.append(t.matras[ch])
            pending_a = False
        elif ch == _HALANT:
            pending_a = False
        elif ch == _NUKTA:
            out.append(t.signs[ch])
        elif ch in t.signs:
            flush()
            out.append(t.signs[ch])
        elif ch in t.ind_vowels:
            flush()
            out.append(t.ind_vowels[ch])
        elif ch in t.digits:
            flush()
            out.append(t.digits[ch])
        elif ch in t.standalone:
            flush()
            out.append(t.standalone[ch])
        else:
            flush()
            out.append(ch)
    flush()
    return WxString("".join(out))


def _match_code(codes: dict[str, str], w: str, i: int) -> str | None:
    """Longest-match lookup of a WX code (up to 3 chars) starting at w[i]."""
    for width in (3, 2, 1):
        piece = w[i : i + width]
        if len(piece) == width and piece in codes:
            return piece
    return None


def from_wx(w: str, table: WxTable | None = None) -> str:
    """Invert :func:`to_wx`.

    Raises:
        MalformedWx: on a sequence outside the WX grammar (a bare modifier
            'V', or a nukta 'Z' with no consonant to attach to).
    """
    t = table or _default_table()
    out: list[str] = []
    n = len(w)
    i = 0
    while i < n:
        ch = w[i]
        if ch.isascii() and ch.isalpha():
            code = _match_code(t.rev_consonants, w, i)
            if code is not None:
                out.append(t.rev_consonants[code])
                i += len(code)
                # Optional nukta, then the vowel slot.
                if i < n and w[i] == "Z":
                    out.append(t.rev_signs["Z"])
                    i += 1
                if i < n and w[i] == "a":
                    i += 1  # inherent vowel, no matra character
                else:
                    vowel = _match_code(t.rev_matras, w, i) if i < n else None
                    if vowel is not None:
                        out.append(t.rev_matras[vowel])
                        i += len(vowel)
                    else:
                        out.append(_HALANT)
                continue
            vowel = _match_code(t.rev_ind_vowels, w, i)
            if vowel is not None:
                out.append(t.rev_ind_vowels[vowel])
                i += len(vowel)
                continue
            if ch in t.rev_signs and ch != "Z":
                # A nukta is only valid attached to a consonant.
                out.append(t.rev_signs[ch])
                i += 1
                continue
            if ch in t.rev_standalone:
                out.append(t.rev_standalone[ch])
                i += 1
                continue
            raise MalformedWx(f"invalid WX sequence {w[i:i+2]!r}", i)
        if ch == "|":
            if w[i : i + 2] == "||":
                out.append(t.rev_standalone["||"])
                i += 2
            else:
                out.append(t.rev_standalone["|"])
                i += 1
            continue
        if ch in t.rev_standalone:
            out.append(t.rev_standalone[ch])
            i += 1
            continue
        if ch in t.rev_digits:
            out.append(t.rev_digits[ch])
            i += 1
            continue
        # Pass-through: whitespace, punctuation, anything non-ASCII.
        out.append(ch)
        i += 1
    return "".join(out)
