"""Lookup dictionary of valid Hindi words.

A lexicon file is UTF-8 text with one word per line; '#' starts a comment
line and blank lines are ignored. Entries are NFC-normalized at load and
queries are normalized the same way, so composed and decomposed spellings
of the same word are indistinguishable.
"""

from __future__ import annotations

import hashlib
import unicodedata
from dataclasses import dataclass
from importlib import resources

__all__ = ["Lexicon", "load_lexicon", "bundled_lexicon_path"]


@dataclass(frozen=True)
class Lexicon:
    """Immutable membership set over NFC-normalized words."""

    words: frozenset[str]
    source_digest: str = ""

    @property
    def size(self) -> int:
        return len(self.words)

    def __contains__(self, word: str) -> bool:
        return self.contains(word)

    def contains(self, word: str) -> bool:
        """Exact membership after NFC normalization; '' is never a member."""
        if not word:
            return False
        return unicodedata.normalize("NFC", word) in self.words

    def __len__(self) -> int:
        return self.size


def load_lexicon(path) -> Lexicon:
    """Load a wordlist file into a :class:`Lexicon`.

    Raises:
        OSError: the file is missing or unreadable.
        UnicodeDecodeError: the file is not valid UTF-8 (carries the byte
            offset of the first bad byte).
    """
    with open(path, "rb") as fh:
        raw = fh.read()
    text = raw.decode("utf-8")
    words = set()
    for line in text.splitlines():
        entry = line.strip()
        if not entry or entry.startswith("#"):
            continue
        words.add(unicodedata.normalize("NFC", entry))
    digest = hashlib.sha256(raw).hexdigest()
    return Lexicon(words=frozenset(words), source_digest=digest)


def bundled_lexicon_path() -> str:
    """Filesystem path of the sample lexicon shipped with the package."""
    return str(resources.files("vartani").joinpath("data/sample_lexicon.txt"))
