"""Candidate selection: edit distance over WX strings, probability tie-break.

The distance kernel is compiled (vartani._editdist, built from Cython) when
the extension is available and falls back to the pure-Python twin
otherwise; both implement the same unit-cost recursion. The winner among
candidates is the one with minimum distance to the flagged word's
transliteration; equal distances go to the higher model probability, and a
full tie keeps the provider's ordering.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NoCandidates
from .mlm import Candidate, CandidateList
from .script import WxString, to_wx

try:
    from ._editdist import levenshtein as _levenshtein

    EDITDIST_BACKEND = "compiled"
except ImportError:  # extension not built; same function, pure Python
    from ._editdist_py import levenshtein as _levenshtein

    EDITDIST_BACKEND = "python"

__all__ = [
    "EDITDIST_BACKEND",
    "Correction",
    "edit_distance",
    "select_correction",
]


def edit_distance(a: WxString, b: WxString) -> int:
    """Unit-cost Levenshtein distance between two WX strings.

    Symmetric, zero iff equal; O(len(a) * len(b)) time and
    O(min(len(a), len(b))) space.
    """
    return _levenshtein(a, b)


@dataclass(frozen=True)
class Correction:
    """The selected replacement plus the full ranking for auditing."""

    original: str
    chosen: Candidate
    med: int
    ranked: tuple[tuple[Candidate, int], ...]
    tie_broken_by_probability: bool


def select_correction(oov: str, candidates: CandidateList) -> Correction:
    """Pick the replacement for ``oov`` from a candidate list.

    Distances are computed between WX transliterations. The minimum wins;
    among equal minima the highest probability wins, and a remaining tie
    keeps the earliest provider position. ``tie_broken_by_probability`` is
    True when distance alone was not decisive.

    Raises:
        NoCandidates: the list is empty (callers leave the word unchanged).
    """
    if not candidates.candidates:
        raise NoCandidates(f"no candidates for {oov!r}")
    target = to_wx(oov)
    ranked: list[tuple[Candidate, int]] = [
        (cand, edit_distance(to_wx(cand.word), target))
        for cand in candidates.candidates
    ]
    best_cand, best_med = ranked[0]
    for cand, med in ranked[1:]:
        if med < best_med or (med == best_med and cand.probability > best_cand.probability):
            best_cand, best_med = cand, med
    min_med_count = sum(1 for _, med in ranked if med == best_med)
    return Correction(
        original=oov,
        chosen=best_cand,
        med=best_med,
        ranked=tuple(ranked),
        tie_broken_by_probability=min_med_count > 1,
    )
