"""Error detection: flag out-of-vocabulary words and mask them.

A token is flagged when all four criteria hold: it is not a space, not
punctuation, not a lexicon member, and not covered by any entity span.
Flagged words are collected, in order, into the error vector, and masking
replaces each one with the literal "[MASK]" in the sentence's word-level
token sequence.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lexicon import Lexicon
from .ner import EntitySpan
from .script import Sentence, TokenKind

__all__ = ["MASK_TOKEN", "DetectedError", "MaskedSentence", "detect_errors", "mask"]

#: The mask literal is part of the wire protocol; exactly these five
#: characters in brackets.
MASK_TOKEN = "[MASK]"


@dataclass(frozen=True)
class DetectedError:
    """One flagged OOV word.

    ``token_index`` is the ordinal of the word within the sentence's
    word-token sequence (the mask position the predictor receives), not the
    ordinal among all tokens. ``span`` locates the surface in the source
    text for splicing.
    """

    token_index: int
    surface: str
    span: tuple[int, int]


@dataclass(frozen=True)
class MaskedSentence:
    """Word-level token sequence with every detected error masked."""

    tokens: tuple[str, ...]
    mask_indices: tuple[int, ...]


def detect_errors(
    sentence: Sentence, lex: Lexicon, entities: list[EntitySpan]
) -> list[DetectedError]:
    """Apply the four detection criteria; results are ordered by position."""
    errors: list[DetectedError] = []
    word_ordinal = -1
    for token in sentence.tokens:
        if token.kind is TokenKind.WORD:
            word_ordinal += 1
        if token.kind in (TokenKind.SPACE, TokenKind.PUNCT):
            continue
        if lex.contains(token.surface):
            continue
        if any(e.covers(token.index) for e in entities):
            continue
        if token.kind is not TokenKind.WORD:
            # Number tokens are Numeral entities by construction and must
            # never be flagged, even when no entity pass ran.
            continue
        errors.append(
            DetectedError(
                token_index=word_ordinal,
                surface=token.surface,
                span=token.span,
            )
        )
    return errors


def mask(sentence: Sentence, errors: list[DetectedError]) -> MaskedSentence:
    """Replace every flagged word with the mask literal, simultaneously.

    Raises:
        IndexError: an error references a word ordinal the sentence does
            not have.
    """
    words = [t.surface for t in sentence.words]
    indices: list[int] = []
    for err in errors:
        if not 0 <= err.token_index < len(words):
            raise IndexError(
                f"error index {err.token_index} out of range for "
                f"{len(words)} words"
            )
        words[err.token_index] = MASK_TOKEN
        indices.append(err.token_index)
    return MaskedSentence(tokens=tuple(words), mask_indices=tuple(indices))
