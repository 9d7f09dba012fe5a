"""Pluggable masked-language-model candidate providers.

The pipeline never loads a model; it talks to a provider object exposing
``predict(masked, mask_index, k)``. Two providers ship here: a
deterministic in-process mock backed by an exact-lookup table (hermetic
tests, offline CLI runs) and a remote client speaking the JSON wire
protocol:

    POST <endpoint>/v1/predict
    {"tokens": ["राम", "ने", "खाना", "[MASK]"], "mask_index": 3, "top_k": 10}

    200 -> {"candidates": [{"token": "खाया", "prob": 0.4191}, ...]}

Probabilities are opaque comparable scores in (0, 1]; nothing here
renormalizes them.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Protocol, Sequence

import requests

from .detect import MASK_TOKEN, MaskedSentence
from .errors import InvalidTable, MaskNotFound, ProviderError

__all__ = [
    "Candidate",
    "CandidateList",
    "MlmConfig",
    "CandidateProvider",
    "MockProvider",
    "RemoteProvider",
    "load_mock_table",
    "validate_candidates",
]


@dataclass(frozen=True)
class Candidate:
    """One predicted word with its model score."""

    word: str
    probability: float


@dataclass(frozen=True)
class CandidateList:
    """Candidates for one mask position, sorted by probability descending."""

    mask_index: int
    candidates: tuple[Candidate, ...]

    def __len__(self) -> int:
        return len(self.candidates)

    def words(self) -> tuple[str, ...]:
        return tuple(c.word for c in self.candidates)


@dataclass(frozen=True)
class MlmConfig:
    """Provider knobs; ``top_k`` is the candidate-list size hyperparameter."""

    top_k: int = 10
    endpoint: str | None = None
    timeout_s: float = 10.0

    def __post_init__(self):
        if not 1 <= self.top_k <= 100:
            raise ValueError("top_k must be between 1 and 100")
        if self.timeout_s <= 0:
            raise ValueError("timeout_s must be positive")


class CandidateProvider(Protocol):
    def predict(self, masked: MaskedSentence, mask_index: int, k: int) -> CandidateList: ...


def validate_candidates(cands: Sequence[Candidate], k: int | None = None) -> None:
    """Check candidate-list invariants; raise ValueError on the first break.

    Violations are never repaired: a bad probability, an empty or
    whitespace-bearing word, a duplicate, or (when ``k`` is given) an
    overlong list rejects the whole batch.
    """
    seen: set[str] = set()
    for c in cands:
        if not c.word or any(ch.isspace() for ch in c.word):
            raise ValueError(f"invalid candidate word {c.word!r}")
        if not math.isfinite(c.probability) or not 0.0 < c.probability <= 1.0:
            raise ValueError(f"probability {c.probability!r} outside (0, 1]")
        if c.word in seen:
            raise ValueError(f"duplicate candidate {c.word!r}")
        seen.add(c.word)
    for earlier, later in zip(cands, cands[1:]):
        if later.probability > earlier.probability:
            raise ValueError("candidates not sorted by probability")
    if k is not None and len(cands) > k:
        raise ValueError(f"{len(cands)} candidates exceed requested top_k={k}")


def _require_masked(masked: MaskedSentence, mask_index: int) -> None:
    if mask_index not in masked.mask_indices:
        raise MaskNotFound(f"index {mask_index} not masked in {masked.tokens}")


class MockProvider:
    """Exact-lookup provider over (masked word sequence, mask index) keys.

    Unknown contexts yield an empty list, which is a legal response, not an
    error. Lookup results are truncated to the requested k, so smaller k
    always returns a prefix of larger k.
    """

    def __init__(self, table: Mapping[tuple[tuple[str, ...], int], Iterable[Candidate]]):
        self._table: dict[tuple[tuple[str, ...], int], tuple[Candidate, ...]] = {}
        for key, cands in table.items():
            entry = tuple(cands)
            try:
                validate_candidates(entry)
            except ValueError as exc:
                raise InvalidTable(f"entry {key!r}: {exc}") from None
            self._table[(tuple(key[0]), int(key[1]))] = entry

    def predict(self, masked: MaskedSentence, mask_index: int, k: int) -> CandidateList:
        if k < 1:
            raise ValueError("k must be >= 1")
        _require_masked(masked, mask_index)
        entry = self._table.get((tuple(masked.tokens), mask_index), ())
        return CandidateList(mask_index=mask_index, candidates=entry[:k])


def load_mock_table(path) -> MockProvider:
    """Build a MockProvider from a JSON file.

    The file maps a space-joined masked word sequence to either a wire
    response object ({"candidates": [...]}), applying to every mask in the
    sequence, or to an object keyed by mask index ({"3": {"candidates":
    [...]}}).
    """
    with open(path, "rb") as fh:
        try:
            doc = json.load(fh)
        except ValueError as exc:
            raise InvalidTable(f"mock table is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise InvalidTable("mock table must be a JSON object")
    table: dict[tuple[tuple[str, ...], int], list[Candidate]] = {}
    for seq_key, value in doc.items():
        tokens = tuple(seq_key.split(" "))
        mask_positions = [i for i, t in enumerate(tokens) if t == MASK_TOKEN]
        if not isinstance(value, dict):
            raise InvalidTable(f"entry {seq_key!r} must be an object")
        if "candidates" in value:
            per_index = {i: value for i in mask_positions}
        else:
            try:
                per_index = {int(i): v for i, v in value.items()}
            except (TypeError, ValueError):
                raise InvalidTable(f"entry {seq_key!r}: keys must be mask indices") from None
        for idx, resp in per_index.items():
            cands = _parse_candidates(resp, error=InvalidTable)
            table[(tokens, idx)] = cands
    return MockProvider(table)


def _parse_candidates(resp, error) -> list[Candidate]:
    if not isinstance(resp, dict) or not isinstance(resp.get("candidates"), list):
        raise error("response must be an object with a 'candidates' array")
    out: list[Candidate] = []
    for item in resp["candidates"]:
        if (
            not isinstance(item, dict)
            or not isinstance(item.get("token"), str)
            or not isinstance(item.get("prob"), (int, float))
            or isinstance(item.get("prob"), bool)
        ):
            raise error(f"malformed candidate {item!r}")
        out.append(Candidate(word=item["token"], probability=float(item["prob"])))
    return out


class RemoteProvider:
    """Client for the JSON wire protocol.

    Every predict() call issues one POST; responses are validated and
    re-sorted by probability (stable), and any invariant violation rejects
    the whole response. Calls are independent, so concurrent use is safe.
    """

    def __init__(self, config: MlmConfig):
        if not config.endpoint:
            raise ValueError("remote provider needs an endpoint")
        self._url = config.endpoint.rstrip("/") + "/v1/predict"
        self._timeout = config.timeout_s

    def predict(self, masked: MaskedSentence, mask_index: int, k: int) -> CandidateList:
        if k < 1:
            raise ValueError("k must be >= 1")
        _require_masked(masked, mask_index)
        body = {"tokens": list(masked.tokens), "mask_index": mask_index, "top_k": k}
        try:
            resp = requests.post(self._url, json=body, timeout=self._timeout)
        except requests.Timeout as exc:
            raise ProviderError("timeout", str(exc)) from None
        except requests.ConnectionError as exc:
            raise ProviderError("connect", str(exc)) from None
        except requests.RequestException as exc:
            raise ProviderError("connect", str(exc)) from None
        if resp.status_code != 200:
            raise ProviderError("status", f"HTTP {resp.status_code}: {resp.text[:200]}")
        try:
            doc = resp.json()
        except ValueError as exc:
            raise ProviderError("schema", f"bad JSON: {exc}") from None

        def schema_error(msg):
            return ProviderError("schema", str(msg))

        cands = _parse_candidates(doc, error=schema_error)
        cands.sort(key=lambda c: -c.probability)
        try:
            validate_candidates(cands, k=k)
        except ValueError as exc:
            raise ProviderError("schema", str(exc)) from None
        return CandidateList(mask_index=mask_index, candidates=tuple(cands))
