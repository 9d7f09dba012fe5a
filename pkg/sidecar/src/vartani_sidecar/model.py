"""Fill-mask inference over a HuggingFace masked LM.

The server receives a word-level token sequence with "[MASK]" literals and
must return whole-word candidates. Vocabulary pieces are aggregated with
one of two strategies:

  single     keep only candidates that are one vocabulary piece (no '##'
             continuation), i.e. whole words by construction; the default.
  iterative  additionally reconstruct multi-piece words by widening the
             mask to n consecutive [MASK] slots (n = 2..max_pieces) and
             greedily filling left to right; a reconstructed word's score
             is the product of its piece probabilities.

Inference runs in eval mode with no sampling, so identical requests get
identical responses within one server process. A lock serializes forward
passes; concurrent callers are safe.
"""

from __future__ import annotations

import threading

import torch
from transformers import AutoModelForMaskedLM, AutoTokenizer

STRATEGIES = ("single", "iterative")


class MaskedWordModel:
    """One loaded checkpoint plus the piece-aggregation policy."""

    def __init__(self, model_id: str, strategy: str = "single", max_pieces: int = 3):
        if strategy not in STRATEGIES:
            raise ValueError(f"strategy must be one of {STRATEGIES}")
        self.strategy = strategy
        self.max_pieces = max_pieces
        self.tokenizer = AutoTokenizer.from_pretrained(model_id)
        self.model = AutoModelForMaskedLM.from_pretrained(model_id)
        self.model.eval()
        self._lock = threading.Lock()
        self._special_ids = set(self.tokenizer.all_special_ids)
        self.mask_id = self.tokenizer.mask_token_id
        if self.mask_id is None:
            raise ValueError(f"{model_id} has no mask token")
        # Tokenizers loaded from bare vocab files report a sentinel
        # model_max_length; fall back to the model's position limit.
        tk_limit = self.tokenizer.model_max_length
        pos_limit = getattr(self.model.config, "max_position_embeddings", 512)
        self.max_length = min(pos_limit, tk_limit) if tk_limit < 1_000_000 else pos_limit
        vocab = self.tokenizer.get_vocab()
        self._continuation_ids = torch.tensor(
            sorted(i for t, i in vocab.items() if t.startswith("##")),
            dtype=torch.long,
        )
        self._wordstart_ids = torch.tensor(
            sorted(
                i
                for t, i in vocab.items()
                if not t.startswith("##") and i not in self._special_ids and t.strip()
            ),
            dtype=torch.long,
        )

    def predict(self, words: list[str], mask_index: int, k: int) -> list[tuple[str, float]]:
        """Top-k (word, probability) pairs for the masked position.

        ``words`` is the word-level sequence containing the literal mask
        token at ``mask_index``.
        """
        with self._lock, torch.no_grad():
            single = self._single_piece(words, mask_index, k)
            if self.strategy == "single":
                merged = single
            else:
                merged = dict(single)
                for n in range(2, self.max_pieces + 1):
                    for word, prob in self._fill_pieces(words, mask_index, n, k):
                        if word not in merged or merged[word] < prob:
                            merged[word] = prob
                merged = sorted(merged.items(), key=lambda item: -item[1])
        out = []
        seen = set()
        for word, prob in merged:
            if word in seen:
                continue
            seen.add(word)
            out.append((word, min(prob, 1.0)))
            if len(out) == k:
                break
        return out

    def _encode(self, words: list[str]) -> tuple[torch.Tensor, list[int]]:
        """Token ids for the word sequence; returns (ids, mask positions)."""
        enc = self.tokenizer(
            " ".join(words),
            return_tensors="pt",
            truncation=True,
            max_length=self.max_length,
        )
        ids = enc["input_ids"]
        positions = (ids[0] == self.mask_id).nonzero(as_tuple=True)[0].tolist()
        return ids, positions

    def _mask_position(self, words: list[str], mask_index: int) -> tuple[torch.Tensor, int]:
        """Sub-token position of the mask that sits at word ``mask_index``."""
        ordinal = sum(
            1 for w in words[:mask_index] if w == self.tokenizer.mask_token
        )
        ids, positions = self._encode(words)
        if ordinal >= len(positions):
            raise ValueError("mask token lost in tokenization")
        return ids, positions[ordinal]

    def _distribution(self, ids: torch.Tensor, position: int) -> torch.Tensor:
        logits = self.model(input_ids=ids).logits[0, position]
        return torch.softmax(logits, dim=-1)

    def _single_piece(self, words: list[str], mask_index: int, k: int):
        ids, position = self._mask_position(words, mask_index)
        probs = self._distribution(ids, position)
        scored: list[tuple[str, float]] = []
        # Over-fetch so filtering special/continuation pieces still fills k.
        top = torch.topk(probs, min(len(probs), max(k * 4, k + 8)))
        for prob, token_id in zip(top.values.tolist(), top.indices.tolist()):
            if token_id in self._special_ids:
                continue
            piece = self.tokenizer.convert_ids_to_tokens(token_id)
            if piece.startswith("##") or not piece.strip():
                continue
            scored.append((piece, prob))
            if len(scored) == k:
                break
        return scored

    def _fill_pieces(self, words: list[str], mask_index: int, n: int, k: int):
        """Beam-fill ``n`` consecutive mask slots at one word position.

        The target word is widened to n masks; slots fill left to right,
        the first slot from word-start pieces, later slots from '##'
        continuations. A finished word scores the product of its piece
        probabilities.
        """
        mask = self.tokenizer.mask_token
        widened = list(words[:mask_index]) + [mask] * n + list(words[mask_index + 1 :])
        base_ordinal = sum(1 for w in words[:mask_index] if w == mask)
        ids, positions = self._encode(widened)
        slots = positions[base_ordinal : base_ordinal + n]
        if len(slots) < n:
            return []
        beams: list[tuple[list[int], float]] = [([], 1.0)]
        for slot_no, slot_pos in enumerate(slots):
            # First slot starts the word, the rest must continue it.
            eligible = self._wordstart_ids if slot_no == 0 else self._continuation_ids
            if len(eligible) == 0:
                return []
            next_beams: list[tuple[list[int], float]] = []
            for chosen, score in beams:
                filled = ids.clone()
                for offset, token_id in enumerate(chosen):
                    filled[0, slots[offset]] = token_id
                probs = self._distribution(filled, slot_pos)[eligible]
                top = torch.topk(probs, min(len(probs), 4))
                for prob, local_idx in zip(top.values.tolist(), top.indices.tolist()):
                    token_id = int(eligible[local_idx])
                    next_beams.append((chosen + [token_id], score * prob))
            beams = sorted(next_beams, key=lambda b: -b[1])[:k]
        results: list[tuple[str, float]] = []
        for chosen, score in beams:
            pieces = self.tokenizer.convert_ids_to_tokens(chosen)
            word = pieces[0] + "".join(p.removeprefix("##") for p in pieces[1:])
            results.append((word, score))
        return results
