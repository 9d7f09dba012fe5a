"""Build a tiny self-contained masked-LM checkpoint.

Model hubs may be unreachable (air-gapped CI, sandboxes), so tests and
demos need a checkpoint that can be materialized locally. The model is a
randomly initialized two-layer BERT with a small Devanagari WordPiece
vocabulary; useless linguistically, but it exercises the full fill-mask
path deterministically.

    python -m vartani_sidecar.tiny /tmp/tiny-ckpt
"""

from __future__ import annotations

import os
import sys

import torch
from tokenizers import Tokenizer
from tokenizers.models import WordPiece
from tokenizers.pre_tokenizers import WhitespaceSplit
from tokenizers.processors import TemplateProcessing
from transformers import BertConfig, BertForMaskedLM, PreTrainedTokenizerFast

WORDS = """
खाया बनाया खिलाया लाया पकाया खाना पानी रोटी दूध चाय घर गाँव शहर देश राजा
रानी लड़का लड़की आदमी औरत दिन रात सुबह शाम काम नाम बात हाथ पैर सिर आँख
पेड़ फूल फल नदी पहाड़ जंगल सूरज चाँद तारा हवा आग बड़ा छोटा अच्छा नया पुराना
लाल काला सफ़ेद गरम ठंडा मीठा है हैं था थी और या पर में से को ने की का के
वह यह हम तुम मैं आप जो कब अब तब गया गई आया आई देखा सुना कहा लिखा पढ़ा
""".split()

PIECES = ["##या", "##ना", "##ता", "##ही", "##कर", "##से", "##ें", "##ों"]

SPECIALS = ["[PAD]", "[UNK]", "[CLS]", "[SEP]", "[MASK]"]


def build_tiny_checkpoint(path: str, seed: int = 20240812) -> str:
    """Write the checkpoint under ``path`` and return the path."""
    vocab = SPECIALS + WORDS + PIECES
    os.makedirs(path, exist_ok=True)

    backend = Tokenizer(
        WordPiece(
            vocab={tok: i for i, tok in enumerate(vocab)},
            unk_token="[UNK]",
            max_input_chars_per_word=64,
        )
    )
    backend.pre_tokenizer = WhitespaceSplit()
    backend.post_processor = TemplateProcessing(
        single="[CLS] $A [SEP]",
        pair="[CLS] $A [SEP] $B [SEP]",
        special_tokens=[("[CLS]", vocab.index("[CLS]")), ("[SEP]", vocab.index("[SEP]"))],
    )
    tokenizer = PreTrainedTokenizerFast(
        tokenizer_object=backend,
        pad_token="[PAD]",
        unk_token="[UNK]",
        cls_token="[CLS]",
        sep_token="[SEP]",
        mask_token="[MASK]",
        model_max_length=64,
    )
    tokenizer.save_pretrained(path)

    torch.manual_seed(seed)
    config = BertConfig(
        vocab_size=len(vocab),
        hidden_size=32,
        num_hidden_layers=2,
        num_attention_heads=2,
        intermediate_size=64,
        max_position_embeddings=64,
    )
    model = BertForMaskedLM(config)
    model.save_pretrained(path)
    return path


if __name__ == "__main__":
    if len(sys.argv) != 2:
        raise SystemExit("usage: python -m vartani_sidecar.tiny <output-dir>")
    print(build_tiny_checkpoint(sys.argv[1]))
