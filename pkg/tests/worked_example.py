"""The running example: one OCR-corrupted sentence and its candidates."""

from vartani.detect import MASK_TOKEN
from vartani.mlm import Candidate

# Candidate list for the masked fourth word: word, model probability.
TABLE1 = (
    Candidate("खाया", 0.4191),
    Candidate("बनाया", 0.2359),
    Candidate("खिलाया", 0.1257),
    Candidate("लाया", 0.0124),
    Candidate("पकाया", 0.0113),
)

EXAMPLE_SENTENCE = "राम ने खाना रया"
EXAMPLE_CORRECTED = "राम ने खाना खाया"
EXAMPLE_MASKED = ("राम", "ने", "खाना", MASK_TOKEN)
