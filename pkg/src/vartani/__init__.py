"""Context-sensitive spelling correction for OCR-generated Hindi text.

Flow: split and tokenize Devanagari text, flag out-of-vocabulary words
(lexicon lookup plus named-entity protection), mask them, ask a pluggable
masked-language-model provider for top-k candidates, and pick the
replacement by minimum edit distance over WX transliterations with
probability tie-breaking.
"""

from .correct import EDITDIST_BACKEND, Correction, edit_distance, select_correction
from .detect import MASK_TOKEN, DetectedError, MaskedSentence, detect_errors, mask
from .errors import (
    ConfigError,
    FormatError,
    InvalidTable,
    MalformedWx,
    MaskNotFound,
    NoCandidates,
    ProviderError,
    VartaniError,
)
from .evalharness import EvalReport, GoldCorpus, GoldPair, evaluate, load_gold
from .lexicon import Lexicon, bundled_lexicon_path, load_lexicon
from .mlm import (
    Candidate,
    CandidateList,
    MlmConfig,
    MockProvider,
    RemoteProvider,
    load_mock_table,
)
from .ner import (
    EntityKind,
    EntitySpan,
    Gazetteers,
    bundled_gazetteer_dir,
    find_entities,
    load_gazetteers,
)
from .pipeline import (
    CorrectedDocument,
    Pipeline,
    PipelineConfig,
    build_audit,
    correct_document,
)
from .script import (
    Sentence,
    Token,
    TokenKind,
    WxString,
    WxTable,
    from_wx,
    load_wx_table,
    split_sentences,
    to_wx,
    tokenize,
)

__version__ = "0.1.0"
