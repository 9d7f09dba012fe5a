"""Masked-LM inference server speaking the vartani candidate wire protocol."""

from .app import create_app
from .model import STRATEGIES, MaskedWordModel
from .tiny import build_tiny_checkpoint

__version__ = "0.1.0"
