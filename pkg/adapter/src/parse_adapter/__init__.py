"""Offline text-to-CoNLL-U adapter and lexicon exporter."""

from .backends import BuiltinBackend, ParserUnavailable, SpacyBackend, make_backend
from .conllu import block, write_blocks
from .lexicon import (
    BundledHypernyms,
    LexicalDatabaseUnavailable,
    export_lexicon,
    open_database,
)
from .parser import Parsed, parse
from .tagger import Tagged, tag, tokenize

__version__ = "0.1.0"
