"""World-tagged Gödel numbering, accessibility as numbering, and two-world systems."""

from .classifier import AccessConfig, CaseId, SystemReport, canonicalize, classify, full_table
from .errors import (
    AccessDenied,
    ArityError,
    InvalidCode,
    MalformedNumber,
    ParseError,
    UnknownAtom,
    UnknownWorld,
)
from .numbering import (
    ABSENT,
    IDENTITY,
    GodelNumber,
    NumberingFamily,
    Present,
    accessible,
    decode,
    decode_symbol,
    encode,
    family_from_frame,
    length_of,
    lo,
    nth_prime,
    symbol_code,
    world_of,
)
from .syntax import TaggedSentence, linearize, parse, render, world_membership
from .worlds import Frame, eval_modal, relation_properties

__version__ = "0.1.0"
