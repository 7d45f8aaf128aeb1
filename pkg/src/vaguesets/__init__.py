"""Vague sets, interval-judgment membership curves and a small expression language.

The package turns per-subject interval judgments into exact piecewise-constant
membership curves, combines them subject by subject, and compares the result
against classic t-norm semantics; a keyword expression language drives all of
it from one grammar with pluggable semantics.
"""

from .config import Config, load_config
from .curves import MembershipCurve, StepCurve, align_counts, merge_breakpoints
from .dataset import generate_example, load_matrix, parse_judgments, read_judgments
from .errors import (
    ConfigError,
    ConstraintViolation,
    ContradictoryJudgment,
    DatasetError,
    EmptyPopulation,
    InvalidHedge,
    InvalidInterval,
    LexError,
    OutOfUniverse,
    ParseError,
    PopulationMismatch,
    RangeError,
    UniverseMismatch,
    UnknownAtom,
    UnsupportedComparison,
    VagueError,
)
from .eventology import (
    AGAINST,
    FOR,
    Judgment,
    SelectionMatrix,
    VagueEvent,
    build_matrix,
    derive_vague_curve,
    membership,
    mink_combine,
)
from .expressions import (
    And,
    Atom,
    Expr,
    Hedge,
    Not,
    Or,
    SymDiff,
    eval_event,
    eval_tnorm,
    eval_vague,
    expr_atoms,
    parse,
    parse_tokens,
    to_text,
    tokenize,
)
from .regions import Interval, Region, Universe, breakpoints, normalize
from .tnorms import TNorm, curve_tconorm, curve_tnorm, tconorm_apply, tnorm_apply
from .vague import DEFAULT_HEDGES, VagueCurve, VagueSet, VagueValue

__version__ = "0.1.0"
