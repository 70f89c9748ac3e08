"""lrckit: locality profiles, alphabet-dependent bounds, and rate-distance
asymptotics for linear locally repairable codes over small finite fields."""

from .galois import Field, field_new
from .code_core import (
    CodeFormatError,
    CoordSet,
    LinearCode,
    closure,
    entropy,
    linear_code,
    load_code,
    min_distance,
    min_weight_codeword,
    puncture,
    restrict,
    save_code,
    shorten,
)
from .residual import ResChain, res_chain, residual
from .locality import (
    LocalityProfile,
    RepairSetCheck,
    compute_locality,
    profile_from_repair_sets,
    simplex_locality,
    verify_repair_set,
)
from .bounds import BoundReport
from .set_builder import BuilderError, LowEntropySet, build_low_entropy_set, correct_with_reschain
from .constructions import NamedCode, example_code, simplex, verify_optimality

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "BuilderError",
    "CodeFormatError",
    "CoordSet",
    "Field",
    "LinearCode",
    "LocalityProfile",
    "LowEntropySet",
    "NamedCode",
    "RepairSetCheck",
    "ResChain",
    "build_low_entropy_set",
    "closure",
    "compute_locality",
    "correct_with_reschain",
    "entropy",
    "example_code",
    "field_new",
    "linear_code",
    "load_code",
    "min_distance",
    "min_weight_codeword",
    "profile_from_repair_sets",
    "puncture",
    "res_chain",
    "residual",
    "restrict",
    "save_code",
    "shorten",
    "simplex",
    "simplex_locality",
    "verify_optimality",
    "verify_repair_set",
    "__version__",
]
