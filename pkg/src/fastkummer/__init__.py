"""Fast Kummer surface arithmetic, (2,2)- and (3,3)-isogenies, and the KuHash hash."""

from ._errors import KummerError
from .field import BACKEND, Field, counting, uncounted
from .isogeny22 import isogeny_22
from .isogeny33 import compute_strategy, isogeny_33_chain
from .kuhash import HashInput, HashOutput, kuhash, normalize_output
from .kummer import KummerPoint, ThetaConstants, xadd, xdbl
from .params import ParameterSet, load_params, validate_params

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "Field", "counting", "uncounted", "KummerError", "KummerPoint", "ThetaConstants",
    "xadd", "xdbl", "isogeny_22", "isogeny_33_chain", "compute_strategy", "kuhash", "HashInput",
    "HashOutput", "normalize_output", "ParameterSet", "load_params", "validate_params",
    "__version__",
]
