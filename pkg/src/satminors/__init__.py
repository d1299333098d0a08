"""Exact commutative-algebra engine for cyclic determinantal ideal families.

Provides sparse multivariate polynomial arithmetic over the rationals or a
prime field, Groebner bases for ideals and free-module submodules, ideal
calculus (colon, saturation, dimension), polynomial matrices and minors,
the cyclic exponent family construction, Koszul strand complexes, and a
verification suite with a CLI.
"""

from .checks import CheckResult, Report, run_suites
from .family import CyclicFamily, CyclicSpec, extract_delta
from .field import QQ, PrimeField, field_from_name
from .groebner import (GroebnerBasis, ModuleVector, SyzygyBasis, buchberger,
                       is_member, module_groebner, module_member, normal_form,
                       syzygies)
from .ideal import Ideal
from .pmatrix import PolyMatrix
from .poly import (BlockOrder, Grevlex, Lex, MonomialOrder, Polynomial,
                   RingContext, order_from_name)
from .strand import StrandComplex, claim2_decomposition

__version__ = "0.1.0"

__all__ = [
    "CyclicFamily", "CyclicSpec", "extract_delta",
    "QQ", "PrimeField", "field_from_name",
    "GroebnerBasis", "ModuleVector", "SyzygyBasis", "buchberger",
    "is_member", "module_groebner", "module_member", "normal_form",
    "syzygies",
    "Ideal", "PolyMatrix",
    "BlockOrder", "Grevlex", "Lex", "MonomialOrder", "Polynomial",
    "RingContext", "order_from_name",
    "StrandComplex", "claim2_decomposition",
    "CheckResult", "Report", "run_suites",
    "__version__",
]
