"""Exact Igusa local zeta functions over Q_p and p-adic pseudo-differential
operators: zeta values as rational functions of t = p^-s, Laurent expansion
at s = -beta, division functionals, and fundamental solutions E = F^-1 T,
with twisted (character) symbols supported throughout.
"""

from .backend import HAVE_COMPILED, backend_name
from .characters import MultCharacter
from .cyclotomic import CycloNum, RadicalNum
from .fundamental import (
    DivisionFunctional,
    FundamentalSolution,
    UncertifiedError,
    pair_e,
    pair_t,
    solve,
    verify_division,
)
from .laurent import LambdaPoly, LaurentSeries, laurent_expand
from .oracle import Bracket, decompose, truncated_zeta
from .padic import (
    Ball,
    PAdicScalar,
    PrimeContext,
    angular_component,
    frac_part,
    valuation_of,
)
from .parsing import ParseError, format_polynomial, parse_polynomial
from .pdo import ApplyReport, SymbolSpec, apply_operator, apply_vladimirov
from .polynomial import Polynomial
from .ratfunc import DenFactor, PoleError, RatFunc
from .schwartz import (
    GridFunction,
    Resolution,
    SBFunction,
    fourier,
    fourier_grid,
    from_grid,
    inverse_fourier,
    psi_complex,
    psi_exact,
    random_sbfunction,
    to_grid,
)
from .zeta import (
    ZetaResult,
    certify_smooth_zero,
    certify_unit_ball,
    zeta_ball,
    zeta_of,
)

__version__ = "0.1.0"

__all__ = [
    "ApplyReport",
    "Ball",
    "Bracket",
    "CycloNum",
    "DenFactor",
    "DivisionFunctional",
    "FundamentalSolution",
    "GridFunction",
    "HAVE_COMPILED",
    "LambdaPoly",
    "LaurentSeries",
    "MultCharacter",
    "PAdicScalar",
    "ParseError",
    "PoleError",
    "Polynomial",
    "PrimeContext",
    "RadicalNum",
    "RatFunc",
    "Resolution",
    "SBFunction",
    "SymbolSpec",
    "UncertifiedError",
    "ZetaResult",
    "angular_component",
    "apply_operator",
    "apply_vladimirov",
    "backend_name",
    "certify_smooth_zero",
    "certify_unit_ball",
    "decompose",
    "format_polynomial",
    "fourier",
    "fourier_grid",
    "frac_part",
    "from_grid",
    "inverse_fourier",
    "laurent_expand",
    "pair_e",
    "pair_t",
    "parse_polynomial",
    "psi_complex",
    "psi_exact",
    "random_sbfunction",
    "solve",
    "to_grid",
    "truncated_zeta",
    "valuation_of",
    "verify_division",
    "zeta_ball",
    "zeta_of",
]
