"""Ratliff-Rush filtration, reduction numbers and regularity of equal-degree
monomial ideals in ``k[x, y]``."""

from ._kernels import BACKEND
from .equigen import GeneratorSet, ideal_of, member, power_ideal, reduction_number, sumset_power
from .errors import (
    DegenerateReductionError,
    FormsNotInIdealError,
    IdealSyntaxError,
    InputError,
    InternalCheckError,
    NotEqualDegreeError,
    NotMPrimaryError,
)
from .ratliff_rush import RRFiltrationEntry, RRIndices, chain_colon, initial_piece, rr_closure, rr_indices
from .redcheck import GradedSubspace, HomogeneousForm2, is_reduction_at, reduction_number_of, sample_reductions
from .regularity import (
    EUClass,
    RegularityResult,
    eu_verdict,
    reg_fiber,
    reg_rees,
    reg_rees_alternative,
    reg_rees_via_rr,
    safe_cap,
)
from .semigroup import SemigroupProfile, classify, h1_dimensions
from .staircase import Monomial2, MonomialIdeal2

__version__ = "0.1.0"
