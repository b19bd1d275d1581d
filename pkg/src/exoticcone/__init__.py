"""Exact computations around the exotic nilpotent cone of Sp(2n):
type C weight combinatorics, partition counts, weight and section
multiplicities, the bipartition orbit poset with its collapse maps, and
rational-arithmetic orbit classification of pairs (v, x).
"""

from .bipartitions import (
    Bipartition,
    bipartition,
    closure_leq,
    collapse,
    emit_dot,
    enumerate_Q,
    filtration_dims,
    hasse,
    is_C_distinguished,
    phiC,
    phiC_hat,
)
from .characters import all_weights, weight_mult, weight_mult_oracle, weyl_dim
from .config import Config, load_config
from .errors import (
    CapExceeded,
    DomainError,
    FiltrationNotFound,
    InternalInconsistency,
    NotDoubled,
    NotUnique,
    SelfCheckFailed,
)
from .kostant import kostant_p, kostant_p_exotic, subset_identity_check
from .orbits import (
    ExoticPair,
    IsotropicFiltration,
    SymplecticSpace,
    adapted_filtration,
    centralizer_basis,
    de_double,
    exv_module,
    in_exotic_cone,
    jordan_type,
    make_pair,
    orbit_of,
    perp,
    random_symplectic,
    representative,
    solve_symplectic_form,
    standard_form,
    verify_adapted,
)
from .rootdata import (
    RootDataC,
    SignedPermutation,
    bwb,
    coroot_pairing,
    dominant_rep,
    in_conv,
    in_conv0,
    in_tconv,
    in_tconv0,
    is_dominant,
    quasi_order,
    root_data,
    signed_permutations,
    twisted_act,
    twisted_w0,
    weyl_orbit,
)
from .sections import h0_decompose, h0_mult, h0_mult_subsets

__version__ = "0.1.0"
