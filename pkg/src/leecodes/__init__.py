"""Perfect Lee codes: Lee balls, ball labelings by abelian groups, and congruence
certificates for the nonexistence of linear PL(n, 2) codes."""

from .certify import (
    NonexistenceCertificate,
    NotApplicable,
    Reason,
    certify_nonexistence,
    compare_bounds,
    density_count,
    residue_classes,
    scan_modulus,
    verify_certificate,
)
from .groups import (
    FiniteAbelianGroup,
    LatticeHom,
    PrimeProjection,
    apply_hom,
    ball_image_multiset,
    enumerate_abelian_groups,
    group_order,
    is_perfect_labeling,
    pl_2e_construction,
    pl_n1_construction,
    project_to_prime,
)
from .kim import power_sum, q_direct, q_formula, verify_kim_identity
from .lattice import IntegerLattice, construction_a_lift, kernel_lattice
from .lee import BallSpec, ball_size, enumerate_ball, lee_distance_z, lee_distance_zq
from .search import canonical_candidates, naive_search_oracle, search_linear_pl

__version__ = "0.1.0"
