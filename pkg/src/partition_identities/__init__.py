"""Exact partition statistics, the Fu-Tang bijection sigma_m, and brute-force
verification of the Andrews-Merca family of partition identities."""

from .counting import partition_count, restricted_count
from .decorated import (
    DecoratedPartition,
    LinearForm,
    check_convolution,
    check_e2,
    check_e3,
    coefficient_formula,
    enumerate_decorated,
    weight_W,
    weight_Wtilde,
)
from .identities import (
    IdentityReport,
    check_am_general,
    check_bnew1_eval,
    check_dnew1_eval,
    check_merca,
    check_per_k,
    check_per_k_first,
    check_per_k_signed,
)
from .partitions import (
    DNSplit,
    OESplit,
    Partition,
    decompose_dn,
    decompose_oe,
    enumerate_partitions,
)
from .statistics import StatVector, residue, stat_vector, transport_check
from .transforms import phi_do, phi_od, psi_en, psi_ne, sigma, sigma_inv

__version__ = "0.1.0"
