"""Folded Reed-Solomon list decoding and list-size bound verification at desk scale."""

__version__ = "0.1.0"

from .gf import Field, FieldElement, FieldMismatchError, is_prime
from .poly import Polynomial
from .linalg import AffineSubspace, EnumerationCapError, MatrixFq, affine_hull
from .frs import FrsCode
from .decode import (
    Certificate,
    Interpolant,
    PruneResult,
    brute_force_list,
    gw_interpolate,
    gw_radius,
    gw_subspace,
    prune_certificates,
)
from .bounds import (
    AgreementGraph,
    BoundReport,
    agreement_graph,
    check_cz_edge_bound,
    check_cz_theorem,
    check_gk,
    check_parameter_chain,
    check_srivastava,
    check_wronskian_multiplicity,
    cz_partition,
    folded_wronskian,
    singleton_floor,
    slice_dims,
)
from .recovery import CounterexampleFamily, build_counterexample, verify_counterexample
