"""Exact degrees and extremal subsemigroups of finite transformation semigroups."""

from .banddeg import DegreeResult, band_witness, beta, beta_r, rect_group_degree
from .hypergraph import Hypergraph, count_r_partitions, max_edges
from .nildeg import count_F, count_G, kappa, null_degree, null_witness
from .numerics import alpha, ceil_log, pi, pi_r, xi
from .rightnull import RnSolution, mu_rank1, rn_degree, rn_witness, variant_degree
from .transform import Transformation, classify_structure, compose

__version__ = "0.1.0"

__all__ = [
    "DegreeResult",
    "Hypergraph",
    "RnSolution",
    "Transformation",
    "alpha",
    "band_witness",
    "beta",
    "beta_r",
    "ceil_log",
    "classify_structure",
    "compose",
    "count_F",
    "count_G",
    "count_r_partitions",
    "kappa",
    "max_edges",
    "mu_rank1",
    "null_degree",
    "null_witness",
    "pi",
    "pi_r",
    "rect_group_degree",
    "rn_degree",
    "rn_witness",
    "variant_degree",
    "xi",
]
