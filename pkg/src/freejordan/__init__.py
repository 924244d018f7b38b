"""Exact graded-dimension computations for free Jordan superalgebras."""

from .homology import build_chain_complex, compute_homology
from .jordan import GradedJordanAlgebra, build_free_jordan
from .rings import GDim, RLaurent, SuperSeries, TZSeries, t_integer
from .solver import residual_series, solve_dims, solve_dims_pair
from .tag import TagAlgebra, build_Bs, build_tag, inner_rank_diagnostic

__all__ = [
    "GDim",
    "GradedJordanAlgebra",
    "RLaurent",
    "SuperSeries",
    "TZSeries",
    "TagAlgebra",
    "build_Bs",
    "build_chain_complex",
    "build_free_jordan",
    "build_tag",
    "compute_homology",
    "inner_rank_diagnostic",
    "residual_series",
    "solve_dims",
    "solve_dims_pair",
    "t_integer",
]

__version__ = "0.1.0"
