"""Exact computations for rank-one Lie algebras: roots, Kostant cohomology,
Chevalley bases, big-cell vector fields and standard-subgroup cohomology."""

from .catalog import RankOneDatum, a_star, build, build_catalog, grade_of, l_lowest_weights_of_n_minus
from .roots import InvalidInput, RootSystem, Weight, WeylElement, delta, is_dominant, reflect, same_w_orbit, weyl_group

__all__ = [
    "InvalidInput", "RankOneDatum", "RootSystem", "Weight", "WeylElement", "a_star", "build", "build_catalog",
    "delta", "grade_of", "is_dominant", "l_lowest_weights_of_n_minus", "reflect", "same_w_orbit", "weyl_group",
]
