"""Solomon zeta functions of the lattices of the hook representation of S_{n+1}."""

from ._core import (
    classify_sublattice,
    coxeter_ok,
    craig_generators,
    craig_lattice,
    dirichlet_coeff,
    enumerate_index_sublattices,
    enumerate_p_sublattices,
    global_zeta,
    hnf,
    identify_specht_lattice,
    intertwiner,
    is_g_stable,
    lattice_index,
    local_factor,
    series_expand,
    specht_generators,
    specht_zeta,
    verify,
    zeta_latex,
)

__all__ = [
    "classify_sublattice",
    "coxeter_ok",
    "craig_generators",
    "craig_lattice",
    "dirichlet_coeff",
    "enumerate_index_sublattices",
    "enumerate_p_sublattices",
    "global_zeta",
    "hnf",
    "identify_specht_lattice",
    "intertwiner",
    "is_g_stable",
    "lattice_index",
    "local_factor",
    "series_expand",
    "specht_generators",
    "specht_zeta",
    "verify",
    "zeta_latex",
]
