"""Exact Betti numbers of monomial ideals and the depth values they imply."""

from ._backend import compiled_available, default_backend
from .betti import (BettiTable, betti_numbers, depth_oracle, depth_power_oracle, pd_oracle,
                    power_generator_count)
from .homology import SimplicialComplex, rank_fraction_free, rank_mod_p
from .lattice import LcmLattice, lcm_lattice

__all__ = [
    "BettiTable", "LcmLattice", "SimplicialComplex", "betti_numbers", "compiled_available",
    "default_backend", "depth_oracle", "depth_power_oracle", "lcm_lattice", "pd_oracle",
    "power_generator_count", "rank_fraction_free", "rank_mod_p",
]
