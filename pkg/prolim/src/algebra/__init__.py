"""
Exact algebra over Z: integer normal forms, group rings of finite abelian
groups, finitely presented modules, homology and towers of group rings.
"""

from .zlinalg import AbelianInvariants, IntMatrix, hnf, snf
from .groupring import FiniteAbelianGroup, GroupHom, GroupRingElement, Subgroup
from .fpmod import FPModule, ModuleMap, free_resolution
from .homology import homology_h1, tor_basechange, tor_mod
from .local import fs_bound, min_gens
from .tower import ChainTower, Tower, TowerModule, TowerSpec, build_tower



__all__ = [
    "AbelianInvariants",
    "IntMatrix",
    "hnf",
    "snf",
    "FiniteAbelianGroup",
    "GroupHom",
    "GroupRingElement",
    "Subgroup",
    "FPModule",
    "ModuleMap",
    "free_resolution",
    "homology_h1",
    "tor_basechange",
    "tor_mod",
    "fs_bound",
    "min_gens",
    "ChainTower",
    "Tower",
    "TowerModule",
    "TowerSpec",
    "build_tower"
]
