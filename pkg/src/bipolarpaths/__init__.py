"""Bijection between plane bipolar orientations and non-intersecting triples of lattice paths."""

from .bipolar import BipolarOrientation, enumerate_bipolar, validate_bipolar
from .comb_map import CombMap, build_map, canonical_code
from .counting import (
    baxter_theta,
    catalan,
    enumerate_dyck_pairs,
    enumerate_triples,
    gv_determinant,
    sample_triple,
    schnyder_count,
)
from .decode import psi
from .encode import PathTriple, WordTriple, check_admissible, contour_word, phi, project
from .errors import InvariantError
from .schnyder import DyckPair, SchnyderWood, alpha, beta, dyck_pair_to_schnyder, schnyder_to_dyck_pair
from .separating import SeparatingDecomposition, from_separating, to_separating, validate_separating

__all__ = [
    "BipolarOrientation",
    "CombMap",
    "DyckPair",
    "InvariantError",
    "PathTriple",
    "SchnyderWood",
    "SeparatingDecomposition",
    "WordTriple",
    "alpha",
    "baxter_theta",
    "beta",
    "build_map",
    "canonical_code",
    "catalan",
    "check_admissible",
    "contour_word",
    "dyck_pair_to_schnyder",
    "enumerate_bipolar",
    "enumerate_dyck_pairs",
    "enumerate_triples",
    "from_separating",
    "gv_determinant",
    "phi",
    "project",
    "psi",
    "sample_triple",
    "schnyder_count",
    "schnyder_to_dyck_pair",
    "to_separating",
    "validate_bipolar",
    "validate_separating",
]
