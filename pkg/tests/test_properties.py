"""Randomised invariants over both bijections."""

from __future__ import annotations

import random
import re

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bipolarpaths.bipolar import validate_bipolar
from bipolarpaths.counting import baxter_theta, enumerate_dyck_pairs, sample_triple
from bipolarpaths.decode import psi
from bipolarpaths.encode import (
    PathTriple,
    check_admissible,
    contour_word,
    is_dyck,
    is_nonintersecting,
    phi,
    project,
    red_edges_ordered,
)
from bipolarpaths.errors import Intersecting
from bipolarpaths.schnyder import (
    alpha,
    beta,
    dyck_pair_to_schnyder,
    is_contractible,
    outer_left_path_faces_hold,
    schnyder_to_dyck_pair,
    schnyder_to_dyck_pair_via_paths,
    validate_schnyder,
)
from bipolarpaths.separating import from_separating, to_separating, validate_separating

MATCHING_SHAPE = re.compile(r"ac(A*aC*c)*")

types = st.tuples(st.integers(0, 6), st.integers(0, 6))
seeds = st.integers(0, 2**32 - 1)
DYCK_PAIRS = [p for n in range(5) for p in enumerate_dyck_pairs(n)]


@settings(max_examples=60, deadline=None)
@given(types, seeds)
def test_decode_then_encode_is_identity(ij, seed):
    i, j = ij
    p = sample_triple(i, j, seed)
    d = psi(p, check=True)
    assert validate_separating(d) == (i + 2, j + 2)
    assert phi(d) == p
    o = from_separating(d)
    assert validate_bipolar(o) == (i, j)
    assert to_separating(o) == d
    assert phi(to_separating(o)) == p


@settings(max_examples=60, deadline=None)
@given(types, seeds)
def test_contour_word_shape(ij, seed):
    i, j = ij
    d = psi(sample_triple(i, j, seed))
    w = contour_word(d)
    n = i + j + 2
    assert len(w) == 3 * n
    proj = project(w)
    a, b, c = proj.triple.a, proj.triple.b, proj.triple.c
    assert (a.count("a"), a.count("A")) == (j + 2, i)
    assert (b.count("b"), b.count("B")) == (i, j + 2)
    assert (c.count("c"), c.count("C")) == (j + 2, i)
    assert is_dyck(proj.tree_word, "ab", "AB")
    assert MATCHING_SHAPE.fullmatch(proj.matching_word)
    assert check_admissible(proj.triple) == (i, j)
    assert red_edges_ordered(d)


@settings(max_examples=80, deadline=None)
@given(types, seeds)
def test_random_endpoints_decode_iff_disjoint(ij, seed):
    i, j = ij
    rng = random.Random(seed)

    def path() -> str:
        steps = ["R"] * i + ["U"] * j
        rng.shuffle(steps)
        return "".join(steps)

    p = PathTriple.from_steps(path(), path(), path())
    if is_nonintersecting(p):
        assert phi(psi(p)) == p
    else:
        with pytest.raises(Intersecting):
            psi(p)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(DYCK_PAIRS))
def test_schnyder_roundtrip(pair):
    w = dyck_pair_to_schnyder(pair)
    assert validate_schnyder(w) == pair.n
    assert schnyder_to_dyck_pair(w) == pair
    assert schnyder_to_dyck_pair_via_paths(w) == pair
    d = alpha(w)
    assert validate_separating(d) == (pair.n + 2, pair.n + 2)
    assert is_contractible(d)
    assert outer_left_path_faces_hold(d)
    assert beta(d) == w


@pytest.mark.parametrize("i", range(21))
def test_theta_symmetry(i):
    for j in range(21):
        assert baxter_theta(i, j) == baxter_theta(j, i)
