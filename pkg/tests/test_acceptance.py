"""End-to-end acceptance criteria; a PASS/FAIL line per criterion is printed in the summary."""

from __future__ import annotations

import re
import time
from collections import Counter
from math import sqrt

import pytest

from bipolarpaths.bipolar import count_table, enumerate_bipolar
from bipolarpaths.counting import (
    baxter_number,
    baxter_theta,
    enumerate_dyck_pairs,
    enumerate_triples,
    gv_determinant,
    sample_triple,
    schnyder_count,
)
from bipolarpaths.decode import psi
from bipolarpaths.encode import (
    WordTriple,
    check_admissible,
    contour_word,
    interlace,
    is_dyck,
    phi,
    project,
    red_edges_ordered,
    words_to_triple,
)
from bipolarpaths.schnyder import (
    alpha,
    beta,
    dyck_pair_to_schnyder,
    outer_left_path_faces_hold,
    schnyder_to_dyck_pair,
    validate_schnyder,
)
from bipolarpaths.separating import from_separating, to_separating, validate_separating

from conftest import E3_CONTOUR, E3_MATCHING_WORD, E3_PATHS, E3_TREE_WORD, E3_WORDS

MATCHING_SHAPE = re.compile(r"ac(A*aC*c)*")


def all_triples(max_sum: int):
    for n in range(max_sum + 1):
        for i in range(n + 1):
            yield from enumerate_triples(i, n - i)


@pytest.mark.acceptance(1, "count triangle for i+j <= 7, spot values, row sums")
def test_count_triangle():
    start = time.perf_counter()
    for n in range(8):
        for i in range(n + 1):
            j = n - i
            brute = sum(1 for _ in enumerate_triples(i, j))
            assert brute == gv_determinant(i, j) == baxter_theta(i, j), (i, j)
    spots = {(1, 1): 4, (2, 1): 10, (2, 2): 50, (3, 3): 980}
    assert {ij: baxter_theta(*ij) for ij in spots} == spots
    assert [baxter_number(n) for n in range(7)] == [1, 2, 6, 22, 92, 422, 2074]
    assert time.perf_counter() - start < 60


@pytest.mark.acceptance(2, "phi(psi(T)) == T on all 545 triples with i+j <= 5")
def test_decode_encode_all_triples():
    start = time.perf_counter()
    seen = 0
    for p in all_triples(5):
        i, j = p.type()
        d = psi(p)
        assert validate_separating(d) == (i + 2, j + 2)
        assert phi(d) == p
        seen += 1
    assert seen == 545
    assert time.perf_counter() - start < 30


@pytest.mark.acceptance(3, "enumerate_bipolar(5) matches the count table; both roundtrips hold")
def test_orientations_roundtrip(orientations5):
    start = time.perf_counter()
    table = count_table(orientations5)
    expected = {(i, n - i): baxter_theta(i, n - i) for n in range(5) for i in range(n + 1)}
    assert dict(table) == expected
    for o in orientations5:
        d = to_separating(o)
        assert from_separating(d) == o
        assert psi(phi(d)) == d
    assert time.perf_counter() - start < 300


@pytest.mark.acceptance(4, "golden running example of type (6, 3)")
def test_golden_example():
    words = WordTriple(*E3_WORDS)
    assert check_admissible(words) == (6, 3)
    p = words_to_triple(words)
    assert p.steps() == E3_PATHS
    d = psi(p)
    assert d.counts() == (8, 5)
    w = contour_word(d)
    assert w == E3_CONTOUR
    proj = project(w)
    assert (proj.triple.a, proj.triple.b, proj.triple.c) == E3_WORDS
    assert proj.tree_word == E3_TREE_WORD == interlace(E3_WORDS[0], E3_WORDS[1])
    assert proj.matching_word == E3_MATCHING_WORD


@pytest.mark.acceptance(5, "Schnyder woods for n <= 5: counts, validation, alpha/beta, Dyck roundtrip, face property")
def test_schnyder_suite():
    start = time.perf_counter()
    counts = []
    for n in range(1, 6):
        pairs = list(enumerate_dyck_pairs(n))
        assert len(pairs) == schnyder_count(n)
        counts.append(len(pairs))
        for p in pairs:
            s = dyck_pair_to_schnyder(p)
            assert validate_schnyder(s) == n
            d = alpha(s)
            assert beta(d) == s
            assert schnyder_to_dyck_pair(s) == p
            assert outer_left_path_faces_hold(d)
    assert counts == [1, 3, 14, 84, 594]
    assert time.perf_counter() - start < 120


@pytest.mark.acceptance(6, "invariant (I) per closure, tree and matching words, red-edge order, symmetry")
def test_property_suites(orientations5):
    decompositions = [psi(p, check=True) for p in all_triples(5)]
    decompositions += [to_separating(o) for o in orientations5]
    for d in decompositions:
        proj = project(contour_word(d))
        assert is_dyck(proj.tree_word, "ab", "AB")
        assert MATCHING_SHAPE.fullmatch(proj.matching_word)
        assert red_edges_ordered(d)
    for i in range(21):
        for j in range(21):
            assert baxter_theta(i, j) == baxter_theta(j, i)


@pytest.mark.acceptance(7, "sampler at (1, 1): 10 000 seeds, each outcome within 4 sigma of 2 500")
def test_sampler_uniformity():
    start = time.perf_counter()
    draws = 10_000
    tally = Counter(sample_triple(1, 1, seed).steps() for seed in range(1, draws + 1))
    assert len(tally) == baxter_theta(1, 1) == 4
    sigma = sqrt(draws * 0.25 * 0.75)
    for steps, hits in tally.items():
        assert abs(hits - draws / 4) <= 4 * sigma, (steps, hits)
    assert time.perf_counter() - start < 5
