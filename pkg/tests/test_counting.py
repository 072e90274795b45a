from __future__ import annotations

from itertools import combinations, product

import pytest

from bipolarpaths.counting import (
    baxter_number,
    baxter_theta,
    catalan,
    dyck_words,
    enumerate_dyck_pairs,
    enumerate_triples,
    gv_determinant,
    gv_matrix,
    sample_triple,
    schnyder_count,
    schnyder_count_closed,
)
from bipolarpaths.encode import PathTriple, is_nonintersecting
from bipolarpaths.errors import BudgetExceeded
from bipolarpaths.schnyder import DyckPair, validate_dyck_pair


def all_paths(rights: int, ups: int) -> list[str]:
    n = rights + ups
    out = []
    for pos in combinations(range(n), rights):
        steps = ["U"] * n
        for k in pos:
            steps[k] = "R"
        out.append("".join(steps))
    return sorted(out)


def brute_triples(i: int, j: int) -> list[tuple[str, str, str]]:
    paths = all_paths(i, j)
    return [
        steps
        for steps in product(paths, repeat=3)
        if is_nonintersecting(PathTriple.from_steps(*steps))
    ]


@pytest.mark.parametrize(
    "i, j, value", [(0, 0, 1), (1, 1, 4), (2, 1, 10), (1, 2, 10), (2, 2, 50), (3, 3, 980)]
)
def test_theta_values(i, j, value):
    assert baxter_theta(i, j) == value
    assert gv_determinant(i, j) == value


def test_gv_matrix():
    assert gv_matrix(1, 1) == [[2, 1, 0], [1, 2, 1], [0, 1, 2]]
    assert gv_matrix(0, 0) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_row_sums():
    assert [baxter_number(n) for n in range(7)] == [1, 2, 6, 22, 92, 422, 2074]


def test_symmetry():
    for i in range(21):
        for j in range(21):
            assert baxter_theta(i, j) == baxter_theta(j, i)


def test_enumeration_against_brute_force():
    for total in range(6):
        for i in range(total + 1):
            got = [p.steps() for p in enumerate_triples(i, total - i)]
            assert got == brute_triples(i, total - i)


def test_enumeration_small_cases():
    assert [p.steps() for p in enumerate_triples(0, 0)] == [("", "", "")]
    assert [p.steps() for p in enumerate_triples(0, 1)] == [("U", "U", "U")]
    assert len(list(enumerate_triples(1, 1))) == 4
    assert len(list(product(all_paths(1, 1), repeat=3))) == 8


def test_catalan_and_schnyder_counts():
    assert [catalan(n) for n in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]
    assert [schnyder_count(n) for n in range(1, 6)] == [1, 3, 14, 84, 594]
    for n in range(30):
        assert schnyder_count(n) == schnyder_count_closed(n)


def test_dyck_pairs_against_brute_force():
    for n in range(5):
        words = ["".join(s) for s in product("UD", repeat=2 * n)]
        brute = set()
        for lower, upper in product(words, repeat=2):
            try:
                validate_dyck_pair(DyckPair(lower, upper))
            except ValueError:
                continue
            brute.add((lower, upper))
        got = [(p.lower, p.upper) for p in enumerate_dyck_pairs(n)]
        assert len(got) == len(set(got)) and set(got) == brute


def test_dyck_pair_counts():
    assert len(list(dyck_words(4))) == 14
    for n in range(7):
        assert sum(1 for _ in enumerate_dyck_pairs(n)) == schnyder_count(n)


def test_sampler_is_deterministic():
    assert sample_triple(3, 2, 99) == sample_triple(3, 2, 99)
    assert sample_triple(0, 0, 5).steps() == ("", "", "")
    for seed in range(20):
        assert is_nonintersecting(sample_triple(2, 3, seed))


def test_budgets(monkeypatch):
    with pytest.raises(BudgetExceeded):
        next(enumerate_triples(6, 5))
    with pytest.raises(BudgetExceeded):
        next(enumerate_dyck_pairs(9))
    monkeypatch.setenv("BIPOLAR_BUDGET", "11")
    assert next(enumerate_triples(6, 5))
