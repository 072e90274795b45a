from __future__ import annotations

import pytest

from bipolarpaths.counting import enumerate_triples
from bipolarpaths.decode import (
    build_blue_tree,
    close_faces,
    complete,
    insert_stems,
    matching_word,
    psi,
    rebuild_contour,
    triple_to_words,
)
from bipolarpaths.encode import PathTriple, WordTriple, contour_word, phi, project
from bipolarpaths.errors import (
    BadEndpoints,
    InconsistentType,
    Intersecting,
    NoValidShuffle,
    NotDyck,
    UnmatchedStem,
)
from bipolarpaths.separating import to_separating, validate_separating

from conftest import E3_CONTOUR, E3_MATCHING_WORD, E3_PATHS, E3_TREE_WORD, E3_WORDS


def figure_for(words: tuple[str, str, str], check: bool = True):
    w_a, w_b, w_c = words
    return insert_stems(build_blue_tree(w_a, w_b), matching_word(w_a, w_c), check=check)


def test_triple_to_words():
    assert triple_to_words(PathTriple.from_steps("", "", "")) == WordTriple("aa", "BB", "cc")
    assert triple_to_words(PathTriple.from_steps("U", "U", "U")) == WordTriple("aaa", "BBB", "ccc")
    w = triple_to_words(PathTriple.from_steps(*E3_PATHS))
    assert (w.a, w.b, w.c) == E3_WORDS


def test_triple_to_words_rejects():
    upper, middle, lower = E3_PATHS
    with pytest.raises(Intersecting):
        triple_to_words(PathTriple.from_steps(upper, lower, middle))
    with pytest.raises(BadEndpoints):
        triple_to_words(PathTriple.from_steps("U", "", ""))


def test_blue_tree_shapes():
    star = build_blue_tree("aa", "BB")
    assert star.children[0] == (1, 2) and star.colors[1] == star.colors[2] == "w"
    fan = build_blue_tree("aaa", "BBB")
    assert len(fan.children[0]) == 3
    tree = build_blue_tree(E3_WORDS[0], E3_WORDS[1])
    assert tree.dyck_word() == E3_TREE_WORD
    colors = list(tree.colors.values())
    assert colors.count("b") == 7 and colors.count("w") == 5


def test_blue_tree_rejects_non_dyck():
    with pytest.raises(NotDyck):
        build_blue_tree("Aa", "bB")


def test_matching_word():
    assert matching_word("aa", "cc") == "acac"
    assert matching_word("aaa", "ccc") == "acacac"
    assert matching_word(E3_WORDS[0], E3_WORDS[2]) == E3_MATCHING_WORD
    with pytest.raises(NoValidShuffle):
        matching_word("aAa", "cCcc")
    with pytest.raises(NoValidShuffle):
        matching_word("Aaa", "ccc")


def test_rebuild_contour():
    assert rebuild_contour(E3_TREE_WORD, E3_MATCHING_WORD) == E3_CONTOUR
    with pytest.raises(InconsistentType):
        rebuild_contour("aBaB", "acAac")


def test_insert_stems_counts():
    f1 = figure_for(("aa", "BB", "cc"))
    assert [kind for kind, _ in f1.stems] == ["c", "c"]
    f2 = figure_for(("aaa", "BBB", "ccc"))
    assert [kind for kind, _ in f2.stems] == ["c", "c", "c"]
    f3 = figure_for(E3_WORDS)
    kinds = [kind for kind, _ in f3.stems]
    assert (kinds.count("A"), kinds.count("C"), kinds.count("c")) == (6, 6, 5)
    assert f3.invariant_holds()


def test_insert_stems_type_mismatch():
    with pytest.raises(InconsistentType):
        insert_stems(build_blue_tree("aa", "BB"), "acac" + "ac")


def test_invariant_detects_missing_stem():
    f = figure_for(("aa", "BB", "cc"))
    _, stem = f.stems[0]
    f.tails.discard(stem)
    assert not f.invariant_holds()


def test_closures():
    assert close_faces(figure_for(("aa", "BB", "cc"))).closures == []
    f = close_faces(figure_for(E3_WORDS))
    assert len(f.closures) == 6
    for black, white in f.closures:
        assert f.is_black(f.origin[black]) and not f.is_black(f.origin[white])
    # arcs pair A's and C's of the matching word as parentheses
    opened, pairs = [], []
    stems = [k for k, ch in enumerate(E3_MATCHING_WORD) if ch in "AC"]
    for k in stems:
        if E3_MATCHING_WORD[k] == "A":
            opened.append(k)
        else:
            pairs.append((opened.pop(), k))
    bracket_stems = [x for kind, x in f.stems if kind in "AC"]
    stem_index = {x: n for n, x in enumerate(bracket_stems)}
    got = sorted((stem_index[b], stem_index[w]) for b, w in f.closures)
    assert got == sorted((stems.index(a), stems.index(c)) for a, c in pairs)


def test_one_closure_case():
    triples = [p for p in enumerate_triples(1, 1)]
    hits = [p for p in triples if "AaCc" in project(contour_word(psi(p))).matching_word]
    assert hits
    f = close_faces(figure_for(tuple(getattr(triple_to_words(hits[0]), x) for x in "abc")))
    assert len(f.closures) == 1


def test_unmatched_stem():
    f = figure_for(E3_WORDS)
    f.stems.reverse()
    with pytest.raises(UnmatchedStem):
        close_faces(f, check=False)


def test_complete_matches_forward_map(e1, e2):
    d1 = complete(close_faces(figure_for(("aa", "BB", "cc"))))
    assert d1 == to_separating(e1)
    d2 = complete(close_faces(figure_for(("aaa", "BBB", "ccc"))))
    assert d2 == to_separating(e2)
    d3 = complete(close_faces(figure_for(E3_WORDS)))
    assert validate_separating(d3) == (8, 5)
    assert len(d3.map.faces().faces) == 11


def test_psi_running_example(e3):
    d = psi(PathTriple.from_steps(*E3_PATHS))
    assert contour_word(d) == E3_CONTOUR
    assert d == to_separating(e3)
    assert phi(d).steps() == E3_PATHS


def test_after_completion_faces_are_quadrangles():
    for p in enumerate_triples(2, 2):
        d = psi(p)
        assert set(d.map.faces().degrees()) == {4}
