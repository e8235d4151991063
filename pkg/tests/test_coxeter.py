import json
import itertools

import pytest
from hypothesis import given, settings, strategies as st

from heckeduality.coxeter import (
    GroupTooLarge,
    MalformedMatrix,
    MixedSystems,
    NonSpherical,
    bruhat_leq,
    build_system,
    canonical_reduced_word,
    descents,
    elements_of_parabolic,
    flipped_complement,
    is_downward_closed,
    load_datum,
    longest_coset_representative,
    longest_element,
    multiply,
    named_bond_matrix,
    named_system,
)

from oracles import all_reduced_words, subword_products, tits_group_order

SMALL = ["A1", "A2", "B2", "G2", "A1xA1", "A3", "B3"]
ROSTER = SMALL + ["A4", "D4"]


@pytest.fixture(scope="module")
def systems():
    return {name: named_system(name) for name in ROSTER}


def w(system, *letters):
    """Element from 1-based letters."""
    return system.from_word([i - 1 for i in letters])


def test_build_examples():
    assert build_system([[1]]).order == 2
    assert build_system([[1, 3], [3, 1]]).order == 6
    assert build_system([[1, 4], [4, 1]]).order == 8


@pytest.mark.parametrize("name", ROSTER + ["A2xA1", "C3"])
def test_order_matches_tits_representation(name):
    system = named_system(name)
    assert system.order == tits_group_order(system.bond_matrix)


@pytest.mark.parametrize("name, order, n_roots", [
    ("A1", 2, 1), ("A2", 6, 3), ("B2", 8, 4), ("G2", 12, 6), ("A1xA1", 4, 2),
    ("A3", 24, 6), ("B3", 48, 9), ("A4", 120, 10), ("D4", 192, 12),
])
def test_roots_and_longest(systems, name, order, n_roots):
    system = systems[name]
    assert system.order == order
    assert len(system.positive_roots) == n_roots == system.longest.length


@pytest.mark.parametrize("name", SMALL)
def test_simple_reflection_permutes_roots(systems, name):
    system = systems[name]
    roots = set(system.positive_roots)
    signed = roots | {tuple(-x for x in r) for r in roots}
    for i in system.generators:
        images = {system.reflect(i, r) for r in roots}
        assert images <= signed
        flipped = [r for r in roots if system.reflect(i, r) not in roots]
        assert flipped == [tuple(1 if k == i else 0 for k in range(system.rank))]


def test_multiply_examples(systems):
    a2 = systems["A2"]
    s1, s2 = a2.simple(0), a2.simple(1)
    assert (s1 * s1).is_identity()
    assert s1 * s2 * s1 == s2 * s1 * s2
    w0s2 = multiply(a2.longest, s2)
    assert w0s2 == s2 * s1 and w0s2.length == 2


def test_mixed_systems(systems):
    with pytest.raises(MixedSystems):
        multiply(systems["A2"].simple(0), systems["B2"].simple(0))
    with pytest.raises(MixedSystems):
        bruhat_leq(systems["A2"].identity, systems["B2"].longest)


def test_longest_examples(systems):
    a2, b2 = systems["A2"], systems["B2"]
    assert longest_element(a2, []).is_identity()
    assert longest_element(a2).word == (0, 1, 0)
    assert longest_element(b2) == w(b2, 1, 2, 1, 2)
    assert longest_element(b2).length == 4


@pytest.mark.parametrize("name", ROSTER)
def test_longest_is_unique_maximum(systems, name):
    system = systems[name]
    for r in range(system.rank + 1):
        for subset in itertools.combinations(system.generators, r):
            inside = elements_of_parabolic(system, subset)
            top = max(x.length for x in inside)
            tops = [x for x in inside if x.length == top]
            assert tops == [system.longest_element(subset)]
            n_roots = sum(1 for rt in system.positive_roots
                          if all(rt[k] == 0 for k in system.generators if k not in subset))
            assert top == n_roots


def test_bruhat_examples(systems):
    a2 = systems["A2"]
    assert all(bruhat_leq(a2.identity, x) for x in a2.elements())
    assert bruhat_leq(w(a2, 1), w(a2, 2, 1))
    assert not bruhat_leq(w(a2, 1), w(a2, 2))


@pytest.mark.parametrize("name", ROSTER)
def test_bruhat_matches_subword_oracle(systems, name):
    system = systems[name]
    for y in system.elements():
        below = subword_products(system, y)
        assert below == system.bruhat_lower_set(y)
        for x in system.elements():
            assert system.bruhat_leq(x, y) == (x in below)


@pytest.mark.parametrize("name", ROSTER)
def test_longest_multiplication_reverses_bruhat(systems, name):
    system = systems[name]
    w0 = system.longest
    for x in system.elements():
        for y in system.bruhat_lower_set(x):
            assert system.bruhat_leq(w0 * x, w0 * y)
        assert (w0 * x).length == w0.length - x.length


def test_coset_representative_examples(systems):
    a2 = systems["A2"]
    u = longest_coset_representative(a2, {0})
    assert u == w(a2, 1, 2) and u.length == 2
    assert longest_coset_representative(a2, {0, 1}).is_identity()
    assert longest_coset_representative(a2, set()) == a2.longest


def test_flipped_complement_examples(systems):
    a1, a2 = named_system("A1"), systems["A2"]
    assert flipped_complement(a1, set()) == {a1.identity}
    assert flipped_complement(a2, {0}) == {a2.identity, w(a2, 1), w(a2, 2), w(a2, 2, 1)}
    assert flipped_complement(a2, {0, 1}) == frozenset()


def test_downward_closed_examples(systems):
    a2 = systems["A2"]
    assert is_downward_closed(a2, {a2.identity})
    assert is_downward_closed(a2, flipped_complement(a2, {0}))
    assert not is_downward_closed(a2, {w(a2, 1, 2)})


@pytest.mark.parametrize("name", ROSTER)
def test_parabolic_combinatorics(systems, name):
    system = systems[name]
    w0 = system.longest
    for r in range(system.rank + 1):
        for subset in itertools.combinations(system.generators, r):
            inside = elements_of_parabolic(system, subset)
            assert all(a * b in inside and a.inverse() in inside for a in inside for b in inside)
            assert is_downward_closed(system, inside)
            tau = flipped_complement(system, subset)
            assert len(tau) == system.order - len(inside)
            assert is_downward_closed(system, tau)
            u = longest_coset_representative(system, subset)
            assert w0.length == u.length + system.longest_element(subset).length
            below = system.bruhat_lower_set(u) - {u}
            assert not any(u.inverse() * v in inside for v in below)


@pytest.mark.parametrize("name", SMALL)
def test_canonical_word_is_least_reduced_word(systems, name):
    system = systems[name]
    for x in system.elements():
        words = all_reduced_words(x)
        assert canonical_reduced_word(x) == min(words)
        assert len(x.word) == x.length
        # the element does not depend on which reduced word builds it
        assert {system.from_word(word) for word in words} == {x}


@pytest.mark.parametrize("name", ROSTER)
def test_descents_and_inverse(systems, name):
    system = systems[name]
    for x in system.elements():
        assert x.inverse().length == x.length
        assert (x * x.inverse()).is_identity()
        for s in system.generators:
            assert (s in descents(x, "left")) == (x.lmul(s).length < x.length)
            assert (s in descents(x, "right")) == (x.rmul(s).length < x.length)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_length_subadditive(name, data):
    system = named_system(name)
    elements = system.elements()
    x = data.draw(st.sampled_from(elements))
    y = data.draw(st.sampled_from(elements))
    xy = x * y
    assert xy.length <= x.length + y.length
    additive = xy.length == x.length + y.length
    concatenated = system.from_word(x.word + y.word)
    assert concatenated == xy
    assert additive == (len(x.word + y.word) == xy.length)


def test_named_types():
    assert named_bond_matrix("A2xA1") == [[1, 3, 2], [3, 1, 2], [2, 2, 1]]
    assert named_system("G2").bond_matrix == ((1, 6), (6, 1))
    assert named_system("D4").order == 192
    with pytest.raises(MalformedMatrix):
        named_bond_matrix("Q7")
    with pytest.raises(MalformedMatrix):
        named_bond_matrix("D3")


@pytest.mark.parametrize("matrix", [
    [[1, 3], [2, 1]],
    [[1, 5], [5, 1]],
    [[2]],
    [[1, 3, 2], [3, 1]],
    [["a"]],
])
def test_malformed(matrix):
    with pytest.raises(MalformedMatrix):
        build_system(matrix)


@pytest.mark.parametrize("matrix", [
    [[1, 3, 3], [3, 1, 3], [3, 3, 1]],           # affine A2, a cycle
    [[1, 4, 2], [4, 1, 4], [2, 4, 1]],           # affine C2, a tree
    [[1, 6, 2], [6, 1, 3], [2, 3, 1]],           # affine G2
])
def test_non_spherical(matrix):
    with pytest.raises(NonSpherical):
        build_system(matrix)


def test_group_order_cap():
    system = named_system("B3", max_group_order=20)
    with pytest.raises(GroupTooLarge):
        system.elements()


def test_large_rank_is_lazy():
    e8 = named_system("E8")
    assert len(e8.positive_roots) == 120
    assert e8.longest.length == 120


def test_load_datum(tmp_path):
    path = tmp_path / "b2.json"
    path.write_text(json.dumps({"name": "myB2", "bond_matrix": [[1, 4], [4, 1]]}))
    system = load_datum(path)
    assert system.name == "myB2" and system.order == 8
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"name": "x", "bond_matrix": [[1, 7], [7, 1]]}))
    with pytest.raises(MalformedMatrix):
        load_datum(bad)
    garbage = tmp_path / "garbage.json"
    garbage.write_text("{not json")
    with pytest.raises(MalformedMatrix):
        load_datum(garbage)


def test_iteration_order_is_reproducible(systems):
    a3 = systems["A3"]
    again = named_system("A3")
    assert [x.word for x in a3.elements()] == [x.word for x in again.elements()]
    assert [x.word for x in flipped_complement(a3, {0})] == [
        x.word for x in flipped_complement(again, {0})]
