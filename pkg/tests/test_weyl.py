import random

import pytest

from weylspecht.rootsys import build_root_system, negate, parse_root
from weylspecht.weyl import (
    GroupLimitError,
    apply_to_root,
    compose,
    generate_group,
    identity,
    inverse,
    length,
    sign,
    simple_reflection,
    subgroup_generated,
    word_to_element,
)

CLASSICAL_ORDERS = {
    "A1": 2,
    "A2": 6,
    "A3": 24,
    "A4": 120,
    "B1": 2,
    "B2": 8,
    "B3": 48,
    "B4": 384,
    "C1": 2,
    "C2": 8,
    "C3": 48,
    "C4": 384,
    "D2": 4,
    "D3": 24,
    "D4": 192,
    "G2": 12,
    "F4": 1152,
}

SLOW_ORDERS = {"A5": 720, "A6": 5040, "B5": 3840, "C5": 3840, "D5": 1920}


@pytest.mark.parametrize("label,order", sorted(CLASSICAL_ORDERS.items()))
def test_group_orders(label, order):
    system = build_root_system(label)
    assert len(generate_group(system)) == order


@pytest.mark.slow
@pytest.mark.parametrize("label,order", sorted(SLOW_ORDERS.items()))
def test_group_orders_rank_five_plus(label, order):
    system = build_root_system(label)
    assert len(generate_group(system)) == order


def test_simple_reflection_negates_its_root(a3):
    t1 = simple_reflection(a3, 1)
    a1 = a3.simple_roots()[0]
    assert apply_to_root(a3, t1, a1) == negate(a1)


def test_simple_reflection_moves_neighbour(a3):
    t2 = simple_reflection(a3, 2)
    assert apply_to_root(a3, t2, parse_root(a3, "100")) == parse_root(a3, "110")


def test_reflections_are_involutions(a3):
    for i in (1, 2, 3):
        t = simple_reflection(a3, i)
        assert compose(t, t) == identity(a3)


def test_generator_index_range(a3):
    with pytest.raises(IndexError):
        simple_reflection(a3, 0)
    with pytest.raises(IndexError):
        simple_reflection(a3, 4)


def test_word_applies_rightmost_first(a3):
    w = word_to_element(a3, (1, 2))
    assert apply_to_root(a3, w, parse_root(a3, "100")) == parse_root(a3, "010")


def test_word_images_d4(d4):
    w = word_to_element(d4, (1, 2, 3))
    images = [
        apply_to_root(d4, w, parse_root(d4, t)) for t in ("1000", "0100", "0001")
    ]
    assert images == [parse_root(d4, t) for t in ("0100", "0010", "1101")]
    assert apply_to_root(d4, w, parse_root(d4, "1110")) == (-1, 0, 0, 0)


def test_empty_word_is_identity(a3):
    assert word_to_element(a3, ()) == identity(a3)


def test_word_index_out_of_range(a3):
    with pytest.raises(IndexError):
        word_to_element(a3, (1, 5))


def test_inverse_and_compose(a3, w_a3):
    e = identity(a3)
    assert inverse(e) == e
    for w in w_a3:
        assert compose(w, inverse(w)) == e
        assert compose(inverse(w), w) == e


def test_inverse_of_product(a3):
    a = word_to_element(a3, (1, 2))
    b = word_to_element(a3, (2, 3))
    assert inverse(compose(a, b)) == compose(inverse(b), inverse(a))


def test_mixed_systems_rejected(a3, g2):
    with pytest.raises(ValueError):
        compose(identity(a3), identity(g2))
    with pytest.raises(ValueError):
        apply_to_root(g2, identity(a3), (1, 0))


def test_g2_word_of_order_two(g2):
    w = word_to_element(g2, (2, 1, 2, 1, 2))
    assert compose(w, w) == identity(g2)
    assert sign(g2, w) == -1


def test_identity_first_and_words_reduced(a3, w_a3, g2, w_g2, d4, w_d4):
    for system, group in ((a3, w_a3), (g2, w_g2), (d4, w_d4)):
        assert group[0] == identity(system)
        assert group.words[0] == ()
        for w, word in zip(group.elements, group.words):
            assert word_to_element(system, word) == w
            assert len(word) == length(system, w)


def test_generation_is_deterministic(a3, w_a3):
    again = generate_group(a3)
    assert again.elements == w_a3.elements
    assert again.words == w_a3.words


def test_group_limit(a3):
    with pytest.raises(GroupLimitError):
        generate_group(a3, limit=10)


def test_length_and_sign_basics(a3, w_a3):
    e = identity(a3)
    assert length(a3, e) == 0 and sign(a3, e) == 1
    for i in (1, 2, 3):
        t = simple_reflection(a3, i)
        assert length(a3, t) == 1 and sign(a3, t) == -1
    for w in w_a3:
        assert length(a3, w) == length(a3, inverse(w))


def test_sign_is_multiplicative(d4, w_d4):
    rng = random.Random(97)
    elems = w_d4.elements
    for _ in range(500):
        a = rng.choice(elems)
        b = rng.choice(elems)
        assert sign(d4, compose(a, b)) == sign(d4, a) * sign(d4, b)


def test_subgroup_single_reflection(g2):
    a1 = g2.simple_roots()[0]
    sub = subgroup_generated(g2, [a1])
    assert len(sub) == 2
    assert identity(g2) in sub


def test_subgroup_long_roots_g2(g2, w_g2):
    gens = [parse_root(g2, "01"), parse_root(g2, "31")]
    sub = subgroup_generated(g2, gens)
    assert len(sub) == 6
    expected_words = [(), (2,), (1, 2, 1), (2, 1, 2, 1), (1, 2, 1, 2), (2, 1, 2, 1, 2)]
    expected = {word_to_element(g2, w).perm for w in expected_words}
    assert {w.perm for w in sub} == expected


def test_subgroup_empty_generators(a3):
    assert subgroup_generated(a3, []) == (identity(a3),)


def test_subgroup_limit(d4):
    simples = d4.simple_roots()
    with pytest.raises(GroupLimitError):
        subgroup_generated(d4, simples, limit=10)


def test_permutations_commute_with_negation(a3, w_a3, g2, w_g2):
    for system, group in ((a3, w_a3), (g2, w_g2)):
        pc = system.positive_count
        for w in group:
            for i in range(pc):
                assert w.perm[i + pc] == (w.perm[i] + pc) % (2 * pc)


def test_element_serialization(a3, w_a3):
    from weylspecht.weyl import element_to_json

    w = word_to_element(a3, (1, 2))
    doc = element_to_json(w_a3, w)
    assert doc["word"] == [1, 2]
    assert sorted(doc["perm"]) == list(range(len(a3.roots)))
    assert word_to_element(a3, doc["word"]) == w
