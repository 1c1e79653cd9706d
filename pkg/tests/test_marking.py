import random
from fractions import Fraction

import pytest

from paintedlie.autgroup import DiagramAut, automorphisms
from paintedlie.errors import DiagramMismatch, NotAdmissible, WrongCase
from paintedlie.marking import (
    Marking,
    classify_inner,
    compose,
    identity_marking,
    invariant,
    invert,
    is_admissible_equal_rank,
    make_marking,
    marking_order,
    outer_class,
)
from paintedlie.painted import RealFormName, construct
from paintedlie.verify import random_marking


def _form(text):
    return construct(RealFormName.parse(text))


def _aut_elements(diagram):
    return automorphisms(diagram.scheme, diagram.color).elements


def _marking(diagram, node_map, angle_map):
    scheme = diagram.scheme
    perm = tuple(scheme.index(node_map.get(v, v)) for v in scheme.nodes)
    angles = [Fraction(angle_map.get(v, 0)) for v in scheme.nodes]
    return make_marking(diagram, perm, angles)


def test_identity_is_two_sided_unit():
    diagram = _form("su(2,2)")
    m = _marking(diagram, {2: 0, 0: 2}, {1: "1/3", 3: "1/5"})
    e = identity_marking(diagram)
    assert compose(m, e) == m
    assert compose(e, m) == m


def test_trivial_permutation_parts_add_pointwise():
    diagram = _form("su(2,1)")
    m1 = _marking(diagram, {}, {1: "1/4", 2: "1/3"})
    m2 = _marking(diagram, {}, {1: "1/2", 0: "2/3"})
    composed = compose(m1, m2)
    assert composed.aut.is_identity
    assert composed.angle_of(1) == Fraction(3, 4)
    assert composed.angle_of(2) == Fraction(1, 3)
    assert composed.angle_of(0) == Fraction(2, 3)


def test_su11_swap_composition_by_hand():
    diagram = _form("su(1,1)")  # nodes (1, 0), both black
    swap = {1: 0, 0: 1}
    m1 = _marking(diagram, swap, {1: "1/3", 0: "1/5"})
    m2 = _marking(diagram, swap, {1: "1/7", 0: "1/2"})
    composed = compose(m1, m2)
    assert composed.aut.is_identity
    # t_v = t1_v + t2_{swap(v)}
    assert composed.angle_of(1) == Fraction(1, 3) + Fraction(1, 2)
    assert composed.angle_of(0) == (Fraction(1, 5) + Fraction(1, 7)) % 1


def test_group_laws_randomized():
    rng = random.Random(424242)
    for text in ["su(2,2)", "sl(4,R)", "so(2,7)"]:
        diagram = _form(text)
        auts = _aut_elements(diagram)
        e = identity_marking(diagram)
        for _ in range(200):
            m1 = random_marking(diagram, auts, rng)
            m2 = random_marking(diagram, auts, rng)
            m3 = random_marking(diagram, auts, rng)
            assert compose(compose(m1, m2), m3) == compose(m1, compose(m2, m3))
            assert compose(m1, invert(m1)) == e
            assert compose(invert(m1), m1) == e


def test_invariant_examples():
    diagram = _form("su(2,1)")
    assert invariant(identity_marking(diagram)) == 0
    m = _marking(diagram, {}, {2: "1/4", 0: "3/4"})
    assert invariant(m) == 0

    sl3 = _form("sl(3,R)")
    m = _marking(sl3, {}, {1: "1/2"})
    assert invariant(m) == Fraction(1, 2)


def test_outer_class_examples():
    sl3 = _form("sl(3,R)")
    cls = outer_class(_marking(sl3, {}, {1: "1/2"}))
    assert cls.aut.is_identity and cls.sign == -1

    su21 = _form("su(2,1)")
    cls = outer_class(_marking(su21, {}, {1: "1/4"}))
    assert cls.sign == 1 and cls.r == 1

    ident = outer_class(identity_marking(su21))
    assert ident.is_identity


def test_outer_class_not_admissible():
    sl3 = _form("sl(3,R)")
    with pytest.raises(NotAdmissible):
        outer_class(_marking(sl3, {}, {1: "1/4"}))


def test_classify_inner_cases():
    su21 = _form("su(2,1)")
    assert classify_inner(identity_marking(su21)).inner
    swapped = _marking(su21, {2: 0, 0: 2}, {})
    assert not classify_inner(swapped).inner

    sl3 = _form("sl(3,R)")
    half = _marking(sl3, {}, {1: "1/2"})
    result = classify_inner(half)
    assert not result.inner and result.outer_class.sign == -1
    assert classify_inner(_marking(sl3, {}, {0: "1/2"})).inner


def test_marking_order_examples():
    su21 = _form("su(2,1)")
    assert marking_order(identity_marking(su21)) == 1
    assert marking_order(_marking(su21, {}, {1: "1/3"})) == 3

    su22 = _form("su(2,2)")
    swap = _marking(su22, {2: 0, 0: 2}, {2: "1/4", 0: "1/4"})
    # black 2-orbit with angle sum 1/2: order 2 * 2 = 4
    assert marking_order(swap) == 4
    power = swap
    for _ in range(3):
        power = compose(power, swap)
    assert power == identity_marking(su22)


def test_marking_order_matches_iteration():
    rng = random.Random(777)
    for text in ["su(2,2)", "sl(4,R)", "so(4,4)"]:
        diagram = _form(text)
        auts = _aut_elements(diagram)
        e = identity_marking(diagram)
        for _ in range(170):
            m = random_marking(diagram, auts, rng)
            order = marking_order(m)
            power = e
            for k in range(1, order + 1):
                power = compose(m, power)
                if k < order:
                    assert power != e
            assert power == e


def test_is_admissible_equal_rank():
    su21 = _form("su(2,1)")
    assert is_admissible_equal_rank(identity_marking(su21))
    assert is_admissible_equal_rank(_marking(su21, {}, {2: "1/4", 0: "3/4"}))
    assert not is_admissible_equal_rank(_marking(su21, {}, {2: "1/4"}))
    with pytest.raises(WrongCase):
        is_admissible_equal_rank(identity_marking(_form("sl(3,R)")))
    with pytest.raises(WrongCase):
        is_admissible_equal_rank(_marking(su21, {2: 0, 0: 2}, {}))


def test_homomorphism_quick_property():
    rng = random.Random(31415)
    for text in ["su(2,2)", "sl(4,R)"]:
        diagram = _form(text)
        auts = _aut_elements(diagram)
        for _ in range(150):
            m1 = random_marking(diagram, auts, rng)
            m2 = random_marking(diagram, auts, rng)
            lhs = outer_class(compose(m1, m2))
            rhs = outer_class(m1).compose(outer_class(m2))
            assert lhs.aut.perm == rhs.aut.perm and lhs.sign == rhs.sign


def test_compose_requires_same_diagram():
    with pytest.raises(DiagramMismatch):
        compose(identity_marking(_form("su(2,1)")), identity_marking(_form("su(3,1)")))


def test_marking_rejects_color_breaking_automorphism():
    diagram = _form("su(3,1)")  # blacks {0, 3} on the affine A3 cycle
    scheme = diagram.scheme
    rotation = {1: 2, 2: 3, 3: 0, 0: 1}
    perm = tuple(scheme.index(rotation[v]) for v in scheme.nodes)
    DiagramAut(scheme, perm)  # a scheme automorphism, but not color-preserving
    with pytest.raises(ValueError):
        make_marking(diagram, perm, [0] * scheme.n)


def test_marking_json_round_trip():
    diagram = _form("sl(4,R)")
    m = _marking(diagram, {0: 2, 2: 0}, {1: "1/2", 0: "1/3"})
    again = Marking.from_dict(diagram, m.to_dict())
    assert again == m
