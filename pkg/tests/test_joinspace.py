"""Tests for parameter validation and topological invariants."""

import random
from math import gcd

import pytest

from sasakijoin.joinspace import (
    AbelianGroupDescriptor,
    JoinParams,
    ParameterError,
    Relation,
    bundle_type_wz,
    c1_coefficient,
    cohomology_group,
    cohomology_ring,
    diffeo_type_dim5,
    h4_order,
    homotopy_group,
    is_spin,
    iterated_join_ring,
    linking_form,
    p1_class,
    validate,
)


def valid_tuples(rng, count, p_max=4, entry_max=12):
    out = []
    while len(out) < count:
        p = rng.randint(1, p_max)
        l1 = rng.randint(1, entry_max)
        l2 = rng.randint(1, entry_max)
        w2 = rng.randint(1, entry_max)
        w1 = rng.randint(w2, entry_max)
        try:
            out.append(JoinParams(p, l1, l2, w1, w2))
        except ParameterError:
            continue
    return out


# ----------------------------------------------------------------------
# validation

def test_validate_accepts_known_good_tuples():
    assert validate(2, 5, 21, 1, 1) == JoinParams(2, 5, 21, 1, 1)
    assert validate(1, 1, 19, 3, 2).dim == 5


def test_validate_rejections_name_the_constraint():
    with pytest.raises(ParameterError) as err:
        validate(1, 1, 10, 3, 2)
    assert err.value.constraint == "gcd(l2,l1*w2) = 1"
    with pytest.raises(ParameterError) as err:
        validate(1, 1, 9, 3, 2)
    assert err.value.constraint == "gcd(l2,l1*w1) = 1"
    with pytest.raises(ParameterError) as err:
        validate(1, 1, 5, 2, 3)
    assert err.value.constraint == "w1 >= w2"
    with pytest.raises(ParameterError) as err:
        validate(1, 1, 5, 4, 2)
    assert err.value.constraint == "gcd(w1,w2) = 1"
    with pytest.raises(ParameterError) as err:
        validate(0, 1, 5, 1, 1)
    assert err.value.constraint == "p >= 1"
    with pytest.raises(ParameterError):
        validate(1, -1, 5, 1, 1)


def test_validation_implies_coprime_l1_l2():
    rng = random.Random(17)
    for params in valid_tuples(rng, 100):
        assert gcd(params.l1, params.l2) == 1


# ----------------------------------------------------------------------
# Chern coefficient and spin

def test_c1_examples():
    assert c1_coefficient(JoinParams(2, 1, 7, 1, 1)) == 19
    assert c1_coefficient(JoinParams(2, 2, 1, 1, 1)) == -1
    # balanced case: l2*(p+1) = l1*(w1+w2)
    assert c1_coefficient(JoinParams(1, 2, 3, 2, 1)) == 0


def test_spin_examples():
    assert not is_spin(JoinParams(2, 5, 21, 1, 1))
    assert is_spin(JoinParams(2, 1, 8, 1, 1))
    assert not is_spin(JoinParams(2, 1, 7, 1, 1))
    # p odd and l1 even: spin regardless of the rest
    assert is_spin(JoinParams(3, 2, 5, 3, 1))
    assert is_spin(JoinParams(1, 4, 3, 5, 1))


def test_spin_parity_link():
    rng = random.Random(29)
    for params in valid_tuples(rng, 200, p_max=5, entry_max=20):
        assert is_spin(params) == (c1_coefficient(params) % 2 == 0)


def test_spin_odd_p_characterization():
    # for odd p: spin iff l1 even or both weights odd
    rng = random.Random(31)
    for params in valid_tuples(rng, 200, p_max=5, entry_max=15):
        if params.p % 2 == 0:
            continue
        expected = params.l1 % 2 == 0 or (params.w1 % 2 == 1 and params.w2 % 2 == 1)
        assert is_spin(params) == expected


# ----------------------------------------------------------------------
# cohomology

def test_h4_order_examples():
    assert h4_order(JoinParams(2, 5, 21, 1, 1)) == 25
    assert h4_order(JoinParams(2, 1, 21, 25, 1)) == 25
    assert h4_order(JoinParams(2, 1, 3, 1, 1)) == 1
    with pytest.raises(ParameterError) as err:
        h4_order(JoinParams(1, 5, 21, 1, 1))
    assert err.value.constraint == "p > 1"


def test_h4_order_collision():
    # the square-order collision: (l1=a, w=(b,c)) vs (l1=1, w=(a^2*b*c, 1))
    rng = random.Random(43)
    for params in valid_tuples(rng, 120, p_max=3, entry_max=8):
        if params.p == 1:
            continue
        mirrored_w1 = params.l1 ** 2 * params.w1 * params.w2
        try:
            mirrored = JoinParams(params.p, 1, params.l2, mirrored_w1, 1)
        except ParameterError:
            continue
        assert h4_order(params) == h4_order(mirrored)


def test_cohomology_ring_presentations():
    assert str(cohomology_ring(JoinParams(2, 5, 21, 1, 1))) == \
        "Z[x,y]/(25*x^2, x^3, x^2*y, y^2)"
    assert str(cohomology_ring(JoinParams(3, 1, 1, 3, 2))) == \
        "Z[x,y]/(6*x^2, x^4, x^2*y, y^2)"
    assert str(cohomology_ring(JoinParams(2, 1, 3, 1, 1))) == \
        "Z[x,y]/(x^2, x^3, x^2*y, y^2)"
    ring = cohomology_ring(JoinParams(3, 2, 3, 5, 1))
    assert ring.generators == (("x", 2), ("y", 7))
    with pytest.raises(ParameterError) as err:
        cohomology_ring(JoinParams(1, 2, 3, 5, 1))
    assert "diffeo_type_dim5" in str(err.value)


def test_cohomology_groups():
    params = JoinParams(2, 5, 21, 1, 1)
    assert cohomology_group(params, 4) == AbelianGroupDescriptor(torsion=(25,))
    assert cohomology_group(params, 7) == AbelianGroupDescriptor(free_rank=1)
    assert cohomology_group(params, 1).is_trivial
    assert cohomology_group(params, 2) == AbelianGroupDescriptor(free_rank=1)
    assert cohomology_group(params, 5) == AbelianGroupDescriptor(free_rank=1)
    assert cohomology_group(params, 3).is_trivial
    assert cohomology_group(params, 6).is_trivial
    # torsion-free H^4 when w1*w2*l1^2 = 1
    assert cohomology_group(JoinParams(2, 1, 3, 1, 1), 4).is_trivial
    with pytest.raises(ParameterError):
        cohomology_group(params, 8)
    with pytest.raises(ParameterError):
        cohomology_group(params, -1)


def test_cohomology_euler_characteristic_and_duality():
    rng = random.Random(47)
    seen = 0
    for params in valid_tuples(rng, 300, p_max=4, entry_max=10):
        if params.p == 1:
            continue
        seen += 1
        groups = [cohomology_group(params, k) for k in range(params.dim + 1)]
        euler = sum((-1) ** k * g.free_rank for k, g in enumerate(groups))
        assert euler == 0
        for k, g in enumerate(groups):
            assert g.free_rank == groups[params.dim - k].free_rank
    assert seen > 100


def test_homotopy_groups():
    params = JoinParams(2, 5, 21, 1, 1)
    assert homotopy_group(params, 1).is_trivial
    assert homotopy_group(params, 2) == AbelianGroupDescriptor(free_rank=1)
    assert homotopy_group(params, 3) == AbelianGroupDescriptor(free_rank=1)
    assert homotopy_group(params, 4) == AbelianGroupDescriptor(torsion=(2,))
    with pytest.raises(ParameterError):
        homotopy_group(params, 5)
    with pytest.raises(ParameterError):
        homotopy_group(params, 0)
    with pytest.raises(ParameterError):
        homotopy_group(JoinParams(1, 1, 2, 1, 1), 2)


# ----------------------------------------------------------------------
# dimension-7 residues

def test_p1_residues():
    assert p1_class(JoinParams(2, 5, 21, 1, 1)) == 23
    assert p1_class(JoinParams(2, 1, 21, 25, 1)) == 22
    assert p1_class(JoinParams(2, 5, 29, 1, 1)) == 23
    with pytest.raises(ParameterError):
        p1_class(JoinParams(3, 5, 21, 1, 1))


def test_linking_form_residues():
    assert linking_form(JoinParams(2, 5, 21, 1, 1)) == 11
    assert linking_form(JoinParams(2, 5, 29, 1, 1)) == 14
    assert (11 + 14) % 25 == 0
    assert linking_form(JoinParams(2, 1, 7, 1, 1)) == 0
    with pytest.raises(ParameterError):
        linking_form(JoinParams(1, 5, 21, 1, 1))


def test_residues_agree_when_integers_and_modulus_agree():
    # same integer before reduction and same modulus force the same residue
    a = JoinParams(2, 5, 21, 1, 1)
    b = JoinParams(2, 5, 29, 1, 1)
    assert h4_order(a) == h4_order(b)
    pa = 3 * a.l2 ** 2 - a.l1 ** 2 * (a.w1 ** 2 + a.w2 ** 2)
    pb = 3 * b.l2 ** 2 - b.l1 ** 2 * (b.w1 ** 2 + b.w2 ** 2)
    assert pa % 25 == pb % 25 == p1_class(a)


# ----------------------------------------------------------------------
# special-case bundle types

def test_bundle_type_wz():
    assert bundle_type_wz(3, 4) == "trivial"
    assert bundle_type_wz(2, 5) == "nontrivial"
    assert bundle_type_wz(2, 4) == "trivial"
    assert bundle_type_wz(5, 7) == "trivial"
    with pytest.raises(ParameterError):
        bundle_type_wz(0, 4)


def test_diffeo_type_dim5():
    assert diffeo_type_dim5(1, 19, 3, 2) == "twisted"
    assert diffeo_type_dim5(2, 3, 1, 1) == "S2xS3"
    assert diffeo_type_dim5(1, 7, 1, 1) == "S2xS3"
    with pytest.raises(ParameterError):
        diffeo_type_dim5(1, 10, 3, 2)


def test_iterated_join_ring():
    ring = iterated_join_ring(1, 1, 2, 1)
    rendered = [str(r) for r in ring.relations]
    assert rendered == ["x^2", "x*y", "2*y^2", "z^2", "u^2", "z*u", "z*x", "u*x", "u*y"]
    assert dict(ring.generators) == {"x": 2, "y": 2, "z": 5, "u": 5}

    ring = iterated_join_ring(3, 2, 2, 1)
    rendered = [str(r) for r in ring.relations]
    assert "2*x*y" in rendered and "18*y^2" in rendered

    ring = iterated_join_ring(1, 1, 1, 1)
    assert str(ring.relations[2]) == "y^2"

    with pytest.raises(ParameterError):
        iterated_join_ring(2, 4, 1, 1)
    with pytest.raises(ParameterError):
        iterated_join_ring(1, 1, 2, 4)


def test_relation_and_group_invariants():
    with pytest.raises(ValueError):
        Relation(0, (("x", 2),))
    with pytest.raises(ValueError):
        Relation(1, (("x", 0),))
    with pytest.raises(ValueError):
        AbelianGroupDescriptor(torsion=(1,))
    with pytest.raises(ValueError):
        AbelianGroupDescriptor(free_rank=-1)
    assert str(AbelianGroupDescriptor(free_rank=1, torsion=(25,))) == "Z + Z/25"
