"""Dominant regions of the height-one hyperplane arrangement."""

from __future__ import annotations

from fractions import Fraction

import pytest

from adnil.affine import alcove_barycenter, simple_reflection, w_min
from adnil.ideals import enumerate_ideals
from adnil.normalizers import normalizer
from adnil.rootsys import build, inner
from adnil.shi import (
    Constraint,
    LinearConstraintSystem,
    alcove_membership,
    feasible,
    is_wall,
    region_of,
    region_witness,
)


def test_feasible_solves_strict_systems_exactly():
    system = LinearConstraintSystem(
        2,
        (
            Constraint((Fraction(1), Fraction(0)), Fraction(1), ">"),
            Constraint((Fraction(0), Fraction(1)), Fraction(1), "<"),
            Constraint((Fraction(1), Fraction(1)), Fraction(3), "<"),
        ),
    )
    result = feasible(system)
    assert result.feasible
    assert system.holds_at(result.witness.coords)
    assert all(isinstance(c, Fraction) for c in result.witness.coords)


def test_feasible_detects_empty_systems():
    system = LinearConstraintSystem(
        1,
        (
            Constraint((Fraction(1),), Fraction(0), ">"),
            Constraint((Fraction(1),), Fraction(0), "<"),
        ),
    )
    assert not feasible(system).feasible


def test_every_region_is_nonempty_and_separated():
    for label in ("A2", "B2", "G2"):
        rs = build(label)
        ideals = list(enumerate_ideals(rs))
        witnesses = []
        for c in ideals:
            x = region_witness(c)
            assert region_of(c).holds_at(x.coords)
            witnesses.append(x)
        # a witness for one region violates every other region
        for i, c in enumerate(ideals):
            for j, x in enumerate(witnesses):
                assert region_of(c).holds_at(x.coords) == (i == j)


def test_region_constraints_split_by_height_one():
    rs = build("A2")
    for c in enumerate_ideals(rs):
        x = region_witness(c).coords
        for k, root in enumerate(rs.positive_roots):
            value = inner(rs, x, root.coeffs)
            if (c.bits >> k) & 1:
                assert value > 1
            else:
                assert 0 < value < 1


def test_barycenter_lies_in_the_empty_region():
    for label in ("A3", "C3", "G2"):
        rs = build(label)
        empty = next(iter(enumerate_ideals(rs)))
        assert empty.bits == 0
        assert region_of(empty).holds_at(alcove_barycenter(rs).coords)


def test_region_witness_is_memoized():
    rs = build("B2")
    c = list(enumerate_ideals(rs))[2]
    assert region_witness(c) is region_witness(c)


def test_wall_test_matches_normalizer():
    for label in ("A3", "B2", "G2"):
        rs = build(label)
        for c in enumerate_ideals(rs):
            levi = normalizer(c).levi
            for a in range(rs.rank):
                assert is_wall(c, a) == (a in levi), (label, c, a)


def test_is_wall_rejects_bad_index():
    rs = build("A2")
    c = next(iter(enumerate_ideals(rs)))
    with pytest.raises(ValueError):
        is_wall(c, 2)
    with pytest.raises(ValueError):
        is_wall(c, -1)


def test_minimal_alcove_sits_in_its_region():
    for label in ("A2", "A3", "B2"):
        rs = build(label)
        ideals = list(enumerate_ideals(rs))
        for c in ideals:
            assert alcove_membership(w_min(c), c)
        for c in ideals:
            w = w_min(c)
            for other in ideals:
                if other.bits != c.bits:
                    assert not alcove_membership(w, other)


def test_alcove_membership_requires_dominance():
    rs = build("A2")
    c = next(iter(enumerate_ideals(rs)))
    with pytest.raises(ValueError):
        alcove_membership(simple_reflection(rs, 1), c)
