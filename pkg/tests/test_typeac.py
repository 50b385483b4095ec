"""Coordinate models for the special linear and symplectic families."""

from __future__ import annotations

from math import comb

import pytest

from adnil.affine import is_minimax
from adnil.ideals import enumerate_ideals, ideal_powers, is_abelian
from adnil.normalizers import ParabolicLabel, nilradical, normalizer
from adnil.typeac import (
    FerrersIdeal,
    SignedWord,
    SymplecticIdeal,
    ballot,
    decode_word,
    desymmetrize,
    dual_A,
    dual_C,
    encode_word,
    fiber_A,
    fiber_C,
    fiber_minimax_C,
    fiber_minimum_A,
    from_upper_ideal_A,
    from_upper_ideal_C,
    is_minimax_A,
    is_minimax_C,
    minimax_fiber_count_C,
    minimax_fiber_polynomial,
    normalizer_A,
    normalizer_C,
    symmetrize,
)
from adnil.counting import catalan, directed_animals, motzkin, riordan
from adnil.rootsys import build


def _subsets(universe):
    items = sorted(universe)
    for mask in range(1 << len(items)):
        yield {items[k] for k in range(len(items)) if mask >> k & 1}


def _label(rank, removed):
    return ParabolicLabel(
        rank, frozenset(l - 1 for l in range(1, rank + 1) if l not in removed)
    )


def test_ferrers_validation():
    FerrersIdeal(3, ((1, 3), (2, 4)))
    with pytest.raises(ValueError):
        FerrersIdeal(3, ((3, 3),))  # needs i < j
    with pytest.raises(ValueError):
        FerrersIdeal(3, ((1, 5),))  # out of range
    with pytest.raises(ValueError):
        FerrersIdeal(3, ((1, 3), (1, 3)))  # duplicate


def test_symplectic_validation():
    SymplecticIdeal(2, ((1, 3),))
    SymplecticIdeal(3, ((1, 4), (2, 5)))
    with pytest.raises(ValueError):
        SymplecticIdeal(2, ((1, 4), (2, 3)))  # second slot must increase
    with pytest.raises(ValueError):
        SymplecticIdeal(2, ((4, 1),))
    with pytest.raises(ValueError):
        SymplecticIdeal(2, ((2, 5),))  # beyond the antidiagonal


def test_signed_word_validation():
    SignedWord((1, -1, 0, 1))
    with pytest.raises(ValueError):
        SignedWord((-1,))
    with pytest.raises(ValueError):
        SignedWord((1, 2))


def test_ferrers_round_trip_and_membership():
    for n in range(1, 6):
        rs = build(f"A{n}")
        for c in enumerate_ideals(rs):
            f = from_upper_ideal_A(c)
            assert f.to_upper_ideal().bits == c.bits
            assert len(f.member_pairs()) == c.size
            assert normalizer_A(f) == normalizer(c)


def test_symplectic_round_trip_and_membership():
    for n in range(2, 5):
        rs = build(f"C{n}")
        for c in enumerate_ideals(rs):
            s = from_upper_ideal_C(c)
            assert s.to_upper_ideal().bits == c.bits
            assert len(s.member_pairs()) == c.size
            assert normalizer_C(s) == normalizer(c)
            cbar = symmetrize(s)
            assert desymmetrize(cbar) == s
            # mirror symmetry of the doubled shape
            m = 2 * n
            pairs = set(cbar.member_pairs())
            assert all((m + 1 - b, m + 1 - a) in pairs for (a, b) in pairs)


def test_fiber_a_counts_and_contents():
    for n in range(1, 6):
        rs = build(f"A{n}")
        by_label = {}
        for c in enumerate_ideals(rs):
            by_label.setdefault(normalizer(c), set()).add(c.bits)
        total = 0
        for removed in _subsets(range(1, n + 1)):
            s = len(removed)
            members = fiber_A(n, removed)
            assert len(members) == motzkin(s), (n, removed)
            assert {c.to_upper_ideal().bits for c in members} == by_label.get(
                _label(n, removed), set()
            )
            total += len(members)
        assert total == catalan(n + 1)


def test_fiber_a_minimum():
    for n in range(1, 6):
        rs = build(f"A{n}")
        for removed in _subsets(range(1, n + 1)):
            s = len(removed)
            members = {c.to_upper_ideal().bits for c in fiber_A(n, removed)}
            mini = fiber_minimum_A(n, removed).to_upper_ideal()
            assert mini.bits in members
            assert all(mini.bits & b == mini.bits for b in members)
            assert is_abelian(mini)
            # the minimum is the floor(s/2)+1 power of the nilradical
            chain = ideal_powers(nilradical(rs, _label(n, removed)))
            assert chain.powers[s // 2].bits == mini.bits


def test_fiber_minimum_a_generators_closed_form():
    members = sorted(fiber_minimum_A(6, {2, 4, 5}).pairs)
    # members of the removed set at positions t and floor(s/2)+t, plus one
    assert members == [(2, 5), (4, 6)]
    assert fiber_minimum_A(5, {1, 2, 3, 4}).pairs == ((1, 4), (2, 5))


def test_duality_a_is_an_involution_with_minimax_exchange():
    for n in range(1, 6):
        rs = build(f"A{n}")
        borel = ParabolicLabel(n, frozenset())
        n_mm = 0
        n_self = 0
        for c in enumerate_ideals(rs):
            f = from_upper_ideal_A(c)
            d = dual_A(f)
            assert dual_A(d) == f
            mm = is_minimax_A(f)
            assert mm == is_minimax(c)
            assert mm == (normalizer_A(d) == borel)
            assert is_minimax_A(d) == (normalizer_A(f) == borel)
            n_mm += mm
            n_self += d == f
        assert n_mm == motzkin(n)
        assert n_self == (catalan(n // 2) if n % 2 == 0 else 0)


def test_minimax_fiber_catalan_in_type_a():
    for n in range(1, 6):
        for removed in _subsets(range(1, n + 1)):
            s = len(removed)
            got = sum(1 for c in fiber_A(n, removed) if is_minimax_A(c))
            assert got == (catalan(s // 2) if s % 2 == 0 else 0), (n, removed)


def test_minimax_corank_in_type_a():
    # minimax ideals with k generators have exactly 2k walls removed
    for n in range(1, 6):
        for c in enumerate_ideals(build(f"A{n}")):
            f = from_upper_ideal_A(c)
            if is_minimax_A(f):
                assert normalizer_A(f).srk == n - 2 * len(f.pairs)


def test_fiber_c_counts_and_contents():
    for n in range(2, 5):
        rs = build(f"C{n}")
        by_label = {}
        for c in enumerate_ideals(rs):
            by_label.setdefault(normalizer(c), set()).add(c.bits)
        total = 0
        for removed in _subsets(range(1, n + 1)):
            members = fiber_C(n, removed)
            core = sum(1 for l in removed if l != n)
            assert len(members) == directed_animals(core + 1), (n, removed)
            assert {c.to_upper_ideal().bits for c in members} == by_label.get(
                _label(n, removed), set()
            )
            total += len(members)
        assert total == comb(2 * n, n)


def test_fiber_c_minimum_is_unique_and_abelian():
    for n in range(2, 5):
        rs = build(f"C{n}")
        for removed in _subsets(range(1, n + 1)):
            bits = sorted(c.to_upper_ideal().bits for c in fiber_C(n, removed))
            minimal = [b for b in bits if all(b & o == b for o in bits)]
            assert len(minimal) == 1
            from adnil.ideals import UpperIdeal

            assert is_abelian(UpperIdeal(rs, minimal[0]))


def test_word_coding_round_trips():
    for n in range(2, 5):
        for removed in _subsets(range(1, n)):
            for c in fiber_C(n, removed):
                word = encode_word(c)
                assert decode_word(n, removed, word) == c
    with pytest.raises(ValueError):
        decode_word(3, {3}, SignedWord(()))  # last coordinate not allowed


def test_last_coordinate_bijection():
    # fibers over E and over E plus the last coordinate share the same words
    for n in range(2, 5):
        for removed in _subsets(range(1, n)):
            words = sorted(encode_word(c).letters for c in fiber_C(n, removed))
            partner = sorted(
                encode_word(c).letters for c in fiber_C(n, removed | {n})
            )
            assert words == partner


def test_minimax_fibers_in_type_c():
    for n in range(2, 5):
        for removed in _subsets(range(1, n + 1)):
            members = fiber_minimax_C(n, removed)
            expected = [c for c in fiber_C(n, removed) if is_minimax_C(c)]
            assert {c.pairs for c in members} == {c.pairs for c in expected}
            if n in removed:
                assert members == []
            else:
                assert len(members) == minimax_fiber_count_C(len(removed))


def test_duality_c_through_symmetrization():
    for n in range(2, 5):
        rs = build(f"C{n}")
        for c in enumerate_ideals(rs):
            s = from_upper_ideal_C(c)
            assert dual_C(dual_C(s)) == s
            assert symmetrize(dual_C(s)) == dual_A(symmetrize(s))
            assert is_minimax_C(s) == is_minimax(c)


def test_minimax_polynomial():
    for n in range(2, 7):
        poly = minimax_fiber_polynomial(n)
        assert len(poly) == n
        assert sum(poly) == directed_animals(n)
        assert sum((-1) ** s * v for s, v in enumerate(poly)) == riordan(n - 1)
    assert minimax_fiber_polynomial(4) == tuple(
        sum(
            1
            for removed in _subsets(range(1, 4))
            if len(removed) == s
            for _ in fiber_minimax_C(4, removed)
        )
        for s in range(4)
    )


def test_ballot_and_minimax_fiber_count():
    for s in range(21):
        assert ballot(s) == comb(s, s // 2)
        assert minimax_fiber_count_C(s) == comb(s, s // 2)
    with pytest.raises(ValueError):
        ballot(-1)


def test_desymmetrize_rejects_asymmetric_shapes():
    with pytest.raises(ValueError):
        desymmetrize(FerrersIdeal(3, ((1, 2),)))  # odd rank
    with pytest.raises(ValueError):
        desymmetrize(FerrersIdeal(4, ((1, 2),)))  # not mirror symmetric


def test_symmetrize_pinned_example():
    # sp_4: the long root pair (1, 4) doubles to the single middle cell
    s = SymplecticIdeal(2, ((1, 4),))
    assert symmetrize(s).pairs == ((1, 4),)
    s = SymplecticIdeal(2, ((1, 3),))
    assert sorted(symmetrize(s).pairs) == [(1, 3), (2, 4)]
