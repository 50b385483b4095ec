"""Upper ideals of the positive-root poset.

An upper ideal (the root-set shape of an ad-nilpotent ideal of the Borel)
is a subset I of the positive roots closed under moving up in the
dominance order.  Ideals are stored as bitsets over the root index of
their root system; all set operations are integer bit twiddling.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .rootsys import RationalVector, Root, RootSystem, _coords

__all__ = [
    "UpperIdeal",
    "IdealChain",
    "close_upward",
    "enumerate_ideals",
    "weight",
    "ideal_powers",
    "complement_chain",
    "meet",
    "join",
    "is_strictly_positive",
    "is_abelian",
]


@dataclass(frozen=True)
class UpperIdeal:
    """An upward-closed set of positive roots, as a bitset of root indices."""

    rs: RootSystem
    bits: int
    _validate: bool = field(default=True, repr=False, compare=False)

    def __post_init__(self):
        if self._validate:
            n = len(self.rs.positive_roots)
            if self.bits < 0 or self.bits >> n:
                raise ValueError("bitset out of range for this root system")
            bits = self.bits
            for i in _iter_bits(bits):
                for j, _ in self.rs.cover_up[i]:
                    if not (bits >> j) & 1:
                        raise ValueError(
                            f"not upward closed: {self.rs.positive_roots[i]} is in "
                            f"but {self.rs.positive_roots[j]} is out"
                        )

    @property
    def size(self) -> int:
        return self.bits.bit_count()

    def root_indices(self) -> list[int]:
        return list(_iter_bits(self.bits))

    def roots(self) -> tuple[Root, ...]:
        return tuple(self.rs.positive_roots[i] for i in _iter_bits(self.bits))

    def contains(self, root) -> bool:
        k = self.rs.root_index.get(_coords(root))
        return k is not None and bool((self.bits >> k) & 1)

    def generator_indices(self) -> tuple[int, ...]:
        """Indices of the minimal elements (the generating antichain)."""
        bits = self.bits
        return tuple(
            i
            for i in _iter_bits(bits)
            if not any((bits >> j) & 1 for j, _ in self.rs.cover_down[i])
        )

    def generators(self) -> tuple[Root, ...]:
        return tuple(self.rs.positive_roots[i] for i in self.generator_indices())

    def __repr__(self) -> str:
        gens = ",".join(str(list(r.coeffs)) for r in self.generators())
        return f"UpperIdeal({self.rs.label}, size={self.size}, gens=[{gens}])"


@dataclass(frozen=True)
class IdealChain:
    """A weakly descending chain of ideals; stalled means it never reached empty."""

    powers: tuple[UpperIdeal, ...]
    stalled: bool = False


def _iter_bits(bits: int) -> Iterator[int]:
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def close_upward(rs: RootSystem, generators) -> UpperIdeal:
    """Smallest upper ideal containing the given positive roots."""
    bits = 0
    stack = []
    for g in generators:
        k = rs.root_index.get(_coords(g))
        if k is None:
            raise ValueError(f"{g!r} is not a positive root of {rs.label}")
        if not (bits >> k) & 1:
            bits |= 1 << k
            stack.append(k)
    while stack:
        i = stack.pop()
        for j, _ in rs.cover_up[i]:
            if not (bits >> j) & 1:
                bits |= 1 << j
                stack.append(j)
    return UpperIdeal(rs, bits, _validate=False)


def enumerate_ideals(rs: RootSystem) -> Iterator[UpperIdeal]:
    """All upper ideals, by depth-first search over roots in falling height.

    A root may enter only when all its upper covers are already in, so every
    leaf is an upper ideal and each ideal is produced exactly once.  The
    exclude branch is taken first, so the empty ideal comes first and the
    full one last.
    """
    order = list(range(len(rs.positive_roots) - 1, -1, -1))
    cover_up = rs.cover_up

    def walk(pos: int, bits: int) -> Iterator[int]:
        if pos == len(order):
            yield bits
            return
        i = order[pos]
        yield from walk(pos + 1, bits)
        if all((bits >> j) & 1 for j, _ in cover_up[i]):
            yield from walk(pos + 1, bits | (1 << i))

    for bits in walk(0, 0):
        yield UpperIdeal(rs, bits, _validate=False)


def weight(ideal: UpperIdeal) -> RationalVector:
    """Sum of the roots of the ideal, as an exact coefficient vector."""
    rank = ideal.rs.rank
    total = [0] * rank
    for i in _iter_bits(ideal.bits):
        c = ideal.rs.positive_roots[i].coeffs
        for j in range(rank):
            total[j] += c[j]
    return RationalVector(tuple(Fraction(t) for t in total))


def _product_bits(rs: RootSystem, left: int, right: int) -> int:
    """Bitset of all root sums mu + nu with mu in left, nu in right."""
    out = 0
    right_idx = list(_iter_bits(right))
    sums = rs.sum_index
    for i in _iter_bits(left):
        for j in right_idx:
            k = sums.get((i, j))
            if k is not None:
                out |= 1 << k
    return out


def ideal_powers(ideal: UpperIdeal) -> IdealChain:
    """The descending chain I, I^2, I^3, ... ending with the empty ideal.

    I^k collects the roots expressible as mu + nu with mu in I^{k-1} and
    nu in I; it always reaches empty because heights grow with k.
    """
    rs = ideal.rs
    chain = [ideal]
    current = ideal.bits
    while current:
        current = _product_bits(rs, current, ideal.bits)
        chain.append(UpperIdeal(rs, current, _validate=False))
    return IdealChain(tuple(chain))


def complement_chain(ideal: UpperIdeal) -> IdealChain:
    """Chain of complements of the powers of the complement of the ideal.

    With m the complement of I in the positive roots and m^k the iterated
    root sums of m, term k is the complement of m union ... union m^k; the
    first term is I itself.  The chain is truncated (and flagged stalled)
    if it stops shrinking before reaching empty, which only happens when
    the ideal is not strictly positive.
    """
    rs = ideal.rs
    full = (1 << len(rs.positive_roots)) - 1
    m = full & ~ideal.bits
    used = m
    chain = [UpperIdeal(rs, full & ~used, _validate=False)]
    power = m
    while chain[-1].bits:
        power = _product_bits(rs, power, m)
        used |= power
        nxt = full & ~used
        if nxt == chain[-1].bits:
            return IdealChain(tuple(chain), stalled=True)
        chain.append(UpperIdeal(rs, nxt, _validate=False))
    return IdealChain(tuple(chain))


def _require_same(a: UpperIdeal, b: UpperIdeal) -> None:
    if a.rs is not b.rs:
        raise ValueError("ideals belong to different root systems")


def meet(a: UpperIdeal, b: UpperIdeal) -> UpperIdeal:
    """Intersection; an upper ideal again."""
    _require_same(a, b)
    return UpperIdeal(a.rs, a.bits & b.bits, _validate=False)


def join(a: UpperIdeal, b: UpperIdeal) -> UpperIdeal:
    """Union; an upper ideal again."""
    _require_same(a, b)
    return UpperIdeal(a.rs, a.bits | b.bits, _validate=False)


def is_strictly_positive(ideal: UpperIdeal) -> bool:
    """True when the ideal contains no simple root."""
    return all(not (ideal.bits >> k) & 1 for k in ideal.rs.simple_index)


def is_abelian(ideal: UpperIdeal) -> bool:
    """True when no two members (with repetition) sum to a root."""
    idx = ideal.root_indices()
    sums = ideal.rs.sum_index
    return all(sums.get((i, j)) is None for i in idx for j in idx)
