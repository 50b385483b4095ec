"""Integer sequences and exact counts of ideals whose normalizer is the Borel.

Three independent routes produce the same counts: closed-form sequence
formulas, coefficient extraction from a truncated Laurent product built
from the node marks of the extended diagram, and brute-force enumeration
of lattice points in two bounded simplices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .rootsys import RationalVector, RootSystem, in_coroot_lattice

__all__ = [
    "LaurentPoly",
    "catalan",
    "motzkin",
    "riordan",
    "central_trinomial",
    "next_to_central_trinomial",
    "directed_animals",
    "extended_marks",
    "gf_count",
    "gf_count_from_marks",
    "count_sp2n_borel",
    "count_so2n_borel",
    "LatticeCount",
    "lattice_count",
    "IdentityCheck",
    "verify_identities",
]


@dataclass(frozen=True)
class LaurentPoly:
    """A Laurent polynomial on a bounded degree window, coefficients from lo up."""

    lo: int
    coeffs: tuple[int, ...]

    def coefficient(self, degree: int) -> int:
        k = degree - self.lo
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def multiply(self, other: LaurentPoly, hi: int) -> LaurentPoly:
        """Product truncated above degree hi; lower degrees are kept exactly."""
        lo = self.lo + other.lo
        out = [0] * max(hi - lo + 1, 0)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            base = self.lo + i + other.lo
            if base > hi:
                continue
            for j in range(min(hi - base, len(other.coeffs) - 1) + 1):
                b = other.coeffs[j]
                if b:
                    out[base + j - lo] += a * b
        return LaurentPoly(lo, tuple(out))


def _guarded_binom(a: int, b: int) -> int:
    """comb with the convention that out-of-range lower indices give 0."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def catalan(i: int) -> int:
    """1/(i+1) * binom(2i, i)."""
    if i < 0:
        raise ValueError("argument must be nonnegative")
    return comb(2 * i, i) // (i + 1)


def motzkin(s: int) -> int:
    """Sum over r of binom(s, 2r) * catalan(r)."""
    if s < 0:
        raise ValueError("argument must be nonnegative")
    return sum(comb(s, 2 * r) * catalan(r) for r in range(s // 2 + 1))


def riordan(n: int) -> int:
    """Alternating sum over j of binom(n, j) * catalan(j)."""
    if n < 0:
        raise ValueError("argument must be nonnegative")
    return sum((-1) ** (n - j) * comb(n, j) * catalan(j) for j in range(n + 1))


def central_trinomial(n: int) -> int:
    """Sum over k of n! / (k! k! (n-2k)!)."""
    if n < 0:
        raise ValueError("argument must be nonnegative")
    return sum(comb(n, 2 * k) * comb(2 * k, k) for k in range(n // 2 + 1))


def next_to_central_trinomial(n: int) -> int:
    """Sum over k of n! / (k! (k+1)! (n-2k-1)!)."""
    if n < 0:
        raise ValueError("argument must be nonnegative")
    return sum(
        comb(n, 2 * k + 1) * comb(2 * k + 1, k) for k in range((n + 1) // 2)
    )


def directed_animals(n: int) -> int:
    """Sum over q of binom(q, floor(q/2)) * binom(n-1, q)."""
    if n < 1:
        raise ValueError("argument must be at least 1")
    return sum(comb(q, q // 2) * comb(n - 1, q) for q in range(n))


def extended_marks(family: str, rank: int) -> tuple[int, ...]:
    """All node marks of the extended diagram, the extra node's 1 first.

    Closed forms for the four classical families at any rank, so counts can
    be produced beyond the rank caps of build().
    """
    if family == "A" and rank >= 1:
        return (1,) * (rank + 1)
    if family == "B" and rank >= 2:
        return (1, 1) + (2,) * (rank - 1)
    if family == "C" and rank >= 2:
        return (1,) + (2,) * (rank - 1) + (1,)
    if family == "D" and rank >= 3:
        return (1, 1) + (2,) * (rank - 3) + (1, 1)
    raise ValueError(f"no closed-form marks for family {family!r} rank {rank}")


def _mark_factor(c: int, hi: int) -> LaurentPoly:
    """x^-c + x^c + x^2c + ... up to degree hi; no constant term."""
    coeffs = [0] * (hi + c + 1)
    coeffs[0] = 1
    for d in range(c, hi + 1, c):
        coeffs[d + c] = 1
    return LaurentPoly(-c, tuple(coeffs))


def gf_count_from_marks(marks, target: int, padding: int = 0) -> int:
    """Coefficient of x^target in the product of mark factors, over the 1-count.

    marks must list every node of the extended diagram, so it contains at
    least one 1 and the divisor (the number of 1s) is positive.  padding
    widens the truncation window; the result must not depend on it.
    """
    marks = tuple(marks)
    if target not in (1, -1):
        raise ValueError("target degree must be +1 or -1")
    if not marks or any(c < 1 for c in marks):
        raise ValueError("marks must be positive integers")
    ones = sum(1 for c in marks if c == 1)
    if ones == 0:
        raise ValueError("marks must include the extra node's mark 1")
    # A later factor lowers a partial degree by at most its mark, so degrees
    # above (sum of all marks) + 2 can never return to a target of +-1.
    hi = sum(marks) + 2 + padding
    product = LaurentPoly(0, (1,))
    for c in marks:
        product = product.multiply(_mark_factor(c, hi), hi)
    value = product.coefficient(target)
    if value % ones:
        raise AssertionError(f"coefficient {value} is not divisible by {ones}")
    return value // ones


def gf_count(rs: RootSystem, target: int, padding: int = 0) -> int:
    """Laurent-product count for a built root system (+1 full, -1 no-simple-roots)."""
    marks = (1,) + rs.marks
    if sum(1 for c in marks if c == 1) != rs.f:
        raise AssertionError("1-count of extended marks differs from the lattice index")
    return gf_count_from_marks(marks, target, padding)


def count_sp2n_borel(n: int, target: int) -> int:
    """Closed forms shared by sp_2n and so_{2n+1} for the Borel-normalizer counts."""
    if n < 2:
        raise ValueError("closed forms require n >= 2")
    if target == 1:
        return sum(
            (-1) ** (n - 1 - i) * comb(n - 1, i) * comb(2 * i + 1, i)
            for i in range(n)
        )
    if target == -1:
        return (n - 1) * motzkin(n - 2)
    raise ValueError("target degree must be +1 or -1")


def count_so2n_borel(n: int, target: int) -> int:
    """Closed-form alternating sums for so_2n, n >= 4."""
    if n < 4:
        raise ValueError("closed forms require n >= 4")
    if target == 1:
        return sum(
            (-1) ** (n - 3 - i)
            * comb(n - 3, i)
            * (_guarded_binom(2 * i + 1, i - 2) + _guarded_binom(2 * i + 4, i + 1))
            for i in range(n - 2)
        )
    if target == -1:
        return sum(
            (-1) ** (n - 3 - i)
            * comb(n - 3, i)
            * (_guarded_binom(2 * i, i - 3) + _guarded_binom(2 * i + 3, i))
            for i in range(n - 2)
        )
    raise ValueError("target degree must be +1 or -1")


@dataclass(frozen=True)
class LatticeCount:
    """Result of a simplex lattice-point enumeration."""

    count: int
    points: tuple[RationalVector, ...]


def lattice_count(
    rs: RootSystem, which: str, off_walls: bool = False, lattice: str = "coroot"
) -> LatticeCount:
    """Integer points of a bounded simplex in pairing coordinates y_i = (x, alpha_i).

    which="min": y_i >= -1 for all i and sum c_i y_i <= 2.
    which="max": y_i <= 1 for all i and sum c_i y_i >= 0.
    off_walls drops points with any y_i = 0 or with sum c_i y_i = 1.
    lattice="coroot" keeps only points in the integer coroot span;
    lattice="coweight" keeps every integer y vector.
    """
    if which not in ("min", "max"):
        raise ValueError("which must be 'min' or 'max'")
    if lattice not in ("coroot", "coweight"):
        raise ValueError("lattice must be 'coroot' or 'coweight'")
    marks = rs.marks
    rank = rs.rank
    # suffix[k] = sum of marks from position k on.
    suffix = [0] * (rank + 1)
    for k in range(rank - 1, -1, -1):
        suffix[k] = suffix[k + 1] + marks[k]
    accepted: list[tuple[int, ...]] = []

    def walk(k: int, partial: int, ys: list[int]) -> None:
        if k == rank:
            accepted.append(tuple(ys))
            return
        if which == "min":
            y = -1
            while partial + marks[k] * y <= 2 + suffix[k + 1]:
                ys.append(y)
                walk(k + 1, partial + marks[k] * y, ys)
                ys.pop()
                y += 1
        else:
            y = 1
            while partial + marks[k] * y >= -suffix[k + 1]:
                ys.append(y)
                walk(k + 1, partial + marks[k] * y, ys)
                ys.pop()
                y -= 1

    walk(0, 0, [])
    points = []
    coweights = rs.gram_inverse
    for ys in accepted:
        level = sum(c * y for c, y in zip(marks, ys))
        if which == "min" and level > 2:
            continue
        if which == "max" and level < 0:
            continue
        if off_walls and (0 in ys or level == 1):
            continue
        coords = tuple(
            sum(Fraction(ys[i]) * coweights[i][j] for i in range(rank))
            for j in range(rank)
        )
        point = RationalVector(coords)
        if lattice == "coroot" and not in_coroot_lattice(rs, point):
            continue
        points.append(point)
    return LatticeCount(len(points), tuple(points))


@dataclass(frozen=True)
class IdentityCheck:
    """One instance of a named integer identity, with both sides evaluated."""

    name: str
    argument: int
    lhs: int
    rhs: int

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs


def verify_identities(n_max: int) -> tuple[IdentityCheck, ...]:
    """Exact checks of the sequence and count identities for all n up to n_max."""
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    checks: list[IdentityCheck] = []

    def add(name: str, n: int, lhs: int, rhs: int) -> None:
        checks.append(IdentityCheck(name, n, lhs, rhs))

    for n in range(n_max + 1):
        add(
            "catalan-from-motzkin",
            n,
            catalan(n + 1),
            sum(comb(n, r) * motzkin(r) for r in range(n + 1)),
        )
        add("motzkin-from-riordan", n, motzkin(n), riordan(n) + riordan(n + 1))
        add(
            "riordan-from-trinomials",
            n,
            riordan(n),
            central_trinomial(n) - next_to_central_trinomial(n),
        )
    for n in range(1, n_max + 1):
        add(
            "animals-from-trinomials",
            n,
            directed_animals(n),
            central_trinomial(n - 1) + next_to_central_trinomial(n - 1),
        )
        add(
            "central-binomial-from-animals",
            n,
            comb(2 * n - 1, n - 1),
            sum(comb(n - 1, k) * directed_animals(k + 1) for k in range(n)),
        )
        add(
            "animals-from-ballot-words",
            n,
            directed_animals(n),
            sum(comb(n - 1, s) * comb(s, s // 2) for s in range(n)),
        )
        add(
            "riordan-from-ballot-words-alternating",
            n,
            riordan(n - 1),
            sum((-1) ** s * comb(n - 1, s) * comb(s, s // 2) for s in range(n)),
        )
        add("type-a-borel-motzkin", n, gf_count_from_marks(extended_marks("A", n), 1), motzkin(n))
        add("type-a-abelian-riordan", n, gf_count_from_marks(extended_marks("A", n), -1), riordan(n))
    for n in range(2, n_max + 1):
        add(
            "near-trinomial-from-motzkin",
            n,
            next_to_central_trinomial(n - 1),
            (n - 1) * motzkin(n - 2),
        )
        b_full = gf_count_from_marks(extended_marks("B", n), 1)
        b_abel = gf_count_from_marks(extended_marks("B", n), -1)
        c_full = gf_count_from_marks(extended_marks("C", n), 1)
        c_abel = gf_count_from_marks(extended_marks("C", n), -1)
        add("spin-symplectic-invariance-full", n, b_full, c_full)
        add("spin-symplectic-invariance-abelian", n, b_abel, c_abel)
        add("symplectic-borel-animals", n, c_full, directed_animals(n))
        add("symplectic-borel-closed-form", n, c_full, count_sp2n_borel(n, 1))
        add("symplectic-abelian-closed-form", n, c_abel, count_sp2n_borel(n, -1))
        add("symplectic-borel-minus-abelian-trinomial", n, c_full - c_abel, central_trinomial(n - 1))
    for n in range(3, n_max + 1):
        d_full = gf_count_from_marks(extended_marks("D", n), 1)
        d_abel = gf_count_from_marks(extended_marks("D", n), -1)
        add(
            "odd-minus-even-orthogonal-motzkin",
            n,
            gf_count_from_marks(extended_marks("B", n), 1) - d_full,
            motzkin(n - 2),
        )
        add("even-orthogonal-borel-minus-abelian-trinomial", n, d_full - d_abel, central_trinomial(n - 1))
        if n >= 4:
            add("even-orthogonal-borel-closed-form", n, d_full, count_so2n_borel(n, 1))
            add("even-orthogonal-abelian-closed-form", n, d_abel, count_so2n_borel(n, -1))
    return tuple(checks)
