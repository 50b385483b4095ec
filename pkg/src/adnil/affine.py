"""Affine Weyl group machinery over the affine root system.

Vectors live in the span of (alpha_1, ..., alpha_p, delta, Lambda) where
delta is the null root and (delta, Lambda) = 1, (delta, delta) =
(Lambda, Lambda) = 0.  Group elements act by exact integer matrices on
that basis; words are witnesses only, equality is equality of actions.
The inversion set N(w), its bi-convex reconstruction, the minimal and
maximal elements attached to an upper ideal, and the translation
factorization w = t_z . v all live here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ideals import (
    IdealChain,
    UpperIdeal,
    complement_chain,
    ideal_powers,
    is_strictly_positive,
)
from .linalg import mat_vec, solve
from .normalizers import ParabolicLabel
from .rootsys import RationalVector, RootSystem, _coords, in_coroot_lattice, inner

__all__ = [
    "AffineRoot",
    "AffineWeylElement",
    "AffineFactorization",
    "affine_simple_root",
    "reflect_affine_root",
    "affine_inner",
    "identity_element",
    "simple_reflection",
    "from_word",
    "translation_element",
    "n_set",
    "length",
    "word_from_biconvex",
    "w_min",
    "w_max",
    "is_minimax",
    "factorize",
    "star",
    "alcove_barycenter",
    "z_coordinate",
    "y_coordinate",
    "in_min_simplex",
    "in_max_simplex",
    "normalizer_by_zwall",
    "rho_hat",
    "check_inversion_sum",
    "inverse_simple_levels",
    "is_dominant",
    "is_minimal_representative",
    "is_maximal_representative",
    "first_layer",
]

IntMatrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class AffineRoot:
    """A real affine root level*delta + finite, with finite a nonzero root."""

    level: int
    finite: tuple[int, ...]

    def is_positive(self) -> bool:
        if self.level != 0:
            return self.level > 0
        return any(c > 0 for c in self.finite)

    def __repr__(self) -> str:
        return f"AffineRoot({self.level}d+{list(self.finite)})"


def affine_simple_root(rs: RootSystem, i: int) -> AffineRoot:
    """The i-th affine simple root; index 0 is delta - theta."""
    if not 0 <= i <= rs.rank:
        raise ValueError(f"affine simple index {i} out of range")
    if i == 0:
        return AffineRoot(1, tuple(-c for c in rs.theta.coeffs))
    return AffineRoot(0, tuple(1 if j == i - 1 else 0 for j in range(rs.rank)))


def reflect_affine_root(rs: RootSystem, i: int, mu: AffineRoot) -> AffineRoot:
    """Apply the i-th simple reflection to an affine root, matrix-free."""
    if i == 0:
        m = sum(f * t for f, t in zip(mu.finite, rs.theta_pairing))
        fin = tuple(f - m * t for f, t in zip(mu.finite, rs.theta.coeffs))
        return AffineRoot(mu.level + m, fin)
    a = i - 1
    pair = sum(f * rs.cartan[j][a] for j, f in enumerate(mu.finite) if f)
    fin = tuple(
        f - pair if j == a else f for j, f in enumerate(mu.finite)
    )
    return AffineRoot(mu.level, fin)


def affine_inner(rs: RootSystem, x, y) -> Fraction:
    """Bilinear form on the affine span: gram on the finite block plus
    the delta/Lambda pairing."""
    p = rs.rank
    total = inner(rs, x[:p], y[:p])
    return total + Fraction(x[p]) * y[p + 1] + Fraction(x[p + 1]) * y[p]


def _identity_matrix(n: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _imat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    cols = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a
    )


@dataclass(frozen=True, eq=False)
class AffineWeylElement:
    """Affine Weyl group element: exact integer action plus a word witness.

    Two elements are equal iff their action matrices agree; the stored
    word evaluates to the action but need not be reduced unless produced
    by bi-convex peeling.
    """

    rs: RootSystem
    word: tuple[int, ...]
    matrix: IntMatrix
    inverse_matrix: IntMatrix

    def __eq__(self, other) -> bool:
        if not isinstance(other, AffineWeylElement):
            return NotImplemented
        return self.rs is other.rs and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash((id(self.rs), self.matrix))

    def __mul__(self, other: AffineWeylElement) -> AffineWeylElement:
        if self.rs is not other.rs:
            raise ValueError("elements belong to different root systems")
        return AffineWeylElement(
            self.rs,
            self.word + other.word,
            _imat_mul(self.matrix, other.matrix),
            _imat_mul(other.inverse_matrix, self.inverse_matrix),
        )

    def inverse(self) -> AffineWeylElement:
        return AffineWeylElement(
            self.rs,
            tuple(reversed(self.word)),
            self.inverse_matrix,
            self.matrix,
        )

    def is_identity(self) -> bool:
        return self.matrix == _identity_matrix(self.rs.rank + 2)

    def finite_part_matrix(self) -> IntMatrix:
        p = self.rs.rank
        return tuple(row[:p] for row in self.matrix[:p])

    def _apply(self, m: IntMatrix, mu: AffineRoot) -> AffineRoot:
        rs = self.rs
        p = rs.rank
        fin = tuple(
            sum(m[t][j] * c for j, c in enumerate(mu.finite) if c) for t in range(p)
        )
        lvl = mu.level + sum(m[p][j] * c for j, c in enumerate(mu.finite) if c)
        probe = fin if any(c > 0 for c in fin) else tuple(-c for c in fin)
        if probe not in rs.root_index:
            raise AssertionError("image of a root is not a root")
        return AffineRoot(lvl, fin)

    def apply_root(self, mu: AffineRoot) -> AffineRoot:
        return self._apply(self.matrix, mu)

    def apply_root_inverse(self, mu: AffineRoot) -> AffineRoot:
        return self._apply(self.inverse_matrix, mu)

    def apply_vector(self, coords) -> tuple[Fraction, ...]:
        return tuple(mat_vec(self.matrix, tuple(Fraction(c) for c in coords)))

    def apply_vector_inverse(self, coords) -> tuple[Fraction, ...]:
        return tuple(mat_vec(self.inverse_matrix, tuple(Fraction(c) for c in coords)))

    def __repr__(self) -> str:
        name = "*".join(f"s{i}" for i in self.word) if self.word else "e"
        return f"AffineWeylElement({self.rs.label}, {name})"


def identity_element(rs: RootSystem) -> AffineWeylElement:
    m = _identity_matrix(rs.rank + 2)
    return AffineWeylElement(rs, (), m, m)


def simple_reflection(rs: RootSystem, i: int) -> AffineWeylElement:
    """Generator s_i of the affine Weyl group, 0 <= i <= rank."""
    if not 0 <= i <= rs.rank:
        raise ValueError(f"affine simple index {i} out of range")
    p = rs.rank
    n = p + 2
    rows = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
    if i == 0:
        theta = rs.theta.coeffs
        for j in range(p):
            m = rs.theta_pairing[j]
            if m:
                for t in range(p):
                    rows[t][j] -= m * theta[t]
                rows[p][j] += m
        for t in range(p):
            rows[t][p + 1] = theta[t]
        rows[p][p + 1] = -1
    else:
        a = i - 1
        for j in range(p):
            rows[a][j] -= rs.cartan[j][a]
    m = tuple(tuple(r) for r in rows)
    return AffineWeylElement(rs, (i,), m, m)


def from_word(rs: RootSystem, word) -> AffineWeylElement:
    """Compose simple reflections; word[0] is applied last."""
    out = identity_element(rs)
    for i in word:
        out = out * simple_reflection(rs, i)
    return AffineWeylElement(rs, tuple(word), out.matrix, out.inverse_matrix)


def n_set(w: AffineWeylElement) -> frozenset[AffineRoot]:
    """Positive affine roots sent to negative ones by w."""
    rs = w.rs
    p = rs.rank
    m = w.matrix
    out: set[AffineRoot] = set()
    for root in rs.positive_roots:
        for sign in (1, -1):
            coeffs = root.coeffs if sign == 1 else tuple(-c for c in root.coeffs)
            shift = sum(m[p][j] * c for j, c in enumerate(coeffs) if c)
            fin = tuple(
                sum(m[t][j] * c for j, c in enumerate(coeffs) if c) for t in range(p)
            )
            low = 0 if sign == 1 else 1
            for k in range(low, -shift):
                out.add(AffineRoot(k, coeffs))
            if -shift >= low and not any(c > 0 for c in fin):
                out.add(AffineRoot(-shift, coeffs))
    return frozenset(out)


def length(w: AffineWeylElement) -> int:
    """Coxeter length, computed as the size of the inversion set."""
    return len(n_set(w))


def word_from_biconvex(rs: RootSystem, roots) -> AffineWeylElement:
    """Element whose inversion set is the given bi-convex set (by peeling).

    Peeling removes the lowest-indexed affine simple root present and
    reflects the remainder; a set that is not an inversion set is
    rejected with a diagnostic.
    """
    current = set(roots)
    for mu in current:
        if not mu.is_positive():
            raise ValueError(f"{mu!r} is not a positive affine root")
        probe = mu.finite if any(c > 0 for c in mu.finite) else tuple(
            -c for c in mu.finite
        )
        if probe not in rs.root_index:
            raise ValueError(f"{mu!r} has a non-root finite part")
    simples = [affine_simple_root(rs, i) for i in range(rs.rank + 1)]
    peeled: list[int] = []
    while current:
        for i, s in enumerate(simples):
            if s in current:
                break
        else:
            raise ValueError(
                "set is not bi-convex: no affine simple root left to peel "
                f"among {sorted((m.level, m.finite) for m in current)}"
            )
        current.discard(s)
        current = {reflect_affine_root(rs, i, mu) for mu in current}
        peeled.append(i)
    w = from_word(rs, tuple(reversed(peeled)))
    if n_set(w) != frozenset(roots):
        raise ValueError("set is not bi-convex: reconstruction mismatch")
    return w


def _chain_inversions(chain: IdealChain) -> set[AffineRoot]:
    roots: set[AffineRoot] = set()
    for k, power in enumerate(chain.powers, start=1):
        rs = power.rs
        for g in power.root_indices():
            roots.add(AffineRoot(k, tuple(-c for c in rs.positive_roots[g].coeffs)))
    return roots


def w_min(ideal: UpperIdeal) -> AffineWeylElement:
    """Minimal dominant element whose first layer is the given ideal.

    Its inversion set stacks the power chain of the ideal: level k holds
    k*delta - gamma for gamma in the k-th power.
    """
    return word_from_biconvex(ideal.rs, _chain_inversions(ideal_powers(ideal)))


def w_max(ideal: UpperIdeal) -> AffineWeylElement:
    """Maximal dominant element for a strictly positive ideal.

    Its inversion set stacks the complement chain instead of the power
    chain; it exists only when no simple root lies in the ideal.
    """
    if not is_strictly_positive(ideal):
        raise ValueError("maximal element requires a strictly positive ideal")
    chain = complement_chain(ideal)
    if chain.stalled:
        raise AssertionError("complement chain stalled on a strictly positive ideal")
    return word_from_biconvex(ideal.rs, _chain_inversions(chain))


def is_minimax(ideal: UpperIdeal) -> bool:
    """Whether the minimal and maximal elements of the ideal coincide.

    Equivalent to equality of the power chain and the complement chain,
    which is how it is decided (no words are built).
    """
    if not is_strictly_positive(ideal):
        return False
    lower = ideal_powers(ideal)
    upper = complement_chain(ideal)
    if upper.stalled:
        raise AssertionError("complement chain stalled on a strictly positive ideal")
    return tuple(t.bits for t in lower.powers) == tuple(t.bits for t in upper.powers)


@dataclass(frozen=True)
class AffineFactorization:
    """w = t_z . v with v in the finite Weyl group and z in the coroot lattice."""

    finite_part: IntMatrix
    translation: RationalVector


def _translation_matrix(rs: RootSystem, z) -> IntMatrix:
    """Action matrix of t_z for z in the coroot lattice."""
    p = rs.rank
    coords = tuple(Fraction(c) for c in _coords(z))
    if not in_coroot_lattice(rs, coords):
        raise ValueError("translation vector is not in the coroot lattice")
    norm = inner(rs, coords, coords)
    if any(c.denominator != 1 for c in coords) or (norm / 2).denominator != 1:
        raise AssertionError("coroot-lattice vector with non-integral data")
    rows = [[1 if r == c else 0 for c in range(p + 2)] for r in range(p + 2)]
    for j in range(p):
        pair = inner(rs, coords, tuple(1 if t == j else 0 for t in range(p)))
        if pair.denominator != 1:
            raise AssertionError("non-integral pairing with a simple root")
        rows[p][j] = -int(pair)
    for t in range(p):
        rows[t][p + 1] = int(coords[t])
    rows[p][p + 1] = -int(norm / 2)
    return tuple(tuple(r) for r in rows)


def translation_element(rs: RootSystem, z) -> AffineWeylElement:
    """The translation t_z as a group element, with a peeled reduced word."""
    coords = tuple(Fraction(c) for c in _coords(z))
    m = _translation_matrix(rs, coords)
    minv = _translation_matrix(rs, tuple(-c for c in coords))
    probe = AffineWeylElement(rs, (), m, minv)
    out = word_from_biconvex(rs, n_set(probe))
    if out.matrix != m:
        raise AssertionError("translation reconstruction mismatch")
    return out


def factorize(w: AffineWeylElement) -> AffineFactorization:
    """Split w = t_z . v; z solves (alpha_i, z) = delta-level of w^{-1}(alpha_i)."""
    rs = w.rs
    p = rs.rank
    rhs = tuple(Fraction(w.inverse_matrix[p][i]) for i in range(p))
    z = tuple(solve(rs.gram, rhs))
    v = w.finite_part_matrix()
    n = p + 2
    embedded = tuple(
        tuple(
            v[r][c] if r < p and c < p else (1 if r == c else 0) for c in range(n)
        )
        for r in range(n)
    )
    if _imat_mul(_translation_matrix(rs, z), embedded) != w.matrix:
        raise AssertionError("translation factorization does not recompose")
    return AffineFactorization(v, RationalVector(z))


def star(w: AffineWeylElement, x) -> RationalVector:
    """Affine action on the finite space: x maps to v(x) + z."""
    rs = w.rs
    fac = factorize(w)
    coords = tuple(Fraction(c) for c in _coords(x))
    vx = tuple(
        sum(Fraction(fac.finite_part[t][j]) * coords[j] for j in range(rs.rank))
        for t in range(rs.rank)
    )
    return RationalVector(
        tuple(a + b for a, b in zip(vx, fac.translation.coords))
    )


def alcove_barycenter(rs: RootSystem) -> RationalVector:
    """Barycenter of the fundamental alcove (vertices 0 and coweights/marks)."""
    p = rs.rank
    total = [Fraction(0)] * p
    for i, cw in enumerate(rs.fundamental_coweights):
        for j in range(p):
            total[j] += cw.coords[j] / rs.marks[i]
    return RationalVector(tuple(t / (p + 1) for t in total))


def z_coordinate(ideal: UpperIdeal) -> RationalVector:
    """Translation part of the minimal element of the ideal."""
    return factorize(w_min(ideal)).translation


def y_coordinate(ideal: UpperIdeal) -> RationalVector:
    """Translation part of the maximal element (strictly positive ideals)."""
    return factorize(w_max(ideal)).translation


def in_min_simplex(rs: RootSystem, x) -> bool:
    """(x, alpha) >= -1 on all simples and (x, theta) <= 2."""
    return all(
        inner(rs, x, rs.positive_roots[rs.simple_index[a]]) >= -1
        for a in range(rs.rank)
    ) and inner(rs, x, rs.theta) <= 2


def in_max_simplex(rs: RootSystem, x) -> bool:
    """(x, alpha) <= 1 on all simples and (x, theta) >= 0."""
    return all(
        inner(rs, x, rs.positive_roots[rs.simple_index[a]]) <= 1
        for a in range(rs.rank)
    ) and inner(rs, x, rs.theta) >= 0


def normalizer_by_zwall(ideal: UpperIdeal) -> ParabolicLabel:
    """Parabolic label read off the walls through the z-coordinate.

    Each affine wall containing z (a vanishing simple pairing, or pairing
    one with theta) pulls back through the minimal element to a finite
    simple root of the Levi.
    """
    rs = ideal.rs
    w = w_min(ideal)
    z = factorize(w).translation
    walls = [
        i + 1
        for i in range(rs.rank)
        if inner(rs, z, rs.positive_roots[rs.simple_index[i]]) == 0
    ]
    if inner(rs, z, rs.theta) == 1:
        walls.append(0)
    levi = set()
    for i in walls:
        mu = w.apply_root_inverse(affine_simple_root(rs, i))
        if mu.level != 0 or sum(abs(c) for c in mu.finite) != 1 or max(mu.finite) != 1:
            raise AssertionError("wall does not pull back to a finite simple root")
        levi.add(mu.finite.index(1))
    return ParabolicLabel(rs.rank, frozenset(levi))


def rho_hat(rs: RootSystem) -> tuple[Fraction, ...]:
    """Affine weight pairing to one with every affine simple coroot."""
    lam = 1 + inner(rs, rs.rho, rs.theta)
    return tuple(rs.rho.coords) + (Fraction(0), Fraction(lam))


def check_inversion_sum(w: AffineWeylElement) -> bool:
    """Whether rho_hat - w^{-1}(rho_hat) equals the sum over N(w)."""
    rs = w.rs
    p = rs.rank
    r = rho_hat(rs)
    image = w.apply_vector_inverse(r)
    diff = tuple(a - b for a, b in zip(r, image))
    total = [Fraction(0)] * (p + 2)
    for mu in n_set(w):
        for j, c in enumerate(mu.finite):
            total[j] += c
        total[p] += mu.level
    return diff == tuple(total)


def inverse_simple_levels(w: AffineWeylElement) -> tuple[int, ...]:
    """Delta-levels of w^{-1} on the affine simple roots, index 0 first."""
    rs = w.rs
    p = rs.rank
    minv = w.inverse_matrix
    level0 = 1 - sum(minv[p][j] * rs.theta.coeffs[j] for j in range(p))
    return (level0,) + tuple(minv[p][a] for a in range(p))


def is_dominant(w: AffineWeylElement) -> bool:
    """Whether w sends every finite simple root to a positive affine root."""
    rs = w.rs
    p = rs.rank
    m = w.matrix
    for a in range(p):
        lvl = m[p][a]
        if lvl > 0:
            continue
        if lvl < 0 or not any(m[t][a] > 0 for t in range(p)):
            return False
    return True


def is_minimal_representative(w: AffineWeylElement) -> bool:
    """Dominant, and w^{-1} keeps every affine simple at level >= -1."""
    return is_dominant(w) and all(k >= -1 for k in inverse_simple_levels(w))


def is_maximal_representative(w: AffineWeylElement) -> bool:
    """Dominant, and w^{-1} keeps every affine simple at level <= 1."""
    return is_dominant(w) and all(k <= 1 for k in inverse_simple_levels(w))


def first_layer(w: AffineWeylElement) -> UpperIdeal:
    """Upper ideal of positive roots gamma with w(delta - gamma) negative."""
    if not is_dominant(w):
        raise ValueError("first layer is defined for dominant elements only")
    rs = w.rs
    p = rs.rank
    m = w.matrix
    bits = 0
    for g, root in enumerate(rs.positive_roots):
        shift = sum(m[p][j] * c for j, c in enumerate(root.coeffs) if c)
        if shift >= 2:
            bits |= 1 << g
        elif shift == 1:
            fin_positive = any(
                sum(m[t][j] * c for j, c in enumerate(root.coeffs) if c) > 0
                for t in range(p)
            )
            if fin_positive:
                bits |= 1 << g
    return UpperIdeal(rs, bits)
