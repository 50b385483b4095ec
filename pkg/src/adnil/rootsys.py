"""Root systems of simple Lie algebras with exact rational arithmetic.

Roots are integer coefficient vectors over the simple-root basis
alpha_1..alpha_p.  The invariant form is normalized so that the highest
root theta satisfies (theta, theta) = 2.  Numbering follows Bourbaki for
A, B, C, D, E; F4 is numbered with the two short simple roots first
(marks 2,4,3,2); G2 has alpha_1 short (theta = 3 alpha_1 + 2 alpha_2).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .linalg import determinant, invert, to_matrix

__all__ = [
    "ConfigurationError",
    "Root",
    "RationalVector",
    "RootSystem",
    "build",
    "inner",
    "leq",
    "root_sum",
    "in_coroot_lattice",
]

# Default rank caps per family; ADNIL_MAX_RANK raises the A/B/C/D caps.
_RANK_RANGE = {"A": (1, 9), "B": (2, 8), "C": (2, 8), "D": (3, 8)}
_FIXED_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


class ConfigurationError(ValueError):
    """Unsupported type label or rank."""


@dataclass(frozen=True)
class Root:
    """A positive or negative root as integer simple-root coefficients."""

    coeffs: tuple[int, ...]

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    def __repr__(self) -> str:
        return f"Root{self.coeffs}"


@dataclass(frozen=True)
class RationalVector:
    """A vector in the span of the simple roots, exact coordinates."""

    coords: tuple[Fraction, ...]

    def __repr__(self) -> str:
        return "RationalVector(" + ", ".join(str(c) for c in self.coords) + ")"


def _coords(x) -> tuple:
    """Coefficient tuple of a Root, RationalVector, or plain sequence."""
    if isinstance(x, Root):
        return x.coeffs
    if isinstance(x, RationalVector):
        return x.coords
    return tuple(x)


def _cartan_entries(family: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix with entry [i][j] = <alpha_i, alpha_j-coroot>."""
    c = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def edge(i: int, j: int, cij: int = -1, cji: int = -1) -> None:
        c[i][j] = cij
        c[j][i] = cji

    if family == "A":
        for i in range(rank - 1):
            edge(i, i + 1)
    elif family == "B":
        # alpha_rank is the short root.
        for i in range(rank - 2):
            edge(i, i + 1)
        edge(rank - 2, rank - 1, -2, -1)
    elif family == "C":
        # alpha_rank is the long root.
        for i in range(rank - 2):
            edge(i, i + 1)
        edge(rank - 2, rank - 1, -1, -2)
    elif family == "D":
        for i in range(rank - 2):
            edge(i, i + 1)
        edge(rank - 3, rank - 1)
    elif family == "E":
        # Chain 1-3-4-5-..., with node 2 attached to node 4.
        chain = [0] + list(range(2, rank))
        for a, b in zip(chain, chain[1:]):
            edge(a, b)
        edge(1, 3)
    elif family == "F":
        # Short roots first: rows [2,-1,0,0], [-1,2,-1,0], [0,-2,2,-1], [0,0,-1,2].
        edge(0, 1)
        edge(1, 2, -1, -2)
        edge(2, 3)
    elif family == "G":
        # alpha_1 short: rows [2,-1], [-3,2].
        edge(0, 1, -1, -3)
    return tuple(tuple(row) for row in c)


def _symmetrizer(family: str, rank: int) -> tuple[Fraction, ...]:
    """d_i = (alpha_i, alpha_i) / 2 with long roots normalized to d = 1."""
    one, half = Fraction(1), Fraction(1, 2)
    if family == "B":
        return (one,) * (rank - 1) + (half,)
    if family == "C":
        return (half,) * (rank - 1) + (one,)
    if family == "F":
        return (half, half, one, one)
    if family == "G":
        return (Fraction(1, 3), one)
    return (one,) * rank


def _positive_roots(cartan: tuple[tuple[int, ...], ...]) -> list[tuple[int, ...]]:
    """Closure of the simple roots under root strings, as coefficient tuples."""
    rank = len(cartan)
    simples = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    known = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for gamma in frontier:
            for i in range(rank):
                # p = how far the alpha_i-string extends below gamma.
                p = 0
                probe = tuple(g - (p + 1) * s for g, s in zip(gamma, simples[i]))
                while probe in known:
                    p += 1
                    probe = tuple(g - (p + 1) * s for g, s in zip(gamma, simples[i]))
                pairing = sum(gamma[k] * cartan[k][i] for k in range(rank))
                if p - pairing >= 1:
                    up = tuple(g + s for g, s in zip(gamma, simples[i]))
                    if up not in known:
                        known.add(up)
                        nxt.append(up)
        frontier = nxt
    return sorted(known, key=lambda t: (sum(t), tuple(-x for x in t)))


class RootSystem:
    """Immutable container of exact root-system data.

    Attributes of note: positive_roots (height-sorted Root tuple), theta,
    marks (theta coefficients), f (index of connection), cartan, gram,
    fundamental_weights / fundamental_coweights, rho, rho_check, and the
    poset tables cover_up / cover_down / sum_index over root indices.
    """

    def __init__(self, label: str, family: str, rank: int):
        self.label = label
        self.family = family
        self.rank = rank
        self.cartan = _cartan_entries(family, rank)
        self.symmetrizer = _symmetrizer(family, rank)
        # gram[i][j] = (alpha_i, alpha_j) = cartan[i][j] * d_j.
        self.gram = to_matrix(
            [
                [Fraction(self.cartan[i][j]) * self.symmetrizer[j] for j in range(rank)]
                for i in range(rank)
            ]
        )
        for i in range(rank):
            for j in range(rank):
                if self.gram[i][j] != self.gram[j][i]:
                    raise AssertionError("symmetrizer does not symmetrize the Cartan matrix")

        coeff_list = _positive_roots(self.cartan)
        self.positive_roots = tuple(Root(c) for c in coeff_list)
        self.root_index = {c: k for k, c in enumerate(coeff_list)}
        self.heights = tuple(sum(c) for c in coeff_list)
        self.simple_index = tuple(
            self.root_index[tuple(1 if j == i else 0 for j in range(rank))]
            for i in range(rank)
        )

        self.theta = self.positive_roots[-1]
        top = self.heights[-1]
        if self.heights.count(top) != 1:
            raise AssertionError("highest root is not unique")
        self.marks = self.theta.coeffs
        theta_norm = inner(self, self.theta, self.theta)
        if theta_norm != 2:
            raise AssertionError(f"(theta, theta) = {theta_norm}, expected 2")

        self.f = 1 + sum(1 for c in self.marks if c == 1)
        det = determinant(to_matrix(self.cartan))
        if det != self.f:
            raise AssertionError(f"det(cartan) = {det} but index of connection = {self.f}")

        self.cartan_inverse = invert(to_matrix(self.cartan))
        self.gram_inverse = invert(self.gram)
        self.fundamental_weights = tuple(
            RationalVector(tuple(row)) for row in self.cartan_inverse
        )
        self.fundamental_coweights = tuple(
            RationalVector(tuple(row)) for row in self.gram_inverse
        )
        rho = tuple(
            sum(w.coords[j] for w in self.fundamental_weights) for j in range(rank)
        )
        half_sum = tuple(
            Fraction(sum(r.coeffs[j] for r in self.positive_roots), 2)
            for j in range(rank)
        )
        if rho != half_sum:
            raise AssertionError("sum of fundamental weights != half sum of roots")
        self.rho = RationalVector(rho)
        self.rho_check = RationalVector(
            tuple(
                sum(w.coords[j] for w in self.fundamental_coweights) for j in range(rank)
            )
        )
        # Coxeter number: 1 + height of theta.
        self.coxeter_number = 1 + self.theta.height

        # (alpha_j, theta) is an integer because theta is long.
        tp = []
        for j in range(rank):
            val = sum(self.gram[j][k] * self.marks[k] for k in range(rank))
            if val.denominator != 1:
                raise AssertionError("(alpha_j, theta) not integral")
            tp.append(int(val))
        self.theta_pairing = tuple(tp)

        n = len(self.positive_roots)
        sums: dict[tuple[int, int], int] = {}
        for i in range(n):
            ci = coeff_list[i]
            for j in range(i, n):
                s = tuple(a + b for a, b in zip(ci, coeff_list[j]))
                k = self.root_index.get(s)
                if k is not None:
                    sums[(i, j)] = k
                    sums[(j, i)] = k
        self.sum_index = sums

        up: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        down: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for i in range(n):
            for a in range(rank):
                j = self.sum_index.get((i, self.simple_index[a]))
                if j is not None:
                    up[i].append((j, a))
                    down[j].append((i, a))
        self.cover_up = tuple(tuple(x) for x in up)
        self.cover_down = tuple(tuple(x) for x in down)

        # Functional rows: pairing_rows[g][i] = (alpha_i, gamma_g).
        self.pairing_rows = tuple(
            tuple(
                sum(self.gram[i][j] * c[j] for j in range(rank)) for i in range(rank)
            )
            for c in coeff_list
        )

    def index_of(self, root) -> int:
        """Index of a positive root in positive_roots; KeyError if absent."""
        return self.root_index[_coords(root)]

    def coroot_pairing(self, x, j: int):
        """<x, alpha_j-coroot> = 2 (x, alpha_j) / (alpha_j, alpha_j)."""
        c = _coords(x)
        return sum(c[k] * self.cartan[k][j] for k in range(self.rank))

    def __repr__(self) -> str:
        return f"RootSystem({self.label})"


def _parse_label(label: str) -> tuple[str, int]:
    if not label or not label[0].isalpha():
        raise ConfigurationError(f"malformed type label {label!r}")
    family = label[0].upper()
    try:
        rank = int(label[1:])
    except ValueError:
        raise ConfigurationError(f"malformed type label {label!r}") from None
    if family in _FIXED_RANKS:
        if rank not in _FIXED_RANKS[family]:
            raise ConfigurationError(f"unsupported type {family}{rank}")
        return family, rank
    if family not in _RANK_RANGE:
        raise ConfigurationError(f"unsupported family {family!r}")
    lo, hi = _RANK_RANGE[family]
    env = os.environ.get("ADNIL_MAX_RANK")
    if env is not None:
        try:
            hi = max(hi, int(env))
        except ValueError:
            raise ConfigurationError(f"bad ADNIL_MAX_RANK value {env!r}") from None
    if not lo <= rank <= hi:
        raise ConfigurationError(
            f"unsupported rank {rank} for family {family} (allowed {lo}..{hi})"
        )
    return family, rank


@lru_cache(maxsize=None)
def _build_cached(family: str, rank: int) -> RootSystem:
    return RootSystem(f"{family}{rank}", family, rank)


def build(label: str) -> RootSystem:
    """Root system for a type label such as A4, D5, E8, F4, G2.

    Instances are cached: repeated calls with one label return one object.
    """
    family, rank = _parse_label(label)
    return _build_cached(family, rank)


def inner(rs: RootSystem, x, y) -> Fraction:
    """Invariant bilinear form, (theta, theta) = 2 normalization."""
    cx, cy = _coords(x), _coords(y)
    gram = rs.gram
    total = Fraction(0)
    for i, xi in enumerate(cx):
        if xi:
            row = gram[i]
            total += xi * sum(row[j] * yj for j, yj in enumerate(cy) if yj)
    return total


def leq(rs: RootSystem, mu, gamma) -> bool:
    """Root-poset order: gamma - mu has nonnegative coefficients."""
    cm, cg = _coords(mu), _coords(gamma)
    return all(g - m >= 0 for m, g in zip(cm, cg))


def root_sum(rs: RootSystem, mu, nu) -> Root | None:
    """mu + nu if it is a positive root, else None."""
    s = tuple(a + b for a, b in zip(_coords(mu), _coords(nu)))
    k = rs.root_index.get(s)
    return None if k is None else rs.positive_roots[k]


def in_coroot_lattice(rs: RootSystem, x) -> bool:
    """Whether x lies in the integer span of the simple coroots."""
    c = _coords(x)
    return all((Fraction(v) * d).denominator == 1 for v, d in zip(c, rs.symmetrizer))
