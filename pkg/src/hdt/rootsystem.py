"""Root systems of the simple complex Lie algebras A-D, E6, E7.

Roots are stored as integer coefficient vectors in the simple-root basis,
and every inner product is routed through an exact rational Gram matrix,
normalized so that long roots have squared length 2.  No irrational
Euclidean embedding ever appears, so all structure constants here are
exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .exact import rat, solve_linear

FAMILIES = ("A", "B", "C", "D", "E6", "E7")

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3, "E6": 6, "E7": 7}
_MAX_RANK = {"E6": 6, "E7": 7}

Root = tuple[int, ...]


class StructuralError(AssertionError):
    """An identity that is a theorem failed; indicates an implementation bug."""


@dataclass(frozen=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.rank < _MIN_RANK[self.family]:
            raise ValueError(f"family {self.family} needs rank >= {_MIN_RANK[self.family]}")
        if self.family in _MAX_RANK and self.rank != _MAX_RANK[self.family]:
            raise ValueError(f"family {self.family} has fixed rank {_MAX_RANK[self.family]}")

    def __str__(self) -> str:
        return self.family if self.family.startswith("E") else f"{self.family}{self.rank}"


def _gram_matrix(t: CartanType) -> tuple[tuple[Fraction, ...], ...]:
    """(alpha_i | alpha_j) for the simple roots, long roots normalized to 2."""
    n = t.rank
    g = [[Fraction(0)] * n for _ in range(n)]

    def chain(edges, diag):
        for i in range(n):
            g[i][i] = diag[i]
        for i, j in edges:
            v = -min(diag[i], diag[j]) / 2 if (diag[i] == 1 or diag[j] == 1) else Fraction(-1)
            g[i][j] = g[j][i] = v

    two, one = Fraction(2), Fraction(1)
    if t.family == "A":
        chain([(i, i + 1) for i in range(n - 1)], [two] * n)
    elif t.family == "B":
        # last node short
        chain([(i, i + 1) for i in range(n - 1)], [two] * (n - 1) + [one])
        g[n - 2][n - 1] = g[n - 1][n - 2] = Fraction(-1)
    elif t.family == "C":
        # last node long, the others short
        chain([(i, i + 1) for i in range(n - 2)], [one] * (n - 1) + [two])
        g[n - 2][n - 1] = g[n - 1][n - 2] = Fraction(-1)
    elif t.family == "D":
        chain([(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)], [two] * n)
    else:
        # Bourbaki numbering: chain 1-3-4-5-6(-7), node 2 hangs off node 4
        edges = [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)]
        if t.family == "E7":
            edges.append((5, 6))
        chain(edges, [two] * n)
    return tuple(tuple(row) for row in g)


def _root_count(t: CartanType) -> int:
    n = t.rank
    return {
        "A": n * (n + 1),
        "B": 2 * n * n,
        "C": 2 * n * n,
        "D": 2 * n * (n - 1),
        "E6": 72,
        "E7": 126,
    }[t.family]


class RootSystem:
    """The full root system of one Cartan type, immutable after build."""

    def __init__(self, cartan_type: CartanType):
        self.cartan_type = cartan_type
        self.rank = cartan_type.rank
        self.gram = _gram_matrix(cartan_type)
        # cartan[i][j] = alpha_i evaluated on the coroot of alpha_j
        self.cartan = tuple(
            tuple(int(2 * self.gram[i][j] / self.gram[j][j]) for j in range(self.rank))
            for i in range(self.rank)
        )
        self.simple_roots: tuple[Root, ...] = tuple(
            tuple(1 if j == i else 0 for j in range(self.rank)) for i in range(self.rank)
        )
        self.all_roots = self._generate()
        self._root_set = frozenset(self.all_roots)
        self.positive_roots: tuple[Root, ...] = tuple(
            sorted((r for r in self.all_roots if all(c >= 0 for c in r)), key=lambda r: (sum(r), r))
        )
        self.highest_root = self._find_highest()
        self._validate()

    # -- construction ------------------------------------------------------

    def _generate(self) -> tuple[Root, ...]:
        # breadth-first closure of the simple roots under simple reflections;
        # terminates because the system is finite
        seen: set[Root] = set(self.simple_roots)
        frontier = list(self.simple_roots)
        while frontier:
            nxt = []
            for beta in frontier:
                for i in range(self.rank):
                    pairing = sum(c * self.cartan[k][i] for k, c in enumerate(beta))
                    img = list(beta)
                    img[i] -= pairing
                    timg = tuple(img)
                    if timg not in seen:
                        seen.add(timg)
                        nxt.append(timg)
            frontier = nxt
        return tuple(sorted(seen))

    def _find_highest(self) -> Root:
        top_height = max(sum(r) for r in self.positive_roots)
        top = [r for r in self.positive_roots if sum(r) == top_height]
        if len(top) != 1:
            raise StructuralError("highest root is not unique")
        return top[0]

    def _validate(self):
        if len(self.all_roots) != _root_count(self.cartan_type):
            raise StructuralError(
                f"{self.cartan_type}: generated {len(self.all_roots)} roots, "
                f"expected {_root_count(self.cartan_type)}"
            )
        for r in self.all_roots:
            neg = tuple(-c for c in r)
            if neg not in self._root_set:
                raise StructuralError("root set not closed under negation")
            if not (all(c >= 0 for c in r) or all(c <= 0 for c in r)):
                raise StructuralError("root with mixed-sign coefficients")

    # -- exact queries -----------------------------------------------------

    def inner(self, u: Sequence, v: Sequence) -> Fraction:
        """(u | v) for vectors in simple-root coordinates."""
        total = Fraction(0)
        for i, ui in enumerate(u):
            if ui == 0:
                continue
            row = self.gram[i]
            total += rat(ui) * sum((row[j] * rat(vj) for j, vj in enumerate(v) if vj != 0), Fraction(0))
        return total

    def norm_sq(self, v: Sequence) -> Fraction:
        return self.inner(v, v)

    def coroot_pairing(self, phi: Sequence, alpha: Sequence) -> Fraction:
        """phi evaluated on the coroot of alpha: 2 (phi|alpha) / (alpha|alpha).

        phi is given in simple-root coordinates (rational entries allowed).
        """
        nsq = self.norm_sq(alpha)
        if nsq == 0:
            raise ValueError("zero vector has no coroot")
        return 2 * self.inner(phi, alpha) / nsq

    def is_root(self, v: Sequence) -> bool:
        if len(v) != self.rank:
            raise ValueError("dimension mismatch")
        try:
            t = tuple(int(c) for c in v)
        except (TypeError, ValueError):
            return False
        if any(ti != ci for ti, ci in zip(t, v)):
            return False
        return t in self._root_set

    def reflect(self, alpha: Sequence, v: Sequence) -> tuple[Fraction, ...]:
        """Reflection of v in the hyperplane orthogonal to the root alpha."""
        c = self.coroot_pairing(v, alpha)
        return tuple(rat(vi) - c * rat(ai) for vi, ai in zip(v, alpha))

    def fundamental_weight(self, i: int) -> tuple[Fraction, ...]:
        """The i-th fundamental weight in simple-root coordinates."""
        return _fundamental_weights(self)[i]

    def root_height(self, r: Root) -> int:
        return sum(r)


@lru_cache(maxsize=None)
def build_root_system(t: CartanType) -> RootSystem:
    return RootSystem(t)


@lru_cache(maxsize=None)
def _fundamental_weights(rs: RootSystem) -> tuple[tuple[Fraction, ...], ...]:
    # omega_i solves <omega_i, alpha_j^vee> = delta_ij; the system matrix is
    # the transposed Cartan matrix acting on simple-root coordinates
    n = rs.rank
    ct = [[Fraction(rs.cartan[i][j]) for i in range(n)] for j in range(n)]
    out = []
    for i in range(n):
        e = [Fraction(0)] * n
        e[i] = Fraction(1)
        out.append(solve_linear(ct, e))
    return tuple(out)


def cartan_integer(rs: RootSystem, phi: Sequence, alpha: Sequence) -> Fraction:
    """2 (phi|alpha)/(alpha|alpha) with phi in simple-root coordinates."""
    return rs.coroot_pairing(phi, alpha)
