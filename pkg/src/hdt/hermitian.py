"""The catalog of Hermitian symmetric pairs and the compact/noncompact split.

A pair is a Cartan type together with a distinguished simple-root node whose
coefficient in the highest root is 1 (a cominuscule node).  That single
condition encodes the dichotomy that every positive root carries that node
with coefficient 0 (compact) or 1 (noncompact), which is what makes the
noncompact root spaces an Abelian pair of subspaces.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .rootsystem import CartanType, Root, RootSystem, StructuralError, build_root_system


@dataclass(frozen=True)
class HermitianPair:
    cartan_type: CartanType
    node: int  # 0-based index of the distinguished simple root
    label: str  # stable CLI token, e.g. "su23", "sp3", "sostar10", "so2_5"
    name: str  # display name, e.g. "su(2,3)"

    def __post_init__(self):
        rs = self.root_system
        if not (0 <= self.node < rs.rank):
            raise ValueError("node index out of range")
        if rs.highest_root[self.node] != 1:
            raise ValueError(
                f"{self.name}: node {self.node + 1} is not cominuscule "
                f"(highest-root coefficient {rs.highest_root[self.node]})"
            )

    @property
    def root_system(self) -> RootSystem:
        return build_root_system(self.cartan_type)

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class RootPartition:
    compact_pos: tuple[Root, ...]
    noncompact_pos: tuple[Root, ...]


@lru_cache(maxsize=1)
def catalog() -> tuple[HermitianPair, ...]:
    """All supported pairs: su(p,q) for p+q <= 8, the classical rank <= 7
    families, and both exceptional domains."""
    pairs: list[HermitianPair] = []
    for total in range(2, 9):
        for p in range(1, total // 2 + 1):
            q = total - p
            pairs.append(
                HermitianPair(CartanType("A", total - 1), p - 1, f"su{p}{q}", f"su({p},{q})")
            )
    for n in range(2, 8):
        pairs.append(HermitianPair(CartanType("C", n), n - 1, f"sp{n}", f"sp({n},R)"))
    so2: list[HermitianPair] = []
    for n in range(2, 8):
        so2.append(HermitianPair(CartanType("B", n), 0, f"so2_{2*n-1}", f"so(2,{2*n-1})"))
    for n in range(3, 8):
        so2.append(HermitianPair(CartanType("D", n), 0, f"so2_{2*n-2}", f"so(2,{2*n-2})"))
    so2.sort(key=lambda pr: int(pr.label.split("_")[1]))
    pairs.extend(so2)
    for n in range(3, 8):
        pairs.append(HermitianPair(CartanType("D", n), n - 1, f"sostar{2*n}", f"so*({2*n})"))
    pairs.append(HermitianPair(CartanType("E6", 6), 0, "e3iii", "E III"))
    pairs.append(HermitianPair(CartanType("E7", 7), 6, "e7vii", "E VII"))
    return tuple(pairs)


_ALIASES = {"e6iii": "e3iii", "eiii": "e3iii", "evii": "e7vii"}


def pair_by_label(label: str) -> HermitianPair:
    key = _ALIASES.get(label.lower(), label.lower())
    for pr in catalog():
        if pr.label == key:
            return pr
    raise KeyError(f"unknown pair label {label!r}")


@lru_cache(maxsize=None)
def partition_roots(pair: HermitianPair) -> RootPartition:
    """Split the positive roots by the coefficient of the distinguished node."""
    rs = pair.root_system
    compact, noncompact = [], []
    for alpha in rs.positive_roots:
        c = alpha[pair.node]
        if c == 0:
            compact.append(alpha)
        elif c == 1:
            noncompact.append(alpha)
        else:
            raise StructuralError(
                f"{pair.name}: positive root {alpha} has node coefficient {c}"
            )
    return RootPartition(tuple(compact), tuple(noncompact))


def dim_p_plus(pair: HermitianPair) -> int:
    """Complex dimension of the domain = number of noncompact positive roots."""
    return len(partition_roots(pair).noncompact_pos)


def compact_nodes(pair: HermitianPair) -> tuple[int, ...]:
    """Indices of the simple roots of the semisimple part of k."""
    return tuple(i for i in range(pair.root_system.rank) if i != pair.node)
