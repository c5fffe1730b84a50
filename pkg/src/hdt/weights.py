"""Weights on the full Cartan subalgebra and the compact-part weight systems.

A weight is a tuple of values on the simple coroots (fundamental-weight
coordinates), always exact rationals.  Weights of compact-part irreducibles
are generated by string saturation from the highest weight; multiplicities
come from the standard recursive formula and are only needed for the
formal-dimension report, never for convergence.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cascade import half_sum, strongly_orthogonal_cascade
from .hermitian import HermitianPair, compact_nodes, partition_roots
from .rootsystem import Root, RootSystem, StructuralError

Weight = tuple[Fraction, ...]


def to_weight(coords) -> Weight:
    return tuple(Fraction(c) for c in coords)


def root_to_weight_coords(rs: RootSystem, alpha) -> Weight:
    """Values of a simple-root-coordinate vector on all simple coroots."""
    return tuple(rs.coroot_pairing(alpha, s) for s in rs.simple_roots)


def inner_weight_root(rs: RootSystem, w: Weight, alpha) -> Fraction:
    """(w | alpha) for w in weight coordinates, alpha in root coordinates."""
    total = Fraction(0)
    for k, (mk, ck) in enumerate(zip(w, alpha)):
        if mk and ck:
            total += Fraction(mk) * ck * rs.gram[k][k] / 2
    return total


def weight_on_coroot(rs: RootSystem, w: Weight, alpha) -> Fraction:
    """w evaluated on the coroot of alpha."""
    return 2 * inner_weight_root(rs, w, alpha) / rs.norm_sq(alpha)


@lru_cache(maxsize=None)
def _fundamental_gram(rs: RootSystem) -> tuple[tuple[Fraction, ...], ...]:
    n = rs.rank
    fw = [rs.fundamental_weight(i) for i in range(n)]
    return tuple(tuple(rs.inner(fw[i], fw[j]) for j in range(n)) for i in range(n))


def inner_weights(rs: RootSystem, u: Weight, v: Weight) -> Fraction:
    g = _fundamental_gram(rs)
    total = Fraction(0)
    for i, ui in enumerate(u):
        if ui == 0:
            continue
        row = g[i]
        total += Fraction(ui) * sum(
            (row[j] * Fraction(vj) for j, vj in enumerate(v) if vj != 0), Fraction(0)
        )
    return total


@lru_cache(maxsize=None)
def rho_vectors(pair: HermitianPair) -> tuple[Weight, Weight]:
    """(rho, rho_n): half sums over all / noncompact positive roots."""
    rs = pair.root_system
    part = partition_roots(pair)
    rho = root_to_weight_coords(rs, half_sum(rs, rs.positive_roots))
    rho_n = root_to_weight_coords(rs, half_sum(rs, part.noncompact_pos))
    return rho, rho_n


def lambda_one(pair: HermitianPair) -> Weight:
    """The fundamental weight dual to the distinguished noncompact node."""
    return tuple(
        Fraction(1 if i == pair.node else 0) for i in range(pair.root_system.rank)
    )


def extend_compact_coords(pair: HermitianPair, compact_coords) -> Weight:
    """Zero-extend coordinates given on the compact nodes to the full Cartan."""
    nodes = compact_nodes(pair)
    vals = list(compact_coords)
    if len(vals) != len(nodes):
        raise ValueError(
            f"{pair.name}: expected {len(nodes)} compact coordinates, got {len(vals)}"
        )
    full = [Fraction(0)] * pair.root_system.rank
    for i, v in zip(nodes, vals):
        full[i] = Fraction(v)
    return tuple(full)


def compact_fundamental_weights(pair: HermitianPair) -> tuple[Weight, ...]:
    """Unit weights on each compact node (zero on the distinguished coroot)."""
    n = pair.root_system.rank
    return tuple(
        tuple(Fraction(1 if j == i else 0) for j in range(n)) for i in compact_nodes(pair)
    )


@dataclass(frozen=True)
class KssWeightSystem:
    pair: HermitianPair
    highest: Weight
    weights: tuple[Weight, ...]  # sorted, without multiplicities


def _validate_lambda0(pair: HermitianPair, lambda0: Weight):
    if len(lambda0) != pair.root_system.rank:
        raise ValueError("lambda0 has wrong length")
    if lambda0[pair.node] != 0:
        raise ValueError("lambda0 must vanish on the distinguished coroot")
    for i in compact_nodes(pair):
        v = lambda0[i]
        if Fraction(v).denominator != 1:
            raise ValueError(f"lambda0 must be integral, got {v} at node {i + 1}")
        if v < 0:
            raise ValueError(f"lambda0 must be dominant, got {v} at node {i + 1}")


@lru_cache(maxsize=None)
def weight_system(pair: HermitianPair, lambda0: Weight) -> KssWeightSystem:
    """Weight support of the compact-part irreducible with highest weight lambda0.

    Worklist saturation: from each known weight mu and each compact simple
    root alpha with mu(h_alpha) = c > 0, the weights mu - alpha, ...,
    mu - c*alpha all occur.  The closure of this rule from the highest weight
    is exactly the support of the irreducible.
    """
    _validate_lambda0(pair, lambda0)
    rs = pair.root_system
    rows = {i: rs.cartan[i] for i in compact_nodes(pair)}
    start = tuple(Fraction(c) for c in lambda0)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for mu in frontier:
            for i, row in rows.items():
                c = mu[i]
                if c <= 0:
                    continue
                for k in range(1, int(c) + 1):
                    cand = tuple(m - k * ri for m, ri in zip(mu, row))
                    if cand not in seen:
                        seen.add(cand)
                        nxt.append(cand)
        frontier = nxt
    return KssWeightSystem(pair, start, tuple(sorted(seen, reverse=True)))


def freudenthal_multiplicity(ws: KssWeightSystem, mu: Weight) -> int:
    """Multiplicity of mu in the compact-part irreducible, by the standard
    recursion descending from the (multiplicity-one) highest weight."""
    mu = to_weight(mu)
    wset = set(ws.weights)
    if mu not in wset:
        raise ValueError("mu is not a weight of this representation")
    rs = ws.pair.root_system
    lam = ws.highest
    compact_pos = partition_roots(ws.pair).compact_pos
    rho_c = root_to_weight_coords(rs, half_sum(rs, compact_pos))
    alpha_coords = [(alpha, root_to_weight_coords(rs, alpha)) for alpha in compact_pos]
    lam_sq = inner_weights(rs, _add(lam, rho_c), _add(lam, rho_c))
    memo: dict[Weight, int] = {lam: 1}

    def mult(nu: Weight) -> int:
        if nu in memo:
            return memo[nu]
        rhs = Fraction(0)
        for alpha, aw in alpha_coords:
            k = 1
            while True:
                above = tuple(n + k * c for n, c in zip(nu, aw))
                if above not in wset:
                    break
                rhs += mult(above) * inner_weight_root(rs, above, alpha)
                k += 1
        nu_sq = inner_weights(rs, _add(nu, rho_c), _add(nu, rho_c))
        denom = lam_sq - nu_sq
        if denom == 0:
            raise StructuralError("vanishing denominator in multiplicity recursion")
        val = 2 * rhs / denom
        if val.denominator != 1 or val <= 0:
            raise StructuralError(f"non-positive-integer multiplicity {val}")
        memo[nu] = int(val)
        return memo[nu]

    return mult(mu)


def _add(u: Weight, v: Weight) -> Weight:
    return tuple(a + b for a, b in zip(u, v))


def weight_multiplicities(ws: KssWeightSystem) -> dict[Weight, int]:
    return {mu: freudenthal_multiplicity(ws, mu) for mu in ws.weights}


def _weyl_dimension(pair: HermitianPair, lambda0: Weight) -> Fraction:
    # cross-check oracle for the multiplicity recursion, not public API
    rs = pair.root_system
    compact_pos = partition_roots(pair).compact_pos
    rho_c = root_to_weight_coords(rs, half_sum(rs, compact_pos))
    dim = Fraction(1)
    for alpha in compact_pos:
        dim *= inner_weight_root(rs, _add(to_weight(lambda0), rho_c), alpha) / inner_weight_root(
            rs, rho_c, alpha
        )
    return dim


@dataclass(frozen=True)
class WeightBoundReport:
    pair_label: str
    lambda0: Weight
    bound: Fraction  # (lambda0 | gamma_r)
    n_checked: int
    max_value: Fraction
    equality_attained: bool


def verify_weight_bound(pair: HermitianPair, ws: KssWeightSystem) -> WeightBoundReport:
    """Exhaustive exact check of (Lambda^s | gamma_j) <= (Lambda_0 | gamma_r).

    A violation raises StructuralError (the inequality is a theorem).
    """
    rs = pair.root_system
    gammas = strongly_orthogonal_cascade(pair).gammas
    bound = inner_weight_root(rs, ws.highest, gammas[-1])
    max_val = None
    n = 0
    for mu in ws.weights:
        for g in gammas:
            v = inner_weight_root(rs, mu, g)
            n += 1
            if v > bound:
                raise StructuralError(
                    f"{pair.name}: weight bound violated: ({mu}|{g}) = {v} > {bound}"
                )
            if max_val is None or v > max_val:
                max_val = v
    return WeightBoundReport(pair.label, ws.highest, bound, n, max_val, max_val == bound)


def compact_reflection(pair: HermitianPair, node: int, w: Weight) -> Weight:
    """Simple reflection at a compact node, acting in weight coordinates."""
    row = pair.root_system.cartan[node]
    c = w[node]
    return tuple(m - c * ri for m, ri in zip(w, row))


def weights_of_root(rs: RootSystem, alpha: Root) -> Weight:
    return root_to_weight_coords(rs, alpha)
