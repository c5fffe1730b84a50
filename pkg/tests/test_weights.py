"""Weight systems, multiplicities, and the maximality bound."""

from fractions import Fraction

import pytest

from hdt.cascade import strongly_orthogonal_cascade
from hdt.hermitian import catalog, compact_nodes, pair_by_label
from hdt.weights import (
    _weyl_dimension,
    compact_fundamental_weights,
    compact_reflection,
    extend_compact_coords,
    freudenthal_multiplicity,
    lambda_one,
    rho_vectors,
    verify_weight_bound,
    weight_multiplicities,
    weight_on_coroot,
    weight_system,
)


def test_rho_unit_coordinates_everywhere():
    for pr in catalog():
        rho, _ = rho_vectors(pr)
        assert all(c == 1 for c in rho)


def test_su11_rho_values():
    pr = pair_by_label("su11")
    rho, rho_n = rho_vectors(pr)
    assert rho == (Fraction(1),)  # rho = alpha_1 / 2, so rho(h_1) = 1
    assert 2 * rho_n[0] == 2  # 2 rho_n(h_1) = p


def test_sp2_rho_n():
    pr = pair_by_label("sp2")
    rs = pr.root_system
    _, rho_n = rho_vectors(pr)
    for g in strongly_orthogonal_cascade(pr).gammas:
        assert 2 * weight_on_coroot(rs, rho_n, g) == 3


def test_lambda_one_definition():
    for pr in catalog():
        lam1 = lambda_one(pr)
        assert lam1[pr.node] == 1
        assert all(lam1[i] == 0 for i in range(pr.root_system.rank) if i != pr.node)


def test_lambda_one_on_cascade_coroots():
    for pr in catalog():
        rs = pr.root_system
        lam1 = lambda_one(pr)
        for g in strongly_orthogonal_cascade(pr).gammas:
            assert weight_on_coroot(rs, lam1, g) == 1


def test_weight_system_trivial():
    pr = pair_by_label("sp3")
    ws = weight_system(pr, extend_compact_coords(pr, [0, 0]))
    assert ws.weights == (ws.highest,)
    assert ws.highest == (Fraction(0),) * 3


def test_weight_system_su11_always_singleton():
    pr = pair_by_label("su11")
    ws = weight_system(pr, (Fraction(0),))
    assert len(ws.weights) == 1


def test_weight_system_su22_fundamental():
    pr = pair_by_label("su22")
    lam0 = compact_fundamental_weights(pr)[0]
    ws = weight_system(pr, lam0)
    assert len(ws.weights) == 2  # defining rep of one A1 factor


def test_weight_system_rejects_bad_input():
    pr = pair_by_label("su22")
    with pytest.raises(ValueError):
        weight_system(pr, extend_compact_coords(pr, [-1, 0]))
    with pytest.raises(ValueError):
        weight_system(pr, (Fraction(1, 2), Fraction(0), Fraction(0)))
    with pytest.raises(ValueError):
        weight_system(pr, (Fraction(0), Fraction(1), Fraction(0)))  # nonzero on node


def test_freudenthal_highest_and_trivial():
    pr = pair_by_label("su23")
    lam0 = compact_fundamental_weights(pr)[0]
    ws = weight_system(pr, lam0)
    assert freudenthal_multiplicity(ws, ws.highest) == 1
    triv = weight_system(pr, extend_compact_coords(pr, [0, 0, 0]))
    assert freudenthal_multiplicity(triv, triv.highest) == 1
    with pytest.raises(ValueError):
        freudenthal_multiplicity(ws, extend_compact_coords(pr, [7, 7, 7]))


def test_freudenthal_a2_adjoint_zero_weight():
    # compact part of su(1,3) is A2; its adjoint has zero-weight multiplicity 2
    pr = pair_by_label("su13")
    lam0 = extend_compact_coords(pr, [1, 1])
    ws = weight_system(pr, lam0)
    assert len(ws.weights) == 7  # 8-dimensional adjoint, zero weight twice
    # the compact-zero weight: vanishes on the compact coroots (nodes 2, 3)
    zeros = [mu for mu in ws.weights if mu[1] == 0 and mu[2] == 0]
    assert len(zeros) == 1
    assert freudenthal_multiplicity(ws, zeros[0]) == 2
    mults = weight_multiplicities(ws)
    assert sum(mults.values()) == 8


@pytest.mark.parametrize("label,idx", [("su13", 0), ("su23", 1), ("sp3", 0), ("so2_5", 1)])
def test_multiplicities_sum_to_weyl_dimension(label, idx):
    # cross-oracle: recursive multiplicities against the dimension formula
    pr = pair_by_label(label)
    fws = compact_fundamental_weights(pr)
    lam0 = fws[idx % len(fws)]
    ws = weight_system(pr, lam0)
    assert sum(weight_multiplicities(ws).values()) == _weyl_dimension(pr, lam0)


def test_weyl_invariance_of_weight_set():
    pr = pair_by_label("su23")
    lam0 = compact_fundamental_weights(pr)[1]
    ws = weight_system(pr, lam0)
    wset = set(ws.weights)
    for node in compact_nodes(pr):
        assert {compact_reflection(pr, node, mu) for mu in wset} == wset


def test_weight_bound_trivial_rep():
    pr = pair_by_label("sp2")
    ws = weight_system(pr, extend_compact_coords(pr, [0]))
    rep = verify_weight_bound(pr, ws)
    assert rep.bound == 0
    assert rep.max_value == 0
    assert rep.equality_attained


def test_weight_bound_exhaustive_small():
    for label in ("su23", "sp3", "sostar10", "so2_7"):
        pr = pair_by_label(label)
        for lam0 in compact_fundamental_weights(pr)[:3]:
            ws = weight_system(pr, lam0)
            rep = verify_weight_bound(pr, ws)  # raises on violation
            assert rep.equality_attained


def test_weight_bound_max_is_lambda0_on_h_r():
    # the reduction that turns the family of inequalities into a single one
    for label in ("su22", "su23", "sp3", "e3iii"):
        pr = pair_by_label(label)
        rs = pr.root_system
        gammas = strongly_orthogonal_cascade(pr).gammas
        lam0 = compact_fundamental_weights(pr)[0]
        ws = weight_system(pr, lam0)
        vals = [
            weight_on_coroot(rs, mu, g) for mu in ws.weights for g in gammas
        ]
        assert max(vals) == weight_on_coroot(rs, lam0, gammas[-1])


def test_dominance_orbit_step():
    # explicit orbit computation: reflect each weight to the dominant chamber
    # of the compact part, apply the same word to gamma_j, and check
    # (lambda0 | w gamma_j) <= (lambda0 | gamma_r)
    from hdt.weights import inner_weight_root

    pr = pair_by_label("sp3")
    rs = pr.root_system
    gammas = strongly_orthogonal_cascade(pr).gammas
    lam0 = compact_fundamental_weights(pr)[1]
    ws = weight_system(pr, lam0)
    nodes = compact_nodes(pr)
    for mu in ws.weights:
        word = []
        cur = mu
        while True:
            neg = next((i for i in nodes if cur[i] < 0), None)
            if neg is None:
                break
            word.append(neg)
            cur = compact_reflection(pr, neg, cur)
        assert cur == ws.highest  # dominant conjugate is the highest weight
        for g in gammas:
            img = tuple(Fraction(c) for c in g)
            for node in word:  # same word, applied in the same order
                img = rs.reflect(rs.simple_roots[node], img)
            assert inner_weight_root(rs, lam0, img) <= inner_weight_root(
                rs, lam0, gammas[-1]
            )
