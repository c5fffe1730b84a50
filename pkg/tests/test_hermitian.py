"""Catalog structure, compact/noncompact partition, and domain dimensions."""

import pytest

from hdt.hermitian import (
    HermitianPair,
    catalog,
    dim_p_plus,
    pair_by_label,
    partition_roots,
)
from hdt.rootsystem import CartanType, build_root_system


def test_catalog_size_and_families():
    labels = [p.label for p in catalog()]
    assert len(labels) == len(set(labels))
    assert len(labels) >= 20
    for want in ("su11", "sp2", "so2_3", "sostar6", "e3iii", "e7vii"):
        assert want in labels


def test_catalog_contains_su11():
    pr = pair_by_label("su11")
    assert pr.cartan_type == CartanType("A", 1)
    assert pr.node == 0


def test_sp2_cominuscule_by_hand():
    # highest root of C2 is 2a1 + a2: node-2 coefficient is 1
    rs = build_root_system(CartanType("C", 2))
    assert rs.highest_root == (2, 1)
    pr = pair_by_label("sp2")
    assert pr.node == 1


def test_e7_unique_cominuscule_node():
    rs = build_root_system(CartanType("E7", 7))
    nodes = [i for i, c in enumerate(rs.highest_root) if c == 1]
    assert nodes == [6]
    assert pair_by_label("e7vii").node == 6


def test_cominuscule_invariant_everywhere():
    for pr in catalog():
        assert pr.root_system.highest_root[pr.node] == 1


def test_invalid_node_rejected():
    with pytest.raises(ValueError):
        HermitianPair(CartanType("C", 2), 0, "bad", "bad")  # coefficient 2


def test_partition_su11():
    part = partition_roots(pair_by_label("su11"))
    assert part.noncompact_pos == ((1,),)
    assert part.compact_pos == ()


def test_partition_sp2_by_hand():
    # C2 positives {a1, a2, a1+a2, 2a1+a2}; node-2 coefficients {0,1,1,1}
    part = partition_roots(pair_by_label("sp2"))
    assert len(part.noncompact_pos) == 3
    assert part.compact_pos == ((1, 0),)


def test_partition_e7vii():
    part = partition_roots(pair_by_label("e7vii"))
    assert len(part.noncompact_pos) == 27


def test_dim_examples():
    assert dim_p_plus(pair_by_label("su11")) == 1
    assert dim_p_plus(pair_by_label("su22")) == 4
    assert dim_p_plus(pair_by_label("sp3")) == 6


def test_dim_closed_forms():
    for pr in catalog():
        d = dim_p_plus(pr)
        label = pr.label
        if label.startswith("su"):
            p, q = int(label[2]), int(label[3])
            assert d == p * q
        elif label.startswith("sp"):
            n = int(label[2:])
            assert d == n * (n + 1) // 2
        elif label.startswith("sostar"):
            n = int(label[6:]) // 2
            assert d == n * (n - 1) // 2
        elif label.startswith("so2_"):
            assert d == int(label[4:])


def test_noncompact_sums_never_roots():
    for lbl in ("su23", "sp3", "sostar8", "e3iii"):
        pr = pair_by_label(lbl)
        rs = pr.root_system
        part = partition_roots(pr)
        for x in part.noncompact_pos:
            for y in part.noncompact_pos:
                s = tuple(a + b for a, b in zip(x, y))
                assert not rs.is_root(s)  # the noncompact subspaces are Abelian


def test_noncompact_closed_under_compact_addition():
    for lbl in ("su23", "sp3", "so2_5"):
        pr = pair_by_label(lbl)
        rs = pr.root_system
        part = partition_roots(pr)
        nset = set(part.noncompact_pos)
        for x in part.noncompact_pos:
            for c in part.compact_pos:
                s = tuple(a + b for a, b in zip(x, c))
                if rs.is_root(s):
                    assert s in nset


def test_label_aliases_and_unknown():
    assert pair_by_label("e6iii") is pair_by_label("e3iii")
    assert pair_by_label("SU11") is pair_by_label("su11")
    with pytest.raises(KeyError):
        pair_by_label("g2")
