from collections import Counter
from fractions import Fraction

import pytest

from sphmoduli import (
    DimensionBudgetExceeded,
    build_chevalley,
    build_irrep,
    build_root_system,
    freudenthal_multiplicities,
    weyl_dimension,
)


def test_a1_sym_square():
    rs = build_root_system("A1")
    mod = build_irrep(rs, (2,))
    assert mod.dim == 3
    assert Counter(tuple(w) for w in mod.weights) == {(2,): 1, (0,): 1, (-2,): 1}


def test_product_dimension():
    rs = build_root_system("A1xA1")
    assert weyl_dimension(rs, (4, 2)) == 15
    assert build_irrep(rs, (4, 2)).dim == 15


def test_a2_adjoint():
    rs = build_root_system("A2")
    mod = build_irrep(rs, (1, 1))
    assert mod.dim == 8
    mults = Counter(tuple(w) for w in mod.weights)
    assert mults[(0, 0)] == 2


def test_dimension_budget():
    rs = build_root_system("B3")
    with pytest.raises(DimensionBudgetExceeded):
        build_irrep(rs, (2, 2, 2), dim_cap=100)
    # the default cap is generous
    assert build_irrep(rs, (1, 0, 0)).dim == 7


@pytest.mark.parametrize("name,lam", [
    ("A1", (3,)),
    ("A2", (2, 1)),
    ("B2", (1, 1)),
    ("B3", (0, 0, 1)),
    ("C3", (0, 1, 0)),
    ("G2", (1, 0)),
    ("G2", (0, 1)),
    ("A3", (1, 0, 1)),
    ("A1xA1", (2, 3)),
])
def test_dimension_and_multiplicities(name, lam):
    rs = build_root_system(name)
    mod = build_irrep(rs, lam)
    assert mod.dim == weyl_dimension(rs, lam)
    freud = freudenthal_multiplicities(rs, lam)
    assert Counter(tuple(w) for w in mod.weights) == freud
    assert sum(freud.values()) == mod.dim


@pytest.mark.parametrize("name,lam", [("A2", (1, 1)), ("B2", (1, 1)), ("G2", (1, 0))])
def test_contravariance_on_all_pairs(name, lam):
    rs = build_root_system(name)
    mod = build_irrep(rs, lam)
    for u in range(mod.dim):
        for w in range(mod.dim):
            for i in range(rs.rank):
                lhs = sum(
                    (c * mod.form(t, w) for t, c in mod.raise_[i].get(u, ())),
                    Fraction(0),
                )
                rhs = sum(
                    (c * mod.form(u, t) for t, c in mod.lower[i].get(w, ())),
                    Fraction(0),
                )
                assert lhs == rhs


def test_highest_vector_killed_by_raising():
    rs = build_root_system("B3")
    mod = build_irrep(rs, (1, 1, 0))
    for i in range(rs.rank):
        assert mod.raise_[i].get(0, []) == []


def test_root_operator_commutator_is_coroot_action():
    # [X_b, X_-b] acts on a weight vector by the coroot pairing
    rs = build_root_system("G2")
    alg = build_chevalley(rs)
    mod = build_irrep(rs, (0, 1))
    beta = (3, 2)  # a long positive root
    neg = (-3, -2)
    for idx in range(mod.dim):
        v = [Fraction(0)] * mod.dim
        v[idx] = Fraction(1)
        up = mod.apply_root(alg, beta, mod.apply_root(alg, neg, v))
        down = mod.apply_root(alg, neg, mod.apply_root(alg, beta, v))
        commutator = [a - b for a, b in zip(up, down)]
        scale = rs.coroot_weight_pairing(beta, mod.weights[idx])
        assert commutator == [scale * x for x in v]


def test_nondominant_rejected():
    rs = build_root_system("A2")
    with pytest.raises(ValueError):
        build_irrep(rs, (1, -1))
