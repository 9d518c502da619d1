from fractions import Fraction

import pytest

from sphmoduli import (
    build_context,
    build_model,
    build_root_system,
    codim1_orbit_weights,
    compatible_with_sp,
    invariant_quotient_weights,
    oracle_tangent_weights,
    positive_roots,
    spherical_root_catalog,
    tangent_space,
)
from sphmoduli import linalg
from sphmoduli.chevalley import _neg


@pytest.fixture(scope="module")
def crossed_lines_model(crossed_lines):
    return build_model(crossed_lines)


def test_crossed_lines_oracle_weights(crossed_lines, crossed_lines_model):
    rep = oracle_tangent_weights(crossed_lines_model)
    assert rep.weights == {(1, 0): 1, (0, 2): 1}
    assert rep.flagged == []
    assert rep.weight_coords() == tangent_space(crossed_lines).weight_coords()


def test_crossed_lines_quotient_contains_simple_root(crossed_lines_model):
    quot = invariant_quotient_weights(crossed_lines_model)
    assert (1, 0) in quot
    assert quot[(1, 0)].dimension == 1
    # the doubled first root shows up in the quotient but not in the tangent
    assert (2, 0) in quot


def test_sl2_oracle(sl2_even):
    model = build_model(sl2_even)
    rep = oracle_tangent_weights(model)
    assert rep.weights == {(2,): 1}


def test_codim1_crossed_lines(crossed_lines):
    assert codim1_orbit_weights(crossed_lines) == frozenset({0})


def test_codim1_sl2(sl2_even):
    assert codim1_orbit_weights(sl2_even) == frozenset()


def test_codim1_flag_like():
    ctx = build_context(build_root_system("A2"), [(1, 0), (0, 1)])
    assert codim1_orbit_weights(ctx) == frozenset()
    # the second weight is the only one touching the second node, so only the
    # first degeneration has codimension one
    ctx2 = build_context(build_root_system("A2"), [(1, 0), (1, 1)])
    assert codim1_orbit_weights(ctx2) == frozenset({0})
    # here every node touched by one weight is touched by the other as well
    ctx3 = build_context(build_root_system("A2"), [(1, 1), (2, 1)])
    assert codim1_orbit_weights(ctx3) == frozenset({0, 1})


def test_base_point_orbit_basis(crossed_lines, crossed_lines_model):
    # the listed spanning vectors are independent and the image of every
    # algebra basis element applied to the base point stays in their span
    model = crossed_lines_model
    basis = list(model.gx0_vectors.values())
    rows = [list(v) for v in basis]
    assert linalg.rank(rows) == len(basis)
    expected = crossed_lines.r + len(
        [b for b in positive_roots(crossed_lines.rs) if b not in set(crossed_lines.f_perp)]
    )
    assert len(basis) == expected
    for beta in positive_roots(crossed_lines.rs):
        for signed in (beta, _neg(beta)):
            img = model.apply_root(signed, model.x0)
            assert linalg.in_span(rows, img)
    for i in range(crossed_lines.rs.rank):
        h_img = [Fraction(0)] * model.dim
        for k, lam in enumerate(crossed_lines.basis):
            vec = model.gx0_vectors[("hw", k)]
            for t, c in enumerate(vec):
                h_img[t] += lam[i] * c
        assert linalg.in_span(rows, h_img)


def _quotient_properties(ctx):
    model = build_model(ctx)
    quot = invariant_quotient_weights(model)
    catalog = {r.coords: r for r in spherical_root_catalog(ctx.rs)}
    for gamma, space in quot.items():
        root = catalog.get(gamma)
        assert root is not None, f"{gamma} not in the catalog"
        assert compatible_with_sp(ctx.rs, root, ctx.sp_gamma)
        if root.kind != "A1":
            assert space.dimension <= 1
        else:
            i = root.simple_index
            p = sum(1 for lam in ctx.basis if lam[i] != 0)
            assert space.dimension == p - 1
    return model, quot


def test_quotient_properties_on_named_contexts(crossed_lines):
    _quotient_properties(crossed_lines)
    _quotient_properties(build_context(build_root_system("A2"), [(1, 0), (0, 1)]))
    _quotient_properties(build_context(build_root_system("B2"), [(2, 0)]))
    _quotient_properties(build_context(build_root_system("A1xA1xA1"), [(2, 2, 0), (0, 2, 2)]))


def test_simple_root_quotient_dimension_counts_nonorthogonal_weights():
    # three weights pairing nontrivially with the same simple root give a
    # two-dimensional invariant quotient there
    ctx = build_context(build_root_system("A3"), [(1, 0, 0), (1, 1, 0), (1, 1, 1)])
    model = build_model(ctx)
    quot = invariant_quotient_weights(model)
    assert quot[(1, 0, 0)].dimension == 2
    # a two-dimensional space at a simple root must not survive to the
    # tangent space (it is cut to at most one dimension)
    rep = oracle_tangent_weights(model)
    assert rep.weights.get((1, 0, 0), 0) <= 1
    assert rep.flagged == []


def test_extension_filter_strictness(crossed_lines, crossed_lines_model):
    # pairing 2 against the codimension-one degeneration kills the class
    quot = invariant_quotient_weights(crossed_lines_model)
    rep = oracle_tangent_weights(crossed_lines_model, quot)
    assert (2, 0) in quot and (2, 0) not in rep.weights


def test_oracle_empty_basis():
    ctx = build_context(build_root_system("A2"), [])
    model = build_model(ctx)
    assert model.dim == 0
    assert oracle_tangent_weights(model).weights == {}


# One context per catalog row kind, with the tangent weights of the
# corresponding classical rank-one degenerations.
CLASSICAL_CASES = [
    ("A1xA1", [(1, 1)], {(1, 1)}),            # orthogonal pair
    ("A2", [(1, 0), (0, 1)], {(1, 1)}),       # chain sum
    ("A3", [(0, 2, 0)], {(1, 2, 1)}),         # doubled middle node
    ("B3", [(1, 0, 0), (0, 0, 1)], {(1, 1, 1)}),
    ("B3", [(1, 0, 0)], {(2, 2, 2)}),         # doubled B-chain
    ("C3", [(0, 1, 0)], {(1, 2, 1)}),
    ("B3", [(0, 0, 2)], {(1, 2, 3)}),
    ("D4", [(2, 0, 0, 0)], {(2, 2, 1, 1)}),   # fork
    ("F4", [(0, 0, 0, 1)], {(1, 2, 3, 2)}),
    ("G2", [(1, 0)], {(4, 2)}),
    ("G2", [(1, 0), (0, 1)], {(1, 1)}),
]


@pytest.mark.parametrize("group,basis,expected", CLASSICAL_CASES)
def test_classical_rank_one_degenerations(group, basis, expected):
    ctx = build_context(build_root_system(group), basis)
    assert tangent_space(ctx).weight_coords() == expected
    rep = oracle_tangent_weights(build_model(ctx))
    assert rep.weight_coords() == expected
    assert all(d == 1 for d in rep.weights.values())


def test_shared_color_context_agreement():
    # context where two simple tangent weights share an abstract color
    ctx = build_context(build_root_system("A3"), [(2, 0, 1), (1, 1, 0), (0, 1, 1)])
    rep = oracle_tangent_weights(build_model(ctx))
    assert rep.weight_coords() == {(1, 0, 0), (0, 0, 1)}
    assert rep.weight_coords() == tangent_space(ctx).weight_coords()


@pytest.mark.parametrize("group,basis", [
    ("A1xA1", [(2, 0), (2, 2)]),
    ("A2", [(2, 2)]),
    ("A2", [(1, 1), (2, 0)]),
    ("B2", [(0, 2), (1, 0)]),
])
def test_oracle_agreement_spot_checks(group, basis):
    ctx = build_context(build_root_system(group), basis)
    rep = oracle_tangent_weights(build_model(ctx))
    assert rep.weight_coords() == tangent_space(ctx).weight_coords()
    assert all(d == 1 for d in rep.weights.values())


def test_simple_tangent_weights_necessary_conditions(battery):
    # a simple root in the tangent space needs at least two non-orthogonal
    # basis weights and lattice coefficients bounded by one
    for _, ctx in battery:
        for root in tangent_space(ctx).weights:
            if root.kind != "A1":
                continue
            i = root.simple_index
            assert sum(1 for lam in ctx.basis if lam[i] != 0) >= 2
            coeffs = ctx.in_lattice_root(root.coords)
            assert all(c <= 1 for c in coeffs)
