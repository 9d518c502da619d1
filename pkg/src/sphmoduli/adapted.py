"""Decision procedures for adapted and N-adapted spherical roots.

Singleton tests evaluate an explicit list of lattice and dual-cone
conditions.  Subset tests assemble the unique candidate system (parabolic
set, root set, colors with their pairings) and verify its axioms together
with the two dual-cone conditions; the abstract color set is searched over
all identifications consistent with equal pairings.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Optional, Sequence

from .rootsys import RootSystem
from .sphroots import (
    KIND_DOUBLE,
    KIND_PAIR,
    KIND_SIMPLE,
    SphericalRoot,
    compatible_with_sp,
    spherical_root_catalog,
)
from .wmonoid import Functional, WeightMonoidContext

# Failing-condition tags for singleton verdicts, in evaluation order.
COND_LATTICE = "not_in_lattice"
COND_COMPAT = "incompatible_parabolic"
COND_RAYS = "ray_not_coroot_multiple"
COND_COLOR_COUNT = "color_count"
COND_COLOR_CONE = "color_outside_dual_cone"
COND_DUAL_BOUND = "dual_value_above_one"
COND_HALF_LATTICE = "half_root_in_lattice"
COND_PARITY = "odd_coroot_value"
COND_COROOT_MATCH = "coroot_mismatch"


class SearchBudgetExceeded(RuntimeError):
    def __init__(self, message: str, partial):
        super().__init__(message)
        self.partial = partial


@dataclass(frozen=True)
class SingletonVerdict:
    root: SphericalRoot
    ok: bool
    failed: Optional[str] = None

    def __bool__(self):
        return self.ok


def _coroot_is_ray_multiple(ctx: WeightMonoidContext, k: int) -> bool:
    """Is some coroot of a simple root outside sp a positive multiple of the
    k-th dual basis functional?"""
    target = ctx.dual_basis[k]
    for i in range(ctx.n):
        if i in ctx.sp_gamma:
            continue
        if ctx.coroot_functional(i).positive_multiple_of(target):
            return True
    return False


def _singleton(ctx: WeightMonoidContext, root: SphericalRoot, strict: bool) -> SingletonVerdict:
    """Shared body of the two singleton tests.  `strict` selects the variant
    where a simple root needs both color functionals distinct and where the
    doubled simple root drops the half-not-in-lattice requirement."""
    rs = ctx.rs
    coeffs = ctx.in_lattice_root(root.coords)
    if coeffs is None:
        return SingletonVerdict(root, False, COND_LATTICE)
    if not compatible_with_sp(rs, root, ctx.sp_gamma):
        return SingletonVerdict(root, False, COND_COMPAT)
    if root.kind != KIND_SIMPLE:
        for k, c in enumerate(coeffs):
            if c > 0 and not _coroot_is_ray_multiple(ctx, k):
                return SingletonVerdict(root, False, COND_RAYS)
    if root.kind == KIND_SIMPLE:
        colors = ctx.color_functionals(root.simple_index)
        wanted = (2,) if strict else (1, 2)
        if len(colors) not in wanted:
            return SingletonVerdict(root, False, COND_COLOR_COUNT)
        if not all(f.is_nonnegative() for f in colors):
            return SingletonVerdict(root, False, COND_COLOR_CONE)
        if any(c > 1 for c in coeffs):
            return SingletonVerdict(root, False, COND_DUAL_BOUND)
    if root.kind == KIND_DOUBLE:
        i = root.simple_index
        half = tuple(1 if j == i else 0 for j in range(ctx.n))
        if not strict and ctx.in_lattice_root(half) is not None:
            return SingletonVerdict(root, False, COND_HALF_LATTICE)
        if any(w[i] % 2 for w in ctx.basis):
            return SingletonVerdict(root, False, COND_PARITY)
    if root.kind == KIND_PAIR:
        i, j = sorted(root.support)
        if any(w[i] != w[j] for w in ctx.basis):
            return SingletonVerdict(root, False, COND_COROOT_MATCH)
    return SingletonVerdict(root, True, None)


def is_adapted_singleton(ctx: WeightMonoidContext, root: SphericalRoot) -> SingletonVerdict:
    return _singleton(ctx, root, strict=False)


def is_n_adapted_singleton(ctx: WeightMonoidContext, root: SphericalRoot) -> SingletonVerdict:
    return _singleton(ctx, root, strict=True)


@dataclass(frozen=True)
class TangentReport:
    weights: tuple            # SphericalRoots, sorted by coords
    rejected: tuple           # (SphericalRoot, failing tag) pairs

    @property
    def dimension(self) -> int:
        return len(self.weights)

    def weight_coords(self) -> set:
        return {w.coords for w in self.weights}


def tangent_space(ctx: WeightMonoidContext) -> TangentReport:
    """Weights of the tangent space at the most degenerate point: the catalog
    roots that pass the strict singleton test, each with multiplicity one."""
    weights = []
    rejected = []
    for root in spherical_root_catalog(ctx.rs):
        verdict = is_n_adapted_singleton(ctx, root)
        if verdict.ok:
            weights.append(root)
        else:
            rejected.append((root, verdict.failed))
    return TangentReport(tuple(weights), tuple(rejected))


# ---------------------------------------------------------------------------
# Subset-level machinery
# ---------------------------------------------------------------------------

AXIOM_KEYS = (
    "lattice", "color_pair",
    "A1", "A2", "A3", "Sigma1", "Sigma2", "S",
    "a1", "a2", "sigma1", "sigma2", "s",
    "rays", "dual_cone",
)


@dataclass(frozen=True)
class ColorData:
    kind: str                 # "a", "2a" or "b"
    anchor: tuple             # token ids (kind a) or simple-root indices (2a, b)
    functional: Functional


@dataclass
class SphericalSystemCheck:
    sp: frozenset
    sigma: tuple
    colors: tuple = ()
    verdicts: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.verdicts.get(k, True) for k in AXIOM_KEYS)


def check_system_axioms(
    rs: RootSystem,
    sp: Iterable[int],
    sigma: Sequence[SphericalRoot],
    pairing: dict,
) -> SphericalSystemCheck:
    """Verify the axioms of a candidate system on abstract data.

    `pairing` maps each color id to its integer values on the elements of
    `sigma` (in order).  Raises ValueError on structurally malformed input.
    """
    sp = frozenset(sp)
    sigma = tuple(sigma)
    if len({r.coords for r in sigma}) != len(sigma):
        raise ValueError("sigma contains repeated roots")
    for cid, values in pairing.items():
        if len(values) != len(sigma):
            raise ValueError(f"pairing for color {cid!r} has wrong length")
    verdicts = {}
    simple_positions = [k for k, r in enumerate(sigma) if r.kind == KIND_SIMPLE]
    a_of = {
        k: [cid for cid, values in pairing.items() if values[k] == 1]
        for k in simple_positions
    }

    verdicts["A1"] = all(
        v <= 1 and (v != 1 or sigma[k].kind == KIND_SIMPLE)
        for values in pairing.values()
        for k, v in enumerate(values)
    )
    ok2 = True
    for k in simple_positions:
        if len(a_of[k]) != 2:
            ok2 = False
            continue
        dplus, dminus = a_of[k]
        i = sigma[k].simple_index
        for m, r in enumerate(sigma):
            if pairing[dplus][m] + pairing[dminus][m] != rs.pairing(i, r.coords):
                ok2 = False
    verdicts["A2"] = ok2
    covered = {cid for k in simple_positions for cid in a_of[k]}
    verdicts["A3"] = covered == set(pairing)
    verdicts["Sigma1"] = _axiom_sigma1(rs, sigma)
    verdicts["Sigma2"] = _axiom_sigma2(rs, sigma)
    verdicts["S"] = all(compatible_with_sp(rs, r, sp) for r in sigma)
    return SphericalSystemCheck(sp=sp, sigma=sigma, verdicts=verdicts)


def _axiom_sigma1(rs: RootSystem, sigma: Sequence[SphericalRoot]) -> bool:
    for r in sigma:
        if r.kind != KIND_DOUBLE:
            continue
        i = r.simple_index
        for other in sigma:
            if other.coords == r.coords:
                continue
            v = rs.pairing(i, other.coords)
            if v % 2 or v > 0:
                return False
    return True


def _axiom_sigma2(rs: RootSystem, sigma: Sequence[SphericalRoot]) -> bool:
    for r in sigma:
        if r.kind != KIND_PAIR:
            continue
        i, j = sorted(r.support)
        for other in sigma:
            if rs.pairing(i, other.coords) != rs.pairing(j, other.coords):
                return False
    return True


def _token_partitions(tokens: list, functionals: dict):
    """All partitions of color tokens into functional-homogeneous blocks that
    keep the two tokens of any one simple root apart.  Tokens are (k, sign)
    with k the position of the root in sigma."""
    by_functional: dict = {}
    for t in tokens:
        by_functional.setdefault(functionals[t].values, []).append(t)

    def partitions_of(group: list):
        if not group:
            yield []
            return
        first, rest = group[0], group[1:]
        for sub in partitions_of(rest):
            for b, block in enumerate(sub):
                if any(t[0] == first[0] for t in block):
                    continue
                yield sub[:b] + [[first] + block] + sub[b + 1:]
            yield [[first]] + sub

    groups = [sorted(g) for g in by_functional.values()]
    for combo in product(*(list(partitions_of(g)) for g in groups)):
        blocks = [tuple(b) for part in combo for b in part]
        yield sorted(blocks)


def is_adapted_subset(ctx: WeightMonoidContext, sigma: Sequence[SphericalRoot]) -> SphericalSystemCheck:
    """Decide whether the root set is realized by some spherical variety with
    this weight monoid, by building the unique candidate system and checking
    every axiom plus the two dual-cone conditions."""
    rs = ctx.rs
    sp = ctx.sp_gamma
    sigma = tuple(sorted({r.coords: r for r in sigma}.values(), key=lambda r: r.coords))
    check = SphericalSystemCheck(sp=sp, sigma=sigma)
    v = check.verdicts
    for key in AXIOM_KEYS:
        v[key] = True

    coeff_map = {}
    for r in sigma:
        coeffs = ctx.in_lattice_root(r.coords)
        if coeffs is None:
            v["lattice"] = False
            return check
        coeff_map[r.coords] = coeffs

    simple_positions = [k for k, r in enumerate(sigma) if r.kind == KIND_SIMPLE]
    tokens = []
    token_functional = {}
    for k in simple_positions:
        colors = ctx.color_functionals(sigma[k].simple_index)
        if len(colors) not in (1, 2):
            v["color_pair"] = False
            return check
        f_plus, f_minus = colors[0], colors[-1]
        tokens += [(k, "+"), (k, "-")]
        token_functional[(k, "+")] = f_plus
        token_functional[(k, "-")] = f_minus

    # Axioms on the restriction of the pairings to the root set.
    values = {
        t: tuple(token_functional[t](coeff_map[r.coords]) for r in sigma)
        for t in tokens
    }
    v["A1"] = all(
        val <= 1 and (val != 1 or sigma[k].kind == KIND_SIMPLE)
        for vals in values.values()
        for k, val in enumerate(vals)
    )
    v["Sigma1"] = _axiom_sigma1(rs, sigma)
    v["Sigma2"] = _axiom_sigma2(rs, sigma)
    v["S"] = all(compatible_with_sp(rs, r, sp) for r in sigma)

    # Augmentation of the pairing to the full lattice generated by F.
    v["a1"] = True
    v["a2"] = all(
        (token_functional[(k, "+")] + token_functional[(k, "-")]).values
        == ctx.coroot_functional(sigma[k].simple_index).values
        for k in simple_positions
    )
    for r in sigma:
        if r.kind == KIND_DOUBLE:
            i = r.simple_index
            half = tuple(1 if j == i else 0 for j in range(ctx.n))
            if ctx.in_lattice_root(half) is not None or any(w[i] % 2 for w in ctx.basis):
                v["sigma1"] = False
        if r.kind == KIND_PAIR:
            i, j = sorted(r.support)
            if any(w[i] != w[j] for w in ctx.basis):
                v["sigma2"] = False
    v["s"] = all(
        all(w[i] == 0 for w in ctx.basis) for i in sp
    )

    # Abstract color set: blocks of tokens with equal functionals such that
    # exactly two blocks pair to 1 with each simple member of sigma.
    found_partition = None
    for part in _token_partitions(tokens, token_functional):
        good = True
        for k in simple_positions:
            hit = [b for b in part if values[b[0]][k] == 1]
            if len(hit) != 2:
                good = False
                break
        if good:
            found_partition = part
            break
    if tokens and found_partition is None:
        v["A2"] = False
        part = sorted((t,) for t in tokens)
    else:
        part = found_partition if found_partition is not None else []
    v["A3"] = True  # every block contains a token attached to some simple member

    # Full color set.
    colors = [ColorData("a", b, token_functional[b[0]]) for b in part]
    half_members = {r.simple_index for r in sigma if r.kind == KIND_DOUBLE}
    sigma_simples = {r.simple_index for r in sigma if r.kind == KIND_SIMPLE}
    for i in sorted(half_members):
        colors.append(ColorData("2a", (i,), ctx.coroot_functional(i).scaled(Fraction(1, 2))))
    b_nodes = [
        i for i in range(ctx.n)
        if i not in sp and i not in sigma_simples and i not in half_members
    ]
    for block in _b_color_classes(rs, sigma, b_nodes):
        colors.append(ColorData("b", block, ctx.coroot_functional(block[0])))
    check.colors = tuple(colors)

    color_functionals = [c.functional for c in colors] + [
        ctx.coroot_functional(i) for block in _b_color_classes(rs, sigma, b_nodes)
        for i in block[1:]
    ]
    for k in range(ctx.r):
        positive_somewhere = any(coeff_map[r.coords][k] > 0 for r in sigma)
        if positive_somewhere and not any(
            f.positive_multiple_of(ctx.dual_basis[k]) for f in color_functionals
        ):
            v["rays"] = False
    v["dual_cone"] = all(f.is_nonnegative() for f in color_functionals)
    return check


def _b_color_classes(rs: RootSystem, sigma: Sequence[SphericalRoot], nodes: list) -> list:
    """Group the remaining simple roots: two are identified when they are
    orthogonal and their sum is a member of sigma."""
    pair_supports = [frozenset(r.support) for r in sigma if r.kind == KIND_PAIR]
    parent = {i: i for i in nodes}

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in nodes:
        for j in nodes:
            if i < j and frozenset((i, j)) in pair_supports:
                parent[find(i)] = find(j)
    blocks: dict = {}
    for i in nodes:
        blocks.setdefault(find(i), []).append(i)
    return [tuple(sorted(b)) for b in sorted(blocks.values())]


@dataclass(frozen=True)
class NAdaptedVerdict:
    ok: bool
    witness: Optional[tuple] = None     # the adapted set it contracts from
    check: Optional[SphericalSystemCheck] = None

    def __bool__(self):
        return self.ok


def is_n_adapted_subset(ctx: WeightMonoidContext, sigma: Sequence[SphericalRoot]) -> NAdaptedVerdict:
    """A set is N-adapted when some adapted set maps onto it by doubling
    exactly its simple members with a single color functional."""
    catalog = {r.coords: r for r in spherical_root_catalog(ctx.rs)}
    sigma = tuple(sorted({r.coords: r for r in sigma}.values(), key=lambda r: r.coords))
    doubled = [r for r in sigma if r.kind == KIND_DOUBLE]
    for choice in product((False, True), repeat=len(doubled)):
        candidate = []
        ok = True
        for r in sigma:
            if r.kind == KIND_DOUBLE and choice[doubled.index(r)]:
                half = tuple(c // 2 for c in r.coords)
                if half not in catalog:
                    ok = False
                    break
                candidate.append(catalog[half])
            else:
                candidate.append(r)
        if not ok:
            continue
        check = is_adapted_subset(ctx, candidate)
        if not check.ok:
            continue
        image = set()
        for r in candidate:
            if r.kind == KIND_SIMPLE and len(ctx.color_functionals(r.simple_index)) == 1:
                image.add(tuple(2 * c for c in r.coords))
            else:
                image.add(r.coords)
        if image == {r.coords for r in sigma}:
            return NAdaptedVerdict(True, tuple(candidate), check)
    return NAdaptedVerdict(False)


@dataclass(frozen=True)
class SubsetRecord:
    roots: tuple
    maximal: bool

    @property
    def dimension(self) -> int:
        return len(self.roots)


def enumerate_n_adapted_subsets(
    ctx: WeightMonoidContext,
    max_size: Optional[int] = None,
    budget: int = 200_000,
) -> list[SubsetRecord]:
    """All N-adapted subsets of the catalog with linearly independent
    vectors, up to `max_size`, with inclusion-maximal ones flagged."""
    from . import linalg

    if max_size is None:
        max_size = ctx.r
    if not 0 <= max_size <= ctx.r:
        raise ValueError(f"max_size {max_size} must lie in 0..{ctx.r}")
    catalog = spherical_root_catalog(ctx.rs)
    accepted = []
    examined = 0

    def record(subset: tuple) -> None:
        if is_n_adapted_subset(ctx, subset).ok:
            accepted.append(subset)

    def extend(start: int, chosen: tuple, rows: list) -> None:
        nonlocal examined
        if examined > budget:
            raise SearchBudgetExceeded(
                f"examined more than {budget} candidate subsets",
                partial=_flag_maximal(accepted),
            )
        examined += 1
        record(chosen)
        if len(chosen) == max_size:
            return
        for idx in range(start, len(catalog)):
            root = catalog[idx]
            new_rows = rows + [[Fraction(c) for c in root.coords]]
            if linalg.rank(new_rows) != len(new_rows):
                continue
            extend(idx + 1, chosen + (root,), new_rows)

    extend(0, (), [])
    return _flag_maximal(accepted)


def _flag_maximal(accepted: list) -> list[SubsetRecord]:
    keys = [frozenset(r.coords for r in subset) for subset in accepted]
    records = []
    order = sorted(range(len(accepted)), key=lambda i: (len(keys[i]), sorted(keys[i])))
    for i in order:
        maximal = not any(keys[i] < keys[j] for j in range(len(accepted)) if j != i)
        records.append(SubsetRecord(tuple(accepted[i]), maximal))
    return records


def check_span_closure(ctx: WeightMonoidContext, sigma: Sequence[SphericalRoot]) -> bool:
    """No catalog root outside the set, lying in its nonnegative integer
    span, may pass the strict singleton test.  Every member must pass it;
    that precondition is enforced."""
    sigma = tuple(sigma)
    for r in sigma:
        if not is_n_adapted_singleton(ctx, r).ok:
            raise ValueError(f"precondition violated: {r.name()} is not N-adapted")
    members = {r.coords for r in sigma}
    for root in spherical_root_catalog(ctx.rs):
        if root.coords in members:
            continue
        if _in_nonnegative_span(root.coords, [r.coords for r in sigma]):
            if is_n_adapted_singleton(ctx, root).ok:
                return False
    return True


def _in_nonnegative_span(target: tuple, generators: list) -> bool:
    if all(c == 0 for c in target):
        return True
    if not generators:
        return False
    head, rest = generators[0], generators[1:]
    bound = min(
        (target[i] // head[i] for i in range(len(target)) if head[i]),
        default=0,
    )
    for k in range(bound + 1):
        remainder = tuple(t - k * h for t, h in zip(target, head))
        if any(x < 0 for x in remainder):
            break
        if _in_nonnegative_span(remainder, rest):
            return True
    return False
