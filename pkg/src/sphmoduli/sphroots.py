"""The finite catalog of spherically closed spherical roots.

Every catalog element is supported on a subdiagram of one of the rank-one
support shapes below, with fixed coefficients once the support is numbered
like Bourbaki.  Orthogonal pairs range over all pairs of orthogonal simple
roots, including pairs across product components.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .rootsys import (
    RootSystem,
    classify_subdiagram,
    orthogonal_simple_pairs,
    support,
)

KIND_SIMPLE = "A1"
KIND_DOUBLE = "2A1"
KIND_PAIR = "A1xA1"
KIND_AN_SUM = "An-sum"
KIND_A3_MIDDLE = "A3-middle"
KIND_BN_SUM = "Bn-sum"
KIND_BN_DOUBLE = "Bn-double"
KIND_B3_SPECIAL = "B3-special"
KIND_CN = "Cn"
KIND_DN = "Dn"
KIND_F4 = "F4"
KIND_G2_DOUBLE = "G2-double"
KIND_G2_SUM = "G2-sum"


@dataclass(frozen=True)
class SphericalRoot:
    coords: tuple            # simple-root coefficients, length = rank
    kind: str
    support: frozenset
    labeling: tuple          # Bourbaki position -> global simple-root index

    @property
    def is_simple(self) -> bool:
        return self.kind == KIND_SIMPLE

    @property
    def simple_index(self) -> int:
        """For kinds A1 and 2A1, the index of the underlying simple root."""
        (i,) = self.support
        return i

    def name(self) -> str:
        parts = []
        for i, c in enumerate(self.coords):
            if c == 1:
                parts.append(f"a{i + 1}")
            elif c:
                parts.append(f"{c}*a{i + 1}")
        return "+".join(parts)

    def __repr__(self):
        return f"SphericalRoot({self.name()!r}, {self.kind})"


def _patterns(typ: str, k: int):
    """Coefficient patterns (by Bourbaki position) admitted on one connected
    support of type `typ` and rank `k`."""
    if typ == "A":
        if k == 1:
            return [(KIND_SIMPLE, (1,)), (KIND_DOUBLE, (2,))]
        rows = [(KIND_AN_SUM, (1,) * k)]
        if k == 3:
            rows.append((KIND_A3_MIDDLE, (1, 2, 1)))
        return rows
    if typ == "B":
        rows = [(KIND_BN_SUM, (1,) * k), (KIND_BN_DOUBLE, (2,) * k)]
        if k == 3:
            rows.append((KIND_B3_SPECIAL, (1, 2, 3)))
        return rows
    if typ == "C":
        return [(KIND_CN, (1,) + (2,) * (k - 2) + (1,))]
    if typ == "D":
        return [(KIND_DN, (2,) * (k - 2) + (1, 1))]
    if typ == "F":
        return [(KIND_F4, (1, 2, 3, 2))]
    if typ == "G":
        return [(KIND_G2_DOUBLE, (4, 2)), (KIND_G2_SUM, (1, 1))]
    return []


def _connected_subsets(rs: RootSystem) -> list[tuple]:
    """All connected subsets of simple roots of size >= 2, sorted."""
    n = rs.rank
    found = set()
    for seed in range(n):
        frontier = [frozenset([seed])]
        while frontier:
            cur = frontier.pop()
            neighbors = {
                j for i in cur for j in range(n)
                if j not in cur and rs.cartan[i][j] != 0
            }
            for j in neighbors:
                nxt = cur | {j}
                if nxt not in found:
                    found.add(nxt)
                    frontier.append(nxt)
    return sorted(tuple(sorted(s)) for s in found)


@lru_cache(maxsize=None)
def spherical_root_catalog(rs: RootSystem) -> tuple:
    """All spherically closed spherical roots of the root system, sorted by
    coefficient vector; identical vectors arising from several labelings are
    emitted once."""
    n = rs.rank
    roots: dict = {}

    def emit(kind: str, labeling: tuple, pattern: tuple) -> None:
        coords = [0] * n
        for pos, coeff in enumerate(pattern):
            coords[labeling[pos]] = coeff
        key = tuple(coords)
        if key not in roots:
            roots[key] = SphericalRoot(
                coords=key, kind=kind, support=support(key), labeling=labeling
            )

    for i in range(n):
        emit(KIND_SIMPLE, (i,), (1,))
        emit(KIND_DOUBLE, (i,), (2,))
    for i, j in orthogonal_simple_pairs(rs):
        emit(KIND_PAIR, (i, j), (1, 1))
    for subset in _connected_subsets(rs):
        (comp,) = classify_subdiagram(rs, subset)
        for labeling in comp.labelings:
            for kind, pattern in _patterns(comp.dynkin_type, comp.rank):
                emit(kind, labeling, pattern)
    return tuple(sorted(roots.values(), key=lambda r: r.coords))


def compatible_with_sp(rs: RootSystem, root: SphericalRoot, sp: Iterable[int]) -> bool:
    """Sandwich test: the simple roots pairing to zero with the root, inside
    the support on the left and globally on the right, must bound sp.  The
    B-type sum drops the short end node from both bounds, the C-type shape
    drops its first node from the lower bound only."""
    sp = frozenset(sp)
    zero_in_support = {i for i in root.support if rs.pairing(i, root.coords) == 0}
    zero_global = {i for i in range(rs.rank) if rs.pairing(i, root.coords) == 0}
    if root.kind == KIND_BN_SUM:
        short_end = root.labeling[-1]
        lower = zero_in_support - {short_end}
        upper = zero_global - {short_end}
    elif root.kind == KIND_CN:
        first = root.labeling[0]
        lower = zero_in_support - {first}
        upper = zero_global
    else:
        lower = zero_in_support
        upper = zero_global
    return lower <= sp <= upper
