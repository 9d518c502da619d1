"""Root systems for products of simple Dynkin types.

Simple roots carry a single global index 0..n-1, components concatenated in
input order; within a component the numbering follows Bourbaki.  Root
vectors are integer tuples of simple-root coefficients, weights are integer
tuples of fundamental-weight coefficients, so that the pairing of the i-th
simple coroot with a weight is just coordinate i.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

RootVector = tuple  # integer simple-root coefficients
Weight = tuple      # integer fundamental-weight coefficients

_TOKEN = re.compile(r"^([ABCDEFG])(\d+)$")

# Smallest admissible rank per type; E is handled separately.
_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4, "F": 4, "G": 2}
_MAX_RANK = {"F": 4, "G": 2}


class RootSystemError(ValueError):
    """Bad type string or rank constraint violation."""


def _chain(n: int) -> list[list[int]]:
    m = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        m[i][i + 1] = -1
        m[i + 1][i] = -1
    return m


def cartan_block(typ: str, rank: int) -> list[list[int]]:
    """Bourbaki Cartan matrix of one simple type; entry [i][j] = <a_i^v, a_j>."""
    m = _chain(rank)
    if typ == "A":
        pass
    elif typ == "B":
        m[rank - 1][rank - 2] = -2
    elif typ == "C":
        m[rank - 2][rank - 1] = -2
    elif typ == "D":
        m[rank - 2][rank - 1] = 0
        m[rank - 1][rank - 2] = 0
        m[rank - 3][rank - 1] = -1
        m[rank - 1][rank - 3] = -1
    elif typ == "E":
        # Chain 1-3-4-5-..., extra node 2 attached to 4 (Bourbaki).
        m = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
        edges = [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, rank - 1)]
        for i, j in edges:
            m[i][j] = -1
            m[j][i] = -1
    elif typ == "F":
        m[2][1] = -2
    elif typ == "G":
        m = [[2, -3], [-1, 2]]
    else:
        raise RootSystemError(f"unknown type {typ!r}")
    return m


def symmetrizer_block(typ: str, rank: int) -> list[int]:
    if typ in ("A", "D", "E"):
        return [1] * rank
    if typ == "B":
        return [2] * (rank - 1) + [1]
    if typ == "C":
        return [1] * (rank - 1) + [2]
    if typ == "F":
        return [2, 2, 1, 1]
    if typ == "G":
        return [1, 3]
    raise RootSystemError(f"unknown type {typ!r}")


def _validate_rank(typ: str, rank: int, token: str) -> None:
    if typ == "E":
        if rank not in (6, 7, 8):
            raise RootSystemError(f"rank of E must be 6, 7 or 8: {token!r}")
        return
    lo = _MIN_RANK[typ]
    hi = _MAX_RANK.get(typ, None)
    if rank < lo or (hi is not None and rank > hi):
        raise RootSystemError(f"invalid rank for type {typ}: {token!r}")


@dataclass(frozen=True)
class RootSystem:
    components: tuple
    cartan: tuple
    symmetrizer: tuple

    @property
    def rank(self) -> int:
        return len(self.symmetrizer)

    def pairing(self, i: int, v: RootVector) -> int:
        """<a_i^v, v> for a root vector v."""
        row = self.cartan[i]
        return sum(row[j] * v[j] for j in range(self.rank))

    def root_to_weight(self, v: RootVector) -> Weight:
        """Fundamental coordinates of an element of the root lattice."""
        return tuple(self.pairing(i, v) for i in range(self.rank))

    def weight_to_root(self, w: Weight) -> tuple:
        """Rational simple-root coordinates of a weight (the Cartan matrix
        is invertible, so these always exist)."""
        from . import linalg
        if self.rank == 0:
            return ()
        a = [[Fraction(self.cartan[i][j]) for j in range(self.rank)]
             for i in range(self.rank)]
        return tuple(linalg.solve_unique(a, list(w)))

    def simple_roots_orthogonal(self, i: int, j: int) -> bool:
        return self.cartan[i][j] == 0

    def root_norm2(self, v: RootVector) -> Fraction:
        """(v, v) with the normalization (a_i, a_j) = d_i * <a_i^v, a_j>."""
        d = self.symmetrizer
        total = Fraction(0)
        for i in range(self.rank):
            if v[i]:
                for j in range(self.rank):
                    if v[j]:
                        total += Fraction(v[i] * v[j] * d[i] * self.cartan[i][j])
        return total

    def coroot_weight_pairing(self, beta: RootVector, w: Weight) -> Fraction:
        """<w, beta^v> for a root beta and a weight w, exact rational."""
        d = self.symmetrizer
        num = sum(Fraction(d[j] * beta[j] * w[j]) for j in range(self.rank))
        return 2 * num / self.root_norm2(beta)


def build_root_system(type_string: str) -> RootSystem:
    """Parse strings like "A1xA1" or "B3 G2" into a RootSystem."""
    tokens = [t for t in re.split(r"[xX\s]+", type_string.strip()) if t]
    if not tokens:
        raise RootSystemError(f"empty type string {type_string!r}")
    comps = []
    for token in tokens:
        m = _TOKEN.match(token.upper())
        if not m:
            raise RootSystemError(f"cannot parse token {token!r}")
        typ, rank = m.group(1), int(m.group(2))
        _validate_rank(typ, rank, token)
        comps.append((typ, rank))
    total = sum(r for _, r in comps)
    cartan = [[0] * total for _ in range(total)]
    symm: list[int] = []
    off = 0
    for typ, rank in comps:
        block = cartan_block(typ, rank)
        for i in range(rank):
            for j in range(rank):
                cartan[off + i][off + j] = block[i][j]
        symm.extend(symmetrizer_block(typ, rank))
        off += rank
    return RootSystem(
        components=tuple(comps),
        cartan=tuple(tuple(row) for row in cartan),
        symmetrizer=tuple(symm),
    )


def support(v: RootVector) -> frozenset:
    return frozenset(i for i, c in enumerate(v) if c)


def is_dominant(w: Weight) -> bool:
    return all(c >= 0 for c in w)


@lru_cache(maxsize=None)
def positive_roots(rs: RootSystem) -> tuple:
    """All positive roots, by closure of the simple roots under root strings.

    beta + a_i is a root iff p - <a_i^v, beta> > 0 where p is the largest k
    with beta - k*a_i still a root.
    """
    n = rs.rank
    roots = set()
    frontier = []
    for i in range(n):
        v = tuple(1 if j == i else 0 for j in range(n))
        roots.add(v)
        frontier.append(v)
    while frontier:
        new = []
        for beta in frontier:
            for i in range(n):
                p = 0
                lower = list(beta)
                while True:
                    lower[i] -= 1
                    if tuple(lower) in roots:
                        p += 1
                    else:
                        break
                if p - rs.pairing(i, beta) > 0:
                    up = list(beta)
                    up[i] += 1
                    cand = tuple(up)
                    if cand not in roots:
                        roots.add(cand)
                        new.append(cand)
        frontier = new
    return tuple(sorted(roots, key=lambda r: (sum(r), r)))


def positive_root_count(typ: str, rank: int) -> int:
    """Closed-form number of positive roots of one simple type."""
    if typ == "A":
        return rank * (rank + 1) // 2
    if typ in ("B", "C"):
        return rank * rank
    if typ == "D":
        return rank * (rank - 1)
    if typ == "E":
        return {6: 36, 7: 63, 8: 120}[rank]
    if typ == "F":
        return 24
    if typ == "G":
        return 6
    raise RootSystemError(f"unknown type {typ!r}")


@dataclass(frozen=True)
class SubdiagramComponent:
    dynkin_type: str
    rank: int
    indices: tuple            # global indices, sorted
    labelings: tuple          # each maps Bourbaki position 0..rank-1 -> global index


def _connected_components(rs: RootSystem, subset: Iterable[int]) -> list[tuple]:
    todo = set(subset)
    comps = []
    while todo:
        seed = min(todo)
        comp = {seed}
        stack = [seed]
        todo.discard(seed)
        while stack:
            i = stack.pop()
            for j in list(todo):
                if rs.cartan[i][j] != 0:
                    comp.add(j)
                    todo.discard(j)
                    stack.append(j)
        comps.append(tuple(sorted(comp)))
    return sorted(comps)


def _match_labelings(rs: RootSystem, indices: tuple, template: list[list[int]]) -> list[tuple]:
    """All bijections position -> index reproducing the template Cartan matrix."""
    k = len(indices)
    found: list[tuple] = []
    assign: list[int] = []
    used = [False] * k

    def extend(pos: int) -> None:
        if pos == k:
            found.append(tuple(assign))
            return
        for slot in range(k):
            if used[slot]:
                continue
            idx = indices[slot]
            ok = True
            for q in range(pos):
                if rs.cartan[idx][assign[q]] != template[pos][q] or \
                   rs.cartan[assign[q]][idx] != template[q][pos]:
                    ok = False
                    break
            if ok:
                used[slot] = True
                assign.append(idx)
                extend(pos + 1)
                assign.pop()
                used[slot] = False

    extend(0)
    return sorted(found)


def classify_subdiagram(rs: RootSystem, subset: Iterable[int]) -> list[SubdiagramComponent]:
    """Split the induced subdiagram into components, each with its type and
    every Bourbaki-consistent labeling."""
    subset = sorted(set(subset))
    if not subset:
        raise ValueError("subset must be nonempty")
    out = []
    for comp in _connected_components(rs, subset):
        k = len(comp)
        candidates = [t for t in "ABCDEFG"
                      if (k in (6, 7, 8) if t == "E"
                          else k >= _MIN_RANK[t] and k <= _MAX_RANK.get(t, 10 ** 9))]
        match = None
        for typ in candidates:
            labelings = _match_labelings(rs, comp, cartan_block(typ, k))
            if labelings:
                match = SubdiagramComponent(typ, k, comp, tuple(labelings))
                break
        if match is None:
            raise RootSystemError(f"subdiagram {comp} matches no Dynkin type")
        out.append(match)
    return out


def orthogonal_simple_pairs(rs: RootSystem) -> Iterator[tuple]:
    for i, j in combinations(range(rs.rank), 2):
        if rs.cartan[i][j] == 0:
            yield (i, j)
