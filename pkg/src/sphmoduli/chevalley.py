"""Integer structure constants for the simple Lie algebra of a root system.

Basis: one operator per root plus the simple coroots, normalized so that
bracketing a root operator with its opposite gives the coroot.  Signs are
fixed by choosing the constant +(p+1) on the pair (eps, gamma - eps) with
eps minimal in a fixed root order; the remaining constants follow from the
cyclic and four-term identities among the constants.
"""

from __future__ import annotations

from fractions import Fraction

from .rootsys import RootSystem, positive_roots


def _neg(v: tuple) -> tuple:
    return tuple(-c for c in v)


def _add(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def _sub(a: tuple, b: tuple) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


class ChevalleyAlgebra:
    """Frozen bracket table; see build_chevalley."""

    def __init__(self, rs: RootSystem, pos_roots: tuple, constants: dict, decomposition: dict):
        self.rs = rs
        self.pos_roots = pos_roots          # ordered by (height, coords)
        self.constants = constants          # (signed root, signed root) -> int
        self.decomposition = decomposition  # non-simple positive gamma -> (eps, delta)
        self.root_set = set(pos_roots) | {_neg(r) for r in pos_roots}

    def is_root(self, v: tuple) -> bool:
        return v in self.root_set

    def string_p(self, a: tuple, b: tuple) -> int:
        """Largest k >= 0 with b - k*a a root."""
        p = 0
        cur = b
        while True:
            cur = _sub(cur, a)
            if self.is_root(cur):
                p += 1
            else:
                return p

    def constant(self, a: tuple, b: tuple) -> int:
        return self.constants.get((a, b), 0)

    def coroot_coefficients(self, a: tuple) -> tuple:
        """Coefficients of a^v on the simple coroots."""
        rs = self.rs
        norm = rs.root_norm2(a)
        return tuple(
            Fraction(2 * rs.symmetrizer[j] * a[j]) / norm for j in range(rs.rank)
        )

    def bracket(self, x: dict, y: dict) -> dict:
        """Bracket of algebra elements given as {key: coeff} over the basis
        keys ('x', root) and ('h', i)."""
        out: dict = {}

        def put(key, coeff):
            if coeff:
                out[key] = out.get(key, Fraction(0)) + coeff
                if out[key] == 0:
                    del out[key]

        for (k1, c1) in x.items():
            for (k2, c2) in y.items():
                c = c1 * c2
                if k1[0] == "h" and k2[0] == "h":
                    continue
                if k1[0] == "h" and k2[0] == "x":
                    put(("x", k2[1]), c * self.rs.pairing(k1[1], k2[1]))
                elif k1[0] == "x" and k2[0] == "h":
                    put(("x", k1[1]), -c * self.rs.pairing(k2[1], k1[1]))
                else:
                    a, b = k1[1], k2[1]
                    s = _add(a, b)
                    if all(v == 0 for v in s):
                        for j, hc in enumerate(self.coroot_coefficients(a)):
                            put(("h", j), c * hc)
                    elif self.is_root(s):
                        put(("x", s), c * self.constant(a, b))
        return out


def build_chevalley(rs: RootSystem) -> ChevalleyAlgebra:
    pos = list(positive_roots(rs))
    order = {r: k for k, r in enumerate(pos)}
    pos_set = set(pos)
    all_roots = pos_set | {_neg(r) for r in pos}

    def is_root(v):
        return v in all_roots

    def string_p(a, b):
        p = 0
        cur = b
        while True:
            cur = _sub(cur, a)
            if is_root(cur):
                p += 1
            else:
                return p

    def norm2(v):
        return rs.root_norm2(v)

    constants: dict = {}
    decomposition: dict = {}

    def n_mixed(a: tuple, bneg: tuple) -> Fraction:
        """Constant on the pair (a, -b) with a, b positive and a-b a root,
        expressed through constants on positive pairs."""
        b = _neg(bneg)
        c = _sub(a, b)
        if c in pos_set:
            return -Fraction(norm2(c), norm2(a)) * constants[(b, c)]
        cbar = _neg(c)
        return Fraction(norm2(c), norm2(b)) * constants[(cbar, a)]

    for gamma in pos:
        if sum(gamma) < 2:
            continue
        specials = sorted(
            (
                (b1, _sub(gamma, b1))
                for b1 in pos
                if _sub(gamma, b1) in pos_set and order[b1] < order[_sub(gamma, b1)]
            ),
            key=lambda pair: order[pair[0]],
        )
        eps, delta = specials[0]
        decomposition[gamma] = (eps, delta)
        n0 = string_p(eps, delta) + 1
        constants[(eps, delta)] = n0
        constants[(delta, eps)] = -n0
        for xi, eta in specials[1:]:
            total = Fraction(0)
            d1 = _sub(eta, eps)           # equals delta - xi
            if is_root(d1):
                total += n_mixed(delta, _neg(xi)) * n_mixed(eps, _neg(eta)) / norm2(d1)
            d2 = _sub(xi, eps)
            if is_root(d2):
                total += (-n_mixed(eps, _neg(xi))) * n_mixed(delta, _neg(eta)) / norm2(d2)
            val = Fraction(norm2(gamma)) * total / n0
            if val.denominator != 1 or val == 0:
                raise RuntimeError(f"inconsistent constant for pair {xi}+{eta}")
            constants[(xi, eta)] = int(val)
            constants[(eta, xi)] = -int(val)

    full: dict = {}
    for (a, b), v in constants.items():
        full[(a, b)] = v
        full[(_neg(a), _neg(b))] = -v
    for a in pos:
        for b in pos:
            if a != b and is_root(_sub(a, b)):
                v = n_mixed(a, _neg(b))
                if v.denominator != 1:
                    raise RuntimeError(f"non-integer constant on ({a}, -{b})")
                full[(a, _neg(b))] = int(v)
                full[(_neg(b), a)] = -int(v)
    return ChevalleyAlgebra(
        rs=rs,
        pos_roots=tuple(pos),
        constants=full,
        decomposition=decomposition,
    )
