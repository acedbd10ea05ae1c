"""Exact root systems, Weyl groups, and parabolic combinatorics.

Roots live as integer coordinate tuples in the simple-root basis.  Simple
roots are numbered 1..rank following the Onishchik-Vinberg convention: the
E-series carries the long chain first (node r attached to the chain at
position 3, 4, 5 for E6, E7, E8), F4 runs short end to long end, and G2 puts
the short root first.  Reducible systems are a single datum with a
block-diagonal Cartan matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from functools import cached_property, lru_cache
from math import factorial

from .linalg import Vec, identity, inverse, mat_vec, qvec

ORBIT_CAP_DEFAULT = 10**7


class InvalidTypeError(ValueError):
    """Requested (series, rank) is not a valid simple type."""


class UnsupportedAlgebraError(ValueError):
    """The algebra is outside the supported families."""


class OrbitLimitError(RuntimeError):
    """A Weyl orbit enumeration exceeded its element cap."""


class StructureError(RuntimeError):
    """An internal consistency check failed; indicates a transcription bug."""


_RANK_RANGE = {"A": (1, None), "B": (2, None), "C": (3, None), "D": (4, None),
               "E": (6, 8), "F": (4, 4), "G": (2, 2)}

_EXCEPTIONAL_COUNTS = {("E", 6): 72, ("E", 7): 126, ("E", 8): 240,
                       ("F", 4): 48, ("G", 2): 12}

_EXCEPTIONAL_WEYL = {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
                     ("F", 4): 1152, ("G", 2): 12}


def simple_cartan(series: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix entries <alpha_i | alpha_j> in OV numbering."""
    lo, hi = _RANK_RANGE.get(series, (None, None))
    if lo is None or rank < lo or (hi is not None and rank > hi):
        raise InvalidTypeError(f"no simple type {series}{rank}")
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def bond(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    if series in ("A", "B", "C", "F"):
        for i in range(rank - 1):
            bond(i, i + 1)
        if series == "B":
            bond(rank - 2, rank - 1, -2, -1)
        elif series == "C":
            bond(rank - 2, rank - 1, -1, -2)
        elif series == "F":
            bond(1, 2, -1, -2)
    elif series == "D":
        for i in range(rank - 2):
            bond(i, i + 1)
        bond(rank - 3, rank - 1)
    elif series == "E":
        for i in range(rank - 2):
            bond(i, i + 1)
        bond({6: 2, 7: 3, 8: 4}[rank], rank - 1)
    elif series == "G":
        bond(0, 1, -1, -3)
    return tuple(tuple(row) for row in a)


def classify_component(cart, nodes) -> tuple[str, int]:
    """Canonical (series, rank) of one connected Cartan block.

    Canonical means B2 for the rank-two double-bond diagram and A for any
    simply-laced path, so D3 never appears as a name.
    """
    n = len(nodes)
    if n == 1:
        return ("A", 1)
    sub = {i: {j for j in nodes if j != i and cart[i][j] != 0} for i in nodes}
    bonds = {frozenset((i, j)): cart[i][j] * cart[j][i]
             for i in nodes for j in sub[i] if i < j}
    maxbond = max(bonds.values())
    if maxbond == 3:
        if n != 2:
            raise StructureError("triple bond in a diagram of rank != 2")
        return ("G", 2)
    degrees = {i: len(sub[i]) for i in nodes}
    if maxbond == 1:
        tri = [i for i in nodes if degrees[i] == 3]
        if not tri:
            if any(d > 2 for d in degrees.values()):
                raise StructureError("diagram is not of finite type")
            return ("A", n)
        if len(tri) > 1 or any(d > 3 for d in degrees.values()):
            raise StructureError("diagram is not of finite type")
        center = tri[0]
        lengths = sorted(_branch_length(sub, center, first) for first in sub[center])
        if lengths[0] != 1:
            raise StructureError("diagram is not of finite type")
        if lengths[1] == 1:
            return ("D", n)
        if lengths[1] == 2 and lengths[2] in (2, 3, 4):
            return ("E", n)
        raise StructureError("diagram is not of finite type")
    if any(d > 2 for d in degrees.values()) or list(bonds.values()).count(2) != 1:
        raise StructureError("diagram is not of finite type")
    if n == 2:
        return ("B", 2)
    # relative squared lengths from the symmetrizer d_i a_ij = d_j a_ji
    d = {nodes[0]: Q(1)}
    todo = [nodes[0]]
    while todo:
        i = todo.pop()
        for j in sub[i]:
            if j not in d:
                d[j] = d[i] * cart[j][i] / cart[i][j]
                todo.append(j)
    dmax = max(d.values())
    nlong = sum(1 for v in d.values() if v == dmax)
    if n == 4 and nlong == 2:
        return ("F", 4)
    if nlong == 1:
        return ("C", n)
    if nlong == n - 1:
        return ("B", n)
    raise StructureError("diagram is not of finite type")


def _branch_length(sub, center, first) -> int:
    length, prev, cur = 1, center, first
    while True:
        nxt = [j for j in sub[cur] if j != prev]
        if not nxt:
            return length
        if len(nxt) > 1:
            raise StructureError("diagram is not of finite type")
        prev, cur = cur, nxt[0]
        length += 1


def _simple_root_count(series: str, rank: int) -> int:
    if series == "A":
        return rank * (rank + 1)
    if series in ("B", "C"):
        return 2 * rank * rank
    if series == "D":
        return 2 * rank * (rank - 1)
    return _EXCEPTIONAL_COUNTS[(series, rank)]


def _simple_weyl_order(series: str, rank: int) -> int:
    if series == "A":
        return factorial(rank + 1)
    if series in ("B", "C"):
        return 2**rank * factorial(rank)
    if series == "D":
        return 2 ** (rank - 1) * factorial(rank)
    return _EXCEPTIONAL_WEYL[(series, rank)]


@dataclass(frozen=True)
class RootDatum:
    """A (possibly reducible) root system with exact Killing pairings."""

    cartan: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @cached_property
    def component_nodes(self) -> tuple[tuple[int, ...], ...]:
        """Connected components as sorted tuples of 1-based node indices."""
        seen, comps = set(), []
        for start in range(self.rank):
            if start in seen:
                continue
            comp, todo = {start}, [start]
            while todo:
                i = todo.pop()
                for j in range(self.rank):
                    if j not in comp and self.cartan[i][j] != 0:
                        comp.add(j)
                        todo.append(j)
            seen |= comp
            comps.append(tuple(sorted(i + 1 for i in comp)))
        return tuple(comps)

    @cached_property
    def components(self) -> tuple[tuple[str, int], ...]:
        """Component types, sorted; canonical names (A1, B2, ...)."""
        out = []
        for nodes in self.component_nodes:
            out.append(classify_component(self.cartan, tuple(i - 1 for i in nodes)))
        return tuple(sorted(out))

    @property
    def label(self) -> str:
        return "+".join(f"{s}{r}" for s, r in self.components)

    def pairing(self, v, i: int) -> Q:
        """Cartan pairing <v | alpha_i> for v in simple-root coordinates."""
        col = i - 1
        return sum(v[k] * self.cartan[k][col] for k in range(self.rank))

    def reflect(self, v, i: int):
        c = self.pairing(v, i)
        out = list(v)
        out[i - 1] -= c
        return tuple(out)

    @cached_property
    def roots(self) -> tuple[tuple[int, ...], ...]:
        n = self.rank
        cart = self.cartan
        cols = tuple(tuple(cart[k][i] for k in range(n)) for i in range(n))
        simples = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
        seen = set(simples)
        todo = list(simples)
        while todo:
            v = todo.pop()
            for i in range(n):
                col = cols[i]
                c = sum(v[k] * col[k] for k in range(n) if v[k])
                if c:
                    w = list(v)
                    w[i] -= c
                    w = tuple(w)
                    if w not in seen:
                        seen.add(w)
                        todo.append(w)
            nv = tuple(-x for x in v)
            if nv not in seen:
                seen.add(nv)
                todo.append(nv)
        expected = sum(_simple_root_count(s, r) for s, r in self.components)
        if len(seen) != expected:
            raise StructureError(
                f"closure produced {len(seen)} roots, expected {expected}")
        return tuple(sorted(seen))

    @cached_property
    def positive_roots(self) -> tuple[tuple[int, ...], ...]:
        pos = [v for v in self.roots if sum(v) > 0]
        if 2 * len(pos) != len(self.roots):
            raise StructureError("positive roots are not half of all roots")
        return tuple(sorted(pos, key=lambda v: (sum(v), v)))

    def is_root(self, v) -> bool:
        return tuple(v) in self._root_set

    @cached_property
    def _root_set(self) -> frozenset:
        return frozenset(self.roots)

    @cached_property
    def _coroot_gram_adjugate(self):
        """(adjugate, determinant) of the integer trace-form Gram matrix.

        Keeping the inverse as an integer matrix over a common denominator
        lets the Killing form evaluate with integer arithmetic.
        """
        n = self.rank
        cart = self.cartan
        pvs = [tuple(sum(g[k] * cart[k][i] for k in range(n)) for i in range(n))
               for g in self.roots]
        gram = [[sum(pv[i] * pv[j] for pv in pvs) for j in range(n)]
                for i in range(n)]
        from .linalg import det
        d = det(gram)
        inv = inverse(gram)
        adj = tuple(tuple(int(x * d) for x in row) for row in inv)
        return adj, int(d)

    def killing_pair(self, a, b) -> Q:
        """The Killing form <a, b> of two vectors in simple-root coordinates."""
        n = self.rank
        cart = self.cartan
        pa = [sum(a[k] * cart[k][i] for k in range(n)) for i in range(n)]
        pb = [sum(b[k] * cart[k][i] for k in range(n)) for i in range(n)]
        adj, d = self._coroot_gram_adjugate
        total = sum(pa[i] * adj[i][j] * pb[j]
                    for i in range(n) for j in range(n) if pa[i] and adj[i][j])
        return Q(total, d) if isinstance(total, int) else total / d

    @cached_property
    def killing(self) -> tuple[tuple[Q, ...], ...]:
        """Killing pairings of the simple roots."""
        e = identity(self.rank)
        return tuple(tuple(self.killing_pair(e[i], e[j]) for j in range(self.rank))
                     for i in range(self.rank))

    def norm(self, v) -> Q:
        return self.killing_pair(v, v)

    def is_long(self, root) -> bool:
        """Maximal length within the root's own irreducible component."""
        support = {k for k, x in enumerate(root) if x != 0}
        for nodes in self.component_nodes:
            if support <= {i - 1 for i in nodes}:
                comp_roots = [g for g in self.roots
                              if {k for k, x in enumerate(g) if x != 0} <= {i - 1 for i in nodes}]
                m = max(self.norm(g) for g in comp_roots)
                return self.norm(root) == m
        raise StructureError("root support crosses components")

    def coroot(self, root) -> Vec:
        """Coroot coordinates of root^vee in the simple-coroot basis."""
        n = self.norm(root)
        e = identity(self.rank)
        return qvec(root[k] * self.norm(e[k]) / n for k in range(self.rank))

    @cached_property
    def half_sum_positive(self) -> Vec:
        acc = [Q(0)] * self.rank
        for g in self.positive_roots:
            for k in range(self.rank):
                acc[k] += g[k]
        return qvec(x / 2 for x in acc)

    def weyl_order(self) -> int:
        out = 1
        for s, r in self.components:
            out *= _simple_weyl_order(s, r)
        return out

    def to_json_dict(self) -> dict:
        return {
            "label": self.label,
            "cartan": [list(r) for r in self.cartan],
            "roots": [list(r) for r in self.roots],
            "killing": [[str(x) for x in row] for row in self.killing],
        }


@dataclass(frozen=True)
class WeylWord:
    """A word in the simple reflections, applied left to right."""

    word: tuple[int, ...]

    def __iter__(self):
        return iter(self.word)

    def __len__(self):
        return len(self.word)


@dataclass(frozen=True)
class ParabolicSubset:
    """The crossed nodes I of a standard parabolic P_I (generated by S minus I)."""

    missing: frozenset[int]

    def __post_init__(self):
        if not all(isinstance(i, int) and i >= 1 for i in self.missing):
            raise ValueError("parabolic indices must be positive integers")

    @staticmethod
    def of(*indices: int) -> "ParabolicSubset":
        return ParabolicSubset(frozenset(indices))


@lru_cache(maxsize=None)
def build_root_datum(series: str, rank: int) -> RootDatum:
    rd = RootDatum(simple_cartan(series, rank))
    _validate_datum(rd, series, rank)
    return rd


def _validate_datum(rd: RootDatum, series: str, rank: int) -> None:
    if rd.components != ((series, rank),) and not (
            series == "C" and rd.components == (("C", rank),)):
        raise StructureError(f"classification mismatch for {series}{rank}: {rd.components}")
    k = rd.killing
    for i in range(rank):
        for j in range(rank):
            if 2 * k[i][j] / k[j][j] != rd.cartan[i][j]:
                raise StructureError("Killing form does not reproduce Cartan integers")
    # positive definiteness via leading principal minors
    from .linalg import det
    for m in range(1, rank + 1):
        if det([row[:m] for row in k[:m]]) <= 0:
            raise StructureError("Killing form is not positive definite")


def product_datum(parts: list[RootDatum]) -> RootDatum:
    n = sum(p.rank for p in parts)
    cart = [[0] * n for _ in range(n)]
    off = 0
    for p in parts:
        for i in range(p.rank):
            for j in range(p.rank):
                cart[off + i][off + j] = p.cartan[i][j]
        off += p.rank
    return RootDatum(tuple(tuple(r) for r in cart))


def subdatum(rd: RootDatum, keep) -> tuple[RootDatum, dict[int, int]]:
    """Sub-diagram on the kept 1-based nodes; returns (datum, old->new map)."""
    kept = sorted(set(keep))
    if any(i < 1 or i > rd.rank for i in kept):
        raise ValueError("kept indices out of range")
    cart = tuple(tuple(rd.cartan[i - 1][j - 1] for j in kept) for i in kept)
    return RootDatum(cart), {old: new + 1 for new, old in enumerate(kept)}


def highest_root(rd: RootDatum) -> tuple[int, ...]:
    if len(rd.components) != 1:
        raise InvalidTypeError("highest root is defined for irreducible systems")
    best = None
    for g in rd.roots:
        if all(rd.pairing(g, i) >= 0 for i in range(1, rd.rank + 1)):
            if best is None or all(g[k] >= best[k] for k in range(rd.rank)):
                best = g
    if best is None or not all(
            all(best[k] - h[k] >= 0 for k in range(rd.rank)) for h in rd.roots):
        raise StructureError("no dominance maximum found")
    if not rd.is_long(best):
        raise StructureError("highest root is not long")
    return best


def reflect(rd: RootDatum, v, i: int):
    if not 1 <= i <= rd.rank:
        raise IndexError(f"simple index {i} out of range 1..{rd.rank}")
    return rd.reflect(v, i)


def weyl_apply(rd: RootDatum, word: WeylWord, v):
    out = tuple(v)
    for i in word:
        out = reflect(rd, out, i)
    return out


def longest_element(rd: RootDatum) -> WeylWord:
    v = rd.half_sum_positive
    word = []
    while True:
        i = next((i for i in range(1, rd.rank + 1) if rd.pairing(v, i) > 0), None)
        if i is None:
            break
        v = rd.reflect(v, i)
        word.append(i)
    if len(word) != len(rd.positive_roots):
        raise StructureError("longest element length != number of positive roots")
    return WeylWord(tuple(word))


def weyl_equal(rd: RootDatum, w1: WeylWord, w2: WeylWord) -> bool:
    v = rd.half_sum_positive
    return weyl_apply(rd, w1, v) == weyl_apply(rd, w2, v)


def duality_involution(rd: RootDatum) -> dict[int, int]:
    """The permutation theta with -w0(alpha_i) = alpha_theta(i)."""
    w0 = longest_element(rd)
    theta = {}
    e = identity(rd.rank)
    for i in range(1, rd.rank + 1):
        img = tuple(-x for x in weyl_apply(rd, w0, e[i - 1]))
        matches = [j for j in range(1, rd.rank + 1) if img == e[j - 1]]
        if len(matches) != 1:
            raise StructureError("-w0 does not permute the simple roots")
        theta[i] = matches[0]
    for i in theta:
        if theta[theta[i]] != i:
            raise StructureError("duality involution is not an involution")
        for j in theta:
            if rd.cartan[i - 1][j - 1] != rd.cartan[theta[i] - 1][theta[j] - 1]:
                raise StructureError("duality involution breaks the Cartan matrix")
    return theta


def parabolic_intersection(*subsets: ParabolicSubset) -> ParabolicSubset:
    out: frozenset[int] = frozenset()
    for s in subsets:
        out |= s.missing
    return ParabolicSubset(out)


def coset_orbit(rd: RootDatum, subset: ParabolicSubset,
                cap: int = ORBIT_CAP_DEFAULT) -> tuple[tuple[int, ...], ...]:
    """Weyl orbit of the sum of fundamental weights indexed by the crossed set.

    Weights are carried by their Cartan pairing vectors, so the orbit is the
    coset space W / W_{P_I}.  Returned sorted for reproducibility.
    """
    if not subset.missing:
        raise ValueError("coset_orbit needs a nonempty crossed set")
    if any(i > rd.rank for i in subset.missing):
        raise ValueError("crossed index out of range")
    start = tuple(1 if (k + 1) in subset.missing else 0 for k in range(rd.rank))
    rows = rd.cartan
    seen = {start}
    todo = [start]
    while todo:
        p = todo.pop()
        for i in range(rd.rank):
            c = p[i]
            if c == 0:
                continue
            row = rows[i]
            q = tuple(p[j] - c * row[j] for j in range(rd.rank))
            if q not in seen:
                if len(seen) >= cap:
                    raise OrbitLimitError(f"orbit exceeded cap {cap}")
                seen.add(q)
                todo.append(q)
    return tuple(sorted(seen))


def double_coset_count(rd: RootDatum, subset: ParabolicSubset,
                       cap: int = ORBIT_CAP_DEFAULT) -> int:
    """|W_Q \\ W / W_Q| for the standard parabolic with crossed set Q.

    Counts W_Q-orbits on the coset orbit, W_Q being generated by the
    uncrossed simple reflections.
    """
    if not subset.missing:
        return 1
    orbit = coset_orbit(rd, subset, cap=cap)
    index = {p: k for k, p in enumerate(orbit)}
    gens = [i for i in range(rd.rank) if (i + 1) not in subset.missing]
    rows = rd.cartan
    seen = [False] * len(orbit)
    classes = 0
    for k0 in range(len(orbit)):
        if seen[k0]:
            continue
        classes += 1
        seen[k0] = True
        todo = [orbit[k0]]
        while todo:
            p = todo.pop()
            for i in gens:
                c = p[i]
                if c == 0:
                    continue
                row = rows[i]
                q = tuple(p[j] - c * row[j] for j in range(rd.rank))
                kq = index[q]
                if not seen[kq]:
                    seen[kq] = True
                    todo.append(q)
    return classes
