"""Satake diagrams, restricted root systems, colors, and anticanonical data.

The ten supported families are the symmetric spaces attached to the simple
algebras outside types A and C: B_r (r >= 3), D_r (r >= 4), E6, E7, E8, F4,
G2.  The involution acts on characters as minus the longest element of the
black sub-diagram composed with a diagram permutation (the arrow matching on
white nodes, the sub-diagram duality on black nodes); everything derived from
it is verified against the hard-coded restriction tables at construction
time.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from functools import lru_cache

from .linalg import identity, inverse, qvec, solve
from .rootcore import (ParabolicSubset, RootDatum, StructureError,
                       UnsupportedAlgebraError, build_root_datum, highest_root,
                       longest_element, subdatum, weyl_apply)


def supported_pair(series: str, rank: int) -> tuple[str, int]:
    if series in ("A", "C"):
        raise UnsupportedAlgebraError(
            f"type {series} is outside the supported families")
    if series == "B" and rank >= 3:
        return (series, rank)
    if series == "D" and rank >= 4:
        return (series, rank)
    if (series, rank) in (("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)):
        return (series, rank)
    raise UnsupportedAlgebraError(f"{series}{rank} is not supported")


@dataclass(frozen=True)
class SatakeDiagram:
    base: RootDatum
    series: str
    rank: int
    black: frozenset[int]
    arrows: tuple[tuple[int, int], ...]

    def __post_init__(self):
        ends = {i for pair in self.arrows for i in pair}
        if ends & self.black:
            raise StructureError("arrow endpoints must be white")
        for i, j in self.arrows:
            if i == j:
                raise StructureError("arrows join distinct nodes")

    @property
    def white(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.base.rank + 1) if i not in self.black)

    def arrow_partner(self, i: int) -> int:
        for a, b in self.arrows:
            if i == a:
                return b
            if i == b:
                return a
        return i

    def to_json_dict(self) -> dict:
        return {"type": f"{self.series}{self.rank}",
                "black": sorted(self.black),
                "arrows": [list(p) for p in self.arrows]}


def satake_of(series: str, rank: int) -> SatakeDiagram:
    series, rank = supported_pair(series, rank)
    base = build_root_datum(series, rank)
    black: frozenset[int] = frozenset()
    arrows: tuple[tuple[int, int], ...] = ()
    if series == "B" and rank >= 5:
        black = frozenset(range(5, rank + 1))
    elif series == "D":
        if rank == 5:
            arrows = ((4, 5),)
        elif rank >= 6:
            black = frozenset(range(5, rank + 1))
    elif (series, rank) == ("E", 6):
        arrows = ((1, 5), (2, 4))
    elif (series, rank) == ("E", 7):
        black = frozenset({1, 3, 7})
    elif (series, rank) == ("E", 8):
        black = frozenset({4, 5, 6, 8})
    return SatakeDiagram(base, series, rank, black, arrows)


@lru_cache(maxsize=None)
def _sigma_matrix(sd: SatakeDiagram) -> tuple[tuple[Q, ...], ...]:
    """Matrix of the involution on characters, columns = images of simples."""
    rd = sd.base
    perm = {}
    if sd.black:
        sub, mapping = subdatum(rd, sorted(sd.black))
        back = {v: k for k, v in mapping.items()}
        from .rootcore import duality_involution
        theta_sub = duality_involution(sub)
        w0_sub = longest_element(sub)
        w0_ambient = tuple(back[i] for i in w0_sub.word)
        for b in sd.black:
            perm[b] = back[theta_sub[mapping[b]]]
    else:
        w0_ambient = ()
    for w in sd.white:
        perm[w] = sd.arrow_partner(w)
    cols = []
    for j in range(1, rd.rank + 1):
        v = tuple(1 if k == perm[j] - 1 else 0 for k in range(rd.rank))
        for i in w0_ambient:
            v = rd.reflect(v, i)
        cols.append(tuple(-x for x in v))
    mat = tuple(tuple(cols[j][i] for j in range(rd.rank)) for i in range(rd.rank))
    _check_involution(sd, mat)
    return mat


def _check_involution(sd: SatakeDiagram, mat) -> None:
    rd = sd.base
    n = rd.rank
    sq = [[sum(mat[i][k] * mat[k][j] for k in range(n)) for j in range(n)]
          for i in range(n)]
    if any(sq[i][j] != (1 if i == j else 0) for i in range(n) for j in range(n)):
        raise StructureError("character involution fails to square to one")
    for b in sd.black:
        col = tuple(mat[i][b - 1] for i in range(n))
        if col != tuple(1 if i == b - 1 else 0 for i in range(n)):
            raise StructureError("character involution moves a black simple root")


def sigma_on_characters(sd: SatakeDiagram, v):
    mat = _sigma_matrix(sd)
    n = len(mat)
    return tuple(sum(mat[i][j] * v[j] for j in range(n) if v[j]) for i in range(n))


_RESTRICTED_TYPE = {"B": lambda r: ("B", 3) if r == 3 else ("B", 4),
                    "D": lambda r: ("D", 4) if r == 4 else ("B", 4),
                    "E": lambda r: ("F", 4),
                    "F": lambda r: ("F", 4),
                    "G": lambda r: ("G", 2)}


def _restriction_reps(series: str, rank: int) -> dict[int, tuple[int, ...]]:
    """White representatives of each restricted simple root, by table."""
    if (series, rank) == ("D", 5):
        return {1: (1,), 2: (2,), 3: (3,), 4: (4, 5)}
    if (series, rank) == ("E", 6):
        return {1: (1, 5), 2: (2, 4), 3: (3,), 4: (6,)}
    if (series, rank) == ("E", 7):
        return {1: (2,), 2: (4,), 3: (5,), 4: (6,)}
    if (series, rank) == ("E", 8):
        return {1: (7,), 2: (3,), 3: (2,), 4: (1,)}
    m = _RESTRICTED_TYPE[series](rank)[1]
    return {i: (i,) for i in range(1, m + 1)}


@dataclass(frozen=True)
class RestrictedRootDatum:
    satake: SatakeDiagram
    restricted: RootDatum
    restriction_map: tuple[tuple[int, int], ...]  # (white node, lambda index)
    gamma: tuple[tuple[Q, ...], ...]              # dual basis, coroot coords
    lattice_note: str

    @property
    def base(self) -> RootDatum:
        return self.satake.base

    def reps_of(self, i: int) -> tuple[int, ...]:
        return tuple(w for w, l in self.restriction_map if l == i)

    def lambda_index_of(self, white: int) -> int:
        for w, l in self.restriction_map:
            if w == white:
                return l
        raise KeyError(white)

    @property
    def space_label(self) -> str:
        return f"coroot({self.restricted.label})"


def restricted_vector(rrd: RestrictedRootDatum, white: int):
    """Projection of a white simple root to the split part, ambient coords."""
    sd = rrd.satake
    unit = tuple(1 if k == white - 1 else 0 for k in range(sd.base.rank))
    img = sigma_on_characters(sd, unit)
    return tuple(Q(a - b, 2) for a, b in zip(unit, img))


@lru_cache(maxsize=None)
def restricted_datum(sd: SatakeDiagram) -> RestrictedRootDatum:
    series, rank = sd.series, sd.rank
    rtype = _RESTRICTED_TYPE[series](rank)
    restricted = build_root_datum(*rtype)
    reps = _restriction_reps(series, rank)
    rmap = tuple(sorted((w, i) for i, ws in reps.items() for w in ws))

    base = sd.base
    bar = {}
    for w in sd.white:
        unit = tuple(1 if k == w - 1 else 0 for k in range(base.rank))
        img = sigma_on_characters(sd, unit)
        bar[w] = tuple(Q(a - b, 2) for a, b in zip(unit, img))
    covered = {w for ws in reps.values() for w in ws}
    if covered != set(sd.white):
        raise StructureError("restriction table does not cover the white nodes")
    lam = {}
    for i, ws in reps.items():
        vecs = {bar[w] for w in ws}
        if len(vecs) != 1:
            raise StructureError(
                f"white nodes {ws} restrict to different characters")
        lam[i] = next(iter(vecs))
    m = restricted.rank
    if len({lam[i] for i in lam}) != m:
        raise StructureError("restricted simple roots are not distinct")
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            cij = 2 * base.killing_pair(lam[i], lam[j]) / base.killing_pair(lam[j], lam[j])
            if cij != restricted.cartan[i - 1][j - 1]:
                raise StructureError(
                    f"restricted Cartan mismatch at ({i},{j}): got {cij}")
    _check_projected_roots(sd, restricted, lam)

    ainv = inverse(restricted.cartan)
    gamma = tuple(tuple(ainv[i][j] for i in range(m)) for j in range(m))
    return RestrictedRootDatum(
        sd, restricted, rmap, gamma,
        "characters form the doubled weight lattice of the restricted coroots")


def _check_projected_roots(sd, restricted, lam) -> None:
    """Nonzero projections of all roots must form the restricted system."""
    base = sd.base
    m = restricted.rank
    lam_cols = [[lam[i + 1][k] for i in range(m)] for k in range(base.rank)]
    # one factorization serves every root: x = pinv . proj, then verify
    gram = [[sum(lam_cols[k][i] * lam_cols[k][j] for k in range(base.rank))
             for j in range(m)] for i in range(m)]
    gram_inv = inverse(gram)
    seen = set()
    for g in base.roots:
        img = sigma_on_characters(sd, g)
        proj = [Q(a - b, 2) for a, b in zip(g, img)]
        if all(x == 0 for x in proj):
            continue
        rhs = [sum(lam_cols[k][i] * proj[k] for k in range(base.rank))
               for i in range(m)]
        coeffs = [sum(gram_inv[i][j] * rhs[j] for j in range(m)) for i in range(m)]
        if any(x.denominator != 1 for x in coeffs):
            raise StructureError("a projected root leaves the restricted lattice")
        for k in range(base.rank):
            if sum(lam_cols[k][i] * coeffs[i] for i in range(m)) != proj[k]:
                raise StructureError("a projected root leaves the restricted span")
        seen.add(tuple(int(x) for x in coeffs))
    if seen != set(restricted.roots):
        raise StructureError("projected roots do not form the restricted system")


@dataclass(frozen=True)
class ColorInfo:
    index: int
    stabilizer: ParabolicSubset
    color_type: str               # "a", "2a", or "b"
    a_coeff: int
    spherical_root: tuple[int, ...]  # ambient simple-root coordinates

    def to_json_dict(self) -> dict:
        return {"color": self.index,
                "stabilizer_crossed": sorted(self.stabilizer.missing),
                "type": self.color_type,
                "a": self.a_coeff,
                "spherical_root": list(self.spherical_root)}


@lru_cache(maxsize=None)
def color_table(rrd: RestrictedRootDatum) -> tuple[ColorInfo, ...]:
    sd = rrd.satake
    base = sd.base
    e = identity(base.rank)
    out = []
    white = set(sd.white)
    rpos = [g for g in base.positive_roots
            if any((k + 1) in white and g[k] != 0 for k in range(base.rank))]
    for i in range(1, rrd.restricted.rank + 1):
        reps = rrd.reps_of(i)
        sph = None
        for w in reps:
            img = sigma_on_characters(sd, e[w - 1])
            cand = tuple(a - b for a, b in zip(e[w - 1], img))
            if sph is None:
                sph = cand
            elif sph != cand:
                raise StructureError(
                    f"spherical root for color {i} depends on the representative")
        sph_int = tuple(int(x) for x in sph)
        ctype = "b"
        for w in reps:
            unit = tuple(1 if k == w - 1 else 0 for k in range(base.rank))
            if sph_int == unit:
                ctype = "a"
            if sph_int == tuple(2 * x for x in unit):
                ctype = "2a"
        if ctype in ("a", "2a"):
            a_coeff = 1
        else:
            vals = set()
            for w in reps:
                vals.add(sum(base.pairing(g, w) for g in rpos))
            if len(vals) != 1:
                raise StructureError(
                    f"anticanonical coefficient for color {i} depends on the representative")
            a_val = vals.pop()
            if a_val != int(a_val) or a_val <= 0:
                raise StructureError("anticanonical coefficient is not a positive integer")
            a_coeff = int(a_val)
        out.append(ColorInfo(i, ParabolicSubset(frozenset(reps)), ctype, a_coeff, sph_int))
    return tuple(out)


def g_fixed_subalgebra_components(series: str, rank: int) -> tuple[tuple[str, int], ...]:
    """Type of the symmetric-fiber stabilizer: extended diagram minus the contact node."""
    series, rank = supported_pair(series, rank)
    rd = build_root_datum(series, rank)
    rho = highest_root(rd)
    j0 = _contact_node(rd, rho)
    n = rd.rank
    ext = [[0] * (n + 1) for _ in range(n + 1)]
    ext[0][0] = 2
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            ext[i][j] = rd.cartan[i - 1][j - 1]
    e = identity(n)
    lowest = tuple(-x for x in rho)
    for j in range(1, n + 1):
        num = 2 * rd.killing_pair(lowest, e[j - 1])
        ext[0][j] = int(num / rd.killing_pair(e[j - 1], e[j - 1]))
        ext[j][0] = int(2 * rd.killing_pair(e[j - 1], lowest) / rd.killing_pair(rho, rho))
    keep = [i for i in range(n + 1) if i != j0]
    sub = RootDatum(tuple(tuple(ext[i][j] for j in keep) for i in keep))
    return sub.components


def _contact_node(rd: RootDatum, rho) -> int:
    e = identity(rd.rank)
    hits = [i for i in range(1, rd.rank + 1)
            if rd.killing_pair(rho, e[i - 1]) != 0]
    if len(hits) != 1:
        raise StructureError("highest root touches more than one simple root")
    return hits[0]


@dataclass(frozen=True)
class AnticanonicalData:
    """Weil coefficients: 1 on boundary divisors, a_D on color closures."""

    stable_rays: tuple[tuple[int, ...], ...]
    color_coeffs: tuple[tuple[int, int], ...]  # (color index, coefficient)

    def to_json_dict(self) -> dict:
        return {"stable_rays": [list(r) for r in self.stable_rays],
                "color_coeffs": {str(i): a for i, a in self.color_coeffs}}


def anticanonical_data(rrd: RestrictedRootDatum, fan) -> AnticanonicalData:
    from .lunavust import extremal_rays, in_valuation_cone
    rays = set()
    for cc in fan:
        for r in extremal_rays(cc.cone):
            if in_valuation_cone(rrd, r):
                rays.add(r)
    coeffs = tuple((c.index, c.a_coeff) for c in color_table(rrd))
    return AnticanonicalData(tuple(sorted(rays)), coeffs)
