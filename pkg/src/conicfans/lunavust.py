"""Colored cones and fans over a restricted root datum.

All cone arithmetic happens in the basis of restricted simple coroots; a
vector (c_1, ..., c_m) stands for sum c_i lambda_i^vee.  The valuation cone
is the negative Weyl chamber {c : A c <= 0} for the restricted Cartan matrix
A, and the color points are the halved basis vectors e_i / 2.  Everything is
exact; feasibility questions run through Fourier-Motzkin elimination.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction as Q
from functools import lru_cache

from .linalg import (Vec, det, feasible, inverse, is_zero, nullspace_basis,
                     primitive, qvec, rank, rref, solve, transpose)
from .rootcore import StructureError

Ray = tuple[int, ...]


@dataclass(frozen=True)
class QCone:
    """A convex rational polyhedral cone given by generators."""

    generators: tuple[Vec, ...]

    @staticmethod
    def of(vectors) -> "QCone":
        return QCone(tuple(qvec(v) for v in vectors if not is_zero(v)))

    @property
    def ambient_dim(self) -> int:
        if self.generators:
            return len(self.generators[0])
        raise ValueError("zero cone carries no ambient dimension")

    def dim(self) -> int:
        if not self.generators:
            return 0
        return rank([list(g) for g in self.generators])


@dataclass(frozen=True)
class ColoredCone:
    cone: QCone
    colors: frozenset[int]

    def key(self):
        return (extremal_rays(self.cone), tuple(sorted(self.colors)))


@dataclass(frozen=True)
class ColoredFan:
    cones: tuple[ColoredCone, ...]

    @staticmethod
    def of(cones) -> "ColoredFan":
        uniq = {c.key(): c for c in cones}
        return ColoredFan(tuple(uniq[k] for k in sorted(uniq)))

    def __iter__(self):
        return iter(self.cones)

    def __len__(self):
        return len(self.cones)


# ---------------------------------------------------------------------------
# H-representation / V-representation conversion

def _rays_of_hcone(equalities, inequalities, dim) -> tuple[Ray, ...]:
    """Extremal rays of a pointed cone {x : E x = 0, M x >= 0}.

    Candidate rays come from subsets of the constraint rows that cut the
    space down to a line; a candidate survives if it satisfies every
    inequality.  Exact and complete for pointed cones.
    """
    eqs = [list(map(Q, r)) for r in equalities]
    ineqs = [list(map(Q, r)) for r in inequalities]
    if nullspace_basis(eqs + ineqs, dim):
        raise StructureError("cone is not pointed; extremal rays undefined")
    sdim = dim - (len(rref(eqs)[1]) if eqs else 0)
    if sdim == 0:
        return ()
    rays = set()
    for subset in itertools.combinations(range(len(ineqs)), sdim - 1):
        null = nullspace_basis(eqs + [ineqs[k] for k in subset], dim)
        if len(null) != 1:
            continue
        v = null[0]
        for cand in (v, tuple(-x for x in v)):
            if all(sum(r[k] * cand[k] for k in range(dim)) >= 0 for r in ineqs):
                rays.add(primitive(cand))
                break
    return tuple(sorted(rays))


@lru_cache(maxsize=None)
def _hrep_cached(gens: tuple[Vec, ...], dim: int):
    eqs = [primitive(v) for v in nullspace_basis([list(g) for g in gens], dim)]
    facets = _rays_of_hcone(eqs, [list(g) for g in gens], dim)
    return tuple(sorted(eqs)), facets


def hrep(cone: QCone):
    """(equalities, facet inequalities) with primitive integer rows."""
    if not cone.generators:
        raise ValueError("zero cone")
    return _hrep_cached(cone.generators, cone.ambient_dim)


def cone_contains(cone: QCone, x) -> bool:
    x = qvec(x)
    if is_zero(x):
        return True
    if not cone.generators:
        return False
    eqs, facets = hrep(cone)
    n = len(x)
    return (all(sum(e[k] * x[k] for k in range(n)) == 0 for e in eqs)
            and all(sum(f[k] * x[k] for k in range(n)) >= 0 for f in facets))


def cone_equal(c1: QCone, c2: QCone) -> bool:
    if not c1.generators or not c2.generators:
        return not c1.generators and not c2.generators
    return (all(cone_contains(c2, g) for g in c1.generators)
            and all(cone_contains(c1, g) for g in c2.generators))


@lru_cache(maxsize=None)
def _extremal_cached(gens: tuple[Vec, ...], dim: int) -> tuple[Ray, ...]:
    eqs, facets = _hrep_cached(gens, dim)
    return _rays_of_hcone(eqs, facets, dim)


def extremal_rays(cone: QCone) -> tuple[Ray, ...]:
    """Minimal primitive generating rays, canonically sorted."""
    if not cone.generators:
        return ()
    return _extremal_cached(cone.generators, cone.ambient_dim)


def is_pointed(cone: QCone) -> bool:
    if not cone.generators:
        return True
    eqs, facets = hrep(cone)
    lin = nullspace_basis([list(r) for r in eqs] + [list(r) for r in facets],
                          cone.ambient_dim)
    return not lin


def intersect(c1: QCone, c2: QCone) -> QCone:
    if not c1.generators or not c2.generators:
        return QCone(())
    e1, f1 = hrep(c1)
    e2, f2 = hrep(c2)
    rays = _rays_of_hcone([list(r) for r in e1 + e2],
                          [list(r) for r in f1 + f2], c1.ambient_dim)
    return QCone.of(rays)


# ---------------------------------------------------------------------------
# Valuation cone and colors.  Functions below consume a RestrictedRootDatum
# through its `restricted.cartan` only.

def _vrows(rrd):
    """Inequality rows of the valuation cone: <lambda_i, x> <= 0."""
    return [tuple(Q(x) for x in row) for row in rrd.restricted.cartan]


def color_point(rrd, i: int) -> Vec:
    m = rrd.restricted.rank
    return qvec(Q(1, 2) if k == i - 1 else 0 for k in range(m))


def in_valuation_cone(rrd, x) -> bool:
    x = qvec(x)
    return all(sum(row[k] * x[k] for k in range(len(x))) <= 0 for row in _vrows(rrd))


@lru_cache(maxsize=None)
def _negative_chamber_rays_cached(cartan) -> tuple[Ray, ...]:
    rows = [[-Q(x) for x in row] for row in cartan]
    return _rays_of_hcone([], rows, len(cartan))


def valuation_cone(rrd) -> QCone:
    """The negative Weyl chamber as a generator cone (spanned by -gamma_j)."""
    return QCone.of(_negative_chamber_rays_cached(rrd.restricted.cartan))


def relint_meets_valuation(rrd, cone: QCone) -> bool:
    """Exact test that the relative interior of the cone meets V."""
    if not cone.generators:
        return True  # relint({0}) = {0}, and 0 lies in V
    gens = [qvec(g) for g in cone.generators]
    n = len(gens)
    ineqs = []
    for idx in range(n):
        row = [Q(0)] * (n + 1)
        row[idx], row[-1] = Q(1), Q(-1)
        ineqs.append(row)  # t_idx >= 1
    for vr in _vrows(rrd):
        ineqs.append([-sum(vr[k] * g[k] for k in range(len(vr))) for g in gens] + [Q(0)])
    return feasible([], ineqs, n)


def relint_pair_disjoint_in_valuation(rrd, c1: QCone, c2: QCone) -> bool:
    """True when relint(c1) and relint(c2) share no valuation."""
    if not c1.generators or not c2.generators:
        return not (not c1.generators and not c2.generators)
    g1 = [qvec(g) for g in c1.generators]
    g2 = [qvec(g) for g in c2.generators]
    n1, n2 = len(g1), len(g2)
    dim = len(g1[0])
    eqs = [[g[k] for g in g1] + [-g[k] for g in g2] + [Q(0)] for k in range(dim)]
    ineqs = []
    for idx in range(n1 + n2):
        row = [Q(0)] * (n1 + n2 + 1)
        row[idx], row[-1] = Q(1), Q(-1)
        ineqs.append(row)
    for vr in _vrows(rrd):
        ineqs.append([-sum(vr[k] * g[k] for k in range(dim)) for g in g1]
                     + [Q(0)] * n2 + [Q(0)])
    return not feasible(eqs, ineqs, n1 + n2)


@dataclass(frozen=True)
class ConeCheck:
    ok: bool
    diagnostics: tuple[str, ...] = field(default_factory=tuple)

    def __bool__(self):
        return self.ok


def is_colored_cone(cc: ColoredCone, rrd, strict: bool = False) -> ConeCheck:
    """Validity of (C, F): generation from colors plus V, relint meeting V."""
    diags = []
    cone = cc.cone
    eps = {i: color_point(rrd, i) for i in sorted(cc.colors)}
    for i, e in eps.items():
        if cone.generators and not cone_contains(cone, e):
            diags.append(f"color D{i} not inside the cone")
        if not cone.generators:
            diags.append(f"color D{i} attached to the zero cone")
    if cone.generators and not diags:
        vpart = intersect(cone, valuation_cone(rrd))
        regen = QCone.of(list(eps.values()) + list(vpart.generators))
        if not cone_equal(cone, regen):
            diags.append("cone is not generated by its colors and its valuation part")
    if not relint_meets_valuation(rrd, cone):
        diags.append("relative interior misses the valuation cone")
    if strict:
        if cone.generators and not is_pointed(cone):
            diags.append("cone is not strictly convex")
    return ConeCheck(not diags, tuple(diags))


def colored_faces(cc: ColoredCone, rrd) -> tuple[ColoredCone, ...]:
    """All colored faces of a colored cone, the cone itself and 0 included."""
    return _colored_faces_cached(cc.key(), cc.cone.generators,
                                 frozenset(cc.colors), rrd)


def _colored_faces_cached(key, gens, colors, rrd):
    cache = _faces_memo.setdefault(rrd.restricted.cartan, {})
    if key in cache:
        return cache[key]
    out = {}
    zero = ColoredCone(QCone(()), frozenset())
    out[zero.key()] = zero
    if gens:
        cone = QCone(gens)
        dim = cone.ambient_dim
        eqs, facets = hrep(cone)
        for k in range(len(facets) + 1):
            for subset in itertools.combinations(range(len(facets)), k):
                sys_eqs = [list(e) for e in eqs] + [list(facets[j]) for j in subset]
                rest = [list(facets[j]) for j in range(len(facets)) if j not in subset]
                rays = _rays_of_hcone(sys_eqs, rest, dim)
                face = QCone.of(rays)
                if not face.generators:
                    continue
                if not relint_meets_valuation(rrd, face):
                    continue
                fcolors = frozenset(i for i in colors
                                    if cone_contains(face, color_point(rrd, i)))
                fc = ColoredCone(face, fcolors)
                out.setdefault(fc.key(), fc)
    result = tuple(out[k] for k in sorted(out))
    cache[key] = result
    return result


_faces_memo: dict = {}


def is_colored_fan(fan: ColoredFan, rrd) -> ConeCheck:
    diags = []
    keys = {c.key() for c in fan}
    for c in fan:
        for f in colored_faces(c, rrd):
            if f.key() not in keys:
                diags.append(f"missing colored face {f.key()} of {c.key()}")
    cones = list(fan)
    for a, b in itertools.combinations(range(len(cones)), 2):
        if not relint_pair_disjoint_in_valuation(rrd, cones[a].cone, cones[b].cone):
            diags.append(
                f"relative interiors of cones {cones[a].key()} and "
                f"{cones[b].key()} meet inside the valuation cone")
    return ConeCheck(not diags, tuple(diags))


def maximal_cones(fan: ColoredFan, rrd) -> tuple[ColoredCone, ...]:
    out = []
    for c in fan:
        below = any(c.key() in {f.key() for f in colored_faces(d, rrd)}
                    for d in fan if d.key() != c.key())
        if not below:
            out.append(c)
    return tuple(out)


def is_complete(fan: ColoredFan, rrd) -> bool:
    """Exact covering test: V contained in the union of the fan's cones."""
    maxc = [c for c in maximal_cones(fan, rrd) if c.cone.generators]
    if not maxc:
        return False
    m = rrd.restricted.rank
    vrows = _vrows(rrd)
    menus = []
    for c in maxc:
        # a point escapes the cone by violating one facet or one span equation
        eqs, facets = hrep(c.cone)
        menu = [tuple(Q(x) for x in f) for f in facets]
        for e in eqs:
            menu.append(tuple(Q(x) for x in e))
            menu.append(tuple(-Q(x) for x in e))
        menus.append(menu)
    for choice in itertools.product(*menus):
        ineqs = [[-x for x in vr] + [Q(0)] for vr in vrows]
        for row in choice:
            ineqs.append([-x for x in row] + [Q(-1)])  # row . x <= -1
        if feasible([], ineqs, m):
            return False
    return True


@dataclass(frozen=True)
class Poset:
    """Colored-cone poset of a fan with covering edges (Hasse data)."""

    nodes: tuple[ColoredCone, ...]
    less: tuple[tuple[int, int], ...]   # (i, j): node i is a proper face of node j
    covers: tuple[tuple[int, int], ...]

    def node_count(self) -> int:
        return len(self.nodes)

    def levels_by_dim(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for c in self.nodes:
            out[c.cone.dim()] = out.get(c.cone.dim(), 0) + 1
        return out


def orbit_poset(fan: ColoredFan, rrd) -> Poset:
    """The fan's colored cones ordered by colored-face inclusion.

    Under the orbit correspondence this order is reversed: the zero cone is
    the open orbit and maximal cones are the closed ones.
    """
    nodes = list(fan)
    keyidx = {c.key(): i for i, c in enumerate(nodes)}
    less = set()
    for j, c in enumerate(nodes):
        for f in colored_faces(c, rrd):
            i = keyidx.get(f.key())
            if i is not None and i != j:
                less.add((i, j))
    covers = {(i, j) for (i, j) in less
              if not any((i, k) in less and (k, j) in less for k in range(len(nodes)))}
    return Poset(tuple(nodes), tuple(sorted(less)), tuple(sorted(covers)))


# ---------------------------------------------------------------------------
# Ruzzi's smoothness criterion for simple symmetric embeddings

@dataclass(frozen=True)
class RuzziReport:
    smooth: bool
    cond1: bool
    cond2: bool
    cond3: bool
    detail: tuple[str, ...]


def _lattice_primitive(ray) -> tuple[int, ...]:
    """Primitive representative in the half-coroot lattice (doubled coords)."""
    return primitive([2 * Q(x) for x in ray])


def levi_subsystem_factors(rrd, colors) -> list[list[int]]:
    """Connected components of the selected restricted simple roots."""
    cart = rrd.restricted.cartan
    chosen = sorted(colors)
    comps: list[list[int]] = []
    seen: set[int] = set()
    for i in chosen:
        if i in seen:
            continue
        comp, todo = {i}, [i]
        while todo:
            a = todo.pop()
            for b in chosen:
                if b not in comp and cart[a - 1][b - 1] != 0:
                    comp.add(b)
                    todo.append(b)
        seen |= comp
        comps.append(sorted(comp))
    return comps


def _component_is_type_a(rrd, comp) -> bool:
    cart = rrd.restricted.cartan
    for a in comp:
        deg = 0
        for b in comp:
            if a != b and cart[a - 1][b - 1] != 0:
                if cart[a - 1][b - 1] * cart[b - 1][a - 1] != 1:
                    return False
                deg += 1
        if deg > 2:
            return False
    return True


def _order_path(rrd, comp) -> list[int] | None:
    """One of the two path orders of a type-A component, or None."""
    cart = rrd.restricted.cartan
    if len(comp) == 1:
        return list(comp)
    adj = {a: [b for b in comp if b != a and cart[a - 1][b - 1] != 0] for a in comp}
    ends = [a for a in comp if len(adj[a]) == 1]
    if len(ends) != 2:
        return None
    order = [min(ends)]
    while len(order) < len(comp):
        nxt = [b for b in adj[order[-1]] if b not in order]
        if len(nxt) != 1:
            return None
        order.append(nxt[0])
    return order


def _factor_fundamental_weights(rrd, order) -> list[Vec]:
    """Fundamental weights of the ordered sub-root-system, in pi coordinates.

    The i-th weight pairs delta_ik with the ordered factor coroots and lies
    in the span of the factor's simple roots.
    """
    m = rrd.restricted.rank
    cart = rrd.restricted.cartan
    span_rows = [[Q(cart[s - 1][j]) for j in range(m)] for s in order]
    out = []
    for i in range(len(order)):
        a = [[Q(cart[s - 1][t - 1]) for s in order] for t in order]
        b = [Q(1) if k == i else Q(0) for k in range(len(order))]
        c = solve(a, b)
        if c is None:
            raise StructureError("factor Cartan is singular")
        w = [Q(0)] * m
        for coef, row in zip(c, span_rows):
            for k in range(m):
                w[k] += coef * row[k]
        out.append(tuple(w))
    return out


def ruzzi_smooth(cc: ColoredCone, rrd, levi_roots=None) -> RuzziReport:
    """Smoothness of the simple embedding defined by a strictly convex cone.

    Condition 1 asks the Levi subsystem spanned by the selected colors to be
    a product of type-A factors fitting inside the rank; condition 2 asks the
    cone's primitive rays to form a basis of the half-coroot lattice;
    condition 3 asks for an indexing of the dual basis compatible with the
    factors' fundamental weights.
    """
    m = rrd.restricted.rank
    detail: list[str] = []
    factors = (levi_subsystem_factors(rrd, cc.colors)
               if levi_roots is None else [sorted(f) for f in levi_roots])

    cond1 = True
    for comp in factors:
        if not _component_is_type_a(rrd, comp):
            cond1 = False
            detail.append(f"Levi factor {comp} is not of type A")
    budget = sum(len(c) + 1 for c in factors)
    if budget > m:
        cond1 = False
        detail.append(f"sum of (rank+1) over Levi factors is {budget} > {m}")

    rays = extremal_rays(cc.cone)
    prim = [_lattice_primitive(qvec(r)) for r in rays]
    if len(prim) != m:
        cond2 = False
        detail.append(f"{len(prim)} extremal rays in rank {m}: "
                      "not a simplicial cone of full rank")
    else:
        d = det([list(map(Q, p)) for p in prim])
        cond2 = abs(d) == 1
        if not cond2:
            detail.append(f"ray basis determinant {d} is not a unit")

    if cond2:
        cond3 = _ruzzi_condition3(rrd, cc, prim, factors, detail)
    else:
        cond3 = False
        detail.append("condition 3 unevaluated without a lattice basis")

    return RuzziReport(cond1 and cond2 and cond3, cond1, cond2, cond3, tuple(detail))


def ruzzi_dual_basis(prim) -> list[tuple[Q, ...]]:
    """Dual basis (pi coordinates) of a half-coroot lattice basis.

    `prim` holds the basis in doubled coordinates; the underlying vectors are
    prim/2, so the duals are the rows of 2 * (P^t)^-1.
    """
    pinv_t = inverse(transpose([list(map(Q, p)) for p in prim]))
    return [tuple(2 * x for x in row) for row in pinv_t]


def _ruzzi_condition3(rrd, cc, prim, factors, detail) -> bool:
    m = rrd.restricted.rank
    duals = ruzzi_dual_basis(prim)
    basis_vecs = [qvec(Q(x, 2) for x in p) for p in prim]
    for yi, y in enumerate(duals):
        for bj, b in enumerate(basis_vecs):
            if sum(y[k] * b[k] for k in range(m)) != (1 if yi == bj else 0):
                raise StructureError("dual basis construction failed")
        for x in y:
            if x.denominator != 1 or x.numerator % 2:
                raise StructureError("dual basis left the doubled weight lattice")

    selected = sorted(set().union(*factors)) if factors else []
    pair = {yi: {col: sum(duals[yi][k] * color_point(rrd, col)[k] for k in range(m))
                 for col in selected}
            for yi in range(m)}
    dual_for_color: dict[int, int] = {}
    for yi in range(m):
        hits = [col for col in selected if pair[yi][col] != 0]
        if not hits:
            continue
        if len(hits) > 1 or pair[yi][hits[0]] != 1:
            detail.append("a dual pairs incompatibly with the selected colors")
            return False
        if hits[0] in dual_for_color:
            detail.append("two duals pair with the same color")
            return False
        dual_for_color[hits[0]] = yi
    if len(dual_for_color) != len(selected):
        detail.append("some selected color has no dual pairing 1 with it")
        return False

    pool = [yi for yi in range(m) if yi not in dual_for_color.values()]

    def factor_ok(order, closer_yi) -> bool:
        fw = _factor_fundamental_weights(rrd, order)
        l = len(order)
        z = duals[closer_yi]
        for i, col in enumerate(order, start=1):
            y = duals[dual_for_color[col]]
            lhs = tuple(y[k] - Q(i, l + 1) * z[k] for k in range(m))
            if lhs != tuple(2 * x for x in fw[i - 1]):
                return False
        return True

    def backtrack(j, remaining) -> bool:
        if j == len(factors):
            return True
        path = _order_path(rrd, factors[j])
        if path is None:
            return False
        orders = [path] if len(path) == 1 else [path, list(reversed(path))]
        for closer in remaining:
            for order in orders:
                if factor_ok(order, closer) and backtrack(
                        j + 1, [x for x in remaining if x != closer]):
                    return True
        return False

    if not backtrack(0, pool):
        detail.append("no admissible indexing of the dual basis exists")
        return False
    return True


# ---------------------------------------------------------------------------
# Serialization

def _q_str(x: Q) -> str:
    return str(x)


def fan_to_json_dict(fan: ColoredFan, space_label: str) -> dict:
    return {
        "space": space_label,
        "cones": [
            {"rays": [[_q_str(Q(x)) for x in r] for r in extremal_rays(c.cone)],
             "colors": sorted(c.colors)}
            for c in fan
        ],
    }


def fan_from_json_dict(data: dict) -> ColoredFan:
    cones = []
    for entry in data["cones"]:
        rays = [qvec(Q(x) for x in r) for r in entry["rays"]]
        cones.append(ColoredCone(QCone.of(rays), frozenset(entry["colors"])))
    return ColoredFan.of(cones)


def poset_to_dot(poset: Poset, labels=None, name: str = "hasse") -> str:
    """DOT rendering of the Hasse diagram; edges run top (big orbit) down."""
    lines = [f"digraph {name} {{", "  rankdir=TB;", "  node [shape=box];"]
    for i, c in enumerate(poset.nodes):
        rays = ",".join("(" + ",".join(map(str, r)) + ")" for r in extremal_rays(c.cone))
        colors = ",".join(f"D{j}" for j in sorted(c.colors))
        base = f"dim {c.cone.dim()}; rays {rays or '0'}; colors {colors or '-'}"
        label = f"{labels[i]}\\n{base}" if labels else base
        lines.append(f'  n{i} [label="{label}"];')
    # covering pairs (i, j): i is a face of j, so orbit(i) contains orbit(j)
    for i, j in poset.covers:
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines)
