"""Affine lattice monoids and glued monoid schemes.

Charts are finitely generated submonoids of a shared lattice (optionally
times a finite unit group).  Height-one points are facets of a chart's
generator cone; valuations pair against primitive inner normals scaled
to the chart's own lattice.  Class groups are cokernels of the divisor
matrix; Picard groups are computed from chartwise generic data glued
along overlap unit lattices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from . import intlin
from .abgroup import GroupPresentation, quotient_group
from .errors import NotNormal, ValidationError
from .monoids import AffineMonoid


# ---------------------------------------------------------------------------
# lattice and cone utilities


def lattice_basis_of(gens, rank):
    """Basis (columns) of the subgroup generated by the vectors."""
    cols = [list(g) for g in gens]
    return intlin.lattice_basis(cols, rank)


def in_subgroup(basis_cols, vec):
    if not basis_cols:
        return not any(vec)
    mat = [[c[i] for c in basis_cols] for i in range(len(vec))]
    return intlin.solve(mat, list(vec)) is not None


def _rational_span_solve(gens, vec):
    """Is vec in the rational span of the generators?"""
    if not gens:
        return not any(vec)
    rows = len(gens[0])
    aug = [[Fraction(g[i]) for g in gens] for i in range(rows)]
    b = [Fraction(v) for v in vec]
    # gaussian elimination
    cols = len(gens)
    piv_rows = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        b[r], b[piv] = b[piv], b[r]
        inv = aug[r][c]
        aug[r] = [v / inv for v in aug[r]]
        b[r] = b[r] / inv
        for i in range(rows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [v - f * w for v, w in zip(aug[i], aug[r])]
                b[i] = b[i] - f * b[r]
        piv_rows.append(r)
        r += 1
    for i in range(rows):
        if all(v == 0 for v in aug[i]) and b[i] != 0:
            return False
    return True


def _primitive(vec):
    from math import gcd

    g = 0
    for v in vec:
        g = gcd(g, abs(v))
    if g == 0:
        return tuple(vec)
    return tuple(v // g for v in vec)


def facet_normals(gens, rank):
    """Primitive inner normals of the facets of the generator cone.

    Normals are taken inside the rational span of the generators; every
    generator pairs nonnegatively and some generator pairs positively.
    """
    gens = [tuple(g) for g in gens]
    if not gens or all(not any(g) for g in gens):
        return []
    dim = _span_dimension(gens, rank)
    if dim == 0:
        return []
    normals = set()
    # candidate hyperplanes: spans of (dim-1)-subsets of generators
    for combo in itertools.combinations(gens, dim - 1) if dim > 1 else [()]:
        # normal candidates: integer kernel of [combo rows; orth-complement]
        rows = [list(c) for c in combo]
        # restrict to the span: add constraints for vectors orthogonal to it
        orth = _span_orthogonal_complement(gens, rank)
        mat = rows + orth
        if not mat:
            mat = [[0] * rank]
        kernel = intlin.kernel_basis(mat)
        for cand in kernel:
            w = _primitive(cand)
            if not any(w):
                continue
            vals = [sum(a * b for a, b in zip(w, g)) for g in gens]
            if all(v >= 0 for v in vals) and any(v > 0 for v in vals):
                zero_count = _span_dimension([g for g, v in zip(gens, vals) if v == 0], rank)
                if zero_count == dim - 1:
                    normals.add(w)
            w_neg = tuple(-v for v in w)
            vals_neg = [-v for v in vals]
            if all(v >= 0 for v in vals_neg) and any(v > 0 for v in vals_neg):
                zero_count = _span_dimension([g for g, v in zip(gens, vals) if v == 0], rank)
                if zero_count == dim - 1:
                    normals.add(w_neg)
    return sorted(normals)


def _span_dimension(gens, rank):
    if not gens:
        return 0
    return intlin.rank([list(g) for g in gens])


def _span_orthogonal_complement(gens, rank):
    """Rows spanning the orthogonal complement of the generator span."""
    if not gens:
        return [
            [1 if i == j else 0 for j in range(rank)] for i in range(rank)
        ]
    mat = [list(g) for g in gens]
    return [list(k) for k in intlin.kernel_basis(mat)]


def in_cone(gens, rank, vec, normals=None):
    """Exact membership of a lattice vector in the rational cone."""
    if normals is None:
        normals = facet_normals(gens, rank)
    if not _rational_span_solve([list(g) for g in gens], list(vec)):
        return False
    return all(sum(a * b for a, b in zip(w, vec)) >= 0 for w in normals)


def _zonotope_box(gens, rank):
    lo = [sum(min(0, g[j]) for g in gens) for j in range(rank)]
    hi = [sum(max(0, g[j]) for g in gens) for j in range(rank)]
    return lo, hi


def _box_points(lo, hi):
    ranges = [range(a, b + 1) for a, b in zip(lo, hi)]
    return itertools.product(*ranges)


def saturation_points_in_box(aff):
    """Lattice points of the saturation inside the fundamental zonotope box."""
    gens = aff.generators
    rank = aff.rank
    normals = facet_normals(gens, rank)
    basis = lattice_basis_of(gens, rank)
    lo, hi = _zonotope_box(gens, rank)
    out = []
    for v in _box_points(lo, hi):
        if not any(v):
            continue
        if in_cone(gens, rank, v, normals) and in_subgroup(basis, v):
            out.append(tuple(v))
    return sorted(out)


def hilbert_basis(aff):
    """Generators of the saturation of a pointed cone (no unit directions):
    the box points irreducible inside the saturation."""
    pts = saturation_points_in_box(aff)
    pset = set(pts)
    basis = []
    for v in pts:
        reducible = False
        for u in pts:
            if u == v:
                continue
            w = tuple(a - b for a, b in zip(v, u))
            if w in pset:
                reducible = True
                break
        if not reducible:
            basis.append(v)
    return sorted(basis)


def saturation_generators(aff):
    """Generating set of the saturation, units included.

    Unit directions (the cone's lineality intersected with the chart
    lattice) are adjoined with both signs; the zonotope box points supply
    the pointed directions.  The set is generating but not minimized.
    """
    gens = set()
    for u in unit_lattice_of_chart(aff):
        gens.add(tuple(u))
        gens.add(tuple(-x for x in u))
    gens.update(tuple(v) for v in saturation_points_in_box(aff))
    gens.discard(tuple([0] * aff.rank))
    return sorted(gens)


def is_normal(aff):
    """Cancellative chart equals its saturation (bounded verification)."""
    if aff.is_pc_quotient:
        raise ValidationError("normality applies to cancellative charts")
    return all(aff.contains(v) for v in saturation_generators(aff))


def normalize_affine(aff):
    """Saturation of the generator monoid inside its own lattice."""
    cand = saturation_generators(aff)
    # greedy minimization, largest candidates dropped first; keeping an
    # undroppable witness is always safe because membership search only
    # ever under-approximates
    keep = list(cand)
    for g in sorted(cand, key=lambda v: (-sum(abs(x) for x in v), v)):
        rest = [h for h in keep if h != g]
        if rest:
            trial = AffineMonoid(
                "trial", aff.rank, rest, degree_bound=aff.degree_bound
            )
            if trial.contains(g):
                keep = rest
    out = AffineMonoid(
        f"{aff.name}_nor",
        aff.rank,
        [tuple(v) for v in sorted(keep)],
        unit_orders=list(aff.unit_orders),
        degree_bound=aff.degree_bound,
    )
    assert is_normal(out), "saturation output failed its own normality check"
    return out


# ---------------------------------------------------------------------------
# faces, minimal primes, pc normalization


def faces(aff):
    """Faces of the generator cone, as generator index subsets."""
    gens = aff.generators
    normals = facet_normals(gens, aff.rank)
    seen = {}
    for r in range(len(normals) + 1):
        for combo in itertools.combinations(range(len(normals)), r):
            on_face = frozenset(
                i
                for i, g in enumerate(gens)
                if all(
                    sum(a * b for a, b in zip(normals[t], g)) == 0
                    for t in combo
                )
            )
            seen.setdefault(on_face, combo)
    return sorted(seen.keys(), key=lambda s: (len(s), sorted(s)))


def minimal_primes_pc(aff):
    """Maximal faces avoiding every monomial-ideal generator."""
    if not aff.is_pc_quotient:
        return [frozenset(range(len(aff.generators)))]
    fs = faces(aff)
    gens = aff.generators
    normals = facet_normals(gens, aff.rank)

    def face_contains(face_idx_set, vec):
        # vec lies on the face spanned by those generators
        sub = [gens[i] for i in face_idx_set]
        if not _rational_span_solve([list(g) for g in sub] or [[0] * aff.rank], list(vec)):
            return False
        # and within the cone of the face
        return in_cone(sub or [tuple([0] * aff.rank)], aff.rank, vec)

    avoiding = [
        f
        for f in fs
        if all(not face_contains(f, v) for v in aff.monomial_ideal)
    ]
    maximal = [
        f
        for f in avoiding
        if not any(f < g for g in avoiding)
    ]
    return sorted(maximal, key=lambda s: sorted(s))


def normalize_pc(aff):
    """One normalized cancellative component per minimal prime."""
    comps = []
    for k, face in enumerate(minimal_primes_pc(aff)):
        sub = [aff.generators[i] for i in sorted(face)]
        comp = AffineMonoid(
            f"{aff.name}_c{k}",
            aff.rank,
            sub,
            unit_orders=list(aff.unit_orders),
            degree_bound=aff.degree_bound,
        )
        comps.append(normalize_affine(comp))
    return comps


def global_sections_contains(components, tuples_vec):
    """Membership in the product of the components (bounded check)."""
    if len(tuples_vec) != len(components):
        raise ValidationError("one coordinate per component")
    return all(
        (not any(v)) or comp.contains(v)
        for comp, v in zip(components, tuples_vec)
    )


# ---------------------------------------------------------------------------
# valuations and discrete-valuation reports


def chart_valuations(aff):
    """(normal, scale) pairs: v(m) = <normal, m> / scale on the chart lattice."""
    normals = facet_normals(aff.generators, aff.rank)
    basis = lattice_basis_of(aff.generators, aff.rank)
    out = []
    from math import gcd

    for w in normals:
        vals = [sum(a * b for a, b in zip(w, col)) for col in basis]
        g = 0
        for v in vals:
            g = gcd(g, abs(v))
        out.append((w, g or 1))
    return out


@dataclass
class DVReport:
    is_dv: bool
    uniformizer: tuple | None
    witness: tuple | None


def dv_check(aff, normal, scale=1, window=5):
    """Is the localization at the facet a discrete valuation monoid?

    Uses bounded membership in the localized monoid S + Z(face of S) and
    checks the unit-times-power factorization on a degree window.
    """
    gens = aff.generators
    face_gens = [
        g for g in gens if sum(a * b for a, b in zip(normal, g)) == 0
    ]

    def loc_contains(vec):
        # vec = s + z with s in S and z in the group on the face
        coeffs = range(-aff.degree_bound, aff.degree_bound + 1)
        if not face_gens:
            return aff.contains(vec)
        for combo in itertools.product(coeffs, repeat=len(face_gens)):
            shift = [
                vec[i] - sum(c * g[i] for c, g in zip(combo, face_gens))
                for i in range(aff.rank)
            ]
            if aff.contains(shift):
                return True
        return False

    def value(vec):
        return sum(a * b for a, b in zip(normal, vec)) // scale

    # find a uniformizer: bounded scan over the saturation box
    uni = None
    for v in saturation_points_in_box(aff):
        if value(v) == 1 and loc_contains(v):
            uni = v
            break
    if uni is None:
        return DVReport(False, None, None)
    # bounded factorization: every localized element is unit * power
    basis = lattice_basis_of(gens, aff.rank)
    for v in saturation_points_in_box(aff):
        if not loc_contains(v):
            continue
        k = value(v)
        u = tuple(a - k * b for a, b in zip(v, uni))
        neg_u = tuple(-a for a in u)
        if not (loc_contains(u) and loc_contains(neg_u)):
            return DVReport(False, uni, v)
    return DVReport(True, uni, None)


@dataclass
class IntersectionReport:
    holds: bool
    witnesses: list


def intersect_localizations_check(aff):
    """Bounded window: membership in the chart equals nonnegativity at
    every facet valuation (the hallmark of normal charts)."""
    normals = facet_normals(aff.generators, aff.rank)
    basis = lattice_basis_of(aff.generators, aff.rank)
    lo, hi = _zonotope_box(aff.generators, aff.rank)
    witnesses = []
    for v in _box_points(lo, hi):
        if not any(v):
            continue
        if not in_subgroup(basis, v):
            continue
        if not _rational_span_solve([list(g) for g in aff.generators], list(v)):
            continue
        in_all_halfspaces = all(
            sum(a * b for a, b in zip(w, v)) >= 0 for w in normals
        )
        member = aff.contains(v)
        if in_all_halfspaces != member:
            witnesses.append(tuple(v))
    return IntersectionReport(not witnesses, sorted(witnesses))


# ---------------------------------------------------------------------------
# seminormalization


def _face_of_point(aff, vec, normals):
    return tuple(
        i
        for i, w in enumerate(normals)
        if sum(a * b for a, b in zip(w, vec)) == 0
    )


def seminormal_membership(aff, vec):
    """Exact: vec belongs to the seminormalization iff it lies in the
    subgroup generated by the chart elements on its own face."""
    normals = facet_normals(aff.generators, aff.rank)
    basis = lattice_basis_of(aff.generators, aff.rank)
    if not in_cone(aff.generators, aff.rank, vec, normals):
        return False
    if not in_subgroup(basis, vec):
        return False
    t = _face_of_point(aff, vec, normals)
    face_gens = [
        g
        for g in aff.generators
        if all(
            sum(a * b for a, b in zip(normals[i], g)) == 0 for i in t
        )
    ]
    face_basis = lattice_basis_of(face_gens, aff.rank) if face_gens else []
    return in_subgroup(face_basis, vec)


def seminormal_membership_powers(aff, vec, kmax=None):
    """Oracle: all large powers land in the chart (gcd of the multiplier
    set is 1 once the set is an additive semigroup)."""
    kmax = kmax or aff.degree_bound
    from math import gcd

    hits = [
        k
        for k in range(1, kmax + 1)
        if aff.contains(tuple(k * x for x in vec), bound=aff.degree_bound * kmax)
    ]
    if not hits:
        return False
    g = 0
    for k in hits:
        g = gcd(g, k)
    return g == 1


def seminormalize_cancellative(aff):
    """Largest intermediate monoid whose elements have all large powers in
    the chart; computed from box generators of the exact membership."""
    if aff.is_pc_quotient:
        raise ValidationError("cancellative charts only")
    pts = [
        v for v in saturation_points_in_box(aff) if seminormal_membership(aff, v)
    ]
    gens = sorted(set(pts) | set(aff.generators))
    out = AffineMonoid(
        f"{aff.name}_sn",
        aff.rank,
        [tuple(g) for g in gens],
        unit_orders=list(aff.unit_orders),
        degree_bound=aff.degree_bound,
    )
    # verification window: the generated monoid matches exact membership
    for v in saturation_points_in_box(aff):
        assert out.contains(v) == seminormal_membership(aff, v), v
    return out


def unit_lattice_of_chart(aff):
    """Basis (columns) of the unit sublattice: lineality of the cone
    intersected with the chart lattice."""
    normals = facet_normals(aff.generators, aff.rank)
    basis = lattice_basis_of(aff.generators, aff.rank)
    if not basis:
        return []
    k = len(basis)
    rows = [
        [sum(w[i] * basis[j][i] for i in range(aff.rank)) for j in range(k)]
        for w in normals
    ]
    if not rows:
        coeff_kernel = [
            [1 if i == j else 0 for i in range(k)] for j in range(k)
        ]
    else:
        coeff_kernel = intlin.kernel_basis(rows)
    out = []
    for coeffs in coeff_kernel:
        vec = [
            sum(coeffs[j] * basis[j][i] for j in range(k))
            for i in range(aff.rank)
        ]
        out.append(vec)
    return [v for v in out if any(v)]


# ---------------------------------------------------------------------------
# glued schemes


@dataclass
class GluedScheme:
    lattice_rank: int
    charts: list
    unit_orders: list = field(default_factory=list)
    glue: str = "fan"
    name: str = "X"

    def __post_init__(self):
        if self.glue not in ("fan", "generic"):
            raise ValidationError(f"unknown glue mode {self.glue!r}")
        for c in self.charts:
            if c.rank != self.lattice_rank:
                raise ValidationError("chart rank mismatch")
            if c.is_pc_quotient:
                raise ValidationError("scheme charts must be cancellative")
        # charts must share the full lattice as common group completion
        for c in self.charts:
            if c.unit_tags is None:
                basis = lattice_basis_of(c.generators, self.lattice_rank)
                if len(basis) != self.lattice_rank:
                    raise ValidationError(
                        f"chart {c.name} does not span the scheme lattice"
                    )

    @property
    def torsion(self):
        return list(self.unit_orders)


def affine_scheme(aff, name=None):
    return GluedScheme(
        aff.rank, [aff], unit_orders=list(aff.unit_orders), glue="fan",
        name=name or aff.name,
    )


def projective_space(n):
    """n+1 standard charts over the lattice of exponent differences."""
    charts = []
    basis = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    zero = tuple([0] * n)
    # chart 0: all x_j / x_0
    charts.append(AffineMonoid("U0", n, list(basis)))
    for i in range(1, n + 1):
        gens = [tuple(-v for v in basis[i - 1])]
        for j in range(1, n + 1):
            if j != i:
                gens.append(
                    tuple(a - b for a, b in zip(basis[j - 1], basis[i - 1]))
                )
        charts.append(AffineMonoid(f"U{i}", n, gens))
    return GluedScheme(n, charts, glue="fan", name=f"P{n}")


def glued_lines(n_plus_1):
    """Copies of the affine line sharing only the generic point."""
    charts = [AffineMonoid(f"L{i}", 1, [(1,)]) for i in range(n_plus_1)]
    return GluedScheme(1, charts, glue="generic", name=f"lines{n_plus_1}")


def product_scheme(x1, x2, name=None):
    if x1.glue != "fan" or x2.glue != "fan":
        raise ValidationError("products are built for fan-glued schemes")
    d1, d2 = x1.lattice_rank, x2.lattice_rank
    charts = []
    for c1 in x1.charts:
        for c2 in x2.charts:
            gens = [tuple(g) + tuple([0] * d2) for g in c1.generators]
            gens += [tuple([0] * d1) + tuple(g) for g in c2.generators]
            charts.append(
                AffineMonoid(f"{c1.name}x{c2.name}", d1 + d2, gens)
            )
    return GluedScheme(
        d1 + d2,
        charts,
        unit_orders=list(x1.unit_orders) + list(x2.unit_orders),
        glue="fan",
        name=name or f"{x1.name}x{x2.name}",
    )


# -- height-one points and divisors -------------------------------------------


@dataclass(frozen=True)
class HeightOnePoint:
    label: str
    normal: tuple
    scale: int
    chart_indices: tuple

    def valuation(self, vec):
        return sum(a * b for a, b in zip(self.normal, vec)) // self.scale


def height_one_points(scheme):
    points = []
    if scheme.glue == "fan":
        by_normal = {}
        for ci, chart in enumerate(scheme.charts):
            for w, g in chart_valuations(chart):
                by_normal.setdefault((w, g), []).append(ci)
        for (w, g), cis in sorted(by_normal.items()):
            label = "v" + str(tuple(w)).replace(" ", "")
            points.append(HeightOnePoint(label, w, g, tuple(sorted(cis))))
    else:
        for ci, chart in enumerate(scheme.charts):
            for w, g in chart_valuations(chart):
                label = f"c{ci}:v" + str(tuple(w)).replace(" ", "")
                points.append(HeightOnePoint(label, w, g, (ci,)))
    return points


def divisor_of(scheme, vec, points=None):
    """Principal divisor of a generic lattice element."""
    points = points if points is not None else height_one_points(scheme)
    return {p.label: p.valuation(vec) for p in points if p.valuation(vec) != 0}


def _require_normal_charts(scheme):
    for chart in scheme.charts:
        if chart.unit_tags is not None:
            raise NotNormal("tagged charts are not supported here")
        if not is_normal(chart):
            raise NotNormal(f"chart {chart.name} is not normal")


def class_group(scheme, drop_points=()):
    """Cokernel of the divisor matrix on the height-one points."""
    _require_normal_charts(scheme)
    points = [
        p for p in height_one_points(scheme) if p.label not in drop_points
    ]
    d = scheme.lattice_rank
    rows = []
    for i in range(d):
        e = tuple(1 if j == i else 0 for j in range(d))
        rows.append([p.valuation(e) for p in points])
    pres = GroupPresentation(
        len(points), rows, generator_labels=[p.label for p in points]
    )
    return pres


# -- Cartier data and the Picard group ----------------------------------------


def overlap_unit_lattice(scheme, i, j):
    """Basis (columns, lattice part) of the overlap's unit group."""
    d = scheme.lattice_rank
    if scheme.glue == "generic":
        return [[1 if r == k else 0 for r in range(d)] for k in range(d)]
    gens = list(scheme.charts[i].generators) + list(scheme.charts[j].generators)
    merged = AffineMonoid(f"O{i}{j}", d, gens)
    return unit_lattice_of_chart(merged)


def cartier_and_pic(scheme):
    """(Cart presentation, Pic invariants) from chartwise generic data."""
    d = scheme.lattice_rank
    torsion = scheme.torsion
    u = len(torsion)
    width = d + u
    c = len(scheme.charts)
    dim = width * c

    def block(i, vec):
        out = [0] * dim
        for k, v in enumerate(vec):
            out[i * width + k] = v
        return out

    torsion_rows = []
    for i in range(c):
        for t, order in enumerate(torsion):
            torsion_rows.append(block(i, [0] * d + [order if s == t else 0 for s in range(u)]))

    # numerator: tuples whose pairwise differences are overlap units
    basis = [[1 if r == k else 0 for r in range(dim)] for k in range(dim)]
    for i in range(c):
        for j in range(i + 1, c):
            lat = overlap_unit_lattice(scheme, i, j)
            target = [list(col) + [0] * u for col in lat]
            # torsion coordinates are everywhere invertible (mod their order)
            for t in range(u):
                target.append([0] * d + [1 if s == t else 0 for s in range(u)])
            diff = [
                [b[i * width + k] - b[j * width + k] for b in basis]
                for k in range(width)
            ]
            coeff = intlin.preimage_lattice(diff, target)
            basis = _combine(basis, coeff, dim)
            if not basis:
                break
        if not basis:
            break
    numerator = basis

    chart_unit_cols = []
    for i, chart in enumerate(scheme.charts):
        for col in unit_lattice_of_chart(chart):
            chart_unit_cols.append(block(i, list(col) + [0] * u))
        if chart.unit_tags is None:
            for t in range(u):
                chart_unit_cols.append(
                    block(i, [0] * d + [1 if s == t else 0 for s in range(u)])
                )
        else:
            for tvec in _tagged_torsion_units(chart, torsion):
                chart_unit_cols.append(block(i, [0] * d + list(tvec)))

    diagonal_cols = []
    for k in range(width):
        vec = [0] * dim
        for i in range(c):
            vec[i * width + k] = 1
        diagonal_cols.append(vec)

    cart = quotient_group(dim, [], numerator, chart_unit_cols + torsion_rows)
    pic = quotient_group(
        dim, [], numerator, chart_unit_cols + torsion_rows + diagonal_cols
    )
    return cart, pic


def _combine(basis_cols, coeff_cols, dim):
    """Compose a lattice basis with coefficient columns."""
    out = []
    for col in coeff_cols:
        vec = [0] * dim
        for j, c in enumerate(col):
            if c:
                for r in range(dim):
                    vec[r] += c * basis_cols[j][r]
        if any(vec):
            out.append(vec)
    return intlin.lattice_basis(out, dim)


def _tagged_torsion_units(chart, torsion):
    """Torsion units of a unit-tagged chart: tags of nonnegative
    combinations with zero lattice part, within the degree bound."""
    gens = chart.generators
    tags = chart.unit_tags
    u = len(torsion)
    found = set()
    bound = chart.degree_bound

    def rec(idx, vec, tag):
        if idx == len(gens):
            if not any(vec):
                found.add(tuple(t % o for t, o in zip(tag, torsion)))
            return
        for coeff in range(bound + 1):
            nv = [a + coeff * b for a, b in zip(vec, gens[idx])]
            nt = [a + coeff * b for a, b in zip(tag, tags[idx])]
            rec(idx + 1, nv, nt)

    rec(0, [0] * chart.rank, [0] * u)
    # subgroup generated by the found tags
    out = set()
    frontier = list(found)
    while frontier:
        t = frontier.pop()
        if t in out:
            continue
        out.add(t)
        for s in list(out):
            combo = tuple((a + b) % o for a, b, o in zip(t, s, torsion))
            if combo not in out:
                frontier.append(combo)
    return sorted(v for v in out if any(v))


def pic(scheme):
    _, p = cartier_and_pic(scheme)
    return p


def cartier_group(scheme):
    c, _ = cartier_and_pic(scheme)
    return c
