"""Double-arrow complexes, their homology, resolutions, and the two-way
passage to truncated simplicial A-sets.

A double-arrow complex carries paired boundaries (r, s) with rr = rs and
sr = ss; homology at n is the joint kernel of the induced maps out of
the coequalizer of (r_{n+1}, s_{n+1}).  The simplicial side stores split
levels; degenerate cells are indexed by monotone surjections in normal
form and faces are computed through epi-monic factorization.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import asets as ak
from .errors import (
    BoundExceeded,
    CapExceeded,
    NotAComplex,
    NotReduced,
    TruncationTooLow,
    ValidationError,
)
from .monoids import MonogenicMonoid, ValidationReport


# ---------------------------------------------------------------------------
# double-arrow complexes (finite carriers)


@dataclass
class DaComplex:
    base: object
    levels: list  # ASet per degree, starting at min_degree
    r: list  # r[i]: levels[i] -> levels[i-1], i >= 1
    s: list
    min_degree: int = 0

    @property
    def top_degree(self):
        return self.min_degree + len(self.levels) - 1

    def level(self, n):
        i = n - self.min_degree
        if 0 <= i < len(self.levels):
            return self.levels[i]
        return ak.zero_aset(self.base)

    def boundary(self, n):
        """(r_n, s_n): level n -> level n-1, zero maps outside the window."""
        i = n - self.min_degree
        if 1 <= i < len(self.levels):
            return self.r[i - 1], self.s[i - 1]
        src = self.level(n)
        dst = self.level(n - 1)
        z = ak.zero_morphism(src, dst)
        return z, z

    def translate(self, p):
        """X[p] with X[p]_n = X_{n+p}."""
        return DaComplex(
            self.base,
            list(self.levels),
            list(self.r),
            list(self.s),
            min_degree=self.min_degree - p,
        )

    def is_reduced(self):
        for n in range(self.min_degree + 1, self.top_degree + 1):
            _, s_n = self.boundary(n)
            r_up, s_up = self.boundary(n + 1)
            for p in range(len(self.level(n + 1).carrier)):
                if s_n(r_up(p)) != 0 or s_n(s_up(p)) != 0:
                    return False
        return True


def validate_dacomplex(c) -> ValidationReport:
    report = ValidationReport()
    for n in range(c.min_degree, c.top_degree + 1):
        r_n, s_n = c.boundary(n)
        for f in (r_n, s_n):
            sub = f.validate()
            if not sub.ok:
                report.add("BoundaryNotMorphism", (n,))
                break
    for n in range(c.min_degree + 1, c.top_degree + 1):
        r_n, s_n = c.boundary(n)
        r_up, s_up = c.boundary(n + 1)
        for p in range(len(c.level(n + 1).carrier)):
            if r_n(r_up(p)) != r_n(s_up(p)):
                report.add("RR!=RS", (n + 1, p))
            if s_n(r_up(p)) != s_n(s_up(p)):
                report.add("SR!=SS", (n + 1, p))
    return report


def coequalizer(f, g):
    """Coequalizer of a parallel pair; returns (Q, projection)."""
    if f.target is not g.target:
        raise NotAComplex("parallel pair must share a target")
    pairs = [(f(p), g(p)) for p in range(len(f.source.carrier))]
    return ak.quotient_aset(f.target, pairs, name=f"coeq({f.target.name})")


def homology(c, n):
    """ker(r-bar) intersect ker(s-bar) inside coeq(r_{n+1}, s_{n+1})."""
    r_up, s_up = c.boundary(n + 1)
    q, proj = coequalizer(r_up, s_up)
    r_n, s_n = c.boundary(n)

    # induced maps on classes; well-definedness is a consequence of the
    # complex axioms, asserted here
    induced_r = [None] * len(q.carrier)
    induced_s = [None] * len(q.carrier)
    for p in range(len(c.level(n).carrier)):
        cl = proj(p)
        for arr, f in ((induced_r, r_n), (induced_s, s_n)):
            if arr[cl] is None:
                arr[cl] = f(p)
            elif arr[cl] != f(p):
                raise NotAComplex(f"induced boundary ill-defined at degree {n}")
    keep = [
        k
        for k in range(len(q.carrier))
        if induced_r[k] == 0 and induced_s[k] == 0
    ]
    h = ak.sub_aset(q, keep, name=f"H{n}")
    h.coeq_aset = q
    h.coeq_proj = proj
    h.kept_classes = keep
    return h


@dataclass
class DaMorphism:
    source: DaComplex
    target: DaComplex
    maps: list  # per degree, aligned with source.min_degree

    def level_map(self, n):
        i = n - self.source.min_degree
        if 0 <= i < len(self.maps):
            return self.maps[i]
        return ak.zero_morphism(self.source.level(n), self.target.level(n))

    def validate(self):
        report = ValidationReport()
        c, d = self.source, self.target
        for n in range(c.min_degree + 1, c.top_degree + 1):
            f_n = self.level_map(n)
            f_dn = self.level_map(n - 1)
            r_c, s_c = c.boundary(n)
            r_d, s_d = d.boundary(n)
            for p in range(len(c.level(n).carrier)):
                if f_dn(r_c(p)) != r_d(f_n(p)):
                    report.add("rf!=fr", (n, p))
                if f_dn(s_c(p)) != s_d(f_n(p)):
                    report.add("sf!=fs", (n, p))
        return report


def induced_homology_map(f: DaMorphism, n):
    hx = homology(f.source, n)
    hy = homology(f.target, n)
    fn = f.level_map(n)
    # chase: class in coeq(X) -> element -> f -> class in coeq(Y)
    mapping = [None] * len(hx.carrier)
    x_proj = hx.coeq_proj
    y_proj = hy.coeq_proj
    back = {cl: [] for cl in hx.kept_classes}
    for p in range(len(f.source.level(n).carrier)):
        cl = x_proj(p)
        if cl in back:
            back[cl].append(p)
    kept_pos_y = {cl: i for i, cl in enumerate(hy.kept_classes)}
    for i, cl in enumerate(hx.kept_classes):
        images = {y_proj(fn(p)) for p in back[cl]}
        if len(images) != 1:
            raise NotAComplex("induced homology map ill-defined")
        img = images.pop()
        if img not in kept_pos_y:
            raise NotAComplex("induced map leaves the joint kernel")
        mapping[i] = kept_pos_y[img]
    return ak.ASetMorphism(hx, hy, mapping)


def is_quasi_isomorphism(f: DaMorphism, degrees):
    for n in degrees:
        g = induced_homology_map(f, n)
        if not (g.is_injective() and g.is_surjective()):
            return False
    return True


# ---------------------------------------------------------------------------
# resolutions over finite-table bases


def _fiber_pairs(mapping, n, include_diagonal):
    fibers = {}
    for p in range(n):
        fibers.setdefault(mapping[p], []).append(p)
    pairs = []
    for members in fibers.values():
        for a_i in range(len(members)):
            start = a_i if include_diagonal else a_i + 1
            for b_i in range(start, len(members)):
                if members[a_i] == 0 and members[b_i] == 0:
                    continue
                pairs.append((members[a_i], members[b_i]))
    return pairs


def _congruence_generators(x, eps_mapping):
    """Small generating set of the fiber congruence of a surjection.

    Greedy smallest-first over distinct-fiber pairs; the closure is
    verified to reproduce the full fiber partition.
    """
    n = len(x.carrier)
    full = ak.congruence_closure_naive(
        x, _fiber_pairs(eps_mapping, n, include_diagonal=False)
    ).reps

    chosen = []
    reps = list(range(n))

    def find(p):
        while reps[p] != p:
            reps[p] = reps[reps[p]]
            p = reps[p]
        return p

    candidates = sorted(
        (p, q)
        for p, q in _fiber_pairs(eps_mapping, n, include_diagonal=False)
        if p != q
    )
    for p, q in candidates:
        if find(p) != find(q):
            chosen.append((p, q))
            cong = ak.congruence_closure(x, chosen)
            reps = list(cong.reps)
    assert reps == list(full), "generator search failed to close the congruence"
    return chosen


def projective_resolution(x, length_cap=3, minimized=True, strict=False):
    """Exact double-arrow complex of frees with coeq(r1, s1) = X.

    ``minimized=False`` keeps the full-pullback construction (one free
    generator per element of the fiber congruence).  Returns (complex,
    augmentation morphism).  Resolutions need not terminate (periodic ones
    exist over truncated bases); a window cut at ``length_cap`` is exact
    in degrees 1..top-1 and is returned with ``complete=False`` unless
    ``strict`` asks for CapExceeded instead.
    """
    m = x.base
    if isinstance(m, MonogenicMonoid):
        raise BoundExceeded("use free_resolution_monogenic for this base")
    gens = ak.aset_generators(x)
    p0 = ak.free_aset(m, [x.carrier[g] for g in gens], name="P0")
    eps_map = [0] * len(p0.carrier)
    for (a, label), i in p0.free_index.items():
        eps_map[i] = x.act(a, x.carrier.index(label))
    eps = ak.ASetMorphism(p0, x, eps_map)
    if not eps.is_surjective():
        raise ValidationError("generator sweep failed to cover the carrier")

    levels = [p0]
    rs, ss = [], []
    cur = p0
    cur_eps = eps_map

    for depth in range(length_cap):
        n = len(cur.carrier)
        if minimized:
            gen_pairs = _congruence_generators(cur, cur_eps)
        else:
            gen_pairs = [
                (p, q)
                for (p, q) in _fiber_pairs(cur_eps, n, include_diagonal=True)
            ]
        if not gen_pairs:
            break  # the augmentation is already injective: nothing to relate
        # positional labels: carrier names may collide when concatenated
        labels = [f"w{k}" for k in range(len(gen_pairs))]
        nxt = ak.free_aset(m, labels, name=f"P{depth + 1}")
        r_map = [0] * len(nxt.carrier)
        s_map = [0] * len(nxt.carrier)
        for (a, label), i in nxt.free_index.items():
            p, q = gen_pairs[int(label[1:])]
            r_map[i] = cur.act(a, p)
            s_map[i] = cur.act(a, q)
        r_mor = ak.ASetMorphism(nxt, cur, r_map)
        s_mor = ak.ASetMorphism(nxt, cur, s_map)
        levels.append(nxt)
        rs.append(r_mor)
        ss.append(s_mor)

        # stop when the joint kernel of the top pair is trivial
        joint = [
            i
            for i in range(len(nxt.carrier))
            if r_map[i] == 0 and s_map[i] == 0
        ]
        next_eps = [0] * len(nxt.carrier)
        pair_index = {}
        for i in range(len(nxt.carrier)):
            pair = (r_map[i], s_map[i]) if i else (0, 0)
            pair_index.setdefault(pair, len(pair_index))
            next_eps[i] = pair_index[pair]
        if joint == [0]:
            # exact already with the zero complex above
            break
        cur = nxt
        cur_eps = next_eps
    else:
        if strict:
            raise CapExceeded(f"resolution exceeded length cap {length_cap}")
        comp = DaComplex(m, levels, rs, ss)
        comp.complete = False
        return comp, eps

    comp = DaComplex(m, levels, rs, ss)
    comp.complete = True
    return comp, eps


def reduced_resolution(x, length_cap=3, strict=False):
    """Resolution with vanishing second boundary above degree 1."""
    comp, eps = projective_resolution(x, length_cap=length_cap, minimized=True)
    m = x.base
    levels = list(comp.levels[: min(2, len(comp.levels))])
    rs = list(comp.r[:1])
    ss = list(comp.s[:1])
    complete = True
    if len(levels) < 2:
        out = DaComplex(m, levels, rs, ss)
        out.complete = True
        return out, eps
    for depth in range(1, length_cap):
        top = levels[depth]
        r_top = rs[depth - 1]
        s_top = ss[depth - 1]
        joint = sorted(
            i
            for i in range(len(top.carrier))
            if r_top(i) == 0 and s_top(i) == 0
        )
        if joint == [0]:
            break
        k_aset = ak.sub_aset(top, joint, name=f"K{depth}")
        kg = ak.aset_generators(k_aset)
        labels = [k_aset.carrier[g] for g in kg]
        nxt = ak.free_aset(m, labels, name=f"P{depth + 1}")
        r_map = [0] * len(nxt.carrier)
        for (a, label), i in nxt.free_index.items():
            gidx = joint[k_aset.carrier.index(label)]
            r_map[i] = top.act(a, gidx)
        levels.append(nxt)
        rs.append(ak.ASetMorphism(nxt, top, r_map))
        ss.append(ak.zero_morphism(nxt, top))
    else:
        if strict:
            raise CapExceeded(f"reduced resolution exceeded length cap {length_cap}")
        complete = False
    out = DaComplex(m, levels, rs, ss)
    out.complete = complete
    return out, eps


# ---------------------------------------------------------------------------
# symbolic free complexes over the monogenic base


@dataclass
class FreeComplex:
    """Levelwise free complex over the monogenic base.

    Levels hold generator labels; maps send a generator to
    (exponent, target label) or None for the zero map.
    """

    base: MonogenicMonoid
    level_labels: list
    r: list  # r[i]: dict label -> (exp, label) | None, level i+1 -> i
    s: list

    @property
    def top_degree(self):
        return len(self.level_labels) - 1

    def is_reduced(self):
        # s.r and s.s must vanish wherever the composites exist
        for n in range(1, self.top_degree):
            s_n = self.s[n - 1]
            for upper in (self.r[n], self.s[n]):
                for img in upper.values():
                    if img is not None and s_n.get(img[1]) is not None:
                        return False
        return True


def cyclic_quotient_aset(k, eq=None, base=None, name=None):
    """A/(t^k) when eq is None, else A/(t^k = t^eq), as a finite A-set.

    Carrier: 0, 1, t, ..., t^{k-1}.
    """
    base = base or MonogenicMonoid()
    carrier = ["0"] + [base.element_name(i) for i in range(k)]
    theta = [0] * (k + 1)
    for i in range(k):
        nxt = i + 1
        if eq is None:
            theta[1 + i] = 1 + nxt if nxt < k else 0
        else:
            theta[1 + i] = 1 + (nxt if nxt < k else eq)
    return ak.ASet(base, carrier, theta=theta, name=name or f"A/t^{k}")


def free_resolution_monogenic(x, degree_bound=24, length_cap=4):
    """Resolution of a finite carrier over the monogenic base.

    Levels are symbolic frees; congruence generators are found by a
    bounded-degree scan and verified on a doubled window.
    """
    base = x.base
    gens = ak.aset_generators(x)
    labels0 = [x.carrier[g] for g in gens]

    def eps(exp, gi):
        return x.act(exp, gens[gi])

    # find generating pairs of the fiber congruence by bounded scan
    elems = [(k, gi) for gi in range(len(gens)) for k in range(degree_bound)]
    fibers = {}
    for e in elems:
        fibers.setdefault(eps(*e), []).append(e)
    pairs = []
    for v, members in sorted(fibers.items()):
        if v == 0:
            pairs.extend((mem, (None, None)) for mem in members)
        else:
            pairs.extend(
                (members[i], members[j])
                for i in range(len(members))
                for j in range(i + 1, len(members))
            )

    def closure_covers(chosen):
        # propagate: chosen pairs generate; verify all bounded pairs merge
        # inside a truncated carrier model
        node = {}

        def nid(e):
            if e not in node:
                node[e] = len(node)
            return node[e]

        all_nodes = [(None, None)] + elems
        for e in all_nodes:
            nid(e)
        theta_pairs = []
        for (k, gi) in elems:
            if k + 1 < degree_bound:
                theta_pairs.append((nid((k, gi)), nid((k + 1, gi))))
        # build generator-translate closure manually: seeds + t-shifts
        seeds = []
        for (a, b) in chosen:
            for shift in range(degree_bound):
                sa = _shift(a, shift, degree_bound)
                sb = _shift(b, shift, degree_bound)
                if sa is False or sb is False:
                    continue
                seeds.append((nid(sa), nid(sb)))
        from . import _kernels

        reps = _kernels.closure(len(node), [], seeds)
        for (a, b) in pairs:
            if max(_deg(a), _deg(b)) <= degree_bound // 2:
                if reps[nid(a)] != reps[nid(b)]:
                    return False
        return True

    def _shift(e, k, bound):
        if e == (None, None):
            return e
        if e[0] + k >= bound:
            return False
        return (e[0] + k, e[1])

    def _deg(e):
        return 0 if e == (None, None) else e[0]

    chosen = []
    for a, b in sorted(pairs, key=lambda ab: (max(_deg(ab[0]), _deg(ab[1])), ab)):
        if max(_deg(a), _deg(b)) > degree_bound // 2:
            continue
        if not chosen or not _pair_in_closure(chosen, a, b, degree_bound):
            chosen.append((a, b))
    # drop redundant generators greedily
    kept = []
    for i, p in enumerate(chosen):
        trial = kept + chosen[i + 1 :]
        if not _pair_in_closure(trial, p[0], p[1], degree_bound):
            kept.append(p)
    if not closure_covers(kept):
        raise BoundExceeded("congruence generators not found within bound")

    labels1 = [f"({_fmt(a)};{_fmt(b)})" for a, b in kept]
    r1 = {}
    s1 = {}
    for lbl, (a, b) in zip(labels1, kept):
        r1[lbl] = None if a == (None, None) else (a[0], labels0[a[1]])
        s1[lbl] = None if b == (None, None) else (b[0], labels0[b[1]])
    level_labels = [labels0]
    rs, ss = [], []
    if labels1:
        level_labels.append(labels1)
        rs.append(r1)
        ss.append(s1)
        # continue reduced: joint kernel of free maps is zero over a free
        # target unless a generator maps to zero on both sides
        joint = [lbl for lbl in labels1 if r1[lbl] is None and s1[lbl] is None]
        if joint:
            raise BoundExceeded("higher syzygies not supported symbolically")
    return FreeComplex(base, level_labels, rs, ss), eps


def _pair_in_closure(chosen, a, b, bound):
    node = {}

    def nid(e):
        if e not in node:
            node[e] = len(node)
        return node[e]

    seeds = []
    for (p, q) in chosen:
        for shift in range(bound):
            sp = p if p == (None, None) else ((p[0] + shift, p[1]) if p[0] + shift < bound else None)
            sq = q if q == (None, None) else ((q[0] + shift, q[1]) if q[0] + shift < bound else None)
            if sp is None or sq is None:
                continue
            seeds.append((nid(sp), nid(sq)))
    ia, ib = nid(a), nid(b)
    from . import _kernels

    reps = _kernels.closure(len(node), [], seeds)
    return reps[ia] == reps[ib]


def _fmt(e):
    if e == (None, None):
        return "0"
    k, gi = e
    return f"t^{k}.g{gi}"


def two_term_free_complex(exp, base=None):
    """The reduced free complex with boundary pair (t^exp, 0)."""
    base = base or MonogenicMonoid()
    return FreeComplex(
        base,
        [["g0"], ["h0"]],
        [{"h0": (exp, "g0")}],
        [{"h0": None}],
    )


# ---------------------------------------------------------------------------
# truncated simplicial A-sets


@dataclass
class TruncSimplicialASet:
    base: object
    levels: list
    faces: list  # faces[n-1] = [d_0..d_n] at level n, n >= 1
    degeneracies: list  # degeneracies[n] = [s_0..s_n] at level n, n < N

    @property
    def truncation(self):
        return len(self.levels) - 1

    def face(self, n, i):
        return self.faces[n - 1][i]

    def degeneracy(self, n, i):
        return self.degeneracies[n][i]


def validate_simplicial(sset) -> ValidationReport:
    report = ValidationReport()
    n_top = sset.truncation
    for n in range(1, n_top + 1):
        for i, f in enumerate(sset.faces[n - 1]):
            if not f.validate().ok:
                report.add("FaceNotMorphism", (n, i))
    for n in range(0, n_top):
        for i, f in enumerate(sset.degeneracies[n]):
            if not f.validate().ok:
                report.add("DegeneracyNotMorphism", (n, i))
    # (1) d_i d_j = d_{j-1} d_i for i < j
    for n in range(2, n_top + 1):
        for j in range(n + 1):
            for i in range(j):
                lhs = sset.face(n - 1, i).compose(sset.face(n, j))
                rhs = sset.face(n - 1, j - 1).compose(sset.face(n, i))
                if lhs.mapping != rhs.mapping:
                    report.add("FaceFace", (n, i, j))
    # (2) s_i s_j = s_{j+1} s_i for i <= j
    for n in range(0, n_top - 1):
        for j in range(n + 1):
            for i in range(j + 1):
                lhs = sset.degeneracy(n + 1, i).compose(sset.degeneracy(n, j))
                rhs = sset.degeneracy(n + 1, j + 1).compose(sset.degeneracy(n, i))
                if lhs.mapping != rhs.mapping:
                    report.add("DegenDegen", (n, i, j))
    # (3, 4, 5) d_i s_j interactions
    for n in range(0, n_top):
        for j in range(n + 1):
            for i in range(n + 2):
                lhs = sset.face(n + 1, i).compose(sset.degeneracy(n, j))
                if i < j:
                    rhs = sset.degeneracy(n - 1, j - 1).compose(sset.face(n, i)) if n >= 1 else None
                    if rhs and lhs.mapping != rhs.mapping:
                        report.add("FaceDegen<", (n, i, j))
                elif i in (j, j + 1):
                    if lhs.mapping != list(range(len(sset.levels[n].carrier))):
                        report.add("FaceDegenId", (n, i, j))
                else:
                    rhs = sset.degeneracy(n - 1, j).compose(sset.face(n, i - 1)) if n >= 1 else None
                    if rhs and lhs.mapping != rhs.mapping:
                        report.add("FaceDegen>", (n, i, j))
    return report


def constant_simplicial(x, trunc):
    """The constant simplicial object on an A-set."""
    ident = ak.identity_morphism(x)
    levels = [x for _ in range(trunc + 1)]
    faces = [[ident] * (n + 1) for n in range(1, trunc + 1)]
    degeneracies = [[ident] * (n + 1) for n in range(0, trunc)]
    return TruncSimplicialASet(x.base, levels, faces, degeneracies)


def moore(sset):
    """Normalized complex: joint kernel of the lower faces, with the top
    two faces as the boundary pair.  Always reduced."""
    levels = []
    keeps = []
    for n in range(sset.truncation + 1):
        if n <= 1:
            keep = list(range(len(sset.levels[n].carrier)))
        else:
            keep = [
                p
                for p in range(len(sset.levels[n].carrier))
                if all(sset.face(n, i)(p) == 0 for i in range(n - 1))
            ]
        keeps.append(keep)
        levels.append(ak.sub_aset(sset.levels[n], keep, name=f"N{n}"))
    rs, ss = [], []
    for n in range(1, sset.truncation + 1):
        pos_prev = {p: i for i, p in enumerate(keeps[n - 1])}
        r_map = [pos_prev[sset.face(n, n)(p)] for p in keeps[n]]
        s_map = [pos_prev[sset.face(n, n - 1)(p)] for p in keeps[n]]
        rs.append(ak.ASetMorphism(levels[n], levels[n - 1], r_map))
        ss.append(ak.ASetMorphism(levels[n], levels[n - 1], s_map))
    comp = DaComplex(sset.base, levels, rs, ss)
    if not comp.is_reduced():
        raise NotReduced("normalized complex failed the reduced check")
    return comp


# -- monotone surjections ----------------------------------------------------


def surjections(k, m):
    """All monotone surjections [k] ->> [m] as value tuples."""
    if m > k or m < 0 or k < 0:
        return []
    out = []

    def rec(prefix):
        i = len(prefix)
        last = prefix[-1]
        if i == k + 1:
            if last == m:
                out.append(tuple(prefix))
            return
        for v in (last, last + 1):
            # v climbs by at most one per slot and must still reach m
            if v <= m and m - v <= k - i:
                rec(prefix + [v])

    rec([0])
    return out


def _identity_surjection(k):
    return tuple(range(k + 1))


def _compose_eps(eta, i):
    """eta . epsilon_i as a value tuple on [len(eta)-2]."""
    return tuple(eta[x] if x < i else eta[x + 1] for x in range(len(eta) - 1))


def _compose_eta(eta, i):
    """eta . eta_i, one level up."""
    return tuple(eta[x] if x <= i else eta[x - 1] for x in range(len(eta) + 1))


def dold_kan_inverse(c, trunc):
    """Split simplicial object whose nondegenerate cells are the complex
    entries; faces come from the boundary pair via epi-monic factorization."""
    if isinstance(c, FreeComplex):
        raise ValidationError("materialize the free complex first (tensor it)")
    if not c.is_reduced():
        raise NotReduced("the inverse construction requires a reduced complex")
    if c.min_degree != 0:
        raise ValidationError("complex must start at degree 0")
    bound = c.top_degree
    base = c.base

    # cells at level k: (eta, m, p) with eta: [k] ->> [m], p nonzero in C_m
    cell_index = []  # per level: dict cell -> carrier index
    carriers = []
    for k in range(trunc + 1):
        index = {}
        names = ["0"]
        for m in range(min(k, bound) + 1):
            lvl = c.level(m)
            for eta in surjections(k, m):
                for p in lvl.nonzero():
                    index[(eta, m, p)] = len(names)
                    tag = "" if eta == _identity_surjection(k) else f"@{eta}"
                    names.append(f"{lvl.carrier[p]}{tag}")
        cell_index.append(index)
        carriers.append(names)

    def complex_face(m, j, p):
        """d_j of a nondegenerate m-cell p: 0, s_m, or r_m."""
        r_m, s_m = c.boundary(m)
        if j <= m - 2:
            return 0, None
        if j == m - 1:
            v = s_m(p)
        else:
            v = r_m(p)
        return (m - 1, v) if v != 0 else (0, None)

    def face_of_cell(k, i, cell):
        eta, m, p = cell
        beta = _compose_eps(eta, i)
        image = sorted(set(beta))
        if len(image) == m + 1:
            return (beta, m, p)
        missing = next(j for j in range(m + 1) if j not in set(beta))
        eta2 = tuple(v if v < missing else v - 1 for v in beta)
        res = complex_face(m, missing, p)
        if res[1] is None:
            return None
        return (eta2, m - 1, res[1])

    levels = []
    for k in range(trunc + 1):
        names = carriers[k]
        if isinstance(base, MonogenicMonoid):
            theta = [0] * len(names)
            for cell, idx in cell_index[k].items():
                eta, m, p = cell
                q = c.level(m).theta[p]
                theta[idx] = cell_index[k].get((eta, m, q), 0) if q else 0
            levels.append(ak.ASet(base, names, theta=theta, name=f"K{k}"))
        else:
            action = [[0] * len(names) for _ in base.indices()]
            for a in base.indices():
                for cell, idx in cell_index[k].items():
                    eta, m, p = cell
                    q = c.level(m).act(a, p)
                    action[a][idx] = cell_index[k].get((eta, m, q), 0) if q else 0
            levels.append(ak.ASet(base, names, action=action, name=f"K{k}"))

    faces = []
    for k in range(1, trunc + 1):
        row = []
        for i in range(k + 1):
            mapping = [0] * len(carriers[k])
            for cell, idx in cell_index[k].items():
                out = face_of_cell(k, i, cell)
                mapping[idx] = cell_index[k - 1][out] if out else 0
            row.append(ak.ASetMorphism(levels[k], levels[k - 1], mapping))
        faces.append(row)

    degeneracies = []
    for k in range(0, trunc):
        row = []
        for i in range(k + 1):
            mapping = [0] * len(carriers[k])
            for cell, idx in cell_index[k].items():
                eta, m, p = cell
                up = ( _compose_eta(eta, i), m, p)
                mapping[idx] = cell_index[k + 1][up]
            row.append(ak.ASetMorphism(levels[k], levels[k + 1], mapping))
        degeneracies.append(row)

    sset = TruncSimplicialASet(base, levels, faces, degeneracies)
    sset.nondegenerate_index = [
        {
            p: cell_index[k][(_identity_surjection(k), k, p)]
            for p in (c.level(k).nonzero() if k <= bound else [])
        }
        for k in range(trunc + 1)
    ]
    sset.cell_index = cell_index
    return sset


# ---------------------------------------------------------------------------
# the correspondence check


def _all_cells_degenerate_above(sset, bound):
    for n in range(bound + 1, sset.truncation + 1):
        degen = set()
        for i in range(n):
            degen.update(sset.degeneracy(n - 1, i).mapping)
        if set(range(len(sset.levels[n].carrier))) - degen:
            return False
    return True


def enumerate_complex_morphisms(c, d):
    """All morphisms between double-arrow complexes (finite windows)."""
    if c.min_degree != d.min_degree:
        raise ValidationError("aligned windows required")
    per_level = []
    for n in range(c.min_degree, c.top_degree + 1):
        per_level.append(ak.hom_enumerate(c.level(n), d.level(n)))
    out = []
    for combo in itertools.product(*per_level):
        cand = DaMorphism(c, d, list(combo))
        if cand.validate().ok:
            out.append(cand)
    return out


def simplicial_morphisms_from_generators(kc, sset, c):
    """Simplicial maps KC -> S via images of the nondegenerate cells."""
    bound = c.top_degree
    results = []
    level_homs = []
    for n in range(bound + 1):
        level_homs.append(ak.hom_enumerate(c.level(n), sset.levels[n]))
    for combo in itertools.product(*level_homs):
        maps = _extend_to_simplicial(kc, sset, c, combo)
        if maps is not None:
            results.append(maps)
    return results


def _apply_eta(sset, eta, m, element):
    """Apply the degeneracy composite of a surjection to an element of S_m."""
    k = len(eta) - 1
    if k == m:
        return element
    j = next(i for i in range(k) if eta[i] == eta[i + 1])
    peeled = tuple(eta[: j + 1] + eta[j + 2 :])
    y = _apply_eta(sset, peeled, m, element)
    return sset.degeneracy(k - 1, j)(y)


def _extend_to_simplicial(kc, sset, c, gen_maps):
    bound = c.top_degree
    maps = []
    for k in range(sset.truncation + 1):
        mapping = [0] * len(kc.levels[k].carrier)
        for cell, idx in kc.cell_index[k].items():
            eta, m, p = cell
            img = gen_maps[m](p)
            mapping[idx] = _apply_eta(sset, eta, m, img)
        maps.append(ak.ASetMorphism(kc.levels[k], sset.levels[k], mapping))
    # verify simplicial naturality
    for n in range(1, sset.truncation + 1):
        for i in range(n + 1):
            lhs = sset.face(n, i).compose(maps[n])
            rhs = maps[n - 1].compose(kc.face(n, i))
            if lhs.mapping != rhs.mapping:
                return None
    for n in range(0, sset.truncation):
        for i in range(n + 1):
            lhs = sset.degeneracy(n, i).compose(maps[n])
            rhs = maps[n + 1].compose(kc.degeneracy(n, i))
            if lhs.mapping != rhs.mapping:
                return None
    return maps


@dataclass
class AdjunctionReport:
    simplicial_count: int
    complex_count: int
    bijective: bool
    counit_is_simplicial: bool


def adjunction_check(c, sset):
    """|Hom(KC, S)| = |Hom(C, NS)| with mutually inverse translations."""
    bound = c.top_degree
    if sset.truncation < bound:
        raise TruncationTooLow("simplicial truncation below the complex bound")
    if not _all_cells_degenerate_above(sset, bound):
        raise TruncationTooLow("nondegenerate cells above the complex bound")
    kc = dold_kan_inverse(c, sset.truncation)
    ns = moore(sset)
    ns_window = DaComplex(
        sset.base, ns.levels[: bound + 1], ns.r[:bound], ns.s[:bound]
    )
    simp = simplicial_morphisms_from_generators(kc, sset, c)
    comp = enumerate_complex_morphisms(c, ns_window)

    # forward translation: restrict a simplicial map to nondegenerate cells
    def forward(maps):
        out = []
        for n in range(bound + 1):
            nd = kc.nondegenerate_index[n]
            # N_n S carrier positions
            keep = ns.levels[n]
            amb = sset.levels[n]
            pos = {q: i for i, q in enumerate(_moore_keep(sset, n))}
            mapping = [0] * len(c.level(n).carrier)
            for p, idx in nd.items():
                img = maps[n](idx)
                mapping[p] = pos[img]
            out.append(ak.ASetMorphism(c.level(n), keep, mapping))
        return tuple(tuple(f.mapping) for f in out)

    def backward(g):
        gen_maps = []
        for n in range(bound + 1):
            keep = _moore_keep(sset, n)
            gen_maps.append(
                ak.ASetMorphism(
                    c.level(n),
                    sset.levels[n],
                    [keep[v] for v in g.maps[n].mapping],
                )
            )
        return _extend_to_simplicial(kc, sset, c, gen_maps)

    simp_keys = {tuple(tuple(f.mapping) for f in maps): maps for maps in simp}
    comp_keys = {tuple(tuple(f.mapping) for f in g.maps): g for g in comp}

    ok = len(simp) == len(comp)
    fwd_images = set()
    for maps in simp:
        key = forward(maps)
        fwd_images.add(key)
        if key not in comp_keys:
            ok = False
    ok = ok and len(fwd_images) == len(simp)
    for g in comp:
        maps = backward(g)
        if maps is None:
            ok = False
            continue
        if forward(maps) != tuple(tuple(f.mapping) for f in g.maps):
            ok = False

    counit_ok = _counit_is_simplicial(sset, ns, bound)
    return AdjunctionReport(
        simplicial_count=len(simp),
        complex_count=len(comp),
        bijective=ok,
        counit_is_simplicial=counit_ok,
    )


def _moore_keep(sset, n):
    if n <= 1:
        return list(range(len(sset.levels[n].carrier)))
    return [
        p
        for p in range(len(sset.levels[n].carrier))
        if all(sset.face(n, i)(p) == 0 for i in range(n - 1))
    ]


def _counit_is_simplicial(sset, ns, bound):
    """KNS -> S on nondegenerate cells is the Moore inclusion; verify the
    induced levelwise maps commute with faces and degeneracies."""
    kns = dold_kan_inverse(
        DaComplex(sset.base, ns.levels, ns.r, ns.s), sset.truncation
    )
    gen_maps = []
    for n in range(sset.truncation + 1):
        keep = _moore_keep(sset, n)
        gen_maps.append(
            ak.ASetMorphism(ns.levels[n], sset.levels[n], list(keep))
        )
    maps = _extend_to_simplicial(
        kns,
        sset,
        DaComplex(sset.base, ns.levels, ns.r, ns.s),
        gen_maps,
    )
    return maps is not None
