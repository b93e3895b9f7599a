"""Projective A-sets, rank functions, and the K- and G-groups.

Projectivity is decided by the section-of-counit criterion; the wedge
decomposition into cyclic pieces generated by idempotents recovers the
classifying multiset.  K0 is the monoid ring on the idempotents, K1 is
units times a sign, and G0 is presented over a bounded, closed universe
of A-sets whose relations come from subset/quotient exact sequences.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

from . import asets as ak
from . import spectra as sp
from .abgroup import AbelianGroup, GroupPresentation
from .errors import NotNilpotent
from .monoids import FiniteMonoid, ZERO, idempotents, quotient as monoid_quotient, units
from .monoids import localize


# ---------------------------------------------------------------------------
# projectivity


@dataclass
class ProjectiveDecomposition:
    base: FiniteMonoid
    idempotent_multiset: list[int]  # element indices, sorted

    def names(self):
        return [self.base.elements[e] for e in self.idempotent_multiset]


@dataclass
class NotProjective:
    reason: str


def counit(x):
    """The evaluation surjection from the free A-set on the carrier."""
    free = ak.free_aset(x.base, [x.carrier[p] for p in x.nonzero()])
    mapping = [0] * len(free.carrier)
    for (a, label), i in free.free_index.items():
        p = x.carrier.index(label)
        mapping[i] = x.act(a, p)
    return ak.ASetMorphism(free, x, mapping)


def counit_section(x):
    """A section of the counit, or None; existence characterizes projectives."""
    ev = counit(x)
    free = ev.source
    fibers = {p: [] for p in range(len(x.carrier))}
    for i, v in enumerate(ev.mapping):
        fibers[v].append(i)
    gens = ak.aset_generators(x)
    n = len(x.carrier)
    x_tables = ak._element_tables(x)
    f_tables = ak._element_tables(free)

    def close(mapping):
        changed = True
        while changed:
            changed = False
            for t_x, t_f in zip(x_tables, f_tables):
                for p in range(n):
                    if mapping[p] is None:
                        continue
                    src, dst = t_x[p], t_f[mapping[p]]
                    if mapping[src] is None:
                        mapping[src] = dst
                        changed = True
                    elif mapping[src] != dst:
                        return None
        for p in range(n):
            if mapping[p] is not None and ev.mapping[mapping[p]] != p:
                return None
        return mapping

    def rec(k, mapping):
        if k == len(gens):
            if all(v is not None for v in mapping):
                return list(mapping)
            return None
        g = gens[k]
        if mapping[g] is not None:
            return rec(k + 1, mapping)
        for img in fibers[g]:
            nxt = list(mapping)
            nxt[g] = img
            nxt = close(nxt)
            if nxt is None:
                continue
            out = rec(k + 1, nxt)
            if out is not None:
                return out
        return None

    start = [None] * n
    start[0] = 0
    start = close(start)
    if start is None:
        return None
    sec = rec(0, start)
    if sec is None:
        return None
    return ak.ASetMorphism(x, free, sec)


def wedge_components(x):
    """Partition of the nonzero carrier into wedge summands."""
    n = len(x.carrier)
    edges = []
    for t in x.gen_tables():
        for p in range(1, n):
            if t[p] != 0:
                edges.append((p, t[p]))
    from . import _kernels

    reps = _kernels.connected_components(n, edges)
    comps = {}
    for p in range(1, n):
        comps.setdefault(reps[p], []).append(p)
    return [sorted(v) for _, v in sorted(comps.items())]


def cyclic_on_idempotent(m, e):
    """The A-set Ae inside A."""
    a = ak.aset_from_monoid(m)
    orbit = sorted({m.table[b][e] for b in m.indices()} | {0})
    return ak.sub_aset(a, orbit, name=f"A{m.elements[e]}")


def decompose_projective(x):
    """Idempotent multiset when projective, else NotProjective."""
    section = counit_section(x)
    if section is None:
        return NotProjective("counit admits no section")
    m = x.base
    idems = [e for e in idempotents(m) if e != ZERO]
    found = []
    for comp in wedge_components(x):
        piece = ak.sub_aset(x, [0] + comp)
        match = None
        for e in idems:
            if ak.is_isomorphic(piece, cyclic_on_idempotent(m, e)):
                match = e
                break
        if match is None:
            # cannot happen when a section exists; guard anyway
            return NotProjective("component matches no cyclic idempotent piece")
        found.append(match)
    dec = ProjectiveDecomposition(m, sorted(found))
    rebuilt = ak.wedge([cyclic_on_idempotent(m, e) for e in dec.idempotent_multiset]) \
        if dec.idempotent_multiset else ak.sub_aset(ak.aset_from_monoid(m), [0])
    assert ak.is_isomorphic(x, rebuilt), "decomposition does not rebuild the input"
    return dec


def has_lifting(p, f, g):
    """Is there phi: P -> Y with f . phi = g?  (f onto, g: P -> Z.)"""
    for phi in ak.hom_enumerate(p, f.source):
        if f.compose(phi).mapping == g.mapping:
            return True
    return False


def is_projective_lifting_oracle(p, surjections):
    """Direct definition over a finite family of test squares."""
    for f in surjections:
        for g in ak.hom_enumerate(p, f.target):
            if not has_lifting(p, f, g):
                return False
    return True


# ---------------------------------------------------------------------------
# rank


def residue_group_aset(m, prime):
    """Quot(A/p) as an A-set (restriction along the canonical maps),
    together with the group monoid and the A -> G hom composite."""
    q, proj = monoid_quotient(m, sorted(prime.elements))
    nonzero = [i for i in q.nonzero()]
    g, loc_hom = localize(q, nonzero)
    comp = [loc_hom(proj(a)) for a in m.indices()]
    action = [[g.table[comp[a]][b] for b in g.indices()] for a in m.indices()]
    g_aset = ak.ASet(m, list(g.elements), action=action, name=f"G({prime})")
    return g_aset, g, comp


def rank(x, prime):
    """Number of nonzero orbits of X tensored up to the residue group."""
    m = x.base
    g_aset, g, comp = residue_group_aset(m, prime)
    t = ak.tensor(x, g_aset)
    n = len(t.carrier)
    edges = []
    for (i, j), cls in t.pair_class.items():
        for u in g.nonzero():
            edges.append((cls, t.pair_class[(i, g.table[u][j])]))
    from . import _kernels

    reps = _kernels.connected_components(n, edges)
    orbits = {reps[k] for k in range(1, n)}
    orbits.discard(reps[0])
    return len(orbits)


def rank_vector(x, primes=None):
    primes = primes if primes is not None else sp.mspec(x.base)
    return [rank(x, p) for p in primes]


def projectives_isomorphic(p_aset, q_aset):
    dp = decompose_projective(p_aset)
    dq = decompose_projective(q_aset)
    if isinstance(dp, NotProjective) or isinstance(dq, NotProjective):
        raise ValueError("both inputs must be projective")
    by_rank = rank_vector(p_aset) == rank_vector(q_aset)
    by_multiset = dp.idempotent_multiset == dq.idempotent_multiset
    by_search = ak.is_isomorphic(p_aset, q_aset)
    assert by_rank == by_multiset == by_search
    return by_rank


# ---------------------------------------------------------------------------
# K0 and K1


@dataclass
class K0Ring:
    base: FiniteMonoid
    generators: list[str]  # nonzero idempotent names
    presentation: GroupPresentation
    mult: dict  # (i, j) -> k index or None for zero

    def invariants(self) -> AbelianGroup:
        return self.presentation.invariants()

    def __str__(self):
        return str(self.invariants())


def k0(m):
    idems = [e for e in idempotents(m) if e != ZERO]
    pos = {e: i for i, e in enumerate(idems)}
    mult = {}
    for i, e in enumerate(idems):
        for j, f in enumerate(idems):
            prod = m.table[e][f]
            mult[(i, j)] = pos.get(prod)  # None when the product is 0
    return K0Ring(
        base=m,
        generators=[m.elements[e] for e in idems],
        presentation=GroupPresentation(len(idems), []),
        mult=mult,
    )


def k0_pushforward_matrix(hom):
    """Map on K0 induced by a monoid hom (idempotents to idempotents)."""
    src = [e for e in idempotents(hom.source) if e != ZERO]
    dst = [e for e in idempotents(hom.target) if e != ZERO]
    pos = {e: i for i, e in enumerate(dst)}
    mat = [[0] * len(src) for _ in dst]
    for j, e in enumerate(src):
        img = hom(e)
        if img != ZERO:
            mat[pos[img]][j] = 1
    return mat


def k1(m):
    """Units times a sign: presented with the unit group's relations."""
    u = units(m)
    pos = {x: i for i, x in enumerate(u)}
    k = len(u)
    rels = []
    for i, a in enumerate(u):
        for j, b in enumerate(u):
            prod = pos[m.table[a][b]]
            row = [0] * (k + 1)
            row[i] += 1
            row[j] += 1
            row[prod] -= 1
            rels.append(row)
    sign_row = [0] * (k + 1)
    sign_row[k] = 2
    rels.append(sign_row)
    labels = [m.elements[x] for x in u] + ["swap"]
    return GroupPresentation(k + 1, rels, generator_labels=labels)


def automorphism_group(x):
    """All equivariant based bijections of a finite A-set."""
    return [f for f in ak.hom_enumerate(x, x) if f.is_injective() and f.is_surjective()]


def abelianization_invariants(elements, compose):
    """Invariants of G/[G,G] for a finite group given by a composition map.

    Structural computation: close the commutators into a normal subgroup,
    pass to cosets, then repeatedly split off a cyclic factor generated by
    an element of maximal order (always a direct factor in a finite
    abelian group).
    """
    ident = elements[0]
    inverse = {}
    for a in elements:
        for b in elements:
            if compose(a, b) == ident:
                inverse[a] = b
                break

    commutators = {
        compose(compose(a, b), compose(inverse[a], inverse[b]))
        for a in elements
        for b in elements
    }
    subgroup = {ident}
    frontier = list(commutators)
    while frontier:
        g = frontier.pop()
        if g in subgroup:
            continue
        subgroup.add(g)
        frontier.extend(compose(g, h) for h in list(subgroup))

    reps, lookup = _cosets(elements, compose, subgroup)
    mul = {(a, b): lookup[compose(a, b)] for a in reps for b in reps}
    factors = _abelian_factors(reps, mul, lookup[ident])
    # peeled largest-first; reversing yields the divisibility chain
    factors = tuple(f for f in reversed(factors) if f > 1)
    return AbelianGroup(0, factors)


def _cosets(members, compose, subgroup):
    seen = {}
    reps = []
    lookup = {}
    for a in members:
        key = frozenset(compose(a, s) for s in subgroup)
        if key not in seen:
            seen[key] = a
            reps.append(a)
        lookup[a] = seen[key]
    return reps, lookup


def _abelian_factors(elems, mul, ident):
    if len(elems) == 1:
        return []

    def order(a):
        k, x = 1, a
        while x != ident:
            x = mul[(x, a)]
            k += 1
        return k

    best = max(elems, key=order)
    o = order(best)
    cyc = {ident}
    x = best
    while x != ident:
        cyc.add(x)
        x = mul[(x, best)]
    reps, lookup = _cosets(elems, lambda a, b: mul[(a, b)], cyc)
    new_mul = {(a, b): lookup[mul[(a, b)]] for a in reps for b in reps}
    return [o] + _abelian_factors(reps, new_mul, lookup[ident])


def k1_bruteforce(m, copies):
    """Abelianization of Aut of a free A-set on ``copies`` generators."""
    a = ak.aset_from_monoid(m)
    w = ak.wedge([a] * copies) if copies > 1 else a.relabeled("A")
    auts = automorphism_group(w)
    elements = [tuple(f.mapping) for f in auts]
    elements.sort()
    ident = tuple(range(len(w.carrier)))
    elements.remove(ident)
    elements.insert(0, ident)

    def compose(f, g):
        return tuple(f[v] for v in g)

    # sanity: the group order matches |units|^n * n!
    order = len(elements)
    expect = (len(units(m)) ** copies) * _factorial(copies)
    assert order == expect, (order, expect)
    return abelianization_invariants(elements, compose)


def _factorial(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


# ---------------------------------------------------------------------------
# G0 over a bounded universe


@dataclass
class G0Result:
    presentation: GroupPresentation
    class_labels: list[str]
    class_reps: list
    universe_hash: str
    class_index: dict = field(default_factory=dict)

    def invariants(self):
        return self.presentation.invariants()

    def __str__(self):
        return str(self.invariants())


def _closed_universe(seeds, middle_bound):
    """Close under A-subsets and subset-quotients; dedupe up to iso."""
    classes = {}
    order = []
    work = list(seeds)
    while work:
        x = work.pop()
        if len(x.carrier) > middle_bound + 1:
            continue
        key = ak.canonical_key(x)
        if key in classes:
            continue
        classes[key] = x
        order.append(key)
        for sub in ak.enumerate_asubsets(x, bound=middle_bound + 1):
            work.append(ak.sub_aset(x, sub))
            q, _ = ak.quotient_by_subset(x, sub)
            work.append(q)
    order.sort()
    return [(key, classes[key]) for key in order]


def g0(m_or_seeds, universe=None, middle_bound=6):
    """Grothendieck-style group on a closed universe of A-sets.

    One relation [X] = [X'] + [X/X'] per A-subset X' of each class
    representative X; every admissible exact sequence with middle X gives
    such a relation (the image of the left map is an A-subset).  The
    result is an approximation from below, reported with a universe hash.
    """
    if universe is None:
        seeds = m_or_seeds
    else:
        seeds = universe
    closed = _closed_universe(seeds, middle_bound)
    index = {key: i for i, (key, _) in enumerate(closed)}
    rels = []
    for key, x in closed:
        xi = index[key]
        for sub in ak.enumerate_asubsets(x, bound=middle_bound + 1):
            s = ak.sub_aset(x, sub)
            q, _ = ak.quotient_by_subset(x, sub)
            row = [0] * len(closed)
            row[xi] += 1
            row[index[ak.canonical_key(s)]] -= 1
            row[index[ak.canonical_key(q)]] -= 1
            rels.append(row)
    labels = [x.name or f"X{i}" for i, (_, x) in enumerate(closed)]
    blob = repr([key for key, _ in closed]).encode()
    return G0Result(
        presentation=GroupPresentation(len(closed), rels, generator_labels=labels),
        class_labels=labels,
        class_reps=[x for _, x in closed],
        universe_hash=hashlib.sha256(blob).hexdigest()[:16],
        class_index=index,
    )


def g0_class_vector(result, x):
    """Coefficient vector of [X] in the universe presentation."""
    key = ak.canonical_key(x)
    vec = [0] * len(result.class_labels)
    vec[result.class_index[key]] = 1
    return vec


@dataclass
class DevissageReport:
    nilpotency: int
    filtration_sizes: list[int]
    quotients_are_base_quotient_sets: bool
    identity_holds: bool


def devissage_check(m, ideal_elements, x, middle_bound=6):
    """[X] = sum of the filtration quotients [I^i X / I^{i+1} X] in G0."""
    ideal = sorted(set(ideal_elements) | {ZERO})
    power = set(ideal)
    nilpotency = 1
    while power != {ZERO}:
        power = {m.table[a][b] for a in power for b in ideal}
        nilpotency += 1
        if nilpotency > len(m.elements) + 1:
            raise NotNilpotent("ideal is not nilpotent")

    # descending filtration by the ideal powers, as global carrier subsets
    filt = [sorted(set(range(len(x.carrier))))]
    cur = filt[0]
    while True:
        nxt = {0}
        for a in ideal:
            for p in cur:
                nxt.add(x.act(a, p))
        nxt = sorted(nxt)
        filt.append(nxt)
        if nxt == [0]:
            break
        if len(filt) > nilpotency + 2:
            raise NotNilpotent("filtration does not terminate")
        cur = nxt

    quotients = []
    ok_base_quotient = True
    for i in range(len(filt) - 1):
        layer = ak.sub_aset(x, filt[i], name=f"layer{i}")
        inner = [filt[i].index(p) for p in filt[i + 1]]
        q, _ = ak.quotient_by_subset(layer, inner, name=f"gr{i}")
        quotients.append(q)
        ann = ak.ann_aset(q)
        if not set(ideal) <= set(ann):
            ok_base_quotient = False

    seeds = [x] + quotients
    res = g0(seeds, middle_bound=max(middle_bound, len(x.carrier)))
    vec = g0_class_vector(res, x)
    for q in quotients:
        qv = g0_class_vector(res, q)
        vec = [a - b for a, b in zip(vec, qv)]
    holds = res.presentation.contains_in_relation_lattice(vec)
    return DevissageReport(
        nilpotency=len(filt) - 1,
        filtration_sizes=[len(f) for f in filt],
        quotients_are_base_quotient_sets=ok_base_quotient,
        identity_holds=holds,
    )
