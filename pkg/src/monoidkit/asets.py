"""Pointed sets with a validated monoid action, and their category.

Carriers are index lists with basepoint at 0.  Over a finite-table base
the action is stored as a full |A| x |X| grid; over the monogenic base a
single self-map (the generator action) determines everything.  Quotients,
tensor products and coequalizers all reduce to the congruence-closure
kernel: merge seed pairs, then keep merging generator translates.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

from . import _kernels
from .errors import (
    BoundExceeded,
    NotAES,
    NotASubset,
    UnsupportedBackend,
    ValidationError,
    ZeroInS,
)
from .monoids import (
    MonogenicMonoid,
    ValidationReport,
    ZERO,
    localize as localize_monoid,
)

DEFAULT_ENUM_BOUND = 8


class ASet:
    """Pointed set with a left action of the base monoid."""

    def __init__(self, base, carrier, action=None, theta=None, name=""):
        self.base = base
        self.carrier = list(carrier)
        self.name = name or "X"
        if isinstance(base, MonogenicMonoid):
            if theta is None:
                raise ValidationError("monogenic A-sets need the generator map")
            self.theta = list(theta)
            self.action = None
        else:
            if action is None:
                raise ValidationError("finite-table A-sets need an action grid")
            self.action = [list(row) for row in action]
            self.theta = None

    # -- core ----------------------------------------------------------------

    def __len__(self):
        return len(self.carrier)

    def nonzero(self):
        return range(1, len(self.carrier))

    def act(self, a, x):
        """Action of monoid element ``a`` on carrier index ``x``."""
        if isinstance(self.base, MonogenicMonoid):
            if a is None:
                return 0
            for _ in range(a):
                x = self.theta[x]
            return x
        return self.action[a][x]

    def gen_tables(self):
        """Carrier self-maps of the monoid generators."""
        if isinstance(self.base, MonogenicMonoid):
            return [list(self.theta)]
        return [self.action[g] for g in self.base.generators]

    def element_name(self, x):
        return self.carrier[x]

    def __repr__(self):
        return f"ASet({self.name!r}, |X|={len(self.carrier)})"

    def relabeled(self, name):
        if isinstance(self.base, MonogenicMonoid):
            return ASet(self.base, self.carrier, theta=self.theta, name=name)
        return ASet(self.base, self.carrier, action=self.action, name=name)


def validate_aset(x) -> ValidationReport:
    report = ValidationReport()
    if isinstance(x.base, MonogenicMonoid):
        if len(x.theta) != len(x.carrier):
            report.add("ActionShape", ())
            return report
        if x.theta[0] != 0:
            report.add("BasepointNotFixed", ())
        return report
    m = x.base
    n = len(x.carrier)
    if len(x.action) != len(m.elements) or any(len(r) != n for r in x.action):
        report.add("ActionShape", ())
        return report
    for p in range(n):
        if x.action[m.one][p] != p:
            report.add("IdentityAction", (x.carrier[p],))
        if x.action[ZERO][p] != 0:
            report.add("ZeroKills", (x.carrier[p],))
    for a in m.indices():
        if x.action[a][0] != 0:
            report.add("BasepointNotFixed", (m.elements[a],))
    for a in m.indices():
        for b in m.indices():
            ab = m.table[a][b]
            for p in range(n):
                if x.action[ab][p] != x.action[a][x.action[b][p]]:
                    report.add(
                        "ActionAssociativity",
                        (m.elements[a], m.elements[b], x.carrier[p]),
                    )
                    if len(report.violations) > 16:
                        return report
    return report


def zero_aset(base, name="0"):
    if isinstance(base, MonogenicMonoid):
        return ASet(base, ["0"], theta=[0], name=name)
    return ASet(base, ["0"], action=[[0] for _ in base.indices()], name=name)


def aset_from_monoid(m, name=None):
    """The monoid acting on itself."""
    if isinstance(m, MonogenicMonoid):
        raise UnsupportedBackend("the monogenic monoid is not a finite carrier")
    return ASet(m, list(m.elements), action=[list(r) for r in m.table], name=name or m.name)


def aset_from_theta(theta, base=None, name="X"):
    """Monogenic-base A-set from the generator self-map."""
    base = base or MonogenicMonoid()
    carrier = ["0"] + [f"p{i}" for i in range(1, len(theta))]
    return ASet(base, carrier, theta=theta, name=name)


def build_action_from_gen_maps(m, carrier, gen_maps, name="X"):
    """Full action grid from per-generator carrier maps (finite base).

    The grid for a general element composes the generator maps along any
    word for it; validity is checked by the caller via validate_aset.
    """
    n = len(carrier)
    words = m.words_from_generators()
    action = [[0] * n for _ in m.indices()]
    gen_map = {g: gen_maps[i] for i, g in enumerate(m.generators)}
    for a in m.indices():
        if a == ZERO and len(m.elements) > 1:
            continue  # zero row stays zero
        word = words.get(a)
        if word is None:
            raise ValidationError(f"element {m.elements[a]} not generated")
        row = list(range(n))
        for g in word:
            row = [gen_map[g][p] for p in row]
        action[a] = row
    for p in range(n):
        action[ZERO][p] = 0
    x = ASet(m, carrier, action=action, name=name)
    return x


def free_aset(m, labels, name=None):
    """Wedge of one copy of the base per label: the free A-set."""
    if isinstance(m, MonogenicMonoid):
        raise BoundExceeded(
            "free A-sets over the monogenic base have infinite carriers; "
            "use the symbolic free complexes in monoidkit.homological"
        )
    labels = list(labels)
    if len(set(labels)) != len(labels):
        raise ValidationError("free generator labels must be distinct")
    carrier = ["0"]
    index = {}
    for s in labels:
        for a in m.nonzero():
            index[(a, s)] = len(carrier)
            carrier.append(f"{m.elements[a]}[{s}]")
    action = [[0] * len(carrier) for _ in m.indices()]
    for b in m.indices():
        for (a, s), i in index.items():
            ba = m.table[b][a]
            action[b][i] = 0 if ba == ZERO else index[(ba, s)]
    x = ASet(m, carrier, action=action, name=name or f"{m.name}[{len(labels)}]")
    x.free_generators = {s: index[(m.one, s)] for s in labels}
    x.free_index = index
    return x


# ---------------------------------------------------------------------------
# morphisms


class ASetMorphism:
    def __init__(self, source, target, mapping):
        self.source = source
        self.target = target
        self.mapping = list(mapping)

    def __call__(self, x):
        return self.mapping[x]

    def __eq__(self, other):
        return (
            isinstance(other, ASetMorphism)
            and self.mapping == other.mapping
            and self.source is other.source
            and self.target is other.target
        )

    def __hash__(self):
        return hash(tuple(self.mapping))

    def validate(self):
        report = ValidationReport()
        if self.mapping[0] != 0:
            report.add("NotBased", ())
        x, y = self.source, self.target
        if isinstance(x.base, MonogenicMonoid):
            for p in range(len(x.carrier)):
                if self.mapping[x.theta[p]] != y.theta[self.mapping[p]]:
                    report.add("NotEquivariant", (x.carrier[p],))
            return report
        for a in x.base.indices():
            for p in range(len(x.carrier)):
                if self.mapping[x.act(a, p)] != y.act(a, self.mapping[p]):
                    report.add("NotEquivariant", (x.base.elements[a], x.carrier[p]))
                    if len(report.violations) > 8:
                        return report
        return report

    def is_surjective(self):
        return set(self.mapping) == set(range(len(self.target.carrier)))

    def is_injective(self):
        return len(set(self.mapping)) == len(self.mapping)

    def kernel_indices(self):
        return [p for p, v in enumerate(self.mapping) if v == 0]

    def is_admissible(self):
        """Injective away from the kernel."""
        seen = {}
        for p, v in enumerate(self.mapping):
            if v == 0:
                continue
            if v in seen:
                return False
            seen[v] = p
        return True

    def compose(self, other):
        """self after other."""
        return ASetMorphism(
            other.source, self.target, [self.mapping[v] for v in other.mapping]
        )


def identity_morphism(x):
    return ASetMorphism(x, x, list(range(len(x.carrier))))


def zero_morphism(x, y):
    return ASetMorphism(x, y, [0] * len(x.carrier))


def sub_aset(x, subset, name=None):
    """A-subset as its own A-set; raises NotASubset when not closed."""
    subset = sorted(set(subset) | {0})
    pos = {p: i for i, p in enumerate(subset)}
    for t in x.gen_tables():
        for p in subset:
            if t[p] not in pos:
                raise NotASubset(f"{x.carrier[p]} leaves the subset")
    carrier = [x.carrier[p] for p in subset]
    if isinstance(x.base, MonogenicMonoid):
        theta = [pos[x.theta[p]] for p in subset]
        return ASet(x.base, carrier, theta=theta, name=name or f"{x.name}|sub")
    action = [[pos[x.action[a][p]] for p in subset] for a in x.base.indices()]
    return ASet(x.base, carrier, action=action, name=name or f"{x.name}|sub")


def inclusion_morphism(x, subset, ambient):
    subset = sorted(set(subset) | {0})
    return ASetMorphism(x, ambient, subset)


# ---------------------------------------------------------------------------
# congruences and quotients


@dataclass
class ASetCongruence:
    base: ASet
    reps: list[int]

    def classes(self):
        buckets = {}
        for i, r in enumerate(self.reps):
            buckets.setdefault(r, []).append(i)
        return [sorted(v) for _, v in sorted(buckets.items())]


def congruence_closure(x, pairs):
    """Smallest congruence containing the pairs (zig-zag closure)."""
    reps = _kernels.closure(len(x.carrier), x.gen_tables(), list(pairs))
    return ASetCongruence(x, reps)


def congruence_closure_naive(x, pairs):
    """Oracle twin: closes under every monoid element, not just generators."""
    if isinstance(x.base, MonogenicMonoid):
        # iterate powers of the generator map up to carrier size
        tables = []
        t = list(range(len(x.carrier)))
        for _ in range(len(x.carrier) + 1):
            t = [x.theta[p] for p in t]
            tables.append(list(t))
        reps = _kernels.closure(len(x.carrier), tables, list(pairs))
        return ASetCongruence(x, reps)
    tables = [x.action[a] for a in x.base.indices()]
    reps = _kernels.closure(len(x.carrier), tables, list(pairs))
    return ASetCongruence(x, reps)


def quotient_aset(x, cong_or_pairs, name=None):
    """Quotient by a congruence; returns (Q, projection)."""
    if isinstance(cong_or_pairs, ASetCongruence):
        cong = cong_or_pairs
    else:
        cong = congruence_closure(x, cong_or_pairs)
    reps = cong.reps
    zero_rep = reps[0]
    ordered = [zero_rep] + sorted(set(reps) - {zero_rep})
    pos = {r: i for i, r in enumerate(ordered)}
    carrier = ["0"] + [x.carrier[r] for r in ordered[1:]]
    if isinstance(x.base, MonogenicMonoid):
        theta = [pos[reps[x.theta[r]]] for r in ordered]
        q = ASet(x.base, carrier, theta=theta, name=name or f"{x.name}/~")
    else:
        action = [
            [pos[reps[x.action[a][r]]] for r in ordered] for a in x.base.indices()
        ]
        q = ASet(x.base, carrier, action=action, name=name or f"{x.name}/~")
    proj = ASetMorphism(x, q, [pos[reps[p]] for p in range(len(x.carrier))])
    return q, proj


def quotient_by_subset(x, subset, name=None):
    """Collapse an A-subset to the basepoint, fixing the rest."""
    subset = sorted(set(subset) | {0})
    for t in x.gen_tables():
        for p in subset:
            if t[p] not in subset:
                raise NotASubset(f"{x.carrier[p]} leaves the subset")
    return quotient_aset(x, [(p, 0) for p in subset], name=name)


# ---------------------------------------------------------------------------
# kernels, images, cokernels


def kernel_aset(f):
    return sub_aset(f.source, f.kernel_indices(), name=f"ker({f.source.name})")


def image_aset(f):
    return sub_aset(f.target, sorted(set(f.mapping)), name=f"im({f.source.name})")


def cokernel_aset(f):
    q, proj = quotient_by_subset(f.target, sorted(set(f.mapping)))
    return q, proj


# ---------------------------------------------------------------------------
# wedges, smashes, tensors


def wedge(parts, name=None):
    """Wedge sum; carrier 0 then the nonzero parts of each summand."""
    base = parts[0].base
    carrier = ["0"]
    offsets = []
    for k, p in enumerate(parts):
        offsets.append(len(carrier))
        for i in p.nonzero():
            carrier.append(f"{p.carrier[i]}@{k}")

    def glob(k, i):
        return 0 if i == 0 else offsets[k] + i - 1

    if isinstance(base, MonogenicMonoid):
        theta = [0] * len(carrier)
        for k, p in enumerate(parts):
            for i in p.nonzero():
                theta[glob(k, i)] = glob(k, p.theta[i])
        w = ASet(base, carrier, theta=theta, name=name or "wedge")
    else:
        action = [[0] * len(carrier) for _ in base.indices()]
        for a in base.indices():
            for k, p in enumerate(parts):
                for i in p.nonzero():
                    action[a][glob(k, i)] = glob(k, p.action[a][i])
        w = ASet(base, carrier, action=action, name=name or "wedge")
    w.wedge_offsets = offsets
    w.wedge_parts = parts
    return w


def wedge_inclusions(w):
    out = []
    for k, p in enumerate(w.wedge_parts):
        mapping = [0] + [w.wedge_offsets[k] + i - 1 for i in p.nonzero()]
        out.append(ASetMorphism(p, w, mapping))
    return out


def smash(x, y, name=None):
    """Nonzero pairs plus basepoint, coordinatewise action."""
    base = x.base
    pairs = [(i, j) for i in x.nonzero() for j in y.nonzero()]
    pos = {p: k + 1 for k, p in enumerate(pairs)}

    def node(i, j):
        return 0 if i == 0 or j == 0 else pos[(i, j)]

    carrier = ["0"] + [f"({x.carrier[i]},{y.carrier[j]})" for i, j in pairs]
    if isinstance(base, MonogenicMonoid):
        theta = [0] + [node(x.theta[i], y.theta[j]) for i, j in pairs]
        return ASet(base, carrier, theta=theta, name=name or "smash")
    action = [[0] * len(carrier) for _ in base.indices()]
    for a in base.indices():
        for k, (i, j) in enumerate(pairs):
            action[a][k + 1] = node(x.action[a][i], y.action[a][j])
    return ASet(base, carrier, action=action, name=name or "smash")


def tensor(x, y, name=None):
    """Balanced product: smash carrier modulo generator interchange moves.

    The congruence is generated by (g.u, v) ~ (u, g.v) over the monoid
    generators g; the action on classes moves the first coordinate.
    """
    base = x.base
    pairs = [(i, j) for i in x.nonzero() for j in y.nonzero()]
    pos = {p: k + 1 for k, p in enumerate(pairs)}

    def node(i, j):
        return 0 if i == 0 or j == 0 else pos[(i, j)]

    n = len(pairs) + 1
    moves = []
    if isinstance(base, MonogenicMonoid):
        gen_maps_x = [x.theta]
        gen_maps_y = [y.theta]
    else:
        gen_maps_x = [x.action[g] for g in base.generators]
        gen_maps_y = [y.action[g] for g in base.generators]
    for (i, j) in pairs:
        for gx, gy in zip(gen_maps_x, gen_maps_y):
            moves.append((node(gx[i], j), node(i, gy[j])))
    reps = _kernels.closure(n, [], moves)

    zero_rep = reps[0]
    ordered = [zero_rep] + sorted(set(reps) - {zero_rep})
    pos_cls = {r: k for k, r in enumerate(ordered)}

    def cls(i, j):
        return pos_cls[reps[node(i, j)]]

    rep_pair = {}
    for k, (i, j) in enumerate(pairs):
        r = reps[k + 1]
        if r != zero_rep and r not in rep_pair:
            rep_pair[r] = (i, j)
    carrier = ["0"] + [
        f"[{x.carrier[rep_pair[r][0]]},{y.carrier[rep_pair[r][1]]}]"
        for r in ordered[1:]
    ]
    if isinstance(base, MonogenicMonoid):
        theta = [0] * len(ordered)
        for k, r in enumerate(ordered[1:], start=1):
            i, j = rep_pair[r]
            theta[k] = cls(x.theta[i], j)
        t = ASet(base, carrier, theta=theta, name=name or "tensor")
    else:
        action = [[0] * len(ordered) for _ in base.indices()]
        for a in base.indices():
            for k, r in enumerate(ordered[1:], start=1):
                i, j = rep_pair[r]
                action[a][k] = cls(x.action[a][i], j)
        t = ASet(base, carrier, action=action, name=name or "tensor")
    t.pair_class = {(i, j): cls(i, j) for (i, j) in pairs}
    report = validate_aset(t)
    if not report.ok:
        raise ValidationError(f"tensor action ill-defined: {report}")
    return t


# ---------------------------------------------------------------------------
# hom enumeration


def aset_generators(x):
    """Canonical minimal generating set of carrier indices."""
    gens = []
    covered = {0}
    for p in x.nonzero():
        if p not in covered:
            gens.append(p)
            for t in _element_tables(x):
                covered.add(t[p])
            covered |= _orbit(x, p)
    return gens


def _orbit(x, p):
    out = {p}
    frontier = [p]
    tables = x.gen_tables()
    while frontier:
        q = frontier.pop()
        for t in tables:
            r = t[q]
            if r not in out:
                out.add(r)
                frontier.append(r)
    return out


def _element_tables(x):
    if isinstance(x.base, MonogenicMonoid):
        tables = []
        t = list(range(len(x.carrier)))
        for _ in range(len(x.carrier)):
            t = [x.theta[p] for p in t]
            tables.append(t)
        return tables
    return [x.action[a] for a in x.base.indices()]


def hom_enumerate(x, y, deadline=None):
    """All based equivariant maps, canonically sorted."""
    gens = aset_generators(x)
    x_tables = _element_tables(x)
    y_tables = _element_tables(y)
    n = len(x.carrier)
    results = []

    def propagate(mapping, gen, img):
        """Assign f(gen) = img and close under the action; None on clash."""
        mapping = list(mapping)
        if mapping[gen] not in (None, img):
            return None
        mapping[gen] = img
        for t_x, t_y in zip(x_tables, y_tables):
            src = t_x[gen]
            dst = t_y[img]
            if mapping[src] is None:
                mapping[src] = dst
            elif mapping[src] != dst:
                return None
        return mapping

    def close(mapping):
        # iterate until stable: equivariance for every element action
        changed = True
        while changed:
            changed = False
            for t_x, t_y in zip(x_tables, y_tables):
                for p in range(n):
                    if mapping[p] is None:
                        continue
                    src = t_x[p]
                    dst = t_y[mapping[p]]
                    if mapping[src] is None:
                        mapping[src] = dst
                        changed = True
                    elif mapping[src] != dst:
                        return None
        return mapping

    def rec(k, mapping):
        if deadline is not None and time.monotonic() > deadline:
            raise BoundExceeded("hom enumeration deadline exceeded")
        if k == len(gens):
            if all(v is not None for v in mapping):
                results.append(list(mapping))
            return
        g = gens[k]
        if mapping[g] is not None:
            rec(k + 1, mapping)
            return
        for img in range(len(y.carrier)):
            nxt = propagate(mapping, g, img)
            if nxt is None:
                continue
            nxt = close(nxt)
            if nxt is None:
                continue
            rec(k + 1, nxt)

    start = [None] * n
    start[0] = 0
    start = close(start)
    if start is not None:
        rec(0, start)
    uniq = sorted(set(tuple(r) for r in results))
    return [ASetMorphism(x, y, list(r)) for r in uniq]


def hom_aset(x, y):
    """Hom(X, Y) with its pointwise action (af)(p) = f(a p)."""
    homs = hom_enumerate(x, y)
    idx = {tuple(h.mapping): i for i, h in enumerate(homs)}
    zero_i = idx[tuple([0] * len(x.carrier))]
    order = [zero_i] + [i for i in range(len(homs)) if i != zero_i]
    pos = {old: new for new, old in enumerate(order)}
    carrier = [f"f{pos[i]}" for i in order]
    carrier[0] = "0"

    def act_on_hom(a, h):
        return tuple(h.mapping[x.act(a, p)] for p in range(len(x.carrier)))

    base = x.base
    if isinstance(base, MonogenicMonoid):
        theta = [pos[idx[act_on_hom(1, homs[order[i]])]] for i in range(len(homs))]
        h = ASet(base, carrier, theta=theta, name=f"Hom({x.name},{y.name})")
    else:
        action = [
            [pos[idx[act_on_hom(a, homs[order[i]])]] for i in range(len(homs))]
            for a in base.indices()
        ]
        h = ASet(base, carrier, action=action, name=f"Hom({x.name},{y.name})")
    h.morphisms = [homs[i] for i in order]
    return h


# ---------------------------------------------------------------------------
# isomorphism search and canonical forms


def _invariants(x):
    tables = x.gen_tables()
    n = len(x.carrier)
    colors = [0] * n
    colors[0] = -1
    for _ in range(n):
        sig = []
        for p in range(n):
            indeg = tuple(
                sum(1 for q in range(n) if t[q] == p) for t in tables
            )
            sig.append((colors[p], tuple(colors[t[p]] for t in tables), indeg))
        ranking = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [ranking[s] for s in sig]
        if new == colors:
            break
        colors = new
    return colors


def find_isomorphism(x, y):
    """Basepoint-preserving equivariant bijection, or None."""
    if len(x.carrier) != len(y.carrier):
        return None
    if isinstance(x.base, MonogenicMonoid) != isinstance(y.base, MonogenicMonoid):
        return None
    cx, cy = _invariants(x), _invariants(y)
    if sorted(cx) != sorted(cy):
        return None
    xt, yt = x.gen_tables(), y.gen_tables()
    if len(xt) != len(yt):
        return None
    n = len(x.carrier)
    mapping = [None] * n
    used = [False] * n
    mapping[0] = 0
    used[0] = True

    order = sorted(range(1, n), key=lambda p: (cx[p], p))

    def ok(p):
        for t_x, t_y in zip(xt, yt):
            q = t_x[p]
            if mapping[q] is not None and mapping[p] is not None:
                if t_y[mapping[p]] != mapping[q]:
                    return False
            for r in range(n):
                if t_x[r] == p and mapping[r] is not None:
                    if t_y[mapping[r]] != mapping[p]:
                        return False
        return True

    def rec(k):
        if k == len(order):
            return True
        p = order[k]
        for q in range(1, n):
            if used[q] or cy[q] != cx[p]:
                continue
            mapping[p] = q
            used[q] = True
            if ok(p) and rec(k + 1):
                return True
            mapping[p] = None
            used[q] = False
        return False

    if rec(0):
        return list(mapping)
    return None


def is_isomorphic(x, y):
    return find_isomorphism(x, y) is not None


def canonical_theta_key(theta):
    """Complete isomorphism invariant of a based self-map.

    Encodes the functional graph: trees hanging on cycles get sorted
    nested-tuple encodings, cycles are rotated to their minimal form, and
    components are sorted; the basepoint's component is distinguished.
    """
    n = len(theta)
    children = {p: [] for p in range(n)}
    on_cycle = [False] * n
    # find cycle nodes: iterate each node n steps
    for p in range(n):
        q = p
        for _ in range(n):
            q = theta[q]
        on_cycle[q] = True
    for p in range(n):
        if not on_cycle[p]:
            children[theta[p]].append(p)

    def tree_code(p):
        return tuple(sorted(tree_code(c) for c in children[p]))

    comps = []
    seen = set()
    base_code = None
    for p in range(n):
        if not on_cycle[p] or p in seen:
            continue
        cycle = [p]
        q = theta[p]
        while q != p:
            cycle.append(q)
            q = theta[q]
        seen.update(cycle)
        codes = [tree_code(c) for c in cycle]
        if 0 in cycle:
            # rotate so the basepoint leads; its cycle is a fixed point
            i = cycle.index(0)
            base_code = tuple(codes[i:] + codes[:i])
        else:
            rotations = [
                tuple(codes[i:] + codes[:i]) for i in range(len(codes))
            ]
            comps.append(min(rotations))
    return (n, base_code, tuple(sorted(comps)))


def canonical_key(x):
    """Canonical relabeling key for dedup up to isomorphism."""
    tables = x.gen_tables()
    n = len(x.carrier)
    colors = _invariants(x)
    groups = {}
    for p in range(1, n):
        groups.setdefault(colors[p], []).append(p)
    buckets = [groups[c] for c in sorted(groups)]

    best = None
    for perm_parts in itertools.product(
        *[itertools.permutations(b) for b in buckets]
    ):
        perm = [0] * n
        new_index = 1
        assign = {}
        for part in perm_parts:
            for p in part:
                assign[p] = new_index
                new_index += 1
        assign[0] = 0
        enc = tuple(
            tuple(assign[t[p]] for p in sorted(range(n), key=lambda q: assign[q]))
            for t in tables
        )
        if best is None or enc < best:
            best = enc
    return (n, best)


# ---------------------------------------------------------------------------
# localization


def localize_aset(x, s_gens, name=None):
    """Fractions of the carrier at the multiplicative set; the result is an
    A-set over the localized base, returned as (X_S, base hom, unit map)."""
    m = x.base
    if isinstance(m, MonogenicMonoid):
        raise UnsupportedBackend("localize finite-table based A-sets")
    loc, hom = localize_monoid(m, s_gens)
    from .monoids import mult_closure

    s_gens_idx = [g if isinstance(g, int) else m.index_of(g) for g in s_gens]
    if ZERO in s_gens_idx and len(m.elements) > 1:
        raise ZeroInS("0 in the localization set")
    s = mult_closure(m, s_gens_idx)
    if ZERO in s:
        z = ASet(loc, ["0"], action=[[0]], name=name or f"{x.name}_S")
        return z, hom, ASetMorphism(x, z, [0] * len(x.carrier))

    nodes = [(p, t) for p in range(len(x.carrier)) for t in s]
    pos = {nd: i for i, nd in enumerate(nodes)}
    pairs = []
    for i, (p, t) in enumerate(nodes):
        for j in range(i + 1, len(nodes)):
            q, u = nodes[j]
            if any(
                x.act(v, x.act(u, p)) == x.act(v, x.act(t, q)) for v in s
            ):
                pairs.append((i, j))
    reps = _kernels.closure(len(nodes), [], pairs)

    zero_rep = reps[pos[(0, s[0])]]
    members = {}
    for i, nd in enumerate(nodes):
        members.setdefault(reps[i], []).append(nd)
    ordered = [zero_rep] + sorted(
        set(reps) - {zero_rep}, key=lambda r: min(members[r])
    )
    cls_pos = {r: i for i, r in enumerate(ordered)}

    def nm(r):
        p, t = min(members[r])
        if t == m.one:
            return x.carrier[p]
        return f"{x.carrier[p]}/{m.elements[t]}"

    carrier = ["0"] + [nm(r) for r in ordered[1:]]
    # action of the localized base: loc elements are fraction classes; act
    # via a representative (a, s): (a/s).(p/t) = (a p)/(s t)
    loc_reps = _loc_representatives(m, loc, hom, s)
    action = [[0] * len(ordered) for _ in loc.indices()]
    for li in loc.indices():
        a, sv = loc_reps[li]
        for k, r in enumerate(ordered):
            p, t = members[r][0]
            target = (x.act(a, p), m.table[sv][t])
            action[li][k] = cls_pos[reps[pos[target]]]
    xs = ASet(loc, carrier, action=action, name=name or f"{x.name}_S")
    unit = ASetMorphism(
        x, xs, [cls_pos[reps[pos[(p, m.one)]]] for p in range(len(x.carrier))]
    )
    report = validate_aset(xs)
    if not report.ok:
        raise ValidationError(f"localized action ill-defined: {report}")
    return xs, hom, unit


def _loc_representatives(m, loc, hom, s):
    """For each element of the localized monoid pick a fraction (a, s)."""
    out = {}
    for a in m.indices():
        for t in s:
            # a/t = (a/1) * (1/t); find the index by multiplying hom images
            img_a = hom(a)
            inv_t = _inverse_in(loc, hom(t))
            li = loc.table[img_a][inv_t]
            out.setdefault(li, (a, t))
    missing = [li for li in loc.indices() if li not in out]
    assert not missing, f"unreached localized elements {missing}"
    return out


def _inverse_in(m, u):
    for v in m.indices():
        if m.table[u][v] == m.one:
            return v
    raise ValidationError(f"{m.elements[u]} is not a unit")


def ann_aset(x):
    """Annihilator ideal of the whole A-set inside the base."""
    m = x.base
    return sorted(
        a
        for a in m.indices()
        if all(x.act(a, p) == 0 for p in range(len(x.carrier)))
    )


def ideal_times_aset(x, ideal_elements):
    """The A-subset I.X."""
    out = {0}
    for a in ideal_elements:
        for p in range(len(x.carrier)):
            out.add(x.act(a, p))
    return sorted(out)


# ---------------------------------------------------------------------------
# enumerations


def _generator_map_candidates(m, g, c):
    """Based self-maps on c points compatible with the generator's power
    relations inside the base monoid."""
    n = len(m.elements)
    powers = [m.one]
    x = m.one
    for _ in range(n + 1):
        x = m.table[x][g]
        powers.append(x)
    constraints = []  # (i, j) with g^i == g^j, plus zero powers
    zero_powers = [i for i, p in enumerate(powers) if p == ZERO and i > 0]
    seen = {}
    for i, p in enumerate(powers):
        if i == 0:
            continue
        if p in seen:
            constraints.append((seen[p], i))
        else:
            seen[p] = i
    out = []
    for tail in itertools.product(range(c), repeat=c - 1):
        theta = (0,) + tail

        def power_map(k):
            arr = list(range(c))
            for _ in range(k):
                arr = [theta[v] for v in arr]
            return arr

        ok = True
        for i, j in constraints:
            if power_map(i) != power_map(j):
                ok = False
                break
        if ok and zero_powers:
            k = zero_powers[0]
            if any(v != 0 for v in power_map(k)):
                ok = False
        if ok:
            out.append(list(theta))
    return out


def enumerate_asets(m, carrier_size, up_to_iso=True):
    """Every A-set structure on a carrier of the given size (finite base).

    Enumerates compatible per-generator self-maps, derives the full grid
    along generator words, and keeps the grids that satisfy all axioms.
    """
    c = carrier_size
    carrier = ["0"] + [f"p{i}" for i in range(1, c)]
    if len(m.elements) == 1:
        # over the zero monoid only the one-point carrier is consistent
        return [ASet(m, ["0"], action=[[0]], name="S1")] if c == 1 else []
    if not m.generators:
        return [ASet(m, carrier, action=[[0] * c, list(range(c))], name=f"S{c}")]
    per_gen = [_generator_map_candidates(m, g, c) for g in m.generators]
    out = []
    seen = set()
    for combo in itertools.product(*per_gen):
        # commuting actions are necessary in a commutative base
        ok = True
        for t1, t2 in itertools.combinations(combo, 2):
            if any(t1[t2[p]] != t2[t1[p]] for p in range(c)):
                ok = False
                break
        if not ok:
            continue
        try:
            x = build_action_from_gen_maps(m, list(carrier), list(combo))
        except ValidationError:
            continue
        if not validate_aset(x).ok:
            continue
        if up_to_iso:
            key = canonical_key(x)
            if key in seen:
                continue
            seen.add(key)
        out.append(x)
    return out


def enumerate_asubsets(x, bound=DEFAULT_ENUM_BOUND):
    if len(x.carrier) - 1 > bound:
        raise BoundExceeded(f"carrier {len(x.carrier)} exceeds bound {bound}")
    tables = x.gen_tables()
    out = []
    nz = list(x.nonzero())
    for r in range(len(nz) + 1):
        for combo in itertools.combinations(nz, r):
            sub = set(combo) | {0}
            if all(t[p] in sub for p in sub for t in tables):
                out.append(sorted(sub))
    out.sort(key=lambda s: (len(s), s))
    return out


def enumerate_congruences(x, bound=DEFAULT_ENUM_BOUND):
    n = len(x.carrier)
    if n > bound:
        raise BoundExceeded(f"carrier {n} exceeds bound {bound}")
    tables = x.gen_tables()
    out = []
    # restricted-growth enumeration of set partitions of the carrier
    code = [0] * n

    def rec(i, maxc):
        if i == n:
            reps = {}
            arr = [0] * n
            for p in range(n):
                arr[p] = reps.setdefault(code[p], p)
            if _is_congruence(tables, arr):
                out.append(list(arr))
            return
        for c in range(maxc + 2):
            code[i] = c
            rec(i + 1, max(maxc, c))

    rec(1, 0) if n > 0 else None
    out.sort()
    return [ASetCongruence(x, arr) for arr in out]


def _is_congruence(tables, arr):
    n = len(arr)
    for p in range(n):
        for q in range(p + 1, n):
            if arr[p] == arr[q]:
                for t in tables:
                    if arr[t[p]] != arr[t[q]]:
                        return False
    return True


# ---------------------------------------------------------------------------
# split checks


@dataclass
class SplitReport:
    splits: bool
    has_section: bool
    wedge_isomorphic: bool
    has_retraction: bool
    has_admissible_retraction: bool


def validate_aes(g, f):
    """0 -> X -g-> Y -f-> Z -> 0 admissible exact; raises NotAES."""
    if g.target is not f.source:
        raise NotAES("maps do not compose")
    if not g.is_injective():
        raise NotAES("left map is not injective")
    if not f.is_surjective():
        raise NotAES("right map is not surjective")
    if not f.is_admissible():
        raise NotAES("right map is not admissible")
    if sorted(set(g.mapping)) != sorted(f.kernel_indices()):
        raise NotAES("image of the left map is not the kernel of the right")


def split_check(g, f):
    """Does 0 -> X -> Y -> Z -> 0 split?  Reports all four witnesses."""
    validate_aes(g, f)
    x, y, z = g.source, g.target, f.target
    sections = [
        s for s in hom_enumerate(z, y) if f.compose(s).mapping == list(range(len(z.carrier)))
    ]
    retractions = [
        r for r in hom_enumerate(y, x) if r.compose(g).mapping == list(range(len(x.carrier)))
    ]
    wedge_iso = is_isomorphic(y, wedge([x, z]))
    has_section = bool(sections)
    has_adm_retr = any(r.is_admissible() for r in retractions)
    assert has_section == wedge_iso == has_adm_retr, (
        "splitting criteria disagree",
        has_section,
        wedge_iso,
        has_adm_retr,
    )
    return SplitReport(
        splits=has_section,
        has_section=has_section,
        wedge_isomorphic=wedge_iso,
        has_retraction=bool(retractions),
        has_admissible_retraction=has_adm_retr,
    )
