"""Commutative pointed monoids in three backends.

* ``FiniteMonoid`` -- full multiplication table, index 0 is the zero
  element and index 1 the identity (they coincide in the one-element
  zero monoid).  All exhaustive algorithms live here.
* ``MonogenicMonoid`` -- the free pointed monoid on one generator
  (elements are exponents; the zero element is ``None``).  Infinite, used
  where an injective multiplication is required.
* ``AffineMonoid`` -- finitely generated submonoid of a lattice, with an
  optional finite unit group and optional monomial ideal (the partially
  cancellative representation).  Geometry operations live in
  :mod:`monoidkit.geometry`.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field

from . import _kernels
from .errors import (
    BadWord,
    BoundExceeded,
    NotACongruence,
    NotAnIdeal,
    UnsupportedBackend,
    ValidationError,
    ZeroInS,
    ZeroNotPrime,
)

ZERO = 0
ONE = 1


# ---------------------------------------------------------------------------
# finite tables


class FiniteMonoid:
    """Commutative pointed monoid given by a full multiplication table."""

    backend = "finite-table"

    def __init__(self, name, elements, table, generators=None):
        self.name = name
        self.elements = list(elements)
        self.table = [list(row) for row in table]
        if generators is None:
            generators = _minimal_generators(self.table, len(self.elements))
        self.generators = list(generators)
        self._index = {e: i for i, e in enumerate(self.elements)}

    # -- basic arithmetic ---------------------------------------------------

    def __len__(self):
        return len(self.elements)

    def mul(self, i, j):
        return self.table[i][j]

    def power(self, i, k):
        acc = ONE if len(self.elements) > 1 else ZERO
        for _ in range(k):
            acc = self.table[acc][i]
        return acc

    def index_of(self, name):
        return self._index[name]

    def element_name(self, i):
        return self.elements[i]

    def indices(self):
        return range(len(self.elements))

    def nonzero(self):
        return range(1, len(self.elements)) if len(self.elements) > 1 else range(0)

    @property
    def zero(self):
        return ZERO

    @property
    def one(self):
        return ONE if len(self.elements) > 1 else ZERO

    def __repr__(self):
        return f"FiniteMonoid({self.name!r}, {len(self.elements)} elements)"

    def gen_action_tables(self):
        """Left-multiplication tables of the generators (used by closures)."""
        return [self.table[g] for g in self.generators]

    def submonoid_closure(self, seed):
        """Indices of the submonoid generated by ``seed`` (with 1)."""
        seen = {self.one}
        frontier = [self.one]
        seed = list(seed)
        while frontier:
            x = frontier.pop()
            for s in seed:
                y = self.table[x][s]
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return seen

    def words_from_generators(self):
        """A word (tuple of generator indices) for every reachable element."""
        words = {self.one: ()}
        frontier = [self.one]
        while frontier:
            x = frontier.pop(0)
            for g in self.generators:
                y = self.table[x][g]
                if y not in words:
                    words[y] = words[x] + (g,)
                    frontier.append(y)
        return words


def _minimal_generators(table, n):
    # greedy sweep in canonical element order; each unreachable element
    # becomes a generator (zero need not be generated)
    if n <= 1:
        return []
    gens = []
    reachable = {ONE}
    for e in range(2, n):
        if e not in reachable:
            gens.append(e)
            reachable = _closure_under(table, gens)
    return gens


def _closure_under(table, gens):
    seen = {ONE}
    frontier = [ONE]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = table[x][g]
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return seen


# ---------------------------------------------------------------------------
# monogenic backend


class MonogenicMonoid:
    """Free pointed monoid on one generator; elements are exponents.

    ``None`` is the zero element and the integer ``k`` stands for the k-th
    power of the generator (0 = identity).
    """

    backend = "monogenic"

    def __init__(self, name="N", generator_name="t"):
        self.name = name
        self.generator_name = generator_name

    def mul(self, a, b):
        if a is None or b is None:
            return None
        return a + b

    def element_name(self, a):
        if a is None:
            return "0"
        if a == 0:
            return "1"
        if a == 1:
            return self.generator_name
        return f"{self.generator_name}^{a}"

    def units(self):
        return [0]

    def idempotents(self):
        return [None, 0]

    def nilpotents(self):
        return [None]

    def __repr__(self):
        return f"MonogenicMonoid({self.name!r})"


# ---------------------------------------------------------------------------
# affine backend


@dataclass
class AffineMonoid:
    """Finitely generated submonoid of Z^rank (optionally times a finite
    unit group), possibly modulo a monomial ideal."""

    name: str
    rank: int
    generators: list[tuple[int, ...]]
    unit_orders: list[int] = field(default_factory=list)
    unit_tags: list[tuple[int, ...]] | None = None
    monomial_ideal: list[tuple[int, ...]] = field(default_factory=list)
    degree_bound: int = 8

    backend = "affine"

    def __post_init__(self):
        self.generators = [tuple(int(x) for x in g) for g in self.generators]
        for g in self.generators:
            if len(g) != self.rank:
                raise ValidationError(f"generator {g} does not match rank {self.rank}")
        for o in self.unit_orders:
            if o < 2:
                raise ValidationError("unit group orders must be >= 2")
        if self.unit_tags is not None and len(self.unit_tags) != len(self.generators):
            raise ValidationError("unit_tags must align with generators")
        self.monomial_ideal = [tuple(int(x) for x in v) for v in self.monomial_ideal]

    @property
    def is_pc_quotient(self):
        return bool(self.monomial_ideal)

    def bounded_elements(self, bound=None):
        """All N-combinations of the generators with coefficient sum <= bound."""
        bound = bound or self.degree_bound
        seen = {tuple([0] * self.rank)}
        frontier = [(tuple([0] * self.rank), 0)]
        while frontier:
            v, d = frontier.pop()
            if d >= bound:
                continue
            for g in self.generators:
                w = tuple(a + b for a, b in zip(v, g))
                if w not in seen:
                    seen.add(w)
                    frontier.append((w, d + 1))
        return sorted(seen)

    def contains(self, vec, bound=None):
        """Bounded membership: is vec an N-combination of the generators?"""
        bound = bound or self.degree_bound
        vec = tuple(int(x) for x in vec)
        target = vec

        gens = self.generators

        def search(v, depth, start):
            if all(x == 0 for x in v):
                return True
            if depth >= bound:
                return False
            for idx in range(start, len(gens)):
                g = gens[idx]
                w = tuple(a - b for a, b in zip(v, g))
                if search(w, depth + 1, idx):
                    return True
            return False

        return search(target, 0, 0)

    def __repr__(self):
        return f"AffineMonoid({self.name!r}, rank={self.rank}, gens={self.generators})"


# ---------------------------------------------------------------------------
# validation


@dataclass
class Violation:
    kind: str
    witness: tuple

    def __str__(self):
        return f"{self.kind}{self.witness}"


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def add(self, kind, witness):
        self.violations.append(Violation(kind, tuple(witness)))

    def __str__(self):
        if self.ok:
            return "valid"
        return "; ".join(str(v) for v in self.violations)


def validate(m) -> ValidationReport:
    """Check the pointed-monoid axioms exhaustively (finite tables)."""
    report = ValidationReport()
    if isinstance(m, MonogenicMonoid):
        return report
    if isinstance(m, AffineMonoid):
        for o in m.unit_orders:
            if o < 2:
                report.add("UnitOrder", (o,))
        return report
    n = len(m.elements)
    if len(m.table) != n or any(len(row) != n for row in m.table):
        report.add("TableShape", (n,))
        return report
    for i in range(n):
        for j in range(n):
            v = m.table[i][j]
            if not (0 <= v < n):
                report.add("TableRange", (m.elements[i], m.elements[j]))
                return report
    one = m.one
    for a in range(n):
        if m.table[ZERO][a] != ZERO or m.table[a][ZERO] != ZERO:
            report.add("Absorbing", (m.elements[a],))
        if m.table[one][a] != a or m.table[a][one] != a:
            report.add("Identity", (m.elements[a],))
    for a in range(n):
        for b in range(a, n):
            if m.table[a][b] != m.table[b][a]:
                report.add("Commutativity", (m.elements[a], m.elements[b]))
    for a in range(n):
        for b in range(n):
            ab = m.table[a][b]
            for c in range(n):
                if m.table[ab][c] != m.table[a][m.table[b][c]]:
                    report.add(
                        "Associativity",
                        (m.elements[a], m.elements[b], m.elements[c]),
                    )
                    if len(report.violations) > 16:
                        return report
    gen_closure = m.submonoid_closure(m.generators)
    missing = [m.elements[e] for e in range(1, n) if e not in gen_closure]
    if missing and n > 1:
        report.add("NonGenerating", tuple(missing))
    return report


# ---------------------------------------------------------------------------
# presentations


_TOKEN = re.compile(r"([A-Za-z_][A-Za-z_0-9']*)(?:\^(\d+))?$")


def parse_word(word, gen_names):
    """Parse a word into an exponent vector; '1' is empty, '0' is zero."""
    if isinstance(word, (tuple, list)):
        if len(word) != len(gen_names):
            raise BadWord(f"exponent vector {word} does not match generators")
        return tuple(int(x) for x in word)
    w = str(word).strip()
    if w == "0":
        return None
    exps = [0] * len(gen_names)
    if w in ("1", ""):
        return tuple(exps)
    idx = {g: i for i, g in enumerate(gen_names)}
    for factor in w.split("*"):
        factor = factor.strip()
        mt = _TOKEN.match(factor)
        if not mt or mt.group(1) not in idx:
            raise BadWord(f"bad factor {factor!r} in word {word!r}")
        exps[idx[mt.group(1)]] += int(mt.group(2) or 1)
    return tuple(exps)


def render_word(exps, gen_names):
    if exps is None:
        return "0"
    parts = []
    for e, g in zip(exps, gen_names):
        if e == 1:
            parts.append(g)
        elif e > 1:
            parts.append(f"{g}^{e}")
    return "*".join(parts) if parts else "1"


def word_key(w):
    """Canonical word order: degree first, then earlier generators first."""
    return (sum(w), tuple(-e for e in w))


def _words_up_to(gen_count, degree):
    """All exponent vectors with coordinate sum <= degree, canonical order."""
    out = []
    for d in range(degree + 1):
        chunk = []

        def rec_exact(prefix, remaining, slots):
            if slots == 1:
                chunk.append(tuple(prefix + [remaining]))
                return
            for e in range(remaining + 1):
                rec_exact(prefix + [e], remaining - e, slots - 1)

        if gen_count == 0:
            if d == 0:
                chunk.append(())
        else:
            rec_exact([], d, gen_count)
        out.extend(sorted(chunk, key=word_key))
    return out


def build_from_presentation(gen_names, relations, bound=24, name=None):
    """Quotient of the free commutative pointed monoid by generated relations.

    ``relations`` is a list of (lhs, rhs) word pairs; rhs may be "0".
    Raises BoundExceeded when the bounded closure keeps producing new
    classes past ``bound`` of them.
    """
    gen_names = list(gen_names)
    rels = []
    for lhs, rhs in relations:
        u = parse_word(lhs, gen_names)
        v = parse_word(rhs, gen_names)
        if u is None and v is None:
            continue
        rels.append((u, v))
    if name is None:
        rel_str = ",".join(
            f"{render_word(u, gen_names)}={render_word(v, gen_names)}" for u, v in rels
        )
        base = f"F1[{','.join(gen_names)}]" if gen_names else "F1"
        name = f"{base}/({rel_str})" if rel_str else base

    g = len(gen_names)
    max_rel_deg = max((sum(u or ()) for uv in rels for u in uv if u is not None), default=0)
    degree = max(2, 2 * max_rel_deg + 2)
    max_degree = max(32, 4 * (bound + max_rel_deg + 1))

    prev_signature = None
    while True:
        words = _words_up_to(g, degree)
        index = {w: i + 1 for i, w in enumerate(words)}  # 0 reserved for ZERO

        n_nodes = len(words) + 1
        pairs = []
        for u, v in rels:
            deg_u = sum(u) if u is not None else 0
            deg_v = sum(v) if v is not None else 0
            room = degree - max(deg_u, deg_v)
            for m in words:
                if sum(m) > room:
                    continue
                iu = 0 if u is None else index[tuple(a + b for a, b in zip(m, u))]
                iv = 0 if v is None else index[tuple(a + b for a, b in zip(m, v))]
                pairs.append((iu, iv))
        reps = _kernels.closure(n_nodes, [], pairs)

        # minimal representative word per class (ZERO class excluded)
        class_min = {}
        for w in words:
            r = reps[index[w]]
            if r == reps[0]:
                continue
            key = word_key(w)
            if r not in class_min or key < class_min[r][0]:
                class_min[r] = (key, w)
        min_words = sorted(class_min.values())
        # stable part: classes whose representative fits in half the window
        half = degree // 2
        stable = [w for ((d, _), w) in min_words if d <= half]
        overflow = [w for ((d, _), w) in min_words if d > half]

        if len(stable) > bound:
            raise BoundExceeded(
                f"presentation closure exceeded bound {bound} ({len(stable)} classes)"
            )

        signature = tuple(stable)
        closed = True
        lookup = {}
        for w in words:
            r = reps[index[w]]
            if r == reps[0]:
                lookup[w] = None
            else:
                lookup[w] = class_min[r][1]  # minimal representative word
        for w1 in stable:
            for w2 in stable:
                prod = tuple(a + b for a, b in zip(w1, w2))
                if sum(prod) > degree:
                    closed = False
                    break
                rep = lookup[prod]
                if rep is not None and rep not in stable:
                    closed = False
                    break
            if not closed:
                break

        if closed and not overflow and signature == prev_signature:
            return _table_from_classes(name, gen_names, stable, lookup)
        prev_signature = signature
        degree *= 2
        if degree > max_degree:
            if closed and not overflow:
                return _table_from_classes(name, gen_names, stable, lookup)
            raise BoundExceeded(
                f"presentation closure did not stabilize below degree {max_degree}"
            )


def _table_from_classes(name, gen_names, stable, lookup):
    if not stable or stable[0] != tuple([0] * len(gen_names)):
        # identity collapsed to zero: the zero monoid
        return FiniteMonoid(name, ["0"], [[0]], [])
    elements = ["0"] + [render_word(w, gen_names) for w in stable]
    pos = {w: i + 1 for i, w in enumerate(stable)}
    n = len(elements)
    table = [[0] * n for _ in range(n)]
    for i, w1 in enumerate(stable):
        for j, w2 in enumerate(stable):
            prod = lookup[tuple(a + b for a, b in zip(w1, w2))]
            table[i + 1][j + 1] = 0 if prod is None else pos[prod]
    gens = []
    for k, gname in enumerate(gen_names):
        unit = tuple(1 if t == k else 0 for t in range(len(gen_names)))
        target = lookup.get(unit)
        gens.append(0 if target is None else pos[target])
    gens = sorted(set(g for g in gens if g not in (ZERO,)))
    m = FiniteMonoid(name, elements, table, gens or None)
    return m


# ---------------------------------------------------------------------------
# classical element sets


def units(m):
    """Elements with a multiplicative inverse; they form a group."""
    if isinstance(m, MonogenicMonoid):
        return [0]
    _require_table(m, "units")
    out = [a for a in m.indices() if any(m.table[a][b] == m.one for b in m.indices())]
    return sorted(out)


def idempotents(m):
    if isinstance(m, MonogenicMonoid):
        return [None, 0]
    _require_table(m, "idempotents")
    return sorted(a for a in m.indices() if m.table[a][a] == a)


def nilpotents(m):
    if isinstance(m, MonogenicMonoid):
        return [None]
    _require_table(m, "nilpotents")
    out = []
    for a in m.indices():
        x = a
        seen = set()
        while x not in seen:
            seen.add(x)
            if x == ZERO:
                out.append(a)
                break
            x = m.table[x][a]
        else:
            continue
    return sorted(set(out))


def is_reduced(m):
    """No pair a != b with equal squares and cubes (table backends)."""
    _require_table(m, "is_reduced")
    n = len(m.elements)
    for a in range(n):
        for b in range(a + 1, n):
            if m.table[a][a] == m.table[b][b]:
                a3 = m.table[m.table[a][a]][a]
                b3 = m.table[m.table[b][b]][b]
                if a3 == b3:
                    return False, (m.elements[a], m.elements[b])
    return True, None


def is_cancellative(m):
    """ab = ac with a != 0 forces b = c; returns (bool, witness)."""
    if isinstance(m, MonogenicMonoid):
        return True, None
    if isinstance(m, AffineMonoid):
        if m.is_pc_quotient:
            # a quotient by a nonempty monomial ideal kills products
            v = m.monomial_ideal[0]
            return False, (v,)
        return True, None
    for a in m.nonzero():
        seen = {}
        for b in m.indices():
            ab = m.table[a][b]
            if ab in seen and seen[ab] != b:
                return False, (m.elements[a], m.elements[seen[ab]], m.elements[b])
            seen[ab] = b
    return True, None


def _require_table(m, op):
    if not isinstance(m, FiniteMonoid):
        raise UnsupportedBackend(f"{op} requires a finite table, got {m.backend}")


# ---------------------------------------------------------------------------
# congruences, quotients, products


@dataclass
class MonoidCongruence:
    """Equivalence on the element set closed under multiplication."""

    base: FiniteMonoid
    reps: list[int]  # representative index per element

    def classes(self):
        buckets = {}
        for x, r in enumerate(self.reps):
            buckets.setdefault(r, []).append(x)
        return [sorted(v) for _, v in sorted(buckets.items())]

    def validate(self):
        m = self.base
        n = len(m.elements)
        for a in range(n):
            for b in range(a + 1, n):
                if self.reps[a] == self.reps[b]:
                    for c in range(n):
                        if self.reps[m.table[c][a]] != self.reps[m.table[c][b]]:
                            raise NotACongruence(
                                f"classes of {m.elements[a]},{m.elements[b]} break at "
                                f"{m.elements[c]}"
                            )


def congruence_from_pairs(m, pairs):
    """Congruence generated by element-index pairs."""
    tables = [m.table[a] for a in m.nonzero()]
    reps = _kernels.closure(len(m.elements), tables, list(pairs))
    return MonoidCongruence(m, reps)


def congruence_from_classes(m, classes):
    idx_classes = [
        sorted(c if isinstance(c, int) else m.index_of(c) for c in cls)
        for cls in classes
    ]
    pairs = []
    for cls in idx_classes:
        pairs.extend((cls[0], other) for other in cls[1:])
    cong = congruence_from_pairs(m, pairs)
    given = {}
    for cls in idx_classes:
        for x in cls:
            given[x] = cls[0]
    n = len(m.elements)
    for x in range(n):
        given.setdefault(x, x)
    for x in range(n):
        for y in range(x + 1, n):
            if (given[x] == given[y]) != (cong.reps[x] == cong.reps[y]):
                raise NotACongruence("given partition is not multiplication-stable")
    return cong


def quotient(m, by):
    """Quotient by a congruence or by an ideal (elements sent to zero).

    Returns (quotient monoid, projection hom).
    """
    _require_table(m, "quotient")
    if isinstance(by, MonoidCongruence):
        cong = by
        cong.validate()
    else:
        ideal = sorted(set(x if isinstance(x, int) else m.index_of(x) for x in by))
        for x in ideal:
            for a in m.indices():
                if m.table[a][x] not in ideal:
                    raise NotAnIdeal(
                        f"{m.elements[m.table[a][x]]} escapes the ideal"
                    )
        if ZERO not in ideal:
            raise NotAnIdeal("an ideal must contain 0")
        cong = congruence_from_pairs(m, [(x, ZERO) for x in ideal])

    reps = cong.reps
    zero_rep = reps[ZERO]
    one_rep = reps[m.one]
    if zero_rep == one_rep:
        q = FiniteMonoid(f"{m.name}/~", ["0"], [[0]], [])
        mapping = [0] * len(m.elements)
        return q, MonoidHom(m, q, mapping)

    # keep the base monoid's canonical order on representative indices
    ordered = [zero_rep, one_rep] + sorted(set(reps) - {zero_rep, one_rep})
    pos = {r: i for i, r in enumerate(ordered)}
    elements = ["0"] + [m.elements[r] for r in ordered[1:]]
    n = len(ordered)
    table = [[0] * n for _ in range(n)]
    for i, r in enumerate(ordered):
        for j, s in enumerate(ordered):
            table[i][j] = pos[reps[m.table[r][s]]]
    q = FiniteMonoid(f"{m.name}/~", elements, table)
    mapping = [pos[reps[x]] for x in m.indices()]
    return q, MonoidHom(m, q, mapping)


def smash_product(a, b, name=None):
    """Coproduct: (A x B) / (A x 0 u 0 x B)."""
    _require_table(a, "smash_product")
    _require_table(b, "smash_product")
    pairs = [(ZERO, ZERO)] + [
        (x, y) for x in a.nonzero() for y in b.nonzero()
    ]
    pos = {p: i for i, p in enumerate(pairs)}

    def mul(p, q):
        x = a.table[p[0]][q[0]]
        y = b.table[p[1]][q[1]]
        if x == ZERO or y == ZERO:
            return (ZERO, ZERO)
        return (x, y)

    n = len(pairs)
    table = [[pos[mul(p, q)] for q in pairs] for p in pairs]
    names = ["0"] + [
        _smash_name(a.elements[x], b.elements[y]) for (x, y) in pairs[1:]
    ]
    return FiniteMonoid(name or f"{a.name}^{b.name}", names, table)


def _smash_name(x, y):
    if x == "1":
        return y
    if y == "1":
        return x
    return f"{x}^{y}"


def product(a, b, name=None):
    _require_table(a, "product")
    _require_table(b, "product")
    pairs = list(itertools.product(a.indices(), b.indices()))
    pairs.sort(key=lambda p: (p != (ZERO, ZERO), p != (a.one, b.one), p))
    pos = {p: i for i, p in enumerate(pairs)}
    table = [
        [pos[(a.table[p[0]][q[0]], b.table[p[1]][q[1]])] for q in pairs] for p in pairs
    ]
    names = [f"({a.elements[x]},{b.elements[y]})" for (x, y) in pairs]
    return FiniteMonoid(name or f"{a.name}x{b.name}", names, table)


# ---------------------------------------------------------------------------
# homs


class MonoidHom:
    """Monoid morphism; for finite sources a full element mapping."""

    def __init__(self, source, target, mapping):
        self.source = source
        self.target = target
        self.mapping = list(mapping)

    def __call__(self, x):
        return self.mapping[x]

    def validate(self):
        s, t = self.source, self.target
        report = ValidationReport()
        if self.mapping[ZERO] != ZERO:
            report.add("BasepointNotPreserved", ())
        if self.mapping[s.one] != t.one:
            report.add("IdentityNotPreserved", ())
        for a in s.indices():
            for b in s.indices():
                if self.mapping[s.table[a][b]] != t.table[self.mapping[a]][self.mapping[b]]:
                    report.add("NotMultiplicative", (s.elements[a], s.elements[b]))
                    if len(report.violations) > 8:
                        return report
        return report

    def is_injective(self):
        return len(set(self.mapping)) == len(self.mapping)


def monoid_isomorphic(a, b):
    """Table isomorphism search; returns a mapping or None."""
    if len(a.elements) != len(b.elements):
        return None
    n = len(a.elements)
    # profile pruning: multiset of row profiles must match
    def profile(m, x):
        row = m.table[x]
        return (
            sorted(row).count(ZERO),
            len(set(row)),
            sum(1 for y in m.indices() if m.table[y][y] == x),
        )

    if sorted(profile(a, x) for x in a.indices()) != sorted(
        profile(b, x) for x in b.indices()
    ):
        return None

    mapping = [None] * n
    used = [False] * n
    mapping[ZERO] = ZERO
    used[ZERO] = True
    if n > 1:
        if profile(a, a.one) != profile(b, b.one):
            return None
        mapping[a.one] = b.one
        used[b.one] = True

    order = sorted(a.indices(), key=lambda x: -len(set(a.table[x])))

    def consistent(x):
        for y in a.indices():
            if mapping[y] is None:
                continue
            img = mapping[a.table[x][y]]
            if img is not None and b.table[mapping[x]][mapping[y]] != img:
                return False
            img2 = mapping[a.table[y][x]]
            if img2 is not None and b.table[mapping[y]][mapping[x]] != img2:
                return False
        return True

    def rec(k):
        while k < n and mapping[order[k]] is not None:
            k += 1
        if k == n:
            return True
        x = order[k]
        for y in b.indices():
            if used[y] or profile(a, x) != profile(b, y):
                continue
            mapping[x] = y
            used[y] = True
            if consistent(x) and rec(k + 1):
                return True
            mapping[x] = None
            used[y] = False
        return False

    if rec(0):
        return list(mapping)
    return None


# ---------------------------------------------------------------------------
# localization and group completion


def mult_closure(m, seed):
    """Multiplicative closure of ``seed`` together with 1."""
    out = {m.one}
    frontier = list(set(seed))
    out.update(frontier)
    while frontier:
        x = frontier.pop()
        for y in list(out):
            z = m.table[x][y]
            if z not in out:
                out.add(z)
                frontier.append(z)
    return sorted(out)


def saturation(m, s_set):
    """Smallest saturated multiplicative set containing ``s_set``."""
    s = set(mult_closure(m, s_set))
    # x is in the saturation when some multiple xy lands in s
    changed = True
    while changed:
        changed = False
        for x in m.indices():
            if x in s:
                continue
            if any(m.table[x][y] in s for y in m.indices()):
                s.add(x)
                changed = True
    return sorted(s)


def localize(m, s_gens, name=None):
    """Monoid of fractions at the multiplicative set generated by s_gens.

    Returns (localized monoid, canonical hom a -> a/1).  An explicitly
    zero generator raises ZeroInS; a set whose closure reaches zero
    collapses everything to the zero monoid.
    """
    _require_table(m, "localize")
    s_gens = [x if isinstance(x, int) else m.index_of(x) for x in s_gens]
    if ZERO in s_gens and len(m.elements) > 1:
        raise ZeroInS("0 in the localization set")
    s = mult_closure(m, s_gens)
    if ZERO in s:
        q = FiniteMonoid(f"{m.name}_loc", ["0"], [[0]], [])
        return q, MonoidHom(m, q, [0] * len(m.elements))

    nodes = [(a, t) for a in m.indices() for t in s]
    pos = {p: i for i, p in enumerate(nodes)}
    pairs = []
    for i, (a, t) in enumerate(nodes):
        for j in range(i + 1, len(nodes)):
            b, u = nodes[j]
            if any(
                m.table[v][m.table[a][u]] == m.table[v][m.table[b][t]] for v in s
            ):
                pairs.append((i, j))
    reps = _kernels.closure(len(nodes), [], pairs)

    zero_rep = reps[pos[(ZERO, s[0])]]
    one_rep = reps[pos[(m.one, m.one)]]  # 1 is always in the closure
    # canonical representative naming: lowest (a, t)
    class_members = {}
    for i, node in enumerate(nodes):
        class_members.setdefault(reps[i], []).append(node)

    def frac_name(r):
        a, t = min(class_members[r])
        if t == m.one:
            return m.elements[a]
        return f"{m.elements[a]}/{m.elements[t]}"

    if zero_rep == one_rep:
        q = FiniteMonoid(f"{m.name}_loc", ["0"], [[0]], [])
        return q, MonoidHom(m, q, [0] * len(m.elements))

    ordered = [zero_rep, one_rep] + sorted(
        set(reps) - {zero_rep, one_rep},
        key=lambda r: min(class_members[r]),
    )
    rename = {r: i for i, r in enumerate(ordered)}
    names = ["0", "1"] + [frac_name(r) for r in ordered[2:]]
    k = len(ordered)
    table = [[0] * k for _ in range(k)]
    for r_i, r in enumerate(ordered):
        a, t = class_members[r][0]
        for s_i, w in enumerate(ordered):
            b, u = class_members[w][0]
            prod = (m.table[a][b], m.table[t][u])
            table[r_i][s_i] = rename[reps[pos[prod]]]
    loc = FiniteMonoid(name or f"{m.name}_loc", names, table)
    hom = MonoidHom(m, loc, [rename[reps[pos[(a, m.one)]]] for a in m.indices()])
    return loc, hom


def is_zero_prime(m):
    """(0) prime = no zero divisors = the monoid is torsion free."""
    for a in m.nonzero():
        for b in m.nonzero():
            if m.table[a][b] == ZERO:
                return False
    return True


@dataclass
class PointedGroupDescription:
    """Symbolic pointed abelian group: free rank plus finite cyclic orders."""

    free_rank: int
    torsion_orders: list[int]

    def __str__(self):
        from .abgroup import AbelianGroup

        return str(AbelianGroup(self.free_rank, tuple(t for t in self.torsion_orders if t > 1)))


def group_completion(m):
    """Localization at (0); requires (0) prime.

    Finite tables return a FiniteMonoid (plus hom); the monogenic backend
    returns a symbolic infinite cyclic description; affine backends return
    a PointedGroupDescription of units x lattice.
    """
    if isinstance(m, MonogenicMonoid):
        return PointedGroupDescription(1, [])
    if isinstance(m, AffineMonoid):
        if m.is_pc_quotient:
            raise ZeroNotPrime("monomial ideal quotients have zero divisors")
        from . import intlin

        cols = [list(g) for g in m.generators]
        if cols:
            mat = [[cols[j][i] for j in range(len(cols))] for i in range(m.rank)]
            diag = intlin.invariant_factors(mat)
            free_rank = len(diag)
        else:
            free_rank = 0
        return PointedGroupDescription(free_rank, list(m.unit_orders))
    if not is_zero_prime(m):
        raise ZeroNotPrime("(0) is not prime; use a localization instead")
    return localize(m, [x for x in m.nonzero()], name=f"{m.name}_0")
