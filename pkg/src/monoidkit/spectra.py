"""Ideals and the prime spectrum of finite monoids.

Primes are searched among ideals generated by subsets of the generator
set (every prime is generated by the generators it contains); a full
lattice sweep validates this on small tables.  Primary decomposition
splits reducible ideals recursively over the finite ideal lattice.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import ImproperIdeal
from .monoids import FiniteMonoid, ZERO, quotient as monoid_quotient


@dataclass(frozen=True)
class Ideal:
    base: FiniteMonoid
    elements: frozenset[int]

    def __contains__(self, x):
        return x in self.elements

    def sorted_elements(self):
        return sorted(self.elements)

    def names(self):
        return [self.base.elements[i] for i in self.sorted_elements()]

    @property
    def is_proper(self):
        return self.base.one not in self.elements

    def generator_names(self):
        gens = minimal_ideal_generators(self.base, self.elements)
        if not gens:
            return ["0"]
        return [self.base.elements[g] for g in sorted(gens)]

    def __le__(self, other):
        return self.elements <= other.elements

    def __str__(self):
        return "(" + ", ".join(self.generator_names()) + ")"


def ideal_generated(m, gens):
    """Smallest ideal containing ``gens`` (always contains 0)."""
    idx = [g if isinstance(g, int) else m.index_of(g) for g in gens]
    out = {ZERO}
    for g in idx:
        for a in m.indices():
            out.add(m.table[a][g])
    return Ideal(m, frozenset(out))


def minimal_ideal_generators(m, elements):
    gens = []
    covered = {ZERO}
    for x in sorted(elements):
        if x not in covered:
            gens.append(x)
            covered |= {m.table[a][x] for a in m.indices()}
            covered.add(x)
    return gens


def is_ideal(m, elements):
    if ZERO not in elements:
        return False
    return all(m.table[a][x] in elements for x in elements for a in m.indices())


def all_ideals(m):
    """Every ideal of a finite monoid, canonically ordered.

    Enumerated by closing each subset of the nonzero non-unit elements; on
    tables of the sizes we handle (<= a few hundred ideals) this is fine.
    """
    candidates = [x for x in m.nonzero() if x != m.one and not _is_unit(m, x)]
    seen = set()
    out = []
    for r in range(len(candidates) + 1):
        for combo in itertools.combinations(candidates, r):
            ideal = ideal_generated(m, combo)
            if ideal.elements not in seen:
                seen.add(ideal.elements)
                out.append(ideal)
    out.sort(key=lambda i: (len(i.elements), i.sorted_elements()))
    return out


def _is_unit(m, x):
    return any(m.table[x][b] == m.one for b in m.indices())


def is_prime(m, ideal):
    """Proper, and ab in p forces a in p or b in p."""
    els = ideal.elements if isinstance(ideal, Ideal) else frozenset(ideal)
    if m.one in els:
        return False
    for a in m.indices():
        if a in els:
            continue
        for b in m.indices():
            if b in els:
                continue
            if m.table[a][b] in els:
                return False
    return True


def radical(m, ideal):
    """Elements with some power inside the ideal."""
    els = ideal.elements if isinstance(ideal, Ideal) else frozenset(ideal)
    out = set()
    n = len(m.elements)
    for a in m.indices():
        x = a
        for _ in range(n + 1):
            if x in els:
                out.add(a)
                break
            x = m.table[x][a]
    return Ideal(m, frozenset(out))


def is_primary(m, ideal):
    """Every zero divisor of the quotient is nilpotent there."""
    els = ideal.elements if isinstance(ideal, Ideal) else frozenset(ideal)
    if m.one in els:
        raise ImproperIdeal("primary ideals are proper")
    q, hom = monoid_quotient(m, sorted(els))
    nilp = set()
    n = len(q.elements)
    for a in q.indices():
        x = a
        for _ in range(n + 1):
            if x == ZERO:
                nilp.add(a)
                break
            x = q.table[x][a]
    for a in q.nonzero():
        if any(q.table[a][b] == ZERO for b in q.nonzero()):
            if a not in nilp:
                return False
    return True


def mspec(m):
    """All prime ideals, each generated by a subset of the monoid generators."""
    gens = m.generators
    seen = set()
    primes = []
    for r in range(len(gens) + 1):
        for combo in itertools.combinations(gens, r):
            ideal = ideal_generated(m, combo)
            if ideal.elements in seen:
                continue
            seen.add(ideal.elements)
            if is_prime(m, ideal):
                primes.append(ideal)
    primes.sort(key=lambda i: (len(i.elements), i.sorted_elements()))
    assert len(primes) <= 2 ** len(gens)
    return primes


def mspec_bruteforce(m):
    """Oracle: primality test over the full ideal lattice."""
    return sorted(
        (i for i in all_ideals(m) if is_prime(m, i)),
        key=lambda i: (len(i.elements), i.sorted_elements()),
    )


def dimension(m):
    """Longest chain length in the prime containment poset."""
    primes = mspec(m)
    return _longest_chain(primes)


def height(m, prime):
    primes = [p for p in mspec(m) if p.elements <= prime.elements]
    return _longest_chain(primes)


def _longest_chain(primes):
    order = {i: [] for i in range(len(primes))}
    for i, p in enumerate(primes):
        for j, q in enumerate(primes):
            if i != j and p.elements < q.elements:
                order[i].append(j)
    best = {}

    def depth(i):
        if i not in best:
            best[i] = 1 + max((depth(j) for j in order[i]), default=0)
        return best[i]

    if not primes:
        return 0
    return max(depth(i) for i in range(len(primes))) - 1


def ideal_quotient(m, j_ideal, i_ideal):
    """(J : I) = elements a with a*I inside J."""
    j_els = j_ideal.elements if isinstance(j_ideal, Ideal) else frozenset(j_ideal)
    i_els = i_ideal.elements if isinstance(i_ideal, Ideal) else frozenset(i_ideal)
    out = {
        a
        for a in m.indices()
        if all(m.table[a][b] in j_els for b in i_els)
    }
    return Ideal(m, frozenset(out))


def annihilator(m, i_ideal):
    return ideal_quotient(m, Ideal(m, frozenset({ZERO})), i_ideal)


def nilradical(m):
    """Intersection of all primes; asserted equal to the nilpotent set."""
    primes = mspec(m)
    inter = set(m.indices())
    for p in primes:
        inter &= p.elements
    from .monoids import nilpotents

    assert sorted(inter) == nilpotents(m)
    return Ideal(m, frozenset(inter))


def _intersect(ideals):
    els = set(ideals[0].elements)
    for i in ideals[1:]:
        els &= i.elements
    return els


def is_irreducible(m, ideal, lattice=None):
    """No pair of strictly larger ideals intersects to this one."""
    lattice = lattice if lattice is not None else all_ideals(m)
    above = [i for i in lattice if ideal.elements < i.elements]
    for a, b in itertools.combinations(above, 2):
        if a.elements & b.elements == ideal.elements:
            return False
    return True


def primary_decomposition(m, ideal):
    """Minimal list of irreducible primary components intersecting to I."""
    els = ideal.elements if isinstance(ideal, Ideal) else frozenset(ideal)
    ideal = Ideal(m, frozenset(els))
    if not ideal.is_proper:
        raise ImproperIdeal("cannot decompose the unit ideal")
    lattice = all_ideals(m)

    def split(i):
        above = [j for j in lattice if i.elements < j.elements]
        for a, b in itertools.combinations(above, 2):
            if a.elements & b.elements == i.elements:
                return a, b
        return None

    components = []
    work = [ideal]
    while work:
        cur = work.pop()
        pair = split(cur)
        if pair is None:
            components.append(cur)
        else:
            work.extend(pair)

    # minimize: drop any component containing the intersection of the others
    changed = True
    while changed:
        changed = False
        for k in range(len(components)):
            rest = components[:k] + components[k + 1 :]
            if rest and _intersect(rest) <= components[k].elements:
                components.pop(k)
                changed = True
                break
    components = _dedupe(components)
    for c in components:
        assert is_primary(m, c), f"component {c} is not primary"
    assert _intersect(components) == ideal.elements
    components.sort(key=lambda i: (len(i.elements), i.sorted_elements()))
    return components


def _dedupe(ideals):
    seen = set()
    out = []
    for i in ideals:
        if i.elements not in seen:
            seen.add(i.elements)
            out.append(i)
    return out


def associated_primes(m, ideal):
    """Primes of the form rad(I : a); cross-checked two more ways."""
    els = ideal.elements if isinstance(ideal, Ideal) else frozenset(ideal)
    ideal = Ideal(m, frozenset(els))

    via_radquot = set()
    via_quot = set()
    for a in m.indices():
        q = ideal_quotient(m, ideal, ideal_generated(m, [a]))
        if not q.is_proper:
            continue
        r = radical(m, q)
        if is_prime(m, r):
            via_radquot.add(r.elements)
        if is_prime(m, q):
            via_quot.add(q.elements)
    via_components = {
        radical(m, c).elements for c in primary_decomposition(m, ideal)
    }
    assert via_radquot == via_quot == via_components, (
        via_radquot,
        via_quot,
        via_components,
    )
    return sorted(
        (Ideal(m, e) for e in via_radquot),
        key=lambda i: (len(i.elements), i.sorted_elements()),
    )


# ---------------------------------------------------------------------------
# ideals of a smash product decompose as unions of boxes


def tensor_ideal_decomposition(a, b, ab, k_ideal):
    """Write an ideal of the smash product as a union of I x J boxes.

    ``ab`` must be the smash product table of ``a`` and ``b`` with element
    names built by ``smash_product``.  Returns a list of (I, J) ideal
    pairs with the I's distinct; their union is verified to equal K.
    """
    # recover coordinates from the smash construction order:
    # index 0 is 0^0; others enumerate (x, y) with x, y nonzero in order
    nb = len(b.elements) - 1
    coords = {0: (ZERO, ZERO)}
    k = 1
    for x in a.nonzero():
        for y in b.nonzero():
            coords[k] = (x, y)
            k += 1

    k_els = k_ideal.elements if isinstance(k_ideal, Ideal) else frozenset(k_ideal)
    # I_y per second coordinate
    i_by_y = {}
    for idx in k_els:
        if idx == 0:
            continue
        x, y = coords[idx]
        i_by_y.setdefault(y, set()).add(x)
    for y in list(i_by_y):
        i_by_y[y] = ideal_generated(a, i_by_y[y]).elements

    groups = {}
    for y, i_els in i_by_y.items():
        groups.setdefault(frozenset(i_els), set()).add(y)
    out = []
    for i_els, ys in sorted(groups.items(), key=lambda kv: sorted(kv[0])):
        j = ideal_generated(b, ys)
        out.append((Ideal(a, i_els), j))

    # verify the union is exactly K
    union = {0}
    rev = {v: k for k, v in coords.items()}
    for i_ideal, j_ideal in out:
        for x in i_ideal.elements:
            for y in j_ideal.elements:
                if x == ZERO or y == ZERO:
                    continue
                union.add(rev[(x, y)])
    assert union | {0} == set(k_els) | {0}, "box union mismatch"
    i_sets = [i.elements for i, _ in out]
    assert len(i_sets) == len(set(i_sets)), "first components must be distinct"
    return out
