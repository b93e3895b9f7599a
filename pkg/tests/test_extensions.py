import itertools

from monoidkit import asets as ak
from monoidkit import extensions as ex
from monoidkit import monoids as mk


def F1():
    return mk.build_from_presentation([], [], name="F1")


def line(n):
    return mk.build_from_presentation(["x"], [(f"x^{n}", "0")])


def two_point_torsion_aset(m):
    """X = {0, u} with every non-identity generator killing u."""
    n = len(m.elements)
    action = [[0, 0] for _ in range(n)]
    action[m.one] = [0, 1]
    return ak.ASet(m, ["0", "u"], action=action, name="X")


def test_no_torsion_over_f1():
    m = F1()
    x = two_point_torsion_aset(m)
    a = ak.aset_from_monoid(m)
    assert ex.torsion_pairs(m, x) == []
    exts = ex.ext_enumerate(x, a)
    assert len(exts) == 1  # only the split wedge


def test_two_extensions_of_point_by_line2():
    m = line(2)
    x = two_point_torsion_aset(m)
    y = ak.aset_from_monoid(m)
    exts = ex.ext_enumerate(x, y)
    assert len(exts) == 2
    # one split (x.u = 0 stays in Y? no: x.u = phi value), one with x.u = x
    values = sorted(
        e.phi_table.get((m.index_of("x"), 1), 0) for e in exts
    )
    assert values == [0, m.index_of("x")]
    # split vs nonsplit are inequivalent; self-equivalences hold
    assert ex.ext_equivalent(exts[0], exts[0])
    assert ex.ext_equivalent(exts[1], exts[1])
    assert not ex.ext_equivalent(exts[0], exts[1])


def test_ext_count_matches_bruteforce():
    cases = []
    m1 = line(2)
    cases.append((two_point_torsion_aset(m1), ak.aset_from_monoid(m1)))
    m2 = line(3)
    cases.append((two_point_torsion_aset(m2), ak.aset_from_monoid(m2)))
    a2 = ak.aset_from_monoid(m2)
    sub = ak.sub_aset(a2, [0, m2.index_of("x^2")], name="Y2")
    cases.append((two_point_torsion_aset(m2), sub))
    idem = mk.build_from_presentation(["x"], [("x^2", "x")])
    cases.append((two_point_torsion_aset(idem), ak.aset_from_monoid(idem)))
    for x, y in cases:
        exts = ex.ext_enumerate(x, y)
        brute = ex.ext_count_bruteforce(x, y)
        assert len(exts) == brute, (x.name, y.name, len(exts), brute)


def test_every_extension_validates_as_aes():
    m = line(3)
    x = two_point_torsion_aset(m)
    y = ak.aset_from_monoid(m)
    for e in ex.ext_enumerate(x, y):
        assert ak.validate_aset(e.e).ok
        ak.validate_aes(e.include, e.project)  # raises on failure


def test_torsion_free_quotient_admits_only_split():
    # over a base with nilpotents no nontrivial torsion-free carrier exists;
    # use the idempotent base where x fixes the extra point
    m = mk.build_from_presentation(["x"], [("x^2", "x")])
    x = ak.ASet(m, ["0", "u"], action=[[0, 0], [0, 1], [0, 1]], name="TF")
    assert ak.validate_aset(x).ok
    assert ex.torsion_pairs(m, x) == []
    y = ak.aset_from_monoid(m)
    assert len(ex.ext_enumerate(x, y)) == 1


def test_squarezero_line2_recovers_line3():
    m = line(2)
    x = two_point_torsion_aset(m)
    results = ex.squarezero_enumerate(m, x)
    assert len(results) == 2
    tables = []
    for f, table in results:
        assert table.is_associative()
        assert table.is_commutative() == ex.squarezero_is_commutative(f)
        tables.append(table)
    nontrivial = [t for f, t in results if f]
    assert len(nontrivial) == 1
    e = nontrivial[0].as_finite_monoid()
    target = line(3)
    assert mk.monoid_isomorphic(e, target) is not None


def test_squarezero_over_f1_trivial():
    m = F1()
    x = two_point_torsion_aset(m)
    results = ex.squarezero_enumerate(m, x)
    assert len(results) == 1
    f, table = results[0]
    assert f == {}


def test_cocycle_table_rows():
    # reproduce the eight sign-pattern rows: for each pattern of
    # (ab, bc, ac) zero/nonzero, the structurally-zero faces vanish
    m = line(3)
    x = two_point_torsion_aset(m)
    results = ex.squarezero_enumerate(m, x)
    assert results
    f = next(f for f, _ in results if f)
    seen = set()
    for a in m.nonzero():
        for b in m.nonzero():
            for c in m.nonzero():
                ab = m.table[a][b] != 0
                bc = m.table[b][c] != 0
                ac = m.table[a][c] != 0
                d = ex.cocycle_faces(m, x, f, a, b, c)
                seen.add((ab, bc, ac))
                if ab and bc:
                    assert d[0] == 0 and d[3] == 0
                if not ab:
                    assert d[1] == 0
                if not bc:
                    assert d[2] == 0
                if ab:
                    assert d[3] == 0
                if bc:
                    assert d[0] == 0
    assert len(seen) >= 4  # several of the eight patterns exercised


def test_associativity_iff_cocycle_sweep():
    # the enumeration itself asserts the equivalence both ways; run it on
    # a monoid with several zero-product pairs
    m = mk.build_from_presentation(["x", "y"], [("x^2", "0"), ("y^2", "0"), ("x*y", "0")])
    x = two_point_torsion_aset(m)
    results = ex.squarezero_enumerate(m, x)
    assert len(results) >= 1
