import pytest

from monoidkit import monoids as mk
from monoidkit.errors import BoundExceeded, ZeroInS, ZeroNotPrime


def F1():
    return mk.build_from_presentation([], [], name="F1")


def truncated_line(n):
    """F1[x]/(x^n)."""
    return mk.build_from_presentation(["x"], [(f"x^{n}", "0")])


def idem1():
    return mk.build_from_presentation(["x"], [("x^2", "x")])


def idem2():
    return mk.build_from_presentation(["x", "y"], [("x^2", "x"), ("y^2", "y")])


def pointed_cycle(n):
    """C_n: cyclic group of order n with adjoined zero."""
    return mk.build_from_presentation(["x"], [(f"x^{n}", "1")])


# -- presentations ----------------------------------------------------------


def test_empty_presentation_is_f1():
    m = F1()
    assert m.elements == ["0", "1"]
    assert m.table == [[0, 0], [0, 1]]
    assert mk.validate(m).ok


def test_presentation_idempotent_generator():
    # oracle: closed by hand over words of length <= 3
    m = idem1()
    assert m.elements == ["0", "1", "x"]
    x = m.index_of("x")
    assert m.mul(x, x) == x


def test_presentation_bound_exceeded_for_infinite_monoid():
    with pytest.raises(BoundExceeded):
        mk.build_from_presentation(["x", "y"], [("x*y", "0")], bound=10)


def test_presentation_truncated_line():
    m = truncated_line(3)
    assert m.elements == ["0", "1", "x", "x^2"]
    x = m.index_of("x")
    assert m.mul(x, x) == m.index_of("x^2")
    assert m.mul(m.mul(x, x), x) == 0


def test_presentation_word_equivalence_oracle():
    # brute-force oracle: enumerate words up to length 6 and check the
    # quotient map respects the closure for x^3 = x
    m = mk.build_from_presentation(["x"], [("x^3", "x")])
    assert m.elements == ["0", "1", "x", "x^2"]
    x = m.index_of("x")
    # x^4 = x^2, x^5 = x^3 = x ...
    assert m.power(x, 4) == m.power(x, 2)
    assert m.power(x, 5) == x


def test_represent_roundtrip_isomorphic():
    # re-presenting a table by all its elements and full relations gives an
    # isomorphic table
    m = idem2()
    nonunit = [i for i in m.indices() if i not in (0, m.one)]
    gname = {i: f"g{i}" for i in nonunit}

    def word_for(i):
        if i == 0:
            return "0"
        if i == m.one:
            return "1"
        return gname[i]

    rels = []
    for a in nonunit:
        for b in nonunit:
            rels.append((f"{gname[a]}*{gname[b]}", word_for(m.mul(a, b))))
    m2 = mk.build_from_presentation([gname[i] for i in nonunit], rels)
    assert mk.monoid_isomorphic(m, m2) is not None


def test_zero_monoid_presentation():
    m = mk.build_from_presentation(["x"], [("1", "0")])
    assert m.elements == ["0"]


# -- validation -------------------------------------------------------------


def test_validate_flags_noncommutative():
    m = F1()
    bad = mk.FiniteMonoid(
        "bad",
        ["0", "1", "x", "y"],
        [
            [0, 0, 0, 0],
            [0, 1, 2, 3],
            [0, 2, 0, 2],
            [0, 3, 3, 0],
        ],
    )
    rep = mk.validate(bad)
    assert not rep.ok
    assert any(v.kind == "Commutativity" for v in rep.violations)


def test_validate_ok_on_derived_tables():
    for m in [F1(), idem1(), idem2(), truncated_line(4), pointed_cycle(3)]:
        assert mk.validate(m).ok, mk.validate(m)


# -- units / idempotents / nilpotents ----------------------------------------


def test_units_idempotents_nilpotents_idem1():
    m = idem1()
    assert [m.elements[i] for i in mk.units(m)] == ["1"]
    assert [m.elements[i] for i in mk.idempotents(m)] == ["0", "1", "x"]
    assert [m.elements[i] for i in mk.nilpotents(m)] == ["0"]


def test_nilpotents_power_scan():
    m = truncated_line(3)
    assert [m.elements[i] for i in mk.nilpotents(m)] == ["0", "x", "x^2"]


def test_pointed_group_units():
    for n in (2, 3, 4):
        m = pointed_cycle(n)
        assert len(mk.units(m)) == n


def test_is_reduced():
    ok, _ = mk.is_reduced(F1())
    assert ok
    bad, witness = mk.is_reduced(truncated_line(2))
    assert not bad and set(witness) == {"x", "0"}
    # the stabilized x^2=y^2, x^3=y^3 example: not reduced, no nilpotents
    m = mk.build_from_presentation(
        ["x", "y"], [("x^2", "y^2"), ("x^3", "y^3"), ("y^4", "y^3")]
    )
    red, witness = mk.is_reduced(m)
    assert not red and set(witness) == {"x", "y"}
    assert [m.elements[i] for i in mk.nilpotents(m)] == ["0"]


# -- quotients ---------------------------------------------------------------


def test_quotient_by_zero_ideal_is_identity():
    m = idem2()
    q, hom = mk.quotient(m, [0])
    assert q.elements == m.elements
    assert hom.mapping == list(range(len(m.elements)))


def test_quotient_by_congruence():
    m = mk.build_from_presentation(["x"], [("x^3", "x")])
    x = m.index_of("x")
    x2 = m.index_of("x^2")
    cong = mk.congruence_from_pairs(m, [(x2, x)])
    q, hom = mk.quotient(m, cong)
    assert sorted(q.elements) == ["0", "1", "x"]
    xq = q.index_of("x")
    assert q.mul(xq, xq) == xq


def test_quotient_congruence_collapse_to_zero():
    # over F1[x]/(x^3), merging x^2 with x drags x to 0 by closure
    m = truncated_line(3)
    cong = mk.congruence_from_pairs(m, [(m.index_of("x^2"), m.index_of("x"))])
    q, _ = mk.quotient(m, cong)
    assert q.elements == ["0", "1"]


def test_quotient_by_ideal():
    m = truncated_line(3)
    q, hom = mk.quotient(m, [0, m.index_of("x^2")])
    assert sorted(q.elements) == ["0", "1", "x"]
    xq = q.index_of("x")
    assert q.mul(xq, xq) == 0


# -- products ----------------------------------------------------------------


def test_smash_identity():
    b = truncated_line(3)
    s = mk.smash_product(F1(), b)
    assert mk.monoid_isomorphic(s, b) is not None


def test_smash_cardinality():
    a = truncated_line(2)
    b = mk.build_from_presentation(["y"], [("y^2", "0")])
    s = mk.smash_product(a, b)
    assert len(s.elements) == (len(a.elements) - 1) * (len(b.elements) - 1) + 1
    assert mk.validate(s).ok


def test_smash_commutative_associative():
    a, b, c = truncated_line(2), idem1(), pointed_cycle(2)
    ab = mk.smash_product(a, b)
    ba = mk.smash_product(b, a)
    assert mk.monoid_isomorphic(ab, ba) is not None
    abc1 = mk.smash_product(ab, c)
    abc2 = mk.smash_product(a, mk.smash_product(b, c))
    assert mk.monoid_isomorphic(abc1, abc2) is not None


def test_product_size():
    a, b = truncated_line(2), idem1()
    p = mk.product(a, b)
    assert len(p.elements) == len(a.elements) * len(b.elements)
    assert mk.validate(p).ok


# -- localization -------------------------------------------------------------


def test_localize_at_units_is_identity():
    m = pointed_cycle(3)
    loc, hom = mk.localize(m, [m.index_of("x")])
    assert mk.monoid_isomorphic(m, loc) is not None
    assert hom.is_injective()


def test_localize_idem2_at_y():
    m = idem2()
    loc, _ = mk.localize(m, [m.index_of("y")])
    expected = idem1()
    assert mk.monoid_isomorphic(loc, expected) is not None


def test_localize_at_nilpotent_gives_zero_monoid():
    m = truncated_line(3)
    loc, hom = mk.localize(m, [m.index_of("x")])
    assert loc.elements == ["0"]
    assert set(hom.mapping) == {0}


def test_localize_explicit_zero_raises():
    m = truncated_line(3)
    with pytest.raises(ZeroInS):
        mk.localize(m, [0])


def test_localize_equals_localize_at_saturation():
    m = idem2()
    s = [m.index_of("y")]
    sat = mk.saturation(m, s)
    loc1, _ = mk.localize(m, s)
    loc2, _ = mk.localize(m, sat)
    assert mk.monoid_isomorphic(loc1, loc2) is not None
    assert m.index_of("y") in sat and 0 not in sat


# -- group completion ----------------------------------------------------------


def test_group_completion_pointed_group_is_itself():
    m = pointed_cycle(4)
    g, hom = mk.group_completion(m)
    assert mk.monoid_isomorphic(m, g) is not None
    assert hom.is_injective()


def test_group_completion_monogenic_symbolic():
    desc = mk.group_completion(mk.MonogenicMonoid())
    assert desc.free_rank == 1 and not desc.torsion_orders


def test_group_completion_affine_gcd():
    aff = mk.AffineMonoid("A", 1, [(2,), (3,)])
    desc = mk.group_completion(aff)
    assert desc.free_rank == 1


def test_group_completion_requires_zero_prime():
    with pytest.raises(ZeroNotPrime):
        mk.group_completion(truncated_line(3))


def test_group_completion_noninjective_on_noncancellative():
    m = idem1()  # x^2 = x is not cancellative but (0) is prime
    g, hom = mk.group_completion(m)
    assert not hom.is_injective()


# -- cancellativity -------------------------------------------------------------


def test_cancellative_checks():
    ok, _ = mk.is_cancellative(pointed_cycle(3))
    assert ok
    bad, witness = mk.is_cancellative(truncated_line(3))
    assert not bad
    ok, _ = mk.is_cancellative(mk.AffineMonoid("A", 2, [(1, 0), (0, 1)]))
    assert ok


def test_smash_unsupported_for_monogenic():
    from monoidkit.errors import UnsupportedBackend

    with pytest.raises(UnsupportedBackend):
        mk.smash_product(mk.MonogenicMonoid(), mk.MonogenicMonoid())


def test_monogenic_basics():
    m = mk.MonogenicMonoid()
    assert m.mul(2, 3) == 5
    assert m.mul(None, 3) is None
    assert mk.units(m) == [0]
    assert mk.idempotents(m) == [None, 0]
    assert mk.nilpotents(m) == [None]
