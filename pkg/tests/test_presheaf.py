import pytest

from qsemicat import (
    CO,
    CONTRA,
    EnumerationCapExceeded,
    NotACategory,
    NotRegular,
    build_PA,
    build_RA,
    build_YA,
    builtin_quantaloid,
    enumerate_presheaves,
    free_category,
    identity_semidist,
    is_category,
    is_colimit,
    is_regular_presheaf,
    is_regular_semicat,
    is_regular_semidist,
    is_regular_via_liftings,
    is_yoneda_presheaf,
    map_j,
    map_k,
    presheaf_hom,
    unit_category,
    validate_semicategory,
    validate_semidistributor,
    validate_semifunctor,
    weighted_colimit_RA,
    yoneda,
    yoneda_covariant,
)
from helpers import chain3_A, chain3_C, downsets, two_object_quantaloid

Q3 = builtin_quantaloid("3")
Q2 = builtin_quantaloid("2")


def strict_rows_semicat(rows, names):
    hom = {}
    n = len(rows)
    for i in range(n):
        for j in range(n):
            hom[(names[i], names[j])] = rows[i] >> j & 1
    return validate_semicategory(Q2, [(nm, "*") for nm in names], hom)


def test_unit_category():
    u = unit_category(Q3, "*")
    assert u.is_category
    assert u.hom[("*", "*")] == 2
    assert is_regular_semicat(u)
    assert free_category(u) == u


def test_enumerate_three_chain():
    A = chain3_A()
    ps = enumerate_presheaves(A, "*")
    assert [p.values for p in ps] == [(0,), (1,), (2,)]
    # presheaves on A are the presheaves on the free category
    assert [p.values for p in enumerate_presheaves(free_category(A), "*")] == [
        (0,),
        (1,),
        (2,),
    ]


def test_enumerate_strict_order_gives_downsets():
    # a ≺ b: rows a -> {b}
    rows = (0b10, 0b00)
    A = strict_rows_semicat(rows, ["a", "b"])
    got = {
        frozenset(a for a, v in zip(A.names, p.values) if v) for p in enumerate_presheaves(A, "*")
    }
    expect = {
        frozenset(nm for i, nm in enumerate(["a", "b"]) if mask >> i & 1)
        for mask in downsets(2, rows)
    }
    assert got == expect


def test_enumerate_empty_carrier():
    A = validate_semicategory(Q3, [], {})
    ps = enumerate_presheaves(A, "*")
    assert len(ps) == 1 and ps[0].values == ()


def test_enumeration_cap():
    A = chain3_C()
    with pytest.raises(EnumerationCapExceeded):
        enumerate_presheaves(A, "*", CONTRA, cap=2)


def test_yoneda_values():
    A = chain3_A()
    assert yoneda(A, "*").values == (1,)
    C = chain3_C()
    lat = Q3.hom_lat("*", "*")
    assert lat.le(Q3.identity["*"], yoneda(C, "*").value("*"))


def test_yoneda_strict_principal_downset():
    rows = (0b110, 0b100, 0b000)  # a ≺ b, a ≺ c, b ≺ c
    A = strict_rows_semicat(rows, ["a", "b", "c"])
    y_c = yoneda(A, "c")
    assert {a for a, v in zip(A.names, y_c.values) if v} == {"a", "b"}
    y_a = yoneda(A, "a")
    assert {a for a, v in zip(A.names, y_a.values) if v} == set()


def test_yoneda_presheaves_three_chain():
    A = chain3_A()
    flags = [is_yoneda_presheaf(p) for p in enumerate_presheaves(A, "*")]
    assert flags == [True, False, True]  # {0, 1}


def test_yoneda_condition_on_downsets():
    # D is Yoneda iff for all a: a ∈ D ⟺ strict-downset(a) ⊆ D
    rows = (0b10, 0b00)
    A = strict_rows_semicat(rows, ["a", "b"])
    for p in enumerate_presheaves(A, "*"):
        D = {a for a, v in zip(A.names, p.values) if v}
        below = {"a": set(), "b": {"a"}}
        expect = all((a in D) == (below[a] <= D) for a in A.names)
        assert is_yoneda_presheaf(p) == expect


def test_representables_yoneda_on_categories():
    for C in (chain3_C(), free_category(chain3_A())):
        for a in C.names:
            assert is_yoneda_presheaf(yoneda(C, a))
            assert is_yoneda_presheaf(yoneda_covariant(C, a))


def test_regular_presheaves_three_chain():
    A = chain3_A()
    flags = [is_regular_presheaf(p) for p in enumerate_presheaves(A, "*")]
    assert flags == [True, True, False]  # {0, e}


def test_regular_condition_on_downsets():
    # regular downsets: every d ∈ D has d' ∈ D with d ≺ d'
    rows = (0b11, 0b10)  # a ≺ a, a ≺ b, b ≺ b: a dense fragment with loops
    A = strict_rows_semicat(rows, ["a", "b"])
    for p in enumerate_presheaves(A, "*"):
        D = {a for a, v in zip(A.names, p.values) if v}
        above = {"a": {"a", "b"}, "b": {"b"}}
        expect = all(above[d] & D for d in D)
        assert is_regular_presheaf(p) == expect


def test_representables_regular_iff_regular_carrier():
    A = chain3_A()
    assert all(is_regular_presheaf(yoneda(A, a)) for a in A.names)
    B = strict_rows_semicat((0b10, 0b00), ["a", "b"])
    assert not all(is_regular_presheaf(yoneda(B, a)) for a in B.names)


def test_regular_presheaf_agrees_with_semidistributor_route():
    A = chain3_A()
    for variance in (CONTRA, CO):
        for p in enumerate_presheaves(A, "*", variance):
            assert is_regular_presheaf(p) == is_regular_semidist(p.as_semidistributor())


def test_regular_via_liftings():
    A = chain3_A()
    ps = enumerate_presheaves(A, "*")
    assert is_regular_via_liftings(ps[1])  # φ = e
    assert not is_regular_via_liftings(ps[2])  # φ = 1, witnessed by ψ = e
    for C in (chain3_C(),):
        for p in enumerate_presheaves(C, "*"):
            assert is_regular_via_liftings(p)


def test_build_views_three_chain():
    A = chain3_A()
    pa = build_PA(A)
    ra = build_RA(A)
    ya = build_YA(A)
    assert len(pa) == 3 and len(ra) == 2 and len(ya) == 2
    assert ra.hom_elems[("*#1", "*#0")] == 0  # RA(e, 0) = 0
    assert ra.hom_elems[("*#0", "*#1")] == 2  # RA(0, e) = 1
    for view in (pa, ra, ya):
        assert view.check()


def test_build_RA_lifting_route_agrees():
    A = chain3_A()
    assert build_RA(A).hom_elems == build_RA(A, hom_route="lifting").hom_elems
    C = chain3_C()
    assert build_RA(C).hom_elems == build_RA(C, hom_route="lifting").hom_elems


def test_PA_equals_PA_of_free_category():
    A = chain3_A()
    pa = build_PA(A)
    pa_free = build_PA(free_category(A))
    assert [o[2].values for o in pa.objects] == [o[2].values for o in pa_free.objects]
    assert pa.hom_elems == pa_free.hom_elems


def test_view_as_semicategory_roundtrip():
    ra = build_RA(chain3_A())
    sc = ra.as_semicategory()
    assert sc.is_category
    assert sc.hom[("*#1", "*#0")] == ra.hom_elems[("*#1", "*#0")]


def test_map_j_examples():
    A = chain3_A()
    ps = enumerate_presheaves(A, "*")
    assert map_j(A, ps[2]).values == (1,)  # j(1) = e
    assert map_j(A, ps[0]).values == (0,)
    # j is idempotent and fixes regular presheaves
    for p in ps:
        jp = map_j(A, p)
        assert is_regular_presheaf(jp)
        assert map_j(A, jp) == jp
    # j ∘ yoneda = yoneda on a regular carrier
    assert map_j(A, yoneda(A, "*")) == yoneda(A, "*")


def test_map_k_examples():
    A = chain3_A()
    ps = enumerate_presheaves(A, "*")
    assert map_k(A, ps[1]).values == (2,)  # k(e) = 1
    assert map_k(A, ps[0]).values == (0,)
    image = {map_k(A, p) for p in ps if is_regular_presheaf(p)}
    assert image == {p for p in ps if is_yoneda_presheaf(p)}
    with pytest.raises(NotRegular):
        map_k(A, ps[2])


def test_maps_require_regular_carrier():
    B = strict_rows_semicat((0b10, 0b00), ["a", "b"])
    p = enumerate_presheaves(B, "*")[0]
    with pytest.raises(NotRegular):
        map_j(B, p)


def test_adjunctions_on_three_chain():
    A = chain3_A()
    pool = enumerate_presheaves(A, "*")
    regular = [p for p in pool if is_regular_presheaf(p)]
    for phi in regular:
        for psi in pool:
            assert presheaf_hom(phi, psi) == presheaf_hom(phi, map_j(A, psi))
    for psi in pool:
        for theta in regular:
            assert presheaf_hom(map_j(A, psi), theta) == presheaf_hom(psi, map_k(A, theta))
    for t1 in regular:
        for t2 in regular:
            assert presheaf_hom(t1, t2) == presheaf_hom(map_k(A, t1), map_k(A, t2))


def test_adjoint_triple_orientation_noncommutative_base():
    # over a noncommutative base the two variances genuinely differ: the
    # contravariant triple has the inclusion on the left, the covariant
    # one has it on the right
    from helpers import endomap_quantaloid

    q = endomap_quantaloid()
    A = validate_semicategory(q, [("*", "*")], {("*", "*"): 2})
    assert is_regular_semicat(A) and not is_category(A)

    for variance, contra_shape in ((CONTRA, True), (CO, False)):
        pool = enumerate_presheaves(A, "*", variance)
        reg = [p for p in pool if is_regular_presheaf(p)]
        j = {p: map_j(A, p) for p in pool}
        k = {t: map_k(A, t) for t in reg}
        left_shape = all(
            presheaf_hom(phi, psi) == presheaf_hom(phi, j[psi])
            for phi in reg
            for psi in pool
        ) and all(
            presheaf_hom(j[psi], th) == presheaf_hom(psi, k[th])
            for psi in pool
            for th in reg
        )
        right_shape = all(
            presheaf_hom(psi, phi) == presheaf_hom(j[psi], phi)
            for phi in reg
            for psi in pool
        ) and all(
            presheaf_hom(th, j[psi]) == presheaf_hom(k[th], psi)
            for psi in pool
            for th in reg
        )
        assert left_shape == contra_shape
        assert right_shape == (not contra_shape)
        # fully faithfulness of k and its image do not depend on variance
        assert all(
            presheaf_hom(t1, t2) == presheaf_hom(k[t1], k[t2])
            for t1 in reg
            for t2 in reg
        )
        assert {k[t] for t in reg} == {p for p in pool if is_yoneda_presheaf(p)}
        for p in pool:
            assert is_regular_presheaf(p) == is_regular_via_liftings(p, against=pool)


def test_covariant_presheaves_are_upsets():
    rows = (0b10, 0b00)  # a ≺ b
    A = strict_rows_semicat(rows, ["a", "b"])
    got = {
        frozenset(a for a, v in zip(A.names, p.values) if v)
        for p in enumerate_presheaves(A, "*", CO)
    }
    assert got == {frozenset(), frozenset({"b"}), frozenset({"a", "b"})}


def test_covariant_regularity_characterization():
    # the carrier is regular iff all covariant representables are regular
    A = chain3_A()
    assert all(is_regular_presheaf(yoneda_covariant(A, a)) for a in A.names)
    B = strict_rows_semicat((0b10, 0b00), ["a", "b"])
    assert not all(is_regular_presheaf(yoneda_covariant(B, a)) for a in B.names)


def test_presheaf_types_grouped_over_two_objects():
    q = two_object_quantaloid()
    A = validate_semicategory(
        q, [("u", "X"), ("v", "Y")], {("u", "u"): 1, ("v", "v"): 1}
    )
    pa = build_PA(A)
    types = [t for _, t, _ in pa.objects]
    assert types == sorted(types, key=lambda t: q.objects.index(t))
    assert pa.check()


def test_weighted_colimit_identity_weight():
    C = chain3_C()
    ra_objects = [p for p in enumerate_presheaves(C, "*") if is_regular_presheaf(p)]
    for target in ra_objects:
        out = weighted_colimit_RA(identity_semidist(C), {"*": target})
        assert out["*"] == target


def test_weighted_colimit_of_yoneda_is_the_weight():
    A = chain3_A()
    for phi in enumerate_presheaves(A, "*"):
        if not is_regular_presheaf(phi):
            continue
        weight = phi.as_semidistributor()
        out = weighted_colimit_RA(weight, {"*": yoneda(A, "*")})
        assert out["*"].values == phi.values


def test_weighted_colimit_three_chain_value():
    A = chain3_A()
    weight = validate_semidistributor(unit_category(Q3, "*"), A, {("*", "*"): 1})
    out = weighted_colimit_RA(weight, {"*": yoneda(A, "*")})
    assert out["*"].values == (1,)  # e ∧ e = e


def test_weighted_colimit_requires_regular():
    B = strict_rows_semicat((0b10, 0b00), ["a", "b"])
    weight = identity_semidist(B)
    fmap = {a: yoneda(B, a) for a in B.names}
    with pytest.raises(NotRegular):
        weighted_colimit_RA(weight, fmap)


def test_is_colimit_identity_case():
    C = chain3_C()
    f = validate_semifunctor(C, C, {"*": "*"})
    assert is_colimit(f, identity_semidist(C), f)


def test_is_colimit_crosschecks_weighted_colimit():
    A = chain3_A()
    ra = build_RA(A)
    ra_sc = ra.as_semicategory()
    unit = unit_category(Q3, "*", "d")
    weight = validate_semidistributor(unit, A, {("*", "d"): 1})
    out = weighted_colimit_RA(weight, {"*": yoneda(A, "*")})

    fmap = validate_semifunctor(A, ra_sc, {"*": ra.tag_of(yoneda(A, "*"))})
    g = validate_semifunctor(unit, ra_sc, {"d": ra.tag_of(out["d"])})
    assert is_colimit(g, weight, fmap)
    # shifting the candidate off the colimit breaks the formula
    other = [tag for tag, _, p in ra.objects if p != out["d"]]
    g_bad = validate_semifunctor(unit, ra_sc, {"d": other[0]})
    assert not is_colimit(g_bad, weight, fmap)


def test_is_colimit_needs_category():
    A = chain3_A()
    f = validate_semifunctor(A, A, {"*": "*"})
    with pytest.raises(NotACategory):
        is_colimit(f, identity_semidist(A), f)
