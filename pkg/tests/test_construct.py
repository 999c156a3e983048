import pytest

from biunary import (
    LEFT,
    NotCatSemigroup,
    OrderTooLarge,
    PrerequisiteFailed,
    RIGHT,
    STRONG,
    SYMMETRIC,
    Congruence,
    ElementMap,
    category_of,
    classify,
    congruences,
    extension,
    find_isomorphism,
    fixture,
    is_biaction_functor,
    is_homomorphism,
    quotient,
    roundtrip_category,
    roundtrip_semigroup,
    validate_semigroup,
)


def test_category_of_ex2_4_definedness():
    c = category_of(fixture("ex2.4"))
    # R(a)=1 while D(a)=e, so a has no self-composite
    assert c.comp[0][0] is None
    assert c.comp[2][0] == 0  # e compose a = a


def test_category_of_rejects_non_cat_semigroup():
    s = fixture("ex2.4")
    q = quotient(s, Congruence(((0,), (1,), (2, 3))))
    with pytest.raises(NotCatSemigroup) as exc:
        category_of(q)
    assert exc.value.law == "CS6"
    assert exc.value.witness == (0, 0)


def test_categories_of_ex3_3_pair_are_identical():
    assert category_of(fixture("ex3.3S")) == category_of(fixture("ex3.3T"))


def test_category_of_band_is_discrete_with_band_action():
    s10 = fixture("ex2.10")
    ident = tuple(range(3))
    band = validate_semigroup(s10.names, s10.mul, ident, ident)
    c = category_of(band)
    # R(s)=s everywhere, so only squares are restricted products
    for x in range(3):
        for y in range(3):
            assert (c.comp[x][y] is not None) == (x == y)
    for e in c.identities:
        for f in c.identities:
            assert c.left_action[e][f] == band.mul[e][f]


def test_extension_of_ex4_9_left_matches_frozen_table():
    ext = extension(fixture("ex4.9"), LEFT)
    assert ext.mul == ((2, 0, 0), (1, 1, 1), (0, 2, 2))
    assert not ext.assoc.holds
    assert ext.assoc.witness == (0, 1, 0)
    assert ext.algebra is None


def test_extension_prerequisites():
    c = fixture("ex4.9")
    # TC4 holds on this category, so SYMMETRIC is allowed and agrees with LEFT
    ext = extension(c, SYMMETRIC)
    assert ext.mul == extension(c, LEFT).mul == extension(c, RIGHT).mul
    assert ext.mul == extension(c, STRONG).mul


def test_extension_symmetric_reproduces_ex2_10():
    s = fixture("ex2.10")
    ext = extension(category_of(s), SYMMETRIC)
    assert ext.algebra is not None
    assert ext.mul == s.mul


def test_extension_of_discrete_identity_is_trivial():
    c = category_of(validate_semigroup(("a",), ((0,),), (0,), (0,)))
    ext = extension(c, LEFT)
    assert ext.algebra.order == 1


def test_extension_prerequisite_failure():
    from test_laws import lmu_failing_category
    with pytest.raises(PrerequisiteFailed) as exc:
        extension(lmu_failing_category(), LEFT)
    assert exc.value.law == "LMU"
    assert exc.value.witness == (0, 0)


def test_roundtrip_semigroup_strong_on_ex2_10():
    assert roundtrip_semigroup(fixture("ex2.10"), STRONG).holds


def test_roundtrip_all_kinds_on_ex2_10():
    s = fixture("ex2.10")
    for kind in (LEFT, RIGHT, SYMMETRIC, STRONG):
        assert roundtrip_semigroup(s, kind).holds


def test_roundtrip_category_all_kinds_on_transcription_category():
    s10 = fixture("ex2.10")
    ident = tuple(range(3))
    c = category_of(validate_semigroup(s10.names, s10.mul, ident, ident))
    for kind in (LEFT, RIGHT, SYMMETRIC, STRONG):
        assert roundtrip_category(c, kind).holds


def test_roundtrip_localisable_models_left(precat_models):
    count = 0
    for s in precat_models:
        cls = classify(s)
        if "LOCALISABLE" in cls.classes:
            assert roundtrip_semigroup(s, LEFT).holds
            count += 1
    assert count > 0


def test_roundtrip_semigroup_rejects_wrong_class():
    with pytest.raises(PrerequisiteFailed) as exc:
        roundtrip_semigroup(fixture("ex3.8"), LEFT)
    assert exc.value.law == "LMATCH"


def test_roundtrip_category_prerequisite_failure_on_ex4_9():
    with pytest.raises(PrerequisiteFailed) as exc:
        roundtrip_category(fixture("ex4.9"), LEFT)
    assert exc.value.law == "ASSOC-L"
    assert exc.value.witness == (0, 1, 0)


def test_identity_map_is_homomorphism():
    s = fixture("ex2.4")
    assert is_homomorphism(ElementMap.identity(4), s, s)


def test_quotient_map_is_homomorphism():
    s = fixture("ex2.4")
    cong = Congruence(((0,), (1,), (2, 3)))
    q = quotient(s, cong)
    block_of = cong.block_of()
    f = ElementMap(4, 3, tuple(block_of[x] for x in range(4)))
    assert is_homomorphism(f, s, q)


def test_label_fixing_map_between_ex3_3_pair_is_not_homomorphism():
    # the zero squares differ, so fixing labels breaks multiplication
    assert not is_homomorphism(ElementMap.identity(4),
                               fixture("ex3.3S"), fixture("ex3.3T"))


def test_identity_is_biaction_functor():
    c = fixture("ex4.9")
    assert is_biaction_functor(ElementMap.identity(3), c, c)


def test_quotient_functor_between_categories():
    s = fixture("ex2.4")
    c1 = category_of(s)
    # collapsing e,1 is a D,R-homomorphism but the quotient is not a
    # cat-semigroup, so no category sits on the other side; the identity
    # still functors to itself
    assert is_biaction_functor(ElementMap.identity(4), c1, c1)


def test_find_isomorphism_none_between_ex3_3_pair():
    assert find_isomorphism(fixture("ex3.3S"), fixture("ex3.3T")) is None
    assert find_isomorphism(fixture("ex3.3S"), fixture("ex3.3T"),
                            respect_unary=False) is None


def test_find_isomorphism_identity_and_permutation():
    s = fixture("ex2.4")
    assert find_isomorphism(s, s).image == (0, 1, 2, 3)
    perm = (2, 0, 3, 1)  # new label of each old element
    inv = [0] * 4
    for i, v in enumerate(perm):
        inv[v] = i
    relabeled = validate_semigroup(
        tuple(s.names[inv[i]] for i in range(4)),
        tuple(tuple(perm[s.mul[inv[i]][inv[j]]] for j in range(4))
              for i in range(4)),
        tuple(perm[s.d_map[inv[i]]] for i in range(4)),
        tuple(perm[s.r_map[inv[i]]] for i in range(4)))
    f = find_isomorphism(relabeled, s)
    assert f is not None
    assert is_homomorphism(f, relabeled, s)
    g = find_isomorphism(s, relabeled)
    assert g.image == perm


def test_find_isomorphism_between_categories():
    c = fixture("ex4.9")
    assert find_isomorphism(c, c) is not None


def test_find_isomorphism_agrees_with_permutation_oracle(precat_models):
    # oracle: try every permutation outright
    from itertools import permutations
    small = [m for m in precat_models if m.order <= 3][:40]
    for a in small:
        for b in small:
            if a.order != b.order:
                continue
            oracle = any(
                is_homomorphism(ElementMap(a.order, a.order, p), a, b)
                for p in permutations(range(a.order)))
            assert (find_isomorphism(a, b) is not None) == oracle


def test_congruences_of_ex2_4():
    s = fixture("ex2.4")
    found = congruences(s)
    described = {c.describe(s.names) for c in found}
    assert "{a} {g} {e,1}" in described
    assert "{a,g,e,1}" in described  # trivial
    assert "{a} {g} {e} {1}" in described  # discrete


def test_congruence_respects_d_r():
    # collapsing a,g in ex2.4 would force e,1 together through D(a)=e, R(a)=1
    s = fixture("ex2.4")
    for c in congruences(s):
        block_of = c.block_of()
        if block_of[0] == block_of[1]:
            assert block_of[2] == block_of[3]


def test_quotient_rejects_non_congruence():
    s = fixture("ex2.4")
    with pytest.raises(Exception):
        quotient(s, Congruence(((0, 1), (2,), (3,))))


def test_congruences_order_cap():
    big = validate_semigroup(tuple("abcdefghijk"),
                             tuple(tuple(0 for _ in range(11)) for _ in range(11)),
                             (0,) * 11, (0,) * 11)
    with pytest.raises(OrderTooLarge):
        congruences(big)


def test_congruence_count_against_naive_oracle():
    # independent oracle: filter all partitions generated without pruning
    from itertools import product as iproduct
    s = fixture("ex2.10")
    n = s.order

    def all_partitions(n):
        parts = []
        for assign in iproduct(range(n), repeat=n - 1):
            rgs = [0]
            ok = True
            for v in assign:
                if v > max(rgs) + 1:
                    ok = False
                    break
                rgs.append(v)
            if ok:
                parts.append(tuple(rgs))
        return set(parts)

    def is_cong(rgs):
        for x in range(n):
            for y in range(n):
                if rgs[x] != rgs[y]:
                    continue
                if rgs[s.d_map[x]] != rgs[s.d_map[y]]:
                    return False
                if rgs[s.r_map[x]] != rgs[s.r_map[y]]:
                    return False
                for z in range(n):
                    if rgs[s.mul[x][z]] != rgs[s.mul[y][z]]:
                        return False
                    if rgs[s.mul[z][x]] != rgs[s.mul[z][y]]:
                        return False
        return True

    expected = sum(1 for p in all_partitions(n) if is_cong(p))
    assert len(congruences(s)) == expected
