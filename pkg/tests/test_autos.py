import pytest

from kroncover import perm
from kroncover.group import CapExceeded, PermGroup
from kroncover.autgroup import (
    Automorphism,
    AutGroup,
    NotInvariantError,
    are_isomorphic,
    automorphism_group,
    conjugation,
    induce,
    inner_automorphisms,
    intermediate_aut_groups,
    isomorphisms,
    restrict,
)

from test_group import alt5, cyc, klein_four, sym


def test_aut_v4():
    A = automorphism_group(klein_four())
    assert A.order == 6
    assert A.inn_index == 6  # Inn trivial


def test_aut_s3_all_inner():
    S3 = sym(3)
    A = automorphism_group(S3)
    assert A.order == 6
    assert A.inn_order == 6
    assert A.inn_index == 1


def test_aut_a5():
    A = automorphism_group(alt5())
    assert A.order == 120
    assert A.inn_order == 60
    assert A.inn_index == 2


def test_aut_cyclic():
    C6 = PermGroup(6, [cyc("(0 1 2 3 4 5)", 6)])
    assert automorphism_group(C6).order == 2
    C8 = PermGroup(8, [cyc("(0 1 2 3 4 5 6 7)", 8)])
    assert automorphism_group(C8).order == 4


def test_aut_members_preserve_structure():
    G = sym(3)
    A = automorphism_group(G)
    for a in A.automorphisms():
        for x in G.elements():
            assert perm.perm_order(a(x)) == perm.perm_order(x)
            for y in G.elements():
                assert a(perm.mult(x, y)) == perm.mult(a(x), a(y))


def test_inner_autos():
    assert inner_automorphisms(klein_four()).order == 1
    assert inner_automorphisms(sym(3)).order == 6
    Q8 = PermGroup(
        8,
        [cyc("(0 1 2 3)(4 5 6 7)", 8), cyc("(0 4 2 6)(1 7 3 5)", 8)],
        name="Q8",
    )
    assert Q8.order == 8
    assert inner_automorphisms(Q8).order == 4  # |Q8/Z| with |Z| = 2


def test_conjugation_is_automorphism():
    G = sym(4)
    g = cyc("(0 1 2 3)", 4)
    a = conjugation(G, g)
    Automorphism(G, a.table, verify=True)  # full multiplicativity check


def test_intermediate_v4():
    mids = intermediate_aut_groups(klein_four())
    assert [m.order for m in mids] == [1, 2, 2, 2, 3, 6]
    assert sorted(m.inn_index for m in mids) == [1, 2, 2, 2, 3, 6]


def test_intermediate_s3():
    mids = intermediate_aut_groups(sym(3))
    assert len(mids) == 1
    assert mids[0].inn_index == 1


def test_intermediate_a5():
    mids = intermediate_aut_groups(alt5())
    assert [m.inn_index for m in mids] == [1, 2]


def test_restrict_s3_to_a3():
    S3 = sym(3)
    A = inner_automorphisms(S3)
    A3 = S3.subgroup([cyc("(0 1 2)", 3)])
    R = restrict(A, A3)
    assert R.order == 2  # conjugation by a transposition inverts 3-cycles


def test_restrict_whole_group_is_identity_restriction():
    V = klein_four()
    A = automorphism_group(V)
    R = restrict(A, V)
    assert R.order == 6


def test_restrict_trivial_subgroup():
    V = klein_four()
    A = automorphism_group(V)
    T = V.subgroup([])
    assert restrict(A, T).order == 1


def test_restrict_rejects_non_invariant():
    V = klein_four()
    A = automorphism_group(V)
    H = V.subgroup([cyc("(0 1)(2 3)", 4)])
    with pytest.raises(NotInvariantError) as ei:
        restrict(A, H)
    a = ei.value.witness
    assert not H.contains(a(cyc("(0 1)(2 3)", 4)))


def test_induce_s3():
    S3 = sym(3)
    A = inner_automorphisms(S3)
    A3 = S3.subgroup([cyc("(0 1 2)", 3)])
    Q, q = S3.quotient(A3)
    I = induce(A, A3, q)
    assert I.order == 1  # Aut(C2) is trivial


def test_induce_a4():
    A4 = PermGroup(4, [cyc("(0 1 2)", 4), cyc("(0 1)(2 3)", 4)], name="A4")
    A = inner_automorphisms(A4)
    V = A4.subgroup([cyc("(0 1)(2 3)", 4), cyc("(0 2)(1 3)", 4)])
    Q, q = A4.quotient(V)
    I = induce(A, V, q)
    assert Q.order == 3
    assert I.order <= 2  # inside Aut(C3)


def test_induce_whole():
    V = klein_four()
    A = automorphism_group(V)
    Q, q = V.quotient(V)
    assert induce(A, V, q).order == 1


def test_isomorphisms_count():
    # two copies of S3 on different points
    S3a = sym(3)
    S3b = PermGroup(4, [cyc("(1 2)", 4), cyc("(1 2 3)", 4)])
    tabs = isomorphisms(S3a, S3b)
    assert len(tabs) == 6  # |Aut(S3)|
    assert are_isomorphic(S3a, S3b)


def test_isomorphisms_distinguish():
    C4 = PermGroup(4, [cyc("(0 1 2 3)", 4)])
    assert not are_isomorphic(C4, klein_four())
    D4 = PermGroup(4, [cyc("(0 1 2 3)", 4), cyc("(0 2)", 4)])
    Q8 = PermGroup(
        8,
        [cyc("(0 1 2 3)(4 5 6 7)", 8), cyc("(0 4 2 6)(1 7 3 5)", 8)],
    )
    assert not are_isomorphic(D4, Q8)
    D4b = PermGroup(
        8,
        [cyc("(0 1 2 3)(4 5 6 7)", 8), cyc("(0 4)(1 7)(2 6)(3 5)", 8)],
    )
    assert are_isomorphic(D4, D4b)


def test_aut_cap_refusal():
    with pytest.raises(CapExceeded):
        automorphism_group(sym(6), order_cap=100)
    # C2^5 has |Aut| = |GL(5,2)| ~ 1e7, far over the enumeration cap
    gens = [cyc(f"({2 * i} {2 * i + 1})", 10) for i in range(5)]
    E32 = PermGroup(10, gens)
    assert E32.order == 32
    with pytest.raises(CapExceeded):
        automorphism_group(E32)


def test_aut_e8_is_gl32():
    gens = [cyc("(0 1)", 6), cyc("(2 3)", 6), cyc("(4 5)", 6)]
    E8 = PermGroup(6, gens)
    assert automorphism_group(E8).order == 168


def test_composition_matches_tables():
    G = sym(3)
    A = automorphism_group(G)
    autos = A.automorphisms()
    for a in autos[:3]:
        for b in autos[:3]:
            c = a.compose(b)
            for x in G.elements():
                assert c(x) == b(a(x))
