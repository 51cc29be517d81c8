import pytest

from kroncover import perm
from kroncover.group import PermGroup
from kroncover.autgroup import (
    automorphism_group,
    inner_automorphisms,
    intermediate_aut_groups,
    restrict,
)
from kroncover.covering import (
    CoveringInstance,
    a_chief_series,
    a_core,
    chief_length,
    covers,
    is_a_invariant,
    minimal_a_invariant_subgroups,
)
from kroncover.lattice import dense, subgroup_class_reps

from test_group import alt5, cyc, klein_four, sym


def test_a_core_s3_transposition():
    S3 = sym(3)
    A = inner_automorphisms(S3)
    U = S3.subgroup([cyc("(0 1)", 3)])
    assert a_core(U, A).order == 1


def test_a_core_normal_subgroup():
    S3 = sym(3)
    A = inner_automorphisms(S3)
    A3 = S3.subgroup([cyc("(0 1 2)", 3)])
    assert a_core(A3, A).elements() == A3.elements()


def test_a_core_v4_full_aut():
    V = klein_four()
    A = automorphism_group(V)
    U = V.subgroup([cyc("(0 1)(2 3)", 4)])
    assert a_core(U, A).order == 1


def test_a_core_is_largest_invariant():
    # every A-invariant subgroup of U lies inside the core
    for G, A in [
        (sym(4), None),
        (klein_four(), None),
    ]:
        A = automorphism_group(G)
        d = dense(G)
        from kroncover.lattice import all_subgroup_masks

        masks = all_subgroup_masks(G)
        for um in masks:
            U = d.mask_to_group(um)
            core_mask = d.subgroup_mask(a_core(U, A))
            for hm in masks:
                if hm & um == hm:
                    H = d.mask_to_group(hm)
                    if is_a_invariant(H, A):
                        assert hm & core_mask == hm


def test_is_a_invariant():
    V = klein_four()
    A = automorphism_group(V)
    assert is_a_invariant(V, A)
    assert not is_a_invariant(V.subgroup([cyc("(0 1)(2 3)", 4)]), A)
    S3 = sym(3)
    AI = inner_automorphisms(S3)
    assert is_a_invariant(S3.subgroup([cyc("(0 1 2)", 3)]), AI)


def test_covers_v4_full_aut():
    V = klein_four()
    A = automorphism_group(V)
    U = V.subgroup([cyc("(0 1)(2 3)", 4)])
    inst = covers(U, A)
    assert inst.covered
    assert inst.witness is None
    assert inst.n == 6
    assert inst.index == 2
    assert inst.c == 1


def test_covers_v4_c3_lift():
    V = klein_four()
    mids = intermediate_aut_groups(V)
    U = V.subgroup([cyc("(0 1)(2 3)", 4)])
    outcomes = {}
    for A in mids:
        inst = covers(U, A)
        outcomes[A.inn_index] = outcomes.get(A.inn_index, set()) | {inst.covered}
    assert outcomes[1] == {False}
    assert outcomes[2] == {False}
    assert outcomes[3] == {True}
    assert outcomes[6] == {True}


def test_covers_a5_point_stabilizer():
    A5 = alt5()
    A = inner_automorphisms(A5)
    U = A5.subgroup([cyc("(1 2 3)", 5), cyc("(1 2)(3 4)", 5)])
    inst = covers(U, A)
    assert not inst.covered
    assert perm.perm_order(inst.witness) == 5


def test_covers_whole_group():
    G = sym(3)
    inst = covers(G, inner_automorphisms(G))
    assert inst.covered and inst.witness is None


def test_jordan_small():
    # covered iff U = G, under inner automorphisms
    for G in [klein_four(), sym(3), sym(4)]:
        A = inner_automorphisms(G)
        d = dense(G)
        for rep in subgroup_class_reps(G):
            U = d.mask_to_group(rep)
            assert covers(U, A).covered == (U.order == G.order)


def test_covering_monotone_in_subgroup():
    G = sym(4)
    A = automorphism_group(G)
    d = dense(G)
    from kroncover.lattice import all_subgroup_masks

    masks = all_subgroup_masks(G)
    covered = {m: covers(d.mask_to_group(m), A).covered for m in masks}
    for um in masks:
        for wm in masks:
            if um & wm == um and covered[um]:
                assert covered[wm]


def test_minimal_invariant_v4():
    V = klein_four()
    assert [H.order for H in minimal_a_invariant_subgroups(V, automorphism_group(V))] == [4]
    assert [H.order for H in minimal_a_invariant_subgroups(V, inner_automorphisms(V))] == [2, 2, 2]


def test_minimal_invariant_simple():
    A5 = alt5()
    for A in intermediate_aut_groups(A5):
        assert [H.order for H in minimal_a_invariant_subgroups(A5, A)] == [60]


def test_chief_series_v4():
    V = klein_four()
    s = a_chief_series(V, automorphism_group(V))
    assert s.length == 1
    s.validate()
    s2 = a_chief_series(V, inner_automorphisms(V))
    assert s2.length == 2
    s2.validate()


def test_chief_series_s3():
    S3 = sym(3)
    s = a_chief_series(S3, inner_automorphisms(S3))
    assert s.length == 2
    assert [t.order for t in s.terms] == [6, 3, 1]
    s.validate()


def test_chief_series_s4():
    S4 = sym(4)
    s = a_chief_series(S4, inner_automorphisms(S4))
    assert [t.order for t in s.terms] == [24, 12, 4, 1]
    s.validate()


def test_chief_length_additivity():
    # l_A(G) = l_A(G/N) + l_{A|N}(N) for A-invariant N
    from kroncover.autgroup import induce

    for G in [sym(3), sym(4), klein_four()]:
        A = inner_automorphisms(G)
        total = chief_length(G, A)
        for N in minimal_a_invariant_subgroups(G, A):
            Q, q = G.quotient(N)
            AQ = induce(A, N, q)
            AN = restrict(A, N)
            assert chief_length(Q, AQ) + chief_length(N, AN) == total


def test_chief_length_antitone_in_aut_group():
    V = klein_four()
    mids = intermediate_aut_groups(V)
    lengths = {A.inn_index: chief_length(V, A) for A in mids}
    assert lengths[1] == 2 and lengths[6] == 1
    # larger A never refines more
    for A in mids:
        for B in mids:
            if set(A.tables()) <= set(B.tables()):
                assert chief_length(V, B) <= chief_length(V, A)


def test_chief_length_monotone_under_restriction():
    # l_{A|N}(N) <= l_A(G), equality iff N = G
    G = sym(4)
    A = inner_automorphisms(G)
    total = chief_length(G, A)
    d = dense(G)
    for rep in subgroup_class_reps(G):
        N = d.mask_to_group(rep)
        if not is_a_invariant(N, A):
            continue
        lN = chief_length(N, restrict(A, N))
        assert lN <= total
        assert (lN == total) == (N.order == G.order)
