import pytest

from kroncover import perm
from kroncover.group import (
    CapExceeded,
    NotNormalError,
    NotSubgroupError,
    PermGroup,
)


def cyc(s, degree):
    return perm.parse_cycles(s, degree)


def klein_four():
    return PermGroup(4, [cyc("(0 1)(2 3)", 4), cyc("(0 2)(1 3)", 4)], name="V4")


def sym(n):
    gens = [cyc("(0 1)", n), cyc("(" + " ".join(map(str, range(n))) + ")", n)]
    if n == 2:
        gens = gens[:1]
    return PermGroup(n, gens, name=f"S{n}")


def alt5():
    return PermGroup(5, [cyc("(0 1 2 3 4)", 5), cyc("(0 1 2)", 5)], name="A5")


# exhaustive closure oracle, independent of the stabilizer chain
def brute_order(G):
    seen = {G.identity()}
    frontier = [G.identity()]
    while frontier:
        nxt = []
        for x in frontier:
            for g in G.generators:
                y = perm.mult(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return len(seen)


@pytest.mark.parametrize(
    "builder,expected",
    [
        (klein_four, 4),
        (lambda: PermGroup(5, []), 1),
        (alt5, 60),
        (lambda: sym(4), 24),
        (lambda: sym(6), 720),
    ],
)
def test_order_matches_brute_force(builder, expected):
    G = builder()
    assert G.order == expected
    assert brute_order(G) == expected


def test_rejects_malformed_generator():
    with pytest.raises(ValueError):
        PermGroup(3, [(0, 0, 1)])
    with pytest.raises(ValueError):
        PermGroup(3, [(0, 1)])


def test_contains():
    V = klein_four()
    assert V.contains(cyc("(0 1)(2 3)", 4))
    assert not V.contains(cyc("(0 1)", 4))
    assert V.contains(V.identity())
    with pytest.raises(ValueError):
        V.contains((0, 1, 2))


def test_elements_sorted_and_complete():
    V = klein_four()
    els = V.elements()
    assert len(els) == 4
    assert list(els) == sorted(els)
    G = PermGroup(15, [cyc("(0 1 2 3 4)(5 6 7 8 9)(10 11 12 13 14)", 15)])
    assert G.order == 5
    big = PermGroup(
        10,
        [
            cyc("(0 1 2 3 4)", 10),
            cyc("(0 1 2)", 10),
            cyc("(5 6 7 8 9)", 10),
            cyc("(5 6 7)", 10),
        ],
    )
    assert big.order == 3600
    assert len(big.elements()) == 3600


def test_element_cap():
    # Sym(8) has order 40320 > cap
    G = sym(8)
    with pytest.raises(CapExceeded):
        G.elements()


def test_index():
    A = alt5()
    stab = A.subgroup([cyc("(1 2 3)", 5), cyc("(1 2)(3 4)", 5)])
    assert stab.order == 12
    assert A.index(stab) == 5
    assert A.index(A) == 1
    V = klein_four()
    assert V.index(V.subgroup([cyc("(0 1)(2 3)", 4)])) == 2
    with pytest.raises(NotSubgroupError):
        V.index(PermGroup(4, [cyc("(0 1)", 4)]))


def test_index_multiplicative():
    S = sym(4)
    A4 = S.subgroup([cyc("(0 1 2)", 4), cyc("(1 2 3)", 4)])
    V = S.subgroup([cyc("(0 1)(2 3)", 4), cyc("(0 2)(1 3)", 4)])
    assert S.index(V) == S.index(A4) * A4.index(V)


def test_center():
    S3 = sym(3)
    assert S3.center().order == 1
    V = klein_four()
    assert V.center().order == 4
    D4 = PermGroup(4, [cyc("(0 1 2 3)", 4), cyc("(0 2)", 4)], name="D8")
    assert D4.order == 8
    assert D4.center().order == 2


def test_normal_closure():
    S3 = sym(3)
    A3 = S3.normal_closure([cyc("(0 1 2)", 3)])
    assert A3.order == 3
    whole = S3.normal_closure([cyc("(0 1)", 3)])
    assert whole.order == 6


def test_derived_subgroup():
    assert sym(3).derived_subgroup().order == 3
    assert sym(4).derived_subgroup().order == 12
    assert klein_four().derived_subgroup().order == 1
    assert alt5().derived_subgroup().order == 60


def test_quotient_s3():
    S3 = sym(3)
    A3 = S3.subgroup([cyc("(0 1 2)", 3)])
    Q, f = S3.quotient(A3)
    assert Q.order == 2
    assert Q.degree == 2
    assert f.kernel().order == 3
    assert f.check_homomorphism()


def test_quotient_trivial_and_a4():
    V = klein_four()
    Q, f = V.quotient(V)
    assert Q.order == 1
    A4 = PermGroup(4, [cyc("(0 1 2)", 4), cyc("(0 1)(2 3)", 4)], name="A4")
    assert A4.order == 12
    V_in = A4.subgroup([cyc("(0 1)(2 3)", 4), cyc("(0 2)(1 3)", 4)])
    Q, f = A4.quotient(V_in)
    assert Q.order == 3
    assert f.kernel().elements() == V_in.elements()


def test_quotient_rejects_non_normal():
    S3 = sym(3)
    C2 = S3.subgroup([cyc("(0 1)", 3)])
    with pytest.raises(NotNormalError) as ei:
        S3.quotient(C2)
    x, g = ei.value.witness
    assert C2.contains(x) and S3.contains(g)
    assert not C2.contains(perm.conjugate(x, g))


def test_is_normal_witness():
    A = alt5()
    stab = A.subgroup([cyc("(1 2 3)", 5), cyc("(1 2)(3 4)", 5)])
    assert not A.is_normal(stab)
    assert A.is_normal(A)
