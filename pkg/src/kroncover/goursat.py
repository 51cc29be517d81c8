"""Structure of subgroups of a power T^k of a nonabelian simple group:
support subgroups, diagonal subgroups, decomposition into diagonal products,
and the block-structure report for covering diagnostics.

Factor indices are 0-based throughout, matching the point convention.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial

from . import perm
from .autgroup import AutGroup, Automorphism, automorphism_group
from .covering import covers, is_a_invariant, minimal_a_invariant_subgroups
from .group import NotSubgroupError, PermGroup
from .lattice import dense


class PowerStructure:
    """T^k realized on k disjoint copies of T's point set."""

    def __init__(self, T: PermGroup, k: int):
        if k < 1:
            raise ValueError("copy count must be positive")
        if T.is_abelian():
            raise ValueError("base of a power structure must be nonabelian")
        self.T = T
        self.k = k
        self.block = T.degree
        gens = [self.embed(g, i) for i in range(k) for g in T.generators]
        self.product = PermGroup(
            T.degree * k, gens, name=f"{T.name or 'T'}^{k}"
        )
        assert self.product.order == T.order**k

    def embed(self, x: perm.Perm, i: int) -> perm.Perm:
        """The i-th factor embedding T -> T^k applied to x."""
        self._check_factor(i)
        d = self.block
        q = list(range(d * self.k))
        for t in range(d):
            q[i * d + t] = x[t] + i * d
        return tuple(q)

    def project(self, p: perm.Perm, i: int) -> perm.Perm:
        """The i-th coordinate of an element of T^k, as an element of T."""
        self._check_factor(i)
        d = self.block
        return tuple(p[i * d + t] - i * d for t in range(d))

    def factor(self, i: int) -> PermGroup:
        """The i-th simple factor, as a subgroup of the product."""
        self._check_factor(i)
        return self.product.subgroup(
            [self.embed(g, i) for g in self.T.generators]
        )

    def assemble(self, coords: dict[int, perm.Perm]) -> perm.Perm:
        """Element of T^k with the given coordinates, identity elsewhere."""
        d = self.block
        q = list(range(d * self.k))
        for i, x in coords.items():
            self._check_factor(i)
            for t in range(d):
                q[i * d + t] = x[t] + i * d
        return tuple(q)

    def _check_factor(self, i: int) -> None:
        if not 0 <= i < self.k:
            raise ValueError(f"factor index {i} out of range for k={self.k}")

    def __repr__(self):
        return f"<PowerStructure {self.T.name or 'T'}^{self.k}>"


def support_subgroup(P: PowerStructure, delta) -> PermGroup:
    """T_delta: elements whose coordinates outside delta are the identity."""
    idx = sorted(set(delta))
    for i in idx:
        P._check_factor(i)
    gens = [P.embed(g, i) for i in idx for g in P.T.generators]
    H = P.product.subgroup(gens)
    assert H.order == P.T.order ** len(idx)
    return H


def projection_full(U: PermGroup, P: PowerStructure, i: int) -> bool:
    """True iff the i-th coordinate projection of U is all of T."""
    if not P.product.is_subgroup(U):
        raise NotSubgroupError("U is not a subgroup of the power")
    img = PermGroup(P.T.degree, [P.project(g, i) for g in U.generators])
    return img.order == P.T.order


def _projection_subgroup(U: PermGroup, P: PowerStructure, idx) -> PermGroup:
    """Image of U under projection onto the coordinates in idx, embedded
    back into T^k (identity outside idx)."""
    gens = [
        P.assemble({i: P.project(g, i) for i in idx}) for g in U.generators
    ]
    return P.product.subgroup(gens)


def is_diagonal(H: PermGroup, P: PowerStructure, delta):
    """If H is a full diagonal subgroup of T_delta, the witnessing
    automorphism tuple (phi_i)_{i in delta}, normalized so the smallest
    index carries the identity; otherwise None.
    """
    idx = sorted(set(delta))
    if not idx:
        raise ValueError("empty support")
    support = support_subgroup(P, idx)
    if not support.is_subgroup(H):
        raise NotSubgroupError("H is not inside the support subgroup")
    if H.order != P.T.order:
        return None
    dT = dense(P.T)
    anchor = idx[0]
    elements = H.elements()
    anchor_images = [P.project(h, anchor) for h in elements]
    if len(set(anchor_images)) != dT.n:
        return None  # anchor projection not bijective onto T
    tables = {i: [None] * dT.n for i in idx}
    for h, a in zip(elements, anchor_images):
        ai = dT.index[a]
        for i in idx:
            x = P.project(h, i)
            if x not in dT.index:
                return None
            tables[i][ai] = dT.index[x]
    maps = []
    for i in idx:
        t = tables[i]
        if len(set(t)) != dT.n:
            return None  # some coordinate projection is not bijective
        maps.append(Automorphism(P.T, tuple(t)))
    return tuple(maps)


@dataclass
class GoursatDecomposition:
    """A subgroup of T^k written as a product of full diagonal subgroups
    D_1 x ... x D_t over a partition of the coordinates."""

    power: PowerStructure
    subgroup: PermGroup
    partition: list[tuple[int, ...]]
    diagonals: list[PermGroup]
    maps: list[tuple[Automorphism, ...]]

    @property
    def t(self) -> int:
        return len(self.partition)

    def validate(self) -> None:
        flat = sorted(i for part in self.partition for i in part)
        assert flat == list(range(self.power.k))
        order = 1
        for part, D, tup in zip(self.partition, self.diagonals, self.maps):
            assert D.order == self.power.T.order
            assert len(tup) == len(part)
            assert tup[0].is_identity()
            assert support_subgroup(self.power, part).is_subgroup(D)
            for x in self.power.T.generators:
                e = self.power.assemble(
                    {i: phi(x) for i, phi in zip(part, tup)}
                )
                assert D.contains(e)
                assert self.subgroup.contains(e)
            order *= D.order
        assert order == self.subgroup.order


def goursat_decompose(U: PermGroup, P: PowerStructure):
    """Decompose U <= T^k with all coordinate projections full into a product
    of diagonal subgroups, or return None if it has no such shape.

    Coordinates i, j land in the same part exactly when the (i, j) projection
    of U is proper in T x T (hence a diagonal, T being simple).
    """
    if not P.product.is_subgroup(U):
        raise NotSubgroupError("U is not a subgroup of the power")
    for i in range(P.k):
        if not projection_full(U, P, i):
            raise ValueError(f"projection onto factor {i} is not full")
    parent = list(range(P.k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    t_sq = P.T.order ** 2
    for i in range(P.k):
        for j in range(i + 1, P.k):
            if find(i) == find(j):
                continue
            img = _projection_subgroup(U, P, (i, j))
            if img.order < t_sq:
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(P.k):
        groups.setdefault(find(i), []).append(i)
    partition = sorted(tuple(sorted(v)) for v in groups.values())
    diagonals = []
    maps = []
    for part in partition:
        D = _projection_subgroup(U, P, part)
        tup = is_diagonal(D, P, part)
        if tup is None:
            return None
        diagonals.append(D)
        maps.append(tup)
    if U.order != P.T.order ** len(partition):
        return None
    return GoursatDecomposition(
        power=P,
        subgroup=U,
        partition=list(partition),
        diagonals=diagonals,
        maps=maps,
    )


def diagonal_product(P: PowerStructure, partition, maps) -> PermGroup:
    """Construct D_1 x ... x D_t from a partition and automorphism tuples.

    ``maps[i]`` gives, for each coordinate of ``partition[i]``, the
    automorphism of T applied in that coordinate.
    """
    parts = [tuple(p) for p in partition]
    flat = sorted(i for part in parts for i in part)
    if flat != list(range(P.k)):
        raise ValueError("not a partition of the coordinates")
    gens = []
    for part, tup in zip(parts, maps):
        if len(tup) != len(part):
            raise ValueError("one map per coordinate required")
        for x in P.T.generators:
            gens.append(P.assemble({i: phi(x) for i, phi in zip(part, tup)}))
    return P.product.subgroup(gens)


def normalize_maps(tup):
    """Rewrite an automorphism tuple so its first entry is the identity,
    describing the same diagonal subgroup."""
    inv = tup[0].inverse()
    return tuple(inv.compose(phi) for phi in tup)


def aut_class_count(T: PermGroup) -> int:
    """Number of orbits of Aut(T) on the elements of T."""
    A = automorphism_group(T)
    d = dense(T)
    gens = A.generator_tables()
    seen = 0
    count = 0
    for i in range(d.n):
        if (seen >> i) & 1:
            continue
        count += 1
        frontier = [i]
        seen |= 1 << i
        while frontier:
            nxt = []
            for x in frontier:
                for t in gens:
                    y = t[x]
                    if not (seen >> y) & 1:
                        seen |= 1 << y
                        nxt.append(y)
            frontier = nxt
    return count


def power_aut_group(P: PowerStructure) -> AutGroup:
    """Aut(T^k) = Aut(T) wr Sym(k) for nonabelian simple T, as an AutGroup
    on the product (needs the product's element list to fit the cache)."""
    G = P.product
    d = dense(G)
    AT = automorphism_group(P.T)
    gens = []

    def table_of(fn):
        return tuple(d.index[fn(x)] for x in d.elements)

    for phi in AT.generators:
        def apply_first(x, phi=phi):
            coords = {i: P.project(x, i) for i in range(P.k)}
            coords[0] = phi(coords[0])
            return P.assemble(coords)

        gens.append(Automorphism(G, table_of(apply_first)))
    if P.k > 1:
        for sigma in _coordinate_perm_gens(P.k):
            def permute(x, sigma=sigma):
                return P.assemble(
                    {sigma[i]: P.project(x, i) for i in range(P.k)}
                )

            gens.append(Automorphism(G, table_of(permute)))
    return AutGroup(
        G,
        gens,
        contains_inner=True,
        order_hint=AT.order**P.k * factorial(P.k),
        name=f"Aut({G.name})",
    )


def _coordinate_perm_gens(k: int):
    gens = [tuple([1, 0] + list(range(2, k)))]
    if k > 2:
        gens.append(tuple(list(range(1, k)) + [0]))
    return gens


@dataclass
class BlockReport:
    """G-orbit block structure on the simple factors of a minimal subgroup
    L = T^k, with the three diagnostic inequalities."""

    r: int  # number of G-orbits on the factors
    s: int  # common orbit size, k = r*s
    m: int  # Aut(T)-class count of T
    k: int
    n: int  # index of the inner automorphisms in A
    blocks: list[tuple[int, ...]]
    inequalities: dict[str, bool] = field(default_factory=dict)
    flagged: bool = False  # relaxed mode: not a verified covering instance

    def all_hold(self) -> bool:
        return all(self.inequalities.values())


def block_report(
    G: PermGroup,
    U: PermGroup,
    A: AutGroup,
    P: PowerStructure,
    *,
    relaxed: bool = False,
) -> BlockReport:
    """Orbit structure of G on the simple factors of L = T^k together with
    the inequalities r <= n, m <= r, s <= r.

    Strict mode demands a genuine instance: L a minimal A-invariant subgroup,
    G = UL, U meet L proper in L, and U covering under A.  ``relaxed`` skips
    the covering and minimality checks for synthetic diagnostics; the result
    is then flagged.
    """
    L = P.product
    if P.T.is_abelian():
        raise ValueError("abelian L handled by the n-bound, not block analysis")
    if not G.is_subgroup(L):
        raise NotSubgroupError("L is not a subgroup of G")
    if not G.is_subgroup(U):
        raise NotSubgroupError("U is not a subgroup of G")
    if A.base_group is not G:
        raise ValueError("A is not an automorphism group of G")
    if not is_a_invariant(L, A):
        raise ValueError("L is not A-invariant")
    meet = [x for x in U.elements() if L.contains(x)]
    meet_order = len(meet)
    if meet_order == L.order:
        raise ValueError("U contains L: degenerate branch")
    if U.order * L.order != G.order * meet_order:
        raise ValueError("G = UL fails")
    if not relaxed:
        if not any(
            M.order == L.order and all(M.contains(g) for g in L.generators)
            for M in minimal_a_invariant_subgroups(G, A)
        ):
            raise ValueError("L is not a minimal A-invariant subgroup")
        if not covers(U, A).covered:
            raise ValueError("U does not cover under A: not an instance")
    # G permutes the k simple factors of L by conjugation
    factors = [P.factor(i) for i in range(P.k)]
    probes = []
    for F in factors:
        x = next(e for e in F.generators if not perm.is_identity(e))
        probes.append(x)

    def image_factor(i: int, g: perm.Perm) -> int:
        y = perm.conjugate(probes[i], g)
        for j in range(P.k):
            if factors[j].contains(y):
                return j
        raise AssertionError("conjugation does not permute the factors")

    seen = set()
    blocks = []
    for i in range(P.k):
        if i in seen:
            continue
        orbit = {i}
        frontier = [i]
        while frontier:
            nxt = []
            for x in frontier:
                for g in G.generators:
                    j = image_factor(x, g)
                    if j not in orbit:
                        orbit.add(j)
                        nxt.append(j)
            frontier = nxt
        seen |= orbit
        blocks.append(tuple(sorted(orbit)))
    blocks.sort()
    sizes = {len(b) for b in blocks}
    if len(sizes) != 1:
        raise ValueError("factor orbits have unequal sizes")
    r = len(blocks)
    s = P.k // r
    m = aut_class_count(P.T)
    n = A.inn_index
    return BlockReport(
        r=r,
        s=s,
        m=m,
        k=P.k,
        n=n,
        blocks=blocks,
        inequalities={"r<=n": r <= n, "m<=r": m <= r, "s<=r": s <= r},
        flagged=relaxed,
    )
