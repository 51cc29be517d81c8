"""Automorphisms and automorphism groups.

An automorphism of a cached group is stored as a permutation of the group's
element indices (its full element table).  Aut(G) is found by backtracking
over images of a small generating sequence, with candidates filtered by
(element order, conjugacy class size, root count) fingerprints.
"""

from __future__ import annotations

import random

from . import perm
from .group import CapExceeded, Epimorphism, NotSubgroupError, PermGroup
from .lattice import (
    SUBGROUP_ENUM_CAP,
    Dense,
    all_subgroup_masks,
    dense,
    iter_bits,
)
from .perm import Perm

AUT_ORDER_CAP = 1024  # |G| cap for the Aut backtracking search
AUT_ENUM_CAP = 25_000  # max automorphisms enumerated exhaustively
AUT_SEARCH_NODE_CAP = 500_000  # partial-map extensions before the search refuses
FULL_VERIFY_CAP = 2_000  # |G| up to which new tables get the all-pairs check
_SAMPLE_PAIRS = 2_000

Table = tuple[int, ...]


class NotInvariantError(ValueError):
    """A subgroup claimed A-invariant is moved by some member; carries a witness."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class Automorphism:
    """A verified automorphism of a fixed group, as an element-index table."""

    __slots__ = ("group", "table", "_dense")

    def __init__(self, group: PermGroup, table: Table, *, verify: bool = True):
        d = dense(group)
        self.group = group
        self._dense = d
        self.table = tuple(table)
        if verify:
            _verify_table(d, self.table)

    def __call__(self, p: Perm) -> Perm:
        d = self._dense
        return d.elements[self.table[d.index[p]]]

    def __eq__(self, other):
        return (
            isinstance(other, Automorphism)
            and self.group is other.group
            and self.table == other.table
        )

    def __hash__(self):
        return hash((id(self.group), self.table))

    def __repr__(self):
        gens = self.group.generators
        pairs = ", ".join(
            f"{perm.format_cycles(g)} -> {perm.format_cycles(self(g))}" for g in gens
        )
        return f"<Automorphism [{pairs or 'id'}]>"

    def generator_images(self) -> tuple[Perm, ...]:
        return tuple(self(g) for g in self.group.generators)

    def compose(self, other: "Automorphism") -> "Automorphism":
        """self followed by other."""
        if self.group is not other.group:
            raise ValueError("automorphisms of different groups")
        t = tuple(other.table[x] for x in self.table)
        return Automorphism(self.group, t, verify=False)

    def inverse(self) -> "Automorphism":
        return Automorphism(self.group, perm.inverse(self.table), verify=False)

    def is_identity(self) -> bool:
        return perm.is_identity(self.table)


def conjugation(G: PermGroup, g: Perm) -> Automorphism:
    """The inner automorphism x -> g^-1 x g."""
    if not G.contains(g):
        raise NotSubgroupError("conjugating element not in group")
    d = dense(G)
    gi = perm.inverse(g)
    table = tuple(
        d.index[perm.mult(perm.mult(gi, x), g)] for x in d.elements
    )
    return Automorphism(G, table, verify=False)


class AutGroup:
    """A group of automorphisms of a fixed base group.

    Holds generators; the full table list is enumerated on demand (up to
    ``enum_cap``).  ``order_hint`` supports structurally-known groups too
    large to enumerate, e.g. wreath-type automorphism groups of powers.
    """

    def __init__(
        self,
        base_group: PermGroup,
        generators: list[Automorphism],
        *,
        contains_inner: bool,
        elements: list[Table] | None = None,
        order_hint: int | None = None,
        enum_cap: int = AUT_ENUM_CAP,
        name: str | None = None,
    ):
        self.base_group = base_group
        self.generators = list(generators)
        self.contains_inner = contains_inner
        self.name = name
        self._enum_cap = enum_cap
        self._order_hint = order_hint
        self._tables: tuple[Table, ...] | None = (
            tuple(sorted(elements)) if elements is not None else None
        )
        self._inn_order: int | None = None

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        try:
            o = self.order
        except CapExceeded:
            o = "?"
        return f"<AutGroup{label} of {self.base_group!r} order={o}>"

    def generator_tables(self) -> list[Table]:
        return [a.table for a in self.generators]

    def tables(self) -> tuple[Table, ...]:
        """All element tables, sorted; enumerated by closure, capped."""
        if self._tables is None:
            n = len(dense(self.base_group).elements)
            ident = tuple(range(n))
            seen = {ident}
            frontier = [ident]
            gens = self.generator_tables()
            while frontier:
                nxt = []
                for t in frontier:
                    for g in gens:
                        u = tuple(g[x] for x in t)
                        if u not in seen:
                            if len(seen) >= self._enum_cap:
                                raise CapExceeded(
                                    f"automorphism enumeration exceeds cap {self._enum_cap}"
                                )
                            seen.add(u)
                            nxt.append(u)
                frontier = nxt
            self._tables = tuple(sorted(seen))
        return self._tables

    def automorphisms(self) -> list[Automorphism]:
        return [Automorphism(self.base_group, t, verify=False) for t in self.tables()]

    @property
    def order(self) -> int:
        if self._tables is not None:
            return len(self._tables)
        if self._order_hint is not None:
            return self._order_hint
        return len(self.tables())

    def contains_table(self, t: Table) -> bool:
        return t in set(self.tables())

    @property
    def inn_order(self) -> int:
        if self._inn_order is None:
            G = self.base_group
            self._inn_order = G.order // G.center().order
        return self._inn_order

    @property
    def inn_index(self) -> int:
        q, r = divmod(self.order, self.inn_order)
        if r:
            raise AssertionError("Inn order does not divide |A|; inner check failed")
        return q

    def key(self) -> tuple:
        """Deterministic identity for sorting/reporting."""
        if self._tables is not None:
            return (self.order, self._tables[:2])
        return (self.order, tuple(sorted(self.generator_tables()))[:2])


def inner_automorphisms(G: PermGroup) -> AutGroup:
    """Inn(G), generated by conjugation by G's generators."""
    gens = [conjugation(G, g) for g in G.generators]
    order = G.order // G.center().order
    return AutGroup(
        G,
        [a for a in gens if not a.is_identity()],
        contains_inner=True,
        order_hint=order,
        name="Inn",
    )


def automorphism_group(
    G: PermGroup,
    *,
    order_cap: int = AUT_ORDER_CAP,
    enum_cap: int = AUT_ENUM_CAP,
) -> AutGroup:
    """The full Aut(G) by backtracking over generator images.

    Refused when |G| exceeds ``order_cap`` or more than ``enum_cap``
    automorphisms exist.
    """
    if G.order > order_cap:
        raise CapExceeded(f"|G| = {G.order} exceeds automorphism order cap {order_cap}")
    d = dense(G)
    tables = _isomorphism_tables(d, d, max_count=enum_cap + 1)
    if len(tables) > enum_cap:
        raise CapExceeded(f"|Aut(G)| exceeds enumeration cap {enum_cap}")
    autos = [Automorphism(G, t, verify=True) for t in sorted(tables)]
    gens = _reduce_aut_generators(autos)
    return AutGroup(
        G,
        gens,
        contains_inner=True,
        elements=[a.table for a in autos],
        name="Aut",
    )


def isomorphisms(G: PermGroup, H: PermGroup, *, max_count: int | None = None):
    """All isomorphism tables G -> H (index maps), or up to max_count."""
    if G.order != H.order:
        return []
    return _isomorphism_tables(dense(G), dense(H), max_count=max_count)


def are_isomorphic(G: PermGroup, H: PermGroup) -> bool:
    return G.order == H.order and bool(
        _isomorphism_tables(dense(G), dense(H), max_count=1)
    )


def intermediate_aut_groups(
    G: PermGroup,
    *,
    order_cap: int = AUT_ORDER_CAP,
    enum_cap: int = AUT_ENUM_CAP,
    subgroup_cap: int = SUBGROUP_ENUM_CAP,
) -> list[AutGroup]:
    """All A with Inn(G) <= A <= Aut(G), as lifts of subgroups of Out(G).

    Refused (CapExceeded) when Aut is too large to enumerate, cache or
    lattice caps are hit.
    """
    A = automorphism_group(G, order_cap=order_cap, enum_cap=enum_cap)
    d = dense(G)
    inn_tables = sorted(
        {conjugation(G, g).table for g in d.elements}
    )
    out_order = len(A.tables()) // len(inn_tables)
    if out_order > subgroup_cap:
        raise CapExceeded(
            f"|Out(G)| = {out_order} exceeds subgroup enumeration cap "
            f"{subgroup_cap}; restrict the run or raise the cap"
        )
    aut_perm = PermGroup(d.n, A.tables(), name="AutP")
    inn_perm = aut_perm.subgroup(inn_tables, name="InnP")
    Q, f = aut_perm.quotient(inn_perm)
    dQ = dense(Q)
    out = []
    for mask in all_subgroup_masks(Q, cap=subgroup_cap):
        sub_elements = dQ.mask_elements(mask)
        lifted = f.preimage(sub_elements)
        autos = [Automorphism(G, t, verify=False) for t in lifted]
        out.append(
            AutGroup(
                G,
                _reduce_aut_generators(autos),
                contains_inner=True,
                elements=lifted,
            )
        )
    out.sort(key=lambda a: a.key())
    return out


def restrict(A: AutGroup, N: PermGroup) -> AutGroup:
    """A|_N for an A-invariant subgroup N <= G."""
    G = A.base_group
    if not G.is_subgroup(N):
        raise NotSubgroupError("N is not a subgroup of the base group")
    for a in A.generators:
        for x in N.generators:
            if not N.contains(a(x)):
                raise NotInvariantError(
                    "subgroup is not invariant under the automorphism group",
                    witness=a,
                )
    dN = dense(N)
    gens = []
    for a in A.generators:
        table = tuple(dN.index[a(x)] for x in dN.elements)
        gens.append(Automorphism(N, table, verify=False))
    return AutGroup(
        N,
        [a for a in gens if not a.is_identity()],
        contains_inner=A.contains_inner,
        name=(f"{A.name}|N" if A.name else None),
    )


def induce(A: AutGroup, N: PermGroup, q: Epimorphism) -> AutGroup:
    """A|_{G/N}: the automorphisms induced on the quotient along q."""
    G = A.base_group
    if q.source is not G:
        raise ValueError("epimorphism source is not the base group of A")
    Q = q.target
    dQ = dense(Q)
    gens = []
    for a in A.generators:
        table: list[int] = [-1] * dQ.n
        for x in G.elements():
            src = dQ.index[q(x)]
            dst = dQ.index[q(a(x))]
            if table[src] == -1:
                table[src] = dst
            elif table[src] != dst:
                raise NotInvariantError(
                    "kernel of the quotient map is not invariant", witness=a
                )
        gens.append(Automorphism(Q, tuple(table), verify=False))
    induced = AutGroup(
        Q,
        [a for a in gens if not a.is_identity()],
        contains_inner=A.contains_inner,
        name=(f"{A.name}|Q" if A.name else None),
    )
    if A.contains_inner:
        # Inn(G) maps onto Inn(G/N); sanity-check on quotient generators
        tabset = set(induced.tables())
        for g in Q.generators:
            if conjugation(Q, g).table not in tabset:
                raise AssertionError("induced group misses an inner automorphism")
    return induced


# -- backtracking search ----------------------------------------------------


def _fingerprints(d: Dense) -> list[tuple]:
    sizes = d.class_size_of()
    nroots: dict[int, int] = {}
    power_maps = {}
    for p in {2, 3, 5, 7}:
        pm = [0] * d.n
        for i in range(d.n):
            j = i
            for _ in range(p - 1):
                j = d.mul(j, i)
            pm[i] = j
        power_maps[p] = pm
        for i in range(d.n):
            nroots[(p, pm[i])] = nroots.get((p, pm[i]), 0) + 1
    fps = []
    for i in range(d.n):
        fps.append(
            (
                d.order_of(i),
                sizes[i],
                tuple(nroots.get((p, i), 0) for p in (2, 3, 5, 7)),
            )
        )
    # refine once: append the fingerprint of small powers
    refined = []
    for i in range(d.n):
        refined.append(
            fps[i] + tuple(fps[power_maps[p][i]][:2] for p in (2, 3, 5, 7))
        )
    return refined


def _generating_indices(d: Dense) -> list[int]:
    """Greedy generating sequence maximizing closure growth (deterministic)."""
    chosen: list[int] = []
    current = 1 << d.identity_index
    while current != d.full_mask:
        best_i = -1
        best_size = -1
        for i in range(d.n):
            if (current >> i) & 1:
                continue
            size = d.closure_mask(current, [i]).bit_count()
            if size > best_size:
                best_size = size
                best_i = i
        chosen.append(best_i)
        current = d.closure_mask(current, [best_i])
    return chosen


def _extend_partial(dG: Dense, dH: Dense, pairs):
    """Grow the partial map determined by generator pairs; None on conflict.

    Checks every (element, generator) product, so a successful extension is
    multiplicative and injective on the subgroup generated so far.
    """
    n = dG.n
    mapping = [-1] * n
    used = [False] * dH.n
    mapping[dG.identity_index] = dH.identity_index
    used[dH.identity_index] = True
    queue = [dG.identity_index]
    mulG, mulH = dG.mul, dH.mul
    pos = 0
    while pos < len(queue):
        x = queue[pos]
        pos += 1
        y = mapping[x]
        for g, h in pairs:
            xg = mulG(x, g)
            yh = mulH(y, h)
            m = mapping[xg]
            if m == -1:
                if used[yh]:
                    return None
                mapping[xg] = yh
                used[yh] = True
                queue.append(xg)
            elif m != yh:
                return None
    return mapping, len(queue)


def _isomorphism_tables(
    dG: Dense,
    dH: Dense,
    *,
    max_count: int | None = None,
    node_cap: int = AUT_SEARCH_NODE_CAP,
):
    """All index tables of isomorphisms dG -> dH (backtracking DFS).

    Refuses (CapExceeded) after ``node_cap`` partial-map extensions, so
    groups whose fingerprints prune poorly (e.g. homocyclic 2-groups)
    fail fast instead of grinding for minutes.
    """
    if dG.n != dH.n:
        return []
    if dG.n == 1:
        return [(0,)]
    fpG = _fingerprints(dG)
    fpH = _fingerprints(dH)
    from collections import Counter

    if Counter(fpG) != Counter(fpH):
        return []
    gens = _generating_indices(dG)
    cands = []
    for g in gens:
        cands.append([h for h in range(dH.n) if fpH[h] == fpG[g]])
    results: list[Table] = []
    nodes = 0

    def dfs(level: int, pairs):
        nonlocal nodes
        if max_count is not None and len(results) >= max_count:
            return
        if level == len(gens):
            ext = _extend_partial(dG, dH, pairs)
            assert ext is not None and ext[1] == dG.n
            results.append(tuple(ext[0]))
            return
        g = gens[level]
        for h in cands[level]:
            nodes += 1
            if nodes > node_cap:
                raise CapExceeded(
                    f"isomorphism search exceeded {node_cap} extension steps"
                )
            trial = pairs + [(g, h)]
            ext = _extend_partial(dG, dH, trial)
            if ext is None:
                continue
            dfs(level + 1, trial)
            if max_count is not None and len(results) >= max_count:
                return

    dfs(0, [])
    return results


def _reduce_aut_generators(autos: list[Automorphism]) -> list[Automorphism]:
    """Small generating set for an explicitly listed automorphism group."""
    if not autos:
        return []
    n = len(autos[0].table)
    target = {a.table for a in autos}
    gens: list[Automorphism] = []
    have: set[Table] = {tuple(range(n))}
    for a in sorted(autos, key=lambda a: a.table):
        if a.table in have:
            continue
        gens.append(a)
        # closure of current gens
        have = {tuple(range(n))}
        frontier = [tuple(range(n))]
        gtabs = [g.table for g in gens]
        while frontier:
            nxt = []
            for t in frontier:
                for gt in gtabs:
                    u = tuple(gt[x] for x in t)
                    if u not in have:
                        have.add(u)
                        nxt.append(u)
            frontier = nxt
        if len(have) == len(target):
            break
    return gens


def _verify_table(d: Dense, table: Table) -> None:
    """Check bijectivity and multiplicativity (full below FULL_VERIFY_CAP,
    seeded sample beyond)."""
    n = d.n
    if len(table) != n or not perm.is_perm(table):
        raise ValueError("automorphism table is not a bijection on element indices")
    if table[d.identity_index] != d.identity_index:
        raise ValueError("automorphism does not fix the identity")
    mul = d.mul
    if n <= FULL_VERIFY_CAP:
        pair_iter = ((x, y) for x in range(n) for y in range(n))
    else:
        rng = random.Random(0xC0FFEE ^ n)
        pair_iter = (
            (rng.randrange(n), rng.randrange(n)) for _ in range(_SAMPLE_PAIRS)
        )
    for x, y in pair_iter:
        if table[mul(x, y)] != mul(table[x], table[y]):
            raise ValueError(f"map is not multiplicative at pair ({x}, {y})")
