"""Invariant structure under an automorphism group: cores, cocores, covering
tests, minimal invariant subgroups and chief series."""

from __future__ import annotations

from dataclasses import dataclass, field

from .autgroup import AutGroup, induce
from .group import NotSubgroupError, PermGroup, _reduce_generators
from .lattice import dense, iter_bits
from .perm import Perm


def _orbit_masks(U_mask: int, gen_tables, d) -> list[int]:
    """Orbit of a subgroup mask under the automorphism generators."""
    orbit = {U_mask}
    frontier = [U_mask]
    while frontier:
        nxt = []
        for m in frontier:
            for t in gen_tables:
                im = d.apply_index_perm(t, m)
                if im not in orbit:
                    orbit.add(im)
                    nxt.append(im)
        frontier = nxt
    return sorted(orbit)


def _require_subgroup(U: PermGroup, A: AutGroup) -> None:
    if not A.base_group.is_subgroup(U):
        raise NotSubgroupError("U is not a subgroup of the base group of A")


def a_core(U: PermGroup, A: AutGroup) -> PermGroup:
    """The largest A-invariant subgroup of U: the intersection of its A-orbit."""
    _require_subgroup(U, A)
    d = dense(A.base_group)
    mask = d.subgroup_mask(U)
    inter = d.full_mask
    for m in _orbit_masks(mask, A.generator_tables(), d):
        inter &= m
    return d.mask_to_group(inter)


def a_cocore_mask(U: PermGroup, A: AutGroup) -> int:
    """Union of the A-orbit of U, as a mask over the base group's elements."""
    _require_subgroup(U, A)
    d = dense(A.base_group)
    mask = d.subgroup_mask(U)
    union = 0
    for m in _orbit_masks(mask, A.generator_tables(), d):
        union |= m
    return union


def is_a_invariant(H: PermGroup, A: AutGroup) -> bool:
    """True iff H^a = H for every a in A (checked on generators)."""
    _require_subgroup(H, A)
    return all(H.contains(a(x)) for a in A.generators for x in H.generators)


@dataclass
class CoveringInstance:
    """Outcome of testing whether the A-cocore of U is the whole group."""

    group: PermGroup
    subgroup: PermGroup
    aut_group: AutGroup
    covered: bool
    core_mask: int
    witness: Perm | None = None
    _core: PermGroup | None = field(default=None, repr=False)
    _c: int | None = field(default=None, repr=False)

    @property
    def n(self) -> int:
        return self.aut_group.inn_index

    @property
    def index(self) -> int:
        return self.group.index(self.subgroup)

    @property
    def core(self) -> PermGroup:
        """The A-core of U (built on demand; most callers never need it)."""
        if self._core is None:
            self._core = dense(self.group).mask_to_group(self.core_mask)
        return self._core

    @property
    def c(self) -> int:
        """Chief length of G modulo the core of U, under the induced group."""
        if self._c is None:
            Q, q = self.group.quotient(self.core)
            AQ = induce(self.aut_group, self.core, q)
            self._c = a_chief_series(Q, AQ, cross_check=False).length
        return self._c


def covers(U: PermGroup, A: AutGroup) -> CoveringInstance:
    """Test G = union of U^a over a in A; orbit-of-subgroups, then one union."""
    _require_subgroup(U, A)
    G = A.base_group
    d = dense(G)
    mask = d.subgroup_mask(U)
    gen_tables = A.generator_tables()
    union = 0
    inter = d.full_mask
    for m in _orbit_masks(mask, gen_tables, d):
        union |= m
        inter &= m
    covered = union == d.full_mask
    witness = None
    if not covered:
        missing = d.full_mask & ~union
        witness = d.elements[(missing & -missing).bit_length() - 1]
    return CoveringInstance(
        group=G,
        subgroup=U,
        aut_group=A,
        covered=covered,
        core_mask=inter,
        witness=witness,
    )


def minimal_a_invariant_subgroups(G: PermGroup, A: AutGroup) -> list[PermGroup]:
    """All minimal nontrivial A-invariant subgroups (A must contain Inn(G)).

    Each candidate is the A-closure of a prime-order cyclic subgroup; the
    inclusion-minimal ones survive.
    """
    if A.base_group is not G:
        raise ValueError("A is not an automorphism group of G")
    if not A.contains_inner:
        raise ValueError("A must contain the inner automorphisms")
    d = dense(G)
    if d.n == 1:
        return []
    gen_tables = A.generator_tables()
    # one seed per A-orbit of prime-order elements
    seen = 0
    closures: set[int] = set()
    for i in range(d.n):
        if (seen >> i) & 1 or i == d.identity_index:
            continue
        o = d.order_of(i)
        if not _is_prime(o):
            seen |= 1 << i
            continue
        orbit = 1 << i
        frontier = [i]
        while frontier:
            nxt = []
            for x in frontier:
                for t in gen_tables:
                    y = t[x]
                    if not (orbit >> y) & 1:
                        orbit |= 1 << y
                        nxt.append(y)
            frontier = nxt
        seen |= orbit
        closures.add(_a_closure(d, d.cyclic_mask(i), gen_tables))
    minimal = [
        m
        for m in closures
        if not any(other != m and other & m == other for other in closures)
    ]
    minimal.sort(key=lambda m: (m.bit_count(), m))
    return [d.mask_to_group(m) for m in minimal]


def _a_closure(d, mask: int, gen_tables) -> int:
    """Smallest subgroup containing ``mask`` closed under the given maps.

    Maintains a small generating set so each closure pass costs
    |result| * |gens| products instead of |result|^2.
    """
    ident = 1 << d.identity_index
    gens: list[int] = []
    current = ident
    for x in iter_bits(mask):
        if not (current >> x) & 1:
            gens.append(x)
            current = d.closure_mask(ident, gens)
    while True:
        grown = False
        for t in gen_tables:
            image = d.apply_index_perm(t, current)
            missing = image & ~current
            while missing:
                x = (missing & -missing).bit_length() - 1
                gens.append(x)
                current = d.closure_mask(ident, gens)
                missing = image & ~current
                grown = True
        if not grown:
            return current


@dataclass
class ChiefSeries:
    """An unrefinable descending A-invariant series G = G_0 > ... > G_c = 1."""

    group: PermGroup
    aut_group: AutGroup
    terms: list[PermGroup]
    length: int

    def validate(self) -> None:
        assert self.terms[0].order == self.group.order
        assert self.terms[-1].order == 1
        assert self.length == len(self.terms) - 1
        for H in self.terms:
            assert is_a_invariant(H, self.aut_group)
        for above, below in zip(self.terms, self.terms[1:]):
            assert above.is_subgroup(below) and above.order > below.order


def a_chief_series(G: PermGroup, A: AutGroup, *, cross_check: bool = True) -> ChiefSeries:
    """A chief series for G under A, built bottom-up through minimal
    A-invariant subgroups (smallest first, for determinism).

    With ``cross_check`` and several minimal choices available, a second
    series is built through a different choice and the lengths compared.
    """
    if A.base_group is not G:
        raise ValueError("A is not an automorphism group of G")
    if G.order == 1:
        return ChiefSeries(G, A, [G], 0)
    mins = minimal_a_invariant_subgroups(G, A)
    terms = _terms_through(G, A, mins[0])
    if cross_check and len(mins) > 1:
        alt = _terms_through(G, A, mins[1])
        if len(alt) != len(terms):
            raise AssertionError(
                "chief series length depends on the minimal subgroup chosen; "
                "Jordan-Holder violated, implementation bug"
            )
    return ChiefSeries(G, A, terms, len(terms) - 1)


def _terms_through(G: PermGroup, A: AutGroup, L: PermGroup) -> list[PermGroup]:
    if L.order == G.order:
        return [G, G.subgroup([])]
    Q, q = G.quotient(L)
    AQ = induce(A, L, q)
    sub = a_chief_series(Q, AQ, cross_check=False)
    terms = [G]
    for S in sub.terms[1:]:
        pre = q.preimage(S.elements())
        terms.append(G.subgroup(_reduce_generators(G.degree, pre)))
    terms.append(G.subgroup([]))
    return terms


def chief_length(G: PermGroup, A: AutGroup) -> int:
    return a_chief_series(G, A, cross_check=False).length


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True
