"""Element-indexed machinery: multiplication tables, subgroup masks, lattices.

For a cached group the elements are numbered by their sorted position, and a
subgroup is an int bitmask over those indices.  All exhaustive enumeration
(subgroup lattices, covering unions, invariant closures) runs on masks.
"""

from __future__ import annotations

from . import perm
from .group import CapExceeded, NotSubgroupError, PermGroup
from .perm import Perm

SUBGROUP_ENUM_CAP = 360
MULT_TABLE_CAP = 1024


class Dense:
    """Indexed view of a group's element list with multiplication support."""

    def __init__(self, G: PermGroup):
        self.group = G
        self.elements = G.elements()
        self.index = {e: i for i, e in enumerate(self.elements)}
        self.n = len(self.elements)
        self.full_mask = (1 << self.n) - 1
        self.identity_index = self.index[G.identity()]
        self._table: list[list[int]] | None = None
        if self.n <= MULT_TABLE_CAP:
            idx = self.index
            els = self.elements
            self._table = [
                [idx[perm.mult(a, b)] for b in els] for a in els
            ]
        self._orders = [perm.perm_order(e) for e in self.elements]
        self._inverse = [self.index[perm.inverse(e)] for e in self.elements]

    def mul(self, i: int, j: int) -> int:
        if self._table is not None:
            return self._table[i][j]
        return self.index[perm.mult(self.elements[i], self.elements[j])]

    def inv(self, i: int) -> int:
        return self._inverse[i]

    def order_of(self, i: int) -> int:
        return self._orders[i]

    # -- masks ---------------------------------------------------------

    def mask_of(self, elements) -> int:
        m = 0
        for e in elements:
            m |= 1 << self.index[e]
        return m

    def subgroup_mask(self, U: PermGroup) -> int:
        if not self.group.is_subgroup(U):
            raise NotSubgroupError("not a subgroup of the dense group")
        return self.mask_of(U.elements())

    def mask_elements(self, mask: int) -> list[Perm]:
        return [self.elements[i] for i in iter_bits(mask)]

    def mask_to_group(self, mask: int, name: str | None = None) -> PermGroup:
        """Subgroup from a mask, with a greedily reduced generating set."""
        size = mask.bit_count()
        gens: list[int] = []
        have = 1 << self.identity_index
        for i in iter_bits(mask):
            if not (have >> i) & 1:
                gens.append(i)
                have = self.closure_mask(have, [i])
                if have.bit_count() == size:
                    break
        assert have == mask, "mask is not a subgroup"
        return PermGroup(self.group.degree, [self.elements[i] for i in gens], name=name)

    def closure_mask(self, mask: int, extra: list[int] | None = None) -> int:
        """Close ``mask | extra`` under multiplication (BFS by generators)."""
        gens = list(iter_bits(mask)) + (extra or [])
        known = mask
        for x in extra or []:
            known |= 1 << x
        frontier = list(iter_bits(known))
        mul = self.mul
        while frontier:
            nxt = []
            for i in frontier:
                for g in gens:
                    k = mul(i, g)
                    if not (known >> k) & 1:
                        known |= 1 << k
                        nxt.append(k)
            frontier = nxt
        return known

    def cyclic_mask(self, i: int) -> int:
        m = 1 << self.identity_index
        j = i
        while not (m >> j) & 1:
            m |= 1 << j
            j = self.mul(j, i)
        return m

    def conj_index_perm(self, g_index: int) -> list[int]:
        """The permutation of element indices induced by conjugation by g."""
        gi = self._inverse[g_index]
        mul = self.mul
        return [mul(mul(gi, x), g_index) for x in range(self.n)]

    def apply_index_perm(self, table, mask: int) -> int:
        out = 0
        for i in iter_bits(mask):
            out |= 1 << table[i]
        return out

    # -- fingerprints ----------------------------------------------------

    def conjugacy_classes(self) -> list[int]:
        """Conjugacy classes as masks, sorted by (size, lowest index)."""
        gen_tables = [
            self.conj_index_perm(self.index[g]) for g in self.group.generators
        ]
        classes = []
        seen = 0
        for i in range(self.n):
            if (seen >> i) & 1:
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
            classes.append(orbit)
        classes.sort(key=lambda m: (m.bit_count(), lowest_bit(m)))
        return classes

    def class_size_of(self) -> list[int]:
        """Per element, the size of its conjugacy class."""
        sizes = [0] * self.n
        for cls in self.conjugacy_classes():
            size = cls.bit_count()
            for i in iter_bits(cls):
                sizes[i] = size
        return sizes


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


_DENSE_CACHE: dict[int, Dense] = {}


def dense(G: PermGroup) -> Dense:
    """Per-group-instance cached Dense view."""
    d = _DENSE_CACHE.get(id(G))
    if d is None or d.group is not G:
        d = Dense(G)
        _DENSE_CACHE[id(G)] = d
    return d


def all_subgroup_masks(G: PermGroup, cap: int = SUBGROUP_ENUM_CAP) -> list[int]:
    """Every subgroup of G as a mask, sorted.

    Bottom-up: grow each known subgroup by one generator; coset
    representatives suffice because <H, x> = <H, hx> for h in H.
    """
    if G.order > cap:
        raise CapExceeded(
            f"order {G.order} exceeds subgroup enumeration cap {cap}; "
            "restrict the run or raise the cap"
        )
    d = dense(G)
    trivial = 1 << d.identity_index
    found = {trivial}
    frontier = [trivial]
    while frontier:
        nxt = []
        for H in frontier:
            tried = H
            for x in range(d.n):
                if (tried >> x) & 1:
                    continue
                # mark the whole coset Hx as tried
                for h in iter_bits(H):
                    tried |= 1 << d.mul(h, x)
                K = d.closure_mask(H, [x])
                if K not in found:
                    found.add(K)
                    nxt.append(K)
        frontier = nxt
    return sorted(found)


def subgroup_class_reps(G: PermGroup, cap: int = SUBGROUP_ENUM_CAP) -> list[int]:
    """One mask per conjugacy class of subgroups (the minimum of its orbit)."""
    classes = subgroup_classes(G, cap)
    return [cls[0] for cls in classes]


def subgroup_classes(G: PermGroup, cap: int = SUBGROUP_ENUM_CAP) -> list[list[int]]:
    """Conjugacy classes of subgroups, each a sorted list of masks.

    Classes are sorted by (subgroup order, representative mask).
    """
    masks = all_subgroup_masks(G, cap)
    d = dense(G)
    gen_tables = [d.conj_index_perm(d.index[g]) for g in G.generators]
    remaining = set(masks)
    classes = []
    for m in masks:
        if m not in remaining:
            continue
        orbit = {m}
        frontier = [m]
        while frontier:
            nxt = []
            for h in frontier:
                for t in gen_tables:
                    im = d.apply_index_perm(t, h)
                    if im not in orbit:
                        orbit.add(im)
                        nxt.append(im)
            frontier = nxt
        remaining -= orbit
        classes.append(sorted(orbit))
    classes.sort(key=lambda cls: (cls[0].bit_count(), cls[0]))
    return classes
