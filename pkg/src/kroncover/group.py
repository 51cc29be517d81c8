"""Permutation groups with stabilizer chains.

Groups are immutable after construction: the chain is built eagerly, element
caches are filled behind once-only initialization, and every public operation
is read-only.
"""

from __future__ import annotations

from . import perm
from .perm import Perm

ELEMENT_CACHE_CAP = 10_000


class CapExceeded(Exception):
    """An exhaustive computation was refused because a configured cap was hit."""


class NotSubgroupError(ValueError):
    """A claimed subgroup relation does not hold."""


class NotNormalError(ValueError):
    """A claimed normal subgroup is not normal; carries a conjugating witness."""

    def __init__(self, message: str, witness: tuple[Perm, Perm] | None = None):
        super().__init__(message)
        self.witness = witness


class PermGroup:
    """A permutation group of fixed degree, given by generators.

    A deterministic Schreier-Sims run at construction yields the base, the
    transversals and hence exact order and membership tests.
    """

    def __init__(self, degree: int, generators, name: str | None = None):
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        gens = []
        seen = set()
        for g in generators:
            p = perm.check_perm(g)
            if len(p) != degree:
                raise ValueError(f"generator degree {len(p)} != group degree {degree}")
            if not perm.is_identity(p) and p not in seen:
                seen.add(p)
                gens.append(p)
        self.degree = degree
        self.generators: tuple[Perm, ...] = tuple(gens)
        self.name = name
        self._chain = _schreier_sims(degree, self.generators)
        self._order = 1
        for _, transversal, _ in self._chain:
            self._order *= len(transversal)
        self._elements: tuple[Perm, ...] | None = None

    # -- basic protocol ------------------------------------------------

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<PermGroup{label} degree={self.degree} order={self._order}>"

    @property
    def order(self) -> int:
        return self._order

    def __len__(self):
        return self._order

    def __contains__(self, p) -> bool:
        return self.contains(p)

    def identity(self) -> Perm:
        return perm.identity(self.degree)

    def contains(self, p: Perm) -> bool:
        """Membership via sifting down the stabilizer chain."""
        p = perm.check_perm(p)
        if len(p) != self.degree:
            raise ValueError(f"degree mismatch: {len(p)} vs {self.degree}")
        return _sift(self._chain, p) is None

    def elements(self) -> tuple[Perm, ...]:
        """All elements, sorted; cached.  Refused above ELEMENT_CACHE_CAP."""
        if self._elements is None:
            if self._order > ELEMENT_CACHE_CAP:
                raise CapExceeded(
                    f"order {self._order} exceeds element cache cap {ELEMENT_CACHE_CAP}"
                )
            self._elements = tuple(sorted(_closure(self.degree, self.generators)))
        return self._elements

    # -- subgroup relations ---------------------------------------------

    def subgroup(self, generators, name: str | None = None) -> "PermGroup":
        """Group generated by ``generators``; verified to lie inside self."""
        H = PermGroup(self.degree, generators, name=name)
        for g in H.generators:
            if not self.contains(g):
                raise NotSubgroupError(f"generator {perm.format_cycles(g)} not in group")
        return H

    def is_subgroup(self, H: "PermGroup") -> bool:
        if H.degree != self.degree:
            return False
        return all(self.contains(g) for g in H.generators)

    def is_normal(self, N: "PermGroup") -> bool:
        try:
            self.check_normal(N)
            return True
        except NotNormalError:
            return False

    def check_normal(self, N: "PermGroup") -> None:
        """Raise NotNormalError with a witness (n, g) if N is not normal in self."""
        if not self.is_subgroup(N):
            raise NotSubgroupError("N is not a subgroup")
        for g in self.generators:
            for x in N.generators:
                if not N.contains(perm.conjugate(x, g)):
                    raise NotNormalError(
                        f"subgroup not normal: {perm.format_cycles(x)} conjugated by "
                        f"{perm.format_cycles(g)} falls outside",
                        witness=(x, g),
                    )

    def index(self, U: "PermGroup") -> int:
        """|G:U|, requiring U <= G."""
        if not self.is_subgroup(U):
            raise NotSubgroupError("U is not a subgroup of G")
        q, r = divmod(self._order, U.order)
        assert r == 0, "Lagrange violated; stabilizer chain bug"
        return q

    # -- derived constructions -------------------------------------------

    def center(self) -> "PermGroup":
        els = self.elements()
        gens = self.generators
        central = [
            x for x in els if all(perm.mult(x, g) == perm.mult(g, x) for g in gens)
        ]
        return PermGroup(self.degree, _reduce_generators(self.degree, central))

    def normal_closure(self, seed_gens) -> "PermGroup":
        """Smallest normal subgroup of self containing the given elements."""
        gens = [perm.check_perm(s) for s in seed_gens]
        for s in gens:
            if not self.contains(s):
                raise NotSubgroupError("seed element not in group")
        H = PermGroup(self.degree, gens)
        while True:
            new = []
            for s in H.generators:
                for g in self.generators:
                    c = perm.conjugate(s, g)
                    if not H.contains(c):
                        new.append(c)
            if not new:
                return H
            H = PermGroup(self.degree, H.generators + tuple(new))

    def derived_subgroup(self) -> "PermGroup":
        comms = [
            perm.mult(perm.mult(perm.inverse(a), perm.inverse(b)), perm.mult(a, b))
            for a in self.generators
            for b in self.generators
        ]
        return self.normal_closure([c for c in comms if not perm.is_identity(c)])

    def is_abelian(self) -> bool:
        return all(
            perm.mult(a, b) == perm.mult(b, a)
            for i, a in enumerate(self.generators)
            for b in self.generators[i + 1 :]
        )

    def conjugate_subgroup(self, U: "PermGroup", g: Perm) -> "PermGroup":
        return PermGroup(self.degree, [perm.conjugate(x, g) for x in U.generators])

    def quotient(self, N: "PermGroup") -> tuple["PermGroup", "Epimorphism"]:
        """G/N as a faithful permutation group on the right cosets of N.

        Returns the quotient and the natural epimorphism.  Requires N normal;
        both G and N must be within the element cache cap.
        """
        self.check_normal(N)
        els = self.elements()
        n_els = N.elements()
        # canonical representative of the coset N*x is the minimum element
        canon: dict[Perm, Perm] = {}
        for x in els:
            if x in canon:
                continue
            coset = [perm.mult(n, x) for n in n_els]
            rep = min(coset)
            for y in coset:
                canon[y] = rep
        reps = sorted(set(canon.values()))
        rep_index = {r: i for i, r in enumerate(reps)}
        k = len(reps)

        def action(g: Perm) -> Perm:
            return tuple(rep_index[canon[perm.mult(r, g)]] for r in reps)

        images = [action(g) for g in self.generators]
        Q = PermGroup(k, images, name=(f"{self.name}/{N.name}" if self.name and N.name else None))
        if Q.order * N.order != self._order:
            raise AssertionError("quotient order mismatch; coset action bug")
        element_map = {x: action(x) for x in els}
        return Q, Epimorphism(self, Q, images, element_map)


class Epimorphism:
    """A surjective homomorphism between permutation groups.

    Carries generator images and (for cached sources) the full element map,
    which is what downstream pullback computations use.
    """

    def __init__(self, source: PermGroup, target: PermGroup, generator_images, element_map):
        self.source = source
        self.target = target
        self.generator_images = tuple(generator_images)
        self._map = element_map
        if len(self.generator_images) != len(source.generators):
            raise ValueError("generator image count mismatch")
        if not PermGroup(target.degree, self.generator_images).order == target.order:
            raise ValueError("images do not generate the target (not surjective)")

    def __call__(self, x: Perm) -> Perm:
        return self._map[x]

    def kernel(self) -> PermGroup:
        ident = self.target.identity()
        ker = [x for x, y in self._map.items() if y == ident]
        return PermGroup(self.source.degree, _reduce_generators(self.source.degree, ker))

    def preimage(self, subgroup_elements) -> list[Perm]:
        wanted = set(subgroup_elements)
        return sorted(x for x, y in self._map.items() if y in wanted)

    def check_homomorphism(self, pairs=None) -> bool:
        """Verify f(xy) = f(x)f(y); all pairs by default (cached sources only)."""
        els = self.source.elements()
        if pairs is None:
            pairs = ((x, y) for x in els for y in els)
        m = self._map
        return all(m[perm.mult(x, y)] == perm.mult(m[x], m[y]) for x, y in pairs)


# -- internals ------------------------------------------------------------


def _closure(degree: int, gens) -> list[Perm]:
    ident = perm.identity(degree)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = perm.mult(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return list(seen)


def _reduce_generators(degree: int, elements) -> list[Perm]:
    """Greedy small generating set for the group generated by ``elements``."""
    elements = sorted(set(elements) - {perm.identity(degree)})
    if not elements:
        return []
    target = PermGroup(degree, elements).order
    gens: list[Perm] = []
    H = PermGroup(degree, [])
    for x in elements:
        if not H.contains(x):
            gens.append(x)
            H = PermGroup(degree, gens)
            if H.order == target:
                break
    return gens


# chain level: (base point, transversal {point: coset rep}, level generators)
_Level = tuple[int, dict[int, Perm], list[Perm]]


def _orbit_transversal(degree: int, b: int, gens) -> dict[int, Perm]:
    t = {b: perm.identity(degree)}
    queue = [b]
    for pt in queue:
        for g in gens:
            im = g[pt]
            if im not in t:
                t[im] = perm.mult(t[pt], g)
                queue.append(im)
    return t


def _sift(chain: list[_Level], p: Perm) -> Perm | None:
    """Strip p through the chain; None if it sifts to the identity."""
    for b, transversal, _ in chain:
        im = p[b]
        rep = transversal.get(im)
        if rep is None:
            return p
        p = perm.mult(p, perm.inverse(rep))
    return None if perm.is_identity(p) else p


def _schreier_sims(degree: int, gens) -> list[_Level]:
    """Deterministic Schreier-Sims; base points chosen smallest-first."""
    chain: list[_Level] = []

    def add_at(level: int, p: Perm) -> None:
        if perm.is_identity(p):
            return
        if level == len(chain):
            b = min(x for x in range(degree) if p[x] != x)
            chain.append((b, _orbit_transversal(degree, b, [p]), [p]))
            _process(level)
            return
        b, _, lgens = chain[level]
        lgens.append(p)
        chain[level] = (b, _orbit_transversal(degree, b, lgens), lgens)
        _process(level)

    def _process(level: int) -> None:
        # sift every Schreier generator of this level into the next
        while True:
            b, transversal, lgens = chain[level]
            changed = False
            for pt, rep in list(transversal.items()):
                for g in lgens:
                    schreier = perm.mult(
                        perm.mult(rep, g), perm.inverse(transversal[g[pt]])
                    )
                    residue = _sift(chain[level + 1 :], schreier)
                    if residue is not None:
                        add_at(level + 1, residue)
                        changed = True
            if not changed:
                return

    for g in gens:
        residue = _sift(chain, g)
        if residue is not None:
            add_at(0, residue)
    return chain
