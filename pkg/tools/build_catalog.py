#!/usr/bin/env python3
"""Generate src/kroncover/data/smallgroups.jsonl.

Enumerates every group of order <= 63 up to isomorphism:

  * abelian groups directly, as direct sums of primary cyclic factors;
  * the rest as cyclic extensions: every solvable group G has a normal
    subgroup N of prime index p, and then G = <N, t> with t acting on N by
    an automorphism a satisfying a(z) = z and a^p = conjugation-by-z for
    z = t^p in N.  Enumerating (N, p, a, z) with a taken up to Aut(N)-
    conjugacy reaches every such group;
  * Alt(5), the only nonsolvable group of order <= 63, added explicitly.

The per-order counts are checked against the known number-of-groups
sequence (OEIS A000001) before anything is written.  A handful of larger
named groups used by the verification harness are appended at the end.
"""

from __future__ import annotations

import json
import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from kroncover import perm
from kroncover.autgroup import are_isomorphic, automorphism_group
from kroncover.group import PermGroup
from kroncover.lattice import dense

MAX_ORDER = 63

# number of groups of order n for n = 1..63 (OEIS A000001)
GROUP_COUNTS = [
    1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2,
    2, 1, 15, 2, 2, 5, 4, 1, 4, 1, 51, 1, 2, 1, 14, 1, 2, 2, 14, 1,
    6, 1, 4, 2, 2, 1, 52, 2, 5, 1, 5, 1, 15, 2, 13, 2, 2, 1, 13, 1,
    2, 4,
]
assert len(GROUP_COUNTS) == MAX_ORDER


def prime_factorization(n):
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def partitions(n):
    if n == 0:
        yield ()
        return
    for first in range(n, 0, -1):
        for rest in partitions(n - first):
            if not rest or rest[0] <= first:
                yield (first,) + rest


def cycle_perm(degree, start, length):
    q = list(range(degree))
    for t in range(length):
        q[start + t] = start + (t + 1) % length
    return tuple(q)


def abelian_groups(n):
    """All abelian groups of order n: (PermGroup, invariant-factor name)."""
    fact = prime_factorization(n)
    primes = sorted(fact)
    choices = [list(partitions(fact[p])) for p in primes]

    def product(idx):
        if idx == len(primes):
            yield {}
            return
        for part in choices[idx]:
            for rest in product(idx + 1):
                d = dict(rest)
                d[primes[idx]] = part
                yield d

    out = []
    for combo in sorted(
        product(0), key=lambda d: [d[p] for p in primes], reverse=True
    ):
        # primary cyclic factors, one disjoint cycle each
        factors = sorted(
            (p**e for p in primes for e in combo[p]), reverse=True
        )
        if n == 1:
            out.append((PermGroup(1, []), "C1"))
            continue
        degree = sum(factors)
        gens = []
        pos = 0
        for length in factors:
            gens.append(cycle_perm(degree, pos, length))
            pos += length
        # invariant factors: pair off the largest primary parts per prime
        width = max(len(combo[p]) for p in primes)
        invariant = []
        for i in range(width):
            d = 1
            for p in primes:
                part = combo[p]
                if i < len(part):
                    d *= p ** part[i]
            invariant.append(d)
        name = "x".join(f"C{d}" for d in invariant)
        out.append((PermGroup(degree, gens, name=name), name))
    return out


def fingerprint(G):
    d = dense(G)
    return (
        G.order,
        tuple(sorted(d._orders)),
        G.center().order,
        tuple(sorted(c.bit_count() for c in d.conjugacy_classes())),
        G.derived_subgroup().order,
    )


def compose(a, b):
    """b after a, as index tables."""
    return tuple(b[x] for x in a)


def candidate_action_reps(N, p):
    """Automorphisms a of N with a^p inner via a fixed point z, one per
    Aut(N)-conjugacy class, paired with all their valid z's."""
    dN = dense(N)
    A = automorphism_group(N)
    tables = list(A.tables())
    # a^p must equal x -> z x z^-1 (conjugation by z on the left, since
    # t x t^-1 = a(x) and t^p = z); in index-table terms that is the
    # conjugation table of z^-1
    conj_of = {}
    for z in range(dN.n):
        key = tuple(dN.conj_index_perm(dN.inv(z)))
        conj_of.setdefault(key, []).append(z)
    candidates = {}
    for t in tables:
        tp = t
        for _ in range(p - 1):
            tp = compose(tp, t)
        zs = [z for z in conj_of.get(tp, ()) if t[z] == z]
        if zs:
            candidates[t] = zs
    # one representative per conjugacy orbit under Aut(N)
    gen_tabs = [g.table for g in A.generators]
    inv_gens = [perm.inverse(g) for g in gen_tabs]
    seen = set()
    reps = []
    for t in sorted(candidates):
        if t in seen:
            continue
        orbit = {t}
        frontier = [t]
        while frontier:
            nxt = []
            for u in frontier:
                for g, gi in zip(gen_tabs, inv_gens):
                    v = compose(compose(gi, u), g)
                    if v not in orbit:
                        orbit.add(v)
                        nxt.append(v)
            frontier = nxt
        seen |= orbit
        reps.append((t, candidates[t]))
    return reps


def cyclic_extension(N, alpha, z_idx, p):
    """<N, t> with t acting by alpha, t^p = z; regular representation."""
    dN = dense(N)
    nN = dN.n
    n = nN * p
    pows = [tuple(range(nN))]
    for _ in range(p - 1):
        pows.append(compose(pows[-1], alpha))

    def emul(x, y):
        a, i = divmod(x, p)
        b, j = divmod(y, p)
        t = dN.mul(a, pows[i][b])
        if i + j >= p:
            t = dN.mul(t, z_idx)
        return t * p + (i + j) % p

    ident = dN.identity_index * p
    rng = random.Random(0)
    for _ in range(200):
        x, y, w = (rng.randrange(n) for _ in range(3))
        assert emul(emul(x, y), w) == emul(x, emul(y, w)), "not associative"
    assert emul(ident, 0) == 0 and emul(0, ident) == 0

    gen_elems = [dN.index[g] * p for g in N.generators] + [ident + 1]
    gens = []
    for g in gen_elems:
        row = tuple(emul(x, g) for x in range(n))
        assert len(set(row)) == n
        gens.append(row)
    G = PermGroup(n, gens)
    assert G.order == n, f"extension has order {G.order}, expected {n}"
    return G


def build_order(n, groups_by_order):
    """All groups of order n as (PermGroup, name-or-None, tags)."""
    entries = []
    for G, name in abelian_groups(n):
        tags = ["abelian"]
        if "x" not in name and name != "C1":
            tags.append("cyclic")
        if n > 1 and len(prime_factorization(n)) == 1 and n in (
            2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61
        ):
            tags.append("simple")
        entries.append((G, name, tags))
    if n == 24:
        a4c2 = PermGroup(
            6,
            [
                perm.parse_cycles("(0 1 2)", 6),
                perm.parse_cycles("(0 1)(2 3)", 6),
                perm.parse_cycles("(4 5)", 6),
            ],
            name="A4xC2",
        )
        assert a4c2.order == 24
        entries.append((a4c2, "A4xC2", ["nonabelian"]))
    if n == 60:
        a5 = PermGroup(
            5,
            [perm.parse_cycles("(0 1 2)", 5), perm.parse_cycles("(0 1 2 3 4)", 5)],
            name="A5",
        )
        assert a5.order == 60
        entries.append((a5, "A5", ["nonabelian", "simple"]))
    known = [G for G, _, _ in entries]
    fps = [fingerprint(G) for G in known]
    unnamed = []
    for p in sorted(prime_factorization(n)):
        m = n // p
        if m == 1:
            continue
        for N in groups_by_order[m]:
            for alpha, zs in candidate_action_reps(N, p):
                for z in zs:
                    G = cyclic_extension(N, alpha, z, p)
                    fp = fingerprint(G)
                    if any(
                        fp == f and are_isomorphic(G, H)
                        for f, H in zip(fps, known)
                    ):
                        continue
                    known.append(G)
                    fps.append(fp)
                    if G.is_abelian():
                        raise AssertionError(
                            "abelian extension missed by direct construction"
                        )
                    unnamed.append((G, fp))
    unnamed.sort(key=lambda t: t[1])
    for i, (G, _) in enumerate(unnamed, start=1):
        entries.append((G, f"G{n}_{i}", ["nonabelian"]))
    count = len(entries)
    want = GROUP_COUNTS[n - 1]
    assert count == want, f"order {n}: built {count} groups, expected {want}"
    return entries


def extras():
    a5g = ["(0 1 2)", "(0 1 2 3 4)"]
    shift = ["(5 6 7)", "(5 6 7 8 9)"]
    swap = "(0 5)(1 6)(2 7)(3 8)(4 9)"
    return [
        ("S5", 5, ["(0 1 2 3 4)", "(0 1)"], 120, ["nonabelian", "extra"]),
        ("A5xA5", 10, a5g + shift, 3600, ["nonabelian", "extra"]),
        ("A5wrC2", 10, a5g + shift + [swap], 7200, ["nonabelian", "extra"]),
    ]


def main():
    out_path = (
        Path(__file__).resolve().parent.parent
        / "src"
        / "kroncover"
        / "data"
        / "smallgroups.jsonl"
    )
    groups_by_order = {}
    lines = []
    total = 0
    for n in range(1, MAX_ORDER + 1):
        entries = build_order(n, groups_by_order)
        groups_by_order[n] = [G for G, _, _ in entries]
        for G, name, tags in entries:
            lines.append(
                {
                    "name": name,
                    "degree": G.degree,
                    "generators": [perm.format_cycles(g) for g in G.generators],
                    "order": G.order,
                    "tags": tags,
                }
            )
        total += len(entries)
        print(f"order {n}: {len(entries)} groups", flush=True)
    for name, degree, gens, order, tags in extras():
        G = PermGroup(degree, [perm.parse_cycles(s, degree) for s in gens])
        assert G.order == order, (name, G.order)
        lines.append(
            {
                "name": name,
                "degree": degree,
                "generators": gens,
                "order": order,
                "tags": tags,
            }
        )
    out_path.parent.mkdir(parents=True, exist_ok=True)
    with out_path.open("w") as fh:
        for obj in lines:
            fh.write(json.dumps(obj, separators=(", ", ": ")) + "\n")
    print(f"wrote {len(lines)} entries ({total} of order <= {MAX_ORDER}) to {out_path}")

    # round-trip through the package loader as a final sanity check
    from kroncover.catalog import load_corpus

    specs = load_corpus(out_path)
    for spec in specs:
        spec.build()
    print(f"reloaded and validated {len(specs)} entries")


if __name__ == "__main__":
    main()
