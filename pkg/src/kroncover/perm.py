"""Permutations of {0, ..., degree-1}, stored as image tuples.

A permutation ``p`` maps point ``x`` to ``p[x]``.  Composition is
left-to-right: ``mult(p, q)`` applies ``p`` first, then ``q``.
"""

from __future__ import annotations

Perm = tuple[int, ...]


def identity(degree: int) -> Perm:
    return tuple(range(degree))


def is_perm(images) -> bool:
    """True if ``images`` is a bijection of {0, ..., len-1}."""
    try:
        seen = [False] * len(images)
        for x in images:
            if not isinstance(x, int) or x < 0 or x >= len(images) or seen[x]:
                return False
            seen[x] = True
        return True
    except TypeError:
        return False


def check_perm(images) -> Perm:
    """Validate and normalize to a tuple; raise ValueError if not a bijection."""
    p = tuple(images)
    if not is_perm(p):
        raise ValueError(f"not a permutation of 0..{len(p) - 1}: {p!r}")
    return p


def mult(p: Perm, q: Perm) -> Perm:
    """p followed by q."""
    return tuple(q[x] for x in p)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for x, y in enumerate(p):
        inv[y] = x
    return tuple(inv)


def conjugate(p: Perm, g: Perm) -> Perm:
    """g^-1 * p * g (apply g^-1, then p, then g)."""
    return mult(mult(inverse(g), p), g)


def is_identity(p: Perm) -> bool:
    return all(i == x for i, x in enumerate(p))


def perm_order(p: Perm) -> int:
    """Order of p, via lcm of cycle lengths."""
    from math import lcm

    n = 1
    seen = [False] * len(p)
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = p[x]
            length += 1
        n = lcm(n, length)
    return n


def parse_cycles(text: str, degree: int) -> Perm:
    """Parse disjoint-cycle notation with 0-based points, e.g. "(0 1 2)(3 4)".

    The identity is written "()".  Points are whitespace-separated, must lie
    in range for ``degree``, and may not repeat across cycles.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty permutation string")
    images = list(range(degree))
    seen: set[int] = set()
    pos = 0
    any_cycle = False
    while pos < len(s):
        if s[pos].isspace():
            pos += 1
            continue
        if s[pos] != "(":
            raise ValueError(f"expected '(' at position {pos} in {text!r}")
        end = s.find(")", pos)
        if end < 0:
            raise ValueError(f"unclosed cycle in {text!r}")
        body = s[pos + 1 : end].strip()
        pos = end + 1
        any_cycle = True
        if not body:
            continue
        try:
            pts = [int(tok) for tok in body.split()]
        except ValueError:
            raise ValueError(f"non-integer point in cycle {body!r}") from None
        for x in pts:
            if not 0 <= x < degree:
                raise ValueError(f"point {x} out of range for degree {degree}")
            if x in seen:
                raise ValueError(f"point {x} repeated across cycles in {text!r}")
            seen.add(x)
        if len(pts) >= 2:
            for a, b in zip(pts, pts[1:]):
                images[a] = b
            images[pts[-1]] = pts[0]
    if not any_cycle:
        raise ValueError(f"no cycles found in {text!r}")
    return tuple(images)


def format_cycles(p: Perm) -> str:
    """Disjoint-cycle notation, 0-based; identity renders as "()"."""
    out = []
    seen = [False] * len(p)
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cycle = [start]
        seen[start] = True
        x = p[start]
        while x != start:
            cycle.append(x)
            seen[x] = True
            x = p[x]
        out.append("(" + " ".join(map(str, cycle)) + ")")
    return "".join(out) if out else "()"
