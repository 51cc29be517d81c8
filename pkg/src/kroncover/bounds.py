"""Bound functions h, f and the recursive g over a hybrid magnitude type.

g(n, c) for c >= 2 is too large for any exact representation -- even its
log2 overflows a float by c = 3 -- so log-scale values carry an iterated
logarithm: a ``Magnitude`` (depth, top) stands for exp2 applied ``depth``
times to the float ``top``.  Every float operation on the bound side rounds
UP, so an "x <= bound" verdict is conservative: it can only be reported
false when x provably exceeds the (over-approximated) bound.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field

EXACT_BITS_CAP = 4096  # exact integers beyond this many bits go log-scale
_EXACT_FACTORIAL_MAX = 500  # 500! fits the bit cap; larger uses Stirling

_TOP_MAX = 2.0**50
_TOP_MIN = 50.0
_LN2 = math.log(2.0)


def _up(x: float) -> float:
    return math.nextafter(x, math.inf)


def _down(x: float) -> float:
    return math.nextafter(x, -math.inf)


@dataclass(frozen=True)
class Magnitude:
    """exp2 applied ``depth`` times to ``top``; canonical form keeps
    ``top`` in [0, 2^50) at depth 0 and [50, 2^50) at positive depth, so
    a deeper magnitude always dominates a shallower one."""

    depth: int
    top: float


def mag(x: float) -> Magnitude:
    return _norm(0, float(x))


def _norm(depth: int, top: float) -> Magnitude:
    while top >= _TOP_MAX or math.isinf(top):
        top = _up(math.log2(top)) if not math.isinf(top) else 1100.0
        depth += 1
    while depth > 0 and top < _TOP_MIN:
        top = _up(2.0**top)
        depth -= 1
    if depth == 0 and top < 0.0:
        top = 0.0
    return Magnitude(depth, top)


def mag_log2(a: Magnitude) -> Magnitude:
    if a.depth > 0:
        return _norm(a.depth - 1, a.top)
    if a.top <= 1.0:
        return Magnitude(0, 0.0)
    return _norm(0, _up(math.log2(a.top)))


def mag_exp2(a: Magnitude) -> Magnitude:
    return _norm(a.depth + 1, a.top)


def mag_leq(a: Magnitude, b: Magnitude) -> bool:
    if a.depth != b.depth:
        return a.depth < b.depth
    return a.top <= b.top


def mag_max(a: Magnitude, b: Magnitude) -> Magnitude:
    return b if mag_leq(a, b) else a


def mag_add(a: Magnitude, b: Magnitude) -> Magnitude:
    """Upper bound on a + b."""
    if a.depth == 0 and b.depth == 0:
        return _norm(0, _up(a.top + b.top))
    big = mag_max(a, b)
    # a + b <= 2 * max(a, b)
    return mag_exp2(mag_add(mag_log2(big), Magnitude(0, 1.0)))


def mag_mul(a: Magnitude, b: Magnitude) -> Magnitude:
    """Upper bound on a * b."""
    if (a.depth == 0 and a.top == 0.0) or (b.depth == 0 and b.top == 0.0):
        return Magnitude(0, 0.0)
    if a.depth == 0 and b.depth == 0:
        p = a.top * b.top
        if math.isfinite(p):
            return _norm(0, _up(p))
    return mag_exp2(mag_add(mag_log2(a), mag_log2(b)))


def _int_log2(n: int, *, up: bool) -> Magnitude:
    """log2 of a positive integer, rounded in the requested direction."""
    if n <= 0:
        raise ValueError("log2 of a nonpositive integer")
    bits = n.bit_length()
    if bits <= 1020:
        x = math.log2(n)
    else:
        shift = bits - 53
        x = shift + math.log2(n >> shift)
        if up:
            x += 1e-9
    return _norm(0, _up(x) if up else _down(x))


class BoundValue:
    """A nonnegative magnitude, exact when small, log-scale otherwise.

    ``exact_value`` is an arbitrary-precision integer; ``log2_value`` is the
    Magnitude log2 of the value, always an upper bound.
    """

    __slots__ = ("kind", "exact_value", "log2_value")

    def __init__(self, *, exact: int | None = None, log2: Magnitude | None = None):
        if (exact is None) == (log2 is None):
            raise ValueError("exactly one of exact/log2 required")
        if exact is not None:
            if exact < 0:
                raise ValueError("bound values are nonnegative")
            self.kind = "exact"
            self.exact_value = exact
            self.log2_value = None
        else:
            self.kind = "log"
            self.exact_value = None
            self.log2_value = log2

    def log2_up(self) -> Magnitude:
        if self.kind == "exact":
            if self.exact_value == 0:
                return Magnitude(0, 0.0)
            return _int_log2(self.exact_value, up=True)
        return self.log2_value

    def __eq__(self, other):
        return (
            isinstance(other, BoundValue)
            and self.kind == other.kind
            and self.exact_value == other.exact_value
            and self.log2_value == other.log2_value
        )

    def __hash__(self):
        return hash((self.kind, self.exact_value, self.log2_value))

    def __repr__(self):
        if self.kind == "exact":
            return f"BoundValue(exact={self.exact_value})"
        m = self.log2_value
        return f"BoundValue(log2=exp2^{m.depth}({m.top!r}))"

    def describe(self) -> str:
        """Short display form for reports."""
        if self.kind == "exact":
            return str(self.exact_value)
        m = self.log2_value
        if m.depth == 0:
            return f"2^{m.top:.6g}"
        return f"2^(exp2^{m.depth}({m.top:.6g}))"


def bv_exact(n: int) -> BoundValue:
    if n.bit_length() > EXACT_BITS_CAP:
        return BoundValue(log2=_int_log2(n, up=True))
    return BoundValue(exact=n)


def bv_log(m: Magnitude) -> BoundValue:
    return BoundValue(log2=m)


def bv_leq(a: BoundValue, b: BoundValue) -> bool:
    if a.kind == "exact" and b.kind == "exact":
        return a.exact_value <= b.exact_value
    if a.kind == "exact":
        if a.exact_value == 0:
            return True
        return mag_leq(_int_log2(a.exact_value, up=False), b.log2_value)
    return mag_leq(a.log2_value, b.log2_up())


def bv_max(a: BoundValue, b: BoundValue) -> BoundValue:
    return b if bv_leq(a, b) else a


def bv_mul(a: BoundValue, b: BoundValue) -> BoundValue:
    if a.kind == "exact" and b.kind == "exact":
        if a.exact_value.bit_length() + b.exact_value.bit_length() <= EXACT_BITS_CAP:
            return bv_exact(a.exact_value * b.exact_value)
    return bv_log(mag_mul_log(a, b))


def mag_mul_log(a: BoundValue, b: BoundValue) -> Magnitude:
    """log2 of a*b, rounded up."""
    return mag_add(a.log2_up(), b.log2_up())


def bv_pow(b: BoundValue, k: int) -> BoundValue:
    if k == 0:
        return bv_exact(1)
    if b.kind == "exact":
        if b.exact_value.bit_length() * k <= EXACT_BITS_CAP:
            return bv_exact(b.exact_value**k)
    return bv_log(mag_mul(mag(float(k)), b.log2_up()))


def bound_leq(x: int, b: BoundValue) -> bool:
    """Conservative "x <= b": false only when x provably exceeds the
    upward-rounded bound."""
    if x < 1:
        raise ValueError("comparand must be positive")
    if b.kind == "exact":
        return x <= b.exact_value
    return mag_leq(_int_log2(x, up=False), b.log2_value)


def stirling_log2_factorial(t: float) -> float:
    """Upper bound on log2(t!) for t >= 1, rounded up."""
    if t < 1:
        raise ValueError("factorial argument must be >= 1")
    lt = math.log(t)
    nats = (t + 0.5) * lt - t + 0.5 * math.log(2 * math.pi) + 1.0 / (12.0 * t)
    return _up(_up(nats) / _down(_LN2))


def factorial_bound(t: BoundValue) -> BoundValue:
    """Upper bound on t!, exact for small arguments."""
    if t.kind == "exact":
        v = t.exact_value
        if v <= 1:
            return bv_exact(1)
        if v <= _EXACT_FACTORIAL_MAX:
            return bv_exact(math.factorial(v))
        if v.bit_length() <= 1020:
            return bv_log(mag(stirling_log2_factorial(float(v))))
    # t! <= t^t, so log2(t!) <= t * log2(t)
    lt = t.log2_up()
    return bv_log(mag_mul(mag_exp2(lt), lt))


@dataclass(frozen=True)
class HTable:
    """Configuration for h: a formula constant plus an empirical floor.

    ``empirical`` maps a class count m to the largest catalogued order of a
    nonabelian simple group with at most m automorphism classes; the floor
    is applied as a running maximum so h stays nondecreasing.
    """

    constant: float = 2.0
    empirical: tuple[tuple[int, int], ...] = ((4, 60),)

    def empirical_floor(self, m: int) -> int:
        return max((v for k, v in self.empirical if k <= m), default=1)

    def key(self) -> tuple:
        return (self.constant, self.empirical)


DEFAULT_HTABLE = HTable()


def _h_formula_log2(log2_m: Magnitude, constant: float) -> Magnitude:
    """log2 h = constant * (log2 m)^2 * log2 log2 m, rounded up."""
    sq = mag_mul(log2_m, log2_m)
    return mag_mul(mag(constant), mag_mul(sq, mag_log2(log2_m)))


def h_bound(m, table: HTable = DEFAULT_HTABLE) -> BoundValue:
    """Dominating order bound for a nonabelian simple group with at most m
    automorphism classes; the asymptotic-formula exponent is clamped to 0
    for m <= 2 where log log is undefined or nonpositive."""
    if isinstance(m, BoundValue):
        if m.kind == "exact":
            return h_bound(m.exact_value, table)
        return bv_log(_h_formula_log2(m.log2_value, table.constant))
    if m < 1:
        raise ValueError("class count must be positive")
    floor = table.empirical_floor(m)
    if m <= 2:
        return bv_exact(max(1, floor))
    e = _h_formula_log2(mag(math.log2(m)), table.constant)
    if e.depth == 0 and e.top <= 1000.0:
        formula = bv_exact(math.ceil(2.0**e.top))
    else:
        formula = bv_log(e)
    return bv_max(formula, bv_exact(floor))


def f_bound(n, table: HTable = DEFAULT_HTABLE) -> BoundValue:
    """f(n) = max(n, h(n)^(n^2))."""
    h = h_bound(n, table)
    if isinstance(n, BoundValue) and n.kind == "log":
        ln = n.log2_value
        n_sq = mag_exp2(mag_add(ln, ln))
        return bv_log(mag_max(ln, mag_mul(n_sq, h.log2_up())))
    nv = n.exact_value if isinstance(n, BoundValue) else n
    if nv < 1:
        raise ValueError("n must be positive")
    return bv_max(bv_exact(nv), bv_pow(h, nv * nv))


_G_MEMO: dict[tuple, BoundValue] = {}
_G_LOCK = threading.Lock()


def _bv_key(b: BoundValue) -> tuple:
    if b.kind == "exact":
        return ("exact", b.exact_value)
    return ("log", b.log2_value.depth, b.log2_value.top)


def g_bound(n, c: int, table: HTable = DEFAULT_HTABLE) -> BoundValue:
    """The minimal g with g(n,0) = 1 and, for c >= 1,
    g(n,c) = max(g(n,c-1) * g((n*g(n,c-1))!, c-1), f(n)); nondecreasing in
    both arguments and always >= f(n) once c >= 1."""
    if c < 0:
        raise ValueError("c must be nonnegative")
    nv = n if isinstance(n, BoundValue) else bv_exact(n)
    key = (_bv_key(nv), c, table.key())
    with _G_LOCK:
        hit = _G_MEMO.get(key)
    if hit is not None:
        return hit
    if c == 0:
        out = bv_exact(1)
    else:
        prev = g_bound(nv, c - 1, table)
        arg = factorial_bound(bv_mul(nv, prev))
        out = bv_max(bv_mul(prev, g_bound(arg, c - 1, table)), f_bound(nv, table))
    with _G_LOCK:
        _G_MEMO[key] = out
    return out
