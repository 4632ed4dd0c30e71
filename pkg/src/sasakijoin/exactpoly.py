"""Exact univariate polynomial arithmetic over Z and Q.

Evaluation, formal derivatives, division, Yun square-free decomposition,
Sturm chains, rational-root extraction, and certified isolation of the
positive real roots.  Every decision made here (root counting, rationality,
interval certification) uses exact integer or rational arithmetic; floating
point never enters a decision path.  Decimal output, when wanted, is the
caller's problem.

A polynomial is a dense tuple of arbitrary-precision integer coefficients,
lowest degree first, wrapped in :class:`IntPolynomial`.  The zero polynomial
is the empty tuple.  Build values with :func:`intpoly`, which canonicalizes
arbitrary coefficient sequences.

Root isolation is Sturm-chain bisection on (0, B] with B a Cauchy bound,
applied after square-free reduction and after splitting off every rational
root by the rational-root theorem.  The remaining polynomial has no rational
roots at all, so bisection midpoints can never collide with a root and every
reported interval has non-root rational endpoints.  A root is declared
rational if and only if it appears among the rational-root candidates of the
primitive part, which is sound and complete over the integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isinf

__all__ = [
    "IntPolynomial",
    "RationalInterval",
    "RootRecord",
    "intpoly",
    "poly_add",
    "poly_sub",
    "poly_neg",
    "poly_mul",
    "poly_eval",
    "poly_derivative",
    "poly_divrem",
    "poly_exact_div",
    "content",
    "primitive_part",
    "poly_gcd",
    "squarefree_part",
    "squarefree_decompose",
    "sturm_count",
    "sign_variations",
    "cauchy_root_bound",
    "rational_roots",
    "isolate_positive_roots",
    "cubic_discriminant",
    "format_poly",
]


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial; ``coeffs[i]`` multiplies x**i.

    Canonical form: no trailing zero coefficients, so ``coeffs`` is empty
    exactly for the zero polynomial.  Use :func:`intpoly` to build one from
    an arbitrary coefficient sequence.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        for c in self.coeffs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficient required, got {c!r}")
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero; use intpoly()")

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __str__(self) -> str:
        return format_poly(self)


ZERO = IntPolynomial()


def intpoly(coeffs) -> IntPolynomial:
    """Build an :class:`IntPolynomial`, canonicalizing the sequence.

    Accepts any iterable of integers (or integer-valued rationals); trailing
    zeros are stripped.  Raises ValueError on non-integral values.
    """
    out = []
    for c in coeffs:
        ic = int(c)
        if ic != c:
            raise ValueError(f"non-integral coefficient {c!r}")
        out.append(ic)
    while out and out[-1] == 0:
        out.pop()
    return IntPolynomial(tuple(out))


# ----------------------------------------------------------------------
# ring operations

def poly_neg(p: IntPolynomial) -> IntPolynomial:
    return IntPolynomial(tuple(-c for c in p.coeffs))


def poly_add(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    n = max(len(a.coeffs), len(b.coeffs))
    out = [0] * n
    for i, c in enumerate(a.coeffs):
        out[i] += c
    for i, c in enumerate(b.coeffs):
        out[i] += c
    return intpoly(out)


def poly_sub(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    return poly_add(a, poly_neg(b))


def poly_mul(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    if a.is_zero or b.is_zero:
        return ZERO
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, ca in enumerate(a.coeffs):
        if ca:
            for j, cb in enumerate(b.coeffs):
                out[i + j] += ca * cb
    return IntPolynomial(tuple(out))


def poly_derivative(poly: IntPolynomial, order: int = 1) -> IntPolynomial:
    """Formal derivative of the given order; order 0 returns the input."""
    if order < 0:
        raise ValueError("derivative order must be nonnegative")
    cs = poly.coeffs
    for _ in range(order):
        if len(cs) <= 1:
            return ZERO
        cs = tuple(i * cs[i] for i in range(1, len(cs)))
    return IntPolynomial(cs)


def _scaled_value(coeffs: tuple[int, ...], num: int, den: int) -> int:
    """den**deg * f(num/den) as an exact integer (den > 0)."""
    acc = coeffs[-1]
    dp = 1
    for c in reversed(coeffs[:-1]):
        dp *= den
        acc = acc * num + c * dp
    return acc


def poly_eval(poly: IntPolynomial, q) -> Fraction:
    """Exact value of the polynomial at the rational point q."""
    if poly.is_zero:
        return Fraction(0)
    q = Fraction(q)
    s = _scaled_value(poly.coeffs, q.numerator, q.denominator)
    return Fraction(s, q.denominator ** poly.degree)


def _sign_at(coeffs: tuple[int, ...], q: Fraction) -> int:
    s = _scaled_value(coeffs, q.numerator, q.denominator)
    return (s > 0) - (s < 0)


def poly_divrem(num: IntPolynomial, den: IntPolynomial):
    """Euclidean division over Q: num = quotient*den + remainder.

    Returns (quotient, remainder) as tuples of Fraction, lowest degree
    first, with deg(remainder) < deg(den).  Raises ZeroDivisionError when
    den is the zero polynomial.
    """
    if den.is_zero:
        raise ZeroDivisionError("polynomial division by the zero polynomial")
    r = [Fraction(c) for c in num.coeffs]
    dd = den.degree
    lead = Fraction(den.coeffs[-1])
    q = [Fraction(0)] * max(len(r) - dd, 0)
    for i in range(len(r) - 1, dd - 1, -1):
        c = r[i]
        if not c:
            continue
        f = c / lead
        q[i - dd] = f
        r[i] = Fraction(0)
        for j in range(dd):
            r[i - dd + j] -= f * den.coeffs[j]
    while r and not r[-1]:
        r.pop()
    return tuple(q), tuple(r)


def poly_exact_div(num: IntPolynomial, den: IntPolynomial) -> IntPolynomial:
    """Exact division with integer result; raises ValueError otherwise."""
    q, r = poly_divrem(num, den)
    if r:
        raise ValueError("polynomial division is not exact")
    return intpoly(q)


def content(poly: IntPolynomial) -> int:
    """Nonnegative gcd of the coefficients (0 for the zero polynomial)."""
    g = 0
    for c in poly.coeffs:
        g = gcd(g, c)
    return g


def primitive_part(poly: IntPolynomial) -> IntPolynomial:
    """poly divided by its content; sign of the leading coefficient kept."""
    if poly.is_zero:
        return ZERO
    g = content(poly)
    return IntPolynomial(tuple(c // g for c in poly.coeffs))


def _normalized(poly: IntPolynomial) -> IntPolynomial:
    """Primitive part with positive leading coefficient."""
    p = primitive_part(poly)
    if p.coeffs and p.coeffs[-1] < 0:
        p = poly_neg(p)
    return p


def _neg_rem_like(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Primitive integer multiple of -rem(a, b) with the correct sign.

    Computes the pseudo-remainder while tracking the sign of the scaling
    factor lc(b)**steps, so the result is a *positive* rational multiple of
    the negated true remainder.  This is exactly what a Sturm chain needs.
    """
    lb = b[-1]
    db = len(b) - 1
    r = list(a)
    steps = 0
    while r and len(r) - 1 >= db:
        lead = r[-1]
        r = [lb * c for c in r]
        shift = len(r) - 1 - db
        for j, bc in enumerate(b):
            r[shift + j] -= lead * bc
        while r and r[-1] == 0:
            r.pop()
        steps += 1
    if not r:
        return ()
    if lb > 0 or steps % 2 == 0:
        r = [-c for c in r]
    g = 0
    for c in r:
        g = gcd(g, c)
    return tuple(c // g for c in r)


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Greatest common divisor over Z, primitive with positive leading coeff."""
    x = _normalized(a)
    y = _normalized(b)
    while not y.is_zero:
        if y.degree == 0:
            return IntPolynomial((1,))
        r = IntPolynomial(_neg_rem_like(x.coeffs, y.coeffs))
        x, y = y, r
    return _normalized(x)


def squarefree_part(poly: IntPolynomial) -> IntPolynomial:
    """The product of the distinct irreducible factors, primitive, lc > 0."""
    p = _normalized(poly)
    if p.degree <= 0:
        return p
    g = poly_gcd(p, poly_derivative(p))
    if g.degree == 0:
        return p
    return _normalized(poly_exact_div(p, g))


def squarefree_decompose(poly: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Yun decomposition: poly = unit * prod(factor**multiplicity).

    Each returned factor is square-free, primitive with positive leading
    coefficient, and the factors are pairwise coprime; there is at most one
    factor per multiplicity and they come in increasing multiplicity order.
    The discarded unit is a rational number.  Constant input yields [].
    """
    if poly.is_zero:
        raise ValueError("cannot decompose the zero polynomial")
    p = _normalized(poly)
    if p.degree == 0:
        return []
    dp = poly_derivative(p)
    g = poly_gcd(p, dp)
    if g.degree == 0:
        return [(p, 1)]
    c = poly_exact_div(p, g)
    d = poly_sub(poly_exact_div(dp, g), poly_derivative(c))
    out: list[tuple[IntPolynomial, int]] = []
    i = 1
    while c.degree > 0:
        a = poly_gcd(c, d)
        if a.degree > 0:
            out.append((a, i))
        c = poly_exact_div(c, a)
        d = poly_sub(poly_exact_div(d, a), poly_derivative(c))
        i += 1
    return out


# ----------------------------------------------------------------------
# Sturm chains and root counting

_POS_INF = object()
_NEG_INF = object()


def _coerce_endpoint(v, low: bool):
    if v is None:
        return _NEG_INF if low else _POS_INF
    if isinstance(v, float):
        if isinf(v):
            return _NEG_INF if v < 0 else _POS_INF
        raise TypeError("finite endpoints must be exact rationals, not floats")
    return Fraction(v)


def _sign_at_endpoint(coeffs: tuple[int, ...], pt) -> int:
    lead = coeffs[-1]
    if pt is _POS_INF:
        return (lead > 0) - (lead < 0)
    if pt is _NEG_INF:
        s = (lead > 0) - (lead < 0)
        return -s if (len(coeffs) - 1) % 2 else s
    return _sign_at(coeffs, pt)


def _variation_count(chain: list[tuple[int, ...]], pt) -> int:
    prev = 0
    n = 0
    for cs in chain:
        s = _sign_at_endpoint(cs, pt)
        if s == 0:
            continue
        if prev and s != prev:
            n += 1
        prev = s
    return n


def _sturm_chain(sf: IntPolynomial) -> list[tuple[int, ...]]:
    """Canonical Sturm chain of a square-free polynomial, over Z.

    Entries are primitive and sign-equivalent to the true remainder chain
    f, f', -rem(f, f'), ...
    """
    chain = [sf.coeffs]
    d = poly_derivative(sf)
    if d.is_zero:
        return chain
    chain.append(d.coeffs)
    while len(chain[-1]) > 1:
        nxt = _neg_rem_like(chain[-2], chain[-1])
        if not nxt:
            break
        chain.append(nxt)
    return chain


def sign_variations(coeffs) -> int:
    """Sign changes in a coefficient sequence, zeros skipped (Descartes)."""
    prev = 0
    n = 0
    for c in coeffs:
        s = (c > 0) - (c < 0)
        if s == 0:
            continue
        if prev and s != prev:
            n += 1
        prev = s
    return n


def sturm_count(poly: IntPolynomial, lo, hi) -> int:
    """Number of distinct real roots in the interval (lo, hi].

    lo and hi are exact rationals; pass None (or an infinite float) for an
    unbounded side.  Multiple roots count once.  Endpoints are allowed to be
    roots: a root at lo is excluded, a root at hi is included.
    """
    if poly.is_zero:
        raise ValueError("root counting needs a nonzero polynomial")
    a = _coerce_endpoint(lo, low=True)
    b = _coerce_endpoint(hi, low=False)
    if a is _POS_INF or b is _NEG_INF:
        raise ValueError("empty interval")
    if isinstance(a, Fraction) and isinstance(b, Fraction) and not a < b:
        raise ValueError("lo < hi required")
    sf = squarefree_part(poly)
    if sf.degree <= 0:
        return 0
    chain = _sturm_chain(sf)
    return _variation_count(chain, a) - _variation_count(chain, b)


def cauchy_root_bound(poly: IntPolynomial) -> Fraction:
    """A rational B with |r| < B for every real root r (degree >= 1)."""
    if poly.degree < 1:
        raise ValueError("root bound needs degree >= 1")
    an = abs(poly.coeffs[-1])
    mx = max(abs(c) for c in poly.coeffs[:-1])
    return 1 + Fraction(mx, an)


# ----------------------------------------------------------------------
# rational roots

def _divisors(n: int) -> list[int]:
    """Positive divisors of |n| (n != 0), via trial-division factorization."""
    n = abs(n)
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    divs = [1]
    for prime, e in factors.items():
        divs = [v * prime ** k for v in divs for k in range(e + 1)]
    return sorted(divs)


def _div_linear(cs: tuple[int, ...], num: int, den: int):
    """Exact division of an integer polynomial by (den*x - num).

    Returns the integer quotient coefficients, or None when the division is
    not exact over Z.  Synthetic division from the top; when the full
    division is exact every step is integral.
    """
    quot = [0] * (len(cs) - 1)
    r = cs[-1]
    for i in range(len(cs) - 1, 0, -1):
        qi, rem = divmod(r, den)
        if rem:
            return None
        quot[i - 1] = qi
        r = cs[i - 1] + num * qi
    if r != 0:
        return None
    return quot


def _rational_roots_stripped(cs: tuple[int, ...], positive_only: bool):
    """Rational roots (with multiplicity) of a primitive polynomial whose
    constant coefficient is nonzero.

    Candidates n/d run over divisor pairs of the constant and leading
    coefficients; (d - n) | f(1) and (d + n) | f(-1) filter out almost all
    of them before any full evaluation.
    """
    if len(cs) <= 1:
        return []
    f_at_1 = _scaled_value(cs, 1, 1)
    f_at_m1 = _scaled_value(cs, -1, 1)
    out = []
    lead_divisors = _divisors(cs[-1])
    const_divisors = _divisors(cs[0])
    for dn in lead_divisors:
        for nm in const_divisors:
            if gcd(nm, dn) != 1:
                continue
            for n in ((nm,) if positive_only else (nm, -nm)):
                t = dn - n
                if t and f_at_1 % t:
                    continue
                u = dn + n
                if u and f_at_m1 % u:
                    continue
                if _sign_at(cs, Fraction(n, dn)) != 0:
                    continue
                mult = 0
                cur = cs
                while True:
                    quot = _div_linear(cur, n, dn)
                    if quot is None:
                        break
                    mult += 1
                    cur = tuple(quot)
                out.append((Fraction(n, dn), mult))
    return out


def rational_roots(poly: IntPolynomial) -> list[tuple[Fraction, int]]:
    """All rational roots with exact multiplicities, ascending.

    Candidates come from the rational-root theorem applied to the primitive
    part; multiplicities are found by repeated exact deflation.
    """
    if poly.is_zero:
        raise ValueError("the zero polynomial vanishes everywhere")
    cs = primitive_part(poly).coeffs
    out: list[tuple[Fraction, int]] = []
    k = 0
    while cs[k] == 0:
        k += 1
    if k:
        out.append((Fraction(0), k))
        cs = cs[k:]
    out.extend(_rational_roots_stripped(cs, positive_only=False))
    out.sort(key=lambda t: t[0])
    return out


# ----------------------------------------------------------------------
# isolation of positive real roots

@dataclass(frozen=True)
class RationalInterval:
    """Open-ended certificate interval with exact rational endpoints.

    The endpoints are never roots of the certified polynomial; the interval
    contains exactly one of its distinct real roots.
    """

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        if not self.lo < self.hi:
            raise ValueError("interval needs lo < hi")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2


@dataclass(frozen=True)
class RootRecord:
    """One distinct positive real root: exact rational or isolating interval."""

    value: "Fraction | RationalInterval"
    multiplicity: int
    is_rational: bool

    @property
    def position(self) -> Fraction:
        """A sort key below the root for rationals, below-left for intervals."""
        return self.value if self.is_rational else self.value.lo

    def contains(self, q: Fraction) -> bool:
        if self.is_rational:
            return self.value == q
        return self.value.lo <= q <= self.value.hi


def _isolate_cells(irr: IntPolynomial) -> list[tuple[Fraction, Fraction]]:
    """Disjoint cells (lo, hi] on (0, B], each holding one root of irr.

    irr must be square-free with no rational roots, so no subdivision point
    can ever be a root.
    """
    bound = cauchy_root_bound(irr)
    chain = _sturm_chain(irr)
    cache: dict[tuple[int, int], int] = {}

    def var(pt: Fraction) -> int:
        key = (pt.numerator, pt.denominator)
        if key not in cache:
            cache[key] = _variation_count(chain, pt)
        return cache[key]

    cells = []
    work = [(Fraction(0), bound)]
    while work:
        lo, hi = work.pop()
        n = var(lo) - var(hi)
        if n == 0:
            continue
        if n == 1:
            cells.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        work.append((lo, mid))
        work.append((mid, hi))
    cells.sort()
    return cells


def _refine_cell(irr, lo, hi, max_width, exclude):
    """Shrink a sign-change cell below max_width and away from exclude points.

    The cell must bracket a sign change of irr with no rational root of irr
    inside, so bisection midpoints never land on a root.  Endpoints are kept
    as integer numerators over one common denominator while iterating.
    """
    cs = irr.coeffs
    s_lo = _sign_at(cs, lo)
    den = lo.denominator * hi.denominator // gcd(lo.denominator, hi.denominator)
    a = lo.numerator * (den // lo.denominator)
    b = hi.numerator * (den // hi.denominator)
    w_num, w_den = max_width.numerator, max_width.denominator
    points = [(r.numerator, r.denominator) for r in exclude]

    def done(a, b, den):
        if (b - a) * w_den > w_num * den:
            return False
        return not any(a * rd <= rn * den <= b * rd for rn, rd in points)

    while not done(a, b, den):
        mid = a + b
        s = _scaled_value(cs, mid, 2 * den)
        if ((s > 0) - (s < 0)) == s_lo:
            a, b, den = mid, 2 * b, 2 * den
        else:
            a, b, den = 2 * a, mid, 2 * den
    return Fraction(a, den), Fraction(b, den)


def isolate_positive_roots(poly: IntPolynomial, precision: int = 12) -> list[RootRecord]:
    """Certified records of all distinct positive real roots, ascending.

    Rational roots are reported exactly; every other root gets an isolating
    interval of width at most 10**-precision whose closure avoids all other
    roots and all other record intervals.  Multiplicities are read off the
    Yun decomposition.
    """
    if poly.is_zero:
        raise ValueError("cannot isolate roots of the zero polynomial")
    if not 1 <= precision <= 1000:
        raise ValueError("precision must be between 1 and 1000")
    if poly.degree == 0:
        return []

    stripped = primitive_part(poly).coeffs
    k = 0
    while stripped[k] == 0:
        k += 1
    pos_rats = _rational_roots_stripped(stripped[k:], positive_only=True)
    records = [RootRecord(r, m, True) for r, m in pos_rats]

    # strip the zero root and every positive rational root out of the
    # square-free part; bisection on (0, B] then never meets a root at a
    # rational point
    irr = squarefree_part(poly)
    if irr.coeffs[0] == 0:
        irr = IntPolynomial(irr.coeffs[1:])
    for r, _ in pos_rats:
        quot = _div_linear(irr.coeffs, r.numerator, r.denominator)
        if quot is None:
            raise RuntimeError("square-free part lost a known rational root")
        irr = IntPolynomial(tuple(quot))

    if irr.degree >= 1:
        max_width = Fraction(1, 10 ** precision)
        exclude = [r for r, _ in pos_rats]
        factors = squarefree_decompose(poly)
        intervals = []
        for lo, hi in _isolate_cells(irr):
            lo, hi = _refine_cell(irr, lo, hi, max_width, exclude)
            intervals.append((lo, hi))
        # separate closures of adjacent cells (they may share an endpoint)
        intervals.sort()
        changed = True
        while changed:
            changed = False
            for i in range(len(intervals) - 1):
                lo1, hi1 = intervals[i]
                lo2, hi2 = intervals[i + 1]
                if hi1 >= lo2:
                    intervals[i] = _refine_cell(irr, lo1, hi1, (hi1 - lo1) / 2, exclude)
                    intervals[i + 1] = _refine_cell(irr, lo2, hi2, (hi2 - lo2) / 2, exclude)
                    changed = True
        for lo, hi in intervals:
            mult = 0
            for fac, m in factors:
                if _sign_at(fac.coeffs, lo) * _sign_at(fac.coeffs, hi) < 0:
                    mult = m
                    break
            if mult == 0:
                raise RuntimeError("isolated interval matches no square-free factor")
            records.append(RootRecord(RationalInterval(lo, hi), mult, False))

    records.sort(key=lambda rec: rec.position)
    return records


# ----------------------------------------------------------------------
# discriminant

def cubic_discriminant(a3, a2, a1, a0) -> Fraction:
    """Discriminant of a3*x^3 + a2*x^2 + a1*x + a0 (a3 != 0)."""
    a3, a2, a1, a0 = Fraction(a3), Fraction(a2), Fraction(a1), Fraction(a0)
    if a3 == 0:
        raise ValueError("leading cubic coefficient must be nonzero")
    return (18 * a3 * a2 * a1 * a0
            - 4 * a2 ** 3 * a0
            + a2 ** 2 * a1 ** 2
            - 4 * a3 * a1 ** 3
            - 27 * a3 ** 2 * a0 ** 2)


def format_poly(poly: IntPolynomial, var: str = "x") -> str:
    """Human-readable rendering, highest degree first."""
    if poly.is_zero:
        return "0"
    parts = []
    for i in range(poly.degree, -1, -1):
        c = poly.coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            x = var if i == 1 else f"{var}^{i}"
            body = x if mag == 1 else f"{mag}*{x}"
        parts.append((sign, body))
    head_sign, head = parts[0]
    text = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text
