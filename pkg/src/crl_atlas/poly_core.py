"""Exact arithmetic for binary forms over the rationals.

A binary form of degree d is stored as the coefficient tuple (c_0, ..., c_d)
of f = sum_i c_i x^(d-i) y^i in the plain monomial basis, so c_0 multiplies
x^d. Real-root counting works projectively: the root [1:0] at infinity is
tracked through the power of y split off before dehomogenizing, never by
perturbation. Everything in this module is exact; floats never appear.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import _intlinalg

Rational = Fraction
UvPoly = list[Fraction]  # ascending coefficients, no trailing zeros, [] is zero


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" into an exact rational."""
    return Fraction(text.strip())


def format_rational(x: Fraction | int) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class BinaryForm:
    """Homogeneous polynomial in x, y with exact rational coefficients."""

    degree: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise ValueError("degree must be nonnegative")
        if len(self.coeffs) != self.degree + 1:
            raise ValueError("coefficient count must be degree + 1")

    @classmethod
    def from_coeffs(cls, coeffs) -> "BinaryForm":
        cs = tuple(Fraction(c) for c in coeffs)
        if not cs:
            raise ValueError("empty coefficient list")
        return cls(len(cs) - 1, cs)

    @classmethod
    def zero(cls, degree: int) -> "BinaryForm":
        return cls(degree, tuple(Fraction(0) for _ in range(degree + 1)))

    @classmethod
    def from_roots(cls, roots, infinity: int = 0) -> "BinaryForm":
        """Product of (x - t*y) over the given roots times y^infinity.

        Repeat a root to get higher multiplicity. Multiplying by y prepends
        a zero coefficient (it shifts every monomial one step up in y).
        """
        coeffs = [Fraction(1)]
        for t in roots:
            t = Fraction(t)
            nxt = [Fraction(0)] * (len(coeffs) + 1)
            for i, c in enumerate(coeffs):
                nxt[i] += c
                nxt[i + 1] -= c * t
            coeffs = nxt
        coeffs = [Fraction(0)] * infinity + coeffs
        return cls.from_coeffs(coeffs)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def coefficient(self, i: int) -> Fraction:
        """Coefficient of x^(d-i) y^i."""
        return self.coeffs[i]

    def evaluate(self, xv, yv) -> Fraction:
        xv, yv = Fraction(xv), Fraction(yv)
        total = Fraction(0)
        for i, c in enumerate(self.coeffs):
            if c:
                total += c * xv ** (self.degree - i) * yv**i
        return total

    def scale(self, c) -> "BinaryForm":
        c = Fraction(c)
        return BinaryForm(self.degree, tuple(c * v for v in self.coeffs))

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        if self.degree != other.degree:
            raise ValueError("cannot add forms of different degree")
        return BinaryForm(
            self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "BinaryForm") -> "BinaryForm":
        return self + other.scale(-1)

    def __neg__(self) -> "BinaryForm":
        return self.scale(-1)

    def __mul__(self, other: "BinaryForm") -> "BinaryForm":
        d = self.degree + other.degree
        out = [Fraction(0)] * (d + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return BinaryForm(d, tuple(out))

    def swap_xy(self) -> "BinaryForm":
        """The form f(y, x); reverses the coefficient tuple."""
        return BinaryForm(self.degree, tuple(reversed(self.coeffs)))

    def primitive(self) -> "BinaryForm":
        """Integer-primitive scalar multiple with first nonzero coefficient > 0."""
        if self.is_zero:
            raise ValueError("zero form has no primitive representative")
        vec = _intlinalg.primitive_vector(list(self.coeffs))
        return BinaryForm(self.degree, tuple(Fraction(v) for v in vec))

    def to_json(self, dual: bool = False) -> dict:
        data = {
            "degree": self.degree,
            "coeffs": [format_rational(c) for c in self.coeffs],
        }
        if dual:
            data["dual"] = True
        return data

    @classmethod
    def from_json(cls, data: dict) -> "BinaryForm":
        coeffs = [parse_rational(c) for c in data["coeffs"]]
        form = cls.from_coeffs(coeffs)
        if form.degree != data["degree"]:
            raise ValueError("degree field disagrees with coefficient count")
        return form

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            xs = self.degree - i
            mono = "*".join(
                s
                for s in (
                    f"x^{xs}" if xs > 1 else ("x" if xs == 1 else ""),
                    f"y^{i}" if i > 1 else ("y" if i == 1 else ""),
                )
                if s
            )
            if not mono:
                parts.append(format_rational(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{format_rational(c)}*{mono}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


# ---------------------------------------------------------------------------
# univariate helpers (ascending coefficient lists over Fraction)


def uv_normalize(p) -> UvPoly:
    p = [Fraction(c) for c in p]
    while p and p[-1] == 0:
        p.pop()
    return p


def uv_degree(p: UvPoly) -> int:
    return len(p) - 1  # -1 for the zero polynomial


def uv_eval(p: UvPoly, x) -> Fraction:
    x = Fraction(x)
    total = Fraction(0)
    for c in reversed(p):
        total = total * x + c
    return total


def uv_deriv(p: UvPoly) -> UvPoly:
    return uv_normalize([i * c for i, c in enumerate(p)][1:])


def uv_rem(a: UvPoly, b: UvPoly) -> UvPoly:
    """Remainder of a by b over the rationals."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db, lb = uv_degree(b), b[-1]
    while len(r) - 1 >= db and r:
        if r[-1] == 0:
            r.pop()
            continue
        q = r[-1] / lb
        shift = len(r) - 1 - db
        for i, c in enumerate(b):
            r[shift + i] -= q * c
        r.pop()
    return uv_normalize(r)


def _uv_primitive(p: UvPoly) -> UvPoly:
    """Scale by a positive rational to primitive integer coefficients."""
    if not p:
        return []
    den = 1
    for c in p:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    return [Fraction(v, g) for v in ints]


def uv_gcd(a: UvPoly, b: UvPoly) -> UvPoly:
    """Monic gcd over the rationals (Euclid with primitive renormalization)."""
    a, b = uv_normalize(a), uv_normalize(b)
    while b:
        a, b = b, _uv_primitive(uv_rem(a, b))
    if not a:
        return []
    return [c / a[-1] for c in a]


def uv_squarefree_part(p: UvPoly) -> UvPoly:
    p = uv_normalize(p)
    if uv_degree(p) < 1:
        return p
    g = uv_gcd(p, uv_deriv(p))
    if uv_degree(g) == 0:
        return [c / p[-1] for c in p]
    q, r = _uv_divmod(p, g)
    if r:
        raise ArithmeticError("gcd does not divide its polynomial")
    return [c / q[-1] for c in q]


def _uv_divmod(a: UvPoly, b: UvPoly) -> tuple[UvPoly, UvPoly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db, lb = uv_degree(b), b[-1]
    q = [Fraction(0)] * max(len(a) - db, 1)
    while len(r) - 1 >= db and r:
        if r[-1] == 0:
            r.pop()
            continue
        c = r[-1] / lb
        shift = len(r) - 1 - db
        q[shift] = c
        for i, bc in enumerate(b):
            r[shift + i] -= c * bc
        r.pop()
    return uv_normalize(q), uv_normalize(r)


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def sturm_chain(p: UvPoly) -> list[UvPoly]:
    """Sturm chain of a squarefree polynomial, primitive-integer normalized."""
    chain = [_uv_primitive(p)]
    d = uv_deriv(p)
    if d:
        chain.append(_uv_primitive(d))
    while len(chain) >= 2 and chain[-1]:
        r = uv_rem(chain[-2], chain[-1])
        if not r:
            break
        chain.append(_uv_primitive([-c for c in r]))
    return chain


def _variations(signs: list[int]) -> int:
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _sturm_signs_at(chain: list[UvPoly], x: Fraction) -> list[int]:
    return [_sign(uv_eval(q, x)) for q in chain]


def _sturm_signs_at_inf(chain: list[UvPoly], positive: bool) -> list[int]:
    out = []
    for q in chain:
        if not q:
            out.append(0)
            continue
        s = _sign(q[-1])
        if not positive and uv_degree(q) % 2 == 1:
            s = -s
        out.append(s)
    return out


def uv_count_real_roots(p: UvPoly, lo: Fraction | None = None, hi: Fraction | None = None) -> int:
    """Number of distinct real roots of p, in (lo, hi] when bounds are given.

    Finite bounds must not themselves be roots of the squarefree part when
    an exact open-interval count is wanted; internal callers guarantee this.
    """
    p = uv_normalize(p)
    if not p:
        raise ValueError("zero polynomial")
    ps = uv_squarefree_part(p)
    if uv_degree(ps) < 1:
        return 0
    chain = sturm_chain(ps)
    lo_signs = (
        _sturm_signs_at_inf(chain, positive=False)
        if lo is None
        else _sturm_signs_at(chain, Fraction(lo))
    )
    hi_signs = (
        _sturm_signs_at_inf(chain, positive=True)
        if hi is None
        else _sturm_signs_at(chain, Fraction(hi))
    )
    return _variations(lo_signs) - _variations(hi_signs)


def uv_interpolate(points: list[tuple[Fraction, Fraction]]) -> UvPoly:
    """Exact Lagrange interpolation through (x, y) pairs with distinct x."""
    result: UvPoly = []
    for i, (xi, yi) in enumerate(points):
        if yi == 0:
            continue
        # numerator polynomial prod_{k != i} (z - x_k), built incrementally
        num: UvPoly = [Fraction(1)]
        denom = Fraction(1)
        for k, (xk, _) in enumerate(points):
            if k == i:
                continue
            nxt = [Fraction(0)] * (len(num) + 1)
            for m, c in enumerate(num):
                nxt[m] -= c * xk
                nxt[m + 1] += c
            num = nxt
            denom *= xi - xk
        scale = yi / denom
        if len(num) > len(result):
            result = result + [Fraction(0)] * (len(num) - len(result))
        for m, c in enumerate(num):
            result[m] += scale * c
    return uv_normalize(result)


def uv_root_bound(p: UvPoly) -> Fraction:
    """Cauchy bound: every real root lies strictly inside (-B, B)."""
    p = uv_normalize(p)
    if uv_degree(p) < 1:
        return Fraction(1)
    lead = abs(p[-1])
    m = max(abs(c) for c in p[:-1]) if len(p) > 1 else Fraction(0)
    return Fraction(1) + m / lead


def isolate_real_roots(p: UvPoly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint open rational intervals isolating the distinct real roots.

    Each (a, b) satisfies a < root < b, contains exactly one root of the
    squarefree part of p, and the endpoints are never roots.
    """
    ps = uv_squarefree_part(uv_normalize(p))
    if uv_degree(ps) < 1:
        return []
    chain = sturm_chain(ps)
    bound = uv_root_bound(ps)

    def count(a: Fraction, b: Fraction) -> int:
        return _variations(_sturm_signs_at(chain, a)) - _variations(
            _sturm_signs_at(chain, b)
        )

    def split_point(lo: Fraction, hi: Fraction) -> Fraction:
        width = hi - lo
        for num, den in ((1, 2), (1, 3), (2, 3), (2, 5), (3, 5), (3, 7), (4, 7)):
            cand = lo + width * Fraction(num, den)
            if uv_eval(ps, cand) != 0:
                return cand
        raise ArithmeticError("could not find a non-root split point")

    out: list[tuple[Fraction, Fraction]] = []

    def recurse(lo: Fraction, hi: Fraction) -> None:
        n = count(lo, hi)
        if n == 0:
            return
        if n == 1:
            out.append((lo, hi))
            return
        mid = split_point(lo, hi)
        recurse(lo, mid)
        recurse(mid, hi)

    recurse(-bound, bound)
    out.sort()
    return out


# ---------------------------------------------------------------------------
# binary form operations


def derivative(f: BinaryForm, var: str) -> BinaryForm:
    """Formal partial derivative; the result always has degree d - 1."""
    d = f.degree
    if d == 0:
        raise ValueError("cannot lower the degree of a constant form")
    if var == "x":
        return BinaryForm(d - 1, tuple((d - i) * f.coeffs[i] for i in range(d)))
    if var == "y":
        return BinaryForm(d - 1, tuple((i + 1) * f.coeffs[i + 1] for i in range(d)))
    raise ValueError("var must be 'x' or 'y'")


def _split_y_power(f: BinaryForm) -> tuple[int, UvPoly]:
    """Write f = y^a * g with g(1, 0) != 0; returns (a, dehomogenization of g).

    The returned univariate polynomial is g(z, 1) in ascending order, and its
    degree equals deg g, so no root information hides at infinity.
    """
    a = next(i for i, c in enumerate(f.coeffs) if c != 0)
    # c_i multiplies z^(d-i); ascending index k = d - i
    tail = f.coeffs[a:]
    return a, uv_normalize(list(reversed(tail)))


def gcd_poly(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Monic gcd of two binary forms.

    The y-power of each input is split off and tracked explicitly, the
    dehomogenized parts run through the univariate Euclid, and the result is
    rehomogenized. Monic means the first nonzero coefficient is 1. Raises
    when both inputs are zero.
    """
    if f.is_zero and g.is_zero:
        raise ValueError("gcd of two zero forms is undefined")
    if f.is_zero or g.is_zero:
        h = g if f.is_zero else f
        lead = next(c for c in h.coeffs if c != 0)
        return h.scale(1 / lead)
    af, pf = _split_y_power(f)
    ag, pg = _split_y_power(g)
    h = uv_gcd(pf, pg)
    return _homogenize_with_y(h, min(af, ag))


def _homogenize_with_y(p: UvPoly, y_power: int) -> BinaryForm:
    """Binary form y^y_power * P(x, y) where P homogenizes p to its degree."""
    m = uv_degree(p)
    if m < 0:
        raise ValueError("cannot homogenize the zero polynomial")
    # P has coefficients c_i = p[m - i] for x^(m-i) y^i; multiplying by y^a
    # shifts every y exponent up by a.
    d = m + y_power
    coeffs = [Fraction(0)] * (d + 1)
    for i in range(m + 1):
        coeffs[i + y_power] = p[m - i]
    return BinaryForm(d, tuple(coeffs))


def is_squarefree(f: BinaryForm) -> bool:
    """True when no projective root (including [1:0]) is repeated."""
    if f.is_zero:
        raise ValueError("squarefreeness of the zero form is undefined")
    if f.degree <= 1:
        return True
    g1 = gcd_poly(f, derivative(f, "x"))
    if g1.degree == 0:
        return True
    g2 = gcd_poly(g1, derivative(f, "y"))
    return g2.degree == 0


def count_real_roots(f: BinaryForm) -> tuple[int, bool]:
    """(number of distinct real projective roots, all roots simple).

    The root [1:0] at infinity is counted through the explicit y-power
    bookkeeping; the finite roots through a Sturm chain of the squarefree
    part of the dehomogenization.
    """
    if f.is_zero:
        raise ValueError("the zero form has no root count")
    if f.degree == 0:
        return 0, True
    a, p = _split_y_power(f)
    finite = uv_count_real_roots(p) if uv_degree(p) >= 1 else 0
    return finite + (1 if a > 0 else 0), is_squarefree(f)


def is_real_rooted(f: BinaryForm) -> bool:
    """True when f splits into d distinct real linear factors."""
    count, simple = count_real_roots(f)
    return simple and count == f.degree


def resultant(f: BinaryForm, g: BinaryForm) -> Fraction:
    """Resultant of two binary forms via the Sylvester determinant.

    Both forms enter with their full formal degrees, so roots at infinity
    need no special treatment: the resultant vanishes exactly when the forms
    share a projective root.
    """
    m, n = f.degree, g.degree
    size = m + n
    if size == 0:
        return Fraction(1)
    rows = []
    fc, gc = list(f.coeffs), list(g.coeffs)
    for i in range(n):
        rows.append([Fraction(0)] * i + fc + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + gc + [Fraction(0)] * (size - n - 1 - i))
    return _intlinalg.det(rows)


def discriminant(f: BinaryForm) -> Fraction:
    """Resultant of the two partials; zero iff f has a repeated projective root."""
    if f.degree <= 1:
        return Fraction(1)
    fx = derivative(f, "x")
    fy = derivative(f, "y")
    if fx.is_zero or fy.is_zero:
        return Fraction(0)
    return resultant(fx, fy)
