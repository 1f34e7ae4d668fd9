"""Dense exact univariate polynomials and reduced rational functions.

Coefficients are ``fractions.Fraction`` by default; any exact field element
supporting ``+ - * ==`` and ``inverse()`` (e.g. ``CycNumber``) works as well.
Every polynomial carries a variable tag (``"t"`` or ``"q"``) and binary
operations refuse to mix tags.

The folding trio ``fold_palindromic`` / ``substitute_t`` / ``cox`` moves
between palindromic polynomials in q and polynomials in t = q + 1/q.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb


def _coerce(c):
    return Fraction(c) if isinstance(c, int) else c


def _inv(c):
    """Multiplicative inverse of a coefficient."""
    if isinstance(c, Fraction):
        return Fraction(c.denominator, c.numerator)
    return c.inverse()


def format_coeff(c: Fraction) -> str:
    """Render a rational as a decimal string, "p" or "p/q"."""
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def parse_coeff(s: str) -> Fraction:
    return Fraction(s)


class Polynomial:
    """Dense univariate polynomial; ``coeffs[k]`` multiplies ``var**k``.

    Trailing zero coefficients are stripped, so the zero polynomial has an
    empty coefficient tuple and degree -1.
    """

    __slots__ = ("var", "coeffs")

    def __init__(self, var: str, coeffs=()):
        norm = [_coerce(c) for c in coeffs]
        while norm and norm[-1] == 0:
            norm.pop()
        self.var = var
        self.coeffs = tuple(norm)

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, var: str) -> Polynomial:
        return cls(var, ())

    @classmethod
    def one(cls, var: str) -> Polynomial:
        return cls(var, (1,))

    @classmethod
    def constant(cls, var: str, value) -> Polynomial:
        return cls(var, (value,))

    @classmethod
    def monomial(cls, var: str, exp: int, coeff=1) -> Polynomial:
        if exp < 0:
            raise ValueError("negative exponent")
        return cls(var, (0,) * exp + (coeff,))

    # -- inspection ----------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def support(self) -> tuple[int, ...]:
        return tuple(k for k, c in enumerate(self.coeffs) if c != 0)

    def min_exponent(self) -> int:
        """Smallest exponent with nonzero coefficient (-1 for zero)."""
        for k, c in enumerate(self.coeffs):
            if c != 0:
                return k
        return -1

    def leading(self):
        if not self.coeffs:
            raise ZeroDivisionError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_palindromic(self) -> bool:
        """True iff var**deg * p(1/var) == p."""
        if self.is_zero():
            return True
        d = self.degree
        return all(self.coefficient(k) == self.coefficient(d - k) for k in range(d + 1))

    def _check_var(self, other: Polynomial):
        if self.var != other.var:
            raise ValueError(f"variable mismatch: {self.var!r} vs {other.var!r}")

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.var, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_var(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return Polynomial(self.var, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.var, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.var, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scaled(other)
        self._check_var(other)
        if self.is_zero() or other.is_zero():
            return Polynomial.zero(self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b != 0:
                    out[i + j] = out[i + j] + a * b
        return Polynomial(self.var, out)

    def __rmul__(self, other):
        return self.scaled(other)

    def scaled(self, c) -> Polynomial:
        c = _coerce(c)
        return Polynomial(self.var, tuple(c * a for a in self.coeffs))

    def shifted(self, k: int) -> Polynomial:
        """Multiplication by var**k."""
        if self.is_zero():
            return self
        return Polynomial(self.var, (0,) * k + self.coeffs)

    def __pow__(self, n: int) -> Polynomial:
        if n < 0:
            raise ValueError("negative power")
        out = Polynomial.one(self.var)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __divmod__(self, other: Polynomial):
        self._check_var(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead_inv = _inv(other.leading())
        quo = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            f = c * lead_inv
            quo[k - dq] = f
            for j, b in enumerate(other.coeffs):
                rem[k - dq + j] = rem[k - dq + j] - f * b
        return Polynomial(self.var, quo), Polynomial(self.var, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: Polynomial) -> Polynomial:
        quo, rem = divmod(self, other)
        if not rem.is_zero():
            raise ValueError(f"{self} is not divisible by {other}")
        return quo

    def monic(self) -> Polynomial:
        if self.is_zero():
            return self
        return self.scaled(_inv(self.leading()))

    def evaluate(self, x):
        """Horner evaluation; x may be a Fraction, CycNumber, or RationalFunction."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        return acc if acc is not None else Fraction(0)

    # -- comparisons ------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.var == other.var and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return self.is_zero()
            return self.degree == 0 and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        return hash((self.var, self.coeffs))

    # -- presentation ------------------------------------------------------
    def __str__(self):
        if self.is_zero():
            return "0"
        # q-polynomials read ascending (1+q^6), t-polynomials descending (t^2-3)
        order = enumerate(self.coeffs)
        if self.var == "t":
            order = reversed(list(order))
        parts = []
        for k, c in order:
            if c == 0:
                continue
            if isinstance(c, Fraction):
                neg = c < 0
                mag = -c if neg else c
                if k == 0:
                    body = format_coeff(mag)
                else:
                    unit = self.var if k == 1 else f"{self.var}^{k}"
                    if mag == 1:
                        body = unit
                    elif mag.denominator == 1:
                        body = f"{mag.numerator}{unit}"
                    else:
                        body = f"({format_coeff(mag)}){unit}"
                parts.append(("-" if neg else "+", body))
            else:
                unit = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
                parts.append(("+", f"({c}){unit}"))
        sign, first = parts[0]
        text = ("-" if sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += sign + body
        return text

    def __repr__(self):
        return f"Polynomial({self.var!r}, {self.coeffs!r})"

    # -- JSON ---------------------------------------------------------------
    def to_json(self) -> dict:
        return {"var": self.var, "coeffs": [format_coeff(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> Polynomial:
        return cls(obj["var"], [parse_coeff(c) for c in obj["coeffs"]])


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd over the coefficient field."""
    a._check_var(b)
    while not b.is_zero():
        a, b = b, a % b
    if a.is_zero():
        return a
    return a.monic()


def poly_lcm(a: Polynomial, b: Polynomial) -> Polynomial:
    if a.is_zero() or b.is_zero():
        return Polynomial.zero(a.var)
    return (a * b).exact_div(poly_gcd(a, b)).monic()


class RationalFunction:
    """Reduced fraction of polynomials with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial | None = None):
        if den is None:
            den = Polynomial.one(num.var)
        num._check_var(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = Polynomial.one(num.var)
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
            lead_inv = _inv(den.leading())
            num = num.scaled(lead_inv)
            den = den.scaled(lead_inv)
        self.num = num
        self.den = den

    @classmethod
    def zero(cls, var: str) -> RationalFunction:
        return cls(Polynomial.zero(var))

    @classmethod
    def one(cls, var: str) -> RationalFunction:
        return cls(Polynomial.one(var))

    @classmethod
    def constant(cls, var: str, value) -> RationalFunction:
        return cls(Polynomial.constant(var, value))

    @property
    def var(self) -> str:
        return self.num.var

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den == 1

    def as_polynomial(self) -> Polynomial:
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a polynomial")
        return self.num

    def _lift(self, other) -> RationalFunction:
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Polynomial):
            return RationalFunction(other)
        if isinstance(other, (int, Fraction)):
            return RationalFunction.constant(self.var, other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __eq__(self, other):
        if isinstance(other, (Polynomial, int, Fraction)):
            other = self._lift(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        num = str(self.num)
        if len(self.num.support()) > 1:
            num = f"({num})"
        return f"{num}/({self.den})"

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> RationalFunction:
        return cls(Polynomial.from_json(obj["num"]), Polynomial.from_json(obj["den"]))


def series_coefficients(rf: RationalFunction, nterms: int) -> list[Fraction]:
    """First ``nterms`` Taylor coefficients of ``rf`` at 0 (den(0) != 0)."""
    den = rf.den
    d0 = den.coefficient(0)
    if d0 == 0:
        raise ZeroDivisionError("denominator vanishes at 0")
    inv0 = _inv(d0)
    out = []
    for k in range(nterms):
        acc = rf.num.coefficient(k)
        for j in range(1, min(k, den.degree) + 1):
            acc = acc - den.coefficient(j) * out[k - j]
        out.append(acc * inv0)
    return out


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> Polynomial:
    """The n-th cyclotomic polynomial in q, by dividing q**n - 1 by the
    cyclotomic polynomials of the proper divisors of n."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    p = Polynomial("q", (-1,) + (0,) * (n - 1) + (1,))
    for d in range(1, n):
        if n % d == 0:
            p = p.exact_div(cyclotomic(d))
    return p


def fold_palindromic(p: Polynomial) -> Polynomial:
    """Write a palindromic p(q) of even degree 2k as q**k * F(q + 1/q).

    Works down from the top coefficient, subtracting multiples of
    q**(k-j) * (q^2+1)**j, the image of t**j.
    """
    if p.is_zero():
        return Polynomial.zero("t")
    d = p.degree
    if d % 2 != 0:
        raise ValueError(f"cannot fold odd degree {d}")
    if not p.is_palindromic():
        raise ValueError("cannot fold a non-palindromic polynomial")
    k = d // 2
    work = list(p.coeffs) + [Fraction(0)] * (2 * k + 1 - len(p.coeffs))
    out = [Fraction(0)] * (k + 1)
    for j in range(k, -1, -1):
        c = work[k + j]
        out[j] = c
        if c != 0:
            for i in range(j + 1):
                work[k - j + 2 * i] = work[k - j + 2 * i] - c * comb(j, i)
    if any(c != 0 for c in work):
        raise ValueError("fold left a nonzero remainder")
    return Polynomial("t", out)


def substitute_t(p: Polynomial) -> tuple[Polynomial, int]:
    """Substitute t = q + 1/q and clear: returns (P, d) with
    p(q + 1/q) = P(q) / q**d and d = deg p."""
    if p.var != "t":
        raise ValueError(f"substitute_t expects a polynomial in t, got {p.var!r}")
    if p.is_zero():
        return Polynomial.zero("q"), 0
    d = p.degree
    basis = Polynomial("q", (1, 0, 1))  # q^2 + 1 = q * (q + 1/q)
    power = Polynomial.one("q")
    acc = Polynomial.zero("q")
    for i, c in enumerate(p.coeffs):
        if c != 0:
            acc = acc + power.scaled(c).shifted(d - i)
        if i < d:
            power = power * basis
    return acc, d


@lru_cache(maxsize=None)
def cox(h: int) -> Polynomial:
    """Minimal polynomial of 2*cos(pi/h) in t: the fold of the (2h)-th
    cyclotomic polynomial. Degree phi(2h)/2."""
    if h < 2:
        raise ValueError("Coxeter number must be at least 2")
    return fold_palindromic(cyclotomic(2 * h))
