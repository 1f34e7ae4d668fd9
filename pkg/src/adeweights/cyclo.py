"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are residues modulo the N-th cyclotomic polynomial, stored in the
power basis 1, zeta, ..., zeta^(phi(N)-1). Internally a value is a vector of
integers over one common denominator, which keeps products cheap; the
``coeffs`` property exposes the vector of Fractions.

Arithmetic never mixes conductors: callers embed into a common conductor
first (``embed``), which is exponent scaling zeta_N -> zeta_M**(M/N).
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd

from .errors import NotRational
from .poly import Polynomial, cyclotomic


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("euler_phi of a non-positive integer")
    out = n
    d = 2
    m = n
    while d * d <= m:
        if m % d == 0:
            out -= out // d
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out -= out // m
    return out


class _Field:
    """Per-conductor context: reduction rows for zeta^e, e >= phi(N)."""

    def __init__(self, N: int):
        self.N = N
        self.phi = euler_phi(N)
        coeffs = cyclotomic(N).coeffs
        assert all(c.denominator == 1 for c in coeffs)
        # zeta^phi = -(c_0 + c_1 zeta + ... + c_{phi-1} zeta^{phi-1})
        self._base = tuple(-int(c) for c in coeffs[: self.phi])
        self._rows: list[tuple[int, ...]] = [self._base]

    def row(self, e: int) -> tuple[int, ...]:
        """Integer row expressing zeta^e in the power basis (e >= phi)."""
        while e - self.phi >= len(self._rows):
            prev = self._rows[-1]
            top = prev[-1]
            shifted = [0] + list(prev[:-1])
            if top:
                for i, b in enumerate(self._base):
                    shifted[i] += top * b
            self._rows.append(tuple(shifted))
        return self._rows[e - self.phi]

    def reduce(self, nums: list[int]) -> list[int]:
        for e in range(len(nums) - 1, self.phi - 1, -1):
            c = nums[e]
            if c:
                nums[e] = 0
                for i, r in enumerate(self.row(e)):
                    if r:
                        nums[i] += c * r
        del nums[self.phi:]
        while len(nums) < self.phi:
            nums.append(0)
        return nums


@lru_cache(maxsize=None)
def _field(N: int) -> _Field:
    return _Field(N)


class CycNumber:
    """Element of Q(zeta_N): integer coordinate vector over one denominator."""

    __slots__ = ("N", "_den", "_nums", "_hash")

    def __init__(self, N: int, nums, den: int = 1):
        if N < 1:
            raise ValueError("conductor must be positive")
        fld = _field(N)
        nums = list(nums)
        if len(nums) != fld.phi:
            raise ValueError(f"need phi({N}) = {fld.phi} coordinates, got {len(nums)}")
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            den = -den
            nums = [-a for a in nums]
        g = reduce(gcd, nums, den)
        if g > 1:
            den //= g
            nums = [a // g for a in nums]
        if not any(nums):
            den = 1
        self.N = N
        self._den = den
        self._nums = tuple(nums)
        self._hash = hash((N, den, self._nums))

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls, N: int) -> CycNumber:
        return cls(N, [0] * _field(N).phi)

    @classmethod
    def one(cls, N: int) -> CycNumber:
        return cls.from_rational(N, 1)

    @classmethod
    def from_rational(cls, N: int, value) -> CycNumber:
        value = Fraction(value)
        nums = [0] * _field(N).phi
        nums[0] = value.numerator
        return cls(N, nums, value.denominator)

    @classmethod
    def root_of_unity(cls, N: int, e: int) -> CycNumber:
        fld = _field(N)
        e %= N
        nums = [0] * max(fld.phi, e + 1)
        nums[e] = 1
        return cls(N, fld.reduce(nums))

    # -- inspection -------------------------------------------------------
    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(a, self._den) for a in self._nums)

    def is_zero(self) -> bool:
        return not any(self._nums)

    def is_rational(self) -> bool:
        return not any(self._nums[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise NotRational(f"{self} has irrational residue components")
        return Fraction(self._nums[0], self._den)

    def sort_key(self):
        return (self._den, self._nums)

    # -- coercion -----------------------------------------------------------
    def _lift(self, other):
        if isinstance(other, CycNumber):
            if other.N != self.N:
                raise ValueError(f"conductor mismatch: {self.N} vs {other.N}")
            return other
        if isinstance(other, (int, Fraction)):
            return CycNumber.from_rational(self.N, other)
        return None

    # -- ring operations ------------------------------------------------------
    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        da, db = self._den, other._den
        g = gcd(da, db)
        ma, mb = db // g, da // g
        nums = [a * ma + b * mb for a, b in zip(self._nums, other._nums)]
        return CycNumber(self.N, nums, da * ma)

    __radd__ = __add__

    def __neg__(self):
        return CycNumber(self.N, [-a for a in self._nums], self._den)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        fld = _field(self.N)
        phi = fld.phi
        out = [0] * (2 * phi - 1)
        for i, a in enumerate(self._nums):
            if a:
                for j, b in enumerate(other._nums):
                    if b:
                        out[i + j] += a * b
        return CycNumber(self.N, fld.reduce(out), self._den * other._den)

    __rmul__ = __mul__

    def inverse(self) -> CycNumber:
        """Extended Euclid against the cyclotomic polynomial."""
        if self.is_zero():
            raise ZeroDivisionError("inverting zero")
        if self.is_rational():
            r = self.to_rational()
            return CycNumber.from_rational(self.N, Fraction(r.denominator, r.numerator))
        mod = cyclotomic(self.N)
        a = Polynomial("q", self.coeffs)
        # Bezout: s*a + t*mod = gcd = nonzero constant
        r0, r1 = a, mod
        s0, s1 = Polynomial.one("q"), Polynomial.zero("q")
        while not r1.is_zero():
            quo, rem = divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, s0 - quo * s1
        assert r0.degree == 0
        inv = s0.scaled(Fraction(1) / r0.coefficient(0))
        nums = [inv.coefficient(k) for k in range(_field(self.N).phi)]
        den = 1
        for c in nums:
            den = den * c.denominator // gcd(den, c.denominator)
        return CycNumber(self.N, [int(c * den) for c in nums], den)

    def __truediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    # -- Galois action -----------------------------------------------------------
    def galois(self, a: int) -> CycNumber:
        """Apply zeta -> zeta**a for a coprime to N (a ring automorphism)."""
        a %= self.N
        if gcd(a, self.N) != 1:
            raise ValueError(f"{a} is not coprime to {self.N}")
        fld = _field(self.N)
        out = [0] * max(fld.phi, self.N)
        for i, c in enumerate(self._nums):
            if c:
                out[(i * a) % self.N] += c
        return CycNumber(self.N, fld.reduce(out), self._den)

    def conj(self) -> CycNumber:
        """Complex conjugation zeta -> zeta**(-1)."""
        return self.galois(self.N - 1) if self.N > 1 else self

    def times_zeta(self, e: int) -> CycNumber:
        """Fast multiplication by zeta**e (an exponent shift)."""
        fld = _field(self.N)
        e %= self.N
        out = [0] * max(fld.phi, fld.phi - 1 + e + 1)
        for i, c in enumerate(self._nums):
            if c:
                out[i + e] += c
        return CycNumber(self.N, fld.reduce(out), self._den)

    def embed(self, M: int) -> CycNumber:
        """Embed into Q(zeta_M) for N | M via zeta_N = zeta_M**(M/N)."""
        if M % self.N:
            raise ValueError(f"{self.N} does not divide {M}")
        if M == self.N:
            return self
        step = M // self.N
        fld = _field(M)
        out = [0] * max(fld.phi, (len(self._nums) - 1) * step + 1)
        for i, c in enumerate(self._nums):
            if c:
                out[i * step] += c
        return CycNumber(M, fld.reduce(out), self._den)

    # -- comparisons ----------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, CycNumber):
            return (self.N == other.N and self._den == other._den
                    and self._nums == other._nums)
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self._nums[0], self._den) == other
        return NotImplemented

    def __hash__(self):
        # rational values hash like their Fraction so cross-type eq stays sound
        if self.is_rational():
            return hash(Fraction(self._nums[0], self._den))
        return self._hash

    def __str__(self):
        if self.is_rational():
            return str(Fraction(self._nums[0], self._den))
        parts = []
        for i, c in enumerate(self._nums):
            if c:
                coeff = Fraction(c, self._den)
                parts.append(f"({coeff})*z{self.N}^{i}" if i else f"({coeff})")
        return " + ".join(parts)

    def __repr__(self):
        return f"CycNumber({self.N}, {self._nums!r}, {self._den})"

    # -- JSON ---------------------------------------------------------------------------
    def to_json(self) -> dict:
        out = []
        for a in self._nums:
            f = Fraction(a, self._den)
            out.append(str(f.numerator) if f.denominator == 1
                       else f"{f.numerator}/{f.denominator}")
        return {"N": self.N, "coeffs": out}

    @classmethod
    def from_json(cls, obj: dict) -> CycNumber:
        N = obj["N"]
        fracs = [Fraction(s) for s in obj["coeffs"]]
        den = 1
        for f in fracs:
            den = den * f.denominator // gcd(den, f.denominator)
        return cls(N, [int(f * den) for f in fracs], den)


def cyc_to_rational(x: CycNumber) -> Fraction:
    """Collapse a Galois-invariant cyclotomic value to Q."""
    return x.to_rational()


def minimal_polynomial(x: CycNumber, var: str = "t") -> Polynomial:
    """Minimal polynomial over Q, as the product over the Galois orbit."""
    orbit = []
    for a in range(1, x.N + 1):
        if gcd(a, x.N) == 1:
            y = x.galois(a)
            if y not in orbit:
                orbit.append(y)
    acc = Polynomial.one(var)
    for y in orbit:
        acc = acc * Polynomial(var, (-y, CycNumber.one(x.N)))
    return Polynomial(var, [c.to_rational() if isinstance(c, CycNumber) else c
                            for c in acc.coeffs])
