"""Exact arithmetic in cyclotomic fields Q(zeta_P).

Elements are coordinate vectors of Fractions in the power basis
1, z, ..., z^(d-1) modulo the P-th cyclotomic polynomial (d = deg Phi_P).
No floating point anywhere; equality and rationality are decidable.
"""

from fractions import Fraction
from functools import lru_cache

MAX_ORDER = 120


@lru_cache(maxsize=None)
def cyclotomic_polynomial(p: int) -> tuple:
    """Integer coefficients of Phi_p, ascending, computed by dividing x^p - 1
    by the cyclotomic polynomials of the proper divisors."""
    num = [-1] + [0] * (p - 1) + [1]  # x^p - 1
    for d in range(1, p):
        if p % d == 0:
            num = _poly_div_exact(num, cyclotomic_polynomial(d))
    return tuple(num)


def _poly_div_exact(num, den):
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        assert c % den[-1] == 0
        q = c // den[-1]
        out[i] = q
        for j, dj in enumerate(den):
            num[i + j] -= q * dj
    assert all(c == 0 for c in num)
    return out


@lru_cache(maxsize=None)
def _monomial_table(p: int) -> tuple:
    """Reduction of z^k modulo Phi_p for k = 0..p-1, as coordinate tuples."""
    phi = cyclotomic_polynomial(p)
    d = len(phi) - 1
    rows = []
    cur = [Fraction(0)] * d
    cur[0] = Fraction(1)
    for _ in range(p):
        rows.append(tuple(cur))
        # multiply by z
        carry = cur[-1]
        cur = [Fraction(0)] + cur[:-1]
        if carry:
            for j in range(d):
                cur[j] -= carry * phi[j]
    return tuple(rows)


class Cyc:
    """An element of Q(zeta_P)."""

    __slots__ = ("p", "coords")

    def __init__(self, p: int, coords):
        if not 1 <= p <= MAX_ORDER:
            raise ValueError(f"order {p} out of range 1..{MAX_ORDER}")
        d = len(cyclotomic_polynomial(p)) - 1
        coords = tuple(Fraction(c) for c in coords)
        assert len(coords) == d
        self.p = p
        self.coords = coords

    @classmethod
    def rational(cls, p: int, value) -> "Cyc":
        d = len(cyclotomic_polynomial(p)) - 1
        return cls(p, (Fraction(value),) + (Fraction(0),) * (d - 1))

    @classmethod
    def zeta_pow(cls, p: int, k: int) -> "Cyc":
        """zeta_P^k for any integer k."""
        return cls(p, _monomial_table(p)[k % p])

    def _check(self, other):
        if self.p != other.p:
            raise ValueError("mixed cyclotomic orders")

    def __add__(self, other):
        self._check(other)
        return Cyc(self.p, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._check(other)
        return Cyc(self.p, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return Cyc(self.p, tuple(-a for a in self.coords))

    def scale(self, c) -> "Cyc":
        c = Fraction(c)
        return Cyc(self.p, tuple(a * c for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        d = len(self.coords)
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(other.coords):
                    if b:
                        prod[i + j] += a * b
        phi = cyclotomic_polynomial(self.p)
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k]
            if c:
                prod[k] = Fraction(0)
                for j in range(d):
                    prod[k - d + j] -= c * phi[j]
        return Cyc(self.p, tuple(prod[:d]))

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.as_rational() == other
        return self.p == other.p and self.coords == other.coords

    def __hash__(self):
        return hash((self.p, self.coords))

    def __repr__(self):
        return f"Cyc({self.p}, {[str(c) for c in self.coords]})"

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"not rational: {self!r}")
        return self.coords[0]

    def conj(self) -> "Cyc":
        """Complex conjugate (zeta -> zeta^(-1))."""
        table = _monomial_table(self.p)
        out = [Fraction(0)] * len(self.coords)
        for j, c in enumerate(self.coords):
            if c:
                row = table[(self.p - j) % self.p]
                for k, v in enumerate(row):
                    out[k] += c * v
        return Cyc(self.p, tuple(out))

    def norm_squared(self) -> "Cyc":
        return self * self.conj()


def sqrt2(p: int) -> Cyc:
    """sqrt(2) = zeta_8 + zeta_8^(-1), available whenever 8 | P."""
    if p % 8:
        raise ValueError("sqrt(2) needs 8 | P")
    return Cyc.zeta_pow(p, p // 8) + Cyc.zeta_pow(p, p - p // 8)


def sqrt2_power(p: int, e: int) -> Cyc:
    """sqrt(2)^e for any integer e, exact."""
    half, odd = divmod(e, 2)
    out = Cyc.rational(p, Fraction(2) ** half)
    if odd:
        out = out * sqrt2(p)
    return out


def imaginary_unit(p: int) -> Cyc:
    """i = zeta_4, available whenever 4 | P."""
    if p % 4:
        raise ValueError("i needs 4 | P")
    return Cyc.zeta_pow(p, p // 4)


def embed(x: Cyc, p: int) -> Cyc:
    """Embed an element of Q(zeta_{x.p}) into Q(zeta_p); requires x.p | p."""
    if p == x.p:
        return x
    if p % x.p:
        raise ValueError(f"{x.p} does not divide {p}")
    k = p // x.p
    table = _monomial_table(p)
    d = len(cyclotomic_polynomial(p)) - 1
    out = [Fraction(0)] * d
    for j, c in enumerate(x.coords):
        if c:
            row = table[(j * k) % p]
            for t, v in enumerate(row):
                out[t] += c * v
    return Cyc(p, tuple(out))
