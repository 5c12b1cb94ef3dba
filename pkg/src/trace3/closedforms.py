"""Exact closed-form counters: the classical Gauss and Carlitz irreducible
counts, the periodic deviation tables for one, two and three prescribed
traces over the base field F_2, the all-zero-trace count over any F_{2^r},
and the Moebius-inversion formula turning element counts into counts of
irreducible polynomials with three zero leading coefficients.

Every value is an exact integer or Fraction; half-integer powers of q only
ever appear in combinations that cancel, which each evaluator asserts.
"""

from fractions import Fraction
from functools import lru_cache

from .cyclotomic import Cyc, imaginary_unit, sqrt2_power
from .fourier import PeriodicFormula, deviation


def moebius(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


def divisors(n: int) -> list:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def gauss_count(q: int, n: int) -> int:
    """Number of monic irreducible degree-n polynomials over F_q."""
    total = sum(moebius(d) * q ** (n // d) for d in divisors(n))
    assert total % n == 0
    return total // n


def carlitz_count(q: int, n: int, t1) -> int:
    """Number of monic irreducible degree-n polynomials over F_q with
    prescribed coefficient of x^(n-1); uniform over nonzero values."""
    if t1 == 0:
        return gauss_count(q, n) - (q - 1) * carlitz_count(q, n, 1)
    total = sum(moebius(d) * q ** (n // d)
                for d in divisors(n) if d % 2 == 1)
    assert total % (q * n) == 0
    return total // (q * n)


# ---------------------------------------------------------------------------
# base field F_2: deviations from the main term, periodic in n
#
# Entries are (c, s) meaning c * 2^((n-s)/2), None meaning 0; the parity of
# s always matches the parity of the row's residue, so the power is integral.

_TWO_TRACE_ROWS = {
    # n mod 8: {(t1, t2): entry}
    0: {(0, 0): (-1, 2), (0, 1): (1, 2), (1, 0): None, (1, 1): None},
    1: {(0, 0): (1, 3), (0, 1): (-1, 3), (1, 0): (1, 3), (1, 1): (-1, 3)},
    2: {(0, 0): None, (0, 1): None, (1, 0): (-1, 2), (1, 1): (1, 2)},
    3: {(0, 0): (-1, 3), (0, 1): (1, 3), (1, 0): (1, 3), (1, 1): (-1, 3)},
    4: {(0, 0): (1, 2), (0, 1): (-1, 2), (1, 0): None, (1, 1): None},
    5: {(0, 0): (-1, 3), (0, 1): (1, 3), (1, 0): (-1, 3), (1, 1): (1, 3)},
    6: {(0, 0): None, (0, 1): None, (1, 0): (1, 2), (1, 1): (-1, 2)},
    7: {(0, 0): (1, 3), (0, 1): (-1, 3), (1, 0): (-1, 3), (1, 1): (1, 3)},
}

_THREE_TRACE_ZERO_ROWS = {
    # n mod 24: {(t2, t3): entry}, all with t1 = 0
    0: {(0, 0): (-5, 4), (0, 1): (3, 4), (1, 0): (1, 4), (1, 1): (1, 4)},
    1: {(0, 0): (3, 5), (0, 1): (-1, 5), (1, 0): (-1, 5), (1, 1): (-1, 5)},
    2: {(0, 0): (1, 4), (0, 1): (-1, 4), (1, 0): (1, 4), (1, 1): (-1, 4)},
    3: {(0, 0): None, (0, 1): (-1, 3), (1, 0): (-1, 3), (1, 1): (1, 1)},
    4: {(0, 0): None, (0, 1): (1, 2), (1, 0): None, (1, 1): (-1, 2)},
    5: {(0, 0): (-3, 5), (0, 1): (1, 5), (1, 0): (1, 5), (1, 1): (1, 5)},
    6: {(0, 0): (1, 4), (0, 1): (-1, 4), (1, 0): (1, 4), (1, 1): (-1, 4)},
    7: {(0, 0): (3, 5), (0, 1): (-1, 5), (1, 0): (-1, 5), (1, 1): (-1, 5)},
    8: {(0, 0): (-1, 2), (0, 1): None, (1, 0): (-1, 2), (1, 1): (1, 0)},
    9: {(0, 0): None, (0, 1): (1, 3), (1, 0): (1, 3), (1, 1): (-1, 1)},
    10: {(0, 0): (1, 4), (0, 1): (-1, 4), (1, 0): (1, 4), (1, 1): (-1, 4)},
    11: {(0, 0): (-3, 5), (0, 1): (1, 5), (1, 0): (1, 5), (1, 1): (1, 5)},
    12: {(0, 0): (3, 4), (0, 1): (-1, 4), (1, 0): (-3, 4), (1, 1): (1, 4)},
    13: {(0, 0): (-3, 5), (0, 1): (1, 5), (1, 0): (1, 5), (1, 1): (1, 5)},
    14: {(0, 0): (1, 4), (0, 1): (-1, 4), (1, 0): (1, 4), (1, 1): (-1, 4)},
    15: {(0, 0): None, (0, 1): (1, 3), (1, 0): (1, 3), (1, 1): (-1, 1)},
    16: {(0, 0): (-1, 2), (0, 1): None, (1, 0): (-1, 2), (1, 1): (1, 0)},
    17: {(0, 0): (3, 5), (0, 1): (-1, 5), (1, 0): (-1, 5), (1, 1): (-1, 5)},
    18: {(0, 0): (1, 4), (0, 1): (-1, 4), (1, 0): (1, 4), (1, 1): (-1, 4)},
    19: {(0, 0): (-3, 5), (0, 1): (1, 5), (1, 0): (1, 5), (1, 1): (1, 5)},
    20: {(0, 0): None, (0, 1): (1, 2), (1, 0): None, (1, 1): (-1, 2)},
    21: {(0, 0): None, (0, 1): (-1, 3), (1, 0): (-1, 3), (1, 1): (1, 1)},
    22: {(0, 0): (1, 4), (0, 1): (-1, 4), (1, 0): (1, 4), (1, 1): (-1, 4)},
    23: {(0, 0): (3, 5), (0, 1): (-1, 5), (1, 0): (-1, 5), (1, 1): (-1, 5)},
}


def _entry_value(entry, n: int) -> int:
    if entry is None:
        return 0
    c, s = entry
    assert (n - s) % 2 == 0, "half-integer power did not cancel"
    if n >= s:
        return c * (1 << ((n - s) // 2))
    num = Fraction(c, 1 << ((s - n) // 2))
    assert num.denominator == 1
    return int(num)


def two_trace_deviation(n: int, t1: int, t2: int) -> int:
    """f(n, t1, t2) = F_2(n, t1, t2) - 2^(n-2), period 8 in n (n >= 2)."""
    if n < 2:
        raise ValueError("need n >= 2")
    return _entry_value(_TWO_TRACE_ROWS[n % 8][(t1, t2)], n)


def count_two_traces(n: int, t1: int, t2: int) -> int:
    """Number of a in F_{2^n} with first two traces (t1, t2)."""
    return (1 << (n - 2)) + two_trace_deviation(n, t1, t2)


def _entry_symbolic(entry) -> str:
    if entry is None:
        return "0"
    c, s = entry
    coef = {1: "", -1: "-"}.get(c, f"{c}*")
    return f"{coef}2^((n-{s})/2)"


def two_trace_symbolic(residue: int, t1: int, t2: int) -> str:
    return _entry_symbolic(_TWO_TRACE_ROWS[residue][(t1, t2)])


def three_trace_symbolic(residue: int, t2: int, t3: int) -> str:
    return _entry_symbolic(_THREE_TRACE_ZERO_ROWS[residue][(t2, t3)])


def three_trace_deviation(n: int, t1: int, t2: int, t3: int) -> int:
    """f(n, t1, t2, t3) = F_2(n, t1, t2, t3) - 2^(n-3) for n >= 3.

    The trace-zero classes come from the period-24 table; the trace-one
    classes are evaluated from their root-of-unity closed forms.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    if t1 == 0:
        return _entry_value(_THREE_TRACE_ZERO_ROWS[n % 24][(t2, t3)], n)
    dev = deviation(three_trace_formula(1, t2, t3), n)
    assert dev.denominator == 1
    return int(dev)


def count_three_traces(n: int, t1: int, t2: int, t3: int) -> int:
    """Number of a in F_{2^n} with first three traces (t1, t2, t3)."""
    return (1 << (n - 3)) + three_trace_deviation(n, t1, t2, t3)


# ---------------------------------------------------------------------------
# root-of-unity closed forms for the base-field deviations

@lru_cache(maxsize=None)
def two_trace_formula(t1: int, t2: int) -> PeriodicFormula:
    """Period-8 spectral form of f(n, t1, t2): nonzero coefficients sit at
    the eighth roots of unity omega_8^3 and omega_8^5."""
    i8 = imaginary_unit(8)
    quarter = Fraction(1, 4)
    table = {
        (0, 0): {3: Cyc.rational(8, -quarter), 5: Cyc.rational(8, -quarter)},
        (0, 1): {3: Cyc.rational(8, quarter), 5: Cyc.rational(8, quarter)},
        (1, 0): {3: i8.scale(-quarter), 5: i8.scale(quarter)},
        (1, 1): {3: i8.scale(quarter), 5: i8.scale(-quarter)},
    }
    coeffs = [table[(t1, t2)].get(k, Cyc.rational(8, 0)) for k in range(8)]
    return PeriodicFormula(8, coeffs, q=2, order=8)


@lru_cache(maxsize=None)
def three_trace_formula(t1: int, t2: int, t3: int) -> PeriodicFormula:
    """Period-24 spectral form of f(n, t1, t2, t3).

    Index k carries the eigenvalue sqrt(2) * omega_24^k; the support is
    {9, 15} (the two-trace eigenvalues), {6, 18} (+-sqrt(2) i) and
    {5, 11, 13, 19} (the genus-two quartet).
    """
    i = imaginary_unit(24)

    def rat(x):
        return Cyc.rational(24, x)

    one = rat(1)

    e = Fraction(1, 8)
    q = Fraction(1, 4)
    if t1 == 0:
        sign_q = {(0, 0): -1, (0, 1): 0, (1, 0): 0, (1, 1): 1}[(t2, t3)]
        sign_i = {(0, 0): -1, (0, 1): 1, (1, 0): -1, (1, 1): 1}[(t2, t3)]
        sign_w = {(0, 0): -1, (0, 1): 1, (1, 0): 1, (1, 1): -1}[(t2, t3)]
        coeffs = {
            9: rat(sign_q * q), 15: rat(sign_q * q),
            6: rat(sign_i * e), 18: rat(sign_i * e),
            5: rat(sign_w * e), 11: rat(sign_w * e),
            13: rat(sign_w * e), 19: rat(sign_w * e),
        }
    else:
        sign_i = {(0, 0): 1, (0, 1): -1, (1, 0): -1, (1, 1): 1}[(t2, t3)]
        # weights at the two-trace eigenvalues: -+(1 +- i)/8 patterns
        w9, w15 = {
            (0, 0): (-(one + i), -(one - i)),
            (0, 1): (one - i, one + i),
            (1, 0): (one + i, one - i),
            (1, 1): (-(one - i), -(one + i)),
        }[(t2, t3)]
        sign_w = {(0, 0): -1, (0, 1): 1, (1, 0): -1, (1, 1): 1}[(t2, t3)]
        coeffs = {
            6: rat(sign_i * e), 18: rat(sign_i * e),
            9: w9.scale(e), 15: w15.scale(e),
            5: i.scale(sign_w * e), 11: i.scale(-sign_w * e),
            13: i.scale(sign_w * e), 19: i.scale(-sign_w * e),
        }
    out = [coeffs.get(k, rat(0)) for k in range(24)]
    return PeriodicFormula(24, out, q=2, order=24)


# ---------------------------------------------------------------------------
# all three traces zero over F_{2^r}: period 24 in n, split by parity of r
#
# The deviation from q^(n-3) is P(q) * q^E with P encoded as (a, b, c) for
# a q^2 + b q + c, and E either n/2 - ofs (kind "h", even rows) or
# (n-1)/2 - ofs (kind "g", odd rows).

_P_MINUS_2Q2 = (-2, 1, 1)    # -(q-1)(2q+1)
_P_Q2 = (1, 0, -1)           # q^2 - 1
_P_NEG_Q2 = (-1, 0, 1)
_P_Q = (0, 1, -1)            # q - 1
_P_NEG_Q = (0, -1, 1)

_F000_ROWS = {
    # n mod 24: (term for odd r, term for even r); None = no deviation
    0: ((_P_MINUS_2Q2, "h", 2), (_P_MINUS_2Q2, "h", 2)),
    1: ((_P_Q2, "g", 2), (_P_Q2, "g", 2)),
    2: ((_P_Q, "h", 2), (_P_Q, "h", 2)),
    3: (None, None),
    4: (None, None),
    5: ((_P_NEG_Q2, "g", 2), (_P_Q2, "g", 2)),
    6: ((_P_Q, "h", 2), (_P_NEG_Q, "h", 2)),
    7: ((_P_Q2, "g", 2), (_P_Q2, "g", 2)),
    8: ((_P_NEG_Q, "h", 1), (_P_NEG_Q, "h", 1)),
    9: (None, None),
    10: ((_P_Q, "h", 2), (_P_Q, "h", 2)),
    11: ((_P_NEG_Q2, "g", 2), (_P_Q2, "g", 2)),
    12: ((_P_Q2, "h", 2), (_P_NEG_Q2, "h", 2)),
    13: ((_P_NEG_Q2, "g", 2), (_P_Q2, "g", 2)),
    14: ((_P_Q, "h", 2), (_P_Q, "h", 2)),
    15: (None, None),
    16: ((_P_NEG_Q, "h", 1), (_P_NEG_Q, "h", 1)),
    17: ((_P_Q2, "g", 2), (_P_Q2, "g", 2)),
    18: ((_P_Q, "h", 2), (_P_NEG_Q, "h", 2)),
    19: ((_P_NEG_Q2, "g", 2), (_P_Q2, "g", 2)),
    20: (None, None),
    21: (None, None),
    22: ((_P_Q, "h", 2), (_P_Q, "h", 2)),
    23: ((_P_Q2, "g", 2), (_P_Q2, "g", 2)),
}


def _f000_term(term, q: int, n: int) -> Fraction:
    if term is None:
        return Fraction(0)
    (a, b, c), kind, ofs = term
    poly = a * q * q + b * q + c
    if kind == "h":
        assert n % 2 == 0
        exp = n // 2 - ofs
    else:
        assert n % 2 == 1
        exp = (n - 1) // 2 - ofs
    return poly * Fraction(q) ** exp


def all_zero_deviation(r: int, n: int) -> Fraction:
    """F_q(n,0,0,0) - q^(n-3) as an exact rational (q = 2^r, n >= 1)."""
    q = 1 << r
    term = _F000_ROWS[n % 24][0 if r % 2 else 1]
    return _f000_term(term, q, n)


def count_all_zero_traces(r: int, n: int) -> int:
    """Number of a in F_{q^n}, q = 2^r, whose first three traces all vanish.

    Valid for every n >= 1; for n = 1, 2 the missing traces are empty sums
    and the value is 1.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    q = 1 << r
    val = Fraction(q) ** (n - 3) + all_zero_deviation(r, n)
    assert val.denominator == 1 and val >= 0
    return int(val)


def f000_symbolic(residue: int, r_parity: str) -> str:
    """Human-readable row of the all-zero-trace table."""
    term = _F000_ROWS[residue][0 if r_parity == "odd" else 1]
    if term is None:
        return "q^(n-3)"
    (a, b, c), kind, ofs = term
    poly = {_P_MINUS_2Q2: "(q-1)(2q+1)", _P_Q2: "(q^2-1)",
            _P_NEG_Q2: "(q^2-1)", _P_Q: "(q-1)", _P_NEG_Q: "(q-1)"}[(a, b, c)]
    sign = "-" if (a, b, c) in (_P_MINUS_2Q2, _P_NEG_Q2, _P_NEG_Q) else "+"
    exp = f"n/2-{ofs}" if kind == "h" else f"(n-1)/2-{ofs}"
    return f"q^(n-3) {sign} {poly}*q^({exp})"


# ---------------------------------------------------------------------------
# irreducible polynomials with three zero leading coefficients

def irreducible_all_zero(r: int, n: int) -> int:
    """Count of monic irreducible degree-n polynomials over F_{2^r} whose
    top three coefficients vanish, by Moebius inversion over odd divisors:

      I(n) = (1/n) sum_{d | n, d odd} mu(d) (F(n/d) - [n even] q^(n/2d - 1))
    """
    if n < 3:
        raise ValueError("need n >= 3")
    q = 1 << r
    total = Fraction(0)
    for d in divisors(n):
        if d % 2 == 0:
            continue
        term = Fraction(count_all_zero_traces(r, n // d))
        if n % 2 == 0:
            term -= Fraction(q) ** (n // (2 * d) - 1)
        total += moebius(d) * term
    val = total / n
    if val.denominator != 1 or val < 0:
        raise AssertionError(f"inversion gave non-count {val} at r={r}, n={n}")
    return int(val)


def irreducible_all_zero_via_carlitz(r: int, n: int) -> int:
    """Same count with the even-n correction rewritten through the Carlitz
    count over the square-root field F_{2^(r/2)} (defined for even r only):

      I(n) = (1/n) sum mu(d) F(n/d) - [n even] I_s(n,1) / s,  s = sqrt(q).

    The 1/s normalization is forced: sum_{d odd} mu(d) q^(n/2d-1) / n equals
    I_s(n,1)/s, not I_s(n,1) (q = 4, n = 4 separates the two readings).
    """
    if r % 2:
        raise ValueError("square-root base field needs even r")
    if n < 3:
        raise ValueError("need n >= 3")
    s = 1 << (r // 2)
    total = Fraction(0)
    for d in divisors(n):
        if d % 2 == 1:
            total += moebius(d) * Fraction(count_all_zero_traces(r, n // d))
    val = total / n
    if n % 2 == 0:
        val -= Fraction(carlitz_count(s, n, 1), s)
    if val.denominator != 1 or val < 0:
        raise AssertionError(f"inversion gave non-count {val} at r={r}, n={n}")
    return int(val)


# ---------------------------------------------------------------------------
# spectral form of the all-zero-trace count (both parities of r)

def _group_sum(n: int, exps) -> Cyc:
    out = Cyc.rational(24, 0)
    for k in exps:
        out = out + Cyc.zeta_pow(24, k * n)
    return out


def _f000_groups(r: int):
    q = 1 << r
    if r % 2:
        s = 1 << ((r + 1) // 2)  # sqrt(2q)
        return [
            (Fraction(q * (q - 1) * (q - 2), 8), (0, 12)),
            (Fraction(q * (q - 1) * (q + 2), 8), (6, 18)),
            (Fraction((q - 1) * (q + 1) * (q - s), 12), (1, 7, 17, 23)),
            (Fraction((q - 1) * (q + 1) * (q + s), 12), (5, 11, 13, 19)),
            (Fraction((q - 1) * (q - s) * (5 * q + s + 4), 24), (3, 21)),
            (Fraction((q - 1) * (q + s) * (5 * q - s + 4), 24), (9, 15)),
        ]
    t = 1 << (r // 2)  # sqrt(q)
    return [
        (Fraction((q - 1) * (q - 2 * t) * (5 * q + 2 * t + 4), 24), (0,)),
        (Fraction((q - 1) * (q + 2 * t) * (5 * q - 2 * t + 4), 24), (12,)),
        (Fraction(q * (q - 1) * (5 * q + 4), 24), (6, 18)),
        (Fraction(q * q * (q - 1), 8), (3, 21, 9, 15)),
        (Fraction(q * (q - 1) ** 2, 12), (2, 10, 14, 22)),
        (Fraction((q - 1) * (q - t) * (q - t + 2), 12), (4, 20)),
        (Fraction((q - 1) * (q + t) * (q + t + 2), 12), (8, 16)),
    ]


def count_all_zero_traces_spectral(r: int, n: int) -> int:
    """The all-zero-trace count evaluated from its root-of-unity expansion
    q^(n-3) - q^(n/2-3) * sum over eigenvalue groups, exactly in Q(zeta_24)."""
    q = 1 << r
    acc = Cyc.rational(24, 0)
    for coef, exps in _f000_groups(r):
        acc = acc + _group_sum(n, exps).scale(coef)
    total = Cyc.rational(24, Fraction(q) ** (n - 3)) \
        - sqrt2_power(24, r * (n - 6)) * acc
    val = total.as_rational()
    assert val.denominator == 1 and val >= 0
    return int(val)
