"""First three traces of field elements relative to a subfield, exhaustive
trace censuses, and brute-force counts of irreducible polynomials with
prescribed leading coefficients.
"""

from dataclasses import dataclass
from itertools import product

import numpy as np

from . import anf, gf2x
from .field import DEFAULT_ENUM_CAP, BudgetError, FieldContext, build_context


def trace_triple(ctx: FieldContext, r: int, a: int):
    """(T1, T2, T3) of a relative to F_{2^r}: the coefficients of
    x^(n-1), x^(n-2), x^(n-3) in prod_{i<n} (x + a^(2^(ri))), n = m/r.

    Computed as an incremental product of the conjugate linear factors,
    keeping only the top four coefficients (O(n) multiplications).  Missing
    traces for n < 3 are empty sums, hence 0.
    """
    if ctx.m % r:
        raise ValueError(f"{r} does not divide {ctx.m}")
    n = ctx.m // r
    b = a
    c1 = c2 = c3 = 0
    for _ in range(n):
        c3 ^= ctx.mul(b, c2)
        c2 ^= ctx.mul(b, c1)
        c1 ^= b
        b = ctx.frobenius(b, r)
    return c1, c2, c3


def check_trace_addition_identities(ctx: FieldContext, r: int, a: int, b: int) -> bool:
    """Both addition identities for the second and third trace:

      T2(a+b) + T2(a) + T2(b) = T1(a)T1(b) + T1(ab)
      T3(a+b) + T3(a) + T3(b) = T2(a)T1(b) + T1(a)T2(b)
                                + T1(a^2 b + a b^2) + T1(ab)T1(a+b)
    """
    t_a = trace_triple(ctx, r, a)
    t_b = trace_triple(ctx, r, b)
    t_s = trace_triple(ctx, r, a ^ b)
    ab = ctx.mul(a, b)
    t1_ab = trace_triple(ctx, r, ab)[0]
    lhs2 = t_s[1] ^ t_a[1] ^ t_b[1]
    rhs2 = ctx.mul(t_a[0], t_b[0]) ^ t1_ab
    mixed = ctx.mul(ab, a ^ b)  # a^2 b + a b^2
    lhs3 = t_s[2] ^ t_a[2] ^ t_b[2]
    rhs3 = (ctx.mul(t_a[1], t_b[0]) ^ ctx.mul(t_a[0], t_b[1])
            ^ trace_triple(ctx, r, mixed)[0] ^ ctx.mul(t1_ab, t_s[0]))
    return lhs2 == rhs2 and lhs3 == rhs3


@dataclass
class TraceCensus:
    """Exhaustive counts of elements of F_{2^(rn)} bucketed by trace values.

    Keys are tuples of big-field bit patterns: (t1,) for `which='one'`,
    (t1, t2) for 'two', (t1, t2, t3) for 'three'.
    """
    r: int
    n: int
    which: str
    counts: dict

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def get(self, key) -> int:
        return self.counts.get(tuple(key), 0)

    def rows(self):
        """Sorted (t1_bits, t2_bits, t3_bits, count) rows; absent traces 0."""
        out = []
        for key in sorted(self.counts):
            padded = tuple(key) + (0,) * (3 - len(key))
            out.append(padded + (self.counts[key],))
        return out


_WHICH_DEPTH = {"one": 1, "two": 2, "three": 3}


def _trace_value_sweeps(r: int, n: int, depth: int, cap: int):
    """Yield (index, values) for the first `depth` trace maps, one full-field
    array at a time so callers can release each before the next is built.
    Traces that are empty sums (second for n < 2, third for n < 3) yield
    values None."""
    m = r * n
    if m > cap:
        raise BudgetError(f"rn = {m} exceeds enumeration cap {cap}")
    ctx = build_context(m)
    cache = {}

    def triple(x):
        if x not in cache:
            cache[x] = trace_triple(ctx, r, x)
        return cache[x]

    for i in range(depth):
        if n < i + 1:
            yield i, None
        else:
            yield i, anf.sweep(m, lambda x, i=i: triple(x)[i], i + 1)


def trace_census(r: int, n: int, which: str = "three",
                 cap: int = DEFAULT_ENUM_CAP) -> TraceCensus:
    """Census of all 2^(rn) elements by their first traces relative to
    F_{2^r}."""
    depth = _WHICH_DEPTH[which]
    if r * n > cap:
        raise BudgetError(f"rn = {r * n} exceeds enumeration cap {cap}")
    ctx = build_context(r * n)
    sub = np.array(ctx.subfield_elements(r), dtype=np.uint32)
    key = np.zeros(1 << ctx.m, dtype=np.uint64)
    active = []
    for i, values in _trace_value_sweeps(r, n, depth, cap):
        if values is None:
            continue
        codes = anf.subfield_codes(values, sub)
        del values
        key = (key << np.uint64(r)) | codes.astype(np.uint64)
        active.append(i)
    key_bits = r * len(active)
    if key_bits <= 20:
        cnt = np.bincount(key.astype(np.int64), minlength=1 << key_bits)
        pairs = [(k, int(c)) for k, c in enumerate(cnt.tolist()) if c]
    else:
        uniq, cnt = np.unique(key, return_counts=True)
        pairs = list(zip(uniq.tolist(), cnt.tolist()))
    counts = {}
    mask = (1 << r) - 1
    for k, c in pairs:
        parts = [0] * depth
        for pos, i in enumerate(active):
            shift = r * (len(active) - 1 - pos)
            parts[i] = int(sub[(k >> shift) & mask])
        counts[tuple(parts)] = int(c)
    return TraceCensus(r, n, which, counts)


def trace_class_count(r: int, n: int, traces, cap: int = DEFAULT_ENUM_CAP) -> int:
    """Number of elements of F_{2^(rn)} whose first len(traces) traces equal
    the given big-field bit patterns (no full census materialised)."""
    hit = None
    for i, values in _trace_value_sweeps(r, n, len(traces), cap):
        if values is None:
            if traces[i] != 0:
                return 0
            continue
        cond = values == np.uint32(traces[i])
        del values
        hit = cond if hit is None else (hit & cond)
    if hit is None:
        return 1 << (r * n)
    return int(np.count_nonzero(hit))


def census_rows_json(census: TraceCensus):
    return [{"t1_bits": row[0], "t2_bits": row[1], "t3_bits": row[2],
             "count": str(row[3])} for row in census.rows()]


# ---------------------------------------------------------------------------
# polynomials over F_{2^r}: irreducibility and prefix counting

@dataclass
class PrefixPoly:
    """Monic dense polynomial over F_{2^r}; coeffs[i] is the coefficient of
    x^i, coeffs[-1] == 1."""
    r: int
    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs or self.coeffs[-1] != 1:
            raise ValueError("polynomial must be monic")
        if any(not 0 <= c < (1 << self.r) for c in self.coeffs):
            raise ValueError("coefficients must be reduced in F_{2^r}")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


def _poly_mulmod(ctx, a, b, mod):
    """Product of coefficient tuples a, b reduced modulo the monic mod."""
    n = len(mod) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] ^= ctx.mul(ai, bj)
    for d in range(len(prod) - 1, n - 1, -1):
        c = prod[d]
        if c:
            prod[d] = 0
            for j in range(n):
                if mod[j]:
                    prod[d - n + j] ^= ctx.mul(c, mod[j])
    prod = prod[:n]
    while len(prod) > 1 and prod[-1] == 0:
        prod.pop()
    return tuple(prod)


def _poly_gcd_is_one(ctx, a, b):
    a, b = list(a), list(b)

    def norm(p):
        while len(p) > 1 and p[-1] == 0:
            p.pop()
        return p

    a, b = norm(a), norm(b)
    while not (len(b) == 1 and b[0] == 0):
        # a mod b
        inv_lead = ctx.inv(b[-1])
        while len(a) >= len(b) and not (len(a) == 1 and a[0] == 0):
            shift = len(a) - len(b)
            c = ctx.mul(a[-1], inv_lead)
            for j in range(len(b)):
                a[shift + j] ^= ctx.mul(c, b[j])
            a = norm(a)
            if len(a) == 1 and a[0] == 0:
                break
        a, b = b, a
    return len(a) == 1 and a[0] != 0


def _frobenius_x_power(ctx, r, k, mod):
    """x^(2^(rk)) mod the monic polynomial mod, by rk squarings."""
    if len(mod) == 2:
        # modulus is linear: x reduces to a constant
        x = (mod[0],)
    else:
        x = (0, 1)
    t = x
    for _ in range(r * k):
        t = _poly_mulmod(ctx, t, t, mod)
    return t


def is_irreducible(p: PrefixPoly) -> bool:
    """Deterministic irreducibility of p over F_{2^r}: x^(q^n) = x mod p and
    gcd(x^(q^(n/l)) - x, p) = 1 for each prime l | n, with q = 2^r."""
    n = p.degree
    if n < 1:
        return False
    if n == 1:
        return True
    if p.r == 1:
        packed = 0
        for i, c in enumerate(p.coeffs):
            packed |= c << i
        return gf2x.is_irreducible(packed)
    ctx = build_context(p.r)
    mod = p.coeffs
    x = (0, 1)
    if _frobenius_x_power(ctx, p.r, n, mod) != x:
        return False
    for ell in gf2x.prime_factors(n):
        t = list(_frobenius_x_power(ctx, p.r, n // ell, mod))
        while len(t) < 2:
            t.append(0)
        t[1] ^= 1  # t - x
        if not _poly_gcd_is_one(ctx, tuple(t), mod):
            return False
    return True


def count_irreducibles_with_prefix(r: int, n: int, t1: int, t2: int, t3: int,
                                   budget: int = 1 << 22) -> int:
    """Number of monic irreducible degree-n polynomials over F_{2^r} whose
    coefficients of x^(n-1), x^(n-2), x^(n-3) are t1, t2, t3.

    Enumerates all q^(n-3) polynomials with the remaining coefficients free
    and tests each one.
    """
    if n < 3:
        raise ValueError("need degree >= 3 to prescribe three coefficients")
    q = 1 << r
    free = n - 3
    if q ** free > budget:
        raise BudgetError(f"{q}^{free} candidates exceed budget {budget}")
    total = 0
    for tail in product(range(q), repeat=free):
        coeffs = tuple(tail) + (t3, t2, t1, 1)
        if is_irreducible(PrefixPoly(r, coeffs)):
            total += 1
    return total


# ---------------------------------------------------------------------------
# joint zero counts of arbitrary function tables

def joint_zero_identity_check(ctx: FieldContext, r: int, f1, f2) -> bool:
    """For arbitrary maps f1, f2: F_{2^m} -> F_{2^r} given as full value
    tables, check

      q * N(0,0) = Z(f1) + sum_{alpha in F_q} Z(alpha*f1 + f2) - |domain|

    where N(0,0) counts joint zeros, Z counts zeros and q = 2^r.  This is an
    identity for every pair of functions, not only quadratic forms.
    """
    size = ctx.order
    if len(f1) != size or len(f2) != size:
        raise ValueError("tables must cover the full domain")
    a1 = np.asarray(f1, dtype=np.uint32)
    a2 = np.asarray(f2, dtype=np.uint32)
    n00 = int(np.count_nonzero((a1 == 0) & (a2 == 0)))
    rhs = -size + int(np.count_nonzero(a1 == 0))
    for alpha in ctx.subfield_elements(r):
        table = np.zeros(size, dtype=np.uint32)
        for v in ctx.subfield_elements(r):
            table[v] = ctx.mul(alpha, v)
        rhs += int(np.count_nonzero(table[a1] ^ a2 == 0))
    return (1 << r) * n00 == rhs
