"""Quadratic forms over GF(2) attached to the curve twists: polarization,
radical and singular radical, rank, and the Arf-invariant route to the zero
count, plus the census of cubics x^3 + x + beta by number of roots.

Vectors over GF(2) are bit-packed ints; the m x m bilinear matrix is a list
of m row ints.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import anf
from .field import DEFAULT_ENUM_CAP, BudgetError, FieldContext, build_context

MATRIX_CAP = 64


@dataclass
class QuadForm:
    """Q(x) = absolute trace of alpha * f_family(x) on F_{2^(rn)}; the form
    whose zero count controls the twist C_{family,alpha} over F_{2^(rn)}."""
    family: int
    alpha: int
    r: int
    n: int
    ctx: FieldContext
    func: callable

    @property
    def m(self) -> int:
        return self.ctx.m

    def value(self, x: int) -> int:
        return self.func(x)


def twist_form(family: int, r: int, n: int, alpha: int = 1) -> QuadForm:
    from .curves import CurveSpec, curve_rhs
    spec = CurveSpec(family, r, alpha)
    ctx = build_context(r * n)
    rhs = curve_rhs(spec, ctx)
    alpha_big = ctx.embed_subfield(r)[alpha]
    func = lambda x: ctx.absolute_trace(ctx.mul(alpha_big, rhs(x)))
    return QuadForm(family, alpha, r, n, ctx, func)


def bilinear_matrix(qf: QuadForm, cap: int = MATRIX_CAP) -> list:
    """Polarization B(x,y) = Q(x+y) + Q(x) + Q(y) on the monomial basis,
    as bit-packed rows; symmetric with zero diagonal."""
    m = qf.m
    if m > cap:
        raise BudgetError(f"m = {m} exceeds matrix cap {cap}")
    q_basis = [qf.value(1 << i) for i in range(m)]
    rows = [0] * m
    for i in range(m):
        for j in range(i + 1, m):
            b = qf.value((1 << i) ^ (1 << j)) ^ q_basis[i] ^ q_basis[j]
            if b:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return rows


def _kernel_and_pivots(rows):
    """Kernel basis and pivot preimages of the symmetric bit matrix."""
    pivots = {}
    kernel = []
    complement = []
    for i in range(len(rows)):
        img, pre = rows[i], 1 << i
        while img:
            b = img.bit_length() - 1
            if b not in pivots:
                pivots[b] = (img, pre)
                complement.append(1 << i)
                break
            pimg, ppre = pivots[b]
            img ^= pimg
            pre ^= ppre
        else:
            kernel.append(pre)
    return kernel, complement


def _bform(rows, u: int, v: int) -> int:
    img = 0
    while u:
        i = u.bit_length() - 1
        img ^= rows[i]
        u ^= 1 << i
    return bin(img & v).count("1") & 1


@dataclass
class RadicalReport:
    """w = dim of the radical of B; w0 = dim of its Q-zero subspace;
    rank = m - w0; sign in {-1, 0, +1} (0 iff rank odd); zero_count = the
    number of zeros of Q derived from (rank, w, Arf)."""
    family: int
    alpha: int
    r: int
    n: int
    m: int
    w: int
    w0: int
    rank: int
    sign: int
    zero_count: int

    @property
    def twist_count(self) -> int:
        """Projective twist point count 2 * zero_count + 1 implied by Q."""
        return 2 * self.zero_count + 1


def radical_report(qf: QuadForm, cap: int = MATRIX_CAP) -> RadicalReport:
    """Radical data, rank and signed zero count of Q.

    The zero count is 2^(m-1) for odd rank, and
    2^(m-1) + sign * 2^((m-2+w)/2) for even rank with sign fixed by the Arf
    invariant of the nondegenerate quotient (greedy symplectic reduction).
    """
    m = qf.m
    rows = bilinear_matrix(qf, cap)
    kernel, complement = _kernel_and_pivots(rows)
    w = len(kernel)
    assert (m - w) % 2 == 0, "symplectic rank must be even"
    onto = any(qf.value(v) for v in kernel)
    w0 = w - 1 if onto else w
    rank = m - w0
    if rank % 2:
        sign = 0
        zeros = 1 << (m - 1)
    else:
        arf = _arf_invariant(qf, rows, complement)
        sign = -1 if arf else 1
        zeros = (1 << (m - 1)) + sign * (1 << ((m - 2 + w) // 2))
    return RadicalReport(qf.family, qf.alpha, qf.r, qf.n,
                         m, w, w0, rank, sign, zeros)


def _arf_invariant(qf: QuadForm, rows, complement) -> int:
    """Sum of Q(a)Q(b) over a greedy symplectic basis of the complement of
    the radical (Q descends there since it vanishes on the radical)."""
    vecs = list(complement)
    arf = 0
    while vecs:
        u = vecs.pop(0)
        partner = None
        for idx, v in enumerate(vecs):
            if _bform(rows, u, v):
                partner = idx
                break
        assert partner is not None, "complement of radical is degenerate"
        v = vecs.pop(partner)
        arf ^= qf.value(u) & qf.value(v)
        fixed = []
        for w_vec in vecs:
            if _bform(rows, w_vec, v):
                w_vec ^= u
            if _bform(rows, w_vec, u):
                w_vec ^= v
            fixed.append(w_vec)
        vecs = fixed
    return arf


def count_zeros_oracle(qf: QuadForm, cap: int = DEFAULT_ENUM_CAP) -> int:
    """Exhaustive zero count of Q over F_{2^m}."""
    if qf.m > cap:
        raise BudgetError(f"m = {qf.m} exceeds enumeration cap {cap}")
    values = anf.sweep(qf.m, qf.func, 2)
    return int(np.count_nonzero(values == 0))


def expected_radical_dimension(family: int, r: int, n: int, klass: str) -> int:
    """Radical dimension predicted by the dimension case analysis for each
    twist branch (independent of alpha within a branch)."""
    if family == 1:
        return r if n % 2 else 2 * r
    generic = klass in ("cube", "all", "1-roots", "3-roots")
    if generic:
        if n % 2:
            return r
        return 2 * r if n % 4 == 2 else 2 * r + 2
    # noncube / 0-roots branch
    from math import gcd
    return {1: r, 2: 2 * r, 3: r + 2, 6: 2 * r + 2}[gcd(n, 6)]


# ---------------------------------------------------------------------------
# cubics x^3 + x + beta over F_{2^r}

@lru_cache(maxsize=None)
def _cubic_fiber_counts(r: int):
    """root_counts[beta] = number of roots of x^3 + x + beta in F_{2^r},
    from one vectorized pass over the fibers of x -> x^3 + x (a map of
    bit-degree 2, so the low-degree sweep applies)."""
    ctx = build_context(r)
    values = anf.sweep(r, lambda x: ctx.mul(ctx.sqr(x), x) ^ x, 2)
    return np.bincount(values, minlength=ctx.order).tolist()


def cubic_root_count(r: int, beta: int) -> int:
    """Number of roots of x^3 + x + beta in F_{2^r}; beta must be nonzero
    (beta = 0 is the degenerate case with the double root structure)."""
    if beta == 0:
        raise ValueError("beta must be nonzero")
    return _cubic_fiber_counts(r)[beta]


def cubic_root_census(r: int) -> tuple:
    """(M3, M1, M0): how many nonzero beta give 3, 1, 0 roots."""
    counts = _cubic_fiber_counts(r)
    m3 = sum(1 for c in counts[1:] if c == 3)
    m1 = sum(1 for c in counts[1:] if c == 1)
    m0 = sum(1 for c in counts[1:] if c == 0)
    return m3, m1, m0


def cubic_root_census_expected(r: int) -> tuple:
    """The closed form for the cubic census, split by parity of r."""
    if r % 2:
        return ((2 ** (r - 1) - 1) // 3, 2 ** (r - 1) - 1, (2 ** r + 1) // 3)
    return ((2 ** (r - 1) - 2) // 3, 2 ** (r - 1), (2 ** r - 1) // 3)
