"""Binary field F_{2^m} with a canonical modulus and subfield machinery.

Field elements are plain ints: bit i is the coefficient of x^i in the
residue of the polynomial basis.  Elements carry no context of their own;
all arithmetic goes through a FieldContext, and values from different
contexts must not be mixed.  Addition is xor, zero is 0, one is 1.
"""

from . import gf2x

MAX_DEGREE = 64
DEFAULT_ENUM_CAP = 26


class BudgetError(ValueError):
    """An exhaustive sweep was requested beyond the configured bit budget."""


class FieldContext:
    """Arithmetic context for F_{2^m} under the canonical degree-m modulus."""

    def __init__(self, m: int):
        if not 1 <= m <= MAX_DEGREE:
            raise ValueError(f"degree {m} out of range 1..{MAX_DEGREE}")
        self.m = m
        self.order = 1 << m
        self.modulus = gf2x.canonical_modulus(m)
        # bit i set iff the absolute trace of x^i is 1
        self._trace_mask = 0
        for i in range(m):
            if self._raw_trace(1 << i):
                self._trace_mask |= 1 << i
        self._subfield_cache = {}

    def __repr__(self):
        return f"FieldContext(m={self.m}, modulus={self.modulus:#x})"

    def __eq__(self, other):
        return isinstance(other, FieldContext) and other.m == self.m

    def __hash__(self):
        return hash(("FieldContext", self.m))

    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        return gf2x.mulmod(a, b, self.modulus)

    def sqr(self, a: int) -> int:
        return gf2x.mulmod(a, a, self.modulus)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inversion of zero")
        return self.pow(a, self.order - 2)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            e >>= 1
            a = self.sqr(a)
        return r

    def frobenius(self, a: int, k: int) -> int:
        """a^(2^k), with k reduced modulo m."""
        for _ in range(k % self.m):
            a = self.sqr(a)
        return a

    def _raw_trace(self, a: int) -> int:
        t = a
        for _ in range(self.m - 1):
            a = self.sqr(a)
            t ^= a
        return t

    def absolute_trace(self, a: int) -> int:
        """Trace to GF(2), in {0, 1}."""
        return bin(a & self._trace_mask).count("1") & 1

    def relative_trace(self, a: int, r: int) -> int:
        """Trace to the subfield F_{2^r}; requires r | m."""
        if self.m % r:
            raise ValueError(f"{r} does not divide {self.m}")
        t = a
        for _ in range(self.m // r - 1):
            a = self.frobenius(a, r)
            t ^= a
        return t

    def is_in_subfield(self, a: int, r: int) -> bool:
        """True iff a lies in F_{2^r} inside F_{2^m}; requires r | m."""
        if self.m % r:
            raise ValueError(f"{r} does not divide {self.m}")
        return self.frobenius(a, r) == a

    def subfield_elements(self, r: int) -> list:
        """All 2^r elements of F_{2^r} inside this field, ascending."""
        if self.m % r:
            raise ValueError(f"{r} does not divide {self.m}")
        if r in self._subfield_cache:
            return self._subfield_cache[r]
        if r == self.m:
            out = list(range(self.order))
        else:
            basis = self._frobenius_fixed_basis(r)
            out = [0]
            for v in basis:
                out += [x ^ v for x in out]
            out.sort()
        self._subfield_cache[r] = out
        return out

    def embed_subfield(self, r: int) -> list:
        """Embedding table F_{2^r} -> F_{2^m}: entry a is the image of the
        element of the canonical F_{2^r} with bit pattern a.

        The canonical generator of F_{2^r} is sent to the smallest root of
        the degree-r canonical modulus inside this field, making the
        embedding deterministic.
        """
        if self.m % r:
            raise ValueError(f"{r} does not divide {self.m}")
        key = ("embed", r)
        if key in self._subfield_cache:
            return self._subfield_cache[key]
        if r == self.m:  # same canonical modulus on both sides
            table = list(range(self.order))
            self._subfield_cache[key] = table
            return table
        small_mod = gf2x.canonical_modulus(r)
        root = None
        for z in self.subfield_elements(r):
            acc = 0
            pw = 1
            for i in range(r + 1):
                if (small_mod >> i) & 1:
                    acc ^= pw
                pw = self.mul(pw, z)
            if acc == 0 and (root is None or z < root):
                root = z
        assert root is not None
        table = [0] * (1 << r)
        powers = [1]
        for _ in range(r - 1):
            powers.append(self.mul(powers[-1], root))
        for a in range(1 << r):
            v = 0
            for i in range(r):
                if (a >> i) & 1:
                    v ^= powers[i]
            table[a] = v
        self._subfield_cache[key] = table
        return table

    def _frobenius_fixed_basis(self, r: int) -> list:
        """GF(2)-basis of ker(a -> a^(2^r) + a), bit-packed elimination."""
        pivots = {}
        basis = []
        for i in range(self.m):
            img = self.frobenius(1 << i, r) ^ (1 << i)
            pre = 1 << i
            while img:
                b = img.bit_length() - 1
                if b not in pivots:
                    pivots[b] = (img, pre)
                    break
                pimg, ppre = pivots[b]
                img ^= pimg
                pre ^= ppre
            else:
                basis.append(pre)
        assert len(basis) == r, (self.m, r, len(basis))
        return basis

    def elements(self, start: int = 0, stop: int = None):
        """All elements in increasing bit-pattern order; [start, stop) slices
        support partitioned consumption."""
        if stop is None:
            stop = self.order
        return range(start, stop)


_CTX_CACHE = {}


def build_context(m: int) -> FieldContext:
    """Shared, immutable context for F_{2^m} (deterministic across runs)."""
    if m not in _CTX_CACHE:
        _CTX_CACHE[m] = FieldContext(m)
    return _CTX_CACHE[m]
