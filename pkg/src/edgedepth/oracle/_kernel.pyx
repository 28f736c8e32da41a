# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled lattice walk and core reduction.

Exponent vectors are packed five bits per variable into one 64-bit word
(four value bits plus a guard bit), which limits this backend to 12
variables and exponents up to 15. Divisibility tests, lcm witnesses and the
facets of the upper Koszul complexes are all computed on the packed words.
"""

from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, free
from libc.string cimport memset, memcpy

from ..errors import BudgetExceeded

ctypedef uint64_t u64

cdef extern from *:
    int __builtin_popcount(unsigned int x)

MAX_VARS = 12
MAX_EXP = 15

cdef int64_t PRIME = 2147483647
cdef unsigned char CMP15[32768]


cdef void _init_tables():
    cdef unsigned x, r
    cdef int j
    for x in range(32768):
        r = 0
        for j in range(3):
            if (x >> (5 * j)) & 1:
                r |= 1u << j
        CMP15[x] = r


_init_tables()


cdef inline unsigned _compact(u64 E) nogil:
    # guard bits (bit 4 of each field) -> one bit per variable
    E >>= 4
    return (CMP15[E & 0x7fff] | (CMP15[(E >> 15) & 0x7fff] << 3)
            | (CMP15[(E >> 30) & 0x7fff] << 6) | (CMP15[(E >> 45) & 0x7fff] << 9))


cdef int64_t _inv(int64_t a) nogil:
    cdef int64_t result = 1, base = a % PRIME, e = PRIME - 2
    while e:
        if e & 1:
            result = result * base % PRIME
        base = base * base % PRIME
        e >>= 1
    return result


cdef int _rank(int64_t* A, int rows, int cols) nogil:
    cdef int r = 0, c, i, j, piv
    cdef int64_t f, inv, t
    cdef int64_t* top
    cdef int64_t* row
    for c in range(cols):
        piv = -1
        for i in range(r, rows):
            if A[<size_t>i * cols + c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(cols):
                t = A[<size_t>piv * cols + j]
                A[<size_t>piv * cols + j] = A[<size_t>r * cols + j]
                A[<size_t>r * cols + j] = t
        top = A + <size_t>r * cols
        inv = _inv(top[c])
        for i in range(r + 1, rows):
            row = A + <size_t>i * cols
            if row[c]:
                f = row[c] * inv % PRIME
                for j in range(c, cols):
                    if top[j]:
                        row[j] = (row[j] + PRIME - f * top[j] % PRIME) % PRIME
        r += 1
        if r == rows:
            break
    return r


cdef int _homology(const unsigned* fac, int nfac, int nv, int* out,
                   unsigned char* isface, int* index) except -1:
    """Reduced homology mod PRIME; out[k] is the rank in degree k - 1.
    Returns the largest face size."""
    cdef int i, k, top = 0, size, nrows, ncols, row, col, sign
    cdef unsigned s, f, rest, low
    cdef int cnt[14]
    cdef int rank[15]
    cdef unsigned full = 1u << nv
    cdef int64_t* A
    memset(isface, 0, full)
    memset(cnt, 0, sizeof(cnt))
    memset(rank, 0, sizeof(rank))
    for i in range(nfac):
        f = fac[i]
        s = f
        while True:
            isface[s] = 1
            if s == 0:
                break
            s = (s - 1) & f
    for s in range(full):
        if isface[s]:
            size = __builtin_popcount(s)
            index[s] = cnt[size]
            cnt[size] += 1
            if size > top:
                top = size
    for k in range(1, top + 1):
        nrows = cnt[k]
        ncols = cnt[k - 1]
        A = <int64_t*>malloc(sizeof(int64_t) * nrows * ncols)
        if A == NULL:
            raise MemoryError()
        memset(A, 0, sizeof(int64_t) * nrows * ncols)
        for s in range(full):
            if isface[s] and __builtin_popcount(s) == k:
                row = index[s]
                rest = s
                sign = 1
                while rest:
                    low = rest & (~rest + 1)
                    rest ^= low
                    col = index[s ^ low]
                    A[<size_t>row * ncols + col] = 1 if sign > 0 else PRIME - 1
                    sign = -sign
        rank[k] = _rank(A, nrows, ncols)
        free(A)
    for k in range(top + 1):
        out[k] = cnt[k] - rank[k] - rank[k + 1]
    return top


cdef class _Walker:
    cdef int nv
    cdef u64 H, ONE, M
    cdef int rho[12]
    cdef u64* pool
    cdef size_t poolpos
    cdef long count, limit
    cdef bint over
    cdef unsigned curstamp
    cdef unsigned stamp[4096]
    cdef unsigned fac[4096]
    cdef int nfac
    cdef unsigned char isface[4096]
    cdef int index[4096]
    cdef list cores

    def __cinit__(self):
        self.pool = NULL

    def __dealloc__(self):
        if self.pool != NULL:
            free(self.pool)

    cdef int _reduce(self):
        """Collapse dominated vertices; 1 if the complex is a cone."""
        cdef int i, j, k, v, changed, keep
        cdef unsigned a, u, c, bit
        while True:
            k = 0
            for i in range(self.nfac):
                keep = 1
                for j in range(self.nfac):
                    if j != i and (self.fac[i] & self.fac[j]) == self.fac[i]:
                        keep = 0
                        break
                if keep:
                    self.fac[k] = self.fac[i]
                    k += 1
            self.nfac = k
            a = ~0u
            u = 0
            for i in range(self.nfac):
                a &= self.fac[i]
                u |= self.fac[i]
            if a:
                return 1
            changed = 0
            for v in range(self.nv):
                bit = 1u << v
                if not (u & bit):
                    continue
                c = ~0u
                for i in range(self.nfac):
                    if self.fac[i] & bit:
                        c &= self.fac[i]
                if c & ~bit:
                    self.curstamp += 1
                    k = 0
                    for i in range(self.nfac):
                        self.fac[i] &= ~bit
                        if self.stamp[self.fac[i]] != self.curstamp:
                            self.stamp[self.fac[i]] = self.curstamp
                            self.fac[k] = self.fac[i]
                            k += 1
                    self.nfac = k
                    changed = 1
                    break
            if not changed:
                return 0

    cdef int _leaf(self, u64* lst, int length) except -1:
        cdef u64 MH = self.M | self.H
        cdef u64 supp = (MH - self.ONE) & self.H
        cdef u64 cover = 0, E
        cdef unsigned T
        cdef int i, top
        cdef int out[14]
        self.curstamp += 1
        self.nfac = 0
        for i in range(length):
            E = (MH - lst[i] - self.ONE) & self.H
            cover |= ~E
            T = _compact(E)
            if self.stamp[T] != self.curstamp:
                self.stamp[T] = self.curstamp
                self.fac[self.nfac] = T
                self.nfac += 1
        if (cover & supp) != supp:
            return 0
        self.count += 1
        if self.count > self.limit:
            self.over = True
            return 0
        if self._reduce():
            return 0
        top = _homology(self.fac, self.nfac, self.nv, out, self.isface, self.index)
        m = tuple(<int>((self.M >> (5 * i)) & 15) for i in range(self.nv))
        facets = tuple(sorted(self.fac[i] for i in range(self.nfac)))
        self.cores.append((m, facets, tuple(out[i] for i in range(top + 1))))
        return 0

    cdef int _dfs(self, int k, u64* lst, int length, u64 need) except -1:
        cdef int sh, i, v, lo, hi
        cdef int cnt[18]
        cdef int pos[18]
        cdef u64 have = 0, Mk, x, g
        cdef u64* sorted_
        if self.over:
            return 0
        if k == self.nv:
            return self._leaf(lst, length)
        sh = 5 * k
        memset(cnt, 0, sizeof(cnt))
        for i in range(length):
            cnt[((lst[i] >> sh) & 31) + 1] += 1
        for v in range(1, 18):
            cnt[v] += cnt[v - 1]
        sorted_ = self.pool + self.poolpos
        self.poolpos += length
        memcpy(pos, cnt, sizeof(pos))
        for i in range(length):
            g = lst[i]
            sorted_[pos[(g >> sh) & 31]] = g
            pos[(g >> sh) & 31] += 1
        Mk = self.M & ~((<u64>31) << sh)
        for v in range(self.rho[k] + 1):
            lo = cnt[v]
            hi = cnt[v + 1]
            for i in range(lo, hi):
                # fields where g agrees with the current prefix of m
                x = (sorted_[i] ^ Mk) | self.H
                have |= ~(x - self.ONE) & self.H
            if hi == 0 or (v > 0 and hi == lo):
                continue
            if (have & need) != need:
                continue
            self.M = Mk | ((<u64>v) << sh)
            self._dfs(k + 1, sorted_, hi, need | ((<u64>16) << sh) if v else need)
            if self.over:
                break
        self.M = Mk
        self.poolpos -= length
        return 0


def koszul_cores(gens, int n_vars, long max_elements):
    """Compiled version of the pure-Python walk; same arguments and result."""
    cdef _Walker w = _Walker()
    cdef size_t ng = len(gens)
    cdef int i, j, e
    cdef u64 key
    if n_vars > MAX_VARS or n_vars < 1:
        raise ValueError("compiled kernel handles 1..12 variables")
    w.nv = n_vars
    w.H = 0
    w.ONE = 0
    for i in range(n_vars):
        w.H |= (<u64>16) << (5 * i)
        w.ONE |= (<u64>1) << (5 * i)
        w.rho[i] = 0
    w.count = 0
    w.limit = max_elements
    w.over = False
    w.curstamp = 0
    memset(w.stamp, 0, sizeof(w.stamp))
    w.cores = []
    w.M = 0
    if ng == 0:
        return 0, []
    w.pool = <u64*>malloc(sizeof(u64) * ng * (n_vars + 3))
    if w.pool == NULL:
        raise MemoryError()
    for i in range(<int>ng):
        key = 0
        g = gens[i]
        for j in range(n_vars):
            e = g[j]
            if e < 0 or e > MAX_EXP:
                raise ValueError("compiled kernel handles exponents 0..15")
            key |= (<u64>e) << (5 * j)
            if e > w.rho[j]:
                w.rho[j] = e
        w.pool[i] = key
    w.poolpos = ng
    w._dfs(0, w.pool, <int>ng, 0)
    if w.over:
        raise BudgetExceeded("lcm lattice size", max_elements, w.count)
    return w.count, w.cores


def homology_modp(facets, int n_vars):
    """Modular reduced homology of a bitmask complex indexed by face size."""
    cdef unsigned fac[4096]
    cdef unsigned char isface[4096]
    cdef int index[4096]
    cdef int out[14]
    cdef int i, n = len(facets), top
    if n_vars > MAX_VARS or n > 4096:
        raise ValueError("compiled kernel handles 12 vertices")
    for i in range(n):
        fac[i] = facets[i]
    top = _homology(fac, n, n_vars, out, isface, index)
    return tuple(out[i] for i in range(top + 1))
