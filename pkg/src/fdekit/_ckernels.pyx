# cython: language_level=3, boundscheck=False, wraparound=False
# distutils: language = c++
"""Compiled kernels for vector evaluation and witness scanning."""

from libc.stdint cimport uint32_t, uint64_t
from libcpp.vector cimport vector

import time

from . import _pykernels


cdef extern from *:
    """
    #include <cstdint>
    #include <unordered_set>
    #include <utility>
    struct fde_pair_hash {
        size_t operator()(const std::pair<uint64_t, uint64_t>& p) const noexcept {
            uint64_t h = p.first * 0x9E3779B97F4A7C15ULL;
            h ^= p.second + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
            return (size_t)h;
        }
    };
    typedef std::unordered_set<std::pair<uint64_t, uint64_t>, fde_pair_hash> fde_gamma_set;
    static inline bool fde_insert(fde_gamma_set& s, uint64_t a, uint64_t b) {
        return s.insert(std::make_pair(a, b)).second;
    }
    """
    cdef cppclass fde_gamma_set:
        fde_gamma_set()
        void reserve(size_t)
    bint fde_insert(fde_gamma_set& s, uint64_t a, uint64_t b) nogil


def map_unary(bytes table, bytes vec):
    cdef const unsigned char[:] t = table
    cdef const unsigned char[:] x = vec
    cdef Py_ssize_t n = x.shape[0], i
    out = bytearray(n)
    cdef unsigned char[:] o = out
    for i in range(n):
        o[i] = t[x[i]]
    return bytes(out)


def map_binary(bytes table, bytes x, bytes y):
    cdef const unsigned char[:] t = table
    cdef const unsigned char[:] a = x
    cdef const unsigned char[:] b = y
    cdef Py_ssize_t n = a.shape[0], i
    if b.shape[0] != n:
        raise ValueError("vectors differ in length")
    out = bytearray(n)
    cdef unsigned char[:] o = out
    for i in range(n):
        o[i] = t[4 * a[i] + b[i]]
    return bytes(out)


def truth_mask(bytes vec):
    cdef const unsigned char[:] x = vec
    cdef Py_ssize_t n = x.shape[0], i
    cdef uint64_t m = 0
    if n > 64:
        return _pykernels.truth_mask(vec)
    for i in range(n):
        if x[i] & 1:
            m |= (<uint64_t>1) << i
    return m


# below this many classes the direct loop is cheaper than building a table
TABLE_MIN_CLASSES = 256


cdef class _Scan:
    cdef vector[uint64_t] lm
    cdef vector[uint64_t] cm
    cdef fde_gamma_set seen
    cdef public list hits
    cdef public long long count
    cdef Py_ssize_t limit
    # superset sums: table[gl * fields + c] = #{k : gl inside lm[k], cm[k] == c}
    cdef vector[uint32_t] table
    cdef int lbits, fields
    cdef bint use_table

    cdef void build(self):
        cdef Py_ssize_t k, x, size = (<Py_ssize_t>1) << self.lbits
        cdef int b, c, f = self.fields
        self.table.assign(size * f, 0)
        for k in range(<Py_ssize_t>self.lm.size()):
            self.table[self.lm[k] * f + self.cm[k]] += 1
        for b in range(self.lbits):
            for x in range(size):
                if not (x >> b) & 1:
                    for c in range(f):
                        self.table[x * f + c] += self.table[(x | ((<Py_ssize_t>1) << b)) * f + c]

    cdef void visit(self, tuple premises, uint64_t gl, uint64_t gc):
        cdef Py_ssize_t k, n = self.lm.size()
        cdef int c
        if not fde_insert(self.seen, gl, gc):
            return
        if gc == 0:
            return
        if self.use_table and len(self.hits) >= self.limit:
            if self.table.size() == 0:
                self.build()
            for c in range(self.fields):
                if gc & ~(<uint64_t>c):
                    self.count += self.table[gl * self.fields + c]
            return
        for k in range(n):
            if (gl & ~self.lm[k]) == 0 and (gc & ~self.cm[k]) != 0:
                self.count += 1
                if self.limit < 0 or len(self.hits) < self.limit:
                    self.hits.append((premises, k))


def witness_scan(lmasks, cmasks, lfull, cfull, int max_premises, limit=None, deadline=None):
    if lfull >= (1 << 64) or cfull >= (1 << 64):
        return _pykernels.witness_scan(lmasks, cmasks, lfull, cfull, max_premises, limit, deadline)
    if max_premises > 2:
        raise ValueError("at most two premises are supported")
    cdef _Scan s = _Scan()
    cdef Py_ssize_t n = len(lmasks), i, j
    cdef uint64_t li, ci
    cdef long long ticks = 0
    s.hits = []
    s.count = 0
    s.limit = -1 if limit is None else limit
    for i in range(n):
        s.lm.push_back(lmasks[i])
        s.cm.push_back(cmasks[i])
    s.lbits = int(lfull).bit_length()
    s.fields = 1 << int(cfull).bit_length()
    s.use_table = limit is not None and n >= TABLE_MIN_CLASSES and s.lbits <= 16 and s.fields <= 16
    s.visit((), lfull, cfull)
    if max_premises >= 1:
        for i in range(n):
            if deadline is not None and (i & 63) == 0 and time.monotonic() > deadline:
                return s.hits, s.count, False
            s.visit((i,), s.lm[i], s.cm[i])
    if max_premises >= 2:
        for i in range(n):
            if deadline is not None and time.monotonic() > deadline:
                return s.hits, s.count, False
            li = s.lm[i]
            ci = s.cm[i]
            for j in range(i + 1, n):
                s.visit((i, j), li & s.lm[j], ci & s.cm[j])
    return s.hits, s.count, True
