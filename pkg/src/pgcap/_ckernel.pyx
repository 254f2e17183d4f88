# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled collection kernel; same algorithm as ``_collect.py``."""

from libcpp.vector cimport vector


cdef struct Letter:
    int gen
    int exp


cdef class Collector:
    cdef public int n
    cdef vector[int] m
    cdef vector[Letter] pool
    # word w occupies pool[word_start[w] : word_start[w] + word_len[w]]
    cdef vector[int] word_start
    cdef vector[int] word_len
    cdef vector[int] pow_word
    # conj_base[i * n + j] = word id of (g_j ** 0) ** g_i, or -1 if commuting
    cdef vector[int] conj_base
    cdef vector[int] noncomm
    cdef vector[int] noncomm_start
    cdef vector[Letter] stack
    cdef vector[int] scratch

    def __init__(self, rel_orders, pow_tails, comm_tails):
        cdef int n = len(rel_orders)
        cdef int i, j, k
        self.n = n
        for i in range(n):
            self.m.push_back(rel_orders[i])
        for i in range(n):
            self.pow_word.push_back(self._add_word(pow_tails[i]))
        nc = [[] for _ in range(n)]
        for (j, i), t in comm_tails.items():
            if any(t):
                nc[i].append(j)
        for i in range(n):
            self.noncomm_start.push_back(self.noncomm.size())
            for j in sorted(nc[i]):
                self.noncomm.push_back(j)
        self.noncomm_start.push_back(self.noncomm.size())
        self.conj_base.assign(n * n, -1)
        self.scratch.assign(n, 0)
        cdef list r
        for i in range(n - 1, -1, -1):
            for j in sorted(nc[i]):
                r = [0] * n
                r[j] = 1
                base = self._collect_list(r, comm_tails[(j, i)])
                cur = (0,) * n
                first = -1
                for k in range(self.m[j]):
                    w = self._add_word(cur)
                    if k == 0:
                        first = w
                    cur = self.mul(cur, base)
                self.conj_base[i * n + j] = first

    cdef int _add_word(self, vec):
        cdef int idx = self.word_start.size()
        cdef Letter L
        cdef int cnt = 0
        self.word_start.push_back(self.pool.size())
        for g, e in enumerate(vec):
            if e:
                L.gen = g
                L.exp = e
                self.pool.push_back(L)
                cnt += 1
        self.word_len.push_back(cnt)
        return idx

    cdef tuple _collect_list(self, list x, y):
        cdef int j
        for j in range(self.n):
            self.scratch[j] = x[j]
        self.stack.clear()
        self._push_vec(y)
        self._run(self.scratch.data())
        return tuple([self.scratch[j] for j in range(self.n)])

    cdef inline void _push_word(self, int w):
        cdef int s = self.word_start[w]
        cdef int t = s + self.word_len[w] - 1
        while t >= s:
            self.stack.push_back(self.pool[t])
            t -= 1

    cdef inline void _push(self, int g, int e):
        cdef Letter L
        L.gen = g
        L.exp = e
        self.stack.push_back(L)

    cdef void _push_vec(self, y):
        cdef int j
        cdef int e
        for j in range(self.n - 1, -1, -1):
            e = y[j]
            if e:
                self._push(j, e)

    cdef void _run(self, int* r) noexcept:
        cdef int n = self.n
        cdef int i, e, j, v, k, a, b, w
        cdef bint blocked, carry
        cdef Letter top
        cdef int s[64]
        while self.stack.size():
            top = self.stack.back()
            self.stack.pop_back()
            i = top.gen
            e = top.exp
            a = self.noncomm_start[i]
            b = self.noncomm_start[i + 1]
            blocked = False
            for k in range(a, b):
                if r[self.noncomm[k]]:
                    blocked = True
                    break
            if not blocked:
                v = r[i] + e
                if v < self.m[i]:
                    r[i] = v
                    continue
                r[i] = v - self.m[i]
                w = self.pow_word[i]
                if self.word_len[w] == 0:
                    continue
                for j in range(n - 1, i, -1):
                    if r[j]:
                        self._push(j, r[j])
                        r[j] = 0
                self._push_word(w)
                continue
            if e > 1:
                self._push(i, e - 1)
            for j in range(i + 1, n):
                s[j] = r[j]
                r[j] = 0
            v = r[i] + 1
            carry = v == self.m[i]
            r[i] = 0 if carry else v
            for j in range(n - 1, i, -1):
                k = s[j]
                if not k:
                    continue
                w = self.conj_base[i * n + j]
                if w < 0:
                    self._push(j, k)
                else:
                    self._push_word(w + k)
            if carry:
                self._push_word(self.pow_word[i])

    cdef inline void _load(self, tuple x):
        cdef int j
        for j in range(self.n):
            self.scratch[j] = x[j]

    cdef inline tuple _dump(self):
        cdef int j
        return tuple([self.scratch[j] for j in range(self.n)])

    cpdef tuple mul(self, tuple x, tuple y):
        self._load(x)
        self.stack.clear()
        self._push_vec(y)
        self._run(self.scratch.data())
        return self._dump()

    cpdef tuple mul_gen(self, tuple x, int i, int e):
        self._load(x)
        self.stack.clear()
        if e:
            self._push(i, e)
            self._run(self.scratch.data())
        return self._dump()

    cpdef tuple inv(self, tuple x):
        cdef int i, e
        cdef list out = [0] * self.n
        self._load(x)
        self.stack.clear()
        for i in range(self.n):
            if self.scratch[i]:
                e = self.m[i] - self.scratch[i]
                out[i] = e
                self._push(i, e)
                self._run(self.scratch.data())
        return tuple(out)

    cpdef tuple pow(self, tuple x, long k):
        if k < 0:
            x = self.inv(x)
            k = -k
        cdef tuple result = (0,) * self.n
        cdef tuple base = x
        while k:
            if k & 1:
                result = self.mul(result, base)
            k >>= 1
            if k:
                base = self.mul(base, base)
        return result

    cpdef tuple comm(self, tuple x, tuple y):
        return self.mul(self.inv(self.mul(y, x)), self.mul(x, y))
