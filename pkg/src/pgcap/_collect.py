"""Pure-Python collection kernel.

Mirrors ``_ckernel.pyx`` line for line; used when the compiled module is
unavailable or ``PGCAP_KERNEL=python`` is set.
"""

from __future__ import annotations

from typing import Sequence


def _letters(vec: Sequence[int]) -> list[tuple[int, int]]:
    return [(j, e) for j, e in enumerate(vec) if e]


class Collector:
    """Collection from the left for a power-commutator presentation.

    ``pow_tails[i]`` is the normal form of ``g_i ** m_i``; ``comm_tails`` maps
    ``(j, i)`` with ``j > i`` to the normal form of ``[g_j, g_i]``.  Tails are
    trusted here; support checks live in :mod:`pgcap.pcgroup`.
    """

    def __init__(
        self,
        rel_orders: Sequence[int],
        pow_tails: Sequence[Sequence[int]],
        comm_tails: dict[tuple[int, int], Sequence[int]],
    ) -> None:
        n = len(rel_orders)
        self.n = n
        self.m = list(rel_orders)
        self.pow_words = [_letters(t) for t in pow_tails]
        self.noncomm: list[list[int]] = [[] for _ in range(n)]
        for (j, i), t in comm_tails.items():
            if any(t):
                self.noncomm[i].append(j)
        for lst in self.noncomm:
            lst.sort()
        # conj[i][j][k]: letters of (g_j ** k) ** g_i, only for j in noncomm[i]
        self.conj: list[dict[int, list[list[tuple[int, int]]]]] = [{} for _ in range(n)]
        for i in range(n - 1, -1, -1):
            for j in self.noncomm[i]:
                r = [0] * n
                r[j] = 1
                self._run(r, list(reversed(_letters(comm_tails[(j, i)]))))
                base = _letters(r)
                cur = [0] * n
                table = []
                for _ in range(self.m[j]):
                    table.append(_letters(cur))
                    self._run(cur, list(reversed(base)))
                self.conj[i][j] = table

    def _run(self, r: list[int], stack: list[tuple[int, int]]) -> None:
        m = self.m
        n = self.n
        noncomm = self.noncomm
        while stack:
            i, e = stack.pop()
            blocked = False
            for j in noncomm[i]:
                if r[j]:
                    blocked = True
                    break
            if not blocked:
                v = r[i] + e
                if v < m[i]:
                    r[i] = v
                    continue
                r[i] = v - m[i]
                tail = self.pow_words[i]
                if not tail:
                    continue
                for j in range(n - 1, i, -1):
                    if r[j]:
                        stack.append((j, r[j]))
                        r[j] = 0
                stack.extend(reversed(tail))
                continue
            if e > 1:
                stack.append((i, e - 1))
            s = r[i + 1:]
            for j in range(i + 1, n):
                r[j] = 0
            v = r[i] + 1
            carry = v == m[i]
            r[i] = 0 if carry else v
            conj = self.conj[i]
            for j in range(n - 1, i, -1):
                k = s[j - i - 1]
                if not k:
                    continue
                word = conj.get(j)
                if word is None:
                    stack.append((j, k))
                else:
                    stack.extend(reversed(word[k]))
            if carry:
                stack.extend(reversed(self.pow_words[i]))

    def mul(self, x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
        r = list(x)
        stack = [(j, y[j]) for j in range(self.n - 1, -1, -1) if y[j]]
        self._run(r, stack)
        return tuple(r)

    def mul_gen(self, x: tuple[int, ...], i: int, e: int) -> tuple[int, ...]:
        r = list(x)
        if e:
            self._run(r, [(i, e)])
        return tuple(r)

    def inv(self, x: tuple[int, ...]) -> tuple[int, ...]:
        # sift x * y down to the identity; y comes out in normal form
        r = list(x)
        out = [0] * self.n
        for i in range(self.n):
            if r[i]:
                e = self.m[i] - r[i]
                out[i] = e
                self._run(r, [(i, e)])
        return tuple(out)

    def pow(self, x: tuple[int, ...], k: int) -> tuple[int, ...]:
        if k < 0:
            x = self.inv(x)
            k = -k
        result = (0,) * self.n
        base = x
        while k:
            if k & 1:
                result = self.mul(result, base)
            k >>= 1
            if k:
                base = self.mul(base, base)
        return result

    def comm(self, x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
        # x^-1 y^-1 x y = (y x)^-1 (x y)
        return self.mul(self.inv(self.mul(y, x)), self.mul(x, y))
