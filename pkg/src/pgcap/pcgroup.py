"""Finite p-groups given by power-commutator presentations.

A presentation on generators ``g_0 .. g_{n-1}`` fixes a relative order
``m_i = p ** e_i`` per generator, a power tail ``g_i ** m_i = t_i`` and
commutator tails ``[g_j, g_i] = c_ji`` for ``j > i``, all tails supported
strictly to the right of ``i``.  Elements are normal-form exponent tuples
``(x_0, .., x_{n-1})`` with ``0 <= x_i < m_i``, standing for
``g_0 ** x_0 * .. * g_{n-1} ** x_{n-1}``.

Commutators are ``[x, y] = x^-1 y^-1 x y`` and left-normed:
``[x, y, z] = [[x, y], z]``.
"""

from __future__ import annotations

import itertools
import os
import random
import re
from dataclasses import dataclass
from pathlib import Path
from types import MappingProxyType
from typing import Container, Iterator, Mapping, Sequence

from .errors import ConsistencyError, InputError, ParseError, ResourceError
from .kernel import Collector

GroupElement = tuple[int, ...]

HARD_CAP = 2**14
DEFAULT_CAP = 3**8
CAP_ENV = "PGCAP_ORDER_CAP"


def order_cap() -> int:
    """Configured enumeration cap: ``$PGCAP_ORDER_CAP`` clamped to the hard cap."""
    raw = os.environ.get(CAP_ENV)
    if not raw:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise InputError(f"{CAP_ENV} must be an integer, got {raw!r}") from None
    return max(1, min(cap, HARD_CAP))


def check_cap(order: int, cap: int | None = None) -> None:
    limit = order_cap() if cap is None else min(cap, HARD_CAP)
    if order > limit:
        raise ResourceError(f"group order {order} exceeds cap {limit}")


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


class PcPresentation:
    """Immutable power-commutator presentation of a finite p-group."""

    def __init__(
        self,
        p: int,
        rel_exps: Sequence[int],
        power_tails: Mapping[int, Sequence[int]] | Sequence[Sequence[int]] | None = None,
        comm_tails: Mapping[tuple[int, int], Sequence[int]] | None = None,
        names: Sequence[str] | None = None,
    ) -> None:
        if not isinstance(p, int) or not is_prime(p):
            raise InputError(f"p must be prime, got {p!r}")
        exps = tuple(int(e) for e in rel_exps)
        if any(e < 1 for e in exps):
            raise InputError(f"relative order exponents must be >= 1, got {exps}")
        n = len(exps)
        self.p = p
        self.rel_exps = exps
        self.rel_orders = tuple(p**e for e in exps)
        self.n = n

        if power_tails is None:
            power_tails = {}
        if not isinstance(power_tails, Mapping):
            if len(power_tails) != n:
                raise InputError("need one power tail per generator")
            power_tails = dict(enumerate(power_tails))
        pt = [(0,) * n] * n
        for i, t in power_tails.items():
            if not 0 <= i < n:
                raise InputError(f"power tail for unknown generator {i}")
            pt[i] = self._tail(t, i, f"power tail of g{i}")
        self.power_tails: tuple[GroupElement, ...] = tuple(pt)

        ct: dict[tuple[int, int], GroupElement] = {}
        for (j, i), t in (comm_tails or {}).items():
            if not (0 <= i < j < n):
                raise InputError(f"commutator tail [g{j}, g{i}] needs n > j > i >= 0")
            vec = self._tail(t, i, f"commutator tail [g{j}, g{i}]")
            if any(vec):
                ct[(j, i)] = vec
        self.comm_tails: Mapping[tuple[int, int], GroupElement] = MappingProxyType(
            dict(sorted(ct.items()))
        )
        if names is None:
            names = [f"g{i + 1}" for i in range(n)]
        if len(names) != n:
            raise InputError("need one name per generator")
        self.names = tuple(names)
        self._collector = None
        self._consistency_checked = False

    def _tail(self, t: Sequence[int], i: int, what: str) -> GroupElement:
        vec = tuple(int(x) for x in t)
        if len(vec) != self.n:
            raise InputError(f"{what}: expected length {self.n}, got {len(vec)}")
        for k, x in enumerate(vec):
            if not 0 <= x < self.rel_orders[k]:
                raise InputError(f"{what}: entry {k} out of range [0, {self.rel_orders[k]})")
            if x and k <= i:
                raise InputError(f"{what}: supported at index {k} <= {i}")
        return vec

    @property
    def order(self) -> int:
        return self.p ** sum(self.rel_exps)

    @property
    def identity(self) -> GroupElement:
        return (0,) * self.n

    @property
    def consistency_checked(self) -> bool:
        return self._consistency_checked

    @property
    def collector(self):
        if self._collector is None:
            if self.n > 64:
                raise ResourceError("more than 64 generators")
            self._collector = Collector(self.rel_orders, self.power_tails, dict(self.comm_tails))
        return self._collector

    def gen(self, i: int, e: int = 1) -> GroupElement:
        v = [0] * self.n
        v[i] = e % self.rel_orders[i]
        return tuple(v)

    def gens(self) -> list[GroupElement]:
        return [self.gen(i) for i in range(self.n)]

    def comm_tail(self, j: int, i: int) -> GroupElement:
        return self.comm_tails.get((j, i), self.identity)

    def key(self) -> tuple:
        return (self.p, self.rel_exps, self.power_tails, tuple(self.comm_tails.items()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PcPresentation):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"PcPresentation(p={self.p}, order={self.p}^{sum(self.rel_exps)}, n={self.n})"

    def word(self, x: GroupElement) -> str:
        """Human-readable normal form, e.g. ``a^2*c``."""
        parts = []
        for name, e in zip(self.names, x):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append(f"{name}^{e}")
        return "*".join(parts) or "1"


def validate_element(pres: PcPresentation, x: Sequence[int]) -> GroupElement:
    if len(x) != pres.n:
        raise InputError(f"element has length {len(x)}, expected {pres.n}")
    for k, (e, m) in enumerate(zip(x, pres.rel_orders)):
        if not isinstance(e, int) or not 0 <= e < m:
            raise InputError(f"exponent {e!r} at index {k} outside [0, {m})")
    return tuple(x)


def multiply(pres: PcPresentation, x: GroupElement, y: GroupElement) -> GroupElement:
    """Normal form of ``x * y`` by collection from the left."""
    return pres.collector.mul(validate_element(pres, x), validate_element(pres, y))


def inverse(pres: PcPresentation, x: GroupElement) -> GroupElement:
    return pres.collector.inv(validate_element(pres, x))


def power(pres: PcPresentation, x: GroupElement, k: int) -> GroupElement:
    return pres.collector.pow(validate_element(pres, x), k)


def commutator(pres: PcPresentation, x: GroupElement, y: GroupElement) -> GroupElement:
    return pres.collector.comm(validate_element(pres, x), validate_element(pres, y))


def conjugate(pres: PcPresentation, x: GroupElement, y: GroupElement) -> GroupElement:
    """``x ** y = y^-1 x y``."""
    c = pres.collector
    return c.mul(c.inv(y), c.mul(x, y))


def left_normed(pres: PcPresentation, *xs: GroupElement) -> GroupElement:
    """``[x1, x2, ..., xk]`` left-normed."""
    c = pres.collector
    acc = xs[0]
    for y in xs[1:]:
        acc = c.comm(acc, y)
    return acc


def element_order(pres: PcPresentation, x: GroupElement) -> int:
    c = pres.collector
    x = validate_element(pres, x)
    ident = pres.identity
    order = 1
    while x != ident:
        x = c.pow(x, pres.p)
        order *= pres.p
    return order


@dataclass(frozen=True)
class ConsistencyReport:
    ok: bool
    word: str | None = None
    lhs: GroupElement | None = None
    rhs: GroupElement | None = None

    def __bool__(self) -> bool:
        return self.ok


def consistency_test_words(pres: PcPresentation):
    """Yield ``(label, lhs, rhs)`` for every test word.

    Left sides are collected one grouping at a time, so inconsistent
    relations surface as two different normal forms.
    """
    c = pres.collector
    n = pres.n
    m = pres.rel_orders
    g = pres.gens()
    name = pres.names
    t = pres.power_tails
    for k in range(n):
        for j in range(k):
            for i in range(j):
                lhs = c.mul(c.mul(g[k], g[j]), g[i])
                rhs = c.mul(g[k], c.mul(g[j], g[i]))
                yield f"({name[k]} {name[j]}) {name[i]}", lhs, rhs
    for j in range(n):
        top = pres.gen(j, m[j] - 1)
        for i in range(j):
            lhs = c.mul(t[j], g[i])
            rhs = c.mul(top, c.mul(g[j], g[i]))
            yield f"({name[j]}^{m[j] - 1} {name[j]}) {name[i]}", lhs, rhs
    for j in range(n):
        for i in range(j):
            low = pres.gen(i, m[i] - 1)
            lhs = c.mul(g[j], t[i])
            rhs = c.mul(c.mul(g[j], low), g[i])
            yield f"{name[j]} ({name[i]}^{m[i] - 1} {name[i]})", lhs, rhs
    for i in range(n):
        top = pres.gen(i, m[i] - 1)
        lhs = c.mul(t[i], g[i])
        rhs = c.mul(top, c.mul(g[i], g[i]))
        yield f"({name[i]}^{m[i] - 1} {name[i]}) {name[i]}", lhs, rhs


def check_consistency(pres: PcPresentation) -> ConsistencyReport:
    for label, lhs, rhs in consistency_test_words(pres):
        if lhs != rhs:
            return ConsistencyReport(False, label, lhs, rhs)
    pres._consistency_checked = True
    return ConsistencyReport(True)


def require_consistent(pres: PcPresentation) -> PcPresentation:
    if not pres.consistency_checked:
        report = check_consistency(pres)
        if not report:
            raise ConsistencyError("inconsistent presentation", report.word)
    return pres


def enumerate_elements(pres: PcPresentation, cap: int | None = None) -> Iterator[GroupElement]:
    """Every normal form exactly once, lexicographically."""
    check_cap(pres.order, cap)
    return itertools.product(*(range(m) for m in pres.rel_orders))


def random_element(pres: PcPresentation, rng: random.Random) -> GroupElement:
    return tuple(rng.randrange(m) for m in pres.rel_orders)


@dataclass(frozen=True)
class HallWittReport:
    full: bool
    unconjugated: bool
    # None when no Z_2 membership was supplied
    hypothesis: bool | None = None

    def __bool__(self) -> bool:
        return self.full


def hall_witt_check(
    pres: PcPresentation,
    x: GroupElement,
    y: GroupElement,
    z: GroupElement,
    z2: Container[GroupElement] | None = None,
) -> HallWittReport:
    """Evaluate the Hall-Witt identity on ``(x, y, z)``.

    ``full`` is ``[x, y^-1, z]^y [y, z^-1, x]^z [z, x^-1, y]^x == 1``, true in
    every group.  ``unconjugated`` is ``[x, y, z][z, x, y][y, z, x] == 1``, which
    is guaranteed once ``[x, y], [y, z], [z, x]`` all lie in ``Z_2``; pass the
    member set of ``Z_2`` as *z2* to have that hypothesis evaluated too.
    """
    c = pres.collector
    for v in (x, y, z):
        validate_element(pres, v)

    def term(u, v, w):
        inner = left_normed(pres, u, c.inv(v), w)
        return conjugate(pres, inner, v)

    full = c.mul(c.mul(term(x, y, z), term(y, z, x)), term(z, x, y))
    plain = c.mul(
        c.mul(left_normed(pres, x, y, z), left_normed(pres, z, x, y)),
        left_normed(pres, y, z, x),
    )
    hyp = None
    if z2 is not None:
        hyp = all(c.comm(u, v) in z2 for u, v in ((x, y), (y, z), (z, x)))
    return HallWittReport(full == pres.identity, plain == pres.identity, hyp)


def direct_product(A: PcPresentation, B: PcPresentation) -> PcPresentation:
    """``A x B`` with A's generators first."""
    if A.p != B.p:
        raise InputError("direct product of groups for different primes")
    na, nb = A.n, B.n
    pad_a = lambda v: tuple(v) + (0,) * nb  # noqa: E731
    pad_b = lambda v: (0,) * na + tuple(v)  # noqa: E731
    power = [pad_a(t) for t in A.power_tails] + [pad_b(t) for t in B.power_tails]
    comm = {k: pad_a(v) for k, v in A.comm_tails.items()}
    comm.update({(j + na, i + na): pad_b(v) for (j, i), v in B.comm_tails.items()})
    names = [f"{s}" for s in A.names] + [f"{s}'" for s in B.names]
    return PcPresentation(A.p, A.rel_exps + B.rel_exps, power, comm, names)


def cyclic(p: int, e: int) -> PcPresentation:
    return PcPresentation(p, [e])


# -- text format ------------------------------------------------------------

_TERM = re.compile(r"^(\d+)\^(-?\d+)$")


def _parse_rhs(tokens: list[str], n: int, lineno: int) -> list[int]:
    vec = [0] * n
    seen = set()
    for tok in tokens:
        mt = _TERM.match(tok)
        if not mt:
            raise ParseError(f"bad term {tok!r}, expected <gen>^<exp>", lineno)
        j, k = int(mt.group(1)), int(mt.group(2))
        if not 1 <= j <= n:
            raise ParseError(f"generator {j} out of range 1..{n}", lineno)
        if j in seen:
            raise ParseError(f"generator {j} repeated in right-hand side", lineno)
        seen.add(j)
        vec[j - 1] = k
    return vec


def parse_presentation(text: str) -> PcPresentation:
    """Parse the portable presentation format (generators numbered from 1).

    ::

        p 3
        gens 3
        relorder 1 1
        relorder 2 1
        relorder 3 1
        comm 2 1 : 3^2      # [g2, g1] = g3^2
    """
    p = n = None
    exps: dict[int, int] = {}
    pows: dict[int, tuple[list[int], int]] = {}
    comms: dict[tuple[int, int], tuple[list[int], int]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(":")
        fields = head.split()
        kind = fields[0]
        if kind in ("p", "gens"):
            if len(fields) != 2 or rest:
                raise ParseError(f"'{kind}' takes one integer", lineno)
            try:
                val = int(fields[1])
            except ValueError:
                raise ParseError(f"'{kind}' takes one integer", lineno) from None
            if kind == "p":
                if p is not None:
                    raise ParseError("duplicate 'p'", lineno)
                if not is_prime(val):
                    raise ParseError(f"{val} is not prime", lineno)
                p = val
            else:
                if n is not None:
                    raise ParseError("duplicate 'gens'", lineno)
                if val < 0:
                    raise ParseError("negative generator count", lineno)
                n = val
            continue
        if p is None or n is None:
            raise ParseError(f"'{kind}' before 'p' and 'gens'", lineno)
        try:
            idx = [int(f) for f in fields[1:]]
        except ValueError:
            raise ParseError(f"non-integer index in {kind!r}", lineno) from None
        if kind == "relorder":
            if len(idx) != 2 or rest:
                raise ParseError("usage: relorder <i> <e_i>", lineno)
            i, e = idx
            if not 1 <= i <= n:
                raise ParseError(f"generator {i} out of range 1..{n}", lineno)
            if i in exps:
                raise ParseError(f"duplicate relorder for {i}", lineno)
            if e < 1:
                raise ParseError("relative order exponent must be >= 1", lineno)
            exps[i] = e
        elif kind == "pow":
            if len(idx) != 1 or ":" not in line:
                raise ParseError("usage: pow <i> : <j>^<k> ...", lineno)
            (i,) = idx
            if not 1 <= i <= n:
                raise ParseError(f"generator {i} out of range 1..{n}", lineno)
            if i in pows:
                raise ParseError(f"duplicate power relation for {i}", lineno)
            pows[i] = (_parse_rhs(rest.split(), n, lineno), lineno)
        elif kind == "comm":
            if len(idx) != 2 or ":" not in line:
                raise ParseError("usage: comm <j> <i> : <j1>^<k1> ...", lineno)
            j, i = idx
            if not (1 <= i < j <= n):
                raise ParseError(f"comm needs {n} >= j > i >= 1, got {j} {i}", lineno)
            if (j, i) in comms:
                raise ParseError(f"duplicate commutator relation {j} {i}", lineno)
            comms[(j, i)] = (_parse_rhs(rest.split(), n, lineno), lineno)
        else:
            raise ParseError(f"unknown directive {kind!r}", lineno)
    if p is None or n is None:
        raise ParseError("missing 'p' or 'gens'")
    missing = [i for i in range(1, n + 1) if i not in exps]
    if missing:
        raise ParseError(f"missing relorder for generators {missing}")
    rel_exps = [exps[i] for i in range(1, n + 1)]
    orders = [p**e for e in rel_exps]

    def check(vec, i0, lineno, what):
        for k, x in enumerate(vec):
            if x and k <= i0:
                raise ParseError(f"{what} supported at generator {k + 1} <= {i0 + 1}", lineno)
            if not 0 <= x < orders[k]:
                raise ParseError(f"exponent {x} of generator {k + 1} outside [0, {orders[k]})", lineno)
        return vec

    power = {i - 1: check(v, i - 1, ln, "power tail") for i, (v, ln) in pows.items()}
    comm = {(j - 1, i - 1): check(v, i - 1, ln, "commutator tail") for (j, i), (v, ln) in comms.items()}
    return PcPresentation(p, rel_exps, power, comm)


def _fmt_rhs(vec: Sequence[int]) -> str:
    return " ".join(f"{k + 1}^{e}" for k, e in enumerate(vec) if e)


def format_presentation(pres: PcPresentation) -> str:
    lines = [f"# order {pres.p}^{sum(pres.rel_exps)}", f"p {pres.p}", f"gens {pres.n}"]
    lines += [f"relorder {i + 1} {e}" for i, e in enumerate(pres.rel_exps)]
    for i, t in enumerate(pres.power_tails):
        if any(t):
            lines.append(f"pow {i + 1} : {_fmt_rhs(t)}")
    for (j, i), t in pres.comm_tails.items():
        lines.append(f"comm {j + 1} {i + 1} : {_fmt_rhs(t)}")
    return "\n".join(lines) + "\n"


def read_presentation(path: str | Path) -> PcPresentation:
    return parse_presentation(Path(path).read_text())


def write_presentation(pres: PcPresentation, path: str | Path) -> None:
    Path(path).write_text(format_presentation(pres))
