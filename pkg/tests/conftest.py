"""Shared fixtures and oracles that do not go through collection.

Concrete groups (permutations, matrices, quaternions) give an independent
check: a pc presentation is right when the map sending pc generators to
chosen concrete elements extends to a bijective homomorphism.
"""

from __future__ import annotations

import itertools

import pytest

from pgcap.families import FamilyParams, build_extraspecial, build_family
from pgcap.pcgroup import PcPresentation, direct_product, cyclic, enumerate_elements

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


# -- concrete groups ----------------------------------------------------------


class Perm:
    """Permutations as tuples; ``x * y`` applies x first."""

    @staticmethod
    def mul(x, y):
        return tuple(y[i] for i in x)

    @staticmethod
    def inv(x):
        out = [0] * len(x)
        for i, j in enumerate(x):
            out[j] = i
        return tuple(out)

    @staticmethod
    def identity(n):
        return tuple(range(n))


class Mat3:
    """3x3 matrices over Z/p as nested tuples."""

    def __init__(self, p):
        self.p = p

    def mul(self, x, y):
        p = self.p
        return tuple(tuple(sum(x[i][k] * y[k][j] for k in range(3)) % p for j in range(3)) for i in range(3))

    def identity(self):
        return ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def quat_mul(x, y):
    a1, b1, c1, d1 = x
    a2, b2, c2, d2 = y
    return (
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def concrete_power(mul, identity, x, k):
    out = identity
    for _ in range(k):
        out = mul(out, x)
    return out


def concrete_comm(mul, inv, x, y):
    return mul(mul(inv(x), inv(y)), mul(x, y))


def check_representation(pres: PcPresentation, images, mul, identity) -> bool:
    """True iff pc generator i -> images[i] extends to an isomorphism onto its image,
    and that image has |pres| elements."""
    phi = {}
    for x in enumerate_elements(pres):
        v = identity
        for k, e in enumerate(x):
            v = mul(v, concrete_power(mul, identity, images[k], e))
        phi[x] = v
    if len(set(phi.values())) != pres.order:
        return False
    c = pres.collector
    elems = list(phi)
    return all(phi[c.mul(x, y)] == mul(phi[x], phi[y]) for x in elems for y in elems)


def concrete_histogram(elements, mul, identity):
    hist: dict[int, int] = {}
    for x in elements:
        o, y = 1, x
        while y != identity:
            y = mul(y, x)
            o += 1
        hist[o] = hist.get(o, 0) + 1
    return dict(sorted(hist.items()))


def concrete_closure(gens, mul, identity):
    seen = {identity}
    frontier = [identity]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = mul(x, g)
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return seen


# -- presentations used across the suite ---------------------------------------


def heisenberg(p=3):
    return build_family(FamilyParams("T2i", p, 1, 1, 1))


def d8():
    return build_family(FamilyParams("T1i", 2, 1, 1, 1))


def q8():
    # b, a with a of relative order 4, b^2 = a^2 and [a, b] = a^2
    return PcPresentation(2, [1, 2], {0: (0, 2)}, {(1, 0): (0, 2)}, names="ba")


def q8_three_gen():
    return PcPresentation(2, [1, 1, 1], {0: (0, 0, 1), 1: (0, 0, 1)}, {(1, 0): (0, 0, 1)}, names="abc")


def metacyclic_2group(s_square: int, comm_exp: int, r_exp: int = 3) -> PcPresentation:
    """``<s, r | r^(2^r_exp) = 1, s^2 = r^s_square, [r, s] = r^comm_exp>`` with s first."""
    return PcPresentation(2, [1, r_exp], {0: (0, s_square)}, {(1, 0): (0, comm_exp)}, names="sr")


def d16():
    return metacyclic_2group(0, 6)


def q16():
    return metacyclic_2group(4, 6)


def sd16():
    return metacyclic_2group(0, 2)


def wreath_c3_c3():
    """C3 wr C3: t, x1, x2, x3 with [x1, t] = x2, [x2, t] = x3."""
    return PcPresentation(3, [1, 1, 1, 1], None, {(1, 0): (0, 0, 1, 0), (2, 0): (0, 0, 0, 1)}, names=["t", "x1", "x2", "x3"])


def lemma3_groups():
    """Class-3 groups with d >= 3 and cyclic gamma_2 Z / Z."""
    c2, c4 = cyclic(2, 1), cyclic(2, 2)
    return {
        "D16xC2": direct_product(d16(), c2),
        "SD16xC2": direct_product(sd16(), c2),
        "Q16xC2": direct_product(q16(), c2),
        "D16xC4": direct_product(d16(), c4),
        "D16xC2xC2": direct_product(direct_product(d16(), c2), c2),
        "C3wrC3xC3": direct_product(wreath_c3_c3(), cyclic(3, 1)),
    }


@pytest.fixture
def H27():
    return heisenberg()


@pytest.fixture
def D8():
    return d8()


@pytest.fixture
def Q8():
    return q8()


@pytest.fixture
def E32():
    return build_extraspecial(2, 2, "DD")


def all_triples(elems):
    return itertools.product(elems, repeat=3)
