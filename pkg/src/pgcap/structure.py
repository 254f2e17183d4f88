"""Subgroup-level computations with materialized member sets."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import ConsistencyError, InputError
from .pcgroup import (
    GroupElement,
    PcPresentation,
    check_cap,
    check_consistency,
    enumerate_elements,
)


@dataclass(frozen=True, eq=False)
class Subgroup:
    ambient: PcPresentation
    generators: tuple[GroupElement, ...]
    members: frozenset[GroupElement] = field(repr=False)

    @property
    def order(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: object) -> bool:
        return x in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def __le__(self, other: Subgroup) -> bool:
        return self.members <= other.members

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.ambient == other.ambient and self.members == other.members

    def __hash__(self) -> int:
        return hash(self.members)

    @property
    def is_trivial(self) -> bool:
        return len(self.members) == 1


def _close(c, members: set, gens: list, frontier: list) -> None:
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = c.mul(x, g)
            if y not in members:
                members.add(y)
                frontier.append(y)


def subgroup_closure(
    pres: PcPresentation, gens: Iterable[GroupElement], cap: int | None = None
) -> Subgroup:
    """Smallest subgroup containing *gens* (breadth-first under right multiplication)."""
    check_cap(pres.order, cap)
    c = pres.collector
    gens = [tuple(g) for g in gens]
    ident = pres.identity
    useful = [g for g in gens if g != ident]
    members = {ident}
    _close(c, members, useful, [ident])
    return Subgroup(pres, tuple(gens), frozenset(members))


def normal_closure(
    pres: PcPresentation, gens: Iterable[GroupElement], cap: int | None = None
) -> Subgroup:
    """Smallest normal subgroup containing *gens*."""
    check_cap(pres.order, cap)
    c = pres.collector
    ident = pres.identity
    sub_gens = [tuple(g) for g in gens if tuple(g) != ident]
    members = {ident}
    _close(c, members, sub_gens, [ident])
    conj_by = [(x, c.inv(x)) for x in pres.gens()]
    queue = list(sub_gens)
    while queue:
        h = queue.pop()
        for x, xi in conj_by:
            y = c.mul(xi, c.mul(h, x))
            if y not in members:
                sub_gens.append(y)
                queue.append(y)
                frontier = list(members)
                members.add(y)
                frontier.append(y)
                _close(c, members, sub_gens, frontier)
    return Subgroup(pres, tuple(sub_gens), frozenset(members))


def whole_group(pres: PcPresentation, cap: int | None = None) -> Subgroup:
    return Subgroup(pres, tuple(pres.gens()), frozenset(enumerate_elements(pres, cap)))


def trivial_subgroup(pres: PcPresentation) -> Subgroup:
    return Subgroup(pres, (), frozenset([pres.identity]))


def is_normal(pres: PcPresentation, sub: Subgroup) -> bool:
    c = pres.collector
    for x in pres.gens():
        xi = c.inv(x)
        for h in sub.members:
            if c.mul(xi, c.mul(h, x)) not in sub.members:
                return False
    return True


def _centralizes_gens(c, x: GroupElement, gens: Sequence[GroupElement]) -> bool:
    return all(c.mul(x, g) == c.mul(g, x) for g in gens)


def center(pres: PcPresentation, cap: int | None = None) -> Subgroup:
    """``Z(G)``: elements commuting with every pc generator."""
    c = pres.collector
    gens = pres.gens()
    members = [x for x in enumerate_elements(pres, cap) if _centralizes_gens(c, x, gens)]
    return Subgroup(pres, tuple(members), frozenset(members))


def derived_subgroup(pres: PcPresentation, cap: int | None = None) -> Subgroup:
    """``gamma_2(G)``: normal closure of the generator commutators."""
    c = pres.collector
    g = pres.gens()
    comms = [c.comm(g[j], g[i]) for i in range(pres.n) for j in range(i + 1, pres.n)]
    return normal_closure(pres, comms, cap)


def frattini(pres: PcPresentation, cap: int | None = None) -> Subgroup:
    """``Phi(G) = gamma_2(G) G^p``; G/Phi is checked to be elementary abelian."""
    c = pres.collector
    g = pres.gens()
    derived = derived_subgroup(pres, cap)
    powers = [c.pow(x, pres.p) for x in g]
    phi = normal_closure(pres, list(derived.generators) + powers, cap)
    for x in g:
        if c.pow(x, pres.p) not in phi.members:
            raise ConsistencyError("G/Phi(G) is not of exponent p")
        for y in g:
            if c.comm(x, y) not in phi.members:
                raise ConsistencyError("G/Phi(G) is not abelian")
    return phi


@dataclass(frozen=True)
class SeriesReport:
    kind: str  # "upper-central" or "lower-central"
    terms: tuple[Subgroup, ...]

    @property
    def orders(self) -> list[int]:
        return [t.order for t in self.terms]

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, k: int) -> Subgroup:
        return self.terms[k]


def upper_central_series(pres: PcPresentation, cap: int | None = None) -> SeriesReport:
    """``Z_1 <= Z_2 <= ... <= G`` with ``Z_{k+1} = {x : [x, g] in Z_k for all generators g}``."""
    c = pres.collector
    gens = pres.gens()
    everything = list(enumerate_elements(pres, cap))
    prev = frozenset([pres.identity])
    terms = []
    while True:
        members = []
        for x in everything:
            if all(c.comm(x, g) in prev for g in gens):
                members.append(x)
        nxt = frozenset(members)
        if nxt == prev:
            # non-nilpotent presentations cannot occur for consistent pcps
            raise ConsistencyError("upper central series stalled below G")
        terms.append(Subgroup(pres, tuple(members), nxt))
        if len(nxt) == pres.order:
            return SeriesReport("upper-central", tuple(terms))
        prev = nxt


def lower_central_series(pres: PcPresentation, cap: int | None = None) -> SeriesReport:
    """``G = gamma_1 >= gamma_2 >= ... >= 1``; the trivial term closes the list."""
    c = pres.collector
    gens = pres.gens()
    term = whole_group(pres, cap)
    terms = [term]
    normal_gens = list(gens)
    while not term.is_trivial:
        comms = [c.comm(x, g) for x in normal_gens for g in gens]
        term = normal_closure(pres, comms, cap)
        if term.order == terms[-1].order:
            raise ConsistencyError("lower central series stalled above 1")
        terms.append(term)
        normal_gens = list(term.generators)
    return SeriesReport("lower-central", tuple(terms))


def nilpotency_class(pres: PcPresentation, cap: int | None = None) -> int:
    return len(lower_central_series(pres, cap)) - 1


def minimal_generators(pres: PcPresentation, cap: int | None = None) -> int:
    """``d(G) = log_p |G : Phi(G)|`` (Burnside basis theorem)."""
    index = pres.order // frattini(pres, cap).order
    d = 0
    while index > 1:
        index //= pres.p
        d += 1
    return d


def burnside_basis(pres: PcPresentation, cap: int | None = None) -> list[GroupElement]:
    """Pc generators, in index order, whose images form a basis of G/Phi(G)."""
    c = pres.collector
    phi = frattini(pres, cap)
    span = set(phi.members)
    basis = []
    for g in pres.gens():
        if g in span:
            continue
        basis.append(g)
        # every subgroup above Phi is normal, so extend by cosets
        layer = list(span)
        x = g
        for _ in range(pres.p - 1):
            span.update(c.mul(x, h) for h in layer)
            x = c.mul(x, g)
    return basis


def irredundant_generators(pres: PcPresentation, cap: int | None = None) -> list[GroupElement]:
    """Greedily drop pc generators that the remaining ones still generate."""
    gens = pres.gens()
    k = 0
    while k < len(gens):
        rest = gens[:k] + gens[k + 1:]
        if subgroup_closure(pres, rest, cap).order == pres.order:
            gens = rest
        else:
            k += 1
    return gens


def subgroup_exponent(pres: PcPresentation, members: Iterable[GroupElement]) -> int:
    c = pres.collector
    ident = pres.identity
    best = 1
    for x in members:
        o = 1
        while x != ident:
            x = c.pow(x, pres.p)
            o *= pres.p
        best = max(best, o)
    return best


def exponent(pres: PcPresentation, cap: int | None = None) -> int:
    return subgroup_exponent(pres, enumerate_elements(pres, cap))


def is_cyclic(sub: Subgroup) -> bool:
    return subgroup_exponent(sub.ambient, sub.members) == sub.order


def element_order_histogram(pres: PcPresentation, cap: int | None = None) -> dict[int, int]:
    c = pres.collector
    ident = pres.identity
    hist: dict[int, int] = {}
    for x in enumerate_elements(pres, cap):
        o = 1
        while x != ident:
            x = c.pow(x, pres.p)
            o *= pres.p
        hist[o] = hist.get(o, 0) + 1
    return dict(sorted(hist.items()))


@dataclass(frozen=True, eq=False)
class Quotient:
    """``G/N`` with its pc presentation and the projection from G."""

    presentation: PcPresentation
    kernel: Subgroup
    projection: dict[GroupElement, GroupElement] = field(repr=False)
    kept: tuple[int, ...]  # ambient generator indices that survive

    def project(self, x: GroupElement) -> GroupElement:
        return self.projection[x]

    def lift(self, q: GroupElement) -> GroupElement:
        """Section: product of kept ambient generators with q's exponents."""
        G = self.kernel.ambient
        c = G.collector
        x = G.identity
        for idx, e in zip(self.kept, q):
            if e:
                x = c.mul_gen(x, idx, e)
        return x

    def image(self, sub: Iterable[GroupElement]) -> frozenset[GroupElement]:
        return frozenset(self.projection[x] for x in sub)

    def preimage(self, qs: Iterable[GroupElement]) -> frozenset[GroupElement]:
        want = set(qs)
        return frozenset(x for x, q in self.projection.items() if q in want)


def quotient(pres: PcPresentation, N: Subgroup, cap: int | None = None) -> Quotient:
    """Consistent pc presentation of ``G/N`` plus the projection map.

    Works down the pc series: ``S_i = <g_i, .., g_{n-1}> N``; generator i
    survives when ``S_i != S_{i+1}`` and its relative order is the index.
    Tails are read off by sifting through the cosets of ``S_{i+1}`` in ``S_i``.
    """
    check_cap(pres.order, cap)
    if N.ambient != pres:
        raise InputError("subgroup belongs to a different presentation")
    if not is_normal(pres, N):
        raise InputError("quotient by a non-normal subgroup")
    c = pres.collector
    n = pres.n
    # label[i][x] = k with x in g_i^k S_{i+1}; None when S_i == S_{i+1}
    labels: list[dict | None] = [None] * n
    index = [1] * n
    S = set(N.members)
    for i in range(n - 1, -1, -1):
        g = pres.gen(i)
        if g in S:
            continue
        lab = {s: 0 for s in S}
        layer = list(S)
        x = g
        k = 1
        while x not in S:
            for s in layer:
                lab[c.mul(x, s)] = k
            x = c.mul(x, g)
            k += 1
        S.update(lab)
        labels[i] = lab
        index[i] = k
    kept = tuple(i for i in range(n) if labels[i] is not None)
    pos = {i: t for t, i in enumerate(kept)}
    inv_pows = {i: [c.pow(pres.gen(i), -k) for k in range(index[i])] for i in kept}

    def sift(x: GroupElement) -> GroupElement:
        out = [0] * len(kept)
        for i in kept:
            k = labels[i][x]
            if k:
                out[pos[i]] = k
                x = c.mul(inv_pows[i][k], x)
        return tuple(out)

    exps = []
    for i in kept:
        e, k = 0, index[i]
        while k > 1:
            k //= pres.p
            e += 1
        exps.append(e)
    power_tails = {pos[i]: sift(c.pow(pres.gen(i), index[i])) for i in kept}
    comm_tails = {}
    for a in kept:
        for b in kept:
            if b > a:
                comm_tails[(pos[b], pos[a])] = sift(c.comm(pres.gen(b), pres.gen(a)))
    names = [pres.names[i] for i in kept]
    Q = PcPresentation(pres.p, exps, power_tails, comm_tails, names)
    report = check_consistency(Q)
    if not report:
        raise ConsistencyError("quotient presentation inconsistent", report.word)
    projection = {x: sift(x) for x in enumerate_elements(pres, cap)}
    return Quotient(Q, N, projection, kept)


def abelian_invariants(pres: PcPresentation, cap: int | None = None) -> list[int]:
    """Invariant factors of ``G/gamma_2(G)``, ascending prime powers."""
    ab = quotient(pres, derived_subgroup(pres, cap), cap).presentation
    c = ab.collector
    p = ab.p
    elems = list(enumerate_elements(ab, cap))
    # |Omega_k| = #{x : x^(p^k) = 1} = p^(sum_i min(e_i, k))
    logs = [0]
    k = 0
    while logs[-1] < sum(ab.rel_exps):
        k += 1
        cnt = sum(1 for x in elems if c.pow(x, p**k) == ab.identity)
        logs.append(_log(cnt, p))
    at_least = [logs[k] - logs[k - 1] for k in range(1, len(logs))]  # #{e_i >= k}
    inv = []
    for k in range(len(at_least)):
        nxt = at_least[k + 1] if k + 1 < len(at_least) else 0
        inv += [p ** (k + 1)] * (at_least[k] - nxt)
    return sorted(inv)


def _log(x: int, p: int) -> int:
    e = 0
    while x > 1:
        x //= p
        e += 1
    return e


def is_abelian(pres: PcPresentation) -> bool:
    return not pres.comm_tails


def commutes_with_all(pres: PcPresentation, x: GroupElement) -> bool:
    return _centralizes_gens(pres.collector, x, pres.gens())

