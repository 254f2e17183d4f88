"""Isomorphism testing for small presented p-groups.

Fingerprints reject most non-isomorphic pairs.  The remaining pairs go to a
backtracking search that assigns images to the pc generators of A from the
last one to the first, checking each pc relation as soon as every generator
it mentions has an image.  A complete assignment satisfying every relation
extends to a homomorphism; it is an isomorphism exactly when each image
generator has the right relative order over the images below it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import InputError, ResourceError
from .pcgroup import GroupElement, PcPresentation, check_cap, enumerate_elements, require_consistent
from .structure import (
    abelian_invariants,
    center,
    derived_subgroup,
    element_order_histogram,
    exponent,
    frattini,
    is_cyclic,
    minimal_generators,
    nilpotency_class,
)

ISO_CAP = 2**10


@dataclass(frozen=True)
class Fingerprint:
    order: int
    nilpotency_class: int
    abelian_invariants: tuple[int, ...]
    exponent: int
    center_order: int
    derived_order: int
    d: int
    order_histogram: tuple[tuple[int, int], ...]
    frattini_order: int
    derived_cyclic: bool

    def short(self) -> str:
        hist = ",".join(f"{o}:{k}" for o, k in self.order_histogram)
        ab = ",".join(map(str, self.abelian_invariants)) or "-"
        return (
            f"order={self.order} class={self.nilpotency_class} ab=[{ab}] exp={self.exponent} "
            f"Z={self.center_order} G2={self.derived_order} d={self.d} "
            f"Phi={self.frattini_order} G2cyc={int(self.derived_cyclic)} hist={{{hist}}}"
        )


@lru_cache(maxsize=512)
def fingerprint(pres: PcPresentation) -> Fingerprint:
    derived = derived_subgroup(pres)
    return Fingerprint(
        order=pres.order,
        nilpotency_class=nilpotency_class(pres),
        abelian_invariants=tuple(abelian_invariants(pres)),
        exponent=exponent(pres),
        center_order=center(pres).order,
        derived_order=derived.order,
        d=minimal_generators(pres),
        order_histogram=tuple(element_order_histogram(pres).items()),
        frattini_order=frattini(pres).order,
        derived_cyclic=is_cyclic(derived),
    )


@lru_cache(maxsize=512)
def _signatures(pres: PcPresentation) -> dict[GroupElement, tuple]:
    """Per-element invariant under isomorphism: order and characteristic-subgroup membership."""
    c = pres.collector
    Z = center(pres).members
    D = derived_subgroup(pres).members
    F = frattini(pres).members
    ident = pres.identity
    out = {}
    for x in enumerate_elements(pres):
        o, y = 1, x
        while y != ident:
            y = c.pow(y, pres.p)
            o *= pres.p
        out[x] = (o, x in Z, x in D, x in F)
    return out


@dataclass(frozen=True)
class IsoResult:
    isomorphic: bool
    # images of A's pc generators, when isomorphic
    images: tuple[GroupElement, ...] | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.isomorphic


def _image(c, images: list, vec: GroupElement, ident: GroupElement) -> GroupElement:
    x = ident
    for k, e in enumerate(vec):
        if e:
            x = c.mul(x, c.pow(images[k], e))
    return x


def extend_map(A: PcPresentation, B: PcPresentation, images) -> dict[GroupElement, GroupElement]:
    """Full element map x -> prod images[k]^x_k."""
    c = B.collector
    return {x: _image(c, list(images), x, B.identity) for x in enumerate_elements(A)}


def verify_isomorphism(A: PcPresentation, B: PcPresentation, images) -> bool:
    """Check that the generator assignment is a bijective homomorphism A -> B."""
    if A.order != B.order or len(images) != A.n:
        return False
    phi = extend_map(A, B, images)
    if len(set(phi.values())) != B.order:
        return False
    ca, cb = A.collector, B.collector
    for x, fx in phi.items():
        for i in range(A.n):
            g = A.gen(i)
            if phi[ca.mul(x, g)] != cb.mul(fx, images[i]):
                return False
    return True


def are_isomorphic(A: PcPresentation, B: PcPresentation, cap: int = ISO_CAP) -> IsoResult:
    """Decide ``A ~= B``; on success the witness is verified before returning."""
    if A.p != B.p:
        return IsoResult(False, reason="different primes")
    if A.order != B.order:
        return IsoResult(False, reason="different orders")
    if A.order > min(cap, ISO_CAP):
        raise ResourceError(f"isomorphism testing refuses order {A.order} > {min(cap, ISO_CAP)}")
    check_cap(A.order)
    require_consistent(A)
    require_consistent(B)
    fa, fb = fingerprint(A), fingerprint(B)
    if fa != fb:
        return IsoResult(False, reason="fingerprints differ")
    images = _search(A, B)
    if images is None:
        return IsoResult(False, reason="no generator assignment preserves the relations")
    if not verify_isomorphism(A, B, images):
        raise InputError("internal error: search produced a non-isomorphism")
    return IsoResult(True, tuple(images), "explicit isomorphism")


def _search(A: PcPresentation, B: PcPresentation) -> list[GroupElement] | None:
    sa, sb = _signatures(A), _signatures(B)
    by_sig: dict[tuple, list[GroupElement]] = {}
    for x in sorted(sb):
        by_sig.setdefault(sb[x], []).append(x)
    n = A.n
    c = B.collector
    ident = B.identity
    p = A.p
    m = A.rel_orders
    cands = [by_sig.get(sa[A.gen(i)], []) for i in range(n)]
    images: list = [None] * n
    # below[i]: member set of <images[i], ..., images[n-1]>
    below: list = [None] * (n + 1)
    below[n] = frozenset([ident])

    def relations_hold(i: int, y: GroupElement) -> bool:
        if c.pow(y, m[i]) != _image(c, images, A.power_tails[i], ident):
            return False
        for j in range(i + 1, n):
            want = _image(c, images, A.comm_tail(j, i), ident)
            if c.comm(images[j], y) != want:
                return False
        return True

    def rec(i: int) -> bool:
        if i < 0:
            return True
        sub = below[i + 1]
        for y in cands[i]:
            if not relations_hold(i, y):
                continue
            # y^(m_i/p) outside the image below forces relative order exactly m_i
            if c.pow(y, m[i] // p) in sub:
                continue
            images[i] = y
            if i > 0:
                layer = list(sub)
                grown = set(sub)
                x = y
                while x not in sub:
                    grown.update(c.mul(x, s) for s in layer)
                    x = c.mul(x, y)
                below[i] = frozenset(grown)
            if rec(i - 1):
                return True
            images[i] = None
        return False

    return list(images) if rec(n - 1) else None
