"""Presentation families of 2-generated class-2 p-groups and their catalog.

Four variants, with ``c`` standing for ``[a, b]``:

* ``T1i``  (p = 2): ``a^(2^al) = b^(2^be) = c^(2^ga) = 1``, c central
* ``T1ii`` (p = 2): as T1i without ``c^(2^ga) = 1``, plus ``a^(2^(al+si-ga)) = c^(2^si)``

The T1ii list is usually stated for positive σ.  That misses the split
metacyclic groups ``a^(2^(al-ga)) = c`` (σ = 0), among them the capable
``<a, b | a^8 = b^8 = 1, [a, b] = a^4>``, for which an explicit H with
``H/Z(H)`` isomorphic to it exists.  By default σ = 0 is admitted; pass
``literal=True`` to restrict to σ ≥ 1.
* ``T2i``  (p odd): ``a^(p^al) = b^(p^be) = c^(p^ga) = 1``, c central
* ``T2ii`` (p odd): ``a^(p^al) = b^(p^be) = 1``, ``c = a^(p^(al-ga))``
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Callable, Iterator

from .errors import ConsistencyError, InputError, ResourceError
from .isomorphism import Fingerprint, are_isomorphic, fingerprint
from .pcgroup import PcPresentation, check_consistency, format_presentation, is_prime
from .structure import nilpotency_class

log = logging.getLogger(__name__)

VARIANTS = ("T1i", "T1ii", "T2i", "T2ii")

CONDITION_TEXT = {
    "T1i": ("α = β", "α = β + 1 = γ + 1"),
    "T1ii": ("α = β and γ < β − 1", "α = β + 1 = γ + 1 = σ + 2"),
    "T2i": ("α = β ≥ γ",),
    "T2ii": ("α = β ≥ 2γ",),
}


@dataclass(frozen=True, order=True)
class FamilyParams:
    variant: str
    p: int
    alpha: int
    beta: int
    gamma: int
    sigma: int | None = None

    def validate(self, literal: bool = False) -> FamilyParams:
        v = self.variant
        if v not in VARIANTS:
            raise InputError(f"unknown variant {v!r}; expected one of {VARIANTS}")
        if v.startswith("T1") and self.p != 2:
            raise InputError(f"{v} needs p = 2")
        if v.startswith("T2") and (self.p == 2 or not is_prime(self.p)):
            raise InputError(f"{v} needs an odd prime p")
        for name in ("alpha", "beta", "gamma"):
            val = getattr(self, name)
            if not isinstance(val, int) or val < 1:
                raise InputError(f"{name} must be a positive integer, got {val!r}")
        al, be, ga, si = self.alpha, self.beta, self.gamma, self.sigma
        if v == "T1ii":
            lo = 1 if literal else 0
            if not isinstance(si, int) or si < lo:
                raise InputError(f"T1ii needs an integer sigma >= {lo}, got {si!r}")
            if al + si - ga < 1:
                raise InputError("T1ii needs α + σ − γ ≥ 1")
            if si >= ga:
                raise InputError("T1ii needs σ < γ (otherwise the amalgamation is trivial)")
        elif si is not None:
            raise InputError(f"sigma only applies to T1ii, not {v}")
        if v in ("T1i", "T2i") and ga > min(al, be):
            raise InputError("T1i/T2i need γ ≤ min(α, β)")
        if v == "T2ii" and al < 2 * ga:
            raise InputError("T2ii needs α ≥ 2γ")
        return self

    @property
    def log_order(self) -> int:
        if self.variant == "T1ii":
            return self.alpha + self.beta + self.sigma
        if self.variant == "T2ii":
            return self.alpha + self.beta
        return self.alpha + self.beta + self.gamma

    @property
    def order(self) -> int:
        return self.p**self.log_order

    def label(self) -> str:
        s = f"{self.variant}(p={self.p}, α={self.alpha}, β={self.beta}, γ={self.gamma}"
        if self.sigma is not None:
            s += f", σ={self.sigma}"
        return s + ")"

    def as_tsv(self) -> str:
        sig = "-" if self.sigma is None else str(self.sigma)
        return f"{self.variant}\t{self.p}\t{self.alpha}\t{self.beta}\t{self.gamma}\t{sig}"


def satisfied_clause(params: FamilyParams) -> str | None:
    """The capability clause that *params* satisfies, or None."""
    v, al, be, ga, si = params.variant, params.alpha, params.beta, params.gamma, params.sigma
    if v == "T1i":
        # the presentation is symmetric in a and b; the listed conditions assume α ≥ β
        hi, lo = max(al, be), min(al, be)
        if hi == lo:
            return CONDITION_TEXT[v][0]
        if hi == lo + 1 == ga + 1:
            return CONDITION_TEXT[v][1]
        return None
    if v == "T1ii":
        if al == be and ga < be - 1:
            return CONDITION_TEXT[v][0]
        if al == be + 1 == ga + 1 == si + 2:
            return CONDITION_TEXT[v][1]
        return None
    if v == "T2i":
        return CONDITION_TEXT[v][0] if al == be >= ga else None
    if v == "T2ii":
        return CONDITION_TEXT[v][0] if al == be >= 2 * ga else None
    raise InputError(f"unknown variant {v!r}")


def capability_condition(params: FamilyParams) -> bool:
    return satisfied_clause(params) is not None


def _raw_family(params: FamilyParams) -> PcPresentation:
    p, al, be, ga, si = params.p, params.alpha, params.beta, params.gamma, params.sigma
    v = params.variant
    if v in ("T1i", "T2i"):
        return PcPresentation(p, [al, be, ga], None, {(1, 0): (0, 0, p**ga - 1)}, names="abc")
    if v == "T1ii":
        return PcPresentation(
            2, [al + si - ga, be, ga], {0: (0, 0, 2**si)}, {(1, 0): (0, 0, 2**ga - 1)}, names="abc"
        )
    # T2ii: generators (b, a); [a, b] = a^(p^(al-ga))
    return PcPresentation(p, [be, al], None, {(1, 0): (0, p ** (al - ga))}, names="ba")


def build_family(params: FamilyParams) -> PcPresentation:
    """Consistent pc presentation for *params*; raises ConsistencyError otherwise."""
    params.validate()
    G = _raw_family(params)
    report = check_consistency(G)
    if not report:
        raise ConsistencyError(f"{params.label()} is inconsistent", report.word)
    cls = nilpotency_class(G)
    if cls != 2:
        raise ConsistencyError(f"{params.label()} has class {cls}, expected 2")
    return G


def family_grid(
    variant: str, p: int, max_log_order: int, exact: bool = False, literal: bool = False
) -> Iterator[FamilyParams]:
    """Parameter tuples passing ``validate`` with ``log_p(order) <= max_log_order``.

    Lexicographic in (α, β, γ, σ).  With *exact*, only that order.
    """
    N = max_log_order
    for al in range(1, N + 1):
        for be in range(1, N + 1):
            for ga in range(1, N + 1):
                sigmas = range(1 if literal else 0, ga) if variant == "T1ii" else [None]
                for si in sigmas:
                    fp = FamilyParams(variant, p, al, be, ga, si)
                    k = fp.log_order
                    if k > N or (exact and k != N):
                        continue
                    try:
                        fp.validate(literal)
                    except InputError:
                        continue
                    yield fp


def variants_for(p: int) -> tuple[str, ...]:
    return ("T1i", "T1ii") if p == 2 else ("T2i", "T2ii")


@lru_cache(maxsize=64)
def family_instances(
    p: int, log_order: int, literal: bool = False
) -> tuple[tuple[FamilyParams, PcPresentation], ...]:
    """Every consistent family member of order ``p^log_order``; inconsistent tuples are logged and skipped."""
    out = []
    for v in variants_for(p):
        for fp in family_grid(v, p, log_order, exact=True, literal=literal):
            try:
                out.append((fp, build_family(fp)))
            except ConsistencyError as exc:
                log.debug("skipping %s: %s", fp.label(), exc)
    return tuple(out)


# -- extraspecial groups ------------------------------------------------------


def build_extraspecial(p: int, n_pairs: int, kind: str = "") -> PcPresentation:
    """Extraspecial group of order ``p^(1 + 2 n_pairs)`` as a central product.

    For p = 2, *kind* is a string of ``D``/``Q`` letters, one per factor
    (a single letter is repeated).  For odd p, *kind* is ``"+"`` (exponent p)
    or ``"-"`` (exponent p^2).
    """
    if not is_prime(p):
        raise InputError(f"p must be prime, got {p}")
    if n_pairs < 1:
        raise InputError("n_pairs must be >= 1")
    n = 2 * n_pairs + 1
    z = n - 1
    zvec = lambda e: tuple(e if k == z else 0 for k in range(n))  # noqa: E731
    power: dict[int, tuple[int, ...]] = {}
    comm = {}
    names = []
    if p == 2:
        kind = kind or "D"
        if len(kind) == 1:
            kind = kind * n_pairs
        if len(kind) != n_pairs or set(kind) - {"D", "Q"}:
            raise InputError(f"for p = 2 kind must be D/Q letters, one per pair; got {kind!r}")
        factors = kind
    else:
        kind = kind or "+"
        if kind not in ("+", "-"):
            raise InputError(f"for odd p kind must be '+' or '-', got {kind!r}")
        factors = kind + "+" * (n_pairs - 1)
    for k, f in enumerate(factors):
        x, y = 2 * k, 2 * k + 1
        names += [f"x{k + 1}", f"y{k + 1}"]
        comm[(y, x)] = zvec(p - 1)  # [x, y] = z
        if f == "Q":
            power[x] = zvec(1)
            power[y] = zvec(1)
        elif f == "-":
            power[x] = zvec(1)
    names.append("z")
    G = PcPresentation(p, [1] * n, power, comm, names)
    report = check_consistency(G)
    if not report:
        raise ConsistencyError("extraspecial construction inconsistent", report.word)
    return G


# -- catalog of 2-generated class-2 groups ------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    params: tuple[int, int, int, int, int]  # (α, β, γ, ρ1, ρ2)
    presentation: PcPresentation
    fingerprint: Fingerprint

    @property
    def order(self) -> int:
        return self.presentation.order

    def label(self) -> str:
        al, be, ga, r1, r2 = self.params
        return f"C(α={al}, β={be}, γ={ga}, ρ1={r1}, ρ2={r2})"


CATALOG_CAPS = {2: 2**10, 3: 3**6}


def catalog_cap(p: int) -> int:
    return CATALOG_CAPS.get(p, 2**10)


def catalog_presentation(p: int, al: int, be: int, ga: int, r1: int, r2: int) -> PcPresentation:
    """``<a, b, c | [b, a] = c^-1, c central, a^(p^al) = c^r1, b^(p^be) = c^r2>``."""
    return PcPresentation(
        p,
        [al, be, ga],
        {0: (0, 0, r1), 1: (0, 0, r2)},
        {(1, 0): (0, 0, p**ga - 1)},
        names="abc",
    )


def catalog_grid(p: int, max_order: int) -> list[tuple[int, int, int, int, int]]:
    N = 0
    while p ** (N + 1) <= max_order:
        N += 1
    grid = []
    for al in range(1, N + 1):
        for be in range(1, N + 1):
            # c^(p^al) = [a^(p^al), b] = 1 since a^(p^al) is central: γ ≤ min(α, β)
            for ga in range(1, min(al, be) + 1):
                if al + be + ga > N:
                    continue
                for r1 in range(p**ga):
                    for r2 in range(p**ga):
                        grid.append((al, be, ga, r1, r2))
    return grid


def enumerate_2gen_class2(
    p: int, max_order: int, shuffle_seed: int | None = None
) -> list[CatalogEntry]:
    """Iso-deduped catalog of 2-generated class-2 p-groups of order <= max_order.

    The grid is scanned lexicographically (or in a seeded random order); the
    first representative of each isomorphism class is kept.  The result is
    sorted by (order, parameters).
    """
    if not is_prime(p):
        raise InputError(f"p must be prime, got {p}")
    if max_order > catalog_cap(p):
        raise ResourceError(f"catalog refuses max_order {max_order} > {catalog_cap(p)} for p = {p}")
    grid = catalog_grid(p, max_order)
    if shuffle_seed is not None:
        random.Random(shuffle_seed).shuffle(grid)
    kept: list[CatalogEntry] = []
    by_fp: dict[Fingerprint, list[CatalogEntry]] = {}
    for params in grid:
        G = catalog_presentation(p, *params)
        if not check_consistency(G):
            continue
        if nilpotency_class(G) != 2:
            continue
        fp = fingerprint(G)
        if fp.d != 2:
            continue
        bucket = by_fp.setdefault(fp, [])
        if any(are_isomorphic(G, e.presentation) for e in bucket):
            continue
        entry = CatalogEntry(params, G, fp)
        bucket.append(entry)
        kept.append(entry)
    kept.sort(key=lambda e: (e.order, e.params))
    return kept


def export_catalog(
    entries: list[CatalogEntry],
    out_dir: str | Path,
    verdict: Callable[[PcPresentation], str] | None = None,
) -> Path:
    """One ``.pcp`` file per group plus ``index.tsv``; returns the index path."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    rows = ["id\tfile\torder\talpha\tbeta\tgamma\trho1\trho2\tfingerprint\tverdict"]
    for k, e in enumerate(entries):
        fname = f"g{k:03d}_order{e.order}.pcp"
        (out / fname).write_text(format_presentation(e.presentation))
        v = verdict(e.presentation) if verdict else "-"
        params = "\t".join(map(str, e.params))
        rows.append(f"{k}\t{fname}\t{e.order}\t{params}\t{e.fingerprint.short()}\t{v}")
    index = out / "index.tsv"
    index.write_text("\n".join(rows) + "\n")
    return index
