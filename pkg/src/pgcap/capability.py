"""Capability decisions and theorem checkers for class-2 p-groups.

A group G is capable when G ~= H/Z(H) for some H.  Two independent routes:

* classification: match G against the capable family instances of its order;
  the only route that may answer NotCapable;
* witness search: append central generators to G's presentation and look for
  a consistent H with Z(H) equal to the new subgroup and contained in
  gamma_2(H).  Exhausting the budget proves nothing.
"""

from __future__ import annotations

import hashlib
import itertools
import logging
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from .errors import InputError, ResourceError
from .families import (
    CatalogEntry,
    FamilyParams,
    enumerate_2gen_class2,
    family_instances,
    satisfied_clause,
    variants_for,
)
from .isomorphism import ISO_CAP, are_isomorphic, fingerprint
from .pcgroup import (
    GroupElement,
    PcPresentation,
    check_cap,
    check_consistency,
    consistency_test_words,
    enumerate_elements,
    format_presentation,
    require_consistent,
)
from .structure import (
    Subgroup,
    abelian_invariants,
    burnside_basis,
    center,
    derived_subgroup,
    frattini,
    is_cyclic,
    minimal_generators,
    nilpotency_class,
    quotient,
    subgroup_closure,
    subgroup_exponent,
    upper_central_series,
)

log = logging.getLogger(__name__)

SEARCH_LIMIT = 10**7


class Status(str, Enum):
    CAPABLE = "Capable"
    NOT_CAPABLE = "NotCapable"
    UNKNOWN = "Unknown"


class Reason(str, Enum):
    MATCHED_CAPABLE = "matched-capable-family"
    MATCHED_NONCAPABLE = "matched-noncapable-family"
    NO_FAMILY_MATCH = "no-family-match"
    NOT_2_GENERATED = "not-2-generated"
    WITNESS_FOUND = "witness-found"
    BUDGET_EXHAUSTED = "budget-exhausted"
    HYPOTHESIS_VIOLATION = "hypothesis-violation"


@dataclass(frozen=True)
class Witness:
    """``H`` with ``H/Z(H) ~= G``; ``images`` sends G's pc generators into H/Z(H)."""

    H: PcPresentation
    quotient: PcPresentation
    images: tuple[GroupElement, ...]


@dataclass(frozen=True)
class CapabilityVerdict:
    status: Status
    reason: Reason
    witness: Witness | None = None
    family: FamilyParams | None = None
    clause: str | None = None
    note: str = ""

    @property
    def capable(self) -> bool:
        return self.status is Status.CAPABLE

    def describe(self) -> str:
        s = f"{self.status.value} ({self.reason.value})"
        if self.family is not None:
            s += f" via {self.family.label()}"
        if self.clause:
            s += f", condition “{self.clause}”"
        if self.witness is not None:
            s += f", witness of order {self.witness.H.order}"
        if self.note:
            s += f"; {self.note}"
        return s


def _hypothesis(note: str) -> CapabilityVerdict:
    return CapabilityVerdict(Status.UNKNOWN, Reason.HYPOTHESIS_VIOLATION, note=note)


# -- classification -----------------------------------------------------------


def classify_capable(G: PcPresentation, literal: bool = False) -> CapabilityVerdict:
    """Decide capability of a 2-generated class-2 p-group from the family lists.

    *literal* drops the σ = 0 members of T1ii (see :mod:`pgcap.families`).
    """
    require_consistent(G)
    if G.order > ISO_CAP:
        raise ResourceError(f"classification needs isomorphism tests; order {G.order} > {ISO_CAP}")
    cls = nilpotency_class(G)
    if cls != 2:
        return _hypothesis(f"nilpotency class {cls}, expected 2")
    d = minimal_generators(G)
    if d != 2:
        return _hypothesis(f"d(G) = {d}, expected 2")
    log_order = sum(G.rel_exps)
    instances = family_instances(G.p, log_order, literal)
    qualifying = [(fp, F) for fp, F in instances if satisfied_clause(fp)]
    for fp, F in qualifying:
        if are_isomorphic(G, F):
            return CapabilityVerdict(
                Status.CAPABLE, Reason.MATCHED_CAPABLE, family=fp, clause=satisfied_clause(fp)
            )
    for fp, F in instances:
        if not satisfied_clause(fp) and are_isomorphic(G, F):
            return CapabilityVerdict(
                Status.NOT_CAPABLE,
                Reason.MATCHED_NONCAPABLE,
                family=fp,
                note="isomorphic only to instances violating the capability conditions",
            )
    names = "/".join(variants_for(G.p))
    return CapabilityVerdict(
        Status.NOT_CAPABLE, Reason.NO_FAMILY_MATCH, note=f"not isomorphic to any {names} instance"
    )


# -- witness search -----------------------------------------------------------


@dataclass
class SearchStats:
    candidates: int = 0
    center_ok: int = 0
    consistent: int = 0
    stem: int = 0


def _relations(G: PcPresentation) -> list[tuple[str, int, int]]:
    rels = [("pow", i, -1) for i in range(G.n)]
    rels += [("comm", j, i) for i in range(G.n) for j in range(i + 1, G.n)]
    return rels


def search_space_size(G: PcPresentation, m: int) -> int:
    """Candidates at m new generators: p^m per relation of G, and p^(m-k) for ``z_k``'s power."""
    rels = len(_relations(G))
    chain = sum(m - k for k in range(1, m + 1))
    return G.p ** (m * rels + chain)


def _digits(k: int, p: int, width: int) -> tuple[int, ...]:
    out = []
    for _ in range(width):
        k, r = divmod(k, p)
        out.append(r)
    return tuple(reversed(out))


def extension_candidates(G: PcPresentation, m: int):
    """Yield candidate presentations H in the deterministic search order.

    Relations are taken in presentation order (powers, then commutators
    ``[g_j, g_i]`` by i then j, then the new generators' powers); each
    relation's new tail part is a base-p counter and the product over
    relations is lexicographic.
    """
    n, p = G.n, G.p
    rels = _relations(G)
    choices = [[_digits(k, p, m) for k in range(p**m)] for _ in rels]
    # z_k^p may equal a product of later new generators
    for k in range(m):
        width = m - k - 1
        choices.append([(0,) * (k + 1) + _digits(t, p, width) for t in range(p**width)])
    exps = G.rel_exps + (1,) * m
    names = list(G.names) + [f"z{k + 1}" for k in range(m)]
    base_pow = [tuple(t) for t in G.power_tails]
    base_comm = {(j, i): tuple(G.comm_tail(j, i)) for _, j, i in rels if _ == "comm"}
    for combo in itertools.product(*choices):
        power = {}
        comm = {}
        for (kind, j, i), extra in zip(rels, combo):
            if kind == "pow":
                power[j] = base_pow[j] + extra
            else:
                comm[(j, i)] = base_comm[(j, i)] + extra
        for k in range(m):
            power[n + k] = (0,) * n + combo[len(rels) + k]
        yield PcPresentation(p, exps, power, comm, names)


def _lifted_center(G: PcPresentation, m: int) -> list[GroupElement]:
    pad = (0,) * m
    return [x + pad for x in center(G).members if x != G.identity]


def _center_is_new_subgroup(H: PcPresentation, lifts: list[GroupElement], n: int) -> bool:
    """Z(H) equals the appended subgroup iff no lift of 1 != z in Z(G) is central."""
    c = H.collector
    gens = [H.gen(i) for i in range(n)]
    for x in lifts:
        if all(c.mul(x, g) == c.mul(g, x) for g in gens):
            return False
    return True


def _consistent(H: PcPresentation) -> bool:
    return all(lhs == rhs for _, lhs, rhs in consistency_test_words(H))


def _new_subgroup_in_derived(H: PcPresentation, n: int, m: int) -> bool:
    D = derived_subgroup(H)
    return all(H.gen(n + k) in D for k in range(m))


def verify_witness(G: PcPresentation, H: PcPresentation) -> Witness | None:
    """Independent re-check: H consistent, Z(H) <= gamma_2(H), H/Z(H) ~= G."""
    if not check_consistency(H):
        return None
    Z = center(H)
    if not Z.members <= derived_subgroup(H).members:
        return None
    Q = quotient(H, Z).presentation
    iso = are_isomorphic(G, Q)
    if not iso:
        return None
    return Witness(H, Q, iso.images)


def witness_search(
    G: PcPresentation, m_max: int = 2, stats: SearchStats | None = None
) -> CapabilityVerdict:
    """Look for a central extension H of G with H/Z(H) ~= G and Z(H) <= gamma_2(H)."""
    require_consistent(G)
    check_cap(G.order)
    if not 1 <= m_max <= 3:
        raise InputError(f"m_max must be in 1..3, got {m_max}")
    total = sum(search_space_size(G, m) for m in range(1, m_max + 1))
    if total > SEARCH_LIMIT:
        raise ResourceError(f"witness search would try {total} candidates > {SEARCH_LIMIT}")
    if G.order > ISO_CAP:
        raise ResourceError(f"witness verification needs |G| <= {ISO_CAP}")
    stats = stats if stats is not None else SearchStats()
    n = G.n
    for m in range(1, m_max + 1):
        check_cap(G.order * G.p**m)
        lifts = _lifted_center(G, m)
        for H in extension_candidates(G, m):
            stats.candidates += 1
            if not _center_is_new_subgroup(H, lifts, n):
                continue
            stats.center_ok += 1
            if not _consistent(H):
                continue
            stats.consistent += 1
            if not _new_subgroup_in_derived(H, n, m):
                continue
            stats.stem += 1
            witness = verify_witness(G, H)
            if witness is None:
                raise InputError("internal error: witness failed independent verification")
            return CapabilityVerdict(
                Status.CAPABLE,
                Reason.WITNESS_FOUND,
                witness=witness,
                note=f"|Z(H)| = {G.p}^{m}",
            )
    return CapabilityVerdict(
        Status.UNKNOWN,
        Reason.BUDGET_EXHAUSTED,
        note=f"no witness with |Z(H)| <= {G.p}^{m_max} among {stats.candidates} candidates",
    )


# -- theorem checkers ---------------------------------------------------------


@dataclass
class CheckReport:
    name: str
    ok: bool
    hypothesis_ok: bool
    lines: list[str] = field(default_factory=list)
    values: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok

    def render(self) -> str:
        head = "PASS" if self.ok else ("HYPOTHESIS VIOLATION" if not self.hypothesis_ok else "FAIL")
        return "\n".join([f"{self.name}: {head}"] + [f"  {s}" for s in self.lines])


def _log_p(x: int, p: int) -> int:
    e = 0
    while x > 1:
        x //= p
        e += 1
    return e


def quotient_invariants(G: PcPresentation) -> dict:
    """|G/Z|, d(G/Z), exponents and invariant factors used by the G/Z(G) check."""
    Z = center(G)
    D = derived_subgroup(G)
    Q = quotient(G, Z).presentation
    return {
        "order_Q": Q.order,
        "d_Q": minimal_generators(Q),
        "order_G2": D.order,
        "exp_G2": subgroup_exponent(G, D.members),
        "exp_Q": subgroup_exponent(Q, enumerate_elements(Q)),
        "invariants_Q": abelian_invariants(Q),
    }


def theorem_a_check(G: PcPresentation, verdict: CapabilityVerdict) -> CheckReport:
    """Capable, class 2, cyclic gamma_2 => G/Z(G) is 2-generated of order |gamma_2|^2."""
    require_consistent(G)
    rep = CheckReport("theorem-a", ok=False, hypothesis_ok=True)
    cls = nilpotency_class(G)
    D = derived_subgroup(G)
    problems = []
    if not verdict.capable:
        problems.append(f"verdict is {verdict.status.value}, not Capable")
    if cls != 2:
        problems.append(f"nilpotency class {cls}, expected 2")
    if not is_cyclic(D):
        problems.append("gamma_2(G) is not cyclic")
    if cls == 2 or cls == 1:
        vals = quotient_invariants(G)
        rep.values.update(vals)
        rep.lines.append(
            f"|G/Z| = {vals['order_Q']}, |gamma_2|^2 = {vals['order_G2'] ** 2}, d(G/Z) = {vals['d_Q']}, "
            f"exp(G/Z) = {vals['exp_Q']}, exp(gamma_2) = {vals['exp_G2']}, G/Z ~ {vals['invariants_Q']}"
        )
    if problems:
        rep.hypothesis_ok = False
        rep.lines.extend(problems)
        return rep
    v = rep.values
    e = v["exp_G2"]
    checks = [
        (v["d_Q"] == 2, "d(G/Z(G)) = 2"),
        (v["order_Q"] == v["order_G2"] ** 2, "|G/Z(G)| = |gamma_2(G)|^2"),
        (v["exp_Q"] == e, "exp(G/Z(G)) = exp(gamma_2(G))"),
        (v["invariants_Q"] == [e, e], "G/Z(G) = C_{p^e} x C_{p^e}"),
    ]
    for ok, text in checks:
        rep.lines.append(("ok   " if ok else "FAIL ") + text)
    rep.ok = all(ok for ok, _ in checks)
    return rep


def _z_in_phi(G: PcPresentation) -> bool:
    return center(G).members <= frattini(G).members


def corollary2_check(G: PcPresentation, verdict: CapabilityVerdict) -> CheckReport:
    """Capable, class 2, Z <= Phi => (gamma_2 cyclic <=> d(G) = 2)."""
    require_consistent(G)
    rep = CheckReport("corollary2", ok=False, hypothesis_ok=True)
    cls = nilpotency_class(G)
    problems = []
    if not verdict.capable:
        problems.append(f"verdict is {verdict.status.value}, not Capable")
    if cls != 2:
        problems.append(f"nilpotency class {cls}, expected 2")
    if cls >= 1 and not _z_in_phi(G):
        problems.append("Z(G) is not contained in Phi(G)")
    cyclic = is_cyclic(derived_subgroup(G))
    d = minimal_generators(G)
    rep.values.update(derived_cyclic=cyclic, d=d)
    rep.lines.append(f"gamma_2 cyclic: {cyclic}, d(G) = {d}")
    if problems:
        rep.hypothesis_ok = False
        rep.lines.extend(problems)
        return rep
    rep.ok = cyclic == (d == 2)
    rep.lines.append(("ok   " if rep.ok else "FAIL ") + "gamma_2 cyclic <=> d(G) = 2")
    return rep


def theorem_b_hypotheses(G: PcPresentation) -> list[str]:
    problems = []
    cls = nilpotency_class(G)
    if cls != 2:
        problems.append(f"nilpotency class {cls}, expected 2")
        return problems
    if not is_cyclic(derived_subgroup(G)):
        problems.append("gamma_2(G) is not cyclic")
    if not _z_in_phi(G):
        problems.append("Z(G) is not contained in Phi(G)")
    return problems


def theorem_b_decide(G: PcPresentation, literal: bool = False) -> CapabilityVerdict:
    """Class 2, cyclic gamma_2, Z <= Phi: capable iff 2-generated and in the family lists."""
    require_consistent(G)
    problems = theorem_b_hypotheses(G)
    if problems:
        return _hypothesis("; ".join(problems))
    d = minimal_generators(G)
    if d != 2:
        return CapabilityVerdict(
            Status.NOT_CAPABLE,
            Reason.NOT_2_GENERATED,
            note=f"d(G) = {d}; with cyclic gamma_2 and Z <= Phi a capable group is 2-generated",
        )
    return classify_capable(G, literal)


# -- generator reduction for class-3 groups -----------------------------------


@dataclass
class Lemma3Report:
    x: list[GroupElement]  # reordered Burnside basis, x[0], x[1] the chosen pair
    pair: tuple[int, int]  # positions of the pair in the original basis
    alphas: dict[int, int]
    betas: dict[int, int]
    ys: dict[int, GroupElement]
    y_in_z2: dict[int, bool]
    y_comm_central: dict[tuple[int, int], bool]
    eq1: dict[tuple[int, int, int], bool]
    x_comm_y_trivial: dict[int, bool]
    generates: bool
    d_top: int
    nilpotency_class: int
    degenerate: bool
    ok: bool = False

    def recompute_y(self, H: PcPresentation, j: int) -> GroupElement:
        c = H.collector
        return c.mul(c.mul(c.pow(self.x[0], self.betas[j]), self.x[j]), c.pow(self.x[1], -self.alphas[j]))

    def render(self, H: PcPresentation) -> str:
        lines = [f"lemma3: {'PASS' if self.ok else 'FAIL'} (class {self.nilpotency_class})"]
        if self.degenerate:
            lines.append("  degenerate: class <= 2, Z_2(H) = H")
        lines.append(f"  x1 = {H.word(self.x[0])}, x2 = {H.word(self.x[1])}" if len(self.x) >= 2 else "  d(H) < 2")
        for j, y in self.ys.items():
            lines.append(
                f"  y{j + 1} = x1^{self.betas[j]} x{j + 1} x2^-{self.alphas[j]} = {H.word(y)}; "
                f"in Z_2: {self.y_in_z2[j]}"
            )
        lines.append(f"  [y_j, y_k, x_i] = 1 holds: {all(self.eq1.values())} ({len(self.eq1)} checked)")
        lines.append(f"  d(H/Z_2(H)) = {self.d_top}")
        return "\n".join(lines)


def _order_mod(H: PcPresentation, x: GroupElement, N: frozenset) -> int:
    c = H.collector
    o = 1
    while x not in N:
        x = c.pow(x, H.p)
        o *= H.p
    return o


def _product_set(H: PcPresentation, A: Subgroup, B: Subgroup) -> frozenset:
    c = H.collector
    return frozenset(c.mul(a, b) for a in A.members for b in B.members)


def lemma3_reduce(H: PcPresentation) -> Lemma3Report:
    """Reduce a minimal generating set of a class-3 group whose gamma_2 Z / Z is cyclic.

    Picks x1, x2 with [x1, x2] Z generating gamma_2 Z / Z, replaces every
    other x_j by ``y_j = x1^b_j x_j x2^-a_j`` and checks that each y_j lies in
    Z_2(H), so that H/Z_2(H) is generated by the images of x1 and x2.
    """
    require_consistent(H)
    cls = nilpotency_class(H)
    if cls > 3:
        raise InputError(f"lemma3_reduce needs class <= 3, got {cls}")
    c = H.collector
    upper = upper_central_series(H)
    Z = upper[0].members
    Z2 = upper[1].members if len(upper) > 1 else Z
    D = derived_subgroup(H)
    DZ = _product_set(H, D, upper[0])
    top = len(DZ) // len(Z)
    if not any(_order_mod(H, g, Z) == top for g in D.members):
        raise InputError("gamma_2(H)Z(H)/Z(H) is not cyclic")
    basis = burnside_basis(H)
    d = len(basis)
    pair = (0, 1)
    if d >= 2:
        for i, j in itertools.combinations(range(d), 2):
            if _order_mod(H, c.comm(basis[i], basis[j]), Z) == top:
                pair = (i, j)
                break
        else:
            raise InputError("no generator pair spans gamma_2 Z / Z")
    x = [basis[pair[0]], basis[pair[1]]] + [g for k, g in enumerate(basis) if k not in pair] if d >= 2 else list(basis)
    alphas, betas, ys, in_z2 = {}, {}, {}, {}
    x_comm_y = {}
    if d >= 2:
        base = c.comm(x[0], x[1])
        powers = [c.pow(base, k) for k in range(top)]

        def dlog(u: GroupElement) -> int:
            for k, bk in enumerate(powers):
                if c.mul(c.inv(bk), u) in Z:
                    return k
            raise InputError("discrete log failed: commutator outside gamma_2 Z")

        for j in range(2, d):
            a = dlog(c.comm(x[0], x[j]))
            b = dlog(c.comm(x[1], x[j]))
            alphas[j], betas[j] = a, b
            y = c.mul(c.mul(c.pow(x[0], b), x[j]), c.pow(x[1], -a))
            ys[j] = y
            in_z2[j] = y in Z2
            x_comm_y[j] = all(c.comm(x[i], y) in Z for i in (0, 1))
    ident = H.identity
    y_central = {}
    eq1 = {}
    for j, yj in ys.items():
        for k, yk in ys.items():
            y_central[(j, k)] = c.comm(yj, yk) in Z
            for i in (0, 1):
                eq1[(j, k, i)] = c.comm(c.comm(yj, yk), x[i]) == ident
    gen_set = x[:2] + list(ys.values())
    generates = subgroup_closure(H, gen_set).order == H.order
    top_q = quotient(H, Subgroup(H, (), Z2)).presentation
    d_top = minimal_generators(top_q)
    degenerate = cls <= 2
    rep = Lemma3Report(
        x=x,
        pair=pair,
        alphas=alphas,
        betas=betas,
        ys=ys,
        y_in_z2=in_z2,
        y_comm_central=y_central,
        eq1=eq1,
        x_comm_y_trivial=x_comm_y,
        generates=generates,
        d_top=d_top,
        nilpotency_class=cls,
        degenerate=degenerate,
    )
    expected_top = 0 if degenerate else 2
    rep.ok = (
        all(in_z2.values())
        and all(y_central.values())
        and all(eq1.values())
        and all(x_comm_y.values())
        and generates
        and d_top == expected_top
        and all(rep.recompute_y(H, j) == y for j, y in ys.items())
    )
    return rep


# -- cross-validation sweep ---------------------------------------------------


@dataclass
class SweepRow:
    entry: CatalogEntry
    classification: CapabilityVerdict
    search: CapabilityVerdict
    flag: str  # "ok", "CONFLICT" or "HARD-CONFLICT"

    @property
    def fingerprint_hash(self) -> str:
        return hashlib.sha1(self.entry.fingerprint.short().encode()).hexdigest()[:12]

    def tsv(self) -> str:
        al, be, ga, r1, r2 = self.entry.params
        cl = self.classification
        fam = cl.family.label() if cl.family else "-"
        return "\t".join(
            [
                self.fingerprint_hash,
                str(self.entry.order),
                f"{al},{be},{ga},{r1},{r2}",
                f"{cl.status.value}:{cl.reason.value}",
                fam,
                f"{self.search.status.value}:{self.search.reason.value}",
                self.flag,
            ]
        )


SWEEP_HEADER = "fingerprint\torder\tparams\tclassification\tfamily\tsearch\tflag"


@dataclass
class SweepReport:
    p: int
    max_order: int
    m_max: int
    rows: list[SweepRow]
    complete: bool = True
    stop_reason: str = ""

    @property
    def hard_conflicts(self) -> list[SweepRow]:
        return [r for r in self.rows if r.flag == "HARD-CONFLICT"]

    @property
    def conflicts(self) -> list[SweepRow]:
        return [r for r in self.rows if r.flag == "CONFLICT"]

    def tsv(self) -> str:
        lines = [SWEEP_HEADER] + [r.tsv() for r in self.rows]
        if not self.complete:
            lines.append(f"INCOMPLETE\t{self.stop_reason}")
        return "\n".join(lines) + "\n"


def cross_validate(
    p: int,
    max_order: int,
    m_max: int,
    catalog: list[CatalogEntry] | None = None,
    literal: bool = False,
) -> SweepReport:
    """Run classification and witness search on every catalog group and compare."""
    entries = catalog if catalog is not None else enumerate_2gen_class2(p, max_order)
    rows = []
    for e in entries:
        G = e.presentation
        try:
            cl = classify_capable(G, literal)
            ws = witness_search(G, m_max)
        except ResourceError as exc:
            # keep what was computed; the report says it stopped early
            log.warning("sweep stopped at %s: %s", e.label(), exc)
            return SweepReport(p, max_order, m_max, rows, complete=False, stop_reason=str(exc))
        flag = "ok"
        if cl.status is Status.NOT_CAPABLE and ws.capable:
            flag = "HARD-CONFLICT"
        elif cl.capable and not ws.capable:
            flag = "CONFLICT"
        rows.append(SweepRow(e, cl, ws, flag))
        log.info("%s: %s / %s -> %s", e.label(), cl.status.value, ws.status.value, flag)
    return SweepReport(p, max_order, m_max, rows)


def write_witnesses(report: SweepReport, out_dir: str | Path) -> list[Path]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    for k, row in enumerate(report.rows):
        if row.search.witness is not None:
            path = out / f"witness_{k:03d}_{row.fingerprint_hash}.pcp"
            path.write_text(format_presentation(row.search.witness.H))
            paths.append(path)
    return paths


def group_summary(G: PcPresentation) -> dict:
    """Invariants printed by the CLI."""
    require_consistent(G)
    Z = center(G)
    D = derived_subgroup(G)
    F = frattini(G)
    return {
        "order": G.order,
        "class": nilpotency_class(G),
        "center": Z.order,
        "derived": D.order,
        "frattini": F.order,
        "d": minimal_generators(G),
        "exponent": fingerprint(G).exponent if G.order <= ISO_CAP else subgroup_exponent(G, enumerate_elements(G)),
        "derived_cyclic": is_cyclic(D),
        "center_in_frattini": Z.members <= F.members,
    }
