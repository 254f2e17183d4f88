"""Command-line front end.

Exit status: 0 success or pass, 1 NotCapable / check failed / no verdict,
2 usage or input error, 3 resource cap exceeded.

Machine mode (``--machine``) prints one record per line::

    record := kind ("\\t" key "=" value)*

Values never contain tabs or newlines.  Human mode prints the same facts as
prose, quoting the capability clause that matched.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
import time
from pathlib import Path

from . import __version__
from .capability import (
    Reason,
    Status,
    classify_capable,
    corollary2_check,
    cross_validate,
    group_summary,
    lemma3_reduce,
    theorem_a_check,
    theorem_b_decide,
    witness_search,
    write_witnesses,
)
from .errors import ConsistencyError, InputError, PgcapError, ResourceError
from .families import (
    FamilyParams,
    build_family,
    capability_condition,
    catalog_cap,
    enumerate_2gen_class2,
    export_catalog,
    satisfied_clause,
)
from .pcgroup import CAP_ENV, HARD_CAP, format_presentation, read_presentation, require_consistent
from .structure import nilpotency_class

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class Reporter:
    def __init__(self, machine: bool, stream=None) -> None:
        self.machine = machine
        self.stream = stream or sys.stdout

    def _emit(self, line: str) -> None:
        self.stream.write(line + "\n")
        self.stream.flush()

    def record(self, kind: str, human: str | None = None, **fields) -> None:
        if self.machine:
            parts = [kind] + [f"{k}={_clean(v)}" for k, v in fields.items()]
            self._emit("\t".join(parts))
        elif human is not None:
            for line in human.splitlines() or [""]:
                self._emit(line)

    def text(self, human: str) -> None:
        if not self.machine:
            self._emit(human)


def _clean(v) -> str:
    if isinstance(v, bool):
        v = int(v)
    if isinstance(v, (list, tuple)):
        v = ",".join(map(str, v))
    return str(v).replace("\t", " ").replace("\n", " | ")


# -- subcommands --------------------------------------------------------------


def cmd_family_build(args, out: Reporter) -> int:
    params = FamilyParams(args.variant, args.p, args.alpha, args.beta, args.gamma, args.sigma)
    params.validate(args.literal)
    G = build_family(params)
    text = format_presentation(G)
    if args.out:
        Path(args.out).write_text(text)
    clause = satisfied_clause(params)
    out.record(
        "family",
        f"{params.label()}: order {G.order}, capability condition "
        + (f"satisfied: “{clause}”" if clause else "not satisfied")
        + (f"\nwrote {args.out}" if args.out else "\n" + text.rstrip()),
        variant=params.variant,
        p=params.p,
        alpha=params.alpha,
        beta=params.beta,
        gamma=params.gamma,
        sigma="-" if params.sigma is None else params.sigma,
        order=G.order,
        condition=capability_condition(params),
        file=args.out or "-",
    )
    return EXIT_OK


def cmd_invariants(args, out: Reporter) -> int:
    G = require_consistent(read_presentation(args.file))
    s = group_summary(G)
    human = "\n".join(
        [
            f"order          {s['order']}",
            f"class          {s['class']}",
            f"|Z(G)|         {s['center']}",
            f"|gamma_2(G)|   {s['derived']}",
            f"|Phi(G)|       {s['frattini']}",
            f"d(G)           {s['d']}",
            f"exponent       {s['exponent']}",
            f"gamma_2 cyclic {'yes' if s['derived_cyclic'] else 'no'}",
            f"Z <= Phi       {'yes' if s['center_in_frattini'] else 'no'}",
        ]
    )
    out.record("invariants", human, file=args.file, **s)
    return EXIT_OK


def _verdict_record(out: Reporter, kind: str, file: str, v) -> None:
    fam = v.family
    out.record(
        kind,
        f"verdict: {v.status.value}\nreason:  {v.reason.value}"
        + (f"\nfamily:  {fam.label()}" if fam else "")
        + (f"\ncondition: “{v.clause}”" if v.clause else "")
        + (f"\nnote:    {v.note}" if v.note else ""),
        file=file,
        status=v.status.value,
        reason=v.reason.value,
        family=fam.label() if fam else "-",
        condition=v.clause or "-",
        witness_order=v.witness.H.order if v.witness else "-",
        note=v.note or "-",
    )


def _status_exit(v) -> int:
    return EXIT_OK if v.status is Status.CAPABLE else EXIT_FAIL


def _decide(G, literal: bool):
    v = theorem_b_decide(G, literal)
    if v.reason is Reason.HYPOTHESIS_VIOLATION:
        fallback = classify_capable(G, literal)
        note = f"outside the cyclic-gamma_2, Z <= Phi setting ({v.note}); used the family lists directly"
        if fallback.note:
            note += f"; {fallback.note}"
        v = type(v)(fallback.status, fallback.reason, fallback.witness, fallback.family, fallback.clause, note)
    return v


def cmd_capable_decide(args, out: Reporter) -> int:
    G = require_consistent(read_presentation(args.file))
    v = _decide(G, args.literal)
    _verdict_record(out, "decide", args.file, v)
    return _status_exit(v)


def cmd_capable_search(args, out: Reporter) -> int:
    G = require_consistent(read_presentation(args.file))
    v = witness_search(G, args.budget)
    path = None
    if v.witness is not None:
        path = args.out or str(Path(args.file).with_suffix("")) + ".witness.pcp"
        Path(path).write_text(format_presentation(v.witness.H))
    _verdict_record(out, "search", args.file, v)
    if path:
        out.record("witness", f"wrote witness of order {v.witness.H.order} to {path}", file=path, order=v.witness.H.order)
    return _status_exit(v)


def _check_exit(rep) -> int:
    return EXIT_OK if rep.ok else EXIT_FAIL


def _check_record(out: Reporter, file: str, rep) -> None:
    status = "pass" if rep.ok else ("hypothesis-violation" if not rep.hypothesis_ok else "fail")
    vals = {k: v for k, v in rep.values.items()}
    out.record("check", rep.render(), name=rep.name, file=file, status=status, **vals)


def cmd_verify_theorem_a(args, out: Reporter) -> int:
    G = require_consistent(read_presentation(args.file))
    v = _decide(G, args.literal) if nilpotency_class(G) == 2 else None
    if v is None or v.status is Status.UNKNOWN:
        # no classification verdict; try to exhibit a witness instead
        w = witness_search(G, args.budget) if nilpotency_class(G) == 2 else None
        v = w if w is not None and w.capable else (v or classify_capable(G))
    rep = theorem_a_check(G, v)
    _check_record(out, args.file, rep)
    return _check_exit(rep)


def cmd_verify_corollary2(args, out: Reporter) -> int:
    G = require_consistent(read_presentation(args.file))
    v = _decide(G, args.literal) if nilpotency_class(G) == 2 else classify_capable(G)
    if v.status is Status.UNKNOWN and nilpotency_class(G) == 2:
        w = witness_search(G, args.budget)
        if w.capable:
            v = w
    rep = corollary2_check(G, v)
    _check_record(out, args.file, rep)
    return _check_exit(rep)


def cmd_verify_lemma3(args, out: Reporter) -> int:
    H = require_consistent(read_presentation(args.file))
    try:
        rep = lemma3_reduce(H)
    except InputError as exc:
        out.record("check", f"lemma3: HYPOTHESIS VIOLATION\n  {exc}", name="lemma3", file=args.file,
                   status="hypothesis-violation", note=str(exc))
        return EXIT_FAIL
    status = "pass" if rep.ok else "fail"
    out.record(
        "check",
        rep.render(H),
        name="lemma3",
        file=args.file,
        status=status,
        nilpotency_class=rep.nilpotency_class,
        d=len(rep.x),
        y_in_z2=all(rep.y_in_z2.values()),
        eq1=all(rep.eq1.values()),
        eq1_count=len(rep.eq1),
        d_top=rep.d_top,
    )
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_verify_cross_check(args, out: Reporter) -> int:
    t0 = time.perf_counter()
    report = cross_validate(args.p, args.max_order, args.budget, literal=args.literal)
    elapsed = time.perf_counter() - t0
    if args.machine:
        for row in report.rows:
            al, be, ga, r1, r2 = row.entry.params
            out.record(
                "row",
                fingerprint=row.fingerprint_hash,
                order=row.entry.order,
                params=f"{al},{be},{ga},{r1},{r2}",
                classification=f"{row.classification.status.value}:{row.classification.reason.value}",
                family=row.classification.family.label() if row.classification.family else "-",
                search=f"{row.search.status.value}:{row.search.reason.value}",
                flag=row.flag,
            )
    else:
        for row in report.rows:
            cl = row.classification
            fam = f" via {cl.family.label()}" if cl.family else ""
            clause = f" “{cl.clause}”" if cl.clause else ""
            wit = f" (witness order {row.search.witness.H.order})" if row.search.witness else ""
            out.text(
                f"{row.flag:13s} {row.entry.order:5d} {row.entry.label()}: "
                f"{cl.status.value}{fam}{clause} / search {row.search.status.value}{wit}"
            )
    if args.out:
        Path(args.out).write_text(report.tsv())
    if args.witness_dir:
        write_witnesses(report, args.witness_dir)
    summary = dict(
        p=args.p,
        max_order=args.max_order,
        budget=args.budget,
        groups=len(report.rows),
        hard_conflicts=len(report.hard_conflicts),
        conflicts=len(report.conflicts),
        complete=report.complete,
    )
    if not args.deterministic:
        summary["seconds"] = f"{elapsed:.2f}"
    human = (
        f"{len(report.rows)} groups, {len(report.hard_conflicts)} hard conflicts, "
        f"{len(report.conflicts)} soft conflicts"
        + ("" if args.deterministic else f", {elapsed:.1f} s")
    )
    if not report.complete:
        human += f"\nINCOMPLETE: {report.stop_reason}"
    out.record("summary", human, **summary)
    if not report.complete:
        out.record("incomplete", None, reason=report.stop_reason)
        return EXIT_RESOURCE
    return EXIT_FAIL if report.hard_conflicts else EXIT_OK


def cmd_enumerate(args, out: Reporter) -> int:
    if args.max_order > catalog_cap(args.p):
        raise ResourceError(f"max-order {args.max_order} exceeds the catalog cap {catalog_cap(args.p)}")
    entries = enumerate_2gen_class2(args.p, args.max_order)
    verdict = None
    if args.verdicts:
        verdict = lambda G: classify_capable(G, args.literal).status.value  # noqa: E731
    index = export_catalog(entries, args.out, verdict) if args.out else None
    for k, e in enumerate(entries):
        out.record(
            "group",
            f"{k:3d} order {e.order:5d} {e.label()}",
            id=k,
            order=e.order,
            params=",".join(map(str, e.params)),
        )
    by_order: dict[int, int] = {}
    for e in entries:
        by_order[e.order] = by_order.get(e.order, 0) + 1
    counts = ",".join(f"{o}:{c}" for o, c in sorted(by_order.items()))
    out.record(
        "summary",
        f"{len(entries)} groups ({counts})" + (f"; index {index}" if index else ""),
        groups=len(entries),
        counts=counts,
        index=index or "-",
    )
    return EXIT_OK


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--machine", action="store_true", help="tab-separated records, one per line")
    common.add_argument("--deterministic", action="store_true", help="omit timings; output order is fixed")
    common.add_argument("--order-cap", type=int, help=f"enumeration cap (default ${CAP_ENV} or built-in)")
    common.add_argument("--literal", action="store_true", help="T1ii with sigma >= 1 only")
    common.add_argument("-v", "--verbose", action="store_true")

    ap = argparse.ArgumentParser(prog="pgcap", description="Capability of 2-generated class-2 p-groups")
    ap.add_argument("--version", action="version", version=f"pgcap {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    fam = sub.add_parser("family", help="family presentations").add_subparsers(dest="action", required=True)
    b = fam.add_parser("build", parents=[common], help="build one family member")
    b.add_argument("--variant", required=True, choices=["T1i", "T1ii", "T2i", "T2ii"])
    b.add_argument("--p", type=int, required=True)
    b.add_argument("--alpha", type=int, required=True)
    b.add_argument("--beta", type=int, required=True)
    b.add_argument("--gamma", type=int, required=True)
    b.add_argument("--sigma", type=int)
    b.add_argument("--out", help="output .pcp file (stdout if omitted)")
    b.set_defaults(func=cmd_family_build)

    inv = sub.add_parser("invariants", parents=[common], help="structural invariants of a presentation")
    inv.add_argument("file")
    inv.set_defaults(func=cmd_invariants)

    cap = sub.add_parser("capable", help="capability").add_subparsers(dest="action", required=True)
    d = cap.add_parser("decide", parents=[common], help="decide by classification")
    d.add_argument("file")
    d.set_defaults(func=cmd_capable_decide)
    s = cap.add_parser("search", parents=[common], help="search for a witness extension")
    s.add_argument("file")
    s.add_argument("--budget", type=int, default=2, help="log_p of the largest centre tried (1..3)")
    s.add_argument("--out", help="witness output file")
    s.set_defaults(func=cmd_capable_search)

    ver = sub.add_parser("verify", help="theorem checkers and sweeps").add_subparsers(dest="action", required=True)
    for name, fn in (("theorem-a", cmd_verify_theorem_a), ("corollary2", cmd_verify_corollary2)):
        v = ver.add_parser(name, parents=[common])
        v.add_argument("file")
        v.add_argument("--budget", type=int, default=2, help="witness budget when classification is silent")
        v.set_defaults(func=fn)
    v = ver.add_parser("lemma3", parents=[common])
    v.add_argument("file")
    v.set_defaults(func=cmd_verify_lemma3)
    v = ver.add_parser("cross-check", parents=[common], help="classification versus witness search")
    v.add_argument("--p", type=int, required=True)
    v.add_argument("--max-order", type=int, required=True)
    v.add_argument("--budget", type=int, default=2)
    v.add_argument("--out", help="write the TSV report here")
    v.add_argument("--witness-dir", help="write every witness found here")
    v.set_defaults(func=cmd_verify_cross_check)

    e = sub.add_parser("enumerate", parents=[common], help="catalog of 2-generated class-2 groups")
    e.add_argument("--p", type=int, required=True)
    e.add_argument("--max-order", type=int, required=True)
    e.add_argument("--out", help="directory for .pcp files and index.tsv")
    e.add_argument("--verdicts", action="store_true", help="add a classification column to the index")
    e.set_defaults(func=cmd_enumerate)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:  # argparse: 0 for --help/--version, 2 for usage errors
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    out = Reporter(args.machine)
    # the cap is read from the environment deep inside the library; set it only
    # for this call so in-process callers keep their own setting
    saved = os.environ.get(CAP_ENV)
    if args.order_cap is not None:
        if not 1 <= args.order_cap <= HARD_CAP:
            print(f"pgcap: --order-cap must be in 1..{HARD_CAP}", file=sys.stderr)
            return EXIT_USAGE
        os.environ[CAP_ENV] = str(args.order_cap)
    try:
        return args.func(args, out)
    except ResourceError as exc:
        print(f"pgcap: resource limit: {exc}", file=sys.stderr)
        out.record("error", None, category="resource", message=str(exc))
        return EXIT_RESOURCE
    except (InputError, ConsistencyError, OSError) as exc:
        print(f"pgcap: {exc}", file=sys.stderr)
        out.record("error", None, category="input", message=str(exc))
        return EXIT_USAGE
    except PgcapError as exc:
        print(f"pgcap: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if saved is None:
            os.environ.pop(CAP_ENV, None)
        else:
            os.environ[CAP_ENV] = saved


if __name__ == "__main__":
    sys.exit(main())
