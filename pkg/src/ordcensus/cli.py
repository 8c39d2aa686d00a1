"""Command-line interface.

Subcommands: constants, census (as|se), classify, oracle, verify-kernel,
report-table1.  Exit codes: 0 success, 2 usage error, 3 resource guard
exceeded, 4 invariant violation (oracle disagreement or route mismatch).

Outputs are deterministic for a fixed configuration (including --seed) and
independent of --threads.  The environment variable ORDCENSUS_OUTDIR, when
set, is prepended to relative --output paths.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import artin_schreier as asc
from . import dirichlet, oracle, superelliptic
from .errors import DomainError, ResourceGuardError, InvariantViolation
from .serialize import cover_from_dict, cover_to_dict, field_from_qp

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_GUARD = 3
EXIT_INVARIANT = 4

TABLE1 = {
    # q: (phi(1), P(AS) modified family, CEZB)
    2: (0.314148, 0.314148, 0.419422),
    4: (0.593976, 0.514777, 0.737512),
    8: (0.776577, 0.702617, 0.873264),
    16: (0.882162, 0.833730, 0.937270),
    32: (0.939367, 0.911820, 0.968720),
}


def _resolve_output(path: str | None):
    if path is None:
        return None
    outdir = os.environ.get("ORDCENSUS_OUTDIR")
    if outdir and not os.path.isabs(path):
        return os.path.join(outdir, path)
    return path


def emit(text: str, output: str | None):
    path = _resolve_output(output)
    if path is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(path, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")


def emit_json(data, output: str | None):
    emit(json.dumps(data, indent=2), output)


def census_csv(rows: dict, m_values) -> str:
    lines = ["m,a_m,b_m,cumulative_ratio"]
    a_total = b_total = 0
    for m in m_values:
        a, b = rows[m]
        a_total += a
        b_total += b
        ratio = b_total / a_total if a_total else 0.0
        lines.append(f"{m},{a},{b},{ratio:.6f}")
    return "\n".join(lines)


def census_json(rows: dict, m_values) -> list:
    out = []
    a_total = b_total = 0
    for m in m_values:
        a, b = rows[m]
        a_total += a
        b_total += b
        ratio = b_total / a_total if a_total else 0.0
        out.append({"m": m, "a_m": a, "b_m": b,
                    "cumulative_ratio": round(ratio, 6)})
    return out


def _m_max_from_args(args) -> int:
    if args.x_bound is not None:
        # largest m with q^m < X
        x = args.x_bound
        if x < 2:
            raise DomainError("--x-bound must be >= 2")
        m = 0
        while args.q ** (m + 1) < x:
            m += 1
        return m
    if args.max_m is None:
        raise DomainError("one of --max-m / --x-bound is required")
    return args.max_m


def cmd_constants(args) -> int:
    q, p = args.q, args.p
    field_from_qp(q, p)  # validates q = p^k
    phi1 = dirichlet.phi_at_1(q, D=args.truncation_degree)
    psi = dirichlet.psi_p_at_1(p, q, D=args.truncation_degree)
    data = {
        "q": q,
        "p": p,
        "phi1": float(phi1.value),
        "psi_p1": float(psi.value),
        "zeta2": float(dirichlet.zeta_affine(q, 2)),
        "P_AS_unramified": float(dirichlet.ordinary_probability_as(q, p, False)),
        "P_AS_modified": float(dirichlet.ordinary_probability_as(q, p, True)),
        "cezb": float(dirichlet.cezb_constant(q)),
        "truncation_degree": phi1.truncation_degree,
        "error_bound": float(phi1.error_bound),
    }
    emit_json(data, args.output)
    return EXIT_OK


def cmd_census(args) -> int:
    m_max = _m_max_from_args(args)
    if args.family == "as":
        field = field_from_qp(args.q, args.p)
        tables = []
        if args.mode in ("analytic", "both"):
            tables.append(asc.census_analytic(field, m_max, args.include_infinity))
        if args.mode in ("enumerate", "both"):
            tables.append(asc.census_enumerated(field, m_max, args.include_infinity))
        if len(tables) == 2 and tables[0].rows != tables[1].rows:
            raise InvariantViolation(
                f"analytic and enumerated censuses disagree: "
                f"{tables[0].rows} vs {tables[1].rows}")
        rows = tables[0].rows
        m_values = range(2, m_max + 1)
    else:
        field = field_from_qp(args.q, 2)
        rows = superelliptic.census_se(field, args.n, m_max)
        m_values = range(0, m_max + 1)
    if args.format == "csv":
        emit(census_csv(rows, m_values), args.output)
    else:
        emit_json(census_json(rows, m_values), args.output)
    return EXIT_OK


def _load_cover(path: str):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise DomainError(f"cannot read cover file {path}: {exc}") from exc
    return cover_from_dict(data)


def cmd_classify(args) -> int:
    if args.cover:
        covers = [_load_cover(args.cover)]
    else:
        if args.sample is None:
            raise DomainError("classify requires --cover or --sample")
        import random
        rng = random.Random(args.seed)
        field = field_from_qp(args.q, 2)
        covers = [superelliptic.random_se_cover(field, args.n, args.max_m, rng)
                  for _ in range(args.sample)]
    reports = []
    for c in covers:
        entry = cover_to_dict(c)
        if isinstance(c, asc.ASCover):
            entry.update({"kind": "artin-schreier", "genus": asc.genus(c),
                          "m": asc.m_invariant(c), "ordinary": asc.is_ordinary(c)})
        else:
            entry.update({"kind": "superelliptic", "genus": superelliptic.genus_se(c),
                          "m": c.branch_count,
                          "d_i": list(superelliptic.eigen_degrees(c).d),
                          "a_number": superelliptic.a_number(c),
                          "ordinary": superelliptic.is_ordinary_se(c)})
            if (entry["a_number"] == 0) != entry["ordinary"]:
                raise InvariantViolation(f"classification routes disagree on {entry}")
        reports.append(entry)
    emit_json(reports[0] if args.cover else reports, args.output)
    return EXIT_OK


def cmd_oracle(args) -> int:
    cover = _load_cover(args.cover)
    report = oracle.cross_validate(cover)
    data = {
        "kind": report.kind,
        "genus": report.genus,
        "N_k": list(report.counts),
        "L": list(report.l_coeffs),
        "p_rank": report.p_rank,
        "ordinary_by_criterion": report.ordinary_by_criterion,
        "agree": report.agree,
    }
    if not report.agree:
        data["detail"] = report.detail
    emit_json(data, args.output)
    if not report.agree:
        raise InvariantViolation(f"oracle disagreement: {report.detail}")
    return EXIT_OK


def cmd_verify_kernel(args) -> int:
    ok = superelliptic.verify_kernel_lemma(args.n)
    emit_json({"n": args.n, "rank": (args.n + 1) // 2, "pass": ok}, args.output)
    if not ok:
        raise InvariantViolation(f"kernel lemma verification failed for n = {args.n}")
    return EXIT_OK


def cmd_report_table1(args) -> int:
    lines = ["q,phi1,phi1_dev,P_AS_modified,P_AS_modified_dev,cezb,cezb_dev"]
    rows = []
    for q, (phi_pub, pas_pub, cezb_pub) in TABLE1.items():
        phi1 = float(dirichlet.phi_at_1(q).value)
        pas = float(dirichlet.ordinary_probability_as(q, 2, True))
        cezb = float(dirichlet.cezb_constant(q))
        rows.append({"q": q,
                     "phi1": round(phi1, 6), "phi1_dev": round(abs(phi1 - phi_pub), 6),
                     "P_AS_modified": round(pas, 6),
                     "P_AS_modified_dev": round(abs(pas - pas_pub), 6),
                     "cezb": round(cezb, 6), "cezb_dev": round(abs(cezb - cezb_pub), 6)})
        lines.append(",".join(str(rows[-1][k]) for k in
                              ("q", "phi1", "phi1_dev", "P_AS_modified",
                               "P_AS_modified_dev", "cezb", "cezb_dev")))
    if args.format == "csv":
        emit("\n".join(lines), args.output)
    else:
        emit_json(rows, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ordcensus",
        description="Censuses and limiting probabilities of ordinary cyclic "
                    "covers of the projective line over small finite fields.")
    parser.add_argument("--threads", type=int, default=1,
                        help="worker count for point-count sweeps (output-independent)")
    sub = parser.add_subparsers(dest="command", required=True)

    p_const = sub.add_parser("constants", help="evaluate the limiting constants")
    p_const.add_argument("--q", type=int, required=True)
    p_const.add_argument("--p", type=int, required=True)
    p_const.add_argument("--truncation-degree", type=int, default=None)
    p_const.add_argument("--output", default=None)
    p_const.set_defaults(func=cmd_constants)

    p_census = sub.add_parser("census", help="exact (a_m, b_m) census tables")
    p_census.add_argument("family", choices=["as", "se"])
    p_census.add_argument("--q", type=int, required=True)
    p_census.add_argument("--p", type=int, default=2)
    p_census.add_argument("--n", type=int, default=3)
    p_census.add_argument("--max-m", type=int, default=None)
    p_census.add_argument("--x-bound", type=int, default=None,
                          help="count up to the largest m with q^m < X")
    p_census.add_argument("--mode", choices=["analytic", "enumerate", "both"],
                          default="analytic")
    p_census.add_argument("--include-infinity", action="store_true")
    p_census.add_argument("--format", choices=["csv", "json"], default="csv")
    p_census.add_argument("--output", default=None)
    p_census.set_defaults(func=cmd_census)

    p_classify = sub.add_parser("classify", help="invariants of one cover or a sample")
    p_classify.add_argument("--cover", default=None, help="cover JSON file")
    p_classify.add_argument("--sample", type=int, default=None,
                            help="classify this many seeded random superelliptic covers")
    p_classify.add_argument("--q", type=int, default=2)
    p_classify.add_argument("--n", type=int, default=3)
    p_classify.add_argument("--max-m", type=int, default=4)
    p_classify.add_argument("--seed", type=int, default=0)
    p_classify.add_argument("--output", default=None)
    p_classify.set_defaults(func=cmd_classify)

    p_oracle = sub.add_parser("oracle", help="point-count p-rank cross-validation")
    p_oracle.add_argument("--cover", required=True)
    p_oracle.add_argument("--format", choices=["json"], default="json")
    p_oracle.add_argument("--output", default=None)
    p_oracle.set_defaults(func=cmd_oracle)

    p_kernel = sub.add_parser("verify-kernel",
                              help="exact kernel/rank check of the fractional-part matrix")
    p_kernel.add_argument("--n", type=int, required=True)
    p_kernel.add_argument("--output", default=None)
    p_kernel.set_defaults(func=cmd_verify_kernel)

    p_table = sub.add_parser("report-table1",
                             help="computed constants with deviations from published values")
    p_table.add_argument("--format", choices=["csv", "json"], default="csv")
    p_table.add_argument("--output", default=None)
    p_table.set_defaults(func=cmd_report_table1)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceGuardError as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
