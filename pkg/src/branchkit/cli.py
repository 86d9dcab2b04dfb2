"""Command-line front end.

Subcommands: list-forms, branch (quat | sp1q), admissible (hermitian | so3),
weights, oracle-check (quat | sp1q), selftest.  Output is deterministic JSON
(sorted keys, weights ordered lexicographically by coordinates) or aligned
text.  Exit codes: 0 success, 2 domain/configuration errors, 3 resource
errors.

Weights are entered in ambient coordinates matching the realizations used
throughout (``--lambda "5,3,2,1"``); ``--basis simple`` instead reads the
coordinates as coefficients over the simple roots of the form's positive
system.  The environment variable BRANCHKIT_GROUP_ORDER_BOUND overrides the
Weyl enumeration safety bound.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .acceptance import run_all
from .errors import (
    BranchkitError,
    ConfigurationError,
    DomainError,
    InternalError,
    ResourceError,
)
from .lattice import format_weight, parse_weight, wadd, wscale, zero_weight
from .oracle import OracleConfig, verify_closed_form
from .quaternionic import (
    branching_table,
    check_table_dominance,
    lam2_weight_table,
    quaternionic_context,
)
from .repweights import restrict_weights
from .specialcases import (
    hermitian_data,
    kss_admissible_report,
    so3_admissible,
    sp1q_branching_table,
    sp1q_context,
    sp1q_string_table,
    sp1q_verify,
)

SCHEMA_PATH = os.path.join(os.path.dirname(__file__), "schemas", "output.schema.json")


def _group_order_bound(default=10**5) -> int:
    return int(os.environ.get("BRANCHKIT_GROUP_ORDER_BOUND", default))


def _emit(payload: dict, output: str) -> str:
    if output == "json":
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    lines = []
    for key, value in sorted(payload.items()):
        if isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{key}:")
            for row in value:
                lines.append("  " + "\t".join(f"{k}={row[k]}" for k in sorted(row)))
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def _parse_lambda(args, ctx_simple_roots):
    lam = parse_weight(args.lam)
    if args.basis == "simple":
        if len(lam) != len(ctx_simple_roots):
            raise DomainError(
                f"simple-basis input needs {len(ctx_simple_roots)} coefficients"
            )
        total = zero_weight(len(ctx_simple_roots[0]))
        for c, a in zip(lam, ctx_simple_roots):
            total = wadd(total, wscale(c, a))
        return total
    return lam


def _entries_json(entries: dict):
    return [
        {"mu": format_weight(mu), "mult": str(m)} for mu, m in sorted(entries.items())
    ]


def cmd_list_forms(args) -> int:
    payload = {
        "command": "list-forms",
        "quaternionic": [
            "g2_2",
            "f4_4",
            "e6_2",
            "e7_m5",
            "e8_m24",
            "su2_n:<n>",
            "so4_n:<n>",
        ],
        "sp1q": ["sp1_q:<q>"],
        "so3": ["so3:<n>"],
        "hermitian": ["su_pq:<p>,<q>", "so_star:<n>", "sp_n_R:<n>", "e6_m14", "e7_m25"],
    }
    sys.stdout.write(_emit(payload, args.output))
    return 0


def cmd_branch(args) -> int:
    if args.family == "quat":
        ctx = quaternionic_context(args.form)
        lam = _parse_lambda(args, ctx.rd.simple)
        table = branching_table(ctx, lam, args.cutoff)
        payload = {
            "command": "branch",
            "family": "quat",
            "form": args.form,
            "lambda": format_weight(lam),
            "cutoff": args.cutoff,
            "completePairingBound": str(table.pairing_bound),
            "entries": _entries_json(table.entries),
            "oracleChecked": False,
        }
        if args.check_oracle:
            cfg = OracleConfig(args.step_bound, _group_order_bound())
            report = verify_closed_form(ctx, lam, cfg)
            payload["oracleChecked"] = True
            payload["oracle"] = {
                "agree": report.agree,
                "comparedWeights": report.compared,
                "mismatches": [
                    {"mu": format_weight(mu), "closed": str(a), "oracle": str(b)}
                    for mu, a, b in report.mismatches
                ],
            }
            if not report.agree:
                raise InternalError("closed form disagrees with the oracle")
        violations = check_table_dominance(ctx, table)
        if violations:
            raise InternalError(f"non-dominant parameters in the table: {violations[:3]}")
    else:
        q = _sp1q_param(args.form)
        ctx = sp1q_context(q)
        lam = _parse_lambda(args, ctx.rd.simple)
        table = sp1q_branching_table(ctx, lam, args.cutoff)
        payload = {
            "command": "branch",
            "family": "sp1q",
            "form": args.form,
            "lambda": format_weight(lam),
            "cutoff": args.cutoff,
            "completePairingBound": str(table.pairing_bound),
            "entries": _entries_json(table.entries),
            "oracleChecked": False,
        }
        if args.check_oracle:
            report = sp1q_verify(ctx, lam, args.step_bound)
            payload["oracleChecked"] = True
            payload["oracle"] = {
                "agree": report.agree,
                "comparedWeights": report.compared,
                "mismatches": [
                    {"mu": format_weight(mu), "closed": str(a), "oracle": str(b)}
                    for mu, a, b in report.mismatches
                ],
            }
            if not report.agree:
                raise InternalError("closed form disagrees with the oracle")
    sys.stdout.write(_emit(payload, args.output))
    return 0


def _sp1q_param(form: str) -> int:
    name, _, param = form.partition(":")
    if name != "sp1_q":
        raise ConfigurationError(f"expected an sp1_q:<q> label, got {form!r}")
    try:
        return int(param)
    except ValueError:
        raise ConfigurationError(f"bad sp1_q parameter {param!r}") from None


def cmd_admissible(args) -> int:
    if args.kind == "so3":
        admissible, reason = so3_admissible(args.n)
        payload = {
            "command": "admissible",
            "kind": "so3",
            "n": args.n,
            "admissible": admissible,
            "reason": reason,
        }
    else:
        hd = hermitian_data(args.form)
        lam = _parse_lambda(args, hd.rd.simple)
        admissible, reason = kss_admissible_report(hd, lam)
        payload = {
            "command": "admissible",
            "kind": "hermitian",
            "form": args.form,
            "lambda": format_weight(lam),
            "admissible": admissible,
            "reason": reason,
        }
    sys.stdout.write(_emit(payload, args.output))
    return 0


def cmd_weights(args) -> int:
    label = args.form
    if label.startswith("sp1_q"):
        ctx = sp1q_context(_sp1q_param(label))
        lam = _parse_lambda(args, ctx.rd.simple)
        if args.project == "torus":
            strings = sp1q_string_table(ctx, lam)
            entries = {
                format_weight((Fraction(0), Fraction(k)) + (Fraction(0),) * (ctx.q - 1)): n
                for k, n in strings.items()
            }
        else:
            from .repweights import cached_freudenthal, hc_to_highest_weight
            from .specialcases import sp1q_decompose

            _, lam2 = sp1q_decompose(ctx, lam)
            hw = hc_to_highest_weight(lam2, ctx.k2_factor)
            table = cached_freudenthal(ctx.rd.label, hw, ctx.k2_factor)
            entries = {format_weight(v): m for v, m in table.mults.items()}
    else:
        ctx = quaternionic_context(label)
        lam = _parse_lambda(args, ctx.rd.simple)
        table = lam2_weight_table(ctx, lam)
        if args.project == "torus":
            pushed = restrict_weights(table, ctx.q_u_k2)
            entries = {format_weight(v): m for v, m in pushed.items()}
        else:
            entries = {format_weight(v): m for v, m in table.mults.items()}
    payload = {
        "command": "weights",
        "form": label,
        "lambda": format_weight(lam),
        "project": args.project,
        "entries": [
            {"weight": k, "mult": str(entries[k])} for k in sorted(entries, key=parse_weight)
        ],
    }
    if args.output == "text":
        sys.stdout.write("".join(f"{row['weight']}\t{row['mult']}\n" for row in payload["entries"]))
        return 0
    sys.stdout.write(_emit(payload, args.output))
    return 0


def cmd_oracle_check(args) -> int:
    if args.family == "quat":
        ctx = quaternionic_context(args.form)
        lam = _parse_lambda(args, ctx.rd.simple)
        cfg = OracleConfig(args.step_bound, _group_order_bound())
        report = verify_closed_form(ctx, lam, cfg)
    else:
        ctx = sp1q_context(_sp1q_param(args.form))
        lam = _parse_lambda(args, ctx.rd.simple)
        report = sp1q_verify(ctx, lam, args.step_bound)
    payload = {
        "command": "oracle-check",
        "family": args.family,
        "form": args.form,
        "lambda": format_weight(lam),
        "stepBound": args.step_bound,
        "agree": report.agree,
        "comparedWeights": report.compared,
        "mismatches": [
            {"mu": format_weight(mu), "closed": str(a), "oracle": str(b)}
            for mu, a, b in report.mismatches
        ],
    }
    sys.stdout.write(_emit(payload, args.output))
    return 0


def cmd_selftest(args) -> int:
    selected = set(args.only.split(",")) if args.only else None
    results = run_all(selected)
    ok = all(r.passed and r.within_limit for r in results)
    if args.output == "json":
        payload = {
            "command": "selftest",
            "passed": ok,
            "criteria": [
                {
                    "id": r.ident,
                    "title": r.title,
                    "passed": r.passed,
                    "withinLimit": r.within_limit,
                    "seconds": round(r.seconds, 2),
                    "detail": r.detail,
                }
                for r in results
            ],
        }
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        for r in results:
            sys.stdout.write(r.line() + "\n")
        sys.stdout.write(("all criteria passed" if ok else "FAILURES present") + "\n")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="branchkit",
        description="Exact branching laws and admissibility tests for discrete series restrictions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, lam=True):
        p.add_argument("--output", choices=("json", "text"), default="json")
        if lam:
            p.add_argument("--lambda", dest="lam", required=True,
                           help="parameter coordinates, e.g. '5,3,2,1'")
            p.add_argument("--basis", choices=("ambient", "simple"), default="ambient")

    p = sub.add_parser("list-forms", help="enumerate supported form labels")
    common(p, lam=False)
    p.set_defaults(fn=cmd_list_forms)

    p = sub.add_parser("branch", help="closed-form branching table")
    p.add_argument("family", choices=("quat", "sp1q"))
    p.add_argument("--form", required=True)
    p.add_argument("--cutoff", type=int, default=8)
    p.add_argument("--check-oracle", action="store_true")
    p.add_argument("--step-bound", type=int, default=12)
    common(p)
    p.set_defaults(fn=cmd_branch)

    p = sub.add_parser("admissible", help="admissibility decisions")
    kind = p.add_subparsers(dest="kind", required=True)
    ph = kind.add_parser("hermitian", help="restriction to the semisimple factor of K")
    ph.add_argument("--form", required=True)
    common(ph)
    ph.set_defaults(fn=cmd_admissible)
    ps = kind.add_parser("so3", help="restriction of SO(3, n) to SO(3)")
    ps.add_argument("--n", type=int, required=True, help="the n of SO(3, n)")
    common(ps, lam=False)
    ps.set_defaults(fn=cmd_admissible)

    p = sub.add_parser("weights", help="weight multiplicity table of the compact factor")
    p.add_argument("--form", required=True)
    p.add_argument("--project", choices=("none", "torus"), default="none")
    common(p)
    p.set_defaults(fn=cmd_weights)

    p = sub.add_parser("oracle-check", help="closed form vs truncated distributional series")
    p.add_argument("family", choices=("quat", "sp1q"))
    p.add_argument("--form", required=True)
    p.add_argument("--step-bound", type=int, default=12)
    common(p)
    p.set_defaults(fn=cmd_oracle_check)

    p = sub.add_parser("selftest", help="run the acceptance criteria")
    p.add_argument("--only", default="", help="comma-separated ids, e.g. AC-1,AC-7")
    p.add_argument("--output", choices=("json", "text"), default="text")
    p.set_defaults(fn=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (DomainError, ConfigurationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceError as exc:
        print(f"resource error: {exc}", file=sys.stderr)
        return 3
    except BranchkitError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
