"""Command-line interface.

Exit codes: 0 when every asserted check passes, 1 when a mathematical check
fails, 2 for usage errors (bad flags, malformed partitions, out-of-range n).
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from concurrent.futures import ProcessPoolExecutor
from contextlib import nullcontext
from typing import Any, Callable

from . import __version__
from .branching import (
    HeckeCount,
    branch_all,
    branch_dihedral,
    cyclic_coeffs,
    evict_cache,
    hecke_irreducible_count,
    induction_check,
    induction_instances,
    verify_corollary_cyclic,
    verify_theorem_an,
    verify_theorem_sn,
    verify_two_row,
)
from .characters import (
    check_dimension_bound,
    fomin_lulov_data,
    reflection_bound_data,
)
from .dihedral import (
    conjugated_young_meets_dihedral_trivially,
    irreps,
    verify_dihedral_conjugate,
    verify_mn_cycle,
    young_avoider,
)
from .lr import (
    LemmaReport,
    verify_hook_containment,
    verify_lemma_3m,
    verify_lemma_5m,
    verify_lemma_base,
    verify_lemma_pp,
)
from .partitions import format_partition, parse_partition, partitions_of, two_core
from .reports import FAIL, PASS, Clause, Counterexample, TheoremReport, dumps, envelope
from .tableaux import MAJ_ENUMERATION_LIMIT, maj_counts

BRANCH_MAX_N = 60
THEOREM_MAX_N = 40
LEMMA_BASE_MAX_M = 13

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- argument helpers --------------------------------------------------------------------


def parse_range(text: str, cap: int | None = None) -> tuple[int, int]:
    """``"lo..hi"`` or a single ``"n"``; requires 3 <= lo <= hi (<= cap)."""
    try:
        if ".." in text:
            lo_text, hi_text = text.split("..", 1)
            lo, hi = int(lo_text), int(hi_text)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"malformed range {text!r}; expected lo..hi") from None
    if not 3 <= lo <= hi:
        raise UsageError(f"range {text!r} must satisfy 3 <= lo <= hi")
    if cap is not None and hi > cap:
        raise UsageError(f"upper bound {hi} exceeds the cap of {cap} for this command")
    return lo, hi


def _shape(text: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise UsageError(f"malformed partition {text!r}: {exc}") from None


def _write(args, text: str) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv(rows: list[list[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in rows:
        writer.writerow([str(x) for x in row])
    return buf.getvalue()


def _emit_reports(args, command: str, reports: list[TheoremReport], seed: int | None = None) -> int:
    passed = all(r.passed for r in reports)
    if args.format == "json":
        payload = {"passed": passed, "reports": [r.to_dict() for r in reports]}
        _write(args, dumps(envelope(command, payload, seed)))
    elif args.format == "csv":
        rows = [["name", "n", "clause", "status", "counterexamples"]]
        for r in reports:
            for c in r.clauses:
                rows.append([r.name, r.n, c.name, c.status, len(c.counterexamples)])
        _write(args, _csv(rows))
    else:
        body = "\n".join(r.render() for r in reports)
        _write(args, f"{body}\n{'PASS' if passed else 'FAIL'}: {command}\n")
    return EXIT_OK if passed else EXIT_FAIL


# -- branch ------------------------------------------------------------------------------


def cmd_branch(args) -> int:
    shape = _shape(args.shape)
    if shape.size != args.n:
        raise UsageError(f"shape {format_partition(shape)} has size {shape.size}, not {args.n}")
    if not 3 <= args.n <= BRANCH_MAX_N:
        raise UsageError(f"n must lie in 3..{BRANCH_MAX_N}")
    table = branch_dihedral(shape)
    items = table.items()
    if args.format == "json":
        payload = {"n": args.n, "shape": shape, "entries": {rep.label: v for rep, v in items}}
        _write(args, dumps(envelope("branch", payload)))
    elif args.format == "csv":
        rows = [["n", "shape", "irrep-label", "multiplicity"]]
        rows += [[args.n, format_partition(shape), rep.label, v] for rep, v in items]
        _write(args, _csv(rows))
    else:
        lines = [f"Res to D_{args.n} of chi_{format_partition(shape)}"]
        lines += [f"  {rep.label:<6} {v}" for rep, v in items]
        _write(args, "\n".join(lines) + "\n")
    return EXIT_OK


# -- verify ------------------------------------------------------------------------------


def _sweep(args, verifier: Callable[[int], TheoremReport], odd_only: bool = False) -> list[TheoremReport]:
    lo, hi = parse_range(args.n_range, THEOREM_MAX_N)
    reports = []
    for n in range(lo, hi + 1):
        if odd_only and n % 2 == 0:
            continue
        reports.append(verifier(n))
        evict_cache(n)
    if not reports:
        raise UsageError("the range contains no admissible n")
    return reports


def verify_embeddings(max_size: int, young_sizes=(5, 7, 11, 13)) -> TheoremReport:
    report = TheoremReport("embeddings", max_size, f"2 <= m, n <= {max_size}", asserted=True)
    mn = Clause("mn-cycle", "the wreath embedding of (w_m, w_n) is an mn-cycle")
    conj = Clause("dihedral-conjugate", "the embedded dihedral pair is conjugate to the standard one")
    for m in range(2, max_size + 1):
        for n in range(2, max_size + 1):
            if not verify_mn_cycle(m, n):
                mn.fail(Counterexample((), f"m={m},n={n}", 0, "mn-cycle"))
            if not verify_dihedral_conjugate(m, n):
                conj.fail(Counterexample((), f"m={m},n={n}", 0, "conjugate"))
    report.add(mn)
    report.add(conj)
    young = Clause("young-avoider", "a conjugate of each Young subgroup with >= 3 parts meets D_n trivially")
    checked = 0
    for n in young_sizes:
        for mu in partitions_of(n):
            if len(mu) < 3:
                continue
            checked += 1
            sigma = young_avoider(mu, n)
            if not conjugated_young_meets_dihedral_trivially(mu, sigma):
                young.fail(Counterexample(mu, f"n={n}", 0, "trivial intersection"))
    young.detail = f"{checked} Young subgroups at n in {{{', '.join(map(str, young_sizes))}}}"
    report.add(young)
    return report


def verify_induction(n: int, minimum: int, limit: int | None) -> TheoremReport:
    report = TheoremReport("induction-step", n, "Ind from <r^p> bounded by Res", asserted=True)
    instances = induction_instances(n, limit)
    found = Clause("instances", f"at least {minimum} admissible (lambda, factors) instances exist")
    found.detail = f"{len(instances)} instances found"
    if len(instances) < minimum:
        found.fail(Counterexample((), "count", len(instances), f">= {minimum}"))
    report.add(found)
    check = Clause("inequality", "Ind character <= Res chi_lambda coefficient-wise")
    for lam, mus in instances:
        result = induction_check(n, len(mus), lam, mus)
        if not result.holds:
            bad = [r for r in result.induced if result.induced[r] > result.restricted[r]]
            check.fail(Counterexample(
                lam, bad[0].label, result.induced[bad[0]],
                f"<= {result.restricted[bad[0]]} (factors {' '.join(map(format_partition, mus))})"))
    report.add(check)
    return report


def verify_bounds(n: int = 82, samples: int = 10_000, seed: int = 0) -> TheoremReport:
    report = TheoremReport("bounds", n, "character and dimension inequalities", asserted=True)
    refl = Clause("reflection-bound", "chi(refl)^2 <= (n-1)(2n-1) f for all lambda of 23 and 29")
    for size in (23, 29):
        for lam in partitions_of(size):
            data = reflection_bound_data(lam)
            if not data.holds:
                refl.fail(Counterexample(lam, "reflection", data.lhs, f"<= {data.rhs}"))
    report.add(refl)
    fl = Clause("involution-bound", "chi((2^m))^2 <= 2m f for eta of 2m, m <= 8, and 2-core-free eta of 22")
    equal = 0
    shapes = [eta for m in range(1, 9) for eta in partitions_of(2 * m)]
    shapes += [eta for eta in partitions_of(22) if not two_core(eta)]
    for eta in shapes:
        data, equality = fomin_lulov_data(eta)
        equal += equality
        if not data.holds:
            fl.fail(Counterexample(eta, "involution", data.lhs, f"<= {data.rhs}"))
    fl.detail = f"{len(shapes)} shapes; sharp equality observed for {equal}"
    report.add(fl)
    dim = check_dimension_bound(n, samples, seed)
    clause = Clause("dimension-bound", f"f >= n^5 at n={n} when lambda_1, lambda_1' < n-7")
    clause.detail = (
        f"{dim.few_part_checked} shapes with <= 3 parts, {dim.sampled_in_hypothesis} of "
        f"{dim.sampled_drawn} uniform samples (seed {seed}); sampled, not exhaustive"
    )
    for lam in dim.failures:
        clause.fail(Counterexample(lam, "dimension", 0, f">= {n}^5"))
    report.add(clause)
    return report


def cmd_verify(args) -> int:
    what = args.what
    jobs = max(1, args.jobs)
    if what == "theorem-sn":
        ctx = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else nullcontext()
        with ctx as pool:
            reports = _sweep(args, lambda n: verify_theorem_sn(n, jobs=jobs, pool=pool))
    elif what == "corollary-cn":
        reports = _sweep(args, verify_corollary_cyclic)
    elif what == "theorem-an":
        reports = _sweep(args, verify_theorem_an, odd_only=True)
    elif what == "embeddings":
        if not 2 <= args.max <= 12:
            raise UsageError("--max must lie in 2..12")
        reports = [verify_embeddings(args.max)]
    elif what == "induction-step":
        reports = [verify_induction(args.n, args.min_instances, args.limit)]
    elif what == "two-row":
        ok, table = verify_two_row(args.p)
        report = TheoremReport("two-row", 2 * args.p, f"shape ({args.p},{args.p})", asserted=True)
        clause = Clause("exceeds-n", f"every multiplicity exceeds {2 * args.p}")
        if not ok:
            for rep, v in table.items():
                if v <= 2 * args.p:
                    clause.fail(Counterexample(table.shape, rep.label, v, f"> {2 * args.p}"))
        clause.detail = f"minimum multiplicity {min(table.entries.values())}"
        report.add(clause)
        reports = [report]
    elif what == "bounds":
        if args.seed is None:
            args.seed = 0
        reports = [verify_bounds(82, args.samples, args.seed)]
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(what)
    seed = args.seed if what == "bounds" else None
    return _emit_reports(args, f"verify {what}", reports, seed)


# -- lemma -------------------------------------------------------------------------------


def _lemma_payload(report: LemmaReport) -> dict[str, Any]:
    out: dict[str, Any] = {
        "name": report.name,
        "m": report.m,
        "observation_mode": report.observation_mode,
        "checked": report.checked,
        "skipped": report.skipped,
        "failures": [format_partition(p) for p in report.failures],
        "witnesses": {
            format_partition(lam): [format_partition(p) for p in w]
            for lam, w in sorted(report.witnesses.items(), reverse=True)
        },
        "notes": list(report.notes),
        "passed": "n/a" if report.passed is None else report.passed,
    }
    if report.exception_set is not None:
        out["exception_set"] = [format_partition(p) for p in sorted(report.exception_set, reverse=True)]
    if report.matches_stated_list is not None:
        out["matches_stated_list"] = report.matches_stated_list
    if report.sample_size is not None:
        out["sample_size"] = report.sample_size
    return out


def _render_lemma(report: LemmaReport) -> str:
    lines = []
    if report.observation_mode:
        lines.append(f"OBSERVATION MODE: m={report.m} is below the stated range; nothing is asserted")
    lines.append(f"lemma {report.name} m={report.m}: checked {report.checked}, skipped {report.skipped}")
    if report.exception_set is not None:
        shown = ", ".join(f"({format_partition(p)})" for p in sorted(report.exception_set, reverse=True))
        lines.append(f"  exception set: {shown}")
    if report.failures:
        shown = ", ".join(f"({format_partition(p)})" for p in report.failures[:20])
        lines.append(f"  failures ({len(report.failures)}): {shown}")
    lines.extend(f"  note: {note}" for note in report.notes)
    status = "n/a" if report.passed is None else ("pass" if report.passed else "fail")
    lines.append(f"  result: {status}")
    return "\n".join(lines) + "\n"


def cmd_lemma(args) -> int:
    what = args.what
    if what == "base" and args.m > LEMMA_BASE_MAX_M:
        raise UsageError(f"lemma base is capped at m <= {LEMMA_BASE_MAX_M}")
    if args.m < 2:
        raise UsageError("m must be at least 2")
    seed = None
    if what == "hook-containment":
        try:
            hc = verify_hook_containment(args.m, args.p)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        payload = {
            "m": args.m,
            "p": args.p,
            "shape": hc.shape,
            "factors": [format_partition(f) for f in hc.factors],
            "coefficient": hc.coefficient,
            "factors_not_contained": [format_partition(f) for f in hc.not_contained],
            "passed": hc.passed,
        }
        text = (
            f"hook containment m={args.m} p={args.p}: shape ({format_partition(hc.shape)}), "
            f"factors {' '.join('(' + format_partition(f) + ')' for f in hc.factors)}\n"
            f"  coefficient of s_lambda in the product: {hc.coefficient}\n"
        )
        if hc.not_contained:
            text += "  factors not contained in the hook: " + ", ".join(
                f"({format_partition(f)})" for f in hc.not_contained) + "\n"
        text += f"  result: {'pass' if hc.passed else 'fail'}\n"
        ok = hc.passed
    else:
        if what == "base":
            report = verify_lemma_base(args.m)
        elif what == "pp":
            report = verify_lemma_pp(args.m)
        elif what == "3m":
            report = verify_lemma_3m(args.m, strong=args.strong)
        else:
            if args.t not in (2, 4):
                raise UsageError("--t must be 2 or 4")
            seed = 1 if args.seed is None else args.seed
            report = verify_lemma_5m(args.m, sample_size=args.sample_size, seed=seed, t=args.t)
        payload = _lemma_payload(report)
        text = _render_lemma(report)
        ok = report.passed is not False
    if args.format == "json":
        _write(args, dumps(envelope(f"lemma {what}", payload, seed)))
    elif args.format == "csv":
        rows = [["key", "value"]] + [[k, v] for k, v in sorted(payload.items()) if not isinstance(v, (list, dict))]
        _write(args, _csv(rows))
    else:
        _write(args, text)
    return EXIT_OK if ok else EXIT_FAIL


# -- table -------------------------------------------------------------------------------


def cmd_table(args) -> int:
    what = args.what
    if what == "maj":
        if args.shape is None:
            raise UsageError("table maj needs --shape")
        shape = _shape(args.shape)
        n = shape.size
        if not 1 <= n <= MAJ_ENUMERATION_LIMIT:
            raise UsageError(f"maj enumeration is limited to 1 <= n <= {MAJ_ENUMERATION_LIMIT}")
        counts = maj_counts(shape, n)
        agrees = counts == list(cyclic_coeffs(shape).coeffs)
        if args.format == "json":
            payload = {"shape": shape, "modulus": n, "counts": counts, "matches_character_sum": agrees}
            _write(args, dumps(envelope("table maj", payload)))
        elif args.format == "csv":
            _write(args, _csv([["shape", "r", "count"]] + [[format_partition(shape), r, c] for r, c in enumerate(counts)]))
        else:
            _write(args, f"maj mod {n} for ({format_partition(shape)}): [{','.join(map(str, counts))}]\n"
                         f"  matches character sum: {'yes' if agrees else 'no'}\n")
        return EXIT_OK if agrees else EXIT_FAIL

    if args.n is None:
        raise UsageError(f"table {what} needs --n")
    n = args.n
    if not 3 <= n <= BRANCH_MAX_N:
        raise UsageError(f"n must lie in 3..{BRANCH_MAX_N}")
    jobs = max(1, args.jobs)
    tables = branch_all(n, jobs)
    labels = [rep.label for rep in irreps(n)]
    if what == "branch":
        if args.format == "json":
            payload = {
                "n": n,
                "tables": [{"shape": t.shape, "entries": t.as_labels()} for t in tables],
            }
            _write(args, dumps(envelope("table branch", payload)))
        elif args.format == "csv" and args.long:
            rows = [["n", "shape", "irrep-label", "multiplicity"]]
            rows += [[n, format_partition(t.shape), rep.label, v] for t in tables for rep, v in t.items()]
            _write(args, _csv(rows))
        elif args.format == "csv":
            rows = [["n", "shape"] + labels]
            rows += [[n, format_partition(t.shape)] + [t.as_labels()[x] for x in labels] for t in tables]
            _write(args, _csv(rows))
        else:
            width = max(len(format_partition(t.shape)) for t in tables)
            lines = [f"{'shape':<{width}}  " + " ".join(f"{x:>6}" for x in labels)]
            for t in tables:
                row = t.as_labels()
                lines.append(f"{format_partition(t.shape):<{width}}  " + " ".join(f"{row[x]:>6}" for x in labels))
            _write(args, "\n".join(lines) + "\n")
        return EXIT_OK

    # hecke
    counts: list[HeckeCount] = [hecke_irreducible_count(n, rep, tables) for rep in irreps(n)]
    asserted = n >= 11
    ok = all(c.k_at_most_five for c in counts) or not asserted
    if args.format == "json":
        payload = {
            "n": n,
            "asserted": asserted,
            "counts": [
                {"irrep": c.rep.label, "count": c.count, "k": len(c.zeros),
                 "k_at_most_five": c.k_at_most_five,
                 "zeros": [format_partition(z) for z in c.zeros]}
                for c in counts
            ],
        }
        _write(args, dumps(envelope("table hecke", payload)))
    elif args.format == "csv":
        rows = [["n", "irrep-label", "count", "k"]] + [[n, c.rep.label, c.count, len(c.zeros)] for c in counts]
        _write(args, _csv(rows))
    else:
        lines = [f"Hecke algebra irreducible counts, n={n}, p(n)={counts[0].partitions}"]
        for c in counts:
            zeros = ", ".join(f"({format_partition(z)})" for z in c.zeros)
            lines.append(f"  {c.rep.label:<6} {c.count}  (k={len(c.zeros)}: {zeros})")
        if not asserted:
            lines.append("  observation only: k <= 5 is not claimed below n = 11")
        for c in counts:
            if not c.k_at_most_five:
                lines.append(f"  k <= 5 fails for {c.rep.label}: k = {len(c.zeros)}")
        _write(args, "\n".join(lines) + "\n")
    return EXIT_OK if ok else EXIT_FAIL


# -- entry point -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--output", help="write to this file instead of stdout")
    common.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    common.add_argument("--seed", type=int, default=None,
                        help="seed for sampled checks (bounds: 0, lemma 5m: 1)")

    parser = argparse.ArgumentParser(
        prog="dihedral-branching",
        description="Exact branching of S_n and A_n characters to dihedral and cyclic subgroups.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("branch", parents=[common], help="restriction of one character to D_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--shape", required=True, help='partition such as "6,4,3,2"')
    p.set_defaults(func=cmd_branch)

    p = sub.add_parser("verify", parents=[common], help="run a theorem verifier")
    p.add_argument("what", choices=(
        "theorem-sn", "theorem-an", "corollary-cn", "embeddings", "induction-step", "two-row", "bounds"))
    p.add_argument("--n-range", default="11..30", help="lo..hi (default 11..30)")
    p.add_argument("--max", type=int, default=8, help="embeddings: largest m and n")
    p.add_argument("--n", type=int, default=15, help="induction-step: odd composite n")
    p.add_argument("--min-instances", type=int, default=5)
    p.add_argument("--limit", type=int, default=None, help="induction-step: stop after this many instances")
    p.add_argument("--p", type=int, default=41, help="two-row: the shape is (p,p)")
    p.add_argument("--samples", type=int, default=10_000, help="bounds: random partitions of 82")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("lemma", parents=[common], help="run a Littlewood-Richardson lemma verifier")
    p.add_argument("what", choices=("base", "pp", "3m", "5m", "hook-containment"))
    p.add_argument("--m", type=int, default=11)
    p.add_argument("--p", type=int, default=3)
    p.add_argument("--strong", action="store_true", help="3m: the strengthened form")
    p.add_argument("--sample-size", type=int, default=200)
    p.add_argument("--t", type=int, default=2)
    p.set_defaults(func=cmd_lemma)

    p = sub.add_parser("table", parents=[common], help="tables of multiplicities, maj counts or Hecke counts")
    p.add_argument("what", choices=("branch", "maj", "hecke"))
    p.add_argument("--n", type=int)
    p.add_argument("--shape")
    p.add_argument("--long", action="store_true", help="branch csv: one row per (shape, irrep)")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    if args.jobs < 1:
        parser.print_usage(sys.stderr)
        print("error: --jobs must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
