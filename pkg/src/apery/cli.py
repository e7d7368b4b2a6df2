"""Command-line front end: ``apery analyze | family | verify | table``.

Exit codes: 0 success, 1 bad input, 2 only known errata (with --allow-known),
3 any mismatch that is not tolerated.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .cone import cone_decomposition, ladder_profile
from .errors import SemigroupError
from .families import (
    ALMOST_MAXIMAL,
    SYMMETRIC,
    UNBOUNDED,
    almost_maximal_sweep,
    make_almost_maximal,
    make_symmetric,
    make_unbounded,
    predict,
    symmetric_sweep,
    unbounded_sweep,
    verify_family,
)
from .semigroup import frobenius, is_homogeneous, is_symmetric, new_semigroup
from .table import apery_table, hilbert_function, hilbert_series

EXIT_OK, EXIT_INPUT, EXIT_KNOWN, EXIT_UNEXPECTED = 0, 1, 2, 3

KINDS = {"symmetric": SYMMETRIC, "almost-max": ALMOST_MAXIMAL, "unbounded": UNBOUNDED}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage, which would collide with "known errata"
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


# ------------------------------------------------------------------ parsing


def parse_gens(text):
    try:
        gens = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"cannot parse generators {text!r}") from None
    if not gens or any(g <= 0 for g in gens):
        raise UsageError(f"generators must be positive integers, got {text!r}")
    return gens


def parse_range(text):
    """``"4..6"`` -> [4, 5, 6]; ``"7"`` -> [7]."""
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise UsageError(f"cannot parse range {text!r}; expected N or A..B") from None
    if b < a:
        raise UsageError(f"empty range {text!r}")
    return list(range(a, b + 1))


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError("missing " + ", ".join("--" + n for n in missing))


def _single(args, name):
    vals = parse_range(getattr(args, name))
    if len(vals) != 1:
        raise UsageError(f"--{name} takes a single value here")
    return vals[0]


def build_spec(kind, args):
    if kind == SYMMETRIC:
        _need(args, "e", "q", "d")
        return make_symmetric(_single(args, "e"), _single(args, "q"), _single(args, "d"))
    if kind == ALMOST_MAXIMAL:
        _need(args, "e", "d", "b")
        return make_almost_maximal(_single(args, "e"), _single(args, "d"), _single(args, "b"))
    _need(args, "n", "e")
    return make_unbounded(_single(args, "n"), _single(args, "e"))


# ----------------------------------------------------------------- reports


@dataclass(frozen=True)
class AnalysisReport:
    generators: tuple
    multiplicity: int
    embedding_dimension: int
    frobenius: int
    apery_set: tuple
    reduction_number: int
    apery_table: tuple
    ladder_profiles: tuple
    cone_decomposition: object
    cm_verdict: bool
    hilbert_function_prefix: tuple
    hilbert_series_numerator: tuple
    symmetric_flag: bool
    homogeneous_flag: bool
    row_labels: tuple = ()


def row_label(n):
    if n == 0:
        return "AP(S)"
    return "M" if n == 1 else f"{n}M"


def analyze(gens, layout=None, prefix=None):
    """Full report for the semigroup on ``gens``; ``layout`` reorders table columns by row-0 entry."""
    s = new_semigroup(gens)
    t = apery_table(s)
    a1 = s.multiplicity
    columns = [w % a1 for w in layout] if layout else list(range(a1))
    dec = cone_decomposition(s)
    n_h = prefix if prefix is not None else t.reduction + 2
    return AnalysisReport(
        generators=s.generators,
        multiplicity=a1,
        embedding_dimension=s.embedding_dimension,
        frobenius=frobenius(s),
        apery_set=tuple(sorted(s.apery_min)),
        reduction_number=t.reduction,
        apery_table=t.permuted(columns),
        ladder_profiles=tuple(ladder_profile(t, i) for i in range(1, a1)),
        cone_decomposition=dec,
        cm_verdict=dec.is_free,
        hilbert_function_prefix=tuple(hilbert_function(s, n) for n in range(n_h)),
        hilbert_series_numerator=hilbert_series(s).numerator,
        symmetric_flag=is_symmetric(s),
        homogeneous_flag=is_homogeneous(s),
        row_labels=tuple(row_label(n) for n in range(len(t.rows))),
    )


def _s(x):
    return str(x)


def analysis_json(rep, max_rows=None):
    rows = rep.apery_table[:max_rows] if max_rows else rep.apery_table
    return {
        "generators": [_s(g) for g in rep.generators],
        "multiplicity": _s(rep.multiplicity),
        "embedding_dimension": _s(rep.embedding_dimension),
        "frobenius": _s(rep.frobenius),
        "apery_set": [_s(w) for w in rep.apery_set],
        "reduction_number": _s(rep.reduction_number),
        "apery_table": [[_s(w) for w in row] for row in rows],
        "ladders": [
            {
                "column": lp.column,
                "p": lp.p,
                "d": lp.d,
                "landings": [list(x) for x in lp.landings],
                "torsion": [list(x) for x in lp.torsion],
            }
            for lp in rep.ladder_profiles
        ],
        "decomposition": {
            "free": list(rep.cone_decomposition.free_shifts),
            "torsion": [list(x) for x in rep.cone_decomposition.torsion],
        },
        "cm": rep.cm_verdict,
        "hilbert_function": list(rep.hilbert_function_prefix),
        "hilbert_numerator": list(rep.hilbert_series_numerator),
        "symmetric": rep.symmetric_flag,
        "homogeneous": rep.homogeneous_flag,
        "discrepancies": [],
    }


def discrepancy_json(entry):
    return {
        "aspect": entry.aspect,
        "paper": _jsonable(entry.paper),
        "computed": _jsonable(entry.computed),
        "citation": entry.citation,
        "erratum": entry.erratum,
        "inherited": list(entry.inherited),
    }


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = sorted(x) if isinstance(x, (set, frozenset)) else x
        return [_jsonable(v) for v in items]
    return x


def dump_json(obj):
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def table_csv(labels, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for label, row in zip(labels, rows):
        w.writerow([label, *row])
    return buf.getvalue()


def table_text(labels, rows):
    cells = [[label, *map(str, row)] for label, row in zip(labels, rows)]
    widths = [max(len(r[j]) for r in cells) for j in range(len(cells[0]))]
    lines = []
    for r in cells:
        lines.append("  ".join(c.rjust(w) if j else c.ljust(w) for j, (c, w) in enumerate(zip(r, widths))))
    return "\n".join(lines) + "\n"


def _seq(xs):
    return ", ".join(map(str, xs))


def analysis_text(rep, max_rows=None):
    rows = rep.apery_table[:max_rows] if max_rows else rep.apery_table
    dec = rep.cone_decomposition
    out = [
        f"semigroup        <{_seq(rep.generators)}>",
        f"multiplicity     {rep.multiplicity}",
        f"embedding dim    {rep.embedding_dimension}",
        f"frobenius        {rep.frobenius}",
        f"apery set        {{{_seq(rep.apery_set)}}}",
        f"reduction number {rep.reduction_number}",
        f"symmetric        {str(rep.symmetric_flag).lower()}",
        f"homogeneous      {str(rep.homogeneous_flag).lower()}",
        "",
        "apery table",
        table_text(rep.row_labels, rows).rstrip("\n"),
        "",
        "ladders (column: p, d, torsion)",
    ]
    for lp in rep.ladder_profiles:
        tors = " ".join(f"({b},{c})" for b, c in lp.torsion) or "-"
        out.append(f"  {lp.column}: p={lp.p} d={lp.d} torsion={tors}")
    out += [
        "",
        f"free shifts      {_seq(dec.free_shifts)}",
        f"torsion          {' '.join(f'({b},{c})' for b, c in dec.torsion) or 'none'}",
        f"cm_verdict       {str(rep.cm_verdict).lower()}",
        f"hilbert function {_seq(rep.hilbert_function_prefix)} ->",
        f"hilbert numer.   {_seq(rep.hilbert_series_numerator)}",
    ]
    return "\n".join(out) + "\n"


def discrepancy_text(entry):
    tag = f"known erratum {entry.erratum}" if entry.erratum else "UNEXPECTED"
    lines = [f"  {entry.aspect} [{tag}] ({entry.citation})"]
    lines.append(f"    paper:    {_jsonable(entry.paper)}")
    lines.append(f"    computed: {_jsonable(entry.computed)}")
    if entry.inherited:
        lines.append(f"    also explains: {', '.join(entry.inherited)}")
    return "\n".join(lines)


# ---------------------------------------------------------------- commands


def _emit(args, text):
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_analyze(args):
    rep = analyze(parse_gens(args.gens), prefix=args.hilbert_terms)
    if args.format == "json":
        _emit(args, dump_json(analysis_json(rep, args.max_rows)))
    elif args.format == "csv":
        rows = rep.apery_table[: args.max_rows] if args.max_rows else rep.apery_table
        _emit(args, table_csv(rep.row_labels, rows))
    else:
        _emit(args, analysis_text(rep, args.max_rows))
    return EXIT_OK


def _prediction_json(pred):
    out = {}
    if pred.apery is not None:
        out["apery_set"] = [_s(w) for w in sorted(pred.apery)]
    if pred.table is not None:
        out["apery_table"] = [[_s(w) for w in row] for row in pred.table]
    if pred.order_counts is not None:
        out["order_counts"] = {str(k): v for k, v in sorted(pred.order_counts.items())}
    if pred.decomposition is not None:
        out["decomposition"] = {
            "free": list(pred.decomposition.free_shifts),
            "torsion": [list(x) for x in pred.decomposition.torsion],
        }
    if pred.hilbert_values is not None:
        out["hilbert_function"] = list(pred.hilbert_values)
    if pred.hilbert_numerator is not None:
        out["hilbert_numerator"] = list(pred.hilbert_numerator)
    return out


def _prediction_text(pred):
    lines = ["predicted"]
    if pred.apery is not None:
        lines.append(f"  apery set        {{{_seq(sorted(pred.apery))}}}")
    if pred.order_counts is not None:
        lines.append(f"  order counts     {_seq(f'{k}:{v}' for k, v in sorted(pred.order_counts.items()))}")
    if pred.decomposition is not None:
        lines.append(f"  free shifts      {_seq(pred.decomposition.free_shifts)}")
        tors = " ".join(f"({b},{c})" for b, c in pred.decomposition.torsion) or "none"
        lines.append(f"  torsion          {tors}")
    if pred.hilbert_values is not None:
        lines.append(f"  hilbert function {_seq(pred.hilbert_values)} ->")
    if pred.hilbert_numerator is not None:
        lines.append(f"  hilbert numer.   {_seq(pred.hilbert_numerator)}")
    return "\n".join(lines) + "\n"


def _family_prediction(spec):
    try:
        return predict(spec)
    except SemigroupError:
        return None


def cmd_family(args):
    spec = build_spec(KINDS[args.kind], args)
    pred = _family_prediction(spec)
    layout = pred.apery_layout if pred is not None and pred.table is not None else None
    rep = analyze(spec.generators, layout=layout)
    report = verify_family(spec)
    if args.format == "json":
        obj = analysis_json(rep, args.max_rows)
        obj["family"] = spec.label
        obj["case"] = spec.case
        obj["verdict"] = report.verdict
        obj["predicted"] = _prediction_json(pred) if pred is not None else None
        obj["discrepancies"] = [discrepancy_json(e) for e in report.entries]
        _emit(args, dump_json(obj))
    elif args.format == "csv":
        _emit(args, table_csv(rep.row_labels, rep.apery_table))
    else:
        head = f"{spec.label}" + (f" [{spec.case}]" if spec.case else "")
        parts = [head, analysis_text(rep, args.max_rows)]
        parts.append(_prediction_text(pred) if pred is not None else "predicted        (no closed form for this case)\n")
        parts.append(f"verdict          {report.verdict}\n")
        parts.extend(discrepancy_text(e) + "\n" for e in report.entries)
        _emit(args, "\n".join(p.rstrip("\n") for p in parts) + "\n")
    return EXIT_OK


def cmd_table(args):
    if args.kind:
        spec = build_spec(KINDS[args.kind], args)
        pred = _family_prediction(spec)
        layout = pred.apery_layout if pred is not None and pred.table is not None else None
        gens = spec.generators
    else:
        _need(args, "gens")
        gens, layout = parse_gens(args.gens), None
    rep = analyze(gens, layout=layout)
    rows = rep.apery_table[: args.max_rows] if args.max_rows else rep.apery_table
    labels = rep.row_labels
    if args.format == "json":
        _emit(args, dump_json({"generators": [_s(g) for g in rep.generators],
                               "apery_table": [[_s(w) for w in row] for row in rows],
                               "row_labels": list(labels[: len(rows)])}))
    elif args.format == "csv":
        _emit(args, table_csv(labels, rows))
    else:
        _emit(args, table_text(labels, rows))
    return EXIT_OK


def _sweep_specs(kind, args):
    """Specs for one family under the given range flags (defaults when absent)."""
    rng = {n: parse_range(getattr(args, n)) for n in ("e", "q", "d", "n", "b") if getattr(args, n)}
    if kind == SYMMETRIC:
        kw = {k + "s": v for k, v in rng.items() if k in ("e", "q", "d")}
        return symmetric_sweep(**kw)
    if kind == ALMOST_MAXIMAL:
        es = rng.get("e", range(4, 8))
        if "d" in rng or "b" in rng:
            out = []
            for e in es:
                for d in rng.get("d", range(2, 21)):
                    for b in rng.get("b", range(e + 2, 61)):
                        try:
                            out.append(make_almost_maximal(e, d, b))
                        except SemigroupError:
                            pass
            return out
        return almost_maximal_sweep(es)
    if "e" not in rng and "n" not in rng:
        return unbounded_sweep()
    out = []
    for e in rng.get("e", [4, 5]):
        ns = rng.get("n", {4: range(5, 10), 5: (8, 10, 12)}.get(e, ()))
        for n in ns:
            try:
                out.append(make_unbounded(n, e))
            except SemigroupError:
                pass
    return out


def run_verify(specs, jobs=1):
    if jobs > 1 and len(specs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(verify_family, specs))
    return [verify_family(s) for s in specs]


def verify_exit_code(reports, allow_known):
    verdicts = {r.verdict for r in reports}
    if "unexpected" in verdicts:
        return EXIT_UNEXPECTED
    if "known_errata_only" in verdicts:
        return EXIT_KNOWN if allow_known else EXIT_UNEXPECTED
    return EXIT_OK


def cmd_verify(args):
    kinds = list(KINDS.values()) if args.kind == "all" else [KINDS[args.kind]]
    if args.kind == "all" and any(getattr(args, n) for n in ("e", "q", "d", "n", "b")):
        raise UsageError("range flags apply to a single family; drop them for 'verify all'")
    specs = [s for k in kinds for s in _sweep_specs(k, args)]
    if not specs:
        raise UsageError("no valid family members in the given ranges")
    reports = run_verify(specs, args.jobs)
    summary = {"clean": 0, "known_errata_only": 0, "unexpected": 0}
    for r in reports:
        summary[r.verdict] += 1
    code = verify_exit_code(reports, args.allow_known)
    if args.format == "json":
        obj = {
            "reports": [
                {
                    "family": r.family.label,
                    "case": r.family.case,
                    "generators": [_s(g) for g in r.family.generators],
                    "verdict": r.verdict,
                    "discrepancies": [discrepancy_json(e) for e in r.entries],
                }
                for r in reports
            ],
            "summary": summary,
            "exit_code": code,
        }
        _emit(args, dump_json(obj))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["family", "generators", "verdict", "aspect", "erratum"])
        for r in reports:
            gens = " ".join(map(str, r.family.generators))
            if not r.entries:
                w.writerow([r.family.label, gens, r.verdict, "", ""])
            for e in r.entries:
                w.writerow([r.family.label, gens, r.verdict, e.aspect, e.erratum or ""])
        _emit(args, buf.getvalue())
    else:
        lines = []
        for r in reports:
            case = f" [{r.family.case}]" if r.family.case else ""
            lines.append(f"{r.family.label}{case} <{_seq(r.family.generators)}>: {r.verdict}")
            lines.extend(discrepancy_text(e) for e in r.entries)
        lines.append(
            f"summary: clean={summary['clean']} known_errata_only={summary['known_errata_only']} "
            f"unexpected={summary['unexpected']}"
        )
        _emit(args, "\n".join(lines) + "\n")
    return code


# -------------------------------------------------------------------- main


def _common(p, family_flags=True):
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--out", metavar="FILE", help="write output here instead of stdout")
    if family_flags:
        for name in ("e", "q", "d", "n", "b"):
            p.add_argument(f"--{name}", metavar="N|A..B")


def build_parser():
    parser = _Parser(prog="apery", description="Numerical semigroup invariants and family audits.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="full report for a generator list")
    p.add_argument("--gens", required=True, help="comma-separated generators, e.g. 9,11,35,37")
    p.add_argument("--max-rows", type=int, help="print at most this many table rows")
    p.add_argument("--hilbert-terms", type=int, help="number of Hilbert function values to list")
    _common(p, family_flags=False)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("family", help="build a family member and compare with its closed forms")
    p.add_argument("kind", choices=sorted(KINDS))
    p.add_argument("--max-rows", type=int)
    _common(p)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", help="audit closed forms over parameter ranges")
    p.add_argument("kind", choices=sorted(KINDS) + ["all"])
    p.add_argument("--allow-known", action="store_true", help="tolerate listed errata (exit 2 instead of 3)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    _common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="print an Apéry table")
    p.add_argument("kind", nargs="?", choices=sorted(KINDS), help="use a family member and its printed column order")
    p.add_argument("--gens")
    p.add_argument("--max-rows", type=int)
    _common(p)
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, SemigroupError, OverflowError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
