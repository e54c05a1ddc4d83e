"""Command-line front end: verification runs, dimension tables, TQFT values.

Commands: verify, betti, tqft, product, radical, group-info.  JSON is
the canonical output format; --format csv mirrors the tables.  The
HF_BUDGET environment variable overrides the dense-entry budget.
"""

from __future__ import annotations

import argparse
import os
import sys

from .cochains import DEFAULT_ENTRY_BUDGET
from .errors import (ArityMismatchError, DegeneratePairingError, NotAGroupError,
                     SizeGuardError, SpecParseError)
from .groups import group_from_spec, load_group_table
from .homology import Complex, betti_table, radical_basis
from .scalars import Field
from .serialize import (betti_report_to_csv, betti_report_to_dict, cochain_to_dict,
                        dump_json, load_cochain, parse_generator_cochain,
                        report_to_csv, save_cochain)
from .tqft import (CobordismWord, evaluate_cobordism, frobenius_data,
                   handle_element, hom_count_oracle, surface_invariant)
from .verify import RunConfig, run_verification


def _budget_default() -> int:
    env = os.environ.get("HF_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise SpecParseError(f"HF_BUDGET={env!r} is not an integer") from None
    return DEFAULT_ENTRY_BUDGET


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--group", default="C2", help="group spec: C<n>, D<n>, S<n>, products with x")
    p.add_argument("--field", default="Q", help='coefficients: "Q" or "F:<p>"')
    p.add_argument("--max-degree", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--budget", type=int, default=None, help="dense entry budget")
    p.add_argument("--out", default=None, help="output path (stdout otherwise)")
    p.add_argument("--format", dest="fmt", choices=("json", "csv"), default="json")


def _config(args) -> RunConfig:
    return RunConfig(
        group_spec=args.group,
        field_spec=args.field,
        max_degree=args.max_degree,
        budget=args.budget if args.budget is not None else _budget_default(),
        seed=args.seed,
        trials=args.trials,
        out=args.out,
        fmt=args.fmt,
    )


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_verify(args) -> int:
    cfg = _config(args)
    report = run_verification(cfg)
    if cfg.fmt == "csv":
        _emit(report_to_csv(report), cfg.out)
    else:
        _emit(dump_json(report, None), cfg.out)
    return 0 if report["all_passed"] else 1


def cmd_betti(args) -> int:
    cfg = _config(args)
    selector = Complex.parse(args.selector)
    report = betti_table(cfg.group(), cfg.field(), cfg.max_degree, selector,
                         budget=cfg.budget)
    if cfg.fmt == "csv":
        _emit(betti_report_to_csv(report), cfg.out)
    else:
        _emit(dump_json(betti_report_to_dict(report), None), cfg.out)
    return 0


def cmd_tqft(args) -> int:
    cfg = _config(args)
    data = frobenius_data(cfg.group(), cfg.field())
    f = data.field
    result = {
        "group": cfg.group_spec,
        "field": cfg.field_spec,
        "dim": data.dim,
        "handle": [f.format_scalar(c) for c in handle_element(data)],
    }
    if args.word:
        word = CobordismWord.parse(args.word)
        value = evaluate_cobordism(data, word)
        if word.outputs == 0:
            result["word"] = args.word
            result["value"] = f.format_scalar(value)
        else:
            result["word"] = args.word
            result["state"] = {
                ",".join(map(str, k)): f.format_scalar(v) for k, v in sorted(value.items())
            }
    else:
        z = surface_invariant(data, args.genus)
        result["genus"] = args.genus
        result["value"] = f.format_scalar(z)
        if f.is_rationals and args.genus >= 1:
            oracle = hom_count_oracle(cfg.group(), args.genus, budget=cfg.budget)
            result["surface_group_hom_count"] = oracle
            result["oracle_consistent"] = bool(z * cfg.group().order == oracle)
    if cfg.fmt == "csv":
        lines = ["key,value"] + [f"{k},{v}" for k, v in result.items()
                                 if not isinstance(v, (list, dict))]
        _emit("\n".join(lines) + "\n", cfg.out)
    else:
        _emit(dump_json(result, None), cfg.out)
    return 0


def cmd_product(args) -> int:
    cfg = _config(args)
    group = cfg.group()
    fld = cfg.field()

    def load(spec: str):
        if spec.strip().startswith("("):
            return parse_generator_cochain(group, fld, spec)
        return load_cochain(spec, budget=cfg.budget)

    a = load(args.lhs)
    b = load(args.rhs)
    from . import circle_product, convolution_cup, simplicial_cup, simplicial_cup_one
    ops = {"conv": convolution_cup, "simplicial": simplicial_cup,
           "cup1": simplicial_cup_one, "prelie": circle_product}
    result = ops[args.op](a, b, budget=cfg.budget)
    payload = cochain_to_dict(result)
    if cfg.out:
        save_cochain(result, cfg.out)
    else:
        _emit(dump_json(payload, None), None)
    return 0


def cmd_radical(args) -> int:
    cfg = _config(args)
    basis, report = radical_basis(cfg.group(), cfg.field(), args.degree,
                                  budget=cfg.budget)
    payload = {"report": report,
               "basis": [cochain_to_dict(b) for b in basis] if args.include_basis else None}
    if cfg.fmt == "csv":
        lines = ["key,value"] + [f"{k},{v}" for k, v in report.items()]
        _emit("\n".join(lines) + "\n", cfg.out)
    else:
        _emit(dump_json(payload, None), cfg.out)
    return 0


def cmd_group_info(args) -> int:
    cfg = _config(args)
    group = load_group_table(args.table) if args.table else group_from_spec(cfg.group_spec)
    classes = group.conjugacy_classes()
    payload = {
        "name": group.name,
        "order": group.order,
        "identity": group.id,
        "labels": group.labels,
        "conjugacy_classes": classes,
        "class_sizes": [len(c) for c in classes],
        "inverse_table": group.inv_table,
    }
    _emit(dump_json(payload, None), cfg.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="hochfrob",
        description="Exact Hochschild cochain algebra of finite group rings")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the full property suite")
    _add_common(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("betti", help="exact (co)homology dimension table")
    _add_common(p)
    p.add_argument("--selector", default="bstar",
                   help="chain | bstar | delta | we | v")
    p.set_defaults(fn=cmd_betti)

    p = sub.add_parser("tqft", help="surface invariants and cobordism words")
    _add_common(p)
    p.add_argument("--genus", type=int, default=1)
    p.add_argument("--word", default=None,
                   help='cobordism word, e.g. "unit comul mul counit"')
    p.set_defaults(fn=cmd_tqft)

    p = sub.add_parser("product", help="product of two cochain files")
    _add_common(p)
    p.add_argument("--op", choices=("conv", "simplicial", "cup1", "prelie"),
                   default="conv")
    p.add_argument("lhs", help="cochain JSON path or generator shorthand")
    p.add_argument("rhs", help="cochain JSON path or generator shorthand")
    p.set_defaults(fn=cmd_product)

    p = sub.add_parser("radical", help="pairing-radical basis and V comparison")
    _add_common(p)
    p.add_argument("--degree", type=int, default=1)
    p.add_argument("--include-basis", action="store_true")
    p.set_defaults(fn=cmd_radical)

    p = sub.add_parser("group-info", help="inspect a group spec or table file")
    _add_common(p)
    p.add_argument("--table", default=None, help="CSV multiplication table path")
    p.set_defaults(fn=cmd_group_info)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except SizeGuardError as exc:
        print(f"size guard: {exc}", file=sys.stderr)
        return 3
    except DegeneratePairingError as exc:
        print(f"degenerate pairing: {exc}", file=sys.stderr)
        return 4
    except (SpecParseError, NotAGroupError, ArityMismatchError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
