"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 invalid input,
3 disconnected design, 4 search target unreached.
"""

from __future__ import annotations

import argparse
import sys

from . import reference
from .construct import augment, best_cyclic, cyclic_contraction, fill_entries, write_augmented_csv
from .designs import load_contraction, save_contraction
from .errors import AugDesignError, Disconnected, InvalidDesign
from .formulas import a_test, e_aug, e_con_from_a_abd, e_test
from .search import SearchConfig, search_contraction
from .spectra import contraction_cefs
from .verify import verify_formula, verify_spectrum, write_report

EXIT_OK, EXIT_VERIFY, EXIT_INVALID, EXIT_DISCONNECTED, EXIT_TARGET = 0, 1, 2, 3, 4


def _block(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"block must be comma-separated integers: {text!r}")


def _rows(text):
    out = []
    for part in text.split(","):
        try:
            v, k = part.split(":")
            out.append((int(v), int(k)))
        except ValueError:
            raise argparse.ArgumentTypeError(f"rows must look like 10:3,14:4, got {text!r}")
    return out


def _print_efficiency(report):
    print(f"E_con = {report.e:.6f}")
    print(f"UB (trivial/AM bound) = {report.ub_trivial:.6f}")
    print(f"%UB (trivial) = {report.pct_ub_trivial:.2f}")


def cmd_gen_cyclic(args):
    c = cyclic_contraction(args.v, args.block, k=args.k)
    report = contraction_cefs(c)
    if args.out:
        save_contraction(c, args.out)
    _print_efficiency(report)
    return EXIT_OK


def _search_config(args):
    return SearchConfig(
        seed=args.seed,
        restarts=args.restarts,
        max_iters_per_restart=args.max_iters,
        plateau_limit=args.plateau,
        target_e=getattr(args, "target", None),
    )


def cmd_search(args):
    result = search_contraction(args.v, args.k, _search_config(args))
    if args.out:
        save_contraction(result.best, args.out)
    _print_efficiency(result.report)
    print(f"evaluations = {result.evaluations}")
    print(f"restart = {result.restart_index}")
    if result.target_reached is False:
        print(f"target {args.target:.6f} not reached", file=sys.stderr)
        return EXIT_TARGET
    return EXIT_OK


def cmd_augment(args):
    c = load_contraction(args.infile)
    con = contraction_cefs(c)
    d = fill_entries(augment(c), args.seed)
    if args.out:
        write_augmented_csv(d, args.out)
    et = e_test(c.v, c.k, con.e)
    print(f"v* = {d.v_star}")
    print(f"E_con = {con.e:.6f}")
    print(f"E_aug = {e_aug(c.v, c.k, con.e):.6f}")
    print(f"E_test = {et:.6f}")
    print(f"A_test = {a_test(et):.4f}")
    return EXIT_OK


def cmd_verify(args):
    c = load_contraction(args.infile)
    formula = verify_formula(c, args.seed)
    spectrum = verify_spectrum(c, fill_entries(augment(c), args.seed))
    reports = [formula, spectrum]
    if args.out:
        write_report(reports, args.out)
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        print(f"{r.kind:<9} {status}  max deviation = {r.max_deviation:.3e}")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VERIFY


def _table1_rows(selected):
    if not selected:
        return reference.TABLE1
    out = []
    for vk in selected:
        if vk not in reference.TABLE1_BY_VK:
            raise InvalidDesign(f"({vk[0]}, {vk[1]}) is not a Table 1 row")
        out.append(reference.TABLE1_BY_VK[vk])
    return out


def cmd_tables(args):
    if args.which == "t2":
        rows = reference.TABLE2
        if args.rows:
            rows = [r for r in rows if (r.v, r.k) in set(args.rows)]
        print(f"{'v':>3} {'k':>2} {'A_abd':>7} {'E_con':>7} {'paper':>7} {'delta':>8}")
        for r in rows:
            e = e_con_from_a_abd(r.k, r.a_abd)
            print(f"{r.v:>3} {r.k:>2} {r.a_abd:>7.4f} {e:>7.4f} {r.e_con:>7.4f} {e - r.e_con:>+8.5f}")
        return EXIT_OK

    rows = _table1_rows(args.rows)
    if args.which == "t1-cyclic":
        print(f"{'v':>3} {'k':>2} {'E_con':>7} {'paper':>7} {'delta':>8}  block")
        for r in rows:
            c, rep = best_cyclic(r.v, r.k)
            block = ",".join(str(x) for x in c.rows[:, 0].tolist())
            print(f"{r.v:>3} {r.k:>2} {rep.e:>7.4f} {r.cyclic:>7.4f} {rep.e - r.cyclic:>+8.5f}  {{{block}}}")
        return EXIT_OK

    cfg = _search_config(args)
    print(f"{'v':>3} {'k':>2} {'E_con':>9} {'paper':>9} {'delta':>9} {'%UB(AM)':>8}")
    for r in rows:
        res = search_contraction(r.v, r.k, cfg)
        e = res.report.e
        print(
            f"{r.v:>3} {r.k:>2} {e:>9.6f} {r.searched:>9.6f} {e - r.searched:>+9.6f}"
            f" {res.report.pct_ub_trivial:>8.2f}"
        )
    return EXIT_OK


def _add_budget(p):
    defaults = SearchConfig()
    p.add_argument("--seed", type=int, default=defaults.seed)
    p.add_argument("--restarts", type=int, default=defaults.restarts)
    p.add_argument("--max-iters", type=int, default=defaults.max_iters_per_restart)
    p.add_argument("--plateau", type=int, default=defaults.plateau_limit)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="augdesign",
        description="Augmented designs in square arrays built from k x v contractions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-cyclic", help="cyclic contraction from an initial block")
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--block", type=_block, required=True, help="e.g. 1,2,4")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen_cyclic)

    p = sub.add_parser("search", help="interchange search for an efficient contraction")
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    _add_budget(p)
    p.add_argument("--target", type=float, default=None)
    p.add_argument("--out")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("augment", help="build and fill the v x v augmented design")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_augment)

    p = sub.add_parser("verify", help="check closed-form efficiencies against the spectrum")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tables", help="reproduce the published comparison tables")
    p.add_argument("--which", required=True, choices=["t1-cyclic", "t1-search", "t2"])
    p.add_argument("--rows", type=_rows, default=None, help="subset as v:k pairs, e.g. 10:3,14:4")
    _add_budget(p)
    p.set_defaults(func=cmd_tables)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except Disconnected as exc:
        print(f"error: disconnected design: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except (AugDesignError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
