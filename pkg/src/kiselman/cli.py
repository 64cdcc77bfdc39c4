"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget
exceeded.  All randomized subcommands require an explicit --seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from kiselman import core, enumeration, level_metric, morphisms, selftest, stochastic

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

DEFAULT_BUDGET = int(os.environ.get("KISELMAN_BUDGET", 5_000_000))


def _parse_probs(text: str) -> tuple[float, ...]:
    return tuple(float(tok) for tok in text.replace(",", " ").split())


def _parse_set(text: str) -> frozenset[int]:
    cleaned = text.replace(",", " ").strip()
    return frozenset(int(tok) for tok in cleaned.split()) if cleaned else frozenset()


def _element(args, attr="word") -> core.Element:
    return core.reduce(args.n, core.parse_word(getattr(args, attr)))


def _emit(args, plain: str, record: dict) -> None:
    if args.format == "json":
        print(json.dumps(record, sort_keys=True))
    elif args.format == "tsv":
        print("\t".join(str(v) for v in record.values()))
    else:
        print(plain)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kiselman",
        description="exact computation and simulation in the monoids K_n",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, *, rank=True):
        cmd = sub.add_parser(name, help=help_text)
        if rank:
            cmd.add_argument("--n", type=int, required=True, help="rank (>= 2)")
        cmd.add_argument(
            "--format", choices=("json", "tsv", "plain"), default="plain"
        )
        return cmd

    cmd = add("reduce", "canonical form of a word")
    cmd.add_argument("--word", required=True)

    cmd = add("mul", "product of two elements")
    cmd.add_argument("--left", required=True)
    cmd.add_argument("--right", required=True)

    cmd = add("tau", "apply the index-reversing antiautomorphism")
    cmd.add_argument("--word", required=True)

    cmd = add("content", "occurring generator indices")
    cmd.add_argument("--word", required=True)

    cmd = add("delete", "delete the generators of a set from an element")
    cmd.add_argument("--word", required=True)
    cmd.add_argument("--set", required=True, help="indices, e.g. '1 3'")

    cmd = add("level", "level of an element")
    cmd.add_argument("--word", required=True)

    cmd = add("m", "least i with x*e_[i] equal to the zero")
    cmd.add_argument("--word", required=True)

    cmd = add("dist", "ultrametric distance between two elements")
    cmd.add_argument("--x", required=True)
    cmd.add_argument("--y", required=True)

    cmd = add("enumerate", "list all elements of K_n")
    cmd.add_argument("--cap", type=int, default=1_000_000)
    cmd.add_argument("--table", action="store_true", help="emit (n, |K_n|) TSV up to --n")

    cmd = add("ball", "metric ball around an element")
    cmd.add_argument("--center", default="")
    cmd.add_argument("--r", type=int, required=True)

    cmd = add("sphere", "metric sphere around an element")
    cmd.add_argument("--center", default="")
    cmd.add_argument("--r", type=int, required=True)

    add("rset", "all x with x*a_1 equal to the zero")

    cmd = add("chain", "transition matrix of the level chain")
    cmd.add_argument("--p", required=True, help="comma-separated probabilities")

    cmd = add("pmf", "exact hitting-time distribution")
    cmd.add_argument("--p", required=True)
    cmd.add_argument("--k", type=int, default=None, help="truncation (default: tail < 1e-9)")

    cmd = add("simulate", "seeded Monte Carlo hitting times")
    cmd.add_argument("--p", required=True)
    cmd.add_argument("--trials", type=int, required=True)
    cmd.add_argument("--seed", type=int, required=True)
    cmd.add_argument("--mode", choices=("level", "full"), default="full")
    cmd.add_argument("--out", default=None, help="write the report JSON here")

    cmd = add("verify", "compare a simulation report against the exact pmf")
    cmd.add_argument("--report", required=True, help="report JSON file")
    cmd.add_argument("--tv-bound", type=float, default=0.01)
    cmd.add_argument("--pvalue-floor", type=float, default=1e-3)

    add("selftest", "run the full invariant suite at rank <= 3", rank=False)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK

    try:
        return _dispatch(args)
    except enumeration.BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _dispatch(args) -> int:
    if args.command == "reduce":
        x = _element(args)
        _emit(args, str(x), {"element": core.format_word(x.letters), "rank": args.n})
    elif args.command == "mul":
        x = core.reduce(args.n, core.parse_word(args.left))
        y = core.reduce(args.n, core.parse_word(args.right))
        z = core.multiply(x, y)
        _emit(args, str(z), {"element": core.format_word(z.letters), "rank": args.n})
    elif args.command == "tau":
        z = core.tau(_element(args))
        _emit(args, str(z), {"element": core.format_word(z.letters), "rank": args.n})
    elif args.command == "content":
        members = sorted(core.content(_element(args)))
        _emit(args, " ".join(map(str, members)), {"content": members})
    elif args.command == "delete":
        z = morphisms.delete(_parse_set(args.set), _element(args))
        _emit(args, str(z), {"element": core.format_word(z.letters), "rank": args.n})
    elif args.command == "level":
        x = _element(args)
        lvl = level_metric.level_by_definition(x)
        _emit(args, str(lvl), {"element": core.format_word(x.letters), "level": lvl})
    elif args.command == "m":
        x = _element(args)
        val = level_metric.m_function(x)
        _emit(args, str(val), {"element": core.format_word(x.letters), "m": val})
    elif args.command == "dist":
        x = core.reduce(args.n, core.parse_word(args.x))
        y = core.reduce(args.n, core.parse_word(args.y))
        d = level_metric.distance(x, y)
        _emit(
            args,
            str(d),
            {"x": core.format_word(x.letters), "y": core.format_word(y.letters), "d": d},
        )
    elif args.command == "enumerate":
        if args.table:
            for n, count in enumeration.cardinality_table(max_rank=args.n, cap=args.cap):
                print(f"{n}\t{count}")
            return EXIT_OK
        universe = enumeration.enumerate_elements(args.n, cap=args.cap)
        if not universe.complete:
            print("enumeration incomplete: cap exceeded", file=sys.stderr)
            return EXIT_BUDGET
        if args.format == "json":
            print(json.dumps([core.format_word(x.letters) for x in universe]))
        else:
            for x in universe:
                print(core.format_word(x.letters))
    elif args.command in ("ball", "sphere", "rset"):
        universe = enumeration.enumerate_elements(args.n)
        if args.command == "rset":
            members = level_metric.r_set(universe)
        else:
            center = core.reduce(args.n, core.parse_word(args.center))
            fn = level_metric.ball if args.command == "ball" else level_metric.sphere
            members = fn(universe, center, args.r)
        if args.format == "json":
            print(json.dumps([core.format_word(x.letters) for x in members]))
        else:
            for x in members:
                print(core.format_word(x.letters))
    elif args.command == "chain":
        chain = stochastic.transition_matrix(_parse_probs(args.p))
        if args.format == "json":
            print(json.dumps({"matrix": chain.matrix.tolist(), "initial": chain.initial.tolist()}))
        else:
            for row in chain.matrix:
                print(" ".join(f"{v:.12g}" for v in row))
    elif args.command == "pmf":
        pmf = stochastic.exact_hitting_pmf(_parse_probs(args.p), k_max=args.k)
        if args.format == "json":
            print(json.dumps({"probs": pmf.probs.tolist(), "tail_mass": pmf.tail_mass,
                              "mean": pmf.mean()}))
        else:
            for k, prob in enumerate(pmf.probs):
                print(f"P(T={k})={prob:.12g}")
            print(f"tail={pmf.tail_mass:.12g}")
    elif args.command == "simulate":
        p = _parse_probs(args.p)
        report = stochastic.simulate(args.n, p, trials=args.trials, seed=args.seed, mode=args.mode)
        pmf = stochastic.exact_hitting_pmf(p)
        verdict = stochastic.verify_distribution(report, pmf)
        payload = json.loads(report.to_json())
        payload["tv_vs_exact"] = verdict.tv_distance
        payload["chi2_pvalue"] = verdict.chi2_pvalue
        payload["verdict"] = "pass" if verdict.passed else "fail"
        text = json.dumps(payload, sort_keys=True)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
        print(text)
        if not verdict.passed:
            return EXIT_VERIFY_FAILED
    elif args.command == "verify":
        with open(args.report, encoding="utf-8") as fh:
            payload = json.load(fh)
        report = stochastic.SimulationReport(
            rank=payload["rank"],
            p=tuple(payload["p"]),
            trials=payload["trials"],
            seed=payload["seed"],
            mode=payload["mode"],
            rng=payload["rng"],
            histogram={int(k): v for k, v in payload["histogram"].items()},
            mean=payload["mean"],
            variance=payload["variance"],
            crosscheck_trials=payload["crosscheck_trials"],
            crosscheck_failures=payload["crosscheck_failures"],
        )
        pmf = stochastic.exact_hitting_pmf(np.asarray(report.p))
        verdict = stochastic.verify_distribution(
            report, pmf, tv_bound=args.tv_bound, pvalue_floor=args.pvalue_floor
        )
        print(json.dumps({
            "tv_distance": verdict.tv_distance,
            "chi2_pvalue": verdict.chi2_pvalue,
            "passed": verdict.passed,
        }, sort_keys=True))
        if not verdict.passed:
            return EXIT_VERIFY_FAILED
    elif args.command == "selftest":
        results = selftest.run_selftest()
        failed = 0
        for name, ok in results:
            print(f"{'PASS' if ok else 'FAIL'}  {name}")
            failed += not ok
        print(f"{len(results) - failed}/{len(results)} checks passed")
        if failed:
            return EXIT_VERIFY_FAILED
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
