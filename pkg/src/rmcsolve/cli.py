"""Command-line front end.

Exit codes: 0 solved (either answer), 1 verification failed or bench
disagreement, 2 usage error, 3 format or I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import bench as benchmod
from .dispatch import (AlgorithmChoice, MinLrmcMode, solve_conrmc, solve_minlrmc,
                       verify_witness)
from .fileformat import (FormatError, parse_budgets, parse_witness, read_instance,
                         serialize_instance)
from .generate import gen_instance
from .model import ConRmcInstance, UsageError, Verdict, normalize
from .oracle import OracleBudgetExceeded, brute_conrmc, brute_minlrmc
from .twosat import encode_conrmc_d1

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_FORMAT = 0, 1, 2, 3
PROBLEMS = ("conrmc", "minrmc", "minlrmc")


def _add_budget_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("instance", help="instance file")
    p.add_argument("--problem", choices=PROBLEMS, default="conrmc")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--d", type=int, help="uniform distance bound")
    group.add_argument("--d-file", help="file with one budget, or one per row")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rmcsolve",
                                     description="Exact radius-minimizing matrix completion.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="decide an instance and print a witness")
    _add_budget_args(p)
    p.add_argument("--algo", choices=[c.value for c in AlgorithmChoice], default="auto")
    p.add_argument("--mode", choices=[m.value for m in MinLrmcMode], default="pivot-full",
                   help="MinLRMC pivot reduction")
    p.add_argument("--json", action="store_true")
    p.add_argument("--dump-dimacs", metavar="PATH",
                   help="write the 2-SAT formula of the normalized instance")

    p = sub.add_parser("verify", help="check a witness against an instance")
    _add_budget_args(p)
    p.add_argument("--witness-file", required=True)

    p = sub.add_parser("oracle", help="decide by exhaustive enumeration")
    _add_budget_args(p)
    p.add_argument("--budget", type=int, default=None, help="maximum enumeration count")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("gen", help="write a random instance")
    _add_gen_args(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", help="output file (default stdout)")

    p = sub.add_parser("bench", help="run algorithms on generated instances, write CSV")
    _add_gen_args(p)
    p.add_argument("--seeds", type=int, default=100, help="number of instances")
    p.add_argument("--start-seed", type=int, default=0)
    p.add_argument("--algos", default="column,budget,nsd")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("-o", "--output", help="CSV file (default stdout)")
    return parser


def _add_gen_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--l", type=int, default=8)
    p.add_argument("--sigma", type=int, default=2)
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--planted", choices=("yes", "free"), default="yes")


def _budgets(args, parsed) -> tuple[int, ...]:
    n = parsed.matrix.n
    if args.d is not None:
        return (args.d,) * n
    if args.d_file is not None:
        path = Path(args.d_file)
        return parse_budgets(path.read_text(encoding="utf-8"), n, str(path))
    if parsed.budgets is not None:
        return parsed.budgets
    raise UsageError("no budgets: pass --d, --d-file or add a 'd:' line to the instance")


def _radius(args, budgets: tuple[int, ...]) -> int:
    if len(set(budgets)) > 1:
        raise UsageError(f"{args.problem} needs a single uniform radius")
    return budgets[0] if budgets else (args.d or 0)


def _report(outcome, alphabet, as_json: bool, micros: int, out) -> None:
    if as_json:
        doc = {
            "answer": outcome.answer,
            "witness": None if outcome.witness is None
            else [alphabet.token(s) for s in outcome.witness],
            "algorithm": outcome.algorithm,
            "nodes": outcome.stats.nodes,
            "micros": micros,
        }
        if outcome.pivot is not None:
            doc["pivot"] = outcome.pivot + 1
        print(json.dumps(doc, ensure_ascii=False), file=out)
        return
    print(outcome.answer, file=out)
    if outcome.yes:
        print(alphabet.render(outcome.witness), file=out)


def _cmd_solve(args, out) -> int:
    parsed = read_instance(args.instance)
    budgets = _budgets(args, parsed)
    matrix = parsed.matrix
    start = time.perf_counter_ns()
    if args.problem == "minlrmc":
        res = solve_minlrmc(matrix, _radius(args, budgets), args.mode, args.algo)
    else:
        if args.problem == "minrmc":
            _radius(args, budgets)
        inst = ConRmcInstance(matrix, budgets)
        if args.dump_dimacs:
            norm = normalize(inst)
            if norm.verdict is Verdict.OPEN:
                formula = encode_conrmc_d1(norm.instance)
                Path(args.dump_dimacs).write_text(formula.to_dimacs(), encoding="utf-8")
        res = solve_conrmc(inst, args.algo)
    micros = (time.perf_counter_ns() - start) // 1000
    _report(res, matrix.alphabet, args.json, micros, out)
    return EXIT_OK


def _cmd_oracle(args, out) -> int:
    parsed = read_instance(args.instance)
    budgets = _budgets(args, parsed)
    start = time.perf_counter_ns()
    if args.problem == "minlrmc":
        res = brute_minlrmc(parsed.matrix, _radius(args, budgets), args.budget)
    else:
        if args.problem == "minrmc":
            _radius(args, budgets)
        res = brute_conrmc(ConRmcInstance(parsed.matrix, budgets), args.budget)
    micros = (time.perf_counter_ns() - start) // 1000
    _report(res, parsed.matrix.alphabet, args.json, micros, out)
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    parsed = read_instance(args.instance)
    budgets = _budgets(args, parsed)
    path = Path(args.witness_file)
    witness = parse_witness(path.read_text(encoding="utf-8"), parsed.matrix.alphabet, str(path))
    inst = ConRmcInstance(parsed.matrix, budgets)
    if args.problem == "minlrmc":
        d = _radius(args, budgets)
        if not any(all(a == b for a, b in zip(witness, row) if b >= 0)
                   for row in parsed.matrix.rows):
            print("VIOLATION witness completes no row", file=out)
            return EXIT_FAIL
        inst = ConRmcInstance.uniform(parsed.matrix, d)
    bad = verify_witness(inst, witness)
    if bad is None:
        print("VALID", file=out)
        return EXIT_OK
    print(f"VIOLATION row {bad.row + 1} distance {bad.distance} budget {bad.budget}", file=out)
    return EXIT_FAIL


def _cmd_gen(args, out) -> int:
    inst = gen_instance(args.seed, args.n, args.l, args.sigma, args.d, args.k,
                        args.planted == "yes")
    text = serialize_instance(inst.matrix, inst.budgets)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        out.write(text)
    return EXIT_OK


def _cmd_bench(args, out) -> int:
    algos = tuple(a.strip() for a in args.algos.split(",") if a.strip())
    for a in algos:
        AlgorithmChoice(a)
    if AlgorithmChoice.AUTO.value in algos:
        raise UsageError("bench needs concrete algorithms, not 'auto'")
    cfg = benchmod.BenchConfig(seeds=args.seeds, start_seed=args.start_seed, n=args.n,
                               l=args.l, sigma=args.sigma, d=args.d, k=args.k,
                               planted=args.planted == "yes", algorithms=algos,
                               workers=args.workers)
    try:
        records = benchmod.run_bench(cfg)
    except benchmod.BenchDisagreement as exc:
        print(f"disagreement on seed {exc.seed}: {exc.answers}", file=sys.stderr)
        return EXIT_FAIL
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            benchmod.write_csv(records, fh)
    else:
        benchmod.write_csv(records, out)
    return EXIT_OK


_COMMANDS = {"solve": _cmd_solve, "verify": _cmd_verify, "oracle": _cmd_oracle,
             "gen": _cmd_gen, "bench": _cmd_bench}


def run_cli(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args, out)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except (UsageError, OracleBudgetExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_cli())
