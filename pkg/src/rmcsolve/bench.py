"""Differential benchmark: every algorithm on every generated instance.

CSV columns, in order: seed, n, l, sigma, d, k, algorithm, answer, nodes,
micros. ``answer`` is YES, NO or SKIP (algorithm not applicable after
normalization). Records are ordered by seed, then by the requested
algorithm order.
"""

from __future__ import annotations

import csv
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass, fields
from typing import IO, Sequence

from .dispatch import AlgorithmChoice, applicable, solve_conrmc
from .generate import gen_instance
from .model import Verdict, normalize


class BenchDisagreement(RuntimeError):
    def __init__(self, seed: int, answers: dict[str, str]):
        super().__init__(f"algorithms disagree on seed {seed}: {answers}")
        self.seed = seed
        self.answers = answers


@dataclass(frozen=True)
class BenchConfig:
    seeds: int = 100
    start_seed: int = 0
    n: int = 5
    l: int = 8
    sigma: int = 2
    d: int = 2
    k: int = 2
    planted: bool = True
    algorithms: tuple[str, ...] = ("column", "budget", "nsd")
    workers: int = 1


@dataclass(frozen=True)
class BenchRecord:
    seed: int
    n: int
    l: int
    sigma: int
    d: int
    k: int
    algorithm: str
    answer: str
    nodes: int
    micros: int


CSV_FIELDS = tuple(f.name for f in fields(BenchRecord))


def _run_seed(args: tuple[BenchConfig, int]) -> list[BenchRecord]:
    cfg, seed = args
    inst = gen_instance(seed, cfg.n, cfg.l, cfg.sigma, cfg.d, cfg.k, cfg.planted)
    norm = normalize(inst)
    out = []
    for name in cfg.algorithms:
        choice = AlgorithmChoice(name)
        base = dict(seed=seed, n=cfg.n, l=cfg.l, sigma=cfg.sigma, d=cfg.d, k=cfg.k,
                    algorithm=choice.value)
        if norm.verdict is Verdict.OPEN and not applicable(choice, norm.instance):
            out.append(BenchRecord(**base, answer="SKIP", nodes=0, micros=0))
            continue
        start = time.perf_counter_ns()
        res = solve_conrmc(inst, choice)
        micros = (time.perf_counter_ns() - start) // 1000
        out.append(BenchRecord(**base, answer=res.answer, nodes=res.stats.nodes, micros=micros))
    return out


def check_agreement(records: Sequence[BenchRecord]) -> None:
    by_seed: dict[int, dict[str, str]] = {}
    for r in records:
        if r.answer != "SKIP":
            by_seed.setdefault(r.seed, {})[r.algorithm] = r.answer
    for seed, answers in by_seed.items():
        if len(set(answers.values())) > 1:
            raise BenchDisagreement(seed, answers)


def run_bench(cfg: BenchConfig) -> list[BenchRecord]:
    jobs = [(cfg, seed) for seed in range(cfg.start_seed, cfg.start_seed + cfg.seeds)]
    if cfg.workers > 1:
        with ProcessPoolExecutor(cfg.workers) as pool:
            batches = list(pool.map(_run_seed, jobs))
    else:
        batches = [_run_seed(job) for job in jobs]
    records = [r for batch in batches for r in batch]
    check_agreement(records)
    return records


def write_csv(records: Sequence[BenchRecord], fh: IO[str]) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for r in records:
        writer.writerow(astuple(r))
