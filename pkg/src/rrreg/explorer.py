"""Batch runs over families of ideals.

Records come out in the family's enumeration order no matter how the worker
pool schedules them (``Executor.map`` keeps order), and each one is written
and flushed as soon as it is next in line, so an interrupted run leaves a
valid prefix.  Timestamps appear only in the summary, which keeps the record
stream byte-identical between runs.
"""

from __future__ import annotations

import csv
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator

from .checks import CHECKS, DEFAULT_CHECKS, br_watch, run_checks
from .equigen import GeneratorSet, iter_generator_sets
from .errors import InternalCheckError
from .report import CSV_FIELDS, AnalysisReport, analyze, csv_row

FAMILIES = ("exhaustive", "neighbor", "middle", "threegen", "random")


@dataclass(frozen=True)
class ExploreJob:
    family: str
    d: int
    checks: tuple[str, ...] = DEFAULT_CHECKS
    count: int = 0
    seed: int = 0
    watch_trials: int = 0
    field: str | int = "q"
    output: str | None = None
    fmt: str = "jsonl"

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        if self.d < 1:
            raise ValueError("d must be positive")
        unknown = [c for c in self.checks if c not in CHECKS]
        if unknown:
            raise ValueError(f"unknown checks: {', '.join(unknown)}")
        if self.fmt not in ("jsonl", "csv"):
            raise ValueError("format must be jsonl or csv")
        if self.family == "random" and self.count < 1:
            raise ValueError("the random family needs a positive count")


def members(job: ExploreJob) -> Iterator[GeneratorSet]:
    d = job.d
    if job.family == "exhaustive":
        yield from iter_generator_sets(d)
    elif job.family == "neighbor":
        if d < 2:
            return
        for E in iter_generator_sets(d):
            if 1 in E.A:
                yield E
    elif job.family == "middle":
        for a in range(1, d):
            for b in range(a, d):
                yield GeneratorSet(d, [0, d, *range(a, b + 1)])
    elif job.family == "threegen":
        for a in range(1, d):
            yield GeneratorSet(d, [0, a, d])
    else:
        yield from random_family(d, job.count, job.seed)


def random_family(d: int, count: int, seed: int) -> list[GeneratorSet]:
    """``count`` subsets of the interior (distinct while there are enough)."""
    rng = random.Random(f"family:{d}:{seed}")
    total = 1 << max(d - 1, 0)
    if count <= total:
        masks = rng.sample(range(total), count)
    else:
        masks = [rng.randrange(total) for _ in range(count)]
    return [GeneratorSet(d, [0, d] + [a for a in range(1, d) if m >> (a - 1) & 1]) for m in masks]


def evaluate(E: GeneratorSet, checks=DEFAULT_CHECKS, watch_trials: int = 0, seed: int = 0, field="q") -> dict:
    """One record: the report fields plus per-check verdicts."""
    try:
        rep = analyze(E)
    except InternalCheckError as exc:
        return {"d": E.d, "A": E.exponents, "error": str(exc), "checks": {c: "fail" for c in checks}}
    rec = rep.to_dict()
    rec["checks"] = run_checks(E, checks, rep)
    if watch_trials:
        rec["br_watch"] = br_watch(E, rep, watch_trials, seed, field)
        rec["checks"]["sampled_reductions"] = "pass" if rec["br_watch"]["consistent"] else "fail"
    return rec


def _evaluate_args(args):
    return evaluate(*args)


class _Writer:
    def __init__(self, path: str | None, fmt: str, check_names):
        self.fh = None
        self.fmt = fmt
        if path is None:
            return
        p = Path(path)
        fresh = not p.exists() or p.stat().st_size == 0
        self.fh = open(p, "a", newline="", encoding="utf-8")
        if fmt == "csv":
            cols = CSV_FIELDS + [f"check_{c}" for c in (*check_names, "sampled_reductions")]
            cols += ["br_lower_bound", "br_watch"]
            self.csv = csv.DictWriter(self.fh, fieldnames=cols)
            if fresh:
                self.csv.writeheader()

    def write(self, rec: dict):
        if self.fh is None:
            return
        if self.fmt == "jsonl":
            self.fh.write(json.dumps(rec, sort_keys=True) + "\n")
        else:
            row = {"d": rec["d"], "A": " ".join(map(str, rec["A"]))}
            if "error" not in rec:
                row = csv_row(AnalysisReport.from_dict(rec))
            for c, v in rec["checks"].items():
                if f"check_{c}" in self.csv.fieldnames:
                    row[f"check_{c}"] = v
            w = rec.get("br_watch")
            if w:
                row["br_lower_bound"] = w["lower_bound_br"]
                row["br_watch"] = "needs exhaustive verification" if w["watch"] else ""
            self.csv.writerow(row)
        self.fh.flush()

    def close(self):
        if self.fh is not None:
            self.fh.close()


@dataclass
class Summary:
    job: dict
    records: int = 0
    failures: list = field(default_factory=list)
    watch: list = field(default_factory=list)
    check_counts: dict = field(default_factory=dict)
    started: str = ""
    finished: str = ""
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "job": self.job,
            "records": self.records,
            "failures": self.failures,
            "watch": self.watch,
            "check_counts": self.check_counts,
            "ok": self.ok,
            "started": self.started,
            "finished": self.finished,
            "seconds": round(self.seconds, 3),
        }


def run_job(job: ExploreJob, workers: int = 1, on_record=None) -> Summary:
    """Evaluate every member of the family and stream records to ``job.output``."""
    summary = Summary(job={k: getattr(job, k) for k in ("family", "d", "count", "seed", "watch_trials", "field")})
    summary.job["checks"] = list(job.checks)
    summary.started = time.strftime("%Y-%m-%dT%H:%M:%S")
    t0 = time.perf_counter()
    args = [(E, job.checks, job.watch_trials, job.seed, job.field) for E in members(job)]
    writer = _Writer(job.output, job.fmt, job.checks)
    try:
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                _consume(pool.map(_evaluate_args, args, chunksize=max(1, len(args) // (8 * workers))), writer, summary, on_record)
        else:
            _consume(map(_evaluate_args, args), writer, summary, on_record)
    finally:
        writer.close()
    summary.seconds = time.perf_counter() - t0
    summary.finished = time.strftime("%Y-%m-%dT%H:%M:%S")
    return summary


def _consume(results, writer: _Writer, summary: Summary, on_record):
    for rec in results:
        writer.write(rec)
        summary.records += 1
        label = f"d={rec['d']}; a={','.join(map(str, rec['A']))}"
        for c, v in rec["checks"].items():
            counts = summary.check_counts.setdefault(c, {"pass": 0, "fail": 0, "n/a": 0})
            counts[v] += 1
            if v == "fail":
                summary.failures.append({"ideal": label, "check": c, "error": rec.get("error", "")})
        w = rec.get("br_watch")
        if w and w["watch"]:
            summary.watch.append(
                {"ideal": label, "s_star": w["s_star"], "lower_bound_br": w["lower_bound_br"], "note": w["note"]}
            )
        if on_record is not None:
            on_record(rec)
