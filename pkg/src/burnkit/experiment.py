"""Batch experiments from a flat key-value config, written to CSV.

Config format: one ``key = value`` per line, ``#`` starts a comment.
Single-valued keys: ``family``, ``exact_threshold``, ``epsilon``, ``out``,
``witness_dir``, ``threads``.  Repeatable keys build the grid:
``params`` (one whitespace-separated integer tuple per line), ``seed``
and ``algorithm``.  Runs are the product params x seed x algorithm in file
order; the grid index is the position in that product.  Without any
``seed`` line the seed list is ``[0]``.  Relative paths are resolved
against the config file's directory.

Example::

    family = necklace
    params = 5 3
    params = 5 4
    algorithm = mindeg-pipeline
    out = necklace.csv
"""

from __future__ import annotations

import csv
import io as _io
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import generators
from .burning import burning_number_exact, greedy_burning, reference_bounds, verify_schedule
from .domination import DEFAULT_EXACT_THRESHOLD, burn_via_mindeg, burn_via_weakdeg
from .graph import min_degree, require_connected
from .io import dumps

ALGORITHMS = ("exact", "greedy", "mindeg-pipeline", "weakdeg-pipeline")

COLUMNS = [
    "family",
    "params",
    "seed",
    "n",
    "min_degree",
    "algorithm",
    "result_length_or_size",
    "lemma2_bound",
    "sqrt_ceil",
    "thm1_ref",
    "bonato_upper",
    "wall_time_ms",
    "valid",
    "error",
]

SINGLE_KEYS = {"family", "exact_threshold", "epsilon", "out", "witness_dir", "threads"}
GRID_KEYS = {"params", "seed", "algorithm"}


class ConfigError(ValueError):
    pass


@dataclass
class ExperimentConfig:
    family: str
    params: list[tuple[int, ...]] = field(default_factory=list)
    seeds: list[int] = field(default_factory=lambda: [0])
    algorithms: list[str] = field(default_factory=list)
    exact_threshold: int = DEFAULT_EXACT_THRESHOLD
    epsilon: Fraction = Fraction(1, 2)
    out: Optional[Path] = None
    witness_dir: Optional[Path] = None
    threads: int = 1

    def grid(self) -> list[tuple[int, tuple[int, ...], int, str]]:
        runs = []
        for p in self.params:
            for s in self.seeds:
                for a in self.algorithms:
                    runs.append((len(runs), p, s, a))
        return runs


def parse_config(text: str, base: Path = Path(".")) -> ExperimentConfig:
    single: dict[str, tuple[int, str]] = {}
    grid: dict[str, list[tuple[int, str]]] = {k: [] for k in GRID_KEYS}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value'")
        key, value = (part.strip() for part in line.split("=", 1))
        if key in GRID_KEYS:
            grid[key].append((lineno, value))
        elif key in SINGLE_KEYS:
            if key in single:
                raise ConfigError(f"line {lineno}: key {key!r} given twice")
            single[key] = (lineno, value)
        else:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")

    if "family" not in single:
        raise ConfigError("config needs a 'family' key")
    family = single["family"][1]
    if family not in generators.FAMILIES:
        raise ConfigError(f"unknown family {family!r}")
    cfg = ExperimentConfig(family=family)
    try:
        cfg.params = [tuple(int(x) for x in v.split()) for _, v in grid["params"]]
        if grid["seed"]:
            cfg.seeds = [int(v) for _, v in grid["seed"]]
        if "exact_threshold" in single:
            cfg.exact_threshold = int(single["exact_threshold"][1])
        if "threads" in single:
            cfg.threads = int(single["threads"][1])
        if "epsilon" in single:
            cfg.epsilon = Fraction(single["epsilon"][1])
    except ValueError as exc:
        raise ConfigError(f"bad numeric value: {exc}") from None
    for lineno, a in grid["algorithm"]:
        if a not in ALGORITHMS:
            raise ConfigError(f"line {lineno}: unknown algorithm {a!r}; known: {', '.join(ALGORITHMS)}")
        cfg.algorithms.append(a)
    if not cfg.algorithms:
        raise ConfigError("config needs at least one 'algorithm' line")
    if any(s < 0 or s >= 1 << 64 for s in cfg.seeds):
        raise ConfigError("seeds must be 64-bit unsigned integers")
    if not 0 < cfg.epsilon <= 1:
        raise ConfigError("epsilon must lie in (0, 1]")
    if cfg.threads < 1:
        raise ConfigError("threads must be >= 1")
    if "out" in single:
        cfg.out = base / single["out"][1]
    if "witness_dir" in single:
        cfg.witness_dir = base / single["witness_dir"][1]
    return cfg


def load_config(path) -> ExperimentConfig:
    path = Path(path)
    return parse_config(path.read_text(), base=path.parent)


def run_one(cfg: ExperimentConfig, run) -> tuple[dict, Optional[str]]:
    """One grid point -> (CSV row, witness JSON text or None)."""
    index, params, seed, algorithm = run
    row = dict.fromkeys(COLUMNS, "")
    row.update(family=cfg.family, params=" ".join(map(str, params)), seed=seed, algorithm=algorithm)
    witness = None
    t0 = time.perf_counter()
    try:
        g = generators.build(cfg.family, params, seed)
        require_connected(g)
        k = min_degree(g)
        row.update(n=g.n, min_degree=k)
        if g.n >= 2 and k >= 1:
            b = reference_bounds(g.n, k)
            row.update(
                lemma2_bound=b.lemma2_size,
                sqrt_ceil=b.sqrt_ceil,
                thm1_ref=b.thm1_ref,
                bonato_upper=b.bonato_upper,
            )
        if algorithm == "exact":
            _, sched = burning_number_exact(g)
        elif algorithm == "greedy":
            sched = greedy_burning(g)
        elif algorithm == "mindeg-pipeline":
            sched, _ = burn_via_mindeg(g, cfg.exact_threshold)
        else:
            sched, _ = burn_via_weakdeg(g, cfg.epsilon, cfg.exact_threshold)
        valid = verify_schedule(g, sched)
        row.update(result_length_or_size=sched.length, valid=str(valid).lower())
        witness = dumps(sched.to_json(g.n, valid))
    except Exception as exc:  # recorded per row; the batch keeps going
        row.update(valid="false", error=f"{type(exc).__name__}: {exc}")
    row["wall_time_ms"] = f"{(time.perf_counter() - t0) * 1000:.3f}"
    return row, witness


def _run_packed(args):
    return run_one(*args)


def run_experiment(cfg: ExperimentConfig, threads: Optional[int] = None) -> tuple[str, list[Optional[str]]]:
    """Run the whole grid; returns CSV text and witness texts in grid order."""
    runs = cfg.grid()
    workers = threads or cfg.threads
    if workers > 1 and len(runs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_packed, [(cfg, r) for r in runs]))
    else:
        results = [run_one(cfg, r) for r in runs]
    buf = _io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row, _ in results:
        writer.writerow(row)
    return buf.getvalue(), [w for _, w in results]


def witness_name(cfg: ExperimentConfig, run) -> str:
    index, params, seed, algorithm = run
    tag = "-".join(map(str, params)) or "none"
    return f"{index:04d}_{cfg.family}_{tag}_s{seed}_{algorithm}.json"


def write_outputs(cfg: ExperimentConfig, csv_text: str, witnesses: list[Optional[str]], out: Optional[Path]) -> None:
    target = out or cfg.out
    if target is not None:
        Path(target).parent.mkdir(parents=True, exist_ok=True)
        Path(target).write_text(csv_text)
    if cfg.witness_dir is not None:
        cfg.witness_dir.mkdir(parents=True, exist_ok=True)
        for run, text in zip(cfg.grid(), witnesses):
            if text is not None:
                (cfg.witness_dir / witness_name(cfg, run)).write_text(text)
