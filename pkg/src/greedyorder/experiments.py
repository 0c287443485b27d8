"""Random-graph experiments and exhaustive checks of the extremal bounds."""

from __future__ import annotations

import csv
import io
import json
import logging
import statistics
from dataclasses import asdict, dataclass, field
from typing import Iterable, Optional

import numpy as np

from greedyorder.algorithm1 import VARIANTS, run_algorithm1
from greedyorder.errors import BudgetError
from greedyorder.graphs import (
    Graph,
    enumerate_connected_graphs,
    gen_directed_cycle,
    gen_dn,
    gen_star,
    sample_connected_erdos_renyi,
)
from greedyorder.ordering import (
    MAX_EXACT_N,
    best_ordering_exact,
    comm_time,
    dn_best_ordering,
    random_ordering,
    worst_directed_cycle_ordering,
    worst_ordering_exact,
)

log = logging.getLogger(__name__)

METHODS = ("random", "best", "alg1")


@dataclass(frozen=True)
class ExperimentConfig:
    n: int
    p: float
    samples: int = 200
    methods: tuple[str, ...] = METHODS
    rng_seed: int = 0
    algorithm1_variant: str = "order-n"
    max_attempts: int = 100_000

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError("samples must be >= 1")
        if not self.methods:
            raise ValueError("at least one ordering method is required")
        unknown = set(self.methods) - set(METHODS)
        if unknown:
            raise ValueError(f"unknown methods {sorted(unknown)}; choose from {METHODS}")
        if self.algorithm1_variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.algorithm1_variant!r}")
        if "best" in self.methods and self.n > MAX_EXACT_N:
            raise BudgetError(f"best ordering needs n <= {MAX_EXACT_N}, got n={self.n}")


@dataclass(frozen=True)
class Row:
    sample_index: int
    graph_edges: str
    method: str
    time: int
    seed_vertex: Optional[int]


@dataclass
class Distribution:
    config: ExperimentConfig
    times: dict[str, list[int]]
    rows: list[Row] = field(repr=False)
    rejections: int = 0

    def summary(self) -> dict[str, dict[str, float]]:
        return {
            m: {
                "min": min(ts),
                "max": max(ts),
                "mean": statistics.fmean(ts),
                "median": statistics.median(ts),
            }
            for m, ts in self.times.items()
        }

    def mean(self, method: str) -> float:
        return statistics.fmean(self.times[method])

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["sample_index", "graph_edges", "method", "time", "seed_vertex"])
        for r in self.rows:
            w.writerow([r.sample_index, r.graph_edges, r.method, r.time, "" if r.seed_vertex is None else r.seed_vertex])
        return buf.getvalue()

    def summary_json(self) -> str:
        cfg = asdict(self.config)
        cfg["methods"] = list(self.config.methods)
        return json.dumps({"config": cfg, "summary": self.summary(), "rejections": self.rejections}, indent=2)

    def histogram_text(self, method: str) -> str:
        """Integer-binned counts as ``time count`` lines (gnuplot-friendly)."""
        ts = self.times[method]
        return "".join(f"{t} {ts.count(t)}\n" for t in range(min(ts), max(ts) + 1))


def _edge_string(g: Graph) -> str:
    return ";".join(f"{u}-{v}" for u, v in g.sorted_edges())


def run_er_experiment(cfg: ExperimentConfig) -> Distribution:
    """Sample connected G(n, p) graphs and time each requested ordering method.

    Every sample draws its graph, its random ordering and its seed vertex from
    its own child seed, in that order, so a sample's graph does not depend on
    which methods were requested.
    """
    times: dict[str, list[int]] = {m: [] for m in cfg.methods}
    rows: list[Row] = []
    rejections = 0
    children = np.random.SeedSequence(cfg.rng_seed).spawn(cfg.samples)
    for idx, child in enumerate(children):
        rng = np.random.default_rng(child)
        g, rejected = sample_connected_erdos_renyi(cfg.n, cfg.p, rng, cfg.max_attempts)
        rejections += rejected
        pi_random = random_ordering(cfg.n, rng)
        seed_vertex = int(rng.integers(cfg.n))
        edges = _edge_string(g)
        for m in cfg.methods:
            sv = None
            if m == "random":
                t = comm_time(g, pi_random).total
            elif m == "best":
                t = best_ordering_exact(g).total
            else:
                t = run_algorithm1(g, seed_vertex, variant=cfg.algorithm1_variant).t
                sv = seed_vertex
            times[m].append(t)
            rows.append(Row(idx, edges, m, t, sv))
    log.info("G(%d, %g): %d samples, %d disconnected draws rejected", cfg.n, cfg.p, cfg.samples, rejections)
    return Distribution(cfg, times, rows, rejections)


@dataclass
class ExtremalReport:
    """Maxima of the best and worst communication time over an enumerated graph class."""

    n: int
    directed: bool
    max_tmin: int
    max_tmax: int
    expected: tuple[int, int]
    tmin_witnesses: list[Graph] = field(repr=False)
    tmax_witnesses: list[Graph] = field(repr=False)
    graphs_checked: int = 0
    constructions: list = field(default_factory=list)

    @property
    def observed(self) -> tuple[int, int]:
        return (self.max_tmin, self.max_tmax)

    @property
    def ok(self) -> bool:
        return self.observed == self.expected and all(c.ok for c in self.constructions)

    def line(self) -> str:
        return f"{self.observed} {'OK' if self.ok else 'FAIL'}"


def _is_star(g: Graph) -> bool:
    return len(g.edges) == g.n - 1 and any(len(a) == g.n - 1 for a in g.adjacency)


def _is_line(g: Graph) -> bool:
    return len(g.edges) == g.n - 1 and all(len(a) <= 2 for a in g.adjacency)


def _extremes(graphs: Iterable[Graph], n: int, directed: bool, expected: tuple[int, int]) -> ExtremalReport:
    max_tmin = max_tmax = -1
    wmin: list[Graph] = []
    wmax: list[Graph] = []
    count = 0
    for g in graphs:
        count += 1
        lo = best_ordering_exact(g).total
        hi = worst_ordering_exact(g).total
        if lo > max_tmin:
            max_tmin, wmin = lo, []
        if lo == max_tmin:
            wmin.append(g)
        if hi > max_tmax:
            max_tmax, wmax = hi, []
        if hi == max_tmax:
            wmax.append(g)
    return ExtremalReport(n, directed, max_tmin, max_tmax, expected, wmin, wmax, count)


@dataclass
class Theorem1Report(ExtremalReport):
    @property
    def star_witnessed(self) -> bool:
        return any(_is_star(g) for g in self.tmin_witnesses)

    @property
    def line_witnessed(self) -> bool:
        return any(_is_line(g) for g in self.tmax_witnesses)

    @property
    def ok(self) -> bool:
        return super().ok and self.star_witnessed and self.line_witnessed


def verify_theorem1(n: int) -> Theorem1Report:
    """Exhaustive max of best/worst communication time over connected undirected graphs on n vertices."""
    if not 3 <= n <= 6:
        raise BudgetError(f"undirected enumeration supports 3 <= n <= 6, got {n}")
    rep = _extremes(enumerate_connected_graphs(n), n, False, (2 * n - 4, n * n // 2 - 1))
    return Theorem1Report(**{k: getattr(rep, k) for k in rep.__dataclass_fields__})


@dataclass(frozen=True)
class ConstructionCheck:
    n: int
    cycle_worst: int
    dn_best: int
    cycle_brute_max: Optional[int]
    dn_brute_min: Optional[int]

    @property
    def ok(self) -> bool:
        n = self.n
        target_cycle, target_dn = (n - 1) ** 2, (n // 2) * (n - n // 2)
        return (
            self.cycle_worst == target_cycle
            and self.dn_best == target_dn
            and self.cycle_brute_max in (None, target_cycle)
            and self.dn_brute_min in (None, target_dn)
        )


def check_directed_constructions(ns: Iterable[int] = range(3, 11), brute_max: int = MAX_EXACT_N) -> list[ConstructionCheck]:
    out = []
    for n in ns:
        cyc, dn = gen_directed_cycle(n), gen_dn(n)
        out.append(
            ConstructionCheck(
                n,
                comm_time(cyc, worst_directed_cycle_ordering(n)).total,
                comm_time(dn, dn_best_ordering(n)).total,
                worst_ordering_exact(cyc).total if n <= brute_max else None,
                best_ordering_exact(dn).total if n <= brute_max else None,
            )
        )
    return out


def verify_prop2(n: int, constructions: Iterable[int] = range(3, 11)) -> ExtremalReport:
    """Exhaustive max over strongly connected digraphs on n vertices, plus the cycle and D_n checks."""
    if not 3 <= n <= 4:
        raise BudgetError(f"digraph enumeration supports 3 <= n <= 4, got {n}")
    rep = _extremes(enumerate_connected_graphs(n, directed=True), n, True, ((n // 2) * (n - n // 2), (n - 1) ** 2))
    rep.constructions = check_directed_constructions(constructions)
    return rep


@dataclass
class Prop1Report:
    graphs_checked: int
    runs: int
    star_sizes: tuple[int, ...]
    star_ok: bool
    violations: list[tuple[str, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.star_ok and not self.violations

    def line(self) -> str:
        return f"({self.graphs_checked} graphs, {self.runs} runs, {len(self.violations)} violations) {'OK' if self.ok else 'FAIL'}"


def verify_prop1(
    sample_count: int = 1000,
    n_range: tuple[int, int] = (5, 40),
    rng_seed: int = 0,
    max_seeds: int = 20,
    star_range: tuple[int, int] = (3, 15),
) -> Prop1Report:
    """Check ``t <= 2n - 2`` on random connected graphs and ``t == 2n - 2`` on every star and seed.

    Graph sizes are uniform on ``n_range`` (inclusive); edge probability is
    uniform between ``ln(n)/n`` and 0.5 so that both sparse and dense graphs
    show up. Graphs with more than ``max_seeds`` vertices use that many
    distinct random seeds, smaller ones use every vertex.
    """
    rng = np.random.default_rng(rng_seed)
    violations = []
    runs = 0
    star_ok = True
    stars = tuple(range(star_range[0], star_range[1] + 1))
    for n in stars:
        g = gen_star(n)
        for s in range(n):
            runs += 1
            if run_algorithm1(g, s).t != 2 * n - 2:
                star_ok = False
    for _ in range(sample_count):
        n = int(rng.integers(n_range[0], n_range[1] + 1))
        p = float(rng.uniform(min(np.log(n) / n, 0.5), 0.5))
        g, _ = sample_connected_erdos_renyi(n, p, rng)
        seeds = range(n) if n <= max_seeds else rng.choice(n, size=max_seeds, replace=False).tolist()
        for s in seeds:
            runs += 1
            t = run_algorithm1(g, int(s)).t
            if t > 2 * n - 2:
                violations.append((_edge_string(g), int(s)))
    return Prop1Report(sample_count, runs, stars, star_ok, violations)
