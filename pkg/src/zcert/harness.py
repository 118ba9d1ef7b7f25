"""Corpus enumeration/ingestion, certification campaigns, and reports.

Campaigns are per-graph checks aggregated into a CampaignResult; violations
are data, not exceptions. Sources are either a full labeled enumeration at
small order or a graph6 corpus file. Work is chunkable for multi-process
runs; merged output is deterministic regardless of worker count.
"""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .graphs import Graph, Graph6Error, parse_graph6, strip_graph6_header, to_graph6, GRAPH6_HEADER
from . import bounds, structure
from .invariants import min_max_degree

MAX_ENUMERATION_N = 7


@dataclass(frozen=True)
class Violation:
    graph6: str
    check: str
    detail: str


@dataclass
class CampaignResult:
    corpus_description: str
    graphs_scanned: int = 0
    skipped_min_degree_zero: int = 0
    violations: list[Violation] = field(default_factory=list)
    equality_witnesses: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def certified(self) -> bool:
        return not self.violations

    def merge(self, other: "CampaignResult") -> None:
        self.graphs_scanned += other.graphs_scanned
        self.skipped_min_degree_zero += other.skipped_min_degree_zero
        self.violations.extend(other.violations)
        self.equality_witnesses.extend(other.equality_witnesses)

    def finalize(self, elapsed: float) -> None:
        self.violations.sort(key=lambda v: (v.graph6, v.check))
        self.equality_witnesses.sort()
        self.elapsed = elapsed


def _pair_index(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def enumerate_labeled_graphs(n: int) -> Iterator[Graph]:
    """All 2^(n(n-1)/2) labeled simple graphs on n vertices, edge-mask order."""
    if not 1 <= n <= MAX_ENUMERATION_N:
        raise ValueError(
            f"labeled enumeration supported for 1 <= n <= {MAX_ENUMERATION_N}")
    yield from _enumerate_range(n, 0, 1 << (n * (n - 1) // 2))


def _enumerate_range(n: int, lo: int, hi: int) -> Iterator[Graph]:
    pairs = _pair_index(n)
    for mask in range(lo, hi):
        adj = [0] * n
        m = mask
        while m:
            k = (m & -m).bit_length() - 1
            m &= m - 1
            u, v = pairs[k]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        yield Graph(n, tuple(adj))


def scan_graph6(path: str, fail_fast: bool = True,
                errors: Optional[list[tuple[int, str]]] = None) -> Iterator[Graph]:
    """Stream graphs from a graph6 file, one per line.

    An optional ">>graph6<<" header line is skipped. With fail_fast=False,
    malformed lines are collected into ``errors`` as (line_no, message) and
    skipped instead of aborting.
    """
    with open(path, "r", encoding="ascii") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line == GRAPH6_HEADER:
                continue
            try:
                yield parse_graph6(line)
            except Graph6Error as exc:
                if fail_fast:
                    raise Graph6Error(f"line {line_no}: {exc}") from exc
                if errors is not None:
                    errors.append((line_no, str(exc)))


class EnumerationSource:
    """All labeled graphs on n vertices; chunkable by edge-mask range."""

    def __init__(self, n: int):
        if not 1 <= n <= MAX_ENUMERATION_N:
            raise ValueError(f"n must be 1..{MAX_ENUMERATION_N}")
        self.n = n

    def describe(self) -> str:
        return f"all labeled graphs on {self.n} vertices"

    def graphs(self) -> Iterator[Graph]:
        return enumerate_labeled_graphs(self.n)

    def chunks(self, jobs: int) -> list[tuple]:
        total = 1 << (self.n * (self.n - 1) // 2)
        step = -(-total // jobs)
        return [("enum", self.n, lo, min(lo + step, total))
                for lo in range(0, total, step)]


class CorpusSource:
    """Graphs read from a graph6 file; chunkable by line blocks."""

    def __init__(self, path: str, fail_fast: bool = True):
        self.path = path
        self.fail_fast = fail_fast

    def describe(self) -> str:
        return f"graph6 corpus {self.path}"

    def graphs(self) -> Iterator[Graph]:
        return scan_graph6(self.path, fail_fast=self.fail_fast)

    def chunks(self, jobs: int) -> list[tuple]:
        with open(self.path, "r", encoding="ascii") as fh:
            lines = [s for raw in fh
                     if (s := strip_graph6_header(raw)) ]
        step = -(-len(lines) // jobs) if lines else 1
        return [("lines", lines[i:i + step]) for i in range(0, len(lines), step)]


def _chunk_graphs(chunk: tuple) -> Iterator[Graph]:
    if chunk[0] == "enum":
        _, n, lo, hi = chunk
        yield from _enumerate_range(n, lo, hi)
    else:
        for line in chunk[1]:
            yield parse_graph6(line)


def _check_theorem1_graph(g: Graph, result: CampaignResult) -> None:
    delta, _ = min_max_degree(g) if g.n else (0, 0)
    if g.n == 0 or delta == 0:
        result.skipped_min_degree_zero += 1
        return
    result.graphs_scanned += 1
    report = bounds.theorem1_report(g)
    if report.any_violated:
        parts = [i + 1 for i, v in enumerate(report.verdicts)
                 if v is bounds.Verdict.VIOLATED]
        result.violations.append(Violation(
            to_graph6(g), "bound-violated", f"parts {parts}"))
    predicted = structure.is_regular_balanced_bipartite(g)
    if report.all_equality != predicted:
        result.violations.append(Violation(
            to_graph6(g), "equality-biconditional",
            f"all_equality={report.all_equality} "
            f"regular_balanced_bipartite={predicted}"))
    if report.all_equality:
        result.equality_witnesses.append(to_graph6(g))


def _check_theorem23_graph(g: Graph, theorem: int, result: CampaignResult) -> None:
    if g.n == 0:
        return
    delta, _ = min_max_degree(g)
    if delta == 0:
        result.skipped_min_degree_zero += 1
        return
    n_min, k_min, shift = (3, 2, 1) if theorem == 2 else (9, 1, 2)
    if g.n < n_min:
        return
    kappa = structure.vertex_connectivity(g)
    if kappa < k_min:
        return
    result.graphs_scanned += 1
    oracle: Optional[bool] = None
    cond = (bounds.theorem2_condition if theorem == 2 else bounds.theorem3_condition)
    for k in range(k_min, kappa + 1):
        if k + shift >= g.n:
            break  # surrogate b must stay below n
        for part in range(1, 6):
            verdict = cond(g, k, part, kappa=kappa)
            if not verdict.holds:
                continue
            if oracle is None:
                oracle = (structure.has_hamiltonian_cycle(g) if theorem == 2
                          else structure.has_hamiltonian_path(g))
            if not oracle:
                result.violations.append(Violation(
                    to_graph6(g), f"theorem{theorem}-part{part}-k{k}",
                    "condition holds but oracle is false"))


def _run_chunk(args: tuple) -> CampaignResult:
    kind, chunk = args
    result = CampaignResult(corpus_description="")
    for g in _chunk_graphs(chunk):
        if kind == "t1":
            _check_theorem1_graph(g, result)
        else:
            _check_theorem23_graph(g, int(kind[1]), result)
    return result


def _run_campaign(source, kind: str, jobs: int) -> CampaignResult:
    start = time.monotonic()
    describe = source.describe() if hasattr(source, "describe") else "ad-hoc stream"
    result = CampaignResult(corpus_description=describe)
    if jobs > 1 and hasattr(source, "chunks"):
        tasks = [(kind, chunk) for chunk in source.chunks(4 * jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for partial in pool.map(_run_chunk, tasks):
                result.merge(partial)
    else:
        graphs = source.graphs() if hasattr(source, "graphs") else iter(source)
        for g in graphs:
            if kind == "t1":
                _check_theorem1_graph(g, result)
            else:
                _check_theorem23_graph(g, int(kind[1]), result)
    result.finalize(time.monotonic() - start)
    return result


def run_theorem1_campaign(source, jobs: int = 1) -> CampaignResult:
    """Certify the bound theorem: no violated part, and all-equality exactly
    on the regular balanced bipartite graphs. Source: an Enumeration/Corpus
    source, or any iterable of Graph."""
    return _run_campaign(source, "t1", jobs)


def run_theorem23_campaign(source, theorem: int, jobs: int = 1) -> CampaignResult:
    """Certify the sufficient conditions: wherever a condition holds for a
    valid k, the matching Hamiltonicity oracle must agree."""
    if theorem not in (2, 3):
        raise ValueError("theorem must be 2 or 3")
    return _run_campaign(source, f"t{theorem}", jobs)


_SUMMARY_FIELDS = ("corpus", "graphs_scanned", "skipped_min_degree_zero",
                   "violations", "equality_witnesses", "certified")


def emit_report(result: CampaignResult, format: str = "json-lines",
                include_elapsed: bool = True) -> str:
    """Render a campaign result; field order is deterministic, and elapsed
    can be excluded for byte-identical comparison runs."""
    if format == "json-lines":
        lines = []
        for v in result.violations:
            lines.append(json.dumps(
                {"type": "violation", "graph6": v.graph6,
                 "check": v.check, "detail": v.detail}, sort_keys=False))
        for w in result.equality_witnesses:
            lines.append(json.dumps({"type": "equality-witness", "graph6": w}))
        summary = {
            "type": "summary",
            "corpus": result.corpus_description,
            "graphs_scanned": result.graphs_scanned,
            "skipped_min_degree_zero": result.skipped_min_degree_zero,
            "violations": len(result.violations),
            "equality_witnesses": len(result.equality_witnesses),
            "certified": result.certified,
        }
        if include_elapsed:
            summary["elapsed_seconds"] = round(result.elapsed, 3)
        lines.append(json.dumps(summary, sort_keys=False))
        return "\n".join(lines) + "\n"
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["kind", "graph6", "check", "detail"])
        for v in result.violations:
            writer.writerow(["violation", v.graph6, v.check, v.detail])
        for w in result.equality_witnesses:
            writer.writerow(["equality-witness", w, "", ""])
        writer.writerow(["summary",
                         f"scanned={result.graphs_scanned}",
                         f"violations={len(result.violations)}",
                         f"certified={result.certified}"])
        return buf.getvalue()
    raise ValueError(f"unknown report format {format!r}")
