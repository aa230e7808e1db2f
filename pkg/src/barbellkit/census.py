"""Batch analysis of graph6 catalogs, one JSON record per input line."""

from __future__ import annotations

import json
import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import islice
from typing import Iterable, Iterator

from .barbell import BarbellCertificate, default_brute_cap, find_barbell_partition
from .errors import GraphFormatError
from .graph import Graph, diameter, encode_graph6, parse_graph6
from .ssp import EvidenceRecord, ssp_evidence

__all__ = ["CensusRecord", "CensusOptions", "analyze_graph", "run_census", "CHUNK"]

log = logging.getLogger(__name__)

RECORD_SCHEMA = "census-record/1"
CHUNK = 256


@dataclass(frozen=True)
class CensusOptions:
    brute_cap: int | None = None
    ssp_trials: int = 0
    seed: int = 0
    timing: bool = False


@dataclass(frozen=True)
class CensusRecord:
    graph: Graph
    barbell: BarbellCertificate
    diameter: int | None
    max_degree: int
    ssp_evidence: EvidenceRecord | None = None
    wall_time_ms: int | None = None

    def to_json(self) -> dict:
        return {
            "schema": RECORD_SCHEMA,
            "graph6": encode_graph6(self.graph),
            "n": self.graph.n,
            "m": self.graph.m,
            "barbell": self.barbell.to_json(self.graph),
            "diameter": self.diameter,
            "max_degree": self.max_degree,
            "ssp_evidence": self.ssp_evidence.to_json() if self.ssp_evidence else None,
            "wall_time_ms": self.wall_time_ms,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def analyze_graph(G: Graph, opts: CensusOptions = CensusOptions()) -> CensusRecord:
    t0 = time.perf_counter()
    cap = opts.brute_cap if opts.brute_cap is not None else default_brute_cap()
    cert = find_barbell_partition(G, brute_cap=cap)
    d = diameter(G)
    ev = ssp_evidence(G, opts.ssp_trials, opts.seed) if opts.ssp_trials > 0 else None
    ms = round((time.perf_counter() - t0) * 1000) if opts.timing else None
    return CensusRecord(
        G,
        cert,
        None if math.isinf(d) else int(d),
        max(G.degrees(), default=0),
        ev,
        ms,
    )


def _work(item: tuple[int, str, CensusOptions]) -> tuple[int, str | None, str | None]:
    lineno, text, opts = item
    try:
        G = parse_graph6(text)
    except GraphFormatError as exc:
        return lineno, None, str(exc)
    return lineno, analyze_graph(G, opts).dumps(), None


def _items(lines: Iterable[str], opts: CensusOptions) -> Iterator[tuple[int, str, CensusOptions]]:
    for lineno, raw in enumerate(lines, 1):
        s = raw.strip()
        if s and not s.startswith("#"):
            yield lineno, s, opts


def run_census(
    lines: Iterable[str],
    opts: CensusOptions = CensusOptions(),
    jobs: int = 1,
    errors: list[str] | None = None,
) -> Iterator[str]:
    """Yield one JSON line per parsable input line, in input order.

    Input is consumed in chunks so memory stays bounded.  Parse failures
    are logged, appended to ``errors`` if given, and skipped.
    """
    items = _items(lines, opts)
    pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        while True:
            chunk = list(islice(items, CHUNK))
            if not chunk:
                break
            if pool is None:
                results = map(_work, chunk)
            else:
                results = pool.map(_work, chunk, chunksize=max(1, len(chunk) // (4 * jobs)))
            for lineno, out, err in results:
                if err is not None:
                    msg = f"line {lineno}: {err}"
                    log.warning("skipping %s", msg)
                    if errors is not None:
                        errors.append(msg)
                    continue
                yield out
    finally:
        if pool is not None:
            pool.shutdown()
