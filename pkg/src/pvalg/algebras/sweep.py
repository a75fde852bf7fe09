"""Pairwise comparison of the table entries.

Fingerprints are computed once per entry, then every unordered pair is
compared. Work runs in a thread pool; rows come back ordered by ``(a, b)``.
"""

import concurrent.futures
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

import polars as pl
from loguru import logger

from ..core.config import DEFAULT_CONFIG, RunConfig
from ..presentations import TableEntry, load_table
from .finite import from_quotient
from .invariants import Fingerprint, Separation, compare_fingerprints, fingerprint

SWEEP_SCHEMA = {
    "a": pl.Int64,
    "b": pl.Int64,
    "dim_a": pl.Int64,
    "dim_b": pl.Int64,
    "result": pl.String,
    "invariant": pl.String,
    "left": pl.String,
    "right": pl.String,
}


def table_fingerprints(entries: Optional[Sequence[TableEntry]] = None, config: RunConfig = DEFAULT_CONFIG) -> Dict[int, Fingerprint]:
    """Fingerprint table entries in parallel, keyed by index."""
    entries = list(entries) if entries is not None else list(load_table())

    def work(entry: TableEntry) -> Tuple[int, Fingerprint]:
        return entry.index, fingerprint(from_quotient(entry.presentation))

    with concurrent.futures.ThreadPoolExecutor(max_workers=config.workers) as pool:
        results = list(pool.map(work, entries))
    logger.debug(f"sweep: fingerprinted {len(results)} entries")
    return dict(results)


def pairwise_sweep(entries: Optional[Sequence[TableEntry]] = None, config: RunConfig = DEFAULT_CONFIG) -> pl.DataFrame:
    """Compare every pair of entries; one row per pair with ``a < b``.

    ``result`` is ``separated`` or ``inconclusive``; for separated pairs
    ``invariant``, ``left`` and ``right`` name the certificate.
    """
    prints = table_fingerprints(entries, config)
    pairs = list(combinations(sorted(prints), 2))

    def work(pair: Tuple[int, int]) -> dict:
        a, b = pair
        outcome = compare_fingerprints(prints[a], prints[b])
        row = {"a": a, "b": b, "dim_a": prints[a].dim, "dim_b": prints[b].dim}
        if isinstance(outcome, Separation):
            left, right = outcome.rendered()
            row.update(result="separated", invariant=outcome.invariant, left=left, right=right)
        else:
            row.update(result="inconclusive", invariant=None, left=None, right=None)
        return row

    rows: List[dict] = []
    with concurrent.futures.ThreadPoolExecutor(max_workers=config.workers) as pool:
        futures = [pool.submit(work, pair) for pair in pairs]
        for future in concurrent.futures.as_completed(futures):
            rows.append(future.result())
    logger.debug(f"sweep: compared {len(rows)} pairs")
    return pl.DataFrame(rows, schema=SWEEP_SCHEMA).sort(["a", "b"])


def inconclusive_pairs(frame: pl.DataFrame) -> List[Tuple[int, int]]:
    """``(a, b)`` pairs of a sweep frame that no invariant separates."""
    subset = frame.filter(pl.col("result") == "inconclusive")
    return list(zip(subset["a"].to_list(), subset["b"].to_list()))
