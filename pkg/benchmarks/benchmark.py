#!/usr/bin/env python3
"""Timing benchmark for the exact pipelines in pvalg.

Measures Gröbner bases and structure constants for every table entry,
fingerprints, the parameterized matrix with its symbolic checks, and the
full pairwise sweep.

Examples
--------
    # Default: 3 iterations of every stage
    python benchmarks/benchmark.py

    # Only the matrix stage, more iterations
    python benchmarks/benchmark.py --stage rep --iterations 10

"""

import argparse
import sys
import time
from statistics import median
from typing import Callable, Dict, List

from rich.console import Console
from rich.table import Table

try:
    from pvalg.algebras import fingerprint, from_quotient
    from pvalg.algebras.sweep import pairwise_sweep
    from pvalg.core.config import RunConfig
    from pvalg.hassett import det_rep, matrix_rep, verify_homomorphism
    from pvalg.presentations import load_table
except ImportError:
    print("❌ pvalg not installed. Install with: pip install -e .")
    sys.exit(1)

console = Console()


def stage_quotients() -> None:
    """Build every table entry from its presentation."""
    for entry in load_table():
        from_quotient(entry.presentation)


def stage_fingerprints() -> None:
    """Build and fingerprint every table entry."""
    for entry in load_table():
        fingerprint(from_quotient(entry.presentation))


def stage_rep() -> None:
    """Representation, group law and determinant for the largest entries."""
    # the six-dimensional entries dominate; 20 is the worked example
    for index in (18, 20, 33, 42):
        rep = matrix_rep(from_quotient(load_table()[index - 1].presentation))
        verify_homomorphism(rep)
        det_rep(rep)


def make_sweep(workers) -> Callable[[], None]:
    """Pairwise sweep stage bound to a worker count."""
    def run() -> None:
        pairwise_sweep(config=RunConfig(workers=workers))

    return run


def time_stage(fn: Callable[[], None], iterations: int) -> List[float]:
    """Wall-clock seconds for each of ``iterations`` runs."""
    timings = []
    for _ in range(iterations):
        start = time.perf_counter()
        fn()
        timings.append(time.perf_counter() - start)
    return timings


def main():
    """Run the selected stages and print a summary table."""
    parser = argparse.ArgumentParser(description="Benchmark pvalg pipelines")
    parser.add_argument("--stage", action="append", choices=["quotients", "fingerprints", "rep", "sweep"], help="Stage to run (repeatable; default all)")
    parser.add_argument("--iterations", type=int, default=3, help="Timed runs per stage")
    parser.add_argument("--workers", type=int, default=None, help="Threads for the sweep stage")
    args = parser.parse_args()

    stages: Dict[str, Callable[[], None]] = {
        "quotients": stage_quotients,
        "fingerprints": stage_fingerprints,
        "rep": stage_rep,
        "sweep": make_sweep(args.workers),
    }
    selected = args.stage or list(stages)

    table = Table(title=f"pvalg benchmark ({args.iterations} iterations)")
    table.add_column("stage")
    table.add_column("median (s)", justify="right")
    table.add_column("min (s)", justify="right")
    table.add_column("max (s)", justify="right")
    for name in selected:
        console.print(f"[dim]running {name}...[/dim]")
        timings = time_stage(stages[name], args.iterations)
        table.add_row(name, f"{median(timings):.3f}", f"{min(timings):.3f}", f"{max(timings):.3f}")
    console.print(table)


if __name__ == "__main__":
    main()
