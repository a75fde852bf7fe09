#!/usr/bin/env python3
"""Freeze the table-wide oracles used by the slow tests into tests/golden/.

Run after a deliberate change to the table or the invariants, then review the
diff before committing:

    poe freeze-golden
"""

import argparse
import json
import sys
from pathlib import Path

from pvalg.algebras import from_quotient, is_square_zero_radical
from pvalg.algebras.sweep import inconclusive_pairs, pairwise_sweep
from pvalg.core.config import RunConfig
from pvalg.presentations import load_table

GOLDEN_DIR = Path(__file__).resolve().parents[1] / "tests" / "golden"


def square_zero_entries() -> list:
    """Indices of table entries whose radical squares to zero."""
    return [e.index for e in load_table() if is_square_zero_radical(from_quotient(e.presentation))]


def sweep_inconclusive(workers) -> list:
    """Pairs the sweep cannot separate, as JSON lists."""
    return [list(pair) for pair in inconclusive_pairs(pairwise_sweep(config=RunConfig(workers=workers)))]


def write(name: str, data, dry_run: bool) -> None:
    """Write one golden file unless it is unchanged or this is a dry run."""
    path = GOLDEN_DIR / name
    text = json.dumps(data) + "\n"
    old = path.read_text(encoding="utf-8") if path.exists() else None
    status = "unchanged" if old == text else ("new" if old is None else "changed")
    print(f"{name}: {status} ({len(data)} items)")
    if not dry_run and status != "unchanged":
        path.write_text(text, encoding="utf-8")


def main():
    """Recompute every oracle and write the ones that differ."""
    parser = argparse.ArgumentParser(description="Freeze pvalg golden files")
    parser.add_argument("--workers", type=int, default=None, help="Threads for the pairwise sweep")
    parser.add_argument("--dry-run", action="store_true", help="Report what would change without writing")
    args = parser.parse_args()

    try:
        GOLDEN_DIR.mkdir(parents=True, exist_ok=True)
        write("square_zero_entries.json", square_zero_entries(), args.dry_run)
        write("inconclusive_pairs.json", sweep_inconclusive(args.workers), args.dry_run)
    except Exception as e:
        print(f"❌ Error: {e}", file=sys.stderr)
        sys.exit(1)


if __name__ == "__main__":
    main()
