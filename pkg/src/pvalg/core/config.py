"""Run configuration shared by the CLI and the seeded searches."""

from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import numpy as np

FORMATS = ("text", "json", "latex")


@dataclass(frozen=True)
class RunConfig:
    """Configuration for a pvalg run (explicit, typed, validated).

    Identical ``(command, seed)`` pairs produce byte-identical output, so
    every random choice in the package goes through :meth:`rng`.

    Attributes
    ----------
    seed:
        Unsigned 64-bit seed for all generic-point and generic-element searches.
    format:
        Output format: ``text``, ``json`` or ``latex``.
    output:
        Optional file that receives the rendered output instead of stdout.
    retries:
        Number of seeded attempts before a generic search gives up.
    point_bound:
        Generic points have integer entries in ``[-point_bound, point_bound]``.
    workers:
        Thread count for the pairwise sweep; ``None`` lets the executor decide.

    """

    seed: int = 0
    format: str = "text"
    output: Optional[Path] = None
    retries: int = 5
    point_bound: int = 9
    workers: Optional[int] = None

    def __post_init__(self):
        """Validate field ranges."""
        if not isinstance(self.seed, int) or isinstance(self.seed, bool) or not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {', '.join(FORMATS)} (got '{self.format}')")
        if not isinstance(self.retries, int) or self.retries < 1:
            raise ValueError("retries must be a positive integer")
        if not isinstance(self.point_bound, int) or self.point_bound < 1:
            raise ValueError("point_bound must be a positive integer")
        if self.workers is not None and (not isinstance(self.workers, int) or self.workers < 1):
            raise ValueError("workers must be a positive integer")
        if self.output is not None and not isinstance(self.output, Path):
            object.__setattr__(self, "output", Path(self.output))

    def rng(self) -> np.random.Generator:
        """Return a fresh generator seeded from :attr:`seed`."""
        return np.random.default_rng(self.seed)


DEFAULT_CONFIG = RunConfig()
