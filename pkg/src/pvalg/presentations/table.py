"""Built-in corpus: the 42 local algebras of dimension at most 6.

Rows are stored in the compact notation of the classification table. The
index-range shorthand of some rows is written out here:

* rows 8, 17 and 42 ``(x_i^2, x_ix_j)``: every degree-2 monomial;
* row 41 ``x1^3, x_i^2 (i>1), x_ix_j (i!=j)``;
* rows 38 and 40 start with the four squares ``x_i^2``.

Row 39 carries the extra generator ``x3x4``. Without it the quotient has
dimension 7; with it the row is the dimension-6 algebra with Hilbert function
(1, 4, 1) and a two-dimensional socle. Row 33 is the only row whose generator
is not a difference of at most two monomials.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Tuple

from ..core.errors import ParameterError
from .parser import Presentation, format_presentation, parse_presentation

TABLE_SIZE = 42


def _all_quadrics(k: int) -> str:
    names = [f"x{i}" for i in range(1, k + 1)]
    monos = []
    for a, b in combinations_with_replacement(range(k), 2):
        monos.append(f"{names[a]}^2" if a == b else f"{names[a]}{names[b]}")
    return f"K[{','.join(names)}]/({', '.join(monos)})"


_ROWS: Tuple[Tuple[int, str], ...] = (
    (1, "K"),
    (2, "K[x1]/(x1^2)"),
    (3, "K[x1]/(x1^3)"),
    (3, "K[x1,x2]/(x1^2, x2^2, x1x2)"),
    (4, "K[x1]/(x1^4)"),
    (4, "K[x1,x2]/(x1^2, x2^2)"),
    (4, "K[x1,x2]/(x1^3, x1x2, x2^2)"),
    (4, _all_quadrics(3)),
    (5, "K[x1]/(x1^5)"),
    (5, "K[x1,x2]/(x1x2, x1^3-x2^2)"),
    (5, "K[x1,x2]/(x1^3, x2^3, x1x2)"),
    (5, "K[x1,x2]/(x1^4, x2^2, x1x2)"),
    (5, "K[x1,x2]/(x1^3, x2^2, x1^2x2)"),
    (5, "K[x1,x2,x3]/(x1x2, x1x3, x2x3, x1^2-x2^2, x1^2-x3^2)"),
    (5, "K[x1,x2,x3]/(x1^2, x1x2, x1x3, x2x3, x2^2-x3^2)"),
    (5, "K[x1,x2,x3]/(x1^3, x2^2, x3^2, x1x2, x1x3, x2x3)"),
    (5, _all_quadrics(4)),
    (6, "K[x1]/(x1^6)"),
    (6, "K[x1,x2]/(x1x2, x1^4-x2^2)"),
    (6, "K[x1,x2]/(x1x2, x1^3-x2^3)"),
    (6, "K[x1,x2]/(x1^3, x2^2)"),
    (6, "K[x1,x2]/(x1^5, x1x2, x2^2)"),
    (6, "K[x1,x2]/(x1^4, x1x2, x2^3)"),
    (6, "K[x1,x2]/(x1^3, x1^2x2, x1x2^2, x2^3)"),
    (6, "K[x1,x2]/(x1^4, x1^2x2, x1^3-x2^2)"),
    (6, "K[x1,x2]/(x1^4, x1^2x2, x2^2)"),
    (6, "K[x1,x2,x3]/(x1^2, x2^2, x3^2, x1x2-x1x3)"),
    (6, "K[x1,x2,x3]/(x2^2, x3^2, x1x2, x1^2-x2x3)"),
    (6, "K[x1,x2,x3]/(x1^2, x2^2, x3^2, x2x3)"),
    (6, "K[x1,x2,x3]/(x1^2, x2^2, x1x3, x2x3, x1x2-x3^3)"),
    (6, "K[x1,x2,x3]/(x1^2-x3^3, x2^2, x1x2, x1x3, x2x3)"),
    (6, "K[x1,x2,x3]/(x1^3, x2^2, x3^2, x1x2, x1x3)"),
    (6, "K[x1,x2,x3]/(x1^2, x2^2, x3^2, x1x2-x1x3-x2x3)"),
    (6, "K[x1,x2,x3]/(x1^3, x2^2, x1x3, x2x3, x1x2-x3^2)"),
    (6, "K[x1,x2,x3]/(x1^4, x2^2, x3^2, x1x2, x1x3, x2x3)"),
    (6, "K[x1,x2,x3]/(x1^3, x2^3, x3^2, x1x2, x1x3, x2x3)"),
    (6, "K[x1,x2,x3]/(x1^3, x2^2, x3^2, x1^2x2, x1x3, x2x3)"),
    (6, "K[x1,x2,x3,x4]/(x1^2, x2^2, x3^2, x4^2, x1x2, x1x3, x2x4, x3x4, x1x4-x2x3)"),
    (6, "K[x1,x2,x3,x4]/(x1^2, x2^2, x4^2, x1x3, x1x4, x2x3, x2x4, x3x4, x1x2-x3^2)"),
    (6, "K[x1,x2,x3,x4]/(x1^2, x2^2, x3^2, x4^2, x1x3, x1x4, x2x3, x2x4, x3x4)"),
    (6, "K[x1,x2,x3,x4]/(x1^3, x2^2, x3^2, x4^2, x1x2, x1x3, x1x4, x2x3, x2x4, x3x4)"),
    (6, _all_quadrics(5)),
)

NOTES = {
    8: "shorthand (x_i^2, x_ix_j) expanded",
    17: "shorthand (x_i^2, x_ix_j) expanded",
    33: "three-term generator x1x2-x1x3-x2x3",
    38: "squares x_i^2 expanded",
    39: "generator x3x4 added; the printed row has dimension 7",
    40: "squares x_i^2 expanded",
    41: "shorthand x_i^2, x_ix_j (i!=j) expanded",
    42: "shorthand (x_i^2, x_ix_j) expanded",
}


@dataclass(frozen=True)
class TableEntry:
    """One row of the classification table."""

    index: int
    declared_dim: int
    presentation: Presentation

    @property
    def text(self) -> str:
        """The row as the table writes it."""
        return format_presentation(self.presentation, style="compact")

    @property
    def note(self) -> str:
        """Remark attached to the entry, if any."""
        return NOTES.get(self.index, "")


@lru_cache(maxsize=1)
def load_table() -> Tuple[TableEntry, ...]:
    """Parse the compiled-in corpus; entries are indexed 1..42."""
    return tuple(TableEntry(i, dim, parse_presentation(text)) for i, (dim, text) in enumerate(_ROWS, start=1))


def table_entry(index: int) -> TableEntry:
    """Return row ``index`` (1-based)."""
    if not isinstance(index, int) or isinstance(index, bool) or not 1 <= index <= TABLE_SIZE:
        raise ParameterError(f"table index must be between 1 and {TABLE_SIZE} (got {index})")
    return load_table()[index - 1]
