"""Algebra presentations: the text grammar and the built-in table."""

from .parser import Presentation, format_presentation, parse_polynomial, parse_presentation, tokenize
from .table import TABLE_SIZE, TableEntry, load_table, table_entry

__all__ = [
    "Presentation",
    "TABLE_SIZE",
    "TableEntry",
    "format_presentation",
    "load_table",
    "parse_polynomial",
    "parse_presentation",
    "table_entry",
    "tokenize",
]
