"""Built-in catalog: every line type over commutative rings with unity of
order 2..31, with representative ring expressions and expected profiles.

One entry per representative ring; types whose cells name alternative
constructions with the same profile get one entry per alternative.  For the
five types 8/4, 16/8, 16/12, 24/16 and 27/9 further base rings exist beyond
the constructions expressible in the DSL; those rows are marked as partial
coverage via ``complete_row = False``.

The ``_ROWS`` literal is the audit surface: one line per type, in
descending ring order (ties by ascending zero-divisor count), carrying the
seven expected numbers (tot, tpI, oneN, cap2N, cap3N, jcb, md).
"""

from __future__ import annotations

from dataclasses import dataclass

from .profile import LineProfile

_PARTIAL = False  # marks rows whose full ring list exceeds the DSL-expressible ones

_ROWS: tuple[tuple[str, tuple[int, ...], tuple[str, ...], bool], ...] = (
    ("31/1", (32, 32, 0, 0, 0, 0, 32), ("GF(31)",), True),
    ("30/22", (72, 52, 41, 20, 6, 7, 3), ("GF(2) x GF(3) x GF(5)",), True),
    ("29/1", (30, 30, 0, 0, 0, 0, 30), ("GF(29)",), True),
    ("28/10", (40, 38, 11, 2, 0, 3, 5), ("GF(4) x GF(7)",), True),
    ("28/16", (48, 44, 19, 4, 0, 11, 3), ("GF(7) x Z4", "GF(7) x GF(2)[x]/(x^2)"), True),
    ("28/22", (72, 50, 43, 22, 6, 5, 3), ("GF(2) x GF(2) x GF(7)",), True),
    ("27/1", (28, 28, 0, 0, 0, 0, 28), ("GF(27)",), True),
    ("27/9", (36, 36, 8, 0, 0, 8, 4), ("Z27", "GF(3)[x]/(x^3)"), _PARTIAL),
    ("27/11", (40, 38, 12, 2, 0, 6, 4), ("GF(3) x GF(9)",), True),
    ("27/15", (48, 42, 20, 6, 0, 2, 4), ("GF(3) x Z9", "GF(3) x GF(3)[x]/(x^2)"), True),
    ("27/19", (64, 46, 36, 18, 6, 0, 4), ("GF(3) x GF(3) x GF(3)",), True),
    ("26/14", (42, 40, 15, 2, 0, 11, 3), ("GF(2) x GF(13)",), True),
    ("25/1", (26, 26, 0, 0, 0, 0, 26), ("GF(25)",), True),
    ("25/5", (30, 30, 4, 0, 0, 4, 6), ("Z25", "GF(5)[x]/(x^2)"), True),
    ("25/9", (36, 34, 10, 2, 0, 0, 6), ("GF(5) x GF(5)",), True),
    ("24/10", (36, 34, 11, 2, 0, 5, 4), ("GF(3) x GF(8)",), True),
    ("24/16", (48, 40, 23, 8, 0, 7, 3), ("GF(3) x Z8", "GF(3) x GF(2)[x]/(x^3)"), _PARTIAL),
    ("24/18", (60, 42, 35, 18, 6, 5, 3), ("GF(2) x GF(3) x GF(4)",), True),
    ("24/20", (72, 44, 47, 28, 12, 3, 3), ("GF(2) x GF(3) x Z4", "GF(2) x GF(3) x GF(2)[x]/(x^2)"), True),
    ("24/22", (108, 46, 83, 62, 42, 1, 3), ("GF(2) x GF(2) x GF(2) x GF(3)",), True),
    ("23/1", (24, 24, 0, 0, 0, 0, 24), ("GF(23)",), True),
    ("22/12", (36, 34, 13, 2, 0, 9, 3), ("GF(2) x GF(11)",), True),
    ("21/9", (32, 30, 10, 2, 0, 4, 4), ("GF(3) x GF(7)",), True),
    ("20/8", (30, 28, 9, 2, 0, 1, 5), ("GF(5) x GF(4)",), True),
    ("20/12", (36, 32, 15, 4, 0, 7, 3), ("GF(5) x Z4", "GF(5) x GF(2)[x]/(x^2)"), True),
    ("20/16", (54, 36, 33, 18, 6, 3, 3), ("GF(5) x GF(2) x GF(2)",), True),
    ("19/1", (20, 20, 0, 0, 0, 0, 20), ("GF(19)",), True),
    ("18/10", (30, 28, 11, 2, 0, 7, 3), ("GF(2) x GF(9)",), True),
    ("18/12", (36, 30, 17, 6, 0, 5, 3), ("GF(2) x Z9", "GF(2) x GF(3)[x]/(x^2)"), True),
    ("18/14", (48, 32, 29, 16, 6, 3, 3), ("GF(2) x GF(3) x GF(3)",), True),
    ("17/1", (18, 18, 0, 0, 0, 0, 18), ("GF(17)",), True),
    ("16/1", (17, 17, 0, 0, 0, 0, 17), ("GF(16)",), True),
    ("16/4", (20, 20, 3, 0, 0, 3, 5), ("Z4[x]/(x^2+x+1)", "GF(4)[x]/(x^2)"), True),
    ("16/7", (25, 23, 8, 2, 0, 0, 5), ("GF(4) x GF(4)",), True),
    ("16/8", (24, 24, 7, 0, 0, 7, 3), ("Z16", "Z4[x]/(x^2)", "GF(2)[x]/(x^4)"), _PARTIAL),
    ("16/9", (27, 25, 10, 2, 0, 6, 3), ("GF(2) x GF(8)",), True),
    ("16/10", (30, 26, 13, 4, 0, 5, 3), ("GF(4) x Z4", "GF(4) x GF(2)[x]/(x^2)"), True),
    ("16/12", (36, 28, 19, 8, 0, 3, 3), ("Z4 x Z4", "GF(2) x Z8"), _PARTIAL),
    ("16/13", (45, 29, 28, 16, 6, 2, 3), ("GF(2) x GF(2) x GF(4)",), True),
    ("16/14", (54, 30, 37, 24, 12, 1, 3), ("GF(2) x GF(2) x Z4", "GF(2) x GF(2) x GF(2)[x]/(x^2)"), True),
    ("16/15", (81, 31, 64, 50, 36, 0, 3), ("GF(2) x GF(2) x GF(2) x GF(2)",), True),
    ("15/7", (24, 22, 8, 2, 0, 2, 4), ("GF(3) x GF(5)",), True),
    ("14/8", (24, 22, 9, 2, 0, 5, 3), ("GF(2) x GF(7)",), True),
    ("13/1", (14, 14, 0, 0, 0, 0, 14), ("GF(13)",), True),
    ("12/6", (20, 18, 7, 2, 0, 1, 4), ("GF(3) x GF(4)",), True),
    ("12/8", (24, 20, 11, 4, 0, 3, 3), ("GF(3) x Z4", "GF(3) x GF(2)[x]/(x^2)"), True),
    ("12/10", (36, 22, 23, 14, 6, 1, 3), ("GF(2) x GF(2) x GF(3)",), True),
    ("11/1", (12, 12, 0, 0, 0, 0, 12), ("GF(11)",), True),
    ("10/6", (18, 16, 7, 2, 0, 3, 3), ("GF(2) x GF(5)",), True),
    ("9/1", (10, 10, 0, 0, 0, 0, 10), ("GF(9)",), True),
    ("9/3", (12, 12, 2, 0, 0, 2, 4), ("Z9", "GF(3)[x]/(x^2)"), True),
    ("9/5", (16, 14, 6, 2, 0, 0, 4), ("GF(3) x GF(3)",), True),
    ("8/1", (9, 9, 0, 0, 0, 0, 9), ("GF(8)",), True),
    ("8/4", (12, 12, 3, 0, 0, 3, 3), ("Z8", "GF(2)[x]/(x^3)"), _PARTIAL),
    ("8/5", (15, 13, 6, 2, 0, 2, 3), ("GF(2) x GF(4)",), True),
    ("8/6", (18, 14, 9, 4, 0, 1, 3), ("GF(2) x Z4", "GF(2) x GF(2)[x]/(x^2)"), True),
    ("8/7", (27, 15, 18, 12, 6, 0, 3), ("GF(2) x GF(2) x GF(2)",), True),
    ("7/1", (8, 8, 0, 0, 0, 0, 8), ("GF(7)",), True),
    ("6/4", (12, 10, 5, 2, 0, 1, 3), ("GF(2) x GF(3)",), True),
    ("5/1", (6, 6, 0, 0, 0, 0, 6), ("GF(5)",), True),
    ("4/1", (5, 5, 0, 0, 0, 0, 5), ("GF(4)",), True),
    ("4/2", (6, 6, 1, 0, 0, 1, 3), ("Z4", "GF(2)[x]/(x^2)"), True),
    ("4/3", (9, 7, 4, 2, 0, 0, 3), ("GF(2) x GF(2)",), True),
    ("3/1", (4, 4, 0, 0, 0, 0, 4), ("GF(3)",), True),
    ("2/1", (3, 3, 0, 0, 0, 0, 3), ("GF(2)",), True),
)

LOCAL_TYPES = frozenset({"4/2", "8/4", "9/3", "16/4", "16/8", "25/5", "27/9"})

FIELD_ORDERS = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31)


@dataclass(frozen=True)
class CatalogEntry:
    """One representative ring with its type label and expected profile."""

    type_label: str
    expected: LineProfile
    expr: str
    complete_row: bool

    @property
    def ring_order(self) -> int:
        return int(self.type_label.split("/")[0])


CATALOG: tuple[CatalogEntry, ...] = tuple(
    CatalogEntry(label, LineProfile(label, *numbers), expr, complete)
    for label, numbers, exprs, complete in _ROWS
    for expr in exprs
)

TYPE_COUNT = len(_ROWS)


def entries_for_orders(lo: int, hi: int) -> tuple[CatalogEntry, ...]:
    """Catalog entries whose ring order lies in [lo, hi], in catalog order."""
    return tuple(e for e in CATALOG if lo <= e.ring_order <= hi)
