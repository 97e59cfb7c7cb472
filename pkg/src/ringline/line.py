"""The projective line over a finite commutative ring with unity.

Points are unit-scaling orbits of admissible pairs (a, b): pairs for which
some combination x*a + y*b is a unit.  Two points are distant when the
determinant of their stacked representatives is a unit and neighbours when
it is a zero-divisor; the determinant scales by a unit under representative
substitution, so the relation is well defined on orbits.

The distant relation is stored as packed bitset rows (Python ints), one per
point, which profile computation and clique search consume directly.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from . import ideals
from .rings import FiniteRing

_GRAPH_RELATIONS = ("neighbour", "distant")


class CrossCheckError(Exception):
    """An enumeration invariant failed (indicates a construction bug)."""


@dataclass(frozen=True)
class ProjectivePoint:
    """One unit orbit: canonical representative, full orbit, type flag.

    Type I points have a unit somewhere in their representative; type II
    points consist of zero-divisor pairs only.
    """

    rep: tuple[int, int]
    orbit: frozenset[tuple[int, int]]
    type_i: bool


class ProjectiveLine:
    """Canonical point list plus the distant adjacency structure."""

    def __init__(self, ring: FiniteRing, points: tuple[ProjectivePoint, ...],
                 dist_rows: tuple[int, ...]):
        self.ring = ring
        self.points = points
        self.dist_rows = dist_rows
        self.size = len(points)
        self.full_mask = (1 << self.size) - 1
        self._index = {p.rep: i for i, p in enumerate(points)}

    def index_of(self, rep: tuple[int, int]) -> int:
        return self._index[rep]

    @property
    def canonical_triple(self) -> tuple[int, int, int]:
        """Indices of the points (1,0), (0,1) and (1,1); pairwise distant."""
        one, zero = self.ring.one, 0
        return (
            self._index[(one, zero)],
            self._index[(zero, one)],
            self._index[(one, one)],
        )

    def distant_mask(self, i: int) -> int:
        return self.dist_rows[i]

    def neighbour_mask(self, i: int) -> int:
        """All points != i that are not distant from i."""
        return ~self.dist_rows[i] & self.full_mask & ~(1 << i)

    def is_distant(self, i: int, j: int) -> bool:
        return bool(self.dist_rows[i] >> j & 1)

    def point_label(self, i: int) -> str:
        a, b = self.points[i].rep
        return f"({self.ring.labels[a]},{self.ring.labels[b]})"

    def type_i_count(self) -> int:
        return sum(1 for p in self.points if p.type_i)

    def __repr__(self) -> str:
        return f"ProjectiveLine(order={self.ring.order}, points={self.size})"


def is_admissible(ring: FiniteRing, pair: tuple[int, int]) -> bool:
    """True iff some x*a + y*b is a unit (scan over all x, y)."""
    a, b = pair
    sums = ring.add[ring.mul[:, a][:, None], ring.mul[:, b][None, :]]
    return bool(ring.unit_mask[sums].any())


def is_neighbour(ring: FiniteRing, p: tuple[int, int], q: tuple[int, int]) -> bool:
    """True iff det((p, q)) is a zero-divisor; both pairs must be admissible."""
    det = ring.sub(int(ring.mul[p[0], q[1]]), int(ring.mul[p[1], q[0]]))
    return not bool(ring.unit_mask[det])


def neighbourhood(line: ProjectiveLine, i: int) -> frozenset[int]:
    """Indices of all points neighbouring point i, i itself excluded."""
    return frozenset(ideals.bit_indices(line.neighbour_mask(i)))


def enumerate_points(ring: FiniteRing) -> ProjectiveLine:
    """Group all admissible pairs into unit orbits and build the line."""
    n = ring.order
    adm = _admissible_matrix(ring)

    units = ring.units()
    unit_rows = ring.mul[np.array(units)]  # unit_rows[t, e] = units[t] * e

    first_one: list[ProjectivePoint] = []
    second_one: list[ProjectivePoint] = []
    type_ii: list[ProjectivePoint] = []
    seen = np.zeros((n, n), dtype=bool)
    one = ring.one
    for a in range(n):
        if not adm[a].any():
            continue
        row_a = unit_rows[:, a]
        for b in range(n):
            if not adm[a, b] or seen[a, b]:
                continue
            row_b = unit_rows[:, b]
            orbit = frozenset(zip(row_a.tolist(), row_b.tolist()))
            if len(orbit) != len(units):
                raise CrossCheckError(
                    f"unit scaling is not free on admissible pair "
                    f"({ring.labels[a]},{ring.labels[b]})"
                )
            seen[row_a, row_b] = True
            if ring.unit_mask[a]:
                inv = ring.inverse(a)
                rep = (one, int(ring.mul[inv, b]))
            elif ring.unit_mask[b]:
                inv = ring.inverse(b)
                rep = (int(ring.mul[inv, a]), one)
            else:
                rep = min(orbit)
            point = ProjectivePoint(
                rep, orbit,
                type_i=bool(ring.unit_mask[rep[0]] or ring.unit_mask[rep[1]]),
            )
            if rep[0] == one:
                first_one.append(point)
            elif rep[1] == one:
                second_one.append(point)
            else:
                type_ii.append(point)

    first_one.sort(key=lambda p: p.rep[1])
    second_one.sort(key=lambda p: p.rep[0])
    type_ii.sort(key=lambda p: p.rep)
    points = tuple(first_one + second_one + type_ii)

    total_pairs = int(adm.sum())
    if total_pairs != len(points) * len(units):
        raise CrossCheckError("admissible pairs do not split evenly into orbits")
    type_i_count = sum(1 for p in points if p.type_i)
    expected = n + (n - len(units))
    if type_i_count != expected:
        raise CrossCheckError(
            f"type I count {type_i_count} != order + zero-divisors = {expected}"
        )

    return ProjectiveLine(ring, points, _distant_rows(ring, points))


def _admissible_matrix(ring: FiniteRing) -> np.ndarray:
    """(a, b) is admissible iff the ideal aR + bR is the whole ring, which
    holds exactly when some x*a + y*b is a unit."""
    n = ring.order
    masks: list[int] = []
    mask_id: dict[int, int] = {}
    elem_id = np.empty(n, dtype=np.intp)
    for e in range(n):
        m = ideals.principal_ideal(ring, e)
        if m not in mask_id:
            mask_id[m] = len(masks)
            masks.append(m)
        elem_id[e] = mask_id[m]

    full = (1 << n) - 1
    k = len(masks)
    spans = np.zeros((k, k), dtype=bool)
    for i in range(k):
        for j in range(i, k):
            hit = ideals.ideal_sum(ring, masks[i], masks[j]) == full
            spans[i, j] = spans[j, i] = hit
    return spans[elem_id[:, None], elem_id[None, :]]


def _distant_rows(ring: FiniteRing, points: tuple[ProjectivePoint, ...]) -> tuple[int, ...]:
    firsts = np.array([p.rep[0] for p in points])
    seconds = np.array([p.rep[1] for p in points])
    m1 = ring.mul[firsts[:, None], seconds[None, :]]
    m2 = ring.mul[seconds[:, None], firsts[None, :]]
    det = ring.add[m1, ring.neg[m2]]
    distant = ring.unit_mask[det]
    rows = []
    for i in range(len(points)):
        rows.append(ideals.mask_of(np.flatnonzero(distant[i])))
    return tuple(rows)


# --- graph export --------------------------------------------------------------


def _relation_rows(line: ProjectiveLine, relation: str) -> list[int]:
    if relation not in _GRAPH_RELATIONS:
        raise ValueError(f"relation must be one of {_GRAPH_RELATIONS}")
    if relation == "distant":
        return [line.distant_mask(i) for i in range(line.size)]
    return [line.neighbour_mask(i) for i in range(line.size)]


def to_dot(line: ProjectiveLine, relation: str = "neighbour") -> str:
    """Undirected DOT graph; node labels are canonical point strings."""
    rows = _relation_rows(line, relation)
    out = [f"graph {relation} {{"]
    for i in range(line.size):
        out.append(f'  p{i} [label="{line.point_label(i)}"];')
    for i in range(line.size):
        for j in ideals.bit_indices(rows[i] >> (i + 1) << (i + 1)):
            out.append(f"  p{i} -- p{j};")
    out.append("}")
    return "\n".join(out) + "\n"


def to_edge_csv(line: ProjectiveLine, relation: str = "neighbour") -> str:
    """Edge list CSV (source,target) using canonical point labels."""
    rows = _relation_rows(line, relation)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["source", "target"])
    for i in range(line.size):
        for j in ideals.bit_indices(rows[i] >> (i + 1) << (i + 1)):
            writer.writerow([line.point_label(i), line.point_label(j)])
    return buf.getvalue()
