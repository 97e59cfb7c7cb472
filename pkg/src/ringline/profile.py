"""Seven-number classification profile of a projective line.

The profile of a line is (tot, tpI, oneN, cap2N, cap3N, jcb, md):
total points, type I points, neighbourhood size of a generic point, the
sizes of the pairwise and triple intersections of neighbourhoods of
mutually distant points, the number of points unique to one neighbourhood
within a maximum family of pairwise distant points, and the size of that
family (the clique number of the distant graph, found exactly).

Lines over rings of the same structure share one profile; homogeneity of
every profile entry across base-point choices is cross-checked during
computation and a violation raises HomogeneityError.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Hashable, Iterable

from .line import ProjectiveLine

_PAIR_SAMPLE = 50
_SAMPLE_SEED = 0x5EED


class HomogeneityError(Exception):
    """A profile entry differs between supposedly equivalent base points."""


@dataclass(frozen=True)
class LineProfile:
    """Classification profile; type_label is "order/zero-divisor-count"."""

    type_label: str
    tot: int
    tpi: int
    one_n: int
    cap2n: int
    cap3n: int
    jcb: int
    md: int

    @property
    def numbers(self) -> tuple[int, int, int, int, int, int, int]:
        return (self.tot, self.tpi, self.one_n, self.cap2n, self.cap3n,
                self.jcb, self.md)


class _CliqueSearch:
    """Branch and bound maximum clique over bitset adjacency rows, with a
    greedy-colouring upper bound (vertices expanded in reverse colour order)."""

    def __init__(self, rows):
        self.rows = rows
        self.best: list[int] = []

    def expand(self, clique: list[int], cand: int) -> None:
        if cand == 0:
            if len(clique) > len(self.best):
                self.best = clique.copy()
            return
        order, bounds = self._colour(cand)
        for i in range(len(order) - 1, -1, -1):
            if len(clique) + bounds[i] <= len(self.best):
                return
            v = order[i]
            clique.append(v)
            self.expand(clique, cand & self.rows[v])
            clique.pop()
            cand &= ~(1 << v)

    def _colour(self, cand: int):
        order: list[int] = []
        bounds: list[int] = []
        rest = cand
        colour = 0
        while rest:
            colour += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                bit = 1 << v
                avail &= ~bit & ~self.rows[v]
                rest &= ~bit
                order.append(v)
                bounds.append(colour)
        return order, bounds


def max_distant_set(line: ProjectiveLine) -> list[int]:
    """A maximum set of pairwise distant points (exact maximum clique).

    When the canonical triple (1,0), (0,1), (1,1) is pairwise distant the
    search is seeded with it and returns a maximum clique containing the
    triple whenever one exists.
    """
    rows = line.dist_rows
    search = _CliqueSearch(rows)
    u, v, w = line.canonical_triple
    seeded: list[int] = []
    if line.is_distant(u, v) and line.is_distant(u, w) and line.is_distant(v, w):
        search.best = []
        search.expand([u, v, w], rows[u] & rows[v] & rows[w])
        seeded = search.best
    search.best = list(seeded)
    search.expand([], line.full_mask)
    if len(search.best) > len(seeded):
        return sorted(search.best)
    return sorted(seeded)


def jacobson_points(line: ProjectiveLine, family: Iterable[int], member: int) -> frozenset[int]:
    """Points in member's neighbourhood that no other family member's
    neighbourhood contains."""
    others = 0
    for t in family:
        if t != member:
            others |= line.neighbour_mask(t)
    mask = line.neighbour_mask(member) & ~others
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return frozenset(out)


def profile(line: ProjectiveLine) -> LineProfile:
    """Compute the seven-number profile of a line, with homogeneity checks."""
    m = line.size
    nbr = [line.neighbour_mask(i) for i in range(m)]

    degrees = {row.bit_count() for row in nbr}
    if len(degrees) != 1:
        raise HomogeneityError(f"neighbourhood sizes differ: {sorted(degrees)}")
    one_n = degrees.pop()

    u, v, w = line.canonical_triple
    cap2n = (nbr[u] & nbr[v]).bit_count()
    cap3n = (nbr[u] & nbr[v] & nbr[w]).bit_count()
    _check_pair_overlaps(line, nbr, cap2n)

    family = max_distant_set(line)
    jcb_counts = {len(jacobson_points(line, family, t)) for t in family}
    if len(jcb_counts) != 1:
        raise HomogeneityError(
            f"per-member unique-neighbourhood counts differ: {sorted(jcb_counts)}"
        )
    jcb = jcb_counts.pop()

    ring = line.ring
    zd_count = ring.order - sum(1 for _ in ring.units())
    return LineProfile(
        type_label=f"{ring.order}/{zd_count}",
        tot=m,
        tpi=line.type_i_count(),
        one_n=one_n,
        cap2n=cap2n,
        cap3n=cap3n,
        jcb=jcb,
        md=len(family),
    )


def _check_pair_overlaps(line: ProjectiveLine, nbr: list[int], cap2n: int) -> None:
    """cap2N must be identical over sampled distant pairs."""
    pairs = [
        (i, j)
        for i in range(line.size)
        for j in range(i + 1, line.size)
        if line.is_distant(i, j)
    ]
    if len(pairs) > _PAIR_SAMPLE:
        pairs = random.Random(_SAMPLE_SEED).sample(pairs, _PAIR_SAMPLE)
    for i, j in pairs:
        got = (nbr[i] & nbr[j]).bit_count()
        if got != cap2n:
            raise HomogeneityError(
                f"distant pair ({i},{j}) overlaps in {got} points, expected {cap2n}"
            )


def group_profiles(
    entries: Iterable[tuple[Hashable, LineProfile]],
) -> list[tuple[tuple[int, ...], list[Hashable]]]:
    """Partition entries by identical seven-number profile, preserving the
    order of first appearance."""
    groups: dict[tuple[int, ...], list[Hashable]] = {}
    for key, prof in entries:
        groups.setdefault(prof.numbers, []).append(key)
    return list(groups.items())
