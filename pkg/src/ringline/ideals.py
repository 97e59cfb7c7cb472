"""Ideal lattice, maximal ideals, Jacobson radical and locality.

Ideals are bitmasks over element indices (bit e set = element e belongs).
The full lattice is the fixpoint of pairwise ideal sums seeded with all
principal ideals; every ideal of a finite ring with unity is a finite sum
of principal ideals, so the fixpoint is complete.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .rings import FiniteRing


class InternalError(Exception):
    """Two independent derivations of the same invariant disagree."""


def bit_indices(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(indices) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << int(i)
    return mask


def principal_ideal(ring: FiniteRing, g: int) -> int:
    """Smallest ideal containing g: additive closure of {g*y : y in R}."""
    mask = mask_of(np.unique(ring.mul[:, g]))
    while True:
        closed = ideal_sum(ring, mask, mask)
        if closed == mask:
            return mask
        mask = closed


def ideal_sum(ring: FiniteRing, i_mask: int, j_mask: int) -> int:
    """{i + j : i in I, j in J}; a sum of ideals is again an ideal."""
    mi = np.array(bit_indices(i_mask))
    mj = np.array(bit_indices(j_mask))
    return mask_of(np.unique(ring.add[np.ix_(mi, mj)]))


@dataclass(frozen=True)
class IdealLattice:
    """All ideals of a ring, its maximal ideals and Jacobson radical."""

    ring: FiniteRing
    ideals: tuple[int, ...]
    maximal: tuple[int, ...]
    radical: int

    def members(self, mask: int) -> list[int]:
        return bit_indices(mask)

    def labels(self, mask: int) -> list[str]:
        return [self.ring.labels[e] for e in bit_indices(mask)]


def all_ideals(ring: FiniteRing) -> IdealLattice:
    """Full ideal lattice with maximal ideals and the Jacobson radical.

    The radical is computed both as the intersection of the maximal ideals
    and as {x : 1 - x*y is a unit for every y}; the two must agree.
    """
    principal = {principal_ideal(ring, g) for g in range(ring.order)}
    ideals = set(principal)
    queue = list(principal)
    while queue:
        i_mask = queue.pop()
        for j_mask in list(ideals):
            s = ideal_sum(ring, i_mask, j_mask)
            if s not in ideals:
                ideals.add(s)
                queue.append(s)

    full = (1 << ring.order) - 1
    proper = [m for m in ideals if m != full]
    maximal = [
        m for m in proper
        if not any(m != other and (m | other) == other for other in proper)
    ]

    radical = full
    for m in maximal:
        radical &= m
    if radical != _radical_by_unit_test(ring):
        raise InternalError(
            "radical mismatch: maximal-ideal intersection disagrees with the "
            "1 - x*y unit characterization"
        )

    key = lambda m: (m.bit_count(), m)
    return IdealLattice(
        ring=ring,
        ideals=tuple(sorted(ideals, key=key)),
        maximal=tuple(sorted(maximal, key=key)),
        radical=radical,
    )


def _radical_by_unit_test(ring: FiniteRing) -> int:
    mask = 0
    one_minus = ring.add[ring.one, ring.neg]  # one_minus[v] = 1 - v
    for x in range(ring.order):
        if ring.unit_mask[one_minus[ring.mul[x]]].all():
            mask |= 1 << x
    return mask


def is_local(ring: FiniteRing, lattice: IdealLattice | None = None) -> bool:
    """True iff the ring has exactly one maximal ideal.

    Cross-checked against the equivalent criterion that the zero-divisors
    form an ideal (i.e. are closed under addition).
    """
    if lattice is None:
        lattice = all_ideals(ring)
    unique_maximal = len(lattice.maximal) == 1

    zd = np.flatnonzero(~ring.unit_mask)
    zd_closed = not ring.unit_mask[ring.add[np.ix_(zd, zd)]].any()
    if zd_closed != unique_maximal:
        raise InternalError(
            "locality mismatch: maximal-ideal count disagrees with "
            "zero-divisor additive closure"
        )
    return unique_maximal


def residue_field_sizes(lattice: IdealLattice) -> list[int]:
    """|R/M| for each maximal ideal M, in the lattice's order."""
    return [lattice.ring.order // m.bit_count() for m in lattice.maximal]
