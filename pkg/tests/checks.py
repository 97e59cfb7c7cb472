"""Property checks shared by the property suite and the acceptance gate.

Each function takes prebuilt catalog results and raises AssertionError with
a descriptive message on violation.
"""

from ringline import enumerate_points, is_neighbour
from ringline.dsl import Product
from ringline.rings import _validate


def check_ring_axioms(results):
    """Exhaustive axiom scan on every catalog ring (orders are all <= 32)."""
    for r in results:
        assert r.ring.order <= 32
        _validate(r.ring.add, r.ring.mul, r.ring.one)  # raises on violation


def check_orbit_freeness(results):
    """Every point's orbit has exactly one member per unit."""
    for r in results:
        n_units = len(r.ring.units())
        for p in r.line.points:
            assert len(p.orbit) == n_units, (
                f"{r.entry.expr}: orbit of {p.rep} has {len(p.orbit)} members, "
                f"expected {n_units}"
            )


def check_representative_independence(results, max_order=9):
    """The neighbour predicate agrees across all orbit-member substitutions
    (exhaustive on lines over rings of order <= max_order)."""
    for r in results:
        if r.ring.order > max_order:
            continue
        line = r.line
        for i in range(line.size):
            for j in range(i, line.size):
                expected = not line.is_distant(i, j)
                for p in line.points[i].orbit:
                    for q in line.points[j].orbit:
                        assert is_neighbour(r.ring, p, q) == expected, (
                            f"{r.entry.expr}: neighbour({p},{q}) deviates from "
                            f"orbit representatives {i},{j}"
                        )


def check_distant_regularity(results):
    """Each point is distant from exactly tot - 1 - oneN points."""
    for r in results:
        want = r.prof.tot - 1 - r.prof.one_n
        for i in range(r.line.size):
            got = r.line.distant_mask(i).bit_count()
            assert got == want, (
                f"{r.entry.expr}: point {i} distant from {got}, expected {want}"
            )


def check_product_point_counts(results):
    """|points(A x B x ...)| equals the product of the factor line sizes."""
    for r in results:
        expr = r.ring.expr
        if not isinstance(expr, Product):
            continue
        factor_total = 1
        for factor in expr.factors:
            from ringline import build
            factor_total *= enumerate_points(build(factor)).size
        assert factor_total == r.line.size, (
            f"{r.entry.expr}: factor line sizes multiply to {factor_total}, "
            f"line has {r.line.size}"
        )


def check_inclusion_exclusion(results):
    """jcb == oneN - 2*cap2N + cap3N on every computed profile with md == 3."""
    seen = 0
    for r in results:
        if r.prof.md != 3:
            continue
        seen += 1
        expected = r.prof.one_n - 2 * r.prof.cap2n + r.prof.cap3n
        assert r.prof.jcb == expected, (
            f"{r.entry.expr}: jcb {r.prof.jcb} != {expected}"
        )
    assert seen > 0


ALL_CHECKS = (
    check_ring_axioms,
    check_orbit_freeness,
    check_representative_independence,
    check_distant_regularity,
    check_product_point_counts,
    check_inclusion_exclusion,
)
