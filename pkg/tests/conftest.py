from typing import NamedTuple

import pytest

from ringline import (CATALOG, CatalogEntry, FiniteRing, LineProfile,
                      ProjectiveLine, build, enumerate_points, parse, profile)


class CatalogResult(NamedTuple):
    entry: CatalogEntry
    ring: FiniteRing
    line: ProjectiveLine
    prof: LineProfile


@pytest.fixture(scope="session")
def catalog_results() -> list[CatalogResult]:
    """Every catalog entry built, enumerated and profiled once per session."""
    results = []
    for entry in CATALOG:
        ring = build(parse(entry.expr))
        line = enumerate_points(ring)
        results.append(CatalogResult(entry, ring, line, profile(line)))
    return results


@pytest.fixture(scope="session")
def by_expr(catalog_results) -> dict[str, CatalogResult]:
    return {r.entry.expr: r for r in catalog_results}
