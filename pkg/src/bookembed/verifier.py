"""Independent checker for book embeddings.

Deliberately simple: the strict interleaving predicate applied to every
pair of same-page edges, O(E^2).  This module is the trusted oracle for
all property tests, so clarity beats speed and it must not share logic
with the embedder.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import EmbeddedGraph
from .layout import BookEmbedding, Edge, canon


@dataclass
class Violation:
    kind: str  # crossing | missing_edge | extra_edge | bad_page | bad_order
    witness: tuple

    def __str__(self) -> str:
        return f"{self.kind}: {self.witness}"


@dataclass
class VerifierReport:
    ok: bool
    violations: list[Violation] = field(default_factory=list)

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        return "\n".join(str(v) for v in self.violations)


def _crosses(a: int, b: int, c: int, d: int) -> bool:
    """Strict interleaving of spine positions; shared endpoints never cross."""
    if a > b:
        a, b = b, a
    if c > d:
        c, d = d, c
    if a > c:
        a, b, c, d = c, d, a, b
    return a < c < b < d


def check(g: EmbeddedGraph, b: BookEmbedding) -> VerifierReport:
    """Full verification: order is a bijection on V, pages are in {1,2,3},
    the edge sets match, and no two same-page edges cross."""
    violations: list[Violation] = []
    if sorted(b.order) != list(range(g.n)):
        violations.append(Violation("bad_order", (tuple(b.order),)))
        return VerifierReport(False, violations)
    pos = b.positions()
    graph_edges = set(g.edges())
    for e in sorted(graph_edges - set(b.pages)):
        violations.append(Violation("missing_edge", e))
    for e in sorted(set(b.pages) - graph_edges):
        violations.append(Violation("extra_edge", e))
    for e, p in sorted(b.pages.items()):
        if p not in (1, 2, 3):
            violations.append(Violation("bad_page", (e, p)))
    by_page: dict[int, list[Edge]] = {}
    for e, p in b.pages.items():
        if p in (1, 2, 3) and e in graph_edges:
            by_page.setdefault(p, []).append(e)
    for p in sorted(by_page):
        edges = sorted(by_page[p])
        for i in range(len(edges)):
            u1, v1 = edges[i]
            a, bb = pos[u1], pos[v1]
            for j in range(i + 1, len(edges)):
                u2, v2 = edges[j]
                if _crosses(a, bb, pos[u2], pos[v2]):
                    violations.append(
                        Violation("crossing", (edges[i], edges[j], p))
                    )
    return VerifierReport(not violations, violations)


def crossing_count_per_page(g: EmbeddedGraph, b: BookEmbedding) -> dict[int, int]:
    """Number of crossing pairs on each page (1, 2, 3 always present)."""
    counts = {1: 0, 2: 0, 3: 0}
    report = check(g, b)
    for v in report.violations:
        if v.kind == "crossing":
            counts[v.witness[2]] += 1
    return counts


def assert_valid(g: EmbeddedGraph, b: BookEmbedding) -> None:
    report = check(g, b)
    if not report.ok:
        head = "\n".join(str(v) for v in report.violations[:10])
        raise AssertionError(f"invalid book embedding:\n{head}")
