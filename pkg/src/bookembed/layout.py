"""Book embeddings: spine order plus page assignment, with file I/O."""

from __future__ import annotations

from dataclasses import dataclass

Edge = tuple[int, int]


def canon(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass
class BookEmbedding:
    """A linear layout: ``order`` lists vertices left to right along the
    spine; ``pages`` maps each edge (min, max) to a page in {1, 2, 3}."""

    order: list[int]
    pages: dict[Edge, int]

    def positions(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.order)}

    def page_counts(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for p in self.pages.values():
            counts[p] = counts.get(p, 0) + 1
        return counts

    def pages_used(self) -> int:
        return len(set(self.pages.values()))


def write_embedding(b: BookEmbedding) -> str:
    lines = ["order: " + " ".join(str(v) for v in b.order)]
    for (u, v) in sorted(b.pages):
        lines.append(f"{u} {v} {b.pages[(u, v)]}")
    return "\n".join(lines) + "\n"


def parse_embedding(text: str) -> BookEmbedding:
    rows = [
        (i + 1, ln.strip())
        for i, ln in enumerate(text.splitlines())
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if not rows:
        raise ValueError("empty embedding document")
    lineno, first = rows[0]
    if not first.startswith("order:"):
        raise ValueError(f"line {lineno}: expected 'order: ...'")
    try:
        order = [int(t) for t in first[len("order:"):].split()]
    except ValueError:
        raise ValueError(f"line {lineno}: bad order line") from None
    pages: dict[Edge, int] = {}
    for lineno, row in rows[1:]:
        parts = row.split()
        if len(parts) != 3:
            raise ValueError(f"line {lineno}: expected 'u v p'")
        try:
            u, v, p = int(parts[0]), int(parts[1]), int(parts[2])
        except ValueError:
            raise ValueError(f"line {lineno}: expected integers") from None
        if canon(u, v) in pages:
            raise ValueError(f"line {lineno}: duplicate edge")
        pages[canon(u, v)] = p
    return BookEmbedding(order, pages)
