"""Embedded planar graphs given by rotation systems.

A graph is stored as a rotation system: for every vertex, the cyclic
sequence of its neighbors in counterclockwise order.  Faces are traced
with the rule ``next(u -> v) = (v, w)`` where ``w`` is the predecessor of
``u`` in the rotation at ``v``; every traced face then lies on the left
of its traversal, and Euler's formula certifies that the rotation system
describes a genus-0 (planar) embedding.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class GraphError(ValueError):
    """Invalid input document or rotation system."""


@dataclass
class EmbeddedGraph:
    """Planar embedded graph: ``rot[v]`` lists v's neighbors in CCW order."""

    n: int
    rot: list[list[int]]

    def degree(self, v: int) -> int:
        return len(self.rot[v])

    def max_degree(self) -> int:
        return max((len(r) for r in self.rot), default=0)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted (u, v) pairs with u < v, in sorted order."""
        out = set()
        for u, nbrs in enumerate(self.rot):
            for v in nbrs:
                out.add((u, v) if u < v else (v, u))
        return sorted(out)

    def num_edges(self) -> int:
        return sum(len(r) for r in self.rot) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.rot[u]

    def copy(self) -> "EmbeddedGraph":
        return EmbeddedGraph(self.n, [list(r) for r in self.rot])

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            stack = [s]
            while stack:
                u = stack.pop()
                for v in self.rot[u]:
                    if not seen[v]:
                        seen[v] = True
                        comp.append(v)
                        stack.append(v)
            comps.append(sorted(comp))
        return comps

    def validate(self, max_degree: int = 5) -> None:
        """Check symmetry, simplicity, degree bound and genus 0."""
        for u, nbrs in enumerate(self.rot):
            for v in nbrs:
                if not 0 <= v < self.n:
                    raise GraphError(f"vertex {u}: neighbor {v} out of range")
                if v == u:
                    raise GraphError(f"vertex {u}: self-loop")
            if len(set(nbrs)) != len(nbrs):
                raise GraphError(f"vertex {u}: duplicate edge in rotation list")
            if len(nbrs) > max_degree:
                raise GraphError(f"vertex {u}: degree > {max_degree}")
        for u in range(self.n):
            for v in self.rot[u]:
                if u not in self.rot[v]:
                    raise GraphError(
                        f"asymmetric adjacency: {u} lists {v} but not vice versa"
                    )
        trace_faces(self)  # raises on Euler violation


@dataclass
class FaceSet:
    """Faces of an embedding as directed vertex cycles."""

    faces: list[list[int]]
    outer_face_id: int | None = None

    def face_len(self, i: int) -> int:
        return len(self.faces[i])


def parse_rotation_graph(text: str) -> EmbeddedGraph:
    """Parse the graph document format.

    Line 1 is ``n m``; each following line is ``i: j1 j2 ... jd`` with
    vertex i's neighbors in counterclockwise order.  Lines starting with
    '#' are ignored.  Raises GraphError with a line number on bad input.
    """
    lines = text.splitlines()
    rows: list[tuple[int, str]] = [
        (i + 1, ln.strip())
        for i, ln in enumerate(lines)
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if not rows:
        raise GraphError("empty document")
    lineno, header = rows[0]
    parts = header.split()
    if len(parts) != 2:
        raise GraphError(f"line {lineno}: expected 'n m' header")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphError(f"line {lineno}: expected integers in header") from None
    if n < 0 or m < 0:
        raise GraphError(f"line {lineno}: negative counts")
    if len(rows) - 1 != n:
        raise GraphError(f"expected {n} vertex lines, found {len(rows) - 1}")
    rot: list[list[int] | None] = [None] * n
    for lineno, row in rows[1:]:
        head, _, rest = row.partition(":")
        try:
            i = int(head.strip())
        except ValueError:
            raise GraphError(f"line {lineno}: expected 'i: neighbors'") from None
        if not 0 <= i < n:
            raise GraphError(f"line {lineno}: vertex {i} out of range")
        if rot[i] is not None:
            raise GraphError(f"line {lineno}: vertex {i} listed twice")
        try:
            nbrs = [int(t) for t in rest.split()]
        except ValueError:
            raise GraphError(f"line {lineno}: bad neighbor list") from None
        for v in nbrs:
            if not 0 <= v < n:
                raise GraphError(f"line {lineno}: neighbor {v} out of range")
            if v == i:
                raise GraphError(f"line {lineno}: self-loop at {i}")
        if len(set(nbrs)) != len(nbrs):
            raise GraphError(f"line {lineno}: duplicate edge in rotation list")
        if len(nbrs) > 5:
            raise GraphError(f"line {lineno}: degree > 5")
        rot[i] = nbrs
    g = EmbeddedGraph(n, [r if r is not None else [] for r in rot])
    if g.num_edges() != m:
        raise GraphError(f"header says m={m} but document has {g.num_edges()} edges")
    g.validate()
    return g


def write_rotation_graph(g: EmbeddedGraph) -> str:
    lines = [f"{g.n} {g.num_edges()}"]
    for i in range(g.n):
        lines.append(f"{i}: " + " ".join(str(v) for v in g.rot[i]))
    return "\n".join(lines) + "\n"


def _face_next(rot: dict[int, list[int]], u: int, v: int) -> int:
    """Successor rule: next neighbor after the reversed edge, clockwise."""
    r = rot[v]
    return r[(r.index(u) - 1) % len(r)]


def trace_faces_view(rot: dict[int, list[int]]) -> list[list[int]]:
    """Trace faces of a rotation view (dict vertex -> CCW neighbor list)."""
    visited: set[tuple[int, int]] = set()
    faces: list[list[int]] = []
    for u in sorted(rot):
        for v in rot[u]:
            if (u, v) in visited:
                continue
            face = []
            a, b = u, v
            while (a, b) not in visited:
                visited.add((a, b))
                face.append(a)
                a, b = b, _face_next(rot, a, b)
            faces.append(face)
    return faces


def trace_faces(g: EmbeddedGraph) -> FaceSet:
    """Trace all faces and assert Euler's formula per component."""
    rot = {v: g.rot[v] for v in range(g.n)}
    faces = trace_faces_view(rot)
    if sum(len(f) for f in faces) != 2 * g.num_edges():
        raise GraphError("face traversal does not cover every directed edge once")
    # Euler check per connected component.
    comp_id = [-1] * g.n
    comps = g.components()
    for ci, comp in enumerate(comps):
        for v in comp:
            comp_id[v] = ci
    nfaces = [0] * len(comps)
    for f in faces:
        nfaces[comp_id[f[0]]] += 1
    for ci, comp in enumerate(comps):
        ne = sum(g.degree(v) for v in comp) // 2
        nf = nfaces[ci] if ne > 0 else 1
        if len(comp) - ne + nf != 2:
            raise GraphError("non-planar embedding: embedding is not genus 0")
    return FaceSet(faces)


def _is_simple_cycle(face: list[int]) -> bool:
    return len(face) >= 3 and len(set(face)) == len(face)


def face_is_chordless(g: EmbeddedGraph, face: list[int]) -> bool:
    """True if the face is a simple cycle with no graph chord."""
    if not _is_simple_cycle(face):
        return False
    k = len(face)
    on = {v: i for i, v in enumerate(face)}
    for i, v in enumerate(face):
        for u in g.rot[v]:
            j = on.get(u)
            if j is None:
                continue
            if (j - i) % k not in (1, k - 1):
                return False
    return True


def choose_outer_face(
    g: EmbeddedGraph, faces: FaceSet, must_contain: int | None = None
) -> tuple[int, bool]:
    """Pick the outer face, preferring a chordless simple cycle.

    Faces are scanned in increasing (length, id) order; the first
    chordless one wins.  If none is chordless, the first candidate is
    returned together with a False flag, signalling that the leftmost
    vertex of some cycle may need the separating-path repair downstream.
    """
    idx = sorted(range(len(faces.faces)), key=lambda i: (len(faces.faces[i]), i))
    if must_contain is not None:
        idx = [i for i in idx if must_contain in faces.faces[i]]
    if not idx:
        raise GraphError("no candidate face")
    for i in idx:
        if face_is_chordless(g, faces.faces[i]):
            faces.outer_face_id = i
            return i, True
    faces.outer_face_id = idx[0]
    return idx[0], False


@dataclass
class Block:
    """One biconnected component: vertices plus its induced edges."""

    vertices: frozenset[int]
    edges: list[tuple[int, int]]

    def is_single_edge(self) -> bool:
        return len(self.edges) == 1


def biconnected_components(
    g: EmbeddedGraph, comp: list[int] | None = None
) -> tuple[list[Block], set[int]]:
    """Blocks and cut vertices (iterative Hopcroft–Tarjan).

    Restricted to ``comp`` when given.  Isolated vertices yield no block.
    """
    verts = comp if comp is not None else list(range(g.n))
    vset = set(verts)
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    parent: dict[int, int] = {}
    stack_edges: list[tuple[int, int]] = []
    blocks: list[Block] = []
    cuts: set[int] = set()
    timer = 0

    for root in verts:
        if root in disc:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        work: list[tuple[int, int]] = [(root, 0)]
        while work:
            u, i = work[-1]
            if i < len(g.rot[u]):
                work[-1] = (u, i + 1)
                v = g.rot[u][i]
                if v not in vset:
                    continue
                if v not in disc:
                    parent[v] = u
                    if u == root:
                        root_children += 1
                    disc[v] = low[v] = timer
                    timer += 1
                    stack_edges.append((u, v))
                    work.append((v, 0))
                elif v != parent.get(u) and disc[v] < disc[u]:
                    stack_edges.append((u, v))
                    low[u] = min(low[u], disc[v])
            else:
                work.pop()
                if work:
                    p = work[-1][0]
                    low[p] = min(low[p], low[u])
                    if low[u] >= disc[p]:
                        # Pop one block off the edge stack.
                        comp_edges = []
                        while stack_edges:
                            e = stack_edges.pop()
                            comp_edges.append(e)
                            if e == (p, u):
                                break
                        if comp_edges:
                            vs = set()
                            for a, b in comp_edges:
                                vs.add(a)
                                vs.add(b)
                            blocks.append(
                                Block(
                                    frozenset(vs),
                                    sorted(
                                        (a, b) if a < b else (b, a)
                                        for a, b in comp_edges
                                    ),
                                )
                            )
                        if p == root:
                            if root_children > 1:
                                cuts.add(root)
                        else:
                            cuts.add(p)
    return blocks, cuts


def _bridges_view(rot: dict[int, list[int]]) -> set[tuple[int, int]]:
    """Bridges of the (undirected, simple) view, iterative Tarjan."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    bridges: set[tuple[int, int]] = set()
    timer = 0
    for root in sorted(rot):
        if root in disc:
            continue
        disc[root] = low[root] = timer
        timer += 1
        # frames: (vertex, parent, neighbor index)
        work: list[list[int]] = [[root, -1, 0]]
        while work:
            u, par, i = work[-1]
            if i < len(rot[u]):
                work[-1][2] = i + 1
                v = rot[u][i]
                if v == par:
                    continue
                if v not in disc:
                    disc[v] = low[v] = timer
                    timer += 1
                    work.append([v, u, 0])
                else:
                    low[u] = min(low[u], disc[v])
            else:
                work.pop()
                if work:
                    p = work[-1][0]
                    low[p] = min(low[p], low[u])
                    if low[u] > disc[p]:
                        bridges.add((p, u) if p < u else (u, p))
    return bridges


@dataclass
class BlockForest:
    """Bridgeless components of an interior subgraph, contracted.

    ``blocks`` are the 2-edge-connected components (singletons included);
    ``bridges`` connect distinct blocks and form a forest.  Anchor and
    ancillary roles are assigned by the embedder relative to a cycle.
    """

    blocks: list[list[int]]
    block_of: dict[int, int]
    bridges: list[tuple[int, int]]
    roles: dict[int, str] = field(default_factory=dict)  # block idx -> role

    def forest_adj(self) -> dict[int, list[tuple[int, tuple[int, int]]]]:
        adj: dict[int, list[tuple[int, tuple[int, int]]]] = {
            i: [] for i in range(len(self.blocks))
        }
        for u, v in self.bridges:
            bu, bv = self.block_of[u], self.block_of[v]
            adj[bu].append((bv, (u, v)))
            adj[bv].append((bu, (v, u)))
        return adj

    def is_forest(self) -> bool:
        # Forest iff every block-graph component has edges = nodes - 1.
        adj = self.forest_adj()
        seen: set[int] = set()
        for s in range(len(self.blocks)):
            if s in seen:
                continue
            nodes, half_edges = 0, 0
            seen.add(s)
            stack = [s]
            while stack:
                u = stack.pop()
                nodes += 1
                half_edges += len(adj[u])
                for v, _ in adj[u]:
                    if v not in seen:
                        seen.add(v)
                        stack.append(v)
            if half_edges != 2 * (nodes - 1):
                return False
        return True


def contract_bridgeless(
    g: EmbeddedGraph, interior: set[int] | list[int]
) -> BlockForest:
    """Contract each 2-edge-connected component of the induced subgraph."""
    vs = set(interior)
    rot = {v: [u for u in g.rot[v] if u in vs] for v in vs}
    bridges = _bridges_view(rot)
    block_of: dict[int, int] = {}
    blocks: list[list[int]] = []
    for s in sorted(vs):
        if s in block_of:
            continue
        bi = len(blocks)
        comp = [s]
        block_of[s] = bi
        stack = [s]
        while stack:
            u = stack.pop()
            for v in rot[u]:
                e = (u, v) if u < v else (v, u)
                if e in bridges or v in block_of:
                    continue
                block_of[v] = bi
                comp.append(v)
                stack.append(v)
        blocks.append(sorted(comp))
    return BlockForest(blocks, block_of, sorted(bridges))
