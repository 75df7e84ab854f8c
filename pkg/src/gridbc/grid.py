"""Grid graphs and their bicliques.

The p x q grid graph has vertex set [q] x [p]: a vertex is a 1-based
(col, row) pair and (a, b) ~ (a', b') iff |a - a'| + |b - b'| = 1.  Row 1
is the bottom row.  A biclique is a complete bipartite subgraph; in a grid
the only shapes are stars K_{1,k} (k <= 4) and the 4-cycle K_{2,2} on a
unit square, and the edge-maximal ones are K_{1,3} at degree-3 boundary
vertices, K_{1,4} at interior vertices, the unit-square 4-cycles, and (on
1 x q paths) the K_{1,2} at interior path vertices.

Edges carry a canonical numbering used by the JSON interchange format and
by the bitmap accounting throughout the package: horizontal edges first in
row-major order (row 1 upward, left to right within a row), then vertical
edges row-major (the edge (c, r)-(c, r+1) is filed under row r).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

Vertex = tuple[int, int]  # (col, row), 1-based
EdgePair = tuple[Vertex, Vertex]  # canonical: lexicographically smaller endpoint first


def canonical_edge(u: Vertex, v: Vertex) -> EdgePair:
    """Order an endpoint pair canonically (no adjacency check)."""
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class Grid:
    """The p x q grid graph (p rows, q cols) with cached derived views."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p < 1 or self.q < 1:
            raise ValueError(f"grid dimensions must be positive, got {self.p}x{self.q}")

    # -- vertices -------------------------------------------------------------

    @property
    def num_vertices(self) -> int:
        return self.p * self.q

    def vertices(self) -> Iterator[Vertex]:
        for r in range(1, self.p + 1):
            for c in range(1, self.q + 1):
                yield (c, r)

    def in_grid(self, v: Vertex) -> bool:
        c, r = v
        return 1 <= c <= self.q and 1 <= r <= self.p

    def neighbors(self, v: Vertex) -> tuple[Vertex, ...]:
        c, r = v
        cand = ((c - 1, r), (c + 1, r), (c, r - 1), (c, r + 1))
        return tuple(u for u in cand if self.in_grid(u))

    def degree(self, v: Vertex) -> int:
        return len(self.neighbors(v))

    @property
    def corners(self) -> tuple[Vertex, ...]:
        return ((1, 1), (1, self.p), (self.q, 1), (self.q, self.p))

    def is_boundary_vertex(self, v: Vertex) -> bool:
        c, r = v
        return c == 1 or c == self.q or r == 1 or r == self.p

    # -- edges and the canonical numbering --------------------------------------

    @property
    def num_edges(self) -> int:
        return 2 * self.p * self.q - self.p - self.q

    @cached_property
    def edges(self) -> tuple[EdgePair, ...]:
        """All edges; list position is the canonical edge index."""
        horiz = [
            ((c, r), (c + 1, r)) for r in range(1, self.p + 1) for c in range(1, self.q)
        ]
        vert = [
            ((c, r), (c, r + 1)) for r in range(1, self.p) for c in range(1, self.q + 1)
        ]
        return tuple(horiz + vert)

    @cached_property
    def edge_index(self) -> dict[EdgePair, int]:
        return {e: i for i, e in enumerate(self.edges)}

    def edge(self, u: Vertex, v: Vertex) -> EdgePair:
        """Canonical edge for an adjacent vertex pair; rejects non-edges."""
        e = canonical_edge(u, v)
        if e not in self.edge_index:
            raise ValueError(f"{u}-{v} is not an edge of the {self.p}x{self.q} grid")
        return e

    def edges_mask(self, edges: Iterable[EdgePair]) -> int:
        """Bitmap over canonical edge indices."""
        m = 0
        idx = self.edge_index
        for e in edges:
            m |= 1 << idx[e]
        return m

    # -- boundary ----------------------------------------------------------------

    @cached_property
    def outer_cycle_vertices(self) -> tuple[Vertex, ...]:
        """Boundary cycle order: (1,1) along the bottom, up the right side,
        back along the top, down the left side.  Requires p, q >= 2."""
        if self.p < 2 or self.q < 2:
            raise ValueError(f"no outer cycle for a {self.p}x{self.q} grid")
        p, q = self.p, self.q
        out: list[Vertex] = []
        out.extend((c, 1) for c in range(1, q + 1))
        out.extend((q, r) for r in range(2, p + 1))
        out.extend((c, p) for c in range(q - 1, 0, -1))
        out.extend((1, r) for r in range(p - 1, 1, -1))
        return tuple(out)

    @cached_property
    def outer_cycle_edges(self) -> tuple[EdgePair, ...]:
        vs = self.outer_cycle_vertices
        return tuple(
            canonical_edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))
        )

    @cached_property
    def outer_cycle_edge_set(self) -> frozenset[EdgePair]:
        return frozenset(self.outer_cycle_edges)

    # -- unit squares ---------------------------------------------------------------

    def square_anchors(self) -> Iterator[Vertex]:
        for r in range(1, self.p):
            for c in range(1, self.q):
                yield (c, r)


def make_grid(p: int, q: int) -> Grid:
    """Build the p x q grid graph (p rows, q cols)."""
    return Grid(p, q)


def outer_cycle(grid: Grid) -> tuple[EdgePair, ...]:
    """Ordered edge list of the boundary cycle; errors on path grids."""
    return grid.outer_cycle_edges


# -- bicliques ------------------------------------------------------------------


@dataclass(frozen=True)
class FourCycle:
    """Unit-square 4-cycle, identified by its lower-left vertex."""

    anchor: Vertex

    def sort_key(self) -> tuple:
        return (0, self.anchor, ())


@dataclass(frozen=True, init=False)
class Star:
    """Star biclique K_{1,k}: a center plus 1..4 distinct leaves."""

    center: Vertex
    leaves: frozenset[Vertex]

    def __init__(self, center: Vertex, leaves: Iterable[Vertex]):
        object.__setattr__(self, "center", center)
        object.__setattr__(self, "leaves", frozenset(leaves))
        if not 1 <= len(self.leaves) <= 4:
            raise ValueError(
                f"star at {center} needs 1..4 leaves, got {len(self.leaves)}"
            )

    def sort_key(self) -> tuple:
        return (1, self.center, tuple(sorted(self.leaves)))


Biclique = FourCycle | Star


def biclique_sort_key(b: Biclique) -> tuple:
    return b.sort_key()


def biclique_edges(grid: Grid, b: Biclique) -> frozenset[EdgePair]:
    """Edge set of a biclique (requires the biclique to fit the grid)."""
    if isinstance(b, FourCycle):
        c, r = b.anchor
        if not (1 <= c <= grid.q - 1 and 1 <= r <= grid.p - 1):
            raise ValueError(
                f"4-cycle anchor {b.anchor} out of range for {grid.p}x{grid.q}"
            )
        return frozenset(
            (
                ((c, r), (c + 1, r)),
                ((c, r + 1), (c + 1, r + 1)),
                ((c, r), (c, r + 1)),
                ((c + 1, r), (c + 1, r + 1)),
            )
        )
    return frozenset(grid.edge(b.center, leaf) for leaf in b.leaves)


def element_errors(grid: Grid, b: Biclique) -> list[str]:
    """Reasons an element is not a valid biclique of the grid (empty if valid)."""
    errs: list[str] = []
    if isinstance(b, FourCycle):
        c, r = b.anchor
        if not (1 <= c <= grid.q - 1 and 1 <= r <= grid.p - 1):
            errs.append(f"4-cycle anchor {b.anchor} out of range")
        return errs
    if not grid.in_grid(b.center):
        errs.append(f"star center {b.center} out of range")
        return errs
    for leaf in sorted(b.leaves):
        if not grid.in_grid(leaf):
            errs.append(f"star leaf {leaf} out of range")
        elif abs(leaf[0] - b.center[0]) + abs(leaf[1] - b.center[1]) != 1:
            errs.append(f"star leaf {leaf} not adjacent to center {b.center}")
    return errs


def is_maximal(grid: Grid, b: Biclique) -> bool:
    """Edge-maximality among complete bipartite subgraphs of the grid.

    4-cycles are always maximal.  A star is maximal when it takes every
    neighbor of its center and the center has degree >= 3; on 1 x q paths
    the full star at any vertex of degree >= 1 that no larger star
    swallows, i.e. the K_{1,2} at interior vertices (or the single edge of
    the 2-vertex path).
    """
    if element_errors(grid, b):
        return False
    if isinstance(b, FourCycle):
        return True
    nbrs = set(grid.neighbors(b.center))
    if b.leaves != nbrs:
        return False
    if min(grid.p, grid.q) == 1:
        n = max(grid.p, grid.q)
        return len(nbrs) == 2 or n == 2
    return len(nbrs) >= 3


# -- covers ----------------------------------------------------------------------


@dataclass(frozen=True)
class Cover:
    """A duplicate-free, canonically ordered collection of bicliques on a grid."""

    p: int
    q: int
    elements: tuple[Biclique, ...]

    @classmethod
    def of(cls, grid: Grid, elements: Iterable[Biclique]) -> "Cover":
        elems = sorted(elements, key=biclique_sort_key)
        for a, b in itertools.pairwise(elems):
            if a == b:
                raise ValueError(f"duplicate cover element {a}")
        return cls(grid.p, grid.q, tuple(elems))

    @property
    def grid(self) -> Grid:
        return Grid(self.p, self.q)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Biclique]:
        return iter(self.elements)

    def stars(self) -> tuple[Star, ...]:
        return tuple(b for b in self.elements if isinstance(b, Star))

    def cycles(self) -> tuple[FourCycle, ...]:
        return tuple(b for b in self.elements if isinstance(b, FourCycle))


def transpose_cover(cover: Cover) -> Cover:
    """Reflect a cover across the main diagonal (swap rows and columns)."""
    flipped: list[Biclique] = []
    for b in cover:
        if isinstance(b, FourCycle):
            c, r = b.anchor
            flipped.append(FourCycle((r, c)))
        else:
            flipped.append(
                Star((b.center[1], b.center[0]), ((y, x) for x, y in b.leaves))
            )
    return Cover.of(Grid(cover.q, cover.p), flipped)


def enumerate_maximal_bicliques(grid: Grid) -> tuple[Biclique, ...]:
    """All edge-maximal bicliques in canonical order.

    For p, q >= 2: one 4-cycle per unit square, one K_{1,3} per degree-3
    boundary vertex, one K_{1,4} per interior vertex (corner K_{1,2} stars
    are inside the corner 4-cycle).  For path grids: the K_{1,2} at each
    interior vertex, or the single edge of the 2-vertex path.
    """
    p, q = grid.p, grid.q
    out: list[Biclique] = []
    if min(p, q) == 1:
        n = max(p, q)
        if n == 1:
            return ()
        if n == 2:
            verts = list(grid.vertices())
            return (Star(verts[0], [verts[1]]),)
        for v in grid.vertices():
            if grid.degree(v) == 2:
                out.append(Star(v, grid.neighbors(v)))
    else:
        out.extend(FourCycle(a) for a in grid.square_anchors())
        for v in grid.vertices():
            if grid.degree(v) >= 3:
                out.append(Star(v, grid.neighbors(v)))
    return tuple(sorted(out, key=biclique_sort_key))


def maximalize(grid: Grid, cover: Cover) -> Cover:
    """Replace every element by a maximal superset biclique and merge duplicates.

    Deterministic choice: a containing 4-cycle is preferred over a star
    superset, smallest anchor first; otherwise the full star at the
    element's center (for a single edge whose own center cannot carry a
    maximal star, the full star at the other endpoint).
    """
    replaced: list[Biclique] = []
    for b in cover:
        errs = element_errors(grid, b)
        if errs:
            raise ValueError(f"invalid element {b}: {errs[0]}")
        replaced.append(_maximal_superset(grid, b))
    return Cover.of(grid, set(replaced))


def _maximal_superset(grid: Grid, b: Biclique) -> Biclique:
    if is_maximal(grid, b):
        return b
    edges = biclique_edges(grid, b)
    verts = {v for e in edges for v in e}
    cmin = min(v[0] for v in verts)
    rmin = min(v[1] for v in verts)
    for anchor in sorted(
        itertools.product(range(cmin - 1, cmin + 2), range(rmin - 1, rmin + 2))
    ):
        c, r = anchor
        if not (1 <= c <= grid.q - 1 and 1 <= r <= grid.p - 1):
            continue
        if edges <= biclique_edges(grid, FourCycle(anchor)):
            return FourCycle(anchor)
    assert isinstance(b, Star)
    for center in sorted((b.center, *b.leaves)):
        full = Star(center, grid.neighbors(center))
        if edges <= biclique_edges(grid, full) and is_maximal(grid, full):
            return full
    raise ValueError(f"no maximal superset for {b} on {grid.p}x{grid.q}")
