"""Structural analysis of covers along the grid boundary.

For a cover of maximal elements, a *boundary element* is one containing at
least one outer-cycle edge.  H is the subgraph formed by the edges of the
boundary 4-cycles; a *fence* is a connected component of H and its size is
the number of boundary 4-cycles in it.  A *link* is a connected component
of Out minus E(H) containing at least two vertices and no corner (an arc
that contains a corner is not a link; such arcs are reported separately).

A link of length k on one side generates a *staircase*: walk both walls
from the link's ends (down twice, then alternate stepping inward along the
side and down), and take the subgraph enclosed by the link, the walls, and
possibly a stretch of the opposite side.  The staircase's length is k.

On a normalized minimum cover of an even grid these regions organize
rigidly: each size-2 fence tips a *pyramid* (a staircase of length
2p - 4 whose only thick edge is the fence's doubled edge) and the
remaining staircases pair up into *double staircases* sharing their unique
thick edge, with even lengths 2a, 2b and a + b in {p - 2, p}.  Writing n
and m for the pyramid and pair counts, the waste satisfies
w = tau + n + m, complementing the exact identity
beta + tau = p + q - 2 - c/2 - b_1/2 + sum_{i>=3} (i/2 - 1) b_i
where beta counts edges doubly covered by boundary 4-cycles, b_i the
fences of size i, and c the corners covered by fences.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .grid import (
    Biclique,
    Cover,
    EdgePair,
    FourCycle,
    Grid,
    Star,
    Vertex,
    biclique_edges,
    biclique_sort_key,
    canonical_edge,
    is_maximal,
)
from .verify import is_normalized, verify_cover


@dataclass(frozen=True)
class Fence:
    """Maximal vertex-connected group of boundary 4-cycles."""

    cycles: tuple[FourCycle, ...]
    edges: frozenset[EdgePair]

    @property
    def size(self) -> int:
        return len(self.cycles)

    def shared_edges(self) -> frozenset[EdgePair]:
        """Edges lying in two of the fence's 4-cycles."""
        counts = Counter()
        for sq in self.cycles:
            counts.update(_square_edges(sq))
        return frozenset(e for e, n in counts.items() if n >= 2)


@dataclass(frozen=True)
class Link:
    """Corner-free boundary arc uncovered by fences (>= 2 vertices)."""

    vertices: tuple[Vertex, ...]  # ascending along the side
    side: str  # top | bottom | left | right

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def edges(self) -> tuple[EdgePair, ...]:
        vs = self.vertices
        return tuple(canonical_edge(vs[i], vs[i + 1]) for i in range(len(vs) - 1))


@dataclass(frozen=True)
class Staircase:
    """Region generated by a link via the two-down-then-alternate walls."""

    link: Link
    vertices: frozenset[Vertex]
    edges: frozenset[EdgePair]
    reached_far_side: bool

    @property
    def length(self) -> int:
        return self.link.length


@dataclass(frozen=True)
class BoundaryAnalysis:
    boundary_stars: tuple[Star, ...]
    boundary_cycles: tuple[FourCycle, ...]
    h_edges: frozenset[EdgePair]
    fences: tuple[Fence, ...]
    links: tuple[Link, ...]
    non_link_arcs: tuple[tuple[Vertex, ...], ...]  # boundary arcs excluded by corners
    b: dict[int, int]  # fence-size counts b_i
    beta: int  # edges covered twice by boundary 4-cycles
    c: int  # corners covered by fences
    n_max: int  # largest possible fence size, 2p + 2q - 8


@dataclass(frozen=True)
class StaircaseClassification:
    pyramids: tuple[tuple[Staircase, Fence], ...]
    doubles: tuple[tuple[Staircase, Staircase], ...]
    unclassified: tuple[Staircase, ...]

    @property
    def n(self) -> int:
        return len(self.pyramids)

    @property
    def m(self) -> int:
        return len(self.doubles)


@dataclass(frozen=True)
class WasteIdentityReport:
    waste: int
    beta: int
    tau: int
    c: int
    b: dict[int, int]
    inequality_holds: bool  # w >= beta + tau
    identity_holds: bool  # beta + tau = p+q-2 - c/2 - b_1/2 + sum (i/2-1) b_i
    beta_identity_holds: bool  # beta = sum (i-1) b_i

    @property
    def ok(self) -> bool:
        return self.inequality_holds and self.identity_holds and self.beta_identity_holds


def _square_edges(sq: FourCycle) -> tuple[EdgePair, ...]:
    c, r = sq.anchor
    return (
        ((c, r), (c + 1, r)),
        ((c, r + 1), (c + 1, r + 1)),
        ((c, r), (c, r + 1)),
        ((c + 1, r), (c + 1, r + 1)),
    )


def thick_edges(grid: Grid, cover: Cover | Iterable[Biclique]) -> frozenset[EdgePair]:
    """Edges covered by at least two elements."""
    counts: Counter[EdgePair] = Counter()
    for b in cover:
        counts.update(biclique_edges(grid, b))
    return frozenset(e for e, n in counts.items() if n >= 2)


def boundary_analysis(grid: Grid, cover: Cover | Sequence[Biclique]) -> BoundaryAnalysis:
    """Fences, links and the boundary counts for a cover of maximal elements."""
    elements = list(cover)
    if min(grid.p, grid.q) < 2:
        raise ValueError("boundary analysis needs p, q >= 2")
    for b in elements:
        if not is_maximal(grid, b):
            raise ValueError(f"non-maximal element {b}")
    out_set = grid.outer_cycle_edge_set
    edge_idx = grid.edge_index

    bstars: list[Star] = []
    bcycles: list[FourCycle] = []
    for b in sorted(elements, key=biclique_sort_key):
        if biclique_edges(grid, b) & out_set:
            (bstars if isinstance(b, Star) else bcycles).append(b)

    # fences: vertex-connectivity of the boundary squares
    fences = _fences(bcycles)
    fences.sort(key=lambda f: min(edge_idx[e] for e in f.edges if e in out_set))
    h_edges = frozenset(e for f in fences for e in f.edges)

    beta_counts: Counter[EdgePair] = Counter()
    for sq in bcycles:
        beta_counts.update(_square_edges(sq))
    beta = sum(1 for n in beta_counts.values() if n >= 2)

    h_vertices = {v for e in h_edges for v in e}
    c = sum(1 for v in grid.corners if v in h_vertices)

    links, non_links = _boundary_arcs(grid, h_edges)
    links.sort(key=lambda l: min(edge_idx[e] for e in l.edges))

    b_counts = dict(sorted(Counter(f.size for f in fences).items()))
    return BoundaryAnalysis(
        boundary_stars=tuple(bstars),
        boundary_cycles=tuple(bcycles),
        h_edges=h_edges,
        fences=tuple(fences),
        links=tuple(links),
        non_link_arcs=tuple(non_links),
        b=b_counts,
        beta=beta,
        c=c,
        n_max=2 * grid.p + 2 * grid.q - 8,
    )


def _fences(bcycles: list[FourCycle]) -> list[Fence]:
    vert_of = {sq: {(sq.anchor[0] + dc, sq.anchor[1] + dr) for dc in (0, 1) for dr in (0, 1)}
               for sq in bcycles}
    remaining = set(bcycles)
    fences: list[Fence] = []
    while remaining:
        seed = min(remaining, key=biclique_sort_key)
        component = {seed}
        frontier = [seed]
        remaining.discard(seed)
        while frontier:
            cur = frontier.pop()
            joined = [sq for sq in remaining if vert_of[sq] & vert_of[cur]]
            for sq in joined:
                remaining.discard(sq)
                component.add(sq)
                frontier.append(sq)
        cycles = tuple(sorted(component, key=biclique_sort_key))
        edges = frozenset(e for sq in cycles for e in _square_edges(sq))
        fences.append(Fence(cycles, edges))
    return fences


def _boundary_arcs(
    grid: Grid, h_edges: frozenset[EdgePair]
) -> tuple[list[Link], list[tuple[Vertex, ...]]]:
    vs = grid.outer_cycle_vertices
    n = len(vs)
    removed = [
        i for i in range(n) if canonical_edge(vs[i], vs[(i + 1) % n]) in h_edges
    ]
    arcs: list[tuple[Vertex, ...]] = []
    if not removed:
        arcs.append(vs)
    else:
        for j, r in enumerate(removed):
            nxt = removed[(j + 1) % len(removed)]
            run: list[Vertex] = []
            i = (r + 1) % n
            while True:
                run.append(vs[i])
                if i == nxt:
                    break
                i = (i + 1) % n
            arcs.append(tuple(run))
    corners = set(grid.corners)
    links: list[Link] = []
    non_links: list[tuple[Vertex, ...]] = []
    for arc in arcs:
        if len(arc) >= 2 and not (set(arc) & corners):
            verts = tuple(sorted(arc))
            links.append(Link(verts, _side_of(grid, verts)))
        else:
            non_links.append(arc)
    return links, non_links


def _side_of(grid: Grid, verts: tuple[Vertex, ...]) -> str:
    if all(r == 1 for _, r in verts):
        return "bottom"
    if all(r == grid.p for _, r in verts):
        return "top"
    if all(c == 1 for c, _ in verts):
        return "left"
    if all(c == grid.q for c, _ in verts):
        return "right"
    raise ValueError(f"link does not lie on one side: {verts}")


# transforms rotating each side onto the top row; (map, inverse, rows, cols)
def _side_transforms(
    grid: Grid, side: str
) -> tuple[Callable[[Vertex], Vertex], Callable[[Vertex], Vertex], int, int]:
    p, q = grid.p, grid.q
    if side == "top":
        return (lambda v: v), (lambda v: v), p, q
    if side == "bottom":
        rot = lambda v: (q + 1 - v[0], p + 1 - v[1])
        return rot, rot, p, q
    if side == "left":
        return (
            lambda v: (v[1], q + 1 - v[0]),
            lambda v: (q + 1 - v[1], v[0]),
            q,
            p,
        )
    return (
        lambda v: (p + 1 - v[1], v[0]),
        lambda v: (v[1], p + 1 - v[0]),
        q,
        p,
    )


def staircase_of(grid: Grid, link: Link) -> Staircase:
    """Region bounded by the link, its two walls, and maybe the far side."""
    fwd, inv, rows, _cols = _side_transforms(grid, link.side)
    xs = [fwd(v)[0] for v in (link.vertices[0], link.vertices[-1])]
    x1, x2 = min(xs), max(xs)
    length = x2 - x1

    spans: list[tuple[int, int, int]] = [(rows, x1, x2)]
    if rows - 1 >= 1:
        spans.append((rows - 1, x1, x2))
    i = 0
    reached = rows - 1 == 1
    while length - 2 * i >= 1:
        row = rows - 2 - i
        if row < 1:
            reached = True
            break
        spans.append((row, x1 + i, x2 - i))
        if row == 1:
            reached = True
        i += 1

    verts = frozenset(
        inv((x, row)) for row, lo, hi in spans for x in range(lo, hi + 1)
    )
    edges = set()
    for v in verts:
        for u in ((v[0] + 1, v[1]), (v[0], v[1] + 1)):
            if u in verts:
                edges.add(canonical_edge(v, u))
    return Staircase(link, verts, frozenset(edges), reached)


def _side_depth(grid: Grid, side: str) -> int:
    return grid.p if side in ("top", "bottom") else grid.q


def classify_staircases(
    grid: Grid, cover: Cover | Sequence[Biclique], analysis: BoundaryAnalysis
) -> StaircaseClassification:
    """Greedy pyramid / double-staircase matching over the cover's staircases.

    A detector, not a proof engine: on genuine normalized minimum covers
    everything classifies (and unclassified is empty), on other covers the
    leftovers are reported.
    """
    elements = list(cover)
    if not is_normalized(grid, elements):
        raise ValueError("classify_staircases requires a normalized cover")
    thick = thick_edges(grid, elements)
    staircases = [staircase_of(grid, link) for link in analysis.links]

    tips: dict[EdgePair, Fence] = {}
    for f in analysis.fences:
        if f.size == 2:
            shared = f.shared_edges()
            if len(shared) == 1:
                tips[next(iter(shared))] = f

    pyramids: list[tuple[Staircase, Fence]] = []
    rest: list[Staircase] = []
    used_tips: set[EdgePair] = set()
    for s in staircases:
        t_here = thick & s.edges
        if len(t_here) == 1:
            (e,) = t_here
            fence = tips.get(e)
            if (
                fence is not None
                and e not in used_tips
                and fence.edges <= s.edges
                and s.length == 2 * _side_depth(grid, s.link.side) - 4
            ):
                pyramids.append((s, fence))
                used_tips.add(e)
                continue
        rest.append(s)

    by_edge: dict[EdgePair, list[Staircase]] = {}
    undecided: list[Staircase] = []
    for s in rest:
        t_here = thick & s.edges
        if len(t_here) == 1:
            by_edge.setdefault(next(iter(t_here)), []).append(s)
        else:
            undecided.append(s)

    doubles: list[tuple[Staircase, Staircase]] = []
    for e in sorted(by_edge, key=grid.edge_index.__getitem__):
        group = by_edge[e]
        if len(group) == 2 and _double_lengths_ok(grid, group[0], group[1]):
            doubles.append((group[0], group[1]))
        else:
            undecided.extend(group)
    undecided.sort(key=lambda s: s.link.vertices)
    return StaircaseClassification(tuple(pyramids), tuple(doubles), tuple(undecided))


def _double_lengths_ok(grid: Grid, s1: Staircase, s2: Staircase) -> bool:
    d1, d2 = _side_depth(grid, s1.link.side), _side_depth(grid, s2.link.side)
    if d1 != d2 or s1.length % 2 or s2.length % 2:
        return False
    half_sum = (s1.length + s2.length) // 2
    return half_sum in (d1 - 2, d1)


def waste_identity_check(
    grid: Grid, cover: Cover | Sequence[Biclique]
) -> WasteIdentityReport:
    """Evaluate the boundary waste identity and inequality on a normalized
    cover of maximal elements covering every outer-cycle edge."""
    elements = list(cover)
    if not is_normalized(grid, elements):  # also rejects non-maximal input
        raise ValueError("waste_identity_check requires a normalized cover")
    report = verify_cover(grid, elements)
    if report.uncovered & grid.outer_cycle_edge_set:
        raise ValueError("every outer-cycle edge must be covered")
    analysis = boundary_analysis(grid, elements)
    beta, b, c = analysis.beta, analysis.b, analysis.c
    tau, waste = report.tau, report.waste
    # identity doubled to stay in integers
    rhs2 = (
        2 * (grid.p + grid.q - 2)
        - c
        - b.get(1, 0)
        + sum((i - 2) * cnt for i, cnt in b.items() if i >= 3)
    )
    return WasteIdentityReport(
        waste=waste,
        beta=beta,
        tau=tau,
        c=c,
        b=b,
        inequality_holds=waste >= beta + tau,
        identity_holds=2 * (beta + tau) == rhs2,
        beta_identity_holds=beta == sum((i - 1) * cnt for i, cnt in b.items()),
    )
