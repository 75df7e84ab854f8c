"""Cover validation, multiplicity/waste accounting, and boundary normalization.

The waste of a cover C on a grid with edge set E is w(C) = 4|C| - |E|.
Writing tau for the number of K_{1,3} elements and t_i for the number of
edges covered exactly i times, every cover of maximal elements that covers
the grid satisfies w(C) = tau + t_2 + 2*t_3 + 3*t_4 (each element has 4
edges except the K_{1,3}s, and no grid edge lies in more than 4 bicliques).

A cover of maximal elements is *normalized* when (i) its boundary stars
are pairwise edge-disjoint and (ii) no edge lies in both a boundary
4-cycle and a boundary star.  Any cover can be rewritten into a normalized
one of the same size whose covered-edge set only grows: two boundary stars
meeting in a boundary edge become a star plus an inward 4-cycle, and a
boundary star meeting a boundary 4-cycle becomes the inward 4-cycle on the
opposite side of the star's center.  Each rewrite removes at least one
star, bounding the number of steps by the initial star count.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

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
    element_errors,
    is_maximal,
)


@dataclass(frozen=True)
class CoverReport:
    """Verification outcome: validity plus exact multiplicity accounting."""

    valid: bool
    uncovered: frozenset[EdgePair]
    invalid_elements: tuple[tuple[Biclique, str], ...]
    multiplicities: dict[int, int]  # t_i: edges covered exactly i >= 1 times
    tau: int  # number of K_{1,3} elements
    waste: int  # 4|C| - |E|
    size: int
    num_edges: int

    @property
    def t(self) -> dict[int, int]:
        return self.multiplicities


def verify_cover(grid: Grid, cover: Cover | Iterable[Biclique]) -> CoverReport:
    """Check a cover against a grid; problems are reported, never raised."""
    elements = list(cover)
    invalid: list[tuple[Biclique, str]] = []
    seen: set[Biclique] = set()
    counts: dict[EdgePair, int] = {}
    tau = 0
    for b in elements:
        if b in seen:
            invalid.append((b, "duplicate element"))
            continue
        seen.add(b)
        errs = element_errors(grid, b)
        if errs:
            invalid.append((b, "; ".join(errs)))
            continue
        if isinstance(b, Star) and len(b.leaves) == 3:
            tau += 1
        for e in biclique_edges(grid, b):
            counts[e] = counts.get(e, 0) + 1
    uncovered = frozenset(e for e in grid.edges if e not in counts)
    mult = dict(sorted(Counter(counts.values()).items()))
    return CoverReport(
        valid=not uncovered and not invalid,
        uncovered=uncovered,
        invalid_elements=tuple(invalid),
        multiplicities=mult,
        tau=tau,
        waste=4 * len(elements) - grid.num_edges,
        size=len(elements),
        num_edges=grid.num_edges,
    )


# -- normalization ---------------------------------------------------------------


def _require_normalizable(grid: Grid, elements: Sequence[Biclique]) -> None:
    if min(grid.p, grid.q) < 2:
        raise ValueError(
            f"normalization is undefined on the {grid.p}x{grid.q} grid (no 4-cycles)"
        )
    for b in elements:
        if not is_maximal(grid, b):
            raise ValueError(f"non-maximal element {b}")


def _boundary_elements(
    grid: Grid, elements: Iterable[Biclique]
) -> tuple[list[Star], list[FourCycle]]:
    out = grid.outer_cycle_edge_set
    bstars: list[Star] = []
    bcycles: list[FourCycle] = []
    for b in elements:
        if biclique_edges(grid, b) & out:
            if isinstance(b, Star):
                bstars.append(b)
            else:
                bcycles.append(b)
    return bstars, bcycles


def is_normalized(grid: Grid, cover: Cover | Sequence[Biclique]) -> bool:
    """Properties (i) and (ii) for a cover of maximal elements."""
    elements = list(cover)
    _require_normalizable(grid, elements)
    bstars, bcycles = _boundary_elements(grid, elements)
    star_edge_count: Counter[EdgePair] = Counter()
    for s in bstars:
        star_edge_count.update(biclique_edges(grid, s))
    if any(n >= 2 for n in star_edge_count.values()):
        return False
    cycle_edges = set()
    for b in bcycles:
        cycle_edges |= biclique_edges(grid, b)
    return not (cycle_edges & set(star_edge_count))


def _inward_normal(grid: Grid, v: Vertex) -> tuple[int, int]:
    c, r = v
    if r == 1:
        return (0, 1)
    if r == grid.p:
        return (0, -1)
    if c == 1:
        return (1, 0)
    return (-1, 0)


def _square_through(grid: Grid, v: Vertex, d1: tuple[int, int], d2: tuple[int, int]) -> FourCycle | None:
    """The unit square containing v, v+d1, v+d2 (perpendicular unit steps)."""
    corners = [v, (v[0] + d1[0], v[1] + d1[1]), (v[0] + d2[0], v[1] + d2[1]),
               (v[0] + d1[0] + d2[0], v[1] + d1[1] + d2[1])]
    if not all(grid.in_grid(u) for u in corners):
        return None
    return FourCycle((min(u[0] for u in corners), min(u[1] for u in corners)))


def _fallback_square(
    grid: Grid, elements: set[Biclique], prefer: Vertex
) -> FourCycle:
    """Deterministic filler: first square not in the cover, nearest-first."""
    near = sorted(
        a
        for a in [
            (prefer[0] - 1, prefer[1] - 1),
            (prefer[0] - 1, prefer[1]),
            (prefer[0], prefer[1] - 1),
            (prefer[0], prefer[1]),
        ]
        if 1 <= a[0] <= grid.q - 1 and 1 <= a[1] <= grid.p - 1
    )
    for anchor in near:
        sq = FourCycle(anchor)
        if sq not in elements:
            return sq
    for anchor in grid.square_anchors():
        sq = FourCycle(anchor)
        if sq not in elements:
            return sq
    raise ValueError("cover already contains every unit square; cannot keep size")


def _replace(
    grid: Grid, elements: set[Biclique], old: Biclique, new: FourCycle, prefer: Vertex
) -> None:
    elements.discard(old)
    if new in elements:
        new = _fallback_square(grid, elements, prefer)
    elements.add(new)


def normalize_cover(grid: Grid, cover: Cover | Sequence[Biclique]) -> Cover:
    """Rewrite to a same-size cover satisfying properties (i) and (ii).

    Boundary edges are scanned in canonical index order; the first
    applicable rewrite fires and the scan restarts.  Rule 1 keeps the star
    with the lexicographically smaller center.  Never uncovers an edge.
    """
    items = list(cover)
    elements = set(items)
    if len(elements) != len(items):
        raise ValueError("duplicate elements in cover")
    _require_normalizable(grid, elements)
    out = grid.outer_cycle_edge_set
    scan = [e for e in grid.edges
            if grid.is_boundary_vertex(e[0]) and grid.is_boundary_vertex(e[1])]
    budget = sum(isinstance(b, Star) for b in elements)
    for _ in range(budget + 1):
        if not _normalize_step(grid, elements, scan, out):
            result = Cover.of(grid, elements)
            assert is_normalized(grid, result)
            return result
    raise RuntimeError("normalization exceeded its star-count rewrite budget")


def _normalize_step(
    grid: Grid, elements: set[Biclique], scan: list[EdgePair], out: frozenset[EdgePair]
) -> bool:
    """Apply the first applicable rewrite; True if one fired."""
    covering: dict[EdgePair, list[Biclique]] = {}
    boundary: dict[Biclique, bool] = {}
    for b in sorted(elements, key=biclique_sort_key):
        edges = biclique_edges(grid, b)
        boundary[b] = bool(edges & out)
        for e in edges:
            covering.setdefault(e, []).append(b)

    for e in scan:
        here = covering.get(e, ())
        stars = [b for b in here if isinstance(b, Star) and boundary[b]]
        cycles = [b for b in here if isinstance(b, FourCycle) and boundary[b]]
        if len(stars) >= 2:
            _rewrite_two_stars(grid, elements, e, stars, out)
            return True
        if stars and cycles:
            _rewrite_star_cycle(grid, elements, stars[0], cycles[0])
            return True
    return False


def _rewrite_two_stars(
    grid: Grid,
    elements: set[Biclique],
    e: EdgePair,
    stars: list[Star],
    out: frozenset[EdgePair],
) -> None:
    a, b = sorted(stars[:2], key=lambda s: s.center)
    if e in out:
        # keep the star at the smaller center; the other star's two remaining
        # edges continue along the boundary and inward, and the unit square on
        # that far side covers both
        d = (b.center[0] - a.center[0], b.center[1] - a.center[1])
        n = _inward_normal(grid, b.center)
        sq = _square_through(grid, b.center, d, n)
        assert sq is not None  # b's center is not a corner
        _replace(grid, elements, b, sq, b.center)
        return
    # rung edge (2-row or 2-column grids): both endpoints on the boundary but
    # the edge crosses the grid; replace both stars by the two flanking squares
    (u, v) = e
    if u[0] == v[0]:  # vertical rung
        anchors = [(u[0] - 1, u[1]), (u[0], u[1])]
    else:  # horizontal rung
        anchors = [(u[0], u[1] - 1), (u[0], u[1])]
    elements.discard(a)
    elements.discard(b)
    for anchor in anchors:
        if 1 <= anchor[0] <= grid.q - 1 and 1 <= anchor[1] <= grid.p - 1:
            sq = FourCycle(anchor)
        else:  # centers have degree 3, so both flanks exist; defensive only
            sq = _fallback_square(grid, elements, u)
        if sq in elements:
            sq = _fallback_square(grid, elements, u)
        elements.add(sq)


def _rewrite_star_cycle(
    grid: Grid, elements: set[Biclique], star: Star, cycle: FourCycle
) -> None:
    v = star.center
    n = _inward_normal(grid, v)
    t = (0, 1) if n[0] != 0 else (1, 0)  # tangent along the star's side
    s_plus = _square_through(grid, v, t, n)
    s_minus = _square_through(grid, v, (-t[0], -t[1]), n)
    if cycle == s_plus:
        new = s_minus
    elif cycle == s_minus:
        new = s_plus
    else:  # pragma: no cover - the sharing square always contains the center
        raise AssertionError(f"cycle {cycle} does not flank star at {v}")
    assert new is not None  # the center is not a corner
    _replace(grid, elements, star, new, v)
