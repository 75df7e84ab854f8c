"""Explicit covers meeting the covering number.

Three constructions:

* checkerboard: one star per vertex of the odd color class (each taking
  all of its neighbors), size floor(pq/2), covering every edge exactly once.
* diagonal square cover of an even p x p grid: stars on one color class
  minus a diagonal, plus the p-1 unit squares along that diagonal; size
  p^2/2 - 1 and again an exact edge partition.
* stitched cover for p even and q - 1 = k(p-1) + 2*ell with 0 <= ell < k:
  k diagonal square blocks laid left to right with alternating diagonal
  orientation, sharing one column at each junction, and ell width-3
  gadgets inserted at the leftmost junctions.  Adjacent blocks share the
  p/2 - 1 junction-column stars; a gadget contributes p/2 + 1 stars in its
  middle column, at exactly the rows the flanking blocks' junction stars
  miss.  Total size k(p^2/2-1) + ell(p/2+1) - (k-ell-1)(p/2-1) = pq/2 - 1.
"""

from __future__ import annotations

from .grid import Biclique, Cover, FourCycle, Grid, Star, transpose_cover
from .theory import Decomposition, bc_value, representable
from .verify import verify_cover


def checkerboard_cover(p: int, q: int) -> Cover:
    """Stars at every vertex with odd coordinate sum; size floor(pq/2).

    Corner-centered stars (present when a corner has odd sum) come out as
    non-maximal K_{1,2}; apply maximalize for a maximal-element cover.
    """
    grid = Grid(p, q)
    if p * q < 2:
        raise ValueError("the 1x1 grid has no edges to cover")
    stars = [
        Star(v, grid.neighbors(v)) for v in grid.vertices() if (v[0] + v[1]) % 2 == 1
    ]
    cover = Cover.of(grid, stars)
    assert len(cover) == p * q // 2
    return cover


def _block_star_centers(p: int, orientation: str) -> list[tuple[int, int]]:
    """Star centers of the diagonal cover of G_{p,p}, in local coordinates."""
    if orientation == "main":
        return [
            (x, y)
            for x in range(1, p + 1)
            for y in range(1, p + 1)
            if (x + y) % 2 == 0 and x != y
        ]
    return [
        (x, y)
        for x in range(1, p + 1)
        for y in range(1, p + 1)
        if (x + y) % 2 == 1 and x + y != p + 1
    ]


def _block_anchors(p: int, orientation: str) -> list[tuple[int, int]]:
    if orientation == "main":
        return [(i, i) for i in range(1, p)]
    return [(i, p - i) for i in range(1, p)]


def _junction_rows(p: int, orientation: str) -> set[int]:
    """Rows of the block's right-column stars (= next block's left column)."""
    if orientation == "main":
        return set(range(2, p - 1, 2))
    return set(range(3, p, 2))


def square_diagonal_cover(p: int, orientation: str = "main") -> Cover:
    """Size p^2/2 - 1 cover of the even p x p grid with p-1 squares on one
    diagonal; the anti orientation is the horizontal mirror of main."""
    if p % 2 != 0 or p < 2:
        raise ValueError(f"needs an even p >= 2, got p={p}")
    if orientation not in ("main", "anti"):
        raise ValueError(f"orientation must be 'main' or 'anti', got {orientation!r}")
    grid = Grid(p, p)
    elements: list[Biclique] = [FourCycle(a) for a in _block_anchors(p, orientation)]
    elements.extend(
        Star(v, grid.neighbors(v)) for v in _block_star_centers(p, orientation)
    )
    cover = Cover.of(grid, elements)
    assert len(cover) == p * p // 2 - 1
    return cover


def stitched_cover(p: int, q: int, d: Decomposition) -> Cover:
    """Lay k alternating square blocks and ell gadgets; size pq/2 - 1."""
    if p % 2 != 0 or p < 2:
        raise ValueError(f"needs an even p >= 2, got p={p}")
    k, ell = d.k, d.ell
    if q - 1 != k * (p - 1) + 2 * ell:
        raise ValueError(f"decomposition {d} does not fit {p}x{q}")
    grid = Grid(p, q)
    anchors: list[tuple[int, int]] = []
    centers: set[tuple[int, int]] = set()

    start = 1
    for j in range(k):
        orient = "main" if j % 2 == 0 else "anti"
        anchors.extend((start - 1 + c, r) for c, r in _block_anchors(p, orient))
        centers.update((start - 1 + x, y) for x, y in _block_star_centers(p, orient))
        if j < ell:
            # width-3 gadget shares its outer columns with the two blocks
            g = start + p - 1
            gadget_rows = set(range(1, p + 1)) - _junction_rows(p, orient)
            centers.update((g + 1, r) for r in gadget_rows)
            start = g + 2
        else:
            start = start + p - 1
    assert start == q  # last block's final column lands on the grid edge

    elements: list[Biclique] = [FourCycle(a) for a in anchors]
    elements.extend(Star(v, grid.neighbors(v)) for v in sorted(centers))
    cover = Cover.of(grid, elements)
    assert len(cover) == p * q // 2 - 1
    return cover


def optimal_cover(p: int, q: int) -> Cover:
    """A verified cover of size bc_value(p, q)."""
    if p < 1 or q < 1:
        raise ValueError(f"grid dimensions must be positive, got {p}x{q}")
    if p * q < 2:
        raise ValueError("the 1x1 grid has no edges to cover")
    lo, hi = min(p, q), max(p, q)
    cover: Cover | None = None
    if lo % 2 == 0:
        d = representable(lo, hi)
        if d is not None:
            cover = stitched_cover(lo, hi, d)
            if p != lo:
                cover = transpose_cover(cover)
    if cover is None:
        cover = checkerboard_cover(p, q)
    report = verify_cover(Grid(p, q), cover)
    if not report.valid or len(cover) != bc_value(p, q):
        raise AssertionError(
            f"construction failed self-check on {p}x{q}: "
            f"valid={report.valid} size={len(cover)} expected={bc_value(p, q)}"
        )
    return cover
