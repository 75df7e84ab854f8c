"""Closed-form covering number and the ring-peel lower-bound certificate.

For 1 <= p <= q the minimum number of bicliques covering the p x q grid is
pq/2 - 1 exactly when p is even and q - 1 = k(p-1) + 2l for integers
0 <= l < k, and floor(pq/2) otherwise.  The lower bound comes from a
special edge set S built by peeling boundary rings: for p in {1, 2} take
all horizontal edges, otherwise take the outer cycle together with the set
built recursively on the inner (p-2) x (q-2) grid.  |S| = pq - 1 for p odd
and pq - 2 for p even, and no biclique of the grid contains more than two
edges of S, so any cover needs at least ceil(|S|/2) elements.
"""

from __future__ import annotations

from dataclasses import dataclass

from .grid import EdgePair, Grid, canonical_edge


@dataclass(frozen=True)
class Decomposition:
    """Witness q - 1 = k(p-1) + 2*ell with 0 <= ell < k."""

    k: int
    ell: int

    def __post_init__(self) -> None:
        if not 0 <= self.ell < self.k:
            raise ValueError(f"need 0 <= ell < k, got k={self.k} ell={self.ell}")


@dataclass(frozen=True)
class SpecialEdgeSet:
    """Ring-peel certificate edges of a p x q grid."""

    p: int
    q: int
    edges: frozenset[EdgePair]


def representable(p: int, q: int) -> Decomposition | None:
    """Max-k decomposition q - 1 = k(p-1) + 2*ell with 0 <= ell < k, if any.

    Requires p even and p <= q.  The max-k choice minimizes the number of
    width-3 gadgets the stitched construction needs.
    """
    if p % 2 != 0:
        raise ValueError(f"representability is defined for even p, got p={p}")
    if p > q:
        raise ValueError(f"requires p <= q, got p={p} q={q}")
    for k in range((q - 1) // (p - 1), 0, -1):
        rem = (q - 1) - k * (p - 1)
        if rem % 2 == 0 and rem // 2 < k:
            return Decomposition(k, rem // 2)
    return None


def bc_value(p: int, q: int) -> int:
    """Biclique covering number of the p x q grid (transpose-invariant)."""
    if p < 1 or q < 1:
        raise ValueError(f"grid dimensions must be positive, got {p}x{q}")
    if p > q:
        p, q = q, p
    if p % 2 == 0 and representable(p, q) is not None:
        return p * q // 2 - 1
    return p * q // 2


def _peel(p: int, q: int, dc: int, dr: int) -> set[EdgePair]:
    """Special edges of a p x q subgrid whose (1,1) sits at (1+dc, 1+dr)."""
    assert p <= q
    if p <= 2:
        return {
            canonical_edge((c + dc, r + dr), (c + 1 + dc, r + dr))
            for r in range(1, p + 1)
            for c in range(1, q)
        }
    ring = set(Grid(p, q).outer_cycle_edges)
    shifted = {
        canonical_edge((u[0] + dc, u[1] + dr), (v[0] + dc, v[1] + dr))
        for u, v in ring
    }
    return shifted | _peel(p - 2, q - 2, dc + 1, dr + 1)


def special_edge_set(p: int, q: int) -> SpecialEdgeSet:
    """The ring-peel edge set, as edges of the (un-transposed) p x q grid."""
    if p < 1 or q < 1:
        raise ValueError(f"grid dimensions must be positive, got {p}x{q}")
    if p <= q:
        return SpecialEdgeSet(p, q, frozenset(_peel(p, q, 0, 0)))
    flipped = _peel(q, p, 0, 0)
    return SpecialEdgeSet(
        p,
        q,
        frozenset(
            canonical_edge((u[1], u[0]), (v[1], v[0])) for u, v in flipped
        ),
    )


def lower_bound(p: int, q: int) -> int:
    """ceil(|S|/2): a certified lower bound on the covering number."""
    return (len(special_edge_set(p, q).edges) + 1) // 2
