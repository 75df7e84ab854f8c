"""Exact minimum biclique cover by branch-and-bound set cover.

Covers may be assumed to consist of maximal bicliques, so the candidate
pool is the grid's maximal-biclique list and the problem is minimum set
cover over edge bitmaps.  The residual lower bound combines the ring-peel
certificate (no biclique holds more than two special edges) with the
trivial four-edges-per-biclique bound.  The search starts from the
constructed optimal cover as incumbent, so on grids where the certificate
is tight it reduces to closing the bound at the root.

Branching is fail-first: pick the uncovered edge with the fewest available
candidates and try them in canonical order, banning each tried candidate
in the later branches.  Candidates whose residual coverage is contained in
a sibling's are skipped.  Everything is deterministic and single-threaded.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .construct import optimal_cover
from .grid import (
    Biclique,
    Cover,
    EdgePair,
    Grid,
    biclique_edges,
    enumerate_maximal_bicliques,
    maximalize,
)
from .theory import special_edge_set


@dataclass(frozen=True)
class SolveResult:
    status: str  # "optimal" | "incomplete"
    size: int | None  # exact optimum when optimal, else None
    witness: Cover | None  # best cover found (size = upper_bound)
    lower_bound: int
    upper_bound: int
    nodes: int

    @property
    def optimal(self) -> bool:
        return self.status == "optimal"


def lower_bound_hint(grid: Grid, uncovered: frozenset[EdgePair] | set[EdgePair]) -> int:
    """Admissible bound on bicliques needed to cover a residual edge set."""
    s = special_edge_set(grid.p, grid.q).edges
    in_s = len(uncovered & s)
    return max((in_s + 1) // 2, (len(uncovered) + 3) // 4)


class _Budget(Exception):
    pass


def solve_exact(grid: Grid, budget: float | None = None) -> SolveResult:
    """Exact covering number with a verified witness; deterministic.

    Practical for small grids (roughly p*q <= 25).  With a wall-clock
    budget the search may come back incomplete, reporting the best known
    bounds instead of a possibly wrong optimum.
    """
    if grid.p * grid.q < 2:
        raise ValueError("the 1x1 grid has no edges to cover")
    candidates = enumerate_maximal_bicliques(grid)
    masks = [grid.edges_mask(biclique_edges(grid, b)) for b in candidates]
    full = (1 << grid.num_edges) - 1
    s_mask = grid.edges_mask(special_edge_set(grid.p, grid.q).edges)

    cand_by_edge: list[list[int]] = [[] for _ in range(grid.num_edges)]
    for j, m in enumerate(masks):
        mm = m
        while mm:
            low = mm & -mm
            cand_by_edge[low.bit_length() - 1].append(j)
            mm ^= low

    incumbent = maximalize(grid, optimal_cover(grid.p, grid.q))
    state = {
        "ub": len(incumbent),
        "best": tuple(incumbent.elements),
        "nodes": 0,
        "deadline": None if budget is None else time.monotonic() + budget,
    }

    def lb(uncov: int) -> int:
        return max(((uncov & s_mask).bit_count() + 1) // 2, (uncov.bit_count() + 3) // 4)

    def search(uncov: int, chosen: tuple[int, ...], banned: int) -> None:
        state["nodes"] += 1
        if state["deadline"] is not None and state["nodes"] % 1024 == 0:
            if time.monotonic() > state["deadline"]:
                raise _Budget
        if uncov == 0:
            state["ub"] = len(chosen)
            state["best"] = tuple(candidates[j] for j in chosen)
            return
        if len(chosen) + lb(uncov) >= state["ub"]:
            return

        # forced moves, then the most constrained uncovered edge
        while True:
            best_edge, best_opts = -1, None
            mm = uncov
            while mm:
                low = mm & -mm
                e = low.bit_length() - 1
                mm ^= low
                opts = [j for j in cand_by_edge[e] if not (banned >> j) & 1]
                if not opts:
                    return  # residual edge became uncoverable on this path
                if best_opts is None or len(opts) < len(best_opts):
                    best_edge, best_opts = e, opts
                    if len(opts) == 1:
                        break
            assert best_opts is not None
            if len(best_opts) == 1:
                j = best_opts[0]
                chosen = chosen + (j,)
                uncov &= ~masks[j]
                if uncov == 0:
                    state["ub"] = len(chosen)
                    state["best"] = tuple(candidates[k] for k in chosen)
                    return
                if len(chosen) + lb(uncov) >= state["ub"]:
                    return
                continue
            break

        rems = {j: masks[j] & uncov for j in best_opts}
        kept = [
            j
            for j in best_opts
            if not any(
                k != j
                and (
                    (rems[j] | rems[k]) == rems[k]
                    and (rems[j] != rems[k] or k < j)
                )
                for k in best_opts
            )
        ]
        for j in kept:
            search(uncov & ~masks[j], chosen + (j,), banned | (1 << j))
            banned |= 1 << j

    root_lb = lb(full)
    try:
        search(full, (), 0)
        complete = True
    except _Budget:
        complete = False

    witness = Cover.of(grid, state["best"])
    if complete:
        return SolveResult(
            status="optimal",
            size=state["ub"],
            witness=witness,
            lower_bound=state["ub"],
            upper_bound=state["ub"],
            nodes=state["nodes"],
        )
    return SolveResult(
        status="incomplete",
        size=None,
        witness=witness,
        lower_bound=root_lb,
        upper_bound=state["ub"],
        nodes=state["nodes"],
    )
