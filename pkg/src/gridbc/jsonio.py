"""JSON interchange for covers.

Schema (1-based coordinates, [col, row]):

    {"p": int, "q": int,
     "bicliques": [{"kind": "star", "center": [c, r], "leaves": [[c, r], ...]}
                   | {"kind": "cycle", "anchor": [c, r]}, ...]}

Serialization is canonical and deterministic: elements in canonical cover
order, leaves sorted, fixed key order, two-space indent, trailing newline.
Malformed documents raise FormatError; semantic problems (elements that do
not fit the grid, duplicates, uncovered edges) are the verifier's business.
"""

from __future__ import annotations

import json
from typing import Any

from .grid import Biclique, Cover, FourCycle, Grid, Star, Vertex, biclique_sort_key


class FormatError(ValueError):
    """The document does not match the cover schema."""


def cover_to_dict(cover: Cover) -> dict[str, Any]:
    items: list[dict[str, Any]] = []
    for b in sorted(cover, key=biclique_sort_key):
        if isinstance(b, FourCycle):
            items.append({"kind": "cycle", "anchor": list(b.anchor)})
        else:
            items.append(
                {
                    "kind": "star",
                    "center": list(b.center),
                    "leaves": [list(v) for v in sorted(b.leaves)],
                }
            )
    return {"p": cover.p, "q": cover.q, "bicliques": items}


def dumps_cover(cover: Cover) -> str:
    return json.dumps(cover_to_dict(cover), indent=2, sort_keys=True) + "\n"


def _vertex(obj: Any, what: str) -> Vertex:
    if (
        not isinstance(obj, (list, tuple))
        or len(obj) != 2
        or not all(isinstance(x, int) and not isinstance(x, bool) for x in obj)
    ):
        raise FormatError(f"{what} must be a [col, row] integer pair, got {obj!r}")
    return (obj[0], obj[1])


def elements_from_dict(doc: Any) -> tuple[Grid, list[Biclique]]:
    """Parse without semantic validation; raises FormatError on bad shape."""
    if not isinstance(doc, dict):
        raise FormatError("top level must be an object")
    for key in ("p", "q", "bicliques"):
        if key not in doc:
            raise FormatError(f"missing key {key!r}")
    p, q = doc["p"], doc["q"]
    if not all(isinstance(x, int) and not isinstance(x, bool) and x >= 1 for x in (p, q)):
        raise FormatError("p and q must be positive integers")
    if not isinstance(doc["bicliques"], list):
        raise FormatError("bicliques must be a list")
    elements: list[Biclique] = []
    for item in doc["bicliques"]:
        if not isinstance(item, dict) or "kind" not in item:
            raise FormatError(f"biclique entries need a 'kind', got {item!r}")
        kind = item["kind"]
        if kind == "cycle":
            elements.append(FourCycle(_vertex(item.get("anchor"), "anchor")))
        elif kind == "star":
            leaves = item.get("leaves")
            if not isinstance(leaves, list) or not leaves:
                raise FormatError("star needs a non-empty leaves list")
            if len(leaves) > 4:
                raise FormatError("star has more than 4 leaves")
            parsed = [_vertex(v, "leaf") for v in leaves]
            if len(set(parsed)) != len(parsed):
                raise FormatError("star leaves must be distinct")
            elements.append(Star(_vertex(item.get("center"), "center"), parsed))
        else:
            raise FormatError(f"unknown biclique kind {kind!r}")
    return Grid(p, q), elements


def loads_elements(text: str) -> tuple[Grid, list[Biclique]]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON: {exc}") from exc
    return elements_from_dict(doc)


def loads_cover(text: str) -> Cover:
    """Parse into a canonical Cover; duplicate elements are a FormatError."""
    grid, elements = loads_elements(text)
    try:
        return Cover.of(grid, elements)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
