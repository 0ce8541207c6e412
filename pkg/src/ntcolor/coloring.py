"""Proper, dynamic and list coloring semantics.

A coloring is a plain dict vertex -> color (positive int); a list
assignment is a dict vertex -> set of allowed colors.  A coloring is
r-dynamic when, besides being proper, every vertex sees at least
min(r, deg(v)) distinct colors on its neighborhood.
"""

from __future__ import annotations

import random
from typing import AbstractSet, Mapping

from .embedding import PlanarEmbedding

Coloring = dict[int, int]
ListAssignment = dict[int, frozenset[int]]


class PartialColoring(Exception):
    """A total coloring was required."""


class NotProper(Exception):
    """The coloring has a monochromatic edge."""


def is_total(emb: PlanarEmbedding, phi: Mapping[int, int]) -> bool:
    return all(v in phi for v in emb.rotation)


def _require_total(emb: PlanarEmbedding, phi: Mapping[int, int]) -> None:
    missing = [v for v in emb.rotation if v not in phi]
    if missing:
        raise PartialColoring(f"vertices without a color: {sorted(missing)[:5]}")


def find_proper_violation(
    emb: PlanarEmbedding, phi: Mapping[int, int]
) -> tuple[int, int] | None:
    """First monochromatic edge in vertex order, or None."""
    for v in emb.vertices:
        for u in emb.rotation[v]:
            if v < u and phi[v] == phi[u]:
                return (v, u)
    return None


def find_dynamic_violation(
    emb: PlanarEmbedding, phi: Mapping[int, int], r: int
) -> int | None:
    """Smallest vertex seeing fewer than min(r, deg) neighbor colors, or None."""
    for v in emb.vertices:
        nbrs = emb.rotation[v]
        if len({phi[u] for u in nbrs}) < min(r, len(nbrs)):
            return v
    return None


def find_list_violation(
    phi: Mapping[int, int], lists: Mapping[int, AbstractSet[int]]
) -> int | None:
    for v in sorted(phi):
        if phi[v] not in lists[v]:
            return v
    return None


def is_proper(emb: PlanarEmbedding, phi: Mapping[int, int]) -> bool:
    """No edge joins two equal colors."""
    _require_total(emb, phi)
    return find_proper_violation(emb, phi) is None


def is_r_dynamic(emb: PlanarEmbedding, phi: Mapping[int, int], r: int) -> bool:
    """Every vertex sees at least min(r, deg) distinct neighbor colors.

    Requires a total proper coloring; raises NotProper otherwise so a
    True answer always certifies a full r-dynamic coloring.
    """
    _require_total(emb, phi)
    bad = find_proper_violation(emb, phi)
    if bad is not None:
        raise NotProper(f"edge {bad[0]}-{bad[1]} is monochromatic")
    return find_dynamic_violation(emb, phi, r) is None


def respects_lists(
    phi: Mapping[int, int], lists: Mapping[int, AbstractSet[int]]
) -> bool:
    return find_list_violation(phi, lists) is None


def valid_extensions(
    emb: PlanarEmbedding,
    phi: Mapping[int, int],
    v: int,
    lists: Mapping[int, AbstractSet[int]],
    r: int,
) -> set[int]:
    """Colors from v's list that complete phi (total on all but v) into a
    coloring that is proper at v and r-dynamic at v and at every neighbor.

    Vertices at distance two or more are unaffected by the choice, so
    checking this local window is exactly what extension safety needs.
    An empty result is a legal answer.
    """
    nbrs = emb.rotation[v]
    nbr_colors = {phi[u] for u in nbrs}
    if len(nbr_colors) < min(r, len(nbrs)):
        return set()

    out = set()
    for c in lists[v]:
        if c in nbr_colors:
            continue
        ok = True
        for u in nbrs:
            seen = {c if x == v else phi[x] for x in emb.rotation[u]}
            if len(seen) < min(r, emb.degree(u)):
                ok = False
                break
        if ok:
            out.add(c)
    return out


def square_adjacency(emb: PlanarEmbedding) -> dict[int, frozenset[int]]:
    """Adjacency of the square graph: vertices at distance one or two."""
    adj = {}
    for v in emb.vertices:
        near = set(emb.rotation[v])
        for u in emb.rotation[v]:
            near.update(emb.rotation[u])
        near.discard(v)
        adj[v] = frozenset(near)
    return adj


# -- list construction --------------------------------------------------------


def uniform_lists(emb: PlanarEmbedding, k: int) -> ListAssignment:
    pool = frozenset(range(1, k + 1))
    return {v: pool for v in emb.rotation}

def random_lists(
    emb: PlanarEmbedding, k: int, pool: int, rng: random.Random
) -> ListAssignment:
    """Independent k-subsets of {1..pool} per vertex."""
    if k > pool:
        raise ValueError(f"list size {k} exceeds pool {pool}")
    return {
        v: frozenset(rng.sample(range(1, pool + 1), k)) for v in sorted(emb.rotation)
    }


# -- serialization ------------------------------------------------------------


def lists_to_document(emb: PlanarEmbedding, lists: Mapping[int, AbstractSet[int]]) -> dict:
    order = emb.vertices
    return {"lists": [sorted(lists[v]) for v in order]}


def lists_from_document(doc: Mapping, emb: PlanarEmbedding) -> ListAssignment:
    rows = doc["lists"]
    if len(rows) != emb.n:
        raise ValueError("list count does not match vertex count")
    out = {}
    for v, row in zip(emb.vertices, rows):
        colors = frozenset(int(c) for c in row)
        if not colors or any(c < 1 for c in colors):
            raise ValueError(f"vertex {v} needs a nonempty list of positive colors")
        out[v] = colors
    return out


def coloring_to_document(emb: PlanarEmbedding, phi: Mapping[int, int]) -> dict:
    return {"colors": [phi[v] for v in emb.vertices]}


def coloring_from_document(doc: Mapping, emb: PlanarEmbedding) -> Coloring:
    colors = doc["colors"]
    if len(colors) != emb.n:
        raise ValueError("color count does not match vertex count")
    return {v: int(c) for v, c in zip(emb.vertices, colors)}
