"""Reduction engine for near-triangulations.

Every near-triangulation on seven or more vertices contains a boundary
vertex of degree at most 3 or an interior vertex of degree at most 5;
otherwise summing degrees would force 2e >= 4t + 6k while a
near-triangulation has exactly e = 2t + 3k - 3 edges.  The engine removes
such a vertex (patching the hole so the class is preserved), recursively
colors the smaller graph, and extends the coloring back, choosing each
color by direct validity testing rather than trusting a precomputed
forbidden set.  With lists of size 6 the extension step never runs out of
colors; smaller lists are allowed in exploration mode and may fail.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import AbstractSet, Iterator, Mapping, Sequence

from . import coloring as col
from . import oracle
from .embedding import (
    NotNearTriangulation,
    PlanarEmbedding,
    add_edge_in_face,
    canonical_cycle,
    face_from_dart,
    insert_vertex,
    is_near_triangulation,
    remove_edge,
    remove_vertex,
    split_face_walk,
)


class NoReducibleVertex(Exception):
    """No low-degree vertex found: the input violates the class invariant."""


class HoleTriangulationFailed(Exception):
    """Diagnostic only; a fitting fan always exists for 4- and 5-holes."""


class ExtensionFailed(Exception):
    """No list color extends the reduced coloring at the removed vertex."""


class ColoringFailed(Exception):
    """The engine could not produce a coloring (possible only with short lists)."""


class ReductionCase(str, Enum):
    BOUNDARY_DEG2 = "BoundaryDeg2"
    BOUNDARY_DEG3_CHORD = "BoundaryDeg3Chord"
    BOUNDARY_DEG3_NOCHORD = "BoundaryDeg3NoChord"
    INTERIOR_DEG3 = "InteriorDeg3"
    INTERIOR_DEG4 = "InteriorDeg4"
    INTERIOR_DEG5 = "InteriorDeg5"


BOUNDARY_CASES = {
    ReductionCase.BOUNDARY_DEG2,
    ReductionCase.BOUNDARY_DEG3_CHORD,
    ReductionCase.BOUNDARY_DEG3_NOCHORD,
}


@dataclass(frozen=True)
class ReducibleConfig:
    case: ReductionCase
    vertex: int
    neighbors_ccw: tuple[int, ...]


@dataclass(frozen=True)
class ReductionStep:
    config: ReducibleConfig
    removed_rotation: tuple[int, ...]
    added_edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class ReductionTrace:
    steps: tuple[ReductionStep, ...]
    base: PlanarEmbedding
    # forbidden-color count observed when the step's vertex was re-colored,
    # aligned with `steps`
    forbidden_counts: tuple[int, ...] = ()

    def case_histogram(self) -> dict[str, int]:
        hist: dict[str, int] = {}
        for step in self.steps:
            key = step.config.case.value
            hist[key] = hist.get(key, 0) + 1
        return hist


def find_reducible(emb: PlanarEmbedding) -> ReducibleConfig:
    """Locate the reduction site: boundary vertices of degree <= 3 first,
    then interior vertices of degree <= 5, smallest id winning inside each
    class.  Requires a near-triangulation on >= 7 vertices."""
    if emb.n < 7:
        raise ValueError(f"reduction needs n >= 7, got n={emb.n}")
    walk = emb.outer_face
    on_boundary = emb.boundary_set

    for v in emb.vertices:
        if v in on_boundary and emb.degree(v) <= 3:
            return _classify_boundary(emb, v, walk)
    for v in emb.vertices:
        if v not in on_boundary and emb.degree(v) <= 5:
            if emb.degree(v) < 3:
                raise NoReducibleVertex(
                    f"interior vertex {v} has degree {emb.degree(v)}: malformed input"
                )
            link = emb.rotation[v]
            start = link.index(min(link))
            case = {
                3: ReductionCase.INTERIOR_DEG3,
                4: ReductionCase.INTERIOR_DEG4,
                5: ReductionCase.INTERIOR_DEG5,
            }[len(link)]
            return ReducibleConfig(case, v, link[start:] + link[:start])
    raise NoReducibleVertex("all boundary degrees >= 4 and interior degrees >= 6")


def _classify_boundary(
    emb: PlanarEmbedding, v: int, walk: tuple[int, ...]
) -> ReducibleConfig:
    k = walk.index(v)
    succ = walk[(k + 1) % len(walk)]
    pred = walk[(k - 1) % len(walk)]
    rot = emb.rotation[v]
    start = rot.index(succ)
    link = rot[start:] + rot[:start]  # first neighbor = boundary successor
    if link[-1] != pred:
        raise NoReducibleVertex(
            f"boundary vertex {v} does not end its rotation at its walk predecessor"
        )
    if len(link) == 2:
        return ReducibleConfig(ReductionCase.BOUNDARY_DEG2, v, link)
    if len(link) == 3:
        case = (
            ReductionCase.BOUNDARY_DEG3_CHORD
            if emb.has_edge(link[0], link[2])
            else ReductionCase.BOUNDARY_DEG3_NOCHORD
        )
        return ReducibleConfig(case, v, link)
    raise NoReducibleVertex(f"vertex {v} is not a boundary reduction site")


def _fan_triangulations(
    hole: Sequence[int],
) -> Iterator[tuple[int, tuple[tuple[int, int], ...]]]:
    """Fans of the hole polygon, apices in increasing vertex id.

    For holes of length 4 and 5 the fans enumerate every triangulation
    (two for a square, five for a pentagon), so first-fit over them is a
    complete search.
    """
    m = len(hole)
    for apex in sorted(hole):
        i = hole.index(apex)
        chords = tuple(
            (apex, hole[(i + d) % m]) for d in range(2, m - 1)
        )
        yield apex, chords


def apply_reduction(
    emb: PlanarEmbedding, config: ReducibleConfig
) -> tuple[PlanarEmbedding, ReductionStep]:
    """Remove the configured vertex and patch the embedding back into a
    near-triangulation, returning the reduced graph and a replayable
    record of what changed."""
    v = config.vertex
    link = config.neighbors_ccw
    reduced = remove_vertex(emb, v)
    added: tuple[tuple[int, int], ...] = ()

    if config.case is ReductionCase.BOUNDARY_DEG3_NOCHORD:
        # close the boundary across the exposed middle neighbor; the part
        # of the old outer walk away from it stays outer
        u1, _, u3 = link
        reduced = add_edge_in_face(reduced, u1, u3, reduced.outer_face)
        added = ((u1, u3),)
    elif config.case in (ReductionCase.INTERIOR_DEG4, ReductionCase.INTERIOR_DEG5):
        hole = face_from_dart(reduced, link[1], link[0])
        reduced, added = _triangulate_hole(reduced, hole)

    return reduced, ReductionStep(config, link, added)


def _triangulate_hole(
    emb: PlanarEmbedding, hole: tuple[int, ...]
) -> tuple[PlanarEmbedding, tuple[tuple[int, int], ...]]:
    for apex, chords in _fan_triangulations(hole):
        if any(emb.has_edge(a, b) for a, b in chords):
            continue
        current = hole
        for a, b in chords:
            # chords leave the apex in walk order, so the part from the far
            # endpoint back to the apex always carries the remaining hole
            _, remainder = split_face_walk(current, a, b)
            emb = add_edge_in_face(emb, a, b, current)
            current = remainder
        return emb, chords
    # unreachable: crossing chords cannot coexist in the complementary disk,
    # so some fan always avoids the pre-existing diagonals
    raise HoleTriangulationFailed(f"no fan fits hole {hole}")


def _extend(
    emb: PlanarEmbedding,
    step: ReductionStep,
    phi: col.Coloring,
    lists: Mapping[int, AbstractSet[int]],
    r: int,
) -> tuple[col.Coloring, int]:
    v = step.config.vertex
    options = col.valid_extensions(emb, phi, v, lists, r)
    forbidden = len(lists[v]) - len(options)
    if not options:
        raise ExtensionFailed(
            f"no color in L({v}) extends the reduced coloring ({step.config.case.value})"
        )
    out = dict(phi)
    out[v] = min(options)
    return out, forbidden


def extend_coloring(
    emb: PlanarEmbedding,
    step: ReductionStep,
    phi_reduced: col.Coloring,
    lists: Mapping[int, AbstractSet[int]],
    r: int = 3,
) -> col.Coloring:
    """Extend a coloring of the reduced graph to the removed vertex.

    The color is the smallest member of valid_extensions; with 6-lists a
    valid color always exists, while exploration-size lists may raise
    ExtensionFailed.
    """
    phi, _ = _extend(emb, step, phi_reduced, lists, r)
    return phi


def color_near_triangulation(
    emb: PlanarEmbedding,
    lists: Mapping[int, AbstractSet[int]],
    r: int = 3,
    explore: bool = False,
) -> tuple[col.Coloring, ReductionTrace]:
    """Produce an r-dynamic list coloring by reduce / recurse / extend.

    Graphs on at most six vertices are colored rainbow-greedily (every
    list has six colors, so all-distinct colors fit and every
    neighborhood is trivially rainbow).  With explore=True, lists smaller
    than 6 are accepted and failures surface as ColoringFailed.
    """
    if not is_near_triangulation(emb):
        raise NotNearTriangulation("input is not a near-triangulation")
    if not explore:
        short = [v for v in emb.vertices if len(lists[v]) < 6]
        if short:
            raise ValueError(
                f"lists at {short[:5]} have fewer than 6 colors; use explore=True"
            )

    steps: list[ReductionStep] = []
    hosts: list[PlanarEmbedding] = []
    current = emb
    while current.n > 6:
        config = find_reducible(current)
        hosts.append(current)
        current, step = apply_reduction(current, config)
        steps.append(step)

    try:
        phi = oracle.rainbow_greedy(current, lists)
    except oracle.ListTooSmall as exc:
        # with 6-lists the base always fits rainbow; short exploration
        # lists get an exhaustive base solve instead, which at six
        # vertices costs nothing
        if not explore:
            raise ColoringFailed(f"base case of {current.n} vertices: {exc}") from exc
        phi = oracle.solve_list_r_dynamic(current, lists, r)
        if phi is None:
            raise ColoringFailed(
                f"base case of {current.n} vertices admits no coloring from its lists"
            ) from exc

    forbidden: list[int] = [0] * len(steps)
    try:
        for i in range(len(steps) - 1, -1, -1):
            phi, forbidden[i] = _extend(hosts[i], steps[i], phi, lists, r)
    except ExtensionFailed as exc:
        raise ColoringFailed(str(exc)) from exc

    trace = ReductionTrace(tuple(steps), current, tuple(forbidden))
    return phi, trace


# -- replay and audit ----------------------------------------------------------


def undo_step(emb: PlanarEmbedding, step: ReductionStep) -> PlanarEmbedding:
    """Invert one reduction: drop the patch edges, re-insert the vertex."""
    for a, b in reversed(step.added_edges):
        emb = remove_edge(emb, a, b)
    v = step.config.vertex
    link = step.removed_rotation
    if step.config.case in BOUNDARY_CASES:
        # the walk currently reads ..., us, (link interior reversed), u1, ...;
        # put v back between its old walk predecessor us and successor u1
        walk = emb.outer_face
        u1, us = link[0], link[-1]
        segment = walk[walk.index(us):] + walk[: walk.index(us)]
        restored = (us, v) + segment[segment.index(u1):]
        return insert_vertex(emb, v, link, restored)
    return insert_vertex(emb, v, link)


def replay_trace(trace: ReductionTrace) -> PlanarEmbedding:
    """Rebuild the original graph from the base by undoing steps in reverse."""
    emb = trace.base
    for step in reversed(trace.steps):
        emb = undo_step(emb, step)
    return emb


def audit_trace(
    emb: PlanarEmbedding, steps: Sequence[ReductionStep]
) -> PlanarEmbedding:
    """Re-apply recorded steps to the original graph, checking each record
    matches what the engine would do; returns the base graph."""
    current = emb
    for step in steps:
        cfg = step.config
        rot = current.rotation[cfg.vertex]
        if canonical_cycle(rot) != canonical_cycle(step.removed_rotation):
            raise ValueError(f"recorded rotation at {cfg.vertex} does not match graph")
        current, redone = apply_reduction(current, cfg)
        if redone.added_edges != step.added_edges:
            raise ValueError(f"recorded patch edges differ at {cfg.vertex}")
    return current


# -- trace serialization ---------------------------------------------------------


def trace_to_document(trace: ReductionTrace) -> list[dict]:
    """Wire form: ordered list of step records."""
    return steps_to_document(trace.steps)


def steps_to_document(steps: Sequence[ReductionStep]) -> list[dict]:
    return [
        {
            "case": step.config.case.value,
            "vertex": step.config.vertex,
            "rotation": list(step.removed_rotation),
            "added_edges": [list(e) for e in step.added_edges],
        }
        for step in steps
    ]


def steps_from_document(doc: Sequence[Mapping]) -> tuple[ReductionStep, ...]:
    steps = []
    for rec in doc:
        case = ReductionCase(rec["case"])
        rotation = tuple(int(u) for u in rec["rotation"])
        config = ReducibleConfig(case, int(rec["vertex"]), rotation)
        added = tuple((int(a), int(b)) for a, b in rec["added_edges"])
        steps.append(ReductionStep(config, rotation, added))
    return tuple(steps)
