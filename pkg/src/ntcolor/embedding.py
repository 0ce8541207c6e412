"""Combinatorial plane graphs given by rotation systems.

A graph is stored as, for every vertex, the cyclic counter-clockwise order
of its neighbors, plus an explicit boundary walk for the unbounded face.
Faces are traced purely combinatorially: the face lying to the right of
each directed edge is followed, so bounded faces read clockwise and the
outer face reads counter-clockwise.  All mutating operations return fresh
values; embeddings are never modified in place.

Vertex ids stay stable across removals (gaps are allowed); serialization
re-densifies ids to 0..n-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Mapping, Sequence


class MalformedEmbedding(Exception):
    """The rotation system or outer-face designation is inconsistent."""


class NotNearTriangulation(Exception):
    """Operation requires every bounded face to be a triangle and a simple boundary."""


class DisconnectsGraph(Exception):
    """Removing the vertex or edge would disconnect the graph."""


class EdgeAlreadyPresent(Exception):
    pass


class VerticesNotOnFace(Exception):
    pass


def canonical_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically smallest rotation of a cyclic sequence."""
    seq = tuple(seq)
    if not seq:
        return ()
    return min(seq[i:] + seq[:i] for i in range(len(seq)))


@dataclass(frozen=True)
class Face:
    boundary: tuple[int, ...]
    is_outer: bool = False

    def __len__(self) -> int:
        return len(self.boundary)

    @property
    def canonical(self) -> tuple[int, ...]:
        return canonical_cycle(self.boundary)


@dataclass(frozen=True)
class BoundaryStats:
    """Counts for a near-triangulation: boundary length, interior vertices, edges."""

    boundary_len: int
    interior_count: int
    edge_count: int

    @property
    def vertex_count(self) -> int:
        return self.boundary_len + self.interior_count


@dataclass(frozen=True)
class PlanarEmbedding:
    """Immutable plane graph: per-vertex CCW neighbor order plus outer walk."""

    rotation: Mapping[int, tuple[int, ...]]
    outer_face: tuple[int, ...]

    def __post_init__(self) -> None:
        rot = {int(v): tuple(int(u) for u in nbrs) for v, nbrs in dict(self.rotation).items()}
        object.__setattr__(self, "rotation", rot)
        object.__setattr__(self, "outer_face", tuple(int(v) for v in self.outer_face))

    # -- derived views ----------------------------------------------------

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.rotation))

    @property
    def n(self) -> int:
        return len(self.rotation)

    @cached_property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.rotation.values()) // 2

    @cached_property
    def neighbor_sets(self) -> dict[int, frozenset[int]]:
        return {v: frozenset(nbrs) for v, nbrs in self.rotation.items()}

    @cached_property
    def boundary_set(self) -> frozenset[int]:
        return frozenset(self.outer_face)

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def has_edge(self, u: int, w: int) -> bool:
        return w in self.neighbor_sets[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in self.vertices:
            for u in self.rotation[v]:
                if v < u:
                    yield (v, u)

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        return tuple(_trace_all_faces(self))

    def next_dart(self, u: int, v: int) -> tuple[int, int]:
        """Dart following (u, v) in the walk of the face to its right."""
        nbrs = self.rotation[v]
        i = nbrs.index(u)
        return v, nbrs[(i + 1) % len(nbrs)]


# -- validation ------------------------------------------------------------


def check_valid(emb: PlanarEmbedding) -> None:
    """Raise MalformedEmbedding unless the rotation system is a connected,
    simple, planar embedding whose designated outer walk is a traced face."""
    rot = emb.rotation
    for v, nbrs in rot.items():
        seen = set()
        for u in nbrs:
            if u == v:
                raise MalformedEmbedding(f"self-loop at vertex {v}")
            if u in seen:
                raise MalformedEmbedding(f"duplicate neighbor {u} at vertex {v}")
            if u not in rot:
                raise MalformedEmbedding(f"vertex {v} lists unknown neighbor {u}")
            seen.add(u)
    for v, nbrs in rot.items():
        for u in nbrs:
            if v not in emb.neighbor_sets[u]:
                raise MalformedEmbedding(f"edge {v}-{u} is not symmetric")

    if emb.n == 0:
        if emb.outer_face:
            raise MalformedEmbedding("outer face on empty graph")
        return
    if not _connected(rot):
        raise MalformedEmbedding("graph is not connected")
    if emb.edge_count == 0:
        if emb.outer_face != emb.vertices:  # single vertex, trivial walk
            raise MalformedEmbedding("bad outer walk for edgeless graph")
        return

    faces = emb.faces  # also checks the outer walk matches a traced face
    f = len(faces)
    if emb.n - emb.edge_count + f != 2:
        raise MalformedEmbedding(
            f"Euler check failed: n={emb.n} e={emb.edge_count} f={f} (not planar)"
        )


def _connected(rot: Mapping[int, tuple[int, ...]]) -> bool:
    start = next(iter(rot))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in rot[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(rot)


def _trace_all_faces(emb: PlanarEmbedding) -> list[Face]:
    rot = emb.rotation
    pos: dict[tuple[int, int], int] = {}
    for v, nbrs in rot.items():
        for i, u in enumerate(nbrs):
            if (v, u) in pos:
                raise MalformedEmbedding(f"duplicate neighbor {u} at vertex {v}")
            pos[(v, u)] = i
    for (v, u) in pos:
        if (u, v) not in pos:
            raise MalformedEmbedding(f"edge {v}-{u} is not symmetric")

    walks: list[tuple[int, ...]] = []
    unused = dict.fromkeys(sorted(pos))
    while unused:
        dart = next(iter(unused))
        walk = []
        while dart in unused:
            del unused[dart]
            walk.append(dart[0])
            u, v = dart
            nbrs = rot[v]
            dart = (v, nbrs[(pos[(v, u)] + 1) % len(nbrs)])
        walks.append(tuple(walk))

    outer_key = canonical_cycle(emb.outer_face)
    faces = [Face(w, canonical_cycle(w) == outer_key) for w in walks]
    if sum(f.is_outer for f in faces) != 1:
        raise MalformedEmbedding("designated outer walk is not a traced face")
    return faces


def face_from_dart(emb: PlanarEmbedding, u: int, v: int) -> tuple[int, ...]:
    """Boundary walk of the face to the right of the directed edge (u, v)."""
    if v not in emb.neighbor_sets.get(u, frozenset()):
        raise VerticesNotOnFace(f"no edge {u}-{v}")
    walk = [u]
    dart = emb.next_dart(u, v)
    while dart != (u, v):
        walk.append(dart[0])
        dart = emb.next_dart(*dart)
    return tuple(walk)


# -- queries ----------------------------------------------------------------


def trace_faces(emb: PlanarEmbedding) -> list[Face]:
    """All faces of the embedding, each directed edge used exactly once."""
    return list(emb.faces)


def is_near_triangulation(emb: PlanarEmbedding) -> bool:
    """True iff every bounded face is a 3-cycle and the outer walk is a
    simple cycle (no repeated vertex)."""
    if emb.n < 3:
        return False
    outer = emb.outer_face
    if len(set(outer)) != len(outer) or len(outer) < 3:
        return False
    return all(len(f) == 3 for f in emb.faces if not f.is_outer)


def boundary_stats(emb: PlanarEmbedding) -> BoundaryStats:
    """Boundary length, interior vertex count and edge count."""
    if not is_near_triangulation(emb):
        raise NotNearTriangulation("boundary_stats needs a near-triangulation")
    t = len(emb.outer_face)
    return BoundaryStats(t, emb.n - t, emb.edge_count)


def neighbors_ccw(emb: PlanarEmbedding, v: int) -> tuple[int, ...]:
    """Neighbors of v in counter-clockwise order."""
    return emb.rotation[v]


# -- mutators (value-semantic) ----------------------------------------------


def remove_vertex(emb: PlanarEmbedding, v: int) -> PlanarEmbedding:
    """Remove v and every incident edge, recomputing the outer walk.

    When v sits on the boundary the walk is patched through v's remaining
    neighbors; untouched faces are preserved.  Raises DisconnectsGraph if
    the remainder falls apart.
    """
    if v not in emb.rotation:
        raise MalformedEmbedding(f"no vertex {v}")
    fast = _try_remove_fast(emb, v)
    if fast is not None:
        return fast
    return _remove_slow(emb, v)


def _rotation_without(emb: PlanarEmbedding, v: int) -> dict[int, tuple[int, ...]]:
    new_rot = {}
    nbrs_of_v = emb.neighbor_sets[v]
    for w, nbrs in emb.rotation.items():
        if w == v:
            continue
        new_rot[w] = tuple(u for u in nbrs if u != v) if w in nbrs_of_v else nbrs
    return new_rot


def _is_triangle_face(emb: PlanarEmbedding, v: int, a: int, b: int) -> bool:
    # True iff the face in the wedge (v; a, b), a then b consecutive at v,
    # is exactly the triangle v-a-b.
    rot_b = emb.rotation[b]
    if v not in emb.neighbor_sets[b] or a not in emb.neighbor_sets[b]:
        return False
    i = rot_b.index(v)
    if rot_b[(i + 1) % len(rot_b)] != a:
        return False
    rot_a = emb.rotation[a]
    j = rot_a.index(b)
    return rot_a[(j + 1) % len(rot_a)] == v


def _try_remove_fast(emb: PlanarEmbedding, v: int) -> PlanarEmbedding | None:
    """Local removal when every bounded face at v is a triangle.

    Covers every vertex of a near-triangulation; returns None when the
    situation calls for the general re-tracing path.
    """
    rot_v = emb.rotation[v]
    if len(rot_v) < 2:
        return None
    occurrences = [i for i, w in enumerate(emb.outer_face) if w == v]
    if len(occurrences) > 1:
        return None

    if not occurrences:
        # interior: full link must consist of triangle faces
        s = len(rot_v)
        for i in range(s):
            if not _is_triangle_face(emb, v, rot_v[i], rot_v[(i + 1) % s]):
                return None
        return PlanarEmbedding(_rotation_without(emb, v), emb.outer_face)

    k = occurrences[0]
    walk = emb.outer_face
    succ = walk[(k + 1) % len(walk)]
    if succ not in emb.neighbor_sets[v]:
        return None
    start = rot_v.index(succ)
    link = rot_v[start:] + rot_v[:start]  # starts at the walk successor
    if link[-1] != walk[(k - 1) % len(walk)]:
        return None
    for i in range(len(link) - 1):
        if not _is_triangle_face(emb, v, link[i], link[i + 1]):
            return None
    patched = walk[:k] + tuple(reversed(link[1:-1])) + walk[k + 1:]
    if len(patched) < 3:
        return None
    return PlanarEmbedding(_rotation_without(emb, v), patched)


def _remove_slow(emb: PlanarEmbedding, v: int) -> PlanarEmbedding:
    new_rot = _rotation_without(emb, v)
    if not new_rot:
        return PlanarEmbedding({}, ())
    if not _connected(new_rot):
        raise DisconnectsGraph(f"removing {v} disconnects the graph")
    if len(new_rot) == 1:
        only = next(iter(new_rot))
        return PlanarEmbedding(new_rot, (only,))

    probe = PlanarEmbedding(new_rot, ())
    walk = emb.outer_face
    outer = None
    for i, a in enumerate(walk):
        b = walk[(i + 1) % len(walk)]
        if a != v and b != v and b in probe.neighbor_sets.get(a, frozenset()):
            outer = face_from_dart(probe, a, b)
            break
    if outer is None:
        raise MalformedEmbedding(f"cannot locate outer face after removing {v}")
    return PlanarEmbedding(new_rot, outer)


def split_face_walk(
    face: Sequence[int], u: int, w: int
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split a simple face walk along a chord u-w.

    Returns (part from u forward to w, part from w forward to u); each part
    is the walk of one of the two faces created by the chord, in trace
    orientation.
    """
    walk = tuple(face)
    if walk.count(u) != 1 or walk.count(w) != 1:
        raise VerticesNotOnFace(f"{u} and {w} must appear exactly once on the face")
    i, j = walk.index(u), walk.index(w)
    if i <= j:
        forward = walk[i : j + 1]
        backward = walk[j:] + walk[: i + 1]
    else:
        forward = walk[i:] + walk[: j + 1]
        backward = walk[j : i + 1]
    return forward, backward


def add_edge_in_face(
    emb: PlanarEmbedding, u: int, w: int, face: Face | Sequence[int]
) -> PlanarEmbedding:
    """Insert the chord u-w inside the given face, splitting it in two.

    Only the rotations at u and w change, so planarity is preserved by
    construction.  If the face is the outer one, the part running from u
    forward to w (in walk orientation) stays outer.
    """
    walk = tuple(face.boundary if isinstance(face, Face) else face)
    if u == w:
        raise VerticesNotOnFace("chord endpoints must differ")
    if u not in walk or w not in walk:
        raise VerticesNotOnFace(f"{u} or {w} not on the face")
    if w in emb.neighbor_sets[u]:
        raise EdgeAlreadyPresent(f"edge {u}-{w} already present")
    _check_is_face(emb, walk)

    forward, _ = split_face_walk(walk, u, w)

    new_rot = dict(emb.rotation)
    for a, b in ((u, w), (w, u)):
        i = walk.index(a)
        prev = walk[(i - 1) % len(walk)]
        rot = new_rot[a]
        j = rot.index(prev)
        new_rot[a] = rot[: j + 1] + (b,) + rot[j + 1 :]

    outer = emb.outer_face
    if canonical_cycle(walk) == canonical_cycle(outer):
        outer = forward
    return PlanarEmbedding(new_rot, outer)


def _check_is_face(emb: PlanarEmbedding, walk: tuple[int, ...]) -> None:
    m = len(walk)
    if m < 3:
        raise VerticesNotOnFace("face walk too short")
    for i in range(m):
        a, b, c = walk[i - 1], walk[i], walk[(i + 1) % m]
        if b not in emb.neighbor_sets.get(a, frozenset()):
            raise VerticesNotOnFace(f"walk edge {a}-{b} missing")
        if emb.next_dart(a, b) != (b, c):
            raise VerticesNotOnFace("sequence is not a traced face of this embedding")


def insert_vertex(
    emb: PlanarEmbedding,
    v: int,
    rotation: Sequence[int],
    outer_face: Sequence[int] | None = None,
) -> PlanarEmbedding:
    """Re-insert vertex v with the given CCW neighbor list.

    The inverse of remove_vertex: at each neighbor, v is spliced back
    between its cyclically adjacent link members.  Pass outer_face when v
    belonged to the boundary; otherwise the old walk is kept.
    """
    if v in emb.rotation:
        raise MalformedEmbedding(f"vertex {v} already present")
    link = tuple(rotation)
    new_rot = dict(emb.rotation)
    s = len(link)
    for i, u in enumerate(link):
        rot = new_rot[u]
        if i < s - 1:
            nxt = link[i + 1]
            j = rot.index(nxt)
            new_rot[u] = rot[: j + 1] + (v,) + rot[j + 1 :]
        else:
            prv = link[i - 1]
            j = rot.index(prv)
            new_rot[u] = rot[:j] + (v,) + rot[j:]
    new_rot[v] = link
    out = tuple(outer_face) if outer_face is not None else emb.outer_face
    result = PlanarEmbedding(new_rot, out)
    check_valid(result)
    return result


def remove_edge(emb: PlanarEmbedding, u: int, w: int) -> PlanarEmbedding:
    """Delete edge u-w, merging its two incident faces."""
    if w not in emb.neighbor_sets.get(u, frozenset()):
        raise MalformedEmbedding(f"no edge {u}-{w}")
    new_rot = dict(emb.rotation)
    new_rot[u] = tuple(x for x in new_rot[u] if x != w)
    new_rot[w] = tuple(x for x in new_rot[w] if x != u)
    if not _connected(new_rot):
        raise DisconnectsGraph(f"removing edge {u}-{w} disconnects the graph")

    probe = PlanarEmbedding(new_rot, ())
    walk = emb.outer_face
    for i, a in enumerate(walk):
        b = walk[(i + 1) % len(walk)]
        if {a, b} != {u, w} and b in probe.neighbor_sets.get(a, frozenset()):
            return PlanarEmbedding(new_rot, face_from_dart(probe, a, b))
    raise MalformedEmbedding("cannot locate outer face after edge removal")


def add_vertex_in_triangle(
    emb: PlanarEmbedding, face: Face | Sequence[int], new_id: int | None = None
) -> PlanarEmbedding:
    """Insert a new vertex inside a bounded triangular face, joined to its
    three corners."""
    walk = tuple(face.boundary if isinstance(face, Face) else face)
    if len(walk) != 3:
        raise VerticesNotOnFace("can only stack into a triangle")
    if canonical_cycle(walk) == canonical_cycle(emb.outer_face):
        raise VerticesNotOnFace("cannot stack into the outer face")
    _check_is_face(emb, walk)
    x = max(emb.rotation) + 1 if new_id is None else new_id
    if x in emb.rotation:
        raise MalformedEmbedding(f"vertex {x} already present")

    new_rot = dict(emb.rotation)
    for i, a in enumerate(walk):
        prev = walk[i - 1]
        rot = new_rot[a]
        j = rot.index(prev)
        new_rot[a] = rot[: j + 1] + (x,) + rot[j + 1 :]
    new_rot[x] = tuple(reversed(walk))
    return PlanarEmbedding(new_rot, emb.outer_face)


# -- serialization -----------------------------------------------------------


def to_document(emb: PlanarEmbedding) -> dict:
    """GraphDocument dict with vertices re-densified to 0..n-1."""
    order = emb.vertices
    index = {v: i for i, v in enumerate(order)}
    return {
        "n": emb.n,
        "rotation": [[index[u] for u in emb.rotation[v]] for v in order],
        "outer_face": [index[v] for v in emb.outer_face],
    }


def from_document(doc: Mapping) -> PlanarEmbedding:
    """Parse and fully validate a GraphDocument dict."""
    try:
        n = int(doc["n"])
        rotation = doc["rotation"]
        outer = doc["outer_face"]
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedEmbedding(f"bad graph document: {exc}") from exc
    if n != len(rotation):
        raise MalformedEmbedding("n does not match rotation length")
    for nbrs in rotation:
        for u in nbrs:
            if not 0 <= int(u) < n:
                raise MalformedEmbedding(f"vertex id {u} out of range")
    emb = PlanarEmbedding({i: tuple(nbrs) for i, nbrs in enumerate(rotation)}, tuple(outer))
    check_valid(emb)
    return emb


def to_dot(emb: PlanarEmbedding) -> str:
    """DOT rendering; each edge once, outer walk noted in a comment."""
    lines = ["graph nt {"]
    lines.append("  // outer_face: " + " ".join(str(v) for v in emb.outer_face))
    for v in emb.vertices:
        if not emb.rotation[v]:
            lines.append(f"  {v};")
    for u, w in emb.edges():
        lines.append(f"  {u} -- {w};")
    lines.append("}")
    return "\n".join(lines) + "\n"
