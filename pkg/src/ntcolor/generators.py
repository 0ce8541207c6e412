"""Construction of wheel, fan, stacked and randomized near-triangulations.

Random constructions use ``random.Random`` (Mersenne Twister) seeded
explicitly, so the same parameters always rebuild the same graph; the
algorithm identifier recorded in corpus manifests is RNG_ALGORITHM.
"""

from __future__ import annotations

import hashlib
import json
import random
from dataclasses import dataclass

from .embedding import PlanarEmbedding, to_document

RNG_ALGORITHM = "python-random-mersenne-twister"


class InvalidParameter(Exception):
    pass


@dataclass(frozen=True)
class GeneratorSpec:
    family: str  # wheel | fan | stacked | random_nt
    n: int
    t: int | None = None
    seed: int | None = None
    flips: int | None = None


def build(spec: GeneratorSpec) -> PlanarEmbedding:
    if spec.family == "wheel":
        return wheel(spec.n)
    if spec.family == "fan":
        return fan(spec.n)
    if spec.family == "stacked":
        return stacked(spec.t, spec.n, spec.seed or 0)
    if spec.family == "random_nt":
        return random_near_triangulation(spec.t, spec.n, spec.flips or 0, spec.seed or 0)
    raise InvalidParameter(f"unknown family {spec.family!r}")


def manifest_entry(spec: GeneratorSpec, emb: PlanarEmbedding) -> dict:
    # digest covers the exact bytes of the graph document as written
    doc = to_document(emb)
    payload = (json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n").encode()
    entry = {
        "family": spec.family,
        "n": spec.n,
        "rng": RNG_ALGORITHM,
        "sha256": hashlib.sha256(payload).hexdigest(),
    }
    if spec.t is not None:
        entry["t"] = spec.t
    if spec.seed is not None:
        entry["seed"] = spec.seed
    if spec.flips is not None:
        entry["flips"] = spec.flips
    return entry


# -- fixed families -----------------------------------------------------------


def wheel(n: int) -> PlanarEmbedding:
    """Cycle 0..n-1 plus hub n joined to every cycle vertex; hub interior."""
    if n < 3:
        raise InvalidParameter(f"wheel needs a cycle of length >= 3, got {n}")
    hub = n
    rot = {i: ((i + 1) % n, hub, (i - 1) % n) for i in range(n)}
    rot[hub] = tuple(range(n))
    return PlanarEmbedding(rot, tuple(range(n)))


def fan(n: int) -> PlanarEmbedding:
    """Path 0..n-1 plus apex n joined to every path vertex."""
    if n < 2:
        raise InvalidParameter(f"fan needs a path of length >= 2, got {n}")
    apex = n
    rot: dict[int, tuple[int, ...]] = {apex: tuple(range(n))}
    rot[0] = (1, apex)
    rot[n - 1] = (apex, n - 2)
    for i in range(1, n - 1):
        rot[i] = (i + 1, apex, i - 1)
    return PlanarEmbedding(rot, (apex,) + tuple(range(n)))


# -- randomized families -------------------------------------------------------


class _Builder:
    """Mutable rotation system restricted to near-triangulations.

    Tracks bounded triangles in trace orientation and the edges interior
    to the boundary, so vertex stacking and edge flips are O(degree)
    without re-tracing faces.
    """

    def __init__(self, t: int):
        if t < 3:
            raise InvalidParameter(f"boundary length must be >= 3, got {t}")
        # t-gon 0..t-1 triangulated by chords from vertex 0
        self.rot: dict[int, list[int]] = {0: list(range(1, t))}
        self.rot[1] = [2, 0]
        self.rot[t - 1] = [0, t - 2]
        for j in range(2, t - 1):
            self.rot[j] = [j + 1, 0, j - 1]
        self.outer = tuple(range(t))
        self.faces: list[tuple[int, int, int]] = [(j, 0, j + 1) for j in range(1, t - 1)]
        self.interior_edges: list[tuple[int, int]] = [(0, j) for j in range(2, t - 1)]
        self.adj = {v: set(nbrs) for v, nbrs in self.rot.items()}
        self.face_of_dart: dict[tuple[int, int], int] = {}
        for i, f in enumerate(self.faces):
            self._index_face(i, f)

    def _index_face(self, idx: int, face: tuple[int, int, int]) -> None:
        a, b, c = face
        self.face_of_dart[(a, b)] = idx
        self.face_of_dart[(b, c)] = idx
        self.face_of_dart[(c, a)] = idx

    def _insert_after(self, at: int, anchor: int, new: int) -> None:
        rot = self.rot[at]
        rot.insert(rot.index(anchor) + 1, new)

    def stack(self, face_idx: int) -> None:
        """New vertex inside bounded triangle `faces[face_idx]`."""
        a, b, c = self.faces[face_idx]
        x = len(self.rot)
        for prev, corner in ((c, a), (a, b), (b, c)):
            self._insert_after(corner, prev, x)
        self.rot[x] = [c, b, a]
        self.adj[x] = {a, b, c}
        for y in (a, b, c):
            self.adj[y].add(x)
        self.faces[face_idx] = (a, b, x)
        self._index_face(face_idx, (a, b, x))
        self.faces.append((b, c, x))
        self._index_face(len(self.faces) - 1, (b, c, x))
        self.faces.append((c, a, x))
        self._index_face(len(self.faces) - 1, (c, a, x))
        self.interior_edges += [(a, x), (b, x), (c, x)]

    def flip(self, edge_idx: int) -> bool:
        """Replace interior edge a-b by the opposite chord of the two
        triangles around it; skipped when the chord already exists."""
        a, b = self.interior_edges[edge_idx]
        i1 = self.face_of_dart[(a, b)]
        i2 = self.face_of_dart[(b, a)]
        fa, fb = self.faces[i1], self.faces[i2]
        c = next(x for x in fa if x not in (a, b))  # face (a, b, c)
        d = next(x for x in fb if x not in (a, b))  # face (b, a, d)
        if c == d or d in self.adj[c]:
            return False

        self.rot[a].remove(b)
        self.rot[b].remove(a)
        self.adj[a].discard(b)
        self.adj[b].discard(a)
        self._insert_after(c, b, d)
        self._insert_after(d, a, c)
        self.adj[c].add(d)
        self.adj[d].add(c)
        del self.face_of_dart[(a, b)]
        del self.face_of_dart[(b, a)]
        self.faces[i1] = (c, d, b)
        self._index_face(i1, (c, d, b))
        self.faces[i2] = (d, c, a)
        self._index_face(i2, (d, c, a))
        self.interior_edges[edge_idx] = (c, d)
        return True

    def freeze(self) -> PlanarEmbedding:
        return PlanarEmbedding({v: tuple(nbrs) for v, nbrs in self.rot.items()}, self.outer)


def stacked(t: int, n: int, seed: int) -> PlanarEmbedding:
    """Fan-triangulated t-gon grown to n vertices by repeatedly inserting a
    vertex into a seeded-random bounded triangle."""
    if n < t:
        raise InvalidParameter(f"need n >= t, got n={n} t={t}")
    builder = _Builder(t)
    rng = random.Random(seed)
    for _ in range(n - t):
        builder.stack(rng.randrange(len(builder.faces)))
    return builder.freeze()


def random_near_triangulation(t: int, n: int, flips: int, seed: int) -> PlanarEmbedding:
    """Stacked triangulation followed by `flips` random interior edge flip
    attempts; illegal flips are skipped rather than retried."""
    if flips < 0:
        raise InvalidParameter(f"flips must be >= 0, got {flips}")
    if n < t:
        raise InvalidParameter(f"need n >= t, got n={n} t={t}")
    builder = _Builder(t)
    rng = random.Random(seed)
    for _ in range(n - t):
        builder.stack(rng.randrange(len(builder.faces)))
    for _ in range(flips):
        if builder.interior_edges:
            builder.flip(rng.randrange(len(builder.interior_edges)))
    return builder.freeze()
