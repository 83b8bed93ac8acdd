"""Abstract simplicial complexes on the ground set {0..m-1} and their exact
reduced homology over the rationals.

Faces are int bit masks.  The void complex (no faces at all) and the
complex {∅} are different objects and behave differently under homology
and duality.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd
from typing import Iterable

from .graph import bits, mask_of

DEFAULT_MAX_FACES = 1 << 16


class FaceCapError(ValueError):
    pass


@dataclass(frozen=True)
class SimplicialComplex:
    ground: int
    faces: frozenset

    def __post_init__(self):
        if not isinstance(self.faces, frozenset):
            object.__setattr__(self, "faces", frozenset(self.faces))
        limit = 1 << self.ground
        faces = self.faces
        for f in faces:
            if f < 0 or f >= limit:
                raise ValueError(f"face {bits(f)} outside ground set of size {self.ground}")
            rest = f
            while rest:
                low = rest & -rest
                rest ^= low
                if f ^ low not in faces:
                    raise ValueError(f"not downward closed: {bits(f)} lacks {bits(f ^ low)}")

    def __contains__(self, face: int) -> bool:
        return face in self.faces

    def __len__(self):
        return len(self.faces)

    @property
    def is_void(self) -> bool:
        return not self.faces

    @property
    def dimension(self) -> int:
        """-1 for {∅}; the void complex reports -2."""
        if not self.faces:
            return -2
        return max(f.bit_count() for f in self.faces) - 1

    def faces_of_dim(self, k: int) -> list[int]:
        return sorted(f for f in self.faces if f.bit_count() == k + 1)

    def f_vector(self) -> dict[int, int]:
        """Face counts by dimension, starting at -1."""
        counts: dict[int, int] = {}
        for f in self.faces:
            d = f.bit_count() - 1
            counts[d] = counts.get(d, 0) + 1
        return dict(sorted(counts.items()))

    def facets(self) -> list[int]:
        full = (1 << self.ground) - 1
        faces = self.faces
        out = []
        for f in faces:
            if not any(f | (1 << b) in faces for b in bits(full & ~f)):
                out.append(f)
        return sorted(out, key=lambda f: (f.bit_count(), f))

    def is_subcomplex_of(self, other: "SimplicialComplex") -> bool:
        return self.faces <= other.faces

    def to_json(self) -> dict:
        return {"ground": self.ground, "facets": [bits(f) for f in self.facets()]}

    @classmethod
    def from_json(cls, payload: dict | str) -> "SimplicialComplex":
        if isinstance(payload, str):
            payload = json.loads(payload)
        return complex_from_faces(payload["ground"], [mask_of(f) for f in payload["facets"]])


def full_simplex(m: int) -> SimplicialComplex:
    return SimplicialComplex(m, frozenset(range(1 << m)))


def void_complex(m: int) -> SimplicialComplex:
    return SimplicialComplex(m, frozenset())


def complex_from_faces(m: int, faces: Iterable[int]) -> SimplicialComplex:
    """Downward closure of ``faces`` on the ground set {0..m-1}."""
    limit = 1 << m
    closed: set[int] = set()
    stack = []
    for f in faces:
        if f < 0 or f >= limit:
            raise ValueError(f"face {bits(f)} outside ground set of size {m}")
        stack.append(f)
    while stack:
        f = stack.pop()
        if f in closed:
            continue
        closed.add(f)
        rest = f
        while rest:
            low = rest & -rest
            rest ^= low
            if f ^ low not in closed:
                stack.append(f ^ low)
    return SimplicialComplex(m, frozenset(closed))


def reduced_euler_characteristic(k: SimplicialComplex) -> int:
    return sum(1 if f.bit_count() % 2 else -1 for f in k.faces)


def alexander_dual(k: SimplicialComplex) -> SimplicialComplex:
    """{σ : ground ∖ σ is not a face of k}."""
    full = (1 << k.ground) - 1
    faces = k.faces
    return SimplicialComplex(k.ground, frozenset(s for s in range(full + 1) if full ^ s not in faces))


# -- chain complex -------------------------------------------------------------

@dataclass(frozen=True)
class BoundaryMatrix:
    """Sparse matrix of ∂_k: k-faces (columns) to (k-1)-faces (rows).

    ``columns[j]`` maps row position to a coefficient in {-1, +1}.  For k = 0
    the single row is the empty face (augmentation).
    """

    k: int
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    columns: tuple[dict, ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * len(self.cols) for _ in self.rows]
        for j, col in enumerate(self.columns):
            for i, c in col.items():
                out[i][j] = c
        return out


def boundary_matrix(cx: SimplicialComplex, k: int, rows: list[int] | None = None,
                    cols: list[int] | None = None) -> BoundaryMatrix:
    """∂_k with faces oriented by ascending edge index."""
    if rows is None:
        rows = cx.faces_of_dim(k - 1)
    if cols is None:
        cols = cx.faces_of_dim(k)
    where = {f: i for i, f in enumerate(rows)}
    columns = []
    for f in cols:
        col = {}
        for pos, b in enumerate(bits(f)):
            col[where[f ^ (1 << b)]] = -1 if pos % 2 else 1
        columns.append(col)
    return BoundaryMatrix(k, tuple(rows), tuple(cols), tuple(columns))


def _compose(outer: BoundaryMatrix, inner: BoundaryMatrix) -> list[dict]:
    """Columns of outer ∘ inner, with zero entries dropped."""
    out = []
    for col in inner.columns:
        acc: dict[int, int] = {}
        for i, c in col.items():
            for r, d in outer.columns[i].items():
                acc[r] = acc.get(r, 0) + c * d
        out.append({r: v for r, v in acc.items() if v})
    return out


def boundary_squares_to_zero(cx: SimplicialComplex) -> bool:
    """Check ∂_{k-1} ∘ ∂_k = 0 for every k, augmentation included."""
    by_dim = _faces_by_dim(cx)
    top = max(by_dim, default=-1)
    mats = {k: boundary_matrix(cx, k, by_dim.get(k - 1, []), by_dim.get(k, [])) for k in range(0, top + 1)}
    for k in range(1, top + 1):
        if any(_compose(mats[k - 1], mats[k])):
            return False
    return True


def _faces_by_dim(cx: SimplicialComplex) -> dict[int, list[int]]:
    by_dim: dict[int, list[int]] = {}
    for f in cx.faces:
        by_dim.setdefault(f.bit_count() - 1, []).append(f)
    for faces in by_dim.values():
        faces.sort()
    return by_dim


def _reduce(columns, skip=frozenset()) -> tuple[int, set[int]]:
    """Exact column reduction over Q, fraction free.

    Returns the rank and the set of pivot rows.  Columns listed in ``skip``
    are known to reduce to zero and are not touched.
    """
    pivots: dict[int, dict] = {}
    for j, col in enumerate(columns):
        if j in skip or not col:
            continue
        col = dict(col)
        while col:
            low = max(col)
            other = pivots.get(low)
            if other is None:
                pivots[low] = col
                break
            a = other[low]
            b = col[low]
            merged = {}
            for r in col.keys() | other.keys():
                v = a * col.get(r, 0) - b * other.get(r, 0)
                if v:
                    merged[r] = v
            g = 0
            for v in merged.values():
                g = gcd(g, v)
                if g == 1:
                    break
            if g > 1:
                merged = {r: v // g for r, v in merged.items()}
            col = merged
    return len(pivots), set(pivots)


def boundary_ranks(cx: SimplicialComplex) -> dict[int, int]:
    """rank ∂_k over Q for k = 0..dim (rank ∂_0 is the augmentation rank)."""
    by_dim = _faces_by_dim(cx)
    top = max(by_dim, default=-1)
    ranks = {}
    cleared: set[int] = set()
    for k in range(top, -1, -1):
        mat = boundary_matrix(cx, k, by_dim.get(k - 1, []), by_dim[k])
        # a column whose face was a pivot one degree up is a cycle boundary and reduces to 0
        ranks[k], pivot_rows = _reduce(mat.columns, cleared)
        cleared = pivot_rows
    return ranks


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced Betti numbers b̃_k for k = -1 .. ground-2."""

    ground: int
    betti: dict

    def __getitem__(self, k: int) -> int:
        return self.betti.get(k, 0)

    def nonzero(self) -> dict[int, int]:
        return {k: b for k, b in self.betti.items() if b}

    def euler(self) -> int:
        return sum((-1) ** k * b for k, b in self.betti.items())

    def to_json(self) -> dict:
        return {str(k): b for k, b in self.betti.items()}


def reduced_betti(cx: SimplicialComplex, max_faces: int = DEFAULT_MAX_FACES) -> HomologyProfile:
    if len(cx.faces) > max_faces:
        raise FaceCapError(f"{len(cx.faces)} faces exceeds the homology cap of {max_faces}")
    counts = cx.f_vector()
    ranks = boundary_ranks(cx)
    degrees = range(-1, max(cx.ground - 1, 0))
    betti = {}
    for k in degrees:
        kernel = counts.get(k, 0) - ranks.get(k, 0)
        betti[k] = kernel - ranks.get(k + 1, 0)
    return HomologyProfile(cx.ground, betti)
