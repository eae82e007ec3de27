"""Isomorph-free enumeration of projective point sets, i.e. Cayley graphs G(H).

Two check matrices give equivalent connecting sets iff their column sets
(as projective points) are related by an invertible linear map, so the
objects here are sets of points of PG(k-1, q) up to GL(k, q).

Canonical form: the lexicographically least sorted list of point indices
among the images g(S), where g runs over the maps sending an ordered
independent tuple of points of S (with scalars) to the standard basis.
Only tuples whose sequence of isomorphism invariants is lexicographically
least are tried, which keeps the search small without affecting
canonicity. Sets that do not span are put in the last r coordinates of
their span.

Enumeration: canonical augmentation. A set X = Y + {x} is kept iff x lies
in the automorphism orbit of the point that the canonical map sends to the
largest index among points whose removal keeps X spanning.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .gf_space import INV, CheckMatrix, check_field, digit_table, index_to_digits, place_values, rank_mod


@lru_cache(maxsize=None)
def projective_points(q: int, k: int) -> np.ndarray:
    """Indices of all normalized nonzero vectors of F_q^k (first nonzero entry 1), ascending."""
    digits = digit_table(q, k).astype(np.int64)
    nz = digits != 0
    first = np.where(nz.any(axis=1), digits[np.arange(len(digits)), nz.argmax(axis=1)], 0)
    idx = np.flatnonzero(first == 1)
    idx.setflags(write=False)
    return idx


def _normalize_columns(m: np.ndarray, q: int) -> np.ndarray:
    """Scale each column (last axis -2 holds coordinates) so its first nonzero entry is 1."""
    nz = m != 0
    lead = np.take_along_axis(m, nz.argmax(axis=-2)[..., None, :], axis=-2)
    inv = np.array(INV[q][1:], dtype=np.int64)
    scale = np.where(lead == 0, 0, inv[np.maximum(lead - 1, 0)])
    return (m * scale) % q


def _inverse_mod(a: np.ndarray, q: int) -> np.ndarray:
    """Inverse of an invertible square matrix over GF(q)."""
    r = a.shape[0]
    m = np.concatenate([a % q, np.eye(r, dtype=np.int64)], axis=1)
    for col in range(r):
        piv = col + int(np.flatnonzero(m[col:, col])[0])
        m[[col, piv]] = m[[piv, col]]
        m[col] = (m[col] * INV[q][m[col, col]]) % q
        for row in range(r):
            if row != col and m[row, col]:
                m[row] = (m[row] - m[row, col] * m[col]) % q
    return m[:, r:]


def _span_basis(digits: np.ndarray, q: int) -> tuple[np.ndarray, int]:
    """Invertible T with T @ span(digits^T) inside the last r coordinates, and r."""
    k = digits.shape[1]
    rows = []
    for v in digits:
        cand = rows + [v % q]
        if rank_mod(np.array(cand), q) == len(cand):
            rows.append(v % q)
    r = len(rows)
    # complete the basis with unit vectors
    basis = list(rows)
    for i in range(k):
        e = np.zeros(k, dtype=np.int64)
        e[i] = 1
        if rank_mod(np.array(basis + [e]), q) == len(basis) + 1:
            basis.append(e)
    # columns: complement first, then the span basis
    b = np.array(basis[r:] + basis[:r], dtype=np.int64).T
    return _inverse_mod(b, q), r


@dataclass(frozen=True)
class ProjectivePointSet:
    """A set of points of PG(k-1, q) stored as sorted indices of normalized vectors."""

    q: int
    k: int
    points: tuple[int, ...]

    def __post_init__(self):
        check_field(self.q)
        pts = tuple(sorted(int(p) for p in self.points))
        if len(set(pts)) != len(pts):
            raise ValueError("points must be distinct")
        valid = set(projective_points(self.q, self.k).tolist())
        bad = [p for p in pts if p not in valid]
        if bad:
            raise ValueError(f"{bad[0]} is not the index of a normalized nonzero vector")
        object.__setattr__(self, "points", pts)

    @classmethod
    def from_vectors(cls, vectors: Iterable[Sequence[int]], q: int, k: int) -> "ProjectivePointSet":
        arr = np.array([list(v) for v in vectors], dtype=np.int64).reshape(-1, k)
        if (arr % q == 0).all(axis=1).any():
            raise ValueError("the zero vector is not a projective point")
        normed = _normalize_columns((arr % q).T, q).T
        idx = normed @ place_values(q, k)
        if len(set(idx.tolist())) != len(idx):
            raise ValueError("two vectors are collinear")
        return cls(q, k, tuple(idx.tolist()))

    @classmethod
    def from_matrix(cls, H: CheckMatrix) -> "ProjectivePointSet":
        return cls.from_vectors(H.array.T.tolist(), H.q, H.k)

    @property
    def n(self) -> int:
        return len(self.points)

    def digits(self) -> np.ndarray:
        return np.array([index_to_digits(p, self.q, self.k) for p in self.points], dtype=np.int64).reshape(-1, self.k)

    @property
    def rank(self) -> int:
        return rank_mod(self.digits(), self.q) if self.points else 0

    @property
    def spanning(self) -> bool:
        return self.rank == self.k

    def to_matrix(self) -> CheckMatrix:
        return CheckMatrix(self.q, self.digits().T)

    def transform(self, g: np.ndarray) -> "ProjectivePointSet":
        return ProjectivePointSet.from_vectors(((np.asarray(g) @ self.digits().T) % self.q).T.tolist(), self.q, self.k)

    def __str__(self) -> str:
        return self.to_matrix().to_text()


@dataclass
class Canonical:
    """Canonical form of a spanning set plus the data needed for augmentation."""

    form: ProjectivePointSet
    labelling: dict[int, int]  # point of S -> its image in the canonical form
    automorphisms: list[np.ndarray] = field(default_factory=list)  # of the original set
    form_automorphisms: list[np.ndarray] = field(default_factory=list)  # of the canonical form

    def orbits(self, points: Iterable[int]) -> list[list[int]]:
        """Orbits of the automorphism group of the original set on the given points."""
        return point_orbits(self.automorphisms, points, self.form.q, self.form.k)

    def form_orbits(self, points: Iterable[int]) -> list[list[int]]:
        return point_orbits(self.form_automorphisms, points, self.form.q, self.form.k)


def point_orbits(group: list[np.ndarray], points: Iterable[int], q: int, k: int) -> list[list[int]]:
    points = sorted(int(p) for p in points)
    if not points:
        return []
    pos = {p: i for i, p in enumerate(points)}
    parent = list(range(len(points)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    vecs = np.array([index_to_digits(p, q, k) for p in points], dtype=np.int64).T
    w = place_values(q, k)
    for g in group:
        img = _normalize_columns((g @ vecs) % q, q).T @ w
        for i, j in enumerate(img.tolist()):
            if j in pos:
                a, b = find(i), find(pos[j])
                if a != b:
                    parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for i, p in enumerate(points):
        groups.setdefault(find(i), []).append(p)
    return sorted(groups.values())


@lru_cache(maxsize=None)
def _hyperplanes(q: int, r: int) -> np.ndarray:
    pts = projective_points(q, r)
    return digit_table(q, r).astype(np.int64)[pts]


def _point_colours(pts: np.ndarray, q: int, rounds: int = 2) -> np.ndarray:
    """Isomorphism-invariant colouring from point/hyperplane incidences, refined a few rounds."""
    n, r = pts.shape
    inc = (_hyperplanes(q, r) @ pts.T) % q == 0  # hyperplanes x points
    hcol = inc.sum(axis=1)
    pcol = np.zeros(n, dtype=np.int64)
    for _ in range(rounds):
        keys = [tuple(sorted(hcol[inc[:, p]].tolist())) + (pcol[p],) for p in range(n)]
        pcol = _rank_keys(keys)
        hkeys = [tuple(sorted(pcol[inc[h]].tolist())) + (hcol[h],) for h in range(len(inc))]
        hcol = _rank_keys(hkeys)
    return pcol


def _rank_keys(keys: list) -> np.ndarray:
    order = {key: i for i, key in enumerate(sorted(set(keys)))}
    return np.array([order[key] for key in keys], dtype=np.int64)


def _span_indices(vectors: list[np.ndarray], q: int, w: np.ndarray) -> set[int]:
    if not vectors:
        return {0}
    b = np.array(vectors, dtype=np.int64)
    coeffs = digit_table(q, len(vectors)).astype(np.int64)
    return set((((coeffs @ b) % q) @ w).tolist())


def _min_frames(pts: np.ndarray, q: int) -> list[tuple[int, ...]]:
    """Ordered independent tuples of point positions with the least invariant sequence."""
    n, r = pts.shape
    colours = _point_colours(pts, q)
    w = place_values(q, r)
    idx = (pts @ w).tolist()
    frames: list[tuple[int, ...]] = [()]
    for _ in range(r):
        best = None
        ext = []
        for f in frames:
            span_now = _span_indices([pts[i] for i in f], q, w)
            for p in range(n):
                if idx[p] in span_now:
                    continue
                new_span = _span_indices([pts[i] for i in f] + [pts[p]], q, w)
                key = (int(colours[p]), sum(1 for x in idx if x in new_span))
                if best is None or key < best:
                    best, ext = key, [f + (p,)]
                elif key == best:
                    ext.append(f + (p,))
        frames = ext
    return frames


def _canonical_spanning(pts: np.ndarray, q: int, want_group: bool) -> tuple[tuple[int, ...], list[tuple[np.ndarray, np.ndarray]]]:
    """Least image of a spanning set of F_q^r; returns (form, minimizers as (g, perm))."""
    n, r = pts.shape
    w = place_values(q, r)
    cols = pts.T % q
    combos = list(itertools.product(range(1, q), repeat=r - 1))
    scalars = np.array(combos, dtype=np.int64).reshape(len(combos), r - 1)
    scalars = np.concatenate([np.ones((len(scalars), 1), dtype=np.int64), scalars], axis=1)
    inv_tab = np.array([0] + list(INV[q][1:]), dtype=np.int64)
    best = None
    winners: list[tuple[np.ndarray, np.ndarray]] = []
    for frame in _min_frames(pts, q):
        b = cols[:, list(frame)]
        m = (_inverse_mod(b, q) @ cols) % q  # coordinates in the frame basis
        # g = diag(1/lambda) B^-1 for each scalar vector lambda
        scaled = (inv_tab[scalars][:, :, None] * m[None]) % q
        imgs = _normalize_columns(scaled, q)
        ids = np.einsum("sri,r->si", imgs, w)
        order = np.argsort(ids, axis=1)
        srt = np.take_along_axis(ids, order, axis=1)
        for s in range(len(scalars)):
            key = tuple(srt[s].tolist())
            if best is None or key < best:
                best, winners = key, []
            if key == best and (want_group or not winners):
                g = (inv_tab[scalars[s]][:, None] * _inverse_mod(b, q)) % q
                winners.append((g, ids[s]))
    return best, winners


def canonize(s: ProjectivePointSet, want_group: bool = True) -> Canonical:
    """Canonical form, canonical labelling and (optionally) the automorphism group."""
    q, k = s.q, s.k
    if not s.points:
        return Canonical(s, {}, [], [])
    digits = s.digits()
    t, r = _span_basis(digits, q)
    reduced = ((t @ digits.T) % q)[k - r :].T  # coordinates inside the span
    form, winners = _canonical_spanning(reduced, q, want_group)
    g0, ids0 = winners[0]
    labelling = {p: int(i) for p, i in zip(s.points, ids0.tolist())}
    autos, form_autos = [], []
    if want_group and r == k:
        # g0 @ t maps s onto the form; other minimizers differ by automorphisms
        g0_inv = _inverse_mod(g0, q)
        t_inv = _inverse_mod(t, q)
        for g, _ in winners:
            form_autos.append((g @ g0_inv) % q)
            autos.append((t_inv @ g0_inv @ g @ t) % q)
    return Canonical(ProjectivePointSet(q, k, form), labelling, autos, form_autos)


def canonical_form(s: ProjectivePointSet) -> ProjectivePointSet:
    return canonize(s, want_group=False).form


def equivalent(a: ProjectivePointSet, b: ProjectivePointSet) -> bool:
    return (a.q, a.k, a.n) == (b.q, b.k, b.n) and canonical_form(a) == canonical_form(b)


def automorphism_group_order(s: ProjectivePointSet) -> int:
    """Order of the group of linear maps fixing s, modulo scalars (spanning sets only)."""
    return len(canonize(s).automorphisms)


def _basis_set(q: int, k: int) -> ProjectivePointSet:
    return ProjectivePointSet(q, k, tuple(q**i for i in range(k)))


def _accept(child: ProjectivePointSet, added: int) -> tuple[bool, Canonical]:
    can = canonize(child)
    removable = [p for p in child.points if ProjectivePointSet(child.q, child.k, tuple(x for x in child.points if x != p)).spanning]
    designated = max(removable, key=lambda p: can.labelling[p])
    if designated == added:
        return True, can
    for orbit in can.orbits(child.points):
        if added in orbit:
            return designated in orbit, can
    raise AssertionError("added point is not in the set")


def _spanning_classes(q: int, k: int, n: int, progress=None) -> list[Canonical]:
    total = len(projective_points(q, k))
    if n < k or n > total:
        return []
    level = [canonize(_basis_set(q, k))]
    all_points = projective_points(q, k).tolist()
    for size in range(k, n):
        nxt = []
        for parent in level:
            outside = [p for p in all_points if p not in set(parent.form.points)]
            for orbit in parent.form_orbits(outside):
                x = orbit[0]
                child = ProjectivePointSet(q, k, parent.form.points + (x,))
                ok, can = _accept(child, x)
                if ok:
                    nxt.append(can)
        level = nxt
        if progress:
            progress(size + 1, len(level))
    return level


def enumerate_graphs(q: int, k: int, n: int, connected_only: bool = True, progress=None) -> list[ProjectivePointSet]:
    """One canonical point set per equivalence class of n-point sets in PG(k-1, q).

    With ``connected_only`` only spanning sets (connected Cayley graphs) are
    returned; otherwise sets of every rank, embedded in the last coordinates.
    """
    check_field(q)
    if q**k > 3**5:
        raise ValueError("enumeration is limited to q^k <= 243")
    if n < 0:
        raise ValueError("n must be nonnegative")
    ranks = [k] if connected_only else range(0 if n == 0 else 1, k + 1)
    out = []
    for r in ranks:
        for can in _spanning_classes(q, r, n, progress if r == k else None) if r else []:
            out.append(ProjectivePointSet(q, k, can.form.points))
        if r == 0 and n == 0:
            out.append(ProjectivePointSet(q, k, ()))
    return sorted(out, key=lambda s: s.points)
