"""Distance partitions, equitable partitions and completely regular codes."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .gf_space import Word, indices_of
from .graph_core import Graph


class QuotientMatrix(tuple):
    """Square matrix of neighbour counts, stored as a tuple of row tuples."""

    def __new__(cls, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("quotient matrix must be square")
        return super().__new__(cls, rows)

    @classmethod
    def parse(cls, text: str) -> "QuotientMatrix":
        """Accepts ``((4,10),(8,6))``, ``[[4,10],[8,6]]`` or ``4,10/8,6``."""
        text = text.strip()
        if "/" in text:
            chunks = text.split("/")
        else:
            inner = text.strip()[1:-1] if text[:1] in "([" else text
            chunks = re.findall(r"[\(\[]([^\)\]]*)[\)\]]", inner)
        return cls([int(x) for x in re.split(r"[,\s]+", ch.strip()) if x] for ch in chunks)

    @property
    def size(self) -> int:
        return len(self)

    def array(self) -> np.ndarray:
        return np.array(self, dtype=np.int64)

    def row_sums(self) -> list[int]:
        return [sum(r) for r in self]

    def is_tridiagonal(self) -> bool:
        return all(self[i][j] == 0 for i in range(self.size) for j in range(self.size) if abs(i - j) > 1)

    def is_cr_shape(self) -> bool:
        """Tridiagonal with positive sub- and superdiagonal: the shape of a distance partition."""
        return self.is_tridiagonal() and all(
            self[i][i + 1] > 0 and self[i + 1][i] > 0 for i in range(self.size - 1)
        )

    def intersection_array(self) -> "IntersectionArray":
        if not self.is_cr_shape():
            raise ValueError(f"{self} is not the quotient matrix of a distance partition")
        r = self.size - 1
        return IntersectionArray(tuple(self[i][i + 1] for i in range(r)), tuple(self[i + 1][i] for i in range(r)))

    def scaled(self, s: int) -> "QuotientMatrix":
        return QuotientMatrix([[s * x for x in row] for row in self])

    def shifted(self, t: int) -> "QuotientMatrix":
        return QuotientMatrix([[x + (t if i == j else 0) for j, x in enumerate(row)] for i, row in enumerate(self)])

    def __str__(self) -> str:
        return "(" + ",".join("(" + ",".join(map(str, r)) + ")" for r in self) + ")"

    def pretty(self) -> str:
        width = max(len(str(x)) for r in self for x in r)
        return "\n".join(" ".join(str(x).rjust(width) for x in r) for r in self)


@dataclass(frozen=True)
class IntersectionArray:
    """{b_0,...,b_{rho-1}; c_1,...,c_rho}."""

    b: tuple[int, ...]
    c: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        object.__setattr__(self, "c", tuple(int(x) for x in self.c))
        if len(self.b) != len(self.c):
            raise ValueError("b and c must have the same length")
        if any(x <= 0 for x in self.b + self.c):
            raise ValueError("intersection array entries must be positive")

    @property
    def rho(self) -> int:
        return len(self.b)

    @classmethod
    def parse(cls, text: str) -> "IntersectionArray":
        """``{21,4;2,21}``; the two-entry form ``{10,8}`` means ``{10;8}``."""
        body = text.strip().strip("{}").replace(" ", "")
        if not body:
            return cls((), ())
        if ";" in body:
            left, right = body.split(";")
        else:
            parts = body.split(",")
            if len(parts) != 2:
                raise ValueError(f"cannot parse intersection array {text!r}")
            left, right = parts
        b = tuple(int(x) for x in left.split(",") if x)
        c = tuple(int(x) for x in right.split(",") if x)
        return cls(b, c)

    def quotient(self, degree: int) -> QuotientMatrix:
        r = self.rho
        rows = []
        for i in range(r + 1):
            row = [0] * (r + 1)
            bi = self.b[i] if i < r else 0
            ci = self.c[i - 1] if i > 0 else 0
            if i < r:
                row[i + 1] = bi
            if i > 0:
                row[i - 1] = ci
            row[i] = degree - bi - ci
            if row[i] < 0:
                raise ValueError(f"{self} does not fit degree {degree}")
            rows.append(row)
        return QuotientMatrix(rows)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.b)) + ";" + ",".join(map(str, self.c)) + "}"


class Code:
    """An explicit vertex set of a graph, kept as sorted unique indices."""

    def __init__(self, graph: Graph, vertices: Iterable[int]):
        v = np.unique(np.asarray(list(vertices) if not isinstance(vertices, np.ndarray) else vertices, dtype=np.int64))
        if v.size and (v[0] < 0 or v[-1] >= graph.order):
            raise ValueError("code vertices out of range")
        self.graph = graph
        self.vertices = v

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(int(x) for x in self.vertices)

    def __repr__(self) -> str:
        return f"Code({len(self)} vertices of {self.graph.name})"

    def mask(self) -> np.ndarray:
        m = np.zeros(self.graph.order, dtype=bool)
        m[self.vertices] = True
        return m

    def words(self) -> list[Word]:
        return [Word.from_index(int(v), self.graph.q, self.graph.dim) for v in self.vertices]

    @classmethod
    def from_words(cls, graph: Graph, words: Iterable[Word | str]) -> "Code":
        idx = []
        for w in words:
            if isinstance(w, str):
                w = Word.parse(w, graph.q)
            if len(w) != graph.dim or w.q != graph.q:
                raise ValueError(f"word {w} does not live in {graph.name}")
            idx.append(w.index)
        return cls(graph, idx)

    @classmethod
    def from_text(cls, graph: Graph, text: str) -> "Code":
        words = []
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if line:
                words.append(Word.parse(line, graph.q))
        if not words:
            raise ValueError("code file contains no words")
        return cls.from_words(graph, words)

    def to_text(self) -> str:
        head = f"# q={self.graph.q} k={self.graph.dim}\n"
        return head + "".join(f"{w}\n" for w in self.words())


@dataclass(frozen=True, eq=False)
class DistancePartition:
    distances: np.ndarray

    @property
    def rho(self) -> int:
        return int(self.distances.max())

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(int(x) for x in np.bincount(self.distances, minlength=self.rho + 1))

    @property
    def cells(self) -> list[np.ndarray]:
        return [np.flatnonzero(self.distances == i) for i in range(self.rho + 1)]


def distance_partition(g: Graph, code: Code) -> DistancePartition:
    """BFS layers from the code."""
    if len(code) == 0:
        raise ValueError("the code is empty")
    dist = np.full(g.order, -1, dtype=np.int16)
    dist[code.vertices] = 0
    frontier = code.vertices
    level = 0
    while frontier.size:
        level += 1
        reached = []
        for nb in g.neighbor_shifts(frontier):
            fresh = nb[dist[nb] < 0]
            dist[fresh] = level
            reached.append(fresh)
        frontier = np.unique(np.concatenate(reached)) if reached else np.empty(0, dtype=np.int64)
    if (dist < 0).any():
        # disconnected ambient graph: unreachable vertices are not covered
        raise ValueError("the code does not reach every vertex (disconnected graph)")
    return DistancePartition(dist.astype(np.int8))


def neighbor_counts(g: Graph, labels: np.ndarray, t: int) -> np.ndarray:
    """(v x t) array: number of neighbours of each vertex in each cell."""
    verts = np.arange(g.order, dtype=np.int64)
    counts = np.zeros((g.order, t), dtype=np.int32)
    for nb in g.neighbor_shifts(verts):
        counts[verts, labels[nb]] += 1
    return counts


class QuotientCheck(NamedTuple):
    """Result of an equitability scan; ``witness`` is (vertex, counts, expected counts)."""

    quotient: QuotientMatrix | None
    witness: tuple[int, list[int], list[int]] | None = None

    def __bool__(self) -> bool:
        return self.quotient is not None


def _as_labels(g: Graph, partition) -> tuple[np.ndarray, int]:
    if isinstance(partition, np.ndarray) and partition.ndim == 1 and partition.size == g.order:
        labels = partition.astype(np.int64)
        t = int(labels.max()) + 1
        if labels.min() < 0 or len(np.unique(labels)) != t:
            raise ValueError("labels must use every cell index 0..t-1")
        return labels, t
    labels = np.full(g.order, -1, dtype=np.int64)
    cells = list(partition)
    for i, cell in enumerate(cells):
        cell = np.asarray(list(cell) if not isinstance(cell, np.ndarray) else cell, dtype=np.int64)
        if cell.size == 0:
            raise ValueError(f"cell {i} is empty")
        if (labels[cell] >= 0).any():
            raise ValueError("cells overlap: not a partition")
        labels[cell] = i
    if (labels < 0).any():
        raise ValueError("cells do not cover the vertex set: not a partition")
    return labels, len(cells)


def quotient_of(g: Graph, partition) -> QuotientCheck:
    """Quotient matrix of an ordered partition if it is equitable.

    ``partition`` is a sequence of cells (vertex index collections) or a
    label array. On failure the first vertex whose neighbour counts differ
    from the first vertex of its cell is returned as witness.
    """
    labels, t = _as_labels(g, partition)
    counts = neighbor_counts(g, labels, t)
    first = np.array([np.argmax(labels == i) for i in range(t)])
    expected = counts[first[labels]]
    bad = np.flatnonzero((counts != expected).any(axis=1))
    if bad.size:
        v = int(bad[0])
        return QuotientCheck(None, (v, counts[v].tolist(), expected[v].tolist()))
    return QuotientCheck(QuotientMatrix(counts[first].tolist()))


@dataclass(frozen=True, eq=False)
class EquitablePartition:
    graph: Graph
    labels: np.ndarray
    quotient: QuotientMatrix

    @property
    def cells(self) -> list[np.ndarray]:
        return [np.flatnonzero(self.labels == i) for i in range(self.quotient.size)]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(int(x) for x in np.bincount(self.labels, minlength=self.quotient.size))


@dataclass(frozen=True, eq=False)
class CRResult:
    array: IntersectionArray
    quotient: QuotientMatrix
    rho: int
    partition: DistancePartition

    def __str__(self) -> str:
        return f"{self.array}\n{self.quotient.pretty()}"


def check_cr_identities(q: QuotientMatrix, sizes: Sequence[int], degree: int) -> None:
    """Row sums, tridiagonality and edge double counting between layers."""
    assert all(s == degree for s in q.row_sums()), f"row sums of {q} differ from degree {degree}"
    assert q.is_tridiagonal(), f"{q} is not tridiagonal"
    for i in range(q.size - 1):
        assert sizes[i] * q[i][i + 1] == sizes[i + 1] * q[i + 1][i], f"edge count mismatch between layers {i} and {i + 1}"


def verify_cr(g: Graph, code: Code, expect: IntersectionArray | None = None) -> CRResult | None:
    """Intersection array and quotient matrix if the code is completely regular.

    A given ``expect`` array is only used to check the covering radius: an
    array of the wrong length is an error rather than a mismatch.
    """
    part = distance_partition(g, code)
    if expect is not None and expect.rho != part.rho:
        raise ValueError(f"expected covering radius {expect.rho} but the code has covering radius {part.rho}")
    check = quotient_of(g, part.distances)
    if not check:
        return None
    q = check.quotient
    check_cr_identities(q, part.sizes, g.degree)
    array = q.intersection_array() if q.size > 1 else IntersectionArray((), ())
    return CRResult(array, q, part.rho, part)


def is_independent(g: Graph, code: Code) -> bool:
    mask = code.mask()
    return not any(mask[nb].any() for nb in g.neighbor_shifts(code.vertices))


class Component(NamedTuple):
    size: int
    is_cycle: bool
    is_clique: bool


def induced_components(g: Graph, code: Code) -> list[Component]:
    """Connected components of the subgraph induced on the code, largest first."""
    members = {int(v): i for i, v in enumerate(code.vertices)}
    adj: list[list[int]] = [[] for _ in members]
    for nb in g.neighbor_shifts(code.vertices):
        for i, w in enumerate(nb.tolist()):
            j = members.get(w)
            if j is not None:
                adj[i].append(j)
    seen = [False] * len(adj)
    comps = []
    for start in range(len(adj)):
        if seen[start]:
            continue
        seen[start] = True
        stack, comp = [start], []
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        size = len(comp)
        degs = [len(adj[u]) for u in comp]
        comps.append(Component(size, size >= 3 and all(d == 2 for d in degs), all(d == size - 1 for d in degs)))
    return sorted(comps, key=lambda c: (-c.size, c.is_cycle, c.is_clique))


def component_summary(comps: Sequence[Component]) -> str:
    parts = []
    for (size, cyc, cli), m in sorted(Counter(comps).items(), key=lambda kv: -kv[0][0]):
        shape = "cycle" if cyc else "clique" if cli else "component"
        parts.append(f"{m}x{shape}({size})")
    return ", ".join(parts)


def code_from_indices(graph: Graph, digits: np.ndarray) -> Code:
    return Code(graph, indices_of(digits, graph.q))
