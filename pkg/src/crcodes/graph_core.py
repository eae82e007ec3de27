"""Cayley graphs on F_q^k: syndrome graphs, Hamming graphs, spectra, SRG tests."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple

import numpy as np

from .gf_space import (
    DEFAULT_BUDGET,
    CheckMatrix,
    Word,
    check_budget,
    check_field,
    digit_table,
    indices_of,
    place_values,
    rank_mod,
    syndrome_indices,
)

#: Dense adjacency matrices are only built up to this many vertices.
DENSE_LIMIT = 4096


@dataclass(frozen=True)
class ConnectingSet:
    """Nonzero, negation-closed subset of F_q^k, stored as word indices."""

    q: int
    k: int
    elements: frozenset[int]

    def __post_init__(self):
        check_field(self.q)
        object.__setattr__(self, "elements", frozenset(int(e) for e in self.elements))
        size = self.q**self.k
        if any(not 0 < e < size for e in self.elements):
            raise ValueError("connecting set elements must be nonzero words of F_q^k")
        missing = [e for e in self.elements if self._negate(e) not in self.elements]
        if missing:
            raise ValueError(f"connecting set is not closed under negation (e.g. {self.word(missing[0])})")

    def _negate(self, e: int) -> int:
        digits = Word.from_index(e, self.q, self.k).entries
        return int(indices_of(np.array([[(-d) % self.q for d in digits]]), self.q)[0])

    @classmethod
    def from_words(cls, words: Iterable[Word], q: int, k: int) -> "ConnectingSet":
        return cls(q, k, frozenset(w.index for w in words))

    @property
    def degree(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def sorted(self) -> list[int]:
        return sorted(self.elements)

    def word(self, e: int) -> Word:
        return Word.from_index(e, self.q, self.k)

    def words(self) -> list[Word]:
        return [self.word(e) for e in self.sorted()]

    def digits(self) -> np.ndarray:
        if not self.elements:
            return np.zeros((0, self.k), dtype=np.int8)
        return np.array([self.word(e).entries for e in self.sorted()], dtype=np.int8)


def connecting_set_of(H: CheckMatrix) -> ConnectingSet:
    """All nonzero multiples of the columns of H."""
    cols = H.array.T.astype(np.int64)
    multiples = np.concatenate([(a * cols) % H.q for a in range(1, H.q)])
    elems = frozenset(int(i) for i in indices_of(multiples, H.q))
    if len(elems) != (H.q - 1) * H.n:
        raise ValueError("check matrix has collinear columns")
    return ConnectingSet(H.q, H.k, elems)


class Graph:
    """Cayley graph Cay(F_q^m, S); Hamming graphs are the case S = {a e_i}.

    Neighbors are generated from S, so only graphs with at most
    ``DENSE_LIMIT`` vertices ever get a dense adjacency matrix.
    """

    def __init__(self, S: ConnectingSet, kind: str = "cayley", name: str | None = None):
        self.S = S
        self.q = S.q
        self.dim = S.k
        self.kind = kind
        self.name = name or f"Cay(F_{S.q}^{S.k}, |S|={S.degree})"
        self._shifts = []
        w = place_values(self.q, self.dim)
        for row in S.digits():
            pos = np.flatnonzero(row)
            self._shifts.append((w[pos], row[pos].astype(np.int64)))

    def __repr__(self) -> str:
        return f"Graph({self.name}, v={self.order}, degree={self.degree})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.S == other.S

    def __hash__(self) -> int:
        return hash(self.S)

    @property
    def order(self) -> int:
        return self.q**self.dim

    @property
    def degree(self) -> int:
        return self.S.degree

    def translate(self, vertices: np.ndarray, j: int) -> np.ndarray:
        """Indices of ``vertices + s_j`` for the j-th connecting element."""
        weights, values = self._shifts[j]
        v = np.asarray(vertices, dtype=np.int64)
        out = v.copy()
        for wt, val in zip(weights, values):
            d = (v // wt) % self.q
            out += (((d + val) % self.q) - d) * wt
        return out

    def neighbor_shifts(self, vertices: np.ndarray) -> Iterator[np.ndarray]:
        for j in range(self.degree):
            yield self.translate(vertices, j)

    def neighbors(self, v: int) -> list[int]:
        arr = np.array([v])
        return sorted(int(self.translate(arr, j)[0]) for j in range(self.degree))

    def all_vertices(self, budget: int = DEFAULT_BUDGET) -> np.ndarray:
        check_budget(self.q, self.dim, budget)
        return np.arange(self.order, dtype=np.int64)

    @cached_property
    def neighbor_table(self) -> np.ndarray:
        """(v x degree) array of neighbor indices."""
        if self.order * max(self.degree, 1) > 2**25:
            raise MemoryError(f"neighbor table of {self!r} is too large; iterate neighbor_shifts instead")
        verts = self.all_vertices()
        table = np.empty((self.order, self.degree), dtype=np.int32)
        for j in range(self.degree):
            table[:, j] = self.translate(verts, j)
        table.setflags(write=False)
        return table

    def adjacency_matrix(self) -> np.ndarray:
        if self.order > DENSE_LIMIT:
            raise MemoryError(f"{self!r} is too large for a dense adjacency matrix")
        a = np.zeros((self.order, self.order), dtype=np.int8)
        rows = np.repeat(np.arange(self.order), self.degree)
        a[rows, self.neighbor_table.ravel()] = 1
        return a


def syndrome_graph(H: CheckMatrix) -> Graph:
    return Graph(connecting_set_of(H), "cayley", f"G(H) over F_{H.q}^{H.k}, n={H.n}")


def hamming_graph(n: int, q: int) -> Graph:
    g = syndrome_graph(CheckMatrix.identity(n, q))
    g.kind = "hamming"
    g.name = f"H({n},{q})"
    return g


def complement(g: Graph) -> Graph:
    everything = frozenset(range(1, g.order))
    S = ConnectingSet(g.q, g.dim, everything - g.S.elements)
    return Graph(S, "cayley", f"complement of {g.name}")


class Spectrum(tuple):
    """Tuple of (eigenvalue, multiplicity) pairs sorted by decreasing eigenvalue."""

    @classmethod
    def from_counts(cls, counts) -> "Spectrum":
        return cls(sorted(((int(e), int(m)) for e, m in dict(counts).items()), reverse=True))

    @classmethod
    def parse(cls, text: str) -> "Spectrum":
        counts = {}
        for item in text.strip().strip("{}").split(","):
            e, _, m = item.strip().replace("−", "-").partition("^")
            counts[int(e)] = int(m or 1)
        return cls.from_counts(counts)

    @property
    def eigenvalues(self) -> list[int]:
        return [e for e, _ in self]

    def multiplicity(self, eigenvalue: int) -> int:
        return dict(self).get(eigenvalue, 0)

    def total(self) -> int:
        return sum(m for _, m in self)

    def __str__(self) -> str:
        return "{" + ",".join(f"{e}^{m}" for e, m in self) + "}"


def spectrum(S: ConnectingSet | Graph) -> Spectrum:
    """Eigenvalues from character sums: lambda_v = #{s: <v,s>=0} - #{s: <v,s>=1}.

    For q = 3 the negation closure of S makes the counts for pairing values
    1 and 2 equal, so the real part of the character sum is N0 - N1.
    """
    if isinstance(S, Graph):
        S = S.S
    verts = digit_table(S.q, S.k).astype(np.int64)
    pair = (verts @ S.digits().T.astype(np.int64)) % S.q
    eig = (pair == 0).sum(axis=1) - (pair == 1).sum(axis=1)
    return Spectrum.from_counts(Counter(eig.tolist()))


class SrgParams(NamedTuple):
    v: int
    k: int
    lam: int
    mu: int

    def __str__(self) -> str:
        return f"SRG({self.v},{self.k},{self.lam},{self.mu})"


def srg_parameters(g: Graph) -> SrgParams | None:
    """(v, k, lambda, mu) if g is strongly regular, else None.

    Cayley graphs are vertex-transitive, so the pairs (0, x) cover all
    cases: x and 0 have |S & (x + S)| common neighbours.
    """
    ind = np.zeros(g.order, dtype=np.int64)
    ind[list(g.S.elements)] = 1
    common = ind[g.neighbor_table].sum(axis=1)
    adjacent = ind.astype(bool)
    other = ~adjacent
    other[0] = False
    if not adjacent.any() or not other.any():
        return None
    lam = np.unique(common[adjacent])
    mu = np.unique(common[other])
    if len(lam) != 1 or len(mu) != 1:
        return None
    return SrgParams(g.order, g.degree, int(lam[0]), int(mu[0]))


def is_connected(S: ConnectingSet | Graph) -> bool:
    if isinstance(S, Graph):
        S = S.S
    if not S.elements:
        return S.k == 0
    return rank_mod(S.digits(), S.q) == S.k


class CoveringReport(NamedTuple):
    ok: bool
    checked: int
    exhaustive: bool
    violation: tuple[int, list[int], list[int]] | None = None

    def __str__(self) -> str:
        mode = "exhaustive" if self.exhaustive else "sampled"
        if self.ok:
            return f"covering confirmed ({mode}, {self.checked} vertices)"
        x, got, want = self.violation
        return f"covering fails at vertex {x}: images {got} != neighbours {want}"


def verify_covering(
    H: CheckMatrix,
    exhaustive: bool = True,
    samples: int = 100_000,
    seed: int = 0,
    budget: int = DEFAULT_BUDGET,
) -> CoveringReport:
    """Check that the syndrome map H(n,q) -> G(H) is locally bijective."""
    g = syndrome_graph(H)
    q, n = H.q, H.n
    if exhaustive and q**n <= budget:
        words = digit_table(q, n, budget)
        done_all = True
    else:
        rng = np.random.default_rng(seed)
        words = rng.integers(0, q, size=(samples, n), dtype=np.int8)
        done_all = False
    base = syndrome_indices(H, words)
    images = np.empty((len(words), (q - 1) * n), dtype=np.int64)
    col = 0
    for i in range(n):
        for a in range(1, q):
            moved = words.copy()
            moved[:, i] = (moved[:, i] + a) % q
            images[:, col] = syndrome_indices(H, moved)
            col += 1
    images.sort(axis=1)
    expected = np.empty_like(images)
    for j in range(g.degree):
        expected[:, j] = g.translate(base, j)
    expected.sort(axis=1)
    bad = np.flatnonzero((images != expected).any(axis=1))
    if len(bad):
        r = int(bad[0])
        x = int(indices_of(words[r : r + 1], q)[0])
        return CoveringReport(False, len(words), done_all, (x, images[r].tolist(), expected[r].tolist()))
    return CoveringReport(True, len(words), done_all)
