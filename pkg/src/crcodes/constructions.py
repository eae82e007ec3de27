"""Recursive constructions of equitable partitions of Hamming graphs.

Every construction produces a ``RulePartition``: a function from words of
F_q^n to cell labels, together with the quotient matrix and cell sizes it
should have. Nothing is materialized until it is verified, so partitions
of H(25,3) exist as objects and can be checked by sampling.

Operations: lift a partition of a syndrome graph G(H) along the covering
x -> Hx, append t ignored coordinates, inflate s-fold (cells defined by
the sum of s blocks), and the splitting construction (inflate q-fold,
split cell 0 by a weighted block sum, append c - a coordinates each
shifting the subcell index, merge subcells).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .cr_engine import Code, EquitablePartition, IntersectionArray, QuotientMatrix, distance_partition, quotient_of
from .gf_space import (
    DEFAULT_BUDGET,
    CheckMatrix,
    check_field,
    digit_table,
    syndrome_indices,
)
from .graph_core import hamming_graph, syndrome_graph

DEFAULT_SAMPLES = 10**6
_CHUNK = 1 << 16


class RulePartition:
    """Base class: a labelled partition of H(n, q) given by a membership rule."""

    q: int
    n: int
    quotient: QuotientMatrix
    sizes: tuple[int, ...]

    def labels(self, words: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def rule_lines(self) -> list[str]:
        raise NotImplementedError

    @property
    def cells(self) -> int:
        return self.quotient.size

    @property
    def degree(self) -> int:
        return (self.q - 1) * self.n

    def label_of(self, word: Sequence[int]) -> int:
        return int(self.labels(np.array([word], dtype=np.int8))[0])

    def to_text(self) -> str:
        head = f"# equitable partition of H({self.n},{self.q}), {self.cells} cells, quotient {self.quotient}"
        return "\n".join([head] + self.rule_lines()) + "\n"

    def __repr__(self) -> str:
        return f"{type(self).__name__}(H({self.n},{self.q}), quotient={self.quotient})"


def _labels_text(labels: np.ndarray) -> str:
    return "".join(str(int(x)) for x in labels) if labels.max() < 10 else ",".join(str(int(x)) for x in labels)


class Lifted(RulePartition):
    """Preimage of a partition of G(H) under the syndrome map x -> Hx."""

    def __init__(self, H: CheckMatrix, cell_labels: np.ndarray, quotient: QuotientMatrix):
        cell_labels = np.asarray(cell_labels, dtype=np.int64)
        if cell_labels.shape != (H.q**H.k,):
            raise ValueError(f"need one label per vertex of F_{H.q}^{H.k}")
        self.H = H
        self.q, self.n = H.q, H.n
        self.cell_labels = cell_labels
        self.quotient = quotient
        base = np.bincount(cell_labels, minlength=quotient.size)
        self.sizes = tuple(int(x) * self.q ** (H.n - H.k) for x in base)

    def labels(self, words: np.ndarray) -> np.ndarray:
        return self.cell_labels[syndrome_indices(self.H, words)]

    def rule_lines(self) -> list[str]:
        rows = ",".join("".join(map(str, r)) for r in self.H.array.tolist())
        return [f"lift q={self.q} H={rows} labels={_labels_text(self.cell_labels)} quotient={self.quotient}"]


class Explicit(Lifted):
    """A partition of H(n, q) given by a label per vertex (the lift along H = I)."""

    def __init__(self, q: int, n: int, cell_labels: np.ndarray, quotient: QuotientMatrix):
        super().__init__(CheckMatrix.identity(n, q), cell_labels, quotient)

    def rule_lines(self) -> list[str]:
        return [f"explicit q={self.q} n={self.n} labels={_labels_text(self.cell_labels)} quotient={self.quotient}"]


class Extended(RulePartition):
    """Same cells on the first n coordinates; t new coordinates are ignored."""

    def __init__(self, base: RulePartition, t: int):
        if t < 0:
            raise ValueError("t must be nonnegative")
        self.base, self.t = base, t
        self.q, self.n = base.q, base.n + t
        extra = t * (base.q - 1)
        self.quotient = QuotientMatrix(
            [[x + (extra if i == j else 0) for j, x in enumerate(row)] for i, row in enumerate(base.quotient)]
        )
        self.sizes = tuple(s * base.q**t for s in base.sizes)

    def labels(self, words):
        return self.base.labels(words[:, : self.base.n])

    def rule_lines(self):
        return self.base.rule_lines() + [f"extend t={self.t}"]


class Inflated(RulePartition):
    """(x_0, ..., x_{s-1}) lies in cell i iff x_0 + ... + x_{s-1} does."""

    def __init__(self, base: RulePartition, s: int):
        if s < 1:
            raise ValueError("s must be positive")
        self.base, self.s = base, s
        self.q, self.n = base.q, base.n * s
        self.quotient = QuotientMatrix([[s * x for x in row] for row in base.quotient])
        self.sizes = tuple(x * base.q ** ((s - 1) * base.n) for x in base.sizes)

    def block_sum(self, words: np.ndarray) -> np.ndarray:
        m = self.base.n
        total = np.zeros((len(words), m), dtype=np.int64)
        for j in range(self.s):
            total += words[:, j * m : (j + 1) * m]
        return (total % self.q).astype(np.int8)

    def labels(self, words):
        return self.base.labels(self.block_sum(words))

    def rule_lines(self):
        return self.base.rule_lines() + [f"inflate s={self.s}"]


def _two_cell(base: RulePartition) -> tuple[int, int, int, int]:
    if base.cells != 2:
        raise ValueError("the splitting construction needs a 2-cell partition")
    (a, b), (c, d) = base.quotient
    return a, b, c, d


class AlphaSplit(RulePartition):
    """q-fold inflation with cell 0 split into q subcells by sum_j j*|y_j| mod q.

    |y_j| is the coordinate sum of block j. Labels 0..q-1 are the subcells
    of cell 0 and label q is the inflated cell 1.
    """

    def __init__(self, base: RulePartition):
        a, b, c, d = _two_cell(base)
        self.base = base
        self.inflated = Inflated(base, base.q)
        q = self.q = base.q
        self.n = self.inflated.n
        self.quotient = QuotientMatrix([[a] * q + [q * b]] * q + [[c] * q + [q * d]])
        s0, s1 = self.inflated.sizes
        if s0 % q:
            raise ValueError("cell 0 cannot split evenly")
        self.sizes = (s0 // q,) * q + (s1,)

    def alpha(self, words: np.ndarray) -> np.ndarray:
        m = self.base.n
        blocks = words.reshape(len(words), self.q, m).astype(np.int64).sum(axis=2)
        return (blocks @ np.arange(self.q)) % self.q

    def labels(self, words):
        outer = self.inflated.labels(words)
        return np.where(outer == 0, self.alpha(words), self.q)

    def rule_lines(self):
        return self.base.rule_lines() + ["alpha-split"]


class DStep(RulePartition):
    """Append one coordinate y; subcell i becomes {(x, y): x in subcell i + y}."""

    def __init__(self, base: RulePartition):
        q = base.q
        if base.cells != q + 1:
            raise ValueError("a D-step needs q subcells and one further cell")
        self.base = base
        self.q, self.n = q, base.n + 1
        rows = [list(r) for r in base.quotient]
        for i in range(q):
            for j in range(q):
                if i != j:
                    rows[i][j] += 1
        rows[q][q] += q - 1
        self.quotient = QuotientMatrix(rows)
        self.sizes = tuple(s * q for s in base.sizes)

    def labels(self, words):
        inner = self.base.labels(words[:, :-1])
        y = words[:, -1].astype(np.int64)
        return np.where(inner < self.q, (inner - y) % self.q, inner)

    def rule_lines(self):
        return self.base.rule_lines() + ["d-step"]


class Merged(RulePartition):
    """Union of groups of cells; the groups become the new cells in order."""

    def __init__(self, base: RulePartition, groups: Sequence[Sequence[int]]):
        groups = [tuple(g) for g in groups]
        flat = sorted(x for g in groups for x in g)
        if flat != list(range(base.cells)) or any(not g for g in groups):
            raise ValueError("groups must partition the cells")
        self.base, self.groups = base, groups
        self.q, self.n = base.q, base.n
        self.map = np.empty(base.cells, dtype=np.int64)
        for gi, g in enumerate(groups):
            self.map[list(g)] = gi
        rows = []
        for g in groups:
            sums = {tuple(sum(base.quotient[i][j] for j in h) for h in groups) for i in g}
            if len(sums) != 1:
                raise ValueError(f"merging {groups} does not give an equitable partition")
            rows.append(list(sums.pop()))
        self.quotient = QuotientMatrix(rows)
        self.sizes = tuple(sum(base.sizes[i] for i in g) for g in groups)

    def labels(self, words):
        return self.map[self.base.labels(words)]

    def rule_lines(self):
        groups = "|".join(",".join(map(str, g)) for g in self.groups)
        return self.base.rule_lines() + [f"merge groups={groups}"]


# --- operations ---------------------------------------------------------------


def as_rule(p: RulePartition | EquitablePartition) -> RulePartition:
    """Turn an explicit equitable partition of a Hamming graph into a rule."""
    if isinstance(p, RulePartition):
        return p
    g = p.graph
    if g.kind != "hamming":
        raise ValueError("constructions act on partitions of Hamming graphs; use lift() for syndrome graphs")
    return Explicit(g.q, g.dim, p.labels, p.quotient)


def extend_t(p, t: int) -> Extended:
    return Extended(as_rule(p), t)


def inflate_s(p, s: int) -> Inflated:
    return Inflated(as_rule(p), s)


def split(p, i: int) -> Merged:
    """The splitting construction for a 2-cell [[a,b],[c,d]] partition with a <= c."""
    base = as_rule(p)
    a, b, c, d = _two_cell(base)
    q = base.q
    if a > c:
        raise ValueError(f"splitting needs a <= c, got a={a}, c={c}")
    if not 1 <= i <= q - 1:
        raise ValueError(f"i must be in 1..{q - 1}")
    r: RulePartition = AlphaSplit(base)
    for _ in range(c - a):
        r = DStep(r)
    return Merged(r, [range(i), range(i, q + 1)])


def split_quotient(a: int, b: int, c: int, q: int, i: int) -> QuotientMatrix:
    """Predicted quotient; the bottom-right entry makes the row sum the degree a + qb + (q-1)c."""
    return QuotientMatrix([[a + (i - 1) * c, (q - i) * c + q * b], [i * c, q * b + a + (q - i - 1) * c]])


def partition_of_code(g, code: Code) -> tuple[np.ndarray, QuotientMatrix]:
    """Distance partition labels of a CR code and its quotient matrix."""
    dist = distance_partition(g, code).distances.astype(np.int64)
    check = quotient_of(g, dist)
    if not check:
        raise ValueError("the code is not completely regular in this graph")
    return dist, check.quotient


def lift(H: CheckMatrix, code: Code) -> "RuleCode":
    """Preimage of a CR code of G(H) in H(n, q) under the syndrome map."""
    g = code.graph
    if g.q != H.q or g.dim != H.k or g != syndrome_graph(H):
        raise ValueError("the code does not live in G(H)")
    labels, quotient = partition_of_code(g, code)
    return RuleCode(Lifted(H, labels, quotient))


@dataclass(frozen=True, eq=False)
class RuleCode:
    """Cell 0 of a rule partition: the code, with its distance layers as the other cells."""

    partition: RulePartition
    cell: int = 0

    @property
    def q(self) -> int:
        return self.partition.q

    @property
    def n(self) -> int:
        return self.partition.n

    @property
    def size(self) -> int:
        return self.partition.sizes[self.cell]

    def __len__(self) -> int:
        return self.size

    def __contains__(self, word) -> bool:
        return self.partition.label_of(word) == self.cell

    @property
    def intersection_array(self) -> IntersectionArray:
        return self.partition.quotient.intersection_array()

    def materialize(self, budget: int = DEFAULT_BUDGET) -> Code:
        g = hamming_graph(self.n, self.q)
        labels = all_labels(self.partition, budget)
        return Code(g, np.flatnonzero(labels == self.cell))

    def to_text(self) -> str:
        return self.partition.to_text()


def all_labels(p: RulePartition, budget: int = DEFAULT_BUDGET) -> np.ndarray:
    words = digit_table(p.q, p.n, budget)
    out = np.empty(len(words), dtype=np.int64)
    for s in range(0, len(words), _CHUNK):
        out[s : s + _CHUNK] = p.labels(words[s : s + _CHUNK])
    return out


@dataclass(frozen=True)
class RuleVerification:
    ok: bool
    mode: str  # "exhaustive" or "sampled"
    checked: int
    quotient: QuotientMatrix | None
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return f"equitable with quotient {self.quotient} ({self.mode}, {self.checked} vertices)"
        return f"verification failed ({self.mode}): {self.witness}"


def verify_rule(
    p: RulePartition,
    exhaustive: bool | None = None,
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
    budget: int = DEFAULT_BUDGET,
) -> RuleVerification:
    """Check the predicted quotient matrix (and cell sizes when exhaustive).

    By default the check is exhaustive when q^n is within the budget and
    sampled otherwise: random words have their neighbour counts per cell
    compared with the predicted row.
    """
    if exhaustive is None:
        exhaustive = p.q**p.n <= budget
    if exhaustive:
        labels = all_labels(p, budget)
        sizes = tuple(int(x) for x in np.bincount(labels, minlength=p.cells))
        if sizes != p.sizes:
            return RuleVerification(False, "exhaustive", len(labels), None, ("sizes", sizes, p.sizes))
        check = quotient_of(hamming_graph(p.n, p.q), labels)
        if not check or check.quotient != p.quotient:
            return RuleVerification(False, "exhaustive", len(labels), check.quotient, check.witness)
        return RuleVerification(True, "exhaustive", len(labels), check.quotient)
    rng = np.random.default_rng(seed)
    q = np.array(p.quotient.array())
    done = 0
    while done < samples:
        m = min(_CHUNK * 4, samples - done)
        words = rng.integers(0, p.q, size=(m, p.n), dtype=np.int8)
        own = p.labels(words)
        counts = np.zeros((m, p.cells), dtype=np.int64)
        for i in range(p.n):
            for a in range(1, p.q):
                moved = words.copy()
                moved[:, i] = (moved[:, i] + a) % p.q
                np.add.at(counts, (np.arange(m), p.labels(moved)), 1)
        bad = np.flatnonzero((counts != q[own]).any(axis=1))
        if bad.size:
            r = int(bad[0])
            w = "".join(map(str, words[r].tolist()))
            return RuleVerification(False, "sampled", done + r, None, (w, counts[r].tolist(), q[own[r]].tolist()))
        done += m
    return RuleVerification(True, "sampled", done, p.quotient)


# --- parsing the line format ----------------------------------------------------


def _parse_labels(text: str) -> np.ndarray:
    if "," in text:
        return np.array([int(x) for x in text.split(",")], dtype=np.int64)
    return np.array([int(ch) for ch in text], dtype=np.int64)


def parse_rule(text: str) -> RulePartition:
    """Inverse of ``RulePartition.to_text``."""
    rule: RulePartition | None = None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        op, *rest = line.split(None, 1)
        fields = dict(re.findall(r"(\w+)=(\S+)", rest[0])) if rest else {}
        if op in ("lift", "explicit"):
            q = check_field(int(fields["q"]))
            quotient = QuotientMatrix.parse(fields["quotient"])
            labels = _parse_labels(fields["labels"])
            if op == "lift":
                H = CheckMatrix.from_rows([[int(ch) for ch in r] for r in fields["H"].split(",")], q)
                rule = Lifted(H, labels, quotient)
            else:
                rule = Explicit(q, int(fields["n"]), labels, quotient)
            continue
        if rule is None:
            raise ValueError("a rule must start with a lift or explicit line")
        if op == "extend":
            rule = Extended(rule, int(fields["t"]))
        elif op == "inflate":
            rule = Inflated(rule, int(fields["s"]))
        elif op == "alpha-split":
            rule = AlphaSplit(rule)
        elif op == "d-step":
            rule = DStep(rule)
        elif op == "merge":
            rule = Merged(rule, [[int(x) for x in g.split(",")] for g in fields["groups"].split("|")])
        else:
            raise ValueError(f"unknown rule step {op!r}")
    if rule is None:
        raise ValueError("empty rule")
    return rule


def code_partition(q: int, n: int, words: Sequence[str]) -> Explicit:
    """Distance partition of an explicit CR code of H(n, q) as a rule."""
    g = hamming_graph(n, q)
    code = Code.from_words(g, words)
    labels, quotient = partition_of_code(g, code)
    return Explicit(q, n, labels, quotient)


__all__ = [
    "AlphaSplit",
    "DStep",
    "Explicit",
    "Extended",
    "Inflated",
    "Lifted",
    "Merged",
    "RuleCode",
    "RulePartition",
    "RuleVerification",
    "all_labels",
    "as_rule",
    "code_partition",
    "extend_t",
    "inflate_s",
    "lift",
    "parse_rule",
    "split",
    "split_quotient",
    "verify_rule",
]
