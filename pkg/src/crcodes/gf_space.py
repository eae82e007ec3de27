"""Words over GF(2) and GF(3), check matrices and syndromes.

Vertices of every graph in this package are words of F_q^m encoded as
integers: the word is the base-q expansion of its index, most significant
digit first. So over GF(3) with m = 4 the word ``2211`` has index
2*27 + 2*9 + 1*3 + 1 = 75.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

FIELD_ORDERS = (2, 3)

#: Largest vertex set that is ever materialized explicitly.
DEFAULT_BUDGET = 3**13

# Small lookup tables; the residues are tiny so tables beat `%` in loops.
ADD = {q: np.array([[(a + b) % q for b in range(q)] for a in range(q)], dtype=np.int8) for q in FIELD_ORDERS}
MUL = {q: np.array([[(a * b) % q for b in range(q)] for a in range(q)], dtype=np.int8) for q in FIELD_ORDERS}
INV = {2: (None, 1), 3: (None, 1, 2)}


class FieldMismatch(ValueError):
    """Two objects over different fields or of different lengths were combined."""


class BudgetExceeded(RuntimeError):
    """A vertex set is too large to be materialized."""


def check_field(q: int) -> int:
    if q not in FIELD_ORDERS:
        raise ValueError(f"only q in {FIELD_ORDERS} is supported, got q={q}")
    return q


@dataclass(frozen=True)
class Word:
    """A vector of F_q^m."""

    q: int
    entries: tuple[int, ...]

    def __post_init__(self):
        check_field(self.q)
        if len(self.entries) < 1:
            raise ValueError("words have length at least 1")
        if any(not 0 <= e < self.q for e in self.entries):
            raise ValueError(f"entries of {self.entries} are not residues mod {self.q}")

    @classmethod
    def parse(cls, text: str, q: int) -> "Word":
        return cls(q, tuple(int(ch) for ch in text if not ch.isspace()))

    @classmethod
    def from_index(cls, index: int, q: int, m: int) -> "Word":
        return cls(q, index_to_digits(index, q, m))

    @classmethod
    def unit(cls, i: int, q: int, m: int) -> "Word":
        e = [0] * m
        e[i] = 1
        return cls(q, tuple(e))

    @classmethod
    def zero(cls, q: int, m: int) -> "Word":
        return cls(q, (0,) * m)

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return "".join(map(str, self.entries))

    def __add__(self, other: "Word") -> "Word":
        return word_add(self, other)

    def __neg__(self) -> "Word":
        return word_scale(self.q - 1, self)

    def __sub__(self, other: "Word") -> "Word":
        return word_add(self, -other)

    @property
    def index(self) -> int:
        return digits_to_index(self.entries, self.q)

    @property
    def is_zero(self) -> bool:
        return not any(self.entries)

    def as_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int8)


def _same_space(u: Word, v: Word) -> None:
    if u.q != v.q or len(u) != len(v):
        raise FieldMismatch(f"cannot combine words over GF({u.q})^{len(u)} and GF({v.q})^{len(v)}")


def word_add(u: Word, v: Word) -> Word:
    _same_space(u, v)
    table = ADD[u.q]
    return Word(u.q, tuple(int(table[a, b]) for a, b in zip(u.entries, v.entries)))


def word_scale(a: int, v: Word) -> Word:
    if not 0 <= a < v.q:
        raise ValueError(f"scalar {a} is not a residue mod {v.q}")
    table = MUL[v.q]
    return Word(v.q, tuple(int(table[a, e]) for e in v.entries))


def character_pairing(u: Word, v: Word) -> int:
    """The inner product <u, v> mod q."""
    _same_space(u, v)
    return sum(a * b for a, b in zip(u.entries, v.entries)) % u.q


def index_to_digits(index: int, q: int, m: int) -> tuple[int, ...]:
    if not 0 <= index < q**m:
        raise ValueError(f"index {index} out of range for GF({q})^{m}")
    out = []
    for _ in range(m):
        index, r = divmod(index, q)
        out.append(r)
    return tuple(reversed(out))


def digits_to_index(digits: Sequence[int], q: int) -> int:
    index = 0
    for d in digits:
        index = index * q + int(d)
    return index


def place_values(q: int, m: int) -> np.ndarray:
    """Weights q^(m-1), ..., q, 1 turning digit rows into indices."""
    return q ** np.arange(m - 1, -1, -1, dtype=np.int64)


def check_budget(q: int, m: int, budget: int = DEFAULT_BUDGET) -> int:
    size = q**m
    if size > budget:
        raise BudgetExceeded(f"GF({q})^{m} has {size} words, above the budget of {budget}")
    return size


@lru_cache(maxsize=16)
def _digit_table(q: int, m: int) -> np.ndarray:
    idx = np.arange(q**m, dtype=np.int64)
    table = np.empty((q**m, m), dtype=np.int8)
    for j in range(m - 1, -1, -1):
        idx, table[:, j] = np.divmod(idx, q)
    table.setflags(write=False)
    return table


def digit_table(q: int, m: int, budget: int = DEFAULT_BUDGET) -> np.ndarray:
    """All q^m words as rows, in index order (read-only array)."""
    check_field(q)
    check_budget(q, m, budget)
    return _digit_table(q, m)


def indices_of(digits: np.ndarray, q: int) -> np.ndarray:
    """Row-wise index of a 2-d digit array."""
    digits = np.asarray(digits)
    return digits.astype(np.int64) @ place_values(q, digits.shape[-1])


def enumerate_words(q: int, m: int, budget: int = DEFAULT_BUDGET) -> Iterator[Word]:
    """All words of F_q^m in index (lexicographic) order."""
    check_field(q)
    check_budget(q, m, budget)
    for row in _digit_table(q, m):
        yield Word(q, tuple(int(d) for d in row))


def rank_mod(matrix: np.ndarray, q: int) -> int:
    """Rank over GF(q) by Gaussian elimination."""
    a = np.array(matrix, dtype=np.int64) % q
    rows, cols = a.shape
    rank = 0
    for col in range(cols):
        pivot = next((r for r in range(rank, rows) if a[r, col]), None)
        if pivot is None:
            continue
        a[[rank, pivot]] = a[[pivot, rank]]
        a[rank] = (a[rank] * INV[q][a[rank, col]]) % q
        for r in range(rows):
            if r != rank and a[r, col]:
                a[r] = (a[r] - a[r, col] * a[rank]) % q
        rank += 1
        if rank == rows:
            break
    return rank


def normalize_projective(column: Sequence[int], q: int) -> tuple[int, ...]:
    """Scale a nonzero vector so that its first nonzero entry is 1."""
    lead = next(int(x) for x in column if x)
    inv = INV[q][lead]
    return tuple(int(x) * inv % q for x in column)


@dataclass(frozen=True, eq=False)
class CheckMatrix:
    """A k x n matrix over GF(q) with no zero and no collinear columns."""

    q: int
    array: np.ndarray
    rank: int = field(init=False)

    def __post_init__(self):
        check_field(self.q)
        a = np.array(self.array, dtype=np.int8)
        if a.ndim != 2 or a.size == 0:
            raise ValueError("a check matrix must be a nonempty 2-d array")
        if ((a < 0) | (a >= self.q)).any():
            raise ValueError(f"entries must be residues mod {self.q}")
        seen: dict[tuple[int, ...], int] = {}
        for i, col in enumerate(a.T):
            if not col.any():
                raise ValueError(f"column {i + 1} is zero")
            key = normalize_projective(col, self.q)
            if key in seen:
                raise ValueError(f"columns {seen[key] + 1} and {i + 1} are collinear")
            seen[key] = i
        a.setflags(write=False)
        object.__setattr__(self, "array", a)
        object.__setattr__(self, "rank", rank_mod(a, self.q))

    @property
    def k(self) -> int:
        return self.array.shape[0]

    @property
    def n(self) -> int:
        return self.array.shape[1]

    @property
    def rows(self) -> list[Word]:
        return [Word(self.q, tuple(int(x) for x in r)) for r in self.array]

    @property
    def columns(self) -> list[Word]:
        return [Word(self.q, tuple(int(x) for x in c)) for c in self.array.T]

    def __eq__(self, other) -> bool:
        return isinstance(other, CheckMatrix) and self.q == other.q and np.array_equal(self.array, other.array)

    def __hash__(self) -> int:
        return hash((self.q, self.array.tobytes(), self.array.shape))

    def __repr__(self) -> str:
        return f"CheckMatrix(q={self.q}, k={self.k}, n={self.n}, rank={self.rank})"

    @classmethod
    def identity(cls, k: int, q: int) -> "CheckMatrix":
        return cls(q, np.eye(k, dtype=np.int8))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], q: int) -> "CheckMatrix":
        return cls(q, np.array(rows, dtype=np.int8))

    @classmethod
    def from_text(cls, text: str, q: int | None = None) -> "CheckMatrix":
        """Parse one row per line; ``#`` starts a comment.

        A comment of the form ``# q=3`` sets the field when ``q`` is not
        given; otherwise q is 3 if any entry is 2 and 2 else.
        """
        rows = []
        header_q = None
        for raw in text.splitlines():
            line, _, comment = raw.partition("#")
            for tok in comment.replace(",", " ").split():
                if tok.startswith("q="):
                    header_q = int(tok[2:])
            digits = [ch for ch in line if not ch.isspace() and ch not in ",[]"]
            if not digits:
                continue
            if not all(ch.isdigit() for ch in digits):
                raise ValueError(f"cannot parse matrix row {raw!r}")
            rows.append([int(ch) for ch in digits])
        if not rows:
            raise ValueError("empty check matrix")
        if len({len(r) for r in rows}) != 1:
            raise ValueError("matrix rows have different lengths")
        if q is None:
            q = header_q
        if q is None:
            q = 3 if any(2 in r for r in rows) else 2
        return cls.from_rows(rows, q)

    @classmethod
    def load(cls, path, q: int | None = None) -> "CheckMatrix":
        with open(path) as fh:
            return cls.from_text(fh.read(), q)

    def to_text(self) -> str:
        return "\n".join("".join(str(int(x)) for x in row) for row in self.array) + "\n"


def syndrome(H: CheckMatrix, x: Word) -> Word:
    """H x over GF(q)."""
    if x.q != H.q or len(x) != H.n:
        raise FieldMismatch(f"word of length {len(x)} over GF({x.q}) does not fit {H!r}")
    s = (H.array.astype(np.int64) @ np.array(x.entries, dtype=np.int64)) % H.q
    return Word(H.q, tuple(int(v) for v in s))


def syndrome_indices(H: CheckMatrix, digits: np.ndarray) -> np.ndarray:
    """Vectorized syndrome map on rows of ``digits``, returned as indices of F_q^k."""
    if digits.shape[-1] != H.n:
        raise FieldMismatch(f"words of length {digits.shape[-1]} do not fit {H!r}")
    s = (digits.astype(np.int64) @ H.array.T.astype(np.int64)) % H.q
    return s @ place_values(H.q, H.k)
