"""Putative intersection arrays of CR codes in a graph with known spectrum.

Three filters: monotonicity, containment of the quotient eigenvalues in
the graph spectrum, and integrality of the implied cell sizes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .cr_engine import IntersectionArray, QuotientMatrix


def cell_sizes(a: IntersectionArray, degree: int, v: int) -> tuple[int, ...] | None:
    """Sizes of the distance layers forced by |C_i| b_i = |C_{i+1}| c_{i+1}, or None."""
    if a.rho < 1:
        raise ValueError("cell sizes need covering radius at least 1")
    try:
        a.quotient(degree)
    except ValueError:
        return None
    weights = _layer_weights(a.b, a.c)
    total = sum(weights)
    if any(v * w % total for w in weights):
        return None
    return tuple(v * w // total for w in weights)


def _layer_weights(b: Sequence[int], c: Sequence[int]) -> list[int]:
    rho = len(b)
    out = []
    for i in range(rho + 1):
        w = 1
        for j in range(i):
            w *= b[j]
        for j in range(i, rho):
            w *= c[j]
        out.append(w)
    return out


def characteristic_polynomial(m: Sequence[Sequence[int]]) -> list[int]:
    """Integer coefficients, leading first, by Faddeev-LeVerrier."""
    a = np.array(m, dtype=object)
    n = a.shape[0]
    coeffs = [1]
    mk = np.zeros((n, n), dtype=object)
    ident = np.identity(n, dtype=object) * 1
    ck = 1
    for k in range(1, n + 1):
        mk = a.dot(mk) + ck * ident
        ck_frac = Fraction(-int(np.trace(a.dot(mk))), k)
        assert ck_frac.denominator == 1
        ck = int(ck_frac)
        coeffs.append(ck)
    return coeffs


def _eval(coeffs: Sequence[int], x: int) -> int:
    r = 0
    for c in coeffs:
        r = r * x + c
    return r


def _divide_root(coeffs: list[int], root: int) -> list[int]:
    out = [coeffs[0]]
    for c in coeffs[1:-1]:
        out.append(c + out[-1] * root)
    return out


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    ds = sorted(set(small + [n // d for d in small]))
    return ds + [-d for d in ds]


class QuotientEigenvalues(NamedTuple):
    integral: tuple[int, ...]
    nonintegral: int

    def contained_in(self, eigenvalues: Iterable[int]) -> bool:
        return self.nonintegral == 0 and set(self.integral) <= set(eigenvalues)


def quotient_eigenvalues(m: Sequence[Sequence[int]]) -> QuotientEigenvalues:
    """Integer roots found exactly by the rational root test; the rest are only counted."""
    coeffs = characteristic_polynomial(m)
    roots = []
    while len(coeffs) > 1 and coeffs[-1] == 0:
        roots.append(0)
        coeffs = coeffs[:-1]
    changed = True
    while len(coeffs) > 1 and changed:
        changed = False
        for d in _divisors(coeffs[-1]):
            if _eval(coeffs, d) == 0:
                roots.append(d)
                coeffs = _divide_root(coeffs, d)
                changed = True
                break
    return QuotientEigenvalues(tuple(sorted(roots, reverse=True)), len(coeffs) - 1)


def tau(a: IntersectionArray, q: int, n: int) -> Fraction:
    """(b + c) / (q n) for a CR-1 array in H(n, q)."""
    return Fraction(a.b[0] + a.c[0], q * n)


def reversed_array(a: IntersectionArray) -> IntersectionArray:
    """{c_rho,...,c_1; b_{rho-1},...,b_0}: the array read from the far end."""
    return IntersectionArray(tuple(reversed(a.c)), tuple(reversed(a.b)))


def is_oriented(a: IntersectionArray) -> bool:
    """True for the representative of {a, reversed(a)} with the larger b-vector.

    For CR-1 this is b >= c: the complement of a {b;c}-CR code is a
    {c;b}-CR code, so only one of the two is listed.
    """
    return a.b >= reversed_array(a).b


def is_monotone(a: IntersectionArray) -> bool:
    """b nonincreasing, c nondecreasing, and oriented (see is_oriented)."""
    b, c = a.b, a.c
    return (
        all(x >= y for x, y in zip(b, b[1:]))
        and all(x <= y for x, y in zip(c, c[1:]))
        and is_oriented(a)
    )


def distance_quotients(q: QuotientMatrix, drg: IntersectionArray) -> list[list[list[Fraction]]]:
    """Images of the distance-i matrices A_i of a distance-regular ambient graph.

    Uses A_{i+1} = (A A_i - a_i A_i - b_{i-1} A_{i-1}) / c_{i+1} with A in
    place of the quotient matrix.
    """
    k = drg.b[0]
    d = drg.rho
    b = list(drg.b) + [0]
    c = [0] + list(drg.c)
    a_ = [k - b[i] - c[i] for i in range(d + 1)]
    m = [[Fraction(x) for x in row] for row in q]
    n = len(m)
    ident = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]

    def mul(x, y):
        return [[sum(x[i][t] * y[t][j] for t in range(n)) for j in range(n)] for i in range(n)]

    mats = [ident, m]
    for i in range(1, d):
        prod = mul(m, mats[i])
        nxt = [
            [(prod[r][s] - a_[i] * mats[i][r][s] - b[i - 1] * mats[i - 1][r][s]) / c[i + 1] for s in range(n)]
            for r in range(n)
        ]
        mats.append(nxt)
    return mats


def distance_integral(q: QuotientMatrix, drg: IntersectionArray, nonnegative: bool = False) -> bool:
    """All distance-i quotient images (i >= 2) are integral (and nonnegative if asked)."""
    return all(
        x.denominator == 1 and (x >= 0 or not nonnegative)
        for mat in distance_quotients(q, drg)[2:]
        for row in mat
        for x in row
    )


@dataclass(frozen=True)
class PutativeArray:
    array: IntersectionArray
    sizes: tuple[int, ...] | None
    eigenvalues: QuotientEigenvalues
    monotone: bool
    eigenvalues_contained: bool
    integral_cells: bool
    tau: Fraction | None = None

    @property
    def rho(self) -> int:
        return self.array.rho

    def __str__(self) -> str:
        eig = ", ".join(map(str, sorted(self.eigenvalues.integral)))
        if self.eigenvalues.nonintegral:
            eig += f" (+{self.eigenvalues.nonintegral} non-integral)"
        flags = "".join(
            ch if ok else "-"
            for ch, ok in zip("MEI", (self.monotone, self.eigenvalues_contained, self.integral_cells))
        )
        sizes = ",".join(map(str, self.sizes)) if self.sizes else "-"
        line = f"{self.array}  eigenvalues: {eig}  sizes: ({sizes})  flags: {flags}"
        if self.tau is not None:
            line += f"  tau: {self.tau} ~ {float(self.tau):.3f}"
        return line


def make_record(
    a: IntersectionArray, degree: int, v: int, eigenvalues: Iterable[int], q: int | None = None
) -> PutativeArray:
    sizes = cell_sizes(a, degree, v)
    qe = quotient_eigenvalues(a.quotient(degree))
    t = tau(a, q, degree // (q - 1)) if q and a.rho == 1 else None
    return PutativeArray(a, sizes, qe, is_monotone(a), qe.contained_in(eigenvalues), sizes is not None, t)


def _sequences(degree: int, length: int, nonincreasing: bool | None) -> np.ndarray:
    vals = range(1, degree + 1)
    if nonincreasing is None:
        seqs = itertools.product(vals, repeat=length)
    else:
        seqs = (
            tuple(sorted(s, reverse=nonincreasing))
            for s in itertools.combinations_with_replacement(vals, length)
        )
    return np.array(sorted(seqs), dtype=np.int64).reshape(-1, length)


def enumerate_putative(
    eigenvalues: Iterable[int],
    degree: int,
    v: int,
    rho_max: int,
    strict_monotone: bool = True,
    q: int | None = None,
    eigenvalue: int | None = None,
    drg: IntersectionArray | None = None,
    nonnegative: bool = False,
) -> list[PutativeArray]:
    """All arrays with covering radius 1..rho_max passing the filters.

    ``eigenvalue`` keeps only arrays whose quotient has that eigenvalue;
    ``drg`` (intersection array of a distance-regular ambient graph)
    switches on the optional distance-i integrality filter.
    Without ``strict_monotone`` neither monotonicity nor orientation is
    required, so both members of each reversal pair appear.
    """
    if not 1 <= rho_max <= 3:
        raise ValueError("rho_max must be 1, 2 or 3")
    eigs = np.array(sorted(set(int(e) for e in eigenvalues)), dtype=np.int64)
    out: list[PutativeArray] = []
    for rho in range(1, rho_max + 1):
        bs = _sequences(degree, rho, True if strict_monotone else None)
        cs = _sequences(degree, rho, False if strict_monotone else None)
        for b in bs:
            cand = _filter_grid(b, cs, degree, v, eigs, rho, strict_monotone)
            for c in cand:
                a = IntersectionArray(tuple(b), tuple(c))
                rec = make_record(a, degree, v, eigs.tolist(), q)
                if eigenvalue is not None and eigenvalue not in rec.eigenvalues.integral:
                    continue
                if drg is not None and not distance_integral(a.quotient(degree), drg, nonnegative):
                    continue
                out.append(rec)
    out.sort(key=lambda r: (r.rho, r.array.b, r.array.c))
    return out


def _filter_grid(b, cs, degree, v, eigs, rho, strict_monotone) -> np.ndarray:
    """Vectorized filters over all c-vectors for one fixed b-vector."""
    ones = np.ones(len(cs), dtype=np.int64)
    bb = [b[i] * ones for i in range(rho)] + [0 * ones]
    cc = [0 * ones] + [cs[:, i] for i in range(rho)]
    diag = [degree - bb[i] - cc[i] for i in range(rho + 1)]
    keep = np.all(np.array(diag) >= 0, axis=0)
    if strict_monotone:
        # lexicographic b >= reversed(c)
        decided = np.zeros(len(cs), dtype=bool)
        for i in range(rho):
            ci = cs[:, rho - 1 - i]
            keep &= decided | (b[i] >= ci)
            decided |= b[i] > ci
    weights = []
    for i in range(rho + 1):
        w = ones.copy()
        for j in range(i):
            w *= b[j]
        for j in range(i, rho):
            w *= cs[:, j]
        weights.append(w)
    total = sum(weights)
    for w in weights:
        keep &= (v * w) % total == 0
    # char. polynomial of the tridiagonal quotient via the continuant recurrence,
    # evaluated at every graph eigenvalue; Jacobi matrices have simple eigenvalues
    roots = np.zeros(len(cs), dtype=np.int64)
    for theta in eigs:
        p_prev, p = ones, theta - diag[0]
        for i in range(1, rho + 1):
            p_prev, p = p, (theta - diag[i]) * p - bb[i - 1] * cc[i] * p_prev
        roots += p == 0
    keep &= roots == rho + 1
    return cs[keep]
