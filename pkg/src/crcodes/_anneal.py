"""Compiled inner loop of the annealing search."""

from __future__ import annotations

import numba
import numpy as np


@numba.njit(cache=True)
def _row_cost(cnt, q, lab, x):
    c = 0
    for j in range(q.shape[1]):
        d = cnt[x, j] - q[lab[x], j]
        c += d if d > 0 else -d
    return c


@numba.njit(cache=True)
def _anneal(table, q, labels, steps, t_start, t_end, seed, keep_zero):
    np.random.seed(seed)
    n, deg = table.shape
    t = q.shape[0]
    cnt = np.zeros((n, t), dtype=np.int32)
    for x in range(n):
        for j in range(deg):
            cnt[x, labels[table[x, j]]] += 1
    cost = 0
    for x in range(n):
        cost += _row_cost(cnt, q, labels, x)
    mark = np.zeros(n, dtype=np.int64)
    touched = np.empty(2 * deg + 2, dtype=np.int64)
    lo = 1 if keep_zero else 0
    ratio = t_end / t_start
    step = 0
    while step < steps and cost > 0:
        step += 1
        u = np.random.randint(lo, n)
        w = np.random.randint(lo, n)
        a = labels[u]
        b = labels[w]
        if a == b:
            continue
        # collect the vertices whose cost can change
        m = 0
        for x in (u, w):
            if mark[x] != step:
                mark[x] = step
                touched[m] = x
                m += 1
        for j in range(deg):
            for x in (table[u, j], table[w, j]):
                if mark[x] != step:
                    mark[x] = step
                    touched[m] = x
                    m += 1
        old = 0
        for i in range(m):
            old += _row_cost(cnt, q, labels, touched[i])
        for j in range(deg):
            x = table[u, j]
            cnt[x, a] -= 1
            cnt[x, b] += 1
            x = table[w, j]
            cnt[x, b] -= 1
            cnt[x, a] += 1
        labels[u] = b
        labels[w] = a
        new = 0
        for i in range(m):
            new += _row_cost(cnt, q, labels, touched[i])
        delta = new - old
        temp = t_start * ratio ** (step / steps)
        if delta <= 0 or np.random.random() < np.exp(-delta / temp):
            cost += delta
        else:
            for j in range(deg):
                x = table[u, j]
                cnt[x, a] += 1
                cnt[x, b] -= 1
                x = table[w, j]
                cnt[x, b] += 1
                cnt[x, a] -= 1
            labels[u] = a
            labels[w] = b
    return cost, step


def anneal(
    table: np.ndarray,
    q: np.ndarray,
    labels: np.ndarray,
    steps: int,
    t_start: float,
    t_end: float,
    seed: int,
    keep_zero: bool,
) -> tuple[int, int]:
    """Run at most ``steps`` swap moves on ``labels`` (modified in place).

    Returns (final cost, moves used); cost 0 means ``labels`` is an
    equitable partition with quotient ``q``.
    """
    cost, used = _anneal(table, q, labels, steps, float(t_start), float(t_end), seed, keep_zero)
    return int(cost), int(used)
