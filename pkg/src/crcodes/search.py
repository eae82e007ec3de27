"""Searching for CR codes (equitable partitions with a prescribed quotient matrix).

Both engines search for a labelling of the vertices by cells 0..t-1 such
that every vertex in cell i has exactly S[i][j] neighbours in cell j. For a
tridiagonal quotient with positive off-diagonals such a labelling is the
distance partition of cell 0, so cell 0 is a CR code with that matrix.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .cr_engine import (
    Code,
    EquitablePartition,
    IntersectionArray,
    QuotientMatrix,
    distance_partition,
    quotient_of,
    verify_cr,
)
from .gf_space import digit_table, index_to_digits, indices_of, normalize_projective
from .graph_core import DENSE_LIMIT, Graph

FOUND = "found"
EXHAUSTED = "exhausted"
BUDGET = "budget-exceeded"

DEFAULT_EXACT_BUDGET = 10**8
DEFAULT_HEURISTIC_BUDGET = 10**7


def partition_sizes(quotient: QuotientMatrix, v: int) -> tuple[int, ...] | None:
    """Cell sizes forced by n_i S[i][j] = n_j S[j][i], or None if not integral/consistent."""
    t = quotient.size
    ratio: list[Fraction | None] = [None] * t
    ratio[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(t):
            if quotient[i][j] and quotient[j][i]:
                r = ratio[i] * quotient[i][j] / quotient[j][i]
                if ratio[j] is None:
                    ratio[j] = r
                    stack.append(j)
                elif ratio[j] != r:
                    return None
            elif quotient[i][j] or quotient[j][i]:
                return None
    if any(r is None for r in ratio):
        return None
    total = sum(ratio)
    sizes = [v * r / total for r in ratio]
    if any(s.denominator != 1 or s <= 0 for s in sizes):
        return None
    return tuple(int(s) for s in sizes)


@dataclass(frozen=True)
class SearchTarget:
    quotient: QuotientMatrix
    sizes: tuple[int, ...] | None
    require_independent: bool = False
    require_contains_zero: bool = True

    @classmethod
    def for_graph(
        cls, g: Graph, target: QuotientMatrix | IntersectionArray | str, **options
    ) -> "SearchTarget":
        if isinstance(target, str):
            target = IntersectionArray.parse(target) if "{" in target else QuotientMatrix.parse(target)
        if isinstance(target, IntersectionArray):
            target = target.quotient(g.degree)
        if any(s != g.degree for s in target.row_sums()):
            raise ValueError(f"rows of {target} do not sum to the degree {g.degree}")
        return cls(target, partition_sizes(target, g.order), **options)

    @property
    def is_cr(self) -> bool:
        return self.quotient.is_cr_shape()


@dataclass
class SearchOutcome:
    status: str
    code: Code | None = None
    partition: EquitablePartition | None = None
    nodes: int = 0
    seconds: float = 0.0
    extra: dict = field(default_factory=dict)

    @property
    def found(self) -> bool:
        return self.status == FOUND

    def __str__(self) -> str:
        s = f"{self.status} after {self.nodes} nodes in {self.seconds:.2f}s"
        if self.code is not None:
            s += f"; code of size {len(self.code)}"
        return s


def _finish(g: Graph, target: SearchTarget, labels: np.ndarray, nodes: int, t0: float, **extra) -> SearchOutcome:
    check = quotient_of(g, labels)
    assert check and check.quotient == target.quotient, f"search returned a wrong partition: {check}"
    part = EquitablePartition(g, labels.copy(), check.quotient)
    code = Code(g, np.flatnonzero(labels == 0))
    if target.is_cr:
        res = verify_cr(g, code)
        assert res is not None and res.quotient == target.quotient, "found code does not re-verify"
    return SearchOutcome(FOUND, code, part, nodes, time.perf_counter() - t0, dict(extra))


def _trivial_outcome(g: Graph, target: SearchTarget, t0: float) -> SearchOutcome | None:
    if target.sizes is None:
        return SearchOutcome(EXHAUSTED, seconds=time.perf_counter() - t0, extra={"reason": "cell sizes not integral"})
    if target.require_independent and target.quotient[0][0] != 0:
        return SearchOutcome(EXHAUSTED, seconds=time.perf_counter() - t0, extra={"reason": "target is not independent"})
    return None


class _Propagator:
    """Domain propagation for label assignments of orbits (single vertices by default).

    ``m[a, b]`` is the number of neighbours in orbit b of any vertex of
    orbit a and ``w`` holds the orbit sizes; domains are boolean (orbits x t).
    Optional cardinality rows: ``rows[r, a]`` vertices of orbit a lie in
    block r, which must contain exactly ``row_targets[r, j]`` vertices of
    cell j.
    """

    def __init__(self, m, w, target: SearchTarget, rows=None, row_targets=None):
        self.m = m.astype(np.float32)
        self.w = w.astype(np.float32)
        self.q = target.quotient.array().astype(np.float32)
        self.sizes = np.array(target.sizes, dtype=np.float32)
        self.t = target.quotient.size
        self.unit = bool((w == 1).all())
        # the cell sizes are one more cardinality row (the block of all vertices)
        extra = [] if rows is None else [rows.astype(np.float32)]
        extra_t = [] if rows is None else [row_targets.astype(np.float32)]
        self.rows = np.concatenate(extra + [self.w[None, :]])
        self.row_targets = np.concatenate(extra_t + [self.sizes[None, :]])
        self.rows_pos = (self.rows.T > 0).astype(np.float32)
        self.m_pos = (m.T > 0).astype(np.float32)

    @staticmethod
    def _overfill(weights_t, room_rows, active):
        """(orbits x t): orbit would push an active row over its remaining room."""
        if not active.any():
            return None
        wt = weights_t[:, active]
        return np.stack([(wt > room_rows[active, j][None, :]).any(axis=1) for j in range(room_rows.shape[1])], axis=1)

    def run(self, dom: np.ndarray) -> np.ndarray | None:
        m, q = self.m, self.q
        while True:
            nlab = dom.sum(axis=1)
            if (nlab == 0).any():
                return None
            decided = nlab == 1
            und = ~decided[:, None]
            dd = (dom & decided[:, None]).astype(np.float32)
            du = (dom & und).astype(np.float32)
            cnt = m @ dd
            poss = m @ du
            rcnt = self.rows @ dd
            rposs = self.rows @ du
            rroom = self.row_targets - rcnt
            if (rroom < 0).any() or (rroom > rposs).any():
                return None
            # an orbit may take label l only if its own counts can still reach row l
            feas = np.all(
                (cnt[:, None, :] <= q[None, :, :]) & (cnt[:, None, :] + poss[:, None, :] >= q[None, :, :]), axis=2
            )
            new = dom & feas
            lab = np.argmax(dom, axis=1)
            room = q[lab] - cnt
            # undecided orbits that would overfill a decided neighbour or a block
            if self.unit:
                full = ((room == 0) & decided[:, None]).astype(np.float32)
                new &= ~(und & ((self.m_pos @ full) > 0))
                rfull = (rroom == 0).astype(np.float32)
                new &= ~(und & ((self.rows_pos @ rfull) > 0))
            else:
                over = self._overfill(m.T, room, decided)
                if over is not None:
                    new &= ~(und & over)
                over = self._overfill(self.rows.T, rroom, np.ones(len(self.rows), dtype=bool))
                new &= ~(und & over)
            # neighbours and blocks whose remaining room equals the undecided supply
            tight = ((room == poss) & (room > 0) & decided[:, None]).astype(np.float32)
            forced = und & ((self.m_pos @ tight) > 0) & new
            rtight = ((rroom == rposs) & (rroom > 0)).astype(np.float32)
            forced |= und & ((self.rows_pos @ rtight) > 0) & new
            nforced = forced.sum(axis=1)
            if (nforced > 1).any():
                return None
            sel = nforced == 1
            new[sel] = forced[sel]
            if np.array_equal(new, dom):
                return dom
            dom = new


def character_eigenvalues(g: Graph) -> np.ndarray:
    """Eigenvalue of the character indexed by each vertex y (N0 - N1 as in ``spectrum``)."""
    verts = digit_table(g.q, g.dim).astype(np.int64)
    pair = (verts @ g.S.digits().T.astype(np.int64)) % g.q
    return (pair == 0).sum(axis=1) - (pair == 1).sum(axis=1)


def spectral_blocks(g: Graph, target: SearchTarget) -> tuple[np.ndarray, np.ndarray] | None:
    """Hyperplane blocks on which every cell must be equidistributed.

    The cell indicators of an equitable partition span an A-invariant
    space on which A has the eigenvalues of the quotient matrix. So if the
    character y has an eigenvalue outside that set, every cell meets the q
    parallel hyperplanes <y, x> = a equally often. Returns (blocks, targets)
    with blocks as a boolean (rows x v) array, or None when the cell sizes
    make that impossible (no solution).
    """
    from .enumeration import projective_points

    qe = np.linalg.eigvals(target.quotient.array().astype(float))
    lam = character_eigenvalues(g)
    ys = [y for y in projective_points(g.q, g.dim).tolist() if np.abs(qe - lam[y]).min() > 1e-6]
    sizes = np.array(target.sizes)
    if not ys:
        return np.zeros((0, g.order), dtype=bool), np.zeros((0, len(sizes)))
    if (sizes % g.q).any():
        return None
    verts = digit_table(g.q, g.dim).astype(np.int64)
    ydig = np.array([index_to_digits(y, g.q, g.dim) for y in ys], dtype=np.int64)
    pair = (ydig @ verts.T) % g.q
    blocks = np.concatenate([pair == a for a in range(g.q)])
    targets = np.tile(sizes // g.q, (len(blocks), 1))
    return blocks, targets


def orbits_of(g: Graph, generators: Sequence[np.ndarray]) -> np.ndarray:
    """Orbit index of every vertex under the group generated by vertex permutations."""
    n = g.order
    parent = np.arange(n)

    def root(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for perm in generators:
        for x, y in enumerate(np.asarray(perm).tolist()):
            a, b = root(x), root(y)
            if a != b:
                parent[max(a, b)] = min(a, b)
    roots = np.array([root(x) for x in range(n)])
    _, orbit = np.unique(roots, return_inverse=True)
    return orbit


def _orbit_model(g: Graph, orbit: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    o = int(orbit.max()) + 1
    w = np.bincount(orbit, minlength=o)
    reps = np.array([np.argmax(orbit == i) for i in range(o)])
    nb_orbits = orbit[g.neighbor_table[reps]]
    m = np.zeros((o, o), dtype=np.int64)
    np.add.at(m, (np.repeat(np.arange(o), g.degree), nb_orbits.ravel()), 1)
    return m, w


def search_exact(
    g: Graph,
    target: SearchTarget,
    budget: int = DEFAULT_EXACT_BUDGET,
    time_limit: float | None = None,
    group: Sequence[np.ndarray] | None = None,
    spectral: bool = True,
) -> SearchOutcome:
    """Depth-first search with propagation; vertex 0 is put in cell 0.

    Returns ``exhausted`` only after the whole tree has been explored, so
    that answer is a proof of nonexistence (up to translation, since Cayley
    graphs are vertex-transitive).

    With ``group`` (generators given as vertex permutations) only
    partitions invariant under the group are searched, cell by orbit; then
    vertex 0 is not fixed and ``exhausted`` only rules out invariant codes.

    ``spectral`` adds the hyperplane equidistribution constraints of
    ``spectral_blocks`` (necessary conditions, so completeness is kept).
    """
    t0 = time.perf_counter()
    trivial = _trivial_outcome(g, target, t0)
    if trivial:
        return trivial
    if group:
        orbit = orbits_of(g, group)
        m, w = _orbit_model(g, orbit)
    else:
        if g.order > DENSE_LIMIT:
            raise MemoryError(f"exact search needs a dense adjacency matrix; {g!r} is too large")
        orbit = np.arange(g.order)
        m, w = g.adjacency_matrix(), np.ones(g.order, dtype=np.int64)
    rows = row_targets = None
    if spectral:
        blocks = spectral_blocks(g, target)
        if blocks is None:
            return SearchOutcome(
                EXHAUSTED, seconds=time.perf_counter() - t0, extra={"reason": "cell sizes not divisible by q"}
            )
        if len(blocks[0]):
            onehot = np.zeros((g.order, len(w)), dtype=np.int64)
            onehot[np.arange(g.order), orbit] = 1
            rows, row_targets = blocks[0].astype(np.int64) @ onehot, blocks[1]
    prop = _Propagator(m, w, target, rows, row_targets)
    dom = np.ones((len(w), prop.t), dtype=bool)
    if target.require_contains_zero and not group:
        dom[0] = False
        dom[0, 0] = True
    nodes = 0
    deadline = None if time_limit is None else t0 + time_limit

    def dfs(dom):
        nonlocal nodes
        nodes += 1
        if nodes > budget or (deadline and time.perf_counter() > deadline):
            raise _OutOfBudget
        dom = prop.run(dom)
        if dom is None:
            return None
        nlab = dom.sum(axis=1)
        undecided = np.flatnonzero(nlab > 1)
        if undecided.size == 0:
            return np.argmax(dom, axis=1)
        # most decided neighbours first, then smallest domain, then lowest index
        decided = (nlab == 1).astype(np.float32)
        score = prop.m[undecided] @ decided
        order = np.lexsort((undecided, nlab[undecided], -score))
        v = undecided[order[0]]
        for lab in np.flatnonzero(dom[v]):
            child = dom.copy()
            child[v] = False
            child[v, lab] = True
            res = dfs(child)
            if res is not None:
                return res
        return None

    stats = {"orbits": len(w)} if group else {}
    try:
        labels = dfs(dom)
    except _OutOfBudget:
        return SearchOutcome(BUDGET, nodes=nodes, seconds=time.perf_counter() - t0, extra=stats)
    if labels is None:
        return SearchOutcome(EXHAUSTED, nodes=nodes, seconds=time.perf_counter() - t0, extra=stats)
    return _finish(g, target, labels[orbit], nodes, t0, **stats)


class _OutOfBudget(Exception):
    pass


def linear_automorphisms(g: Graph) -> list[np.ndarray]:
    """Matrices a with a S = S (all of them, including scalar multiples)."""
    from .enumeration import ProjectivePointSet, canonize

    points = sorted({normalize_projective(row, g.q) for row in g.S.digits().tolist()})
    pts = ProjectivePointSet.from_vectors(points, g.q, g.dim)
    if not pts.spanning:
        return []
    out = []
    for a in canonize(pts).automorphisms:
        for lam in range(1, g.q):
            out.append((lam * a) % g.q)
    return out


def matrix_permutation(g: Graph, a: np.ndarray) -> np.ndarray:
    words = digit_table(g.q, g.dim).astype(np.int64)
    return indices_of((words @ np.asarray(a).T) % g.q, g.q)


def translation_permutation(g: Graph, u: int) -> np.ndarray:
    words = digit_table(g.q, g.dim).astype(np.int64)
    shift = np.array(index_to_digits(u, g.q, g.dim), dtype=np.int64)
    return indices_of((words + shift) % g.q, g.q)


def symmetry_groups(g: Graph) -> list[list[np.ndarray]]:
    """Small automorphism groups to prescribe, as generator lists, most orbits first.

    Cyclic groups of linear automorphisms, translation groups by one
    nonzero vector, and their combinations when the vector spans a line
    fixed by the linear map. Groups with the same orbits are listed once.
    """
    from .enumeration import projective_points

    linear = [a for a in linear_automorphisms(g) if not np.array_equal(a, np.eye(g.dim, dtype=a.dtype))]
    lines = projective_points(g.q, g.dim).tolist()
    cands: list[list[np.ndarray]] = []
    cands += [[matrix_permutation(g, a)] for a in linear]
    cands += [[translation_permutation(g, u)] for u in lines]
    for a in linear:
        for u in lines:
            v = np.array(index_to_digits(u, g.q, g.dim), dtype=np.int64)
            img = (np.asarray(a) @ v) % g.q
            if any(np.array_equal(img, (lam * v) % g.q) for lam in range(1, g.q)):
                cands.append([matrix_permutation(g, a), translation_permutation(g, u)])
    seen = {}
    for gens in cands:
        orbit = orbits_of(g, gens)
        key = orbit.tobytes()
        if key not in seen:
            seen[key] = (int(orbit.max()) + 1, gens)
    return [gens for _, gens in sorted(seen.values(), key=lambda x: -x[0])]


def search_symmetric(
    g: Graph, target: SearchTarget, per_group: float = 5.0, time_limit: float | None = None
) -> SearchOutcome:
    """Exact search for codes invariant under prescribed symmetry groups, tried in turn.

    Each group from ``symmetry_groups`` gets ``per_group`` seconds. Only a
    Found result is conclusive; otherwise the status is budget-exceeded.
    """
    t0 = time.perf_counter()
    trivial = _trivial_outcome(g, target, t0)
    if trivial:
        return trivial
    nodes = 0
    groups = symmetry_groups(g)
    for gi, gens in enumerate(groups):
        left = None if time_limit is None else time_limit - (time.perf_counter() - t0)
        if left is not None and left <= 0:
            break
        limit = per_group if left is None else min(per_group, left)
        out = search_exact(g, target, time_limit=limit, group=gens)
        nodes += out.nodes
        if out.found:
            out.nodes = nodes
            out.seconds = time.perf_counter() - t0
            out.extra["group"] = gi
            return out
    return SearchOutcome(BUDGET, nodes=nodes, seconds=time.perf_counter() - t0, extra={"groups": len(groups)})


def search_heuristic(
    g: Graph,
    target: SearchTarget,
    seed: int = 0,
    budget: int = DEFAULT_HEURISTIC_BUDGET,
    restart_every: int = 500_000,
    t_start: float = 3.0,
    t_end: float = 0.2,
) -> SearchOutcome:
    """Simulated annealing over labellings with the prescribed cell sizes.

    The cost is the sum over vertices of |observed - required| neighbour
    counts. A move swaps the labels of two vertices in different cells;
    the temperature falls geometrically from ``t_start`` to ``t_end`` over
    each restart. Never reports nonexistence.
    """
    t0 = time.perf_counter()
    trivial = _trivial_outcome(g, target, t0)
    if trivial:
        return trivial
    from ._anneal import anneal

    table = np.ascontiguousarray(g.neighbor_table, dtype=np.int64)
    q = np.ascontiguousarray(target.quotient.array(), dtype=np.int64)
    sizes = np.array(target.sizes, dtype=np.int64)
    rng = np.random.default_rng(seed)
    used_total = 0
    attempt = 0
    while used_total < budget:
        labels = np.repeat(np.arange(q.shape[0], dtype=np.int64), sizes)
        rng.shuffle(labels)
        if target.require_contains_zero:
            # vertex-transitivity: any solution can be translated to put 0 in cell 0
            j = int(np.flatnonzero(labels == 0)[0])
            labels[[0, j]] = labels[[j, 0]]
        steps = min(restart_every, budget - used_total)
        cost, used = anneal(
            table, q, labels, steps, t_start, t_end, int(rng.integers(2**31)), target.require_contains_zero
        )
        used_total += used
        attempt += 1
        if cost == 0:
            return _finish(g, target, labels, used_total, t0, restarts=attempt, seed=seed)
    return SearchOutcome(BUDGET, nodes=used_total, seconds=time.perf_counter() - t0, extra={"restarts": attempt})


def search_milp(
    g: Graph,
    target: SearchTarget,
    time_limit: float | None = None,
    node_limit: int | None = None,
) -> SearchOutcome:
    """Integer program for the labelling, solved by HiGHS through scipy.

    Binary x[v, j] says that v is in cell j. Equitability is linear: the
    neighbours of v in cell j number sum_i S[i][j] x[v, i]. Complete up to
    the solver's tolerances, so infeasibility is reported as ``exhausted``.
    """
    from scipy.optimize import Bounds, LinearConstraint, milp
    from scipy.sparse import csr_matrix, identity, kron, vstack

    t0 = time.perf_counter()
    trivial = _trivial_outcome(g, target, t0)
    if trivial:
        return trivial
    v, t = g.order, target.quotient.size
    qm = np.array(target.quotient.array(), dtype=float)
    table = g.neighbor_table
    adj = csr_matrix((np.ones(table.size), (np.repeat(np.arange(v), g.degree), table.ravel())), shape=(v, v))
    rows = vstack(
        [
            kron(adj, identity(t)) - kron(identity(v), csr_matrix(qm.T)),
            kron(identity(v), np.ones((1, t))),
            kron(np.ones((1, v)), identity(t)),
        ]
    ).tocsr()
    rhs = np.concatenate([np.zeros(v * t), np.ones(v), np.array(target.sizes, dtype=float)])
    lower = np.zeros(v * t)
    if target.require_contains_zero:
        lower[0] = 1
    options = {"disp": False}
    if time_limit is not None:
        options["time_limit"] = float(time_limit)
    if node_limit is not None:
        options["node_limit"] = int(node_limit)
    res = milp(
        np.zeros(v * t),
        constraints=LinearConstraint(rows, rhs, rhs),
        integrality=np.ones(v * t),
        bounds=Bounds(lower, np.ones(v * t)),
        options=options,
    )
    if res.status == 0:
        labels = np.argmax(np.round(res.x).reshape(v, t), axis=1).astype(np.int64)
        return _finish(g, target, labels, 0, t0, solver="highs")
    status = EXHAUSTED if res.status == 2 else BUDGET
    return SearchOutcome(status, seconds=time.perf_counter() - t0, extra={"solver": res.message})


def disjoint_translate_union(g: Graph, a: Code, b: Code) -> Code | None:
    """A union of ``a`` with a translate of ``b`` disjoint from it, if any.

    For two completely regular codes of covering radius one with the same
    quotient eigenvalue, such a union is again one (its indicator minus a
    constant still lies in that eigenspace). The caller re-verifies.
    """
    inside = a.mask()
    words = digit_table(g.q, g.dim).astype(np.int64)[b.vertices]
    for x in range(g.order):
        shift = np.array(index_to_digits(x, g.q, g.dim), dtype=np.int64)
        moved = indices_of((words + shift) % g.q, g.q)
        if not inside[moved].any():
            return Code(g, np.union1d(a.vertices, moved))
    return None


def find_sibling_partition(g: Graph, code: Code, budget: int = 10**6) -> tuple[EquitablePartition | None, bool]:
    """Split the last distance layer into codes with the same intersection array.

    Returns (partition, unique). The partition orders its cells as the code,
    the siblings, then the intermediate layers C^(1), ..., C^(rho-1).
    ``unique`` is True when exactly one such split exists.
    """
    res = verify_cr(g, code)
    if res is None:
        raise ValueError("the code is not completely regular")
    rho = res.rho
    if rho < 1:
        raise ValueError("the code covers the whole graph")
    layers = res.partition.cells
    far = layers[rho]
    m = len(code)
    if len(far) % m:
        return None, True
    candidates = []
    n_checked = 0
    for subset in itertools.combinations(far.tolist(), m):
        n_checked += 1
        if n_checked > budget:
            raise RuntimeError("sibling search budget exceeded")
        sib = Code(g, subset)
        r = verify_cr(g, sib)
        if r is not None and r.array == res.array:
            candidates.append(frozenset(subset))
    splits = _exact_covers(frozenset(far.tolist()), candidates)
    if not splits:
        return None, True
    cells = [code.vertices] + [np.array(sorted(s)) for s in sorted(splits[0], key=min)] + layers[1:rho]
    check = quotient_of(g, cells)
    assert check, "sibling split is not equitable"
    labels = np.empty(g.order, dtype=np.int64)
    for i, c in enumerate(cells):
        labels[c] = i
    return EquitablePartition(g, labels, check.quotient), len(splits) == 1


def _exact_covers(universe: frozenset, blocks: list[frozenset]) -> list[list[frozenset]]:
    out = []

    def rec(left, chosen):
        if not left:
            out.append(list(chosen))
            return
        x = min(left)
        for b in blocks:
            if x in b and b <= left:
                chosen.append(b)
                rec(left - b, chosen)
                chosen.pop()

    rec(universe, [])
    return out


def naive_search(g: Graph, target: SearchTarget) -> SearchOutcome:
    """Brute force over all codes containing vertex 0 of the right size (CR targets only)."""
    t0 = time.perf_counter()
    if not target.is_cr:
        raise ValueError("naive search handles CR targets only")
    if target.sizes is None:
        return SearchOutcome(EXHAUSTED)
    m = target.sizes[0]
    nodes = 0
    for rest in itertools.combinations(range(1, g.order), m - 1):
        nodes += 1
        code = Code(g, (0,) + rest)
        res = verify_cr(g, code)
        if res is not None and res.quotient == target.quotient:
            part = distance_partition(g, code)
            return SearchOutcome(FOUND, code, EquitablePartition(g, part.distances.astype(np.int64), res.quotient), nodes, time.perf_counter() - t0)
    return SearchOutcome(EXHAUSTED, nodes=nodes, seconds=time.perf_counter() - t0)


def naive_count(g: Graph, m: int) -> int:
    return math.comb(g.order - 1, m - 1)
