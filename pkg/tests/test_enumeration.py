from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crcodes.data import load_matrix
from crcodes.enumeration import (
    ProjectivePointSet,
    automorphism_group_order,
    canonical_form,
    enumerate_graphs,
    equivalent,
    projective_points,
)
from crcodes.graph_core import spectrum, srg_parameters, syndrome_graph

from oracles import gl_orbit_count

CASES = [(2, 3, n) for n in range(0, 8)] + [(3, 2, n) for n in range(0, 5)]
CASES += [(2, 4, n) for n in range(3, 7)] + [(3, 3, n) for n in range(2, 6)]


@pytest.mark.parametrize("q,k,n", CASES)
def test_counts_match_orbit_oracle(q, k, n):
    for connected in (True, False):
        got = enumerate_graphs(q, k, n, connected_only=connected)
        assert len(got) == gl_orbit_count(q, k, n, connected), (q, k, n, connected)
        assert len({s.points for s in got}) == len(got)


def test_small_classes():
    assert len(enumerate_graphs(2, 2, 3)) == 1
    assert len(enumerate_graphs(3, 2, 4)) == 1
    assert enumerate_graphs(3, 2, 5) == []


def _random_gl(rng, q: int, k: int) -> np.ndarray:
    from oracles import _rank

    while True:
        m = rng.integers(0, q, size=(k, k))
        if _rank(m, q) == k:
            return m


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(0, 10**6), n=st.integers(4, 9))
def test_canonical_form_is_invariant(seed, n):
    rng = np.random.default_rng(seed)
    pts = projective_points(3, 4)
    s = ProjectivePointSet(3, 4, tuple(rng.choice(pts, size=n, replace=False).tolist()))
    image = s.transform(_random_gl(rng, 3, 4))
    assert canonical_form(image) == canonical_form(s)
    assert equivalent(s, image)
    form = canonical_form(s)
    assert canonical_form(form) == form
    assert spectrum(syndrome_graph(form.to_matrix())) == spectrum(syndrome_graph(s.to_matrix()))


def test_distinct_28_8_graphs_are_inequivalent():
    a = ProjectivePointSet.from_matrix(load_matrix("cayley81_n15_a"))
    b = ProjectivePointSet.from_matrix(load_matrix("cayley81_n15_b"))
    assert not equivalent(a, b)


def test_automorphism_orders():
    orders = {name: automorphism_group_order(ProjectivePointSet.from_matrix(load_matrix(name)))
              for name in ("srg81_30_H1", "srg81_30_H2", "srg81_24_H1", "srg81_24_H2")}
    assert orders == {"srg81_30_H1": 720, "srg81_30_H2": 36, "srg81_24_H1": 576, "srg81_24_H2": 144}


def test_no_srg_with_seven_points_in_pg33():
    classes = enumerate_graphs(3, 4, 7)
    assert len(classes) == 19
    assert all(srg_parameters(syndrome_graph(s.to_matrix())) is None for s in classes)


def test_rejects_large_spaces():
    with pytest.raises(ValueError):
        enumerate_graphs(3, 6, 7)
    with pytest.raises(ValueError):
        ProjectivePointSet.from_vectors([[1, 0], [2, 0]], 3, 2)
