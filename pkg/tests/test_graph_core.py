from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crcodes.data import fixtures, load_matrix
from crcodes.gf_space import CheckMatrix
from crcodes.graph_core import (
    Spectrum,
    complement,
    connecting_set_of,
    hamming_graph,
    is_connected,
    spectrum,
    srg_parameters,
    syndrome_graph,
    verify_covering,
)

from oracles import cayley_adjacency, dense_spectrum, hamming_adjacency
from oracles import srg_parameters as srg_oracle

SMALL = [name[:-2] for name, f in fixtures().items() if f.kind == "matrix" and load_matrix(name).q ** load_matrix(name).k <= 243]

# expected parameters of each fixture, complements included
SRG_TITLES = {
    "srg81_20_H1": ((81, 20, 1, 6), (81, 60, 45, 42)),
    "srg81_30_H1": ((81, 30, 9, 12), (81, 50, 31, 30)),
    "srg81_30_H2": ((81, 30, 9, 12), (81, 50, 31, 30)),
    "srg81_24_H1": ((81, 24, 9, 6), (81, 56, 37, 42)),
    "srg81_24_H2": ((81, 24, 9, 6), (81, 56, 37, 42)),
    "srg81_32_H1": ((81, 32, 13, 12), (81, 48, 27, 30)),
    "srg81_32_H2": ((81, 32, 13, 12), (81, 48, 27, 30)),
    "srg81_32_H3": ((81, 32, 13, 12), (81, 48, 27, 30)),
    "srg81_32_H4": ((81, 32, 13, 12), (81, 48, 27, 30)),
    "srg81_40_paley": ((81, 40, 19, 20), (81, 40, 19, 20)),
    **{f"srg64_27_H{i}": ((64, 27, 10, 12), (64, 36, 20, 20)) for i in range(1, 6)},
    **{f"srg64_28_H{i}": ((64, 28, 12, 12), (64, 35, 18, 20)) for i in range(1, 7)},
    "golay11": ((243, 22, 1, 2), None),
}


def test_degrees_and_orders(graph):
    assert connecting_set_of(load_matrix("cayley81_n7")).degree == 14
    assert connecting_set_of(load_matrix("cayley81_n11")).degree == 22
    g = graph("cayley81_n7")
    assert (g.order, g.degree) == (81, 14)
    h = syndrome_graph(CheckMatrix.identity(4, 3))
    assert (h.order, h.degree) == (81, 8)
    assert h.S == hamming_graph(4, 3).S


def test_cayley81_n11_graph_has_diameter_two(graph):
    g = graph("cayley81_n11")
    a = g.adjacency_matrix().astype(np.int64)
    reach = np.eye(81, dtype=np.int64) + a + a @ a
    assert (reach > 0).all()
    assert not ((np.eye(81, dtype=np.int64) + a) > 0).all()


def test_cayley81_n11_spectrum(graph):
    assert str(spectrum(graph("cayley81_n11"))) == "{22^1,10^2,4^12,1^44,-5^14,-8^8}"
    assert spectrum(graph("cayley81_n11")) == Spectrum.parse("{22^1,10^2,4^12,1^44,−5^14,−8^8}")


def test_complete_graph_spectrum():
    k9 = syndrome_graph(CheckMatrix.from_rows([[1, 0, 1, 1], [0, 1, 1, 2]], 3))
    assert k9.degree == 8
    assert str(spectrum(k9)) == "{8^1,-1^8}"


def test_brouwer_haemers_spectrum(graph):
    assert str(spectrum(graph("srg81_20_H1"))) == "{20^1,2^60,-7^20}"


@pytest.mark.parametrize("name", SMALL)
def test_spectrum_matches_dense_eigensolver(name, graph):
    H = load_matrix(name)
    expected = dense_spectrum(cayley_adjacency(H.array.astype(np.int64), H.q))
    assert dict(spectrum(graph(name))) == expected


def test_hamming_spectrum_against_dense():
    for n, q in [(3, 3), (4, 2), (2, 3)]:
        assert dict(spectrum(hamming_graph(n, q))) == dense_spectrum(hamming_adjacency(n, q))
        assert hamming_graph(n, q).degree == (q - 1) * n


@pytest.mark.parametrize("name", sorted(SRG_TITLES))
def test_srg_fixtures(name, graph):
    srg, co = SRG_TITLES[name]
    g = graph(name)
    assert tuple(srg_parameters(g)) == srg
    if co is not None:
        assert tuple(srg_parameters(complement(g))) == co
    assert len(spectrum(g)) == 3


def test_srg_detection_against_oracle(graph):
    for name in ["cayley81_n7", "cayley81_n11", "srg81_20_H1", "srg64_28_H3"]:
        H = load_matrix(name)
        got = srg_parameters(graph(name))
        assert (tuple(got) if got else None) == srg_oracle(cayley_adjacency(H.array.astype(np.int64), H.q))


def test_srg_examples(graph):
    assert srg_parameters(graph("cayley81_n7")) is None
    assert tuple(srg_parameters(hamming_graph(2, 2))) == (4, 2, 0, 2)


def test_complement_involution(graph):
    g = graph("cayley81_n11")
    assert complement(complement(g)).S == g.S
    k = complement(syndrome_graph(CheckMatrix.from_rows([[1, 0, 1, 1], [0, 1, 1, 2]], 3)))
    assert k.degree == 0


def test_connectivity(graph):
    assert is_connected(graph("cayley81_n11"))
    assert is_connected(hamming_graph(3, 3))
    low = syndrome_graph(CheckMatrix.from_rows([[1, 0, 1], [0, 1, 1], [1, 1, 2], [0, 0, 0]], 3))
    assert not is_connected(low)
    # rank 2 in F_3^4: 9 cosets of the span
    assert spectrum(low).multiplicity(low.degree) == 9


@pytest.mark.parametrize("name", ["cayley81_n7", "cayley81_n11", "srg81_20_H1"])
def test_spectrum_invariants(name, graph):
    g = graph(name)
    s = spectrum(g)
    assert s.total() == g.order
    assert s.eigenvalues[0] == g.degree
    assert (s.multiplicity(g.degree) == 1) == is_connected(g)


def test_covering():
    report = verify_covering(load_matrix("cayley81_n7"))
    assert report.ok and report.exhaustive and report.checked == 3**7
    assert verify_covering(CheckMatrix.identity(3, 3)).ok
    sampled = verify_covering(load_matrix("cayley81_n11"), exhaustive=False, samples=2000)
    assert sampled.ok and not sampled.exhaustive


@settings(max_examples=25, deadline=None)
@given(st.lists(st.lists(st.integers(0, 2), min_size=3, max_size=3), min_size=2, max_size=6))
def test_random_cayley_spectra(cols):
    pts = {}
    for c in cols:
        if any(c):
            lead = next(x for x in c if x)
            norm = tuple(x * lead % 3 for x in c)  # lead is its own inverse mod 3
            pts[norm] = c
    if not pts:
        return
    H = CheckMatrix(3, np.array(list(pts.values())).T)
    g = syndrome_graph(H)
    assert dict(spectrum(g)) == dense_spectrum(cayley_adjacency(H.array.astype(np.int64), 3))
    assert (spectrum(g).multiplicity(g.degree) == 1) == is_connected(g)
