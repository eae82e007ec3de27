from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crcodes import constructions as cons
from crcodes.cr_engine import Code, EquitablePartition, QuotientMatrix, distance_partition
from crcodes.data import load_matrix
from crcodes.gf_space import CheckMatrix
from crcodes.graph_core import hamming_graph, syndrome_graph

from goldens import goldens
from oracles import hamming_label_quotient


def _golden(matrix: str, array: str):
    (x,) = [x for x in goldens() if x.matrix == matrix and x.array == array and not x.complement]
    return x


def _oracle_quotient(p: cons.RulePartition):
    return hamming_label_quotient(cons.all_labels(p), p.n, p.q)


def _as_lists(quotient: QuotientMatrix):
    return [list(r) for r in quotient]


@pytest.fixture(scope="module")
def cayley81_n7_lift():
    x = _golden("cayley81_n7", "{10;8}")
    return cons.lift(load_matrix("cayley81_n7"), x.code())


@pytest.fixture(scope="module")
def triangle():
    """The code {00, 11, 22} of H(2,3): quotient ((0,4),(2,2))."""
    return cons.code_partition(3, 2, ["00", "11", "22"])


def test_lift_cayley81_n7(cayley81_n7_lift):
    p = cayley81_n7_lift.partition
    assert (p.q, p.n) == (3, 7)
    assert len(cayley81_n7_lift) == 36 * 27 == 972
    assert str(cayley81_n7_lift.intersection_array) == "{10;8}"
    assert _oracle_quotient(p) == [[4, 10], [8, 6]]
    assert tuple(np.bincount(cons.all_labels(p))) == p.sizes == (972, 1215)


def test_lift_materializes_a_cr_code(cayley81_n7_lift):
    code = cayley81_n7_lift.materialize()
    dist = distance_partition(code.graph, code)
    assert dist.rho == 1 and len(code) == 972


def test_lift_cayley81_n11_exhaustively():
    x = _golden("cayley81_n11", "{21,4;2,21}")
    rc = cons.lift(load_matrix("cayley81_n11"), x.code())
    assert (rc.n, len(rc)) == (11, 6 * 3**7) == (11, 13122)
    report = cons.verify_rule(rc.partition)
    assert report.ok and report.mode == "exhaustive" and report.checked == 3**11
    assert str(rc.intersection_array) == "{21,4;2,21}"


def test_identity_lift_is_the_code_itself():
    g = hamming_graph(3, 3)
    code = Code.from_words(g, ["000", "111", "222"])
    rc = cons.lift(CheckMatrix.identity(3, 3), Code(syndrome_graph(CheckMatrix.identity(3, 3)), code.vertices))
    assert rc.materialize().vertices.tolist() == code.vertices.tolist()


def test_lift_rejects_foreign_graph(graph):
    x = _golden("cayley81_n7", "{10;8}")
    with pytest.raises(ValueError):
        cons.lift(load_matrix("cayley81_n11"), x.code())


def test_lift_sizes_scale_by_cosets():
    for x in goldens():
        if x.complement:
            continue
        H = load_matrix(x.matrix)
        if H.n > 30:
            continue
        rc = cons.lift(H, x.code())
        assert len(rc) == len(x.code()) * H.q ** (H.n - H.k)


def test_extend(cayley81_n7_lift):
    p = cayley81_n7_lift.partition
    e = cons.extend_t(p, 1)
    assert _as_lists(e.quotient) == [[6, 10], [8, 8]]
    assert _oracle_quotient(e) == [[6, 10], [8, 8]]
    same = cons.extend_t(p, 0)
    assert same.quotient == p.quotient
    assert cons.all_labels(same).tolist() == cons.all_labels(p).tolist()
    with pytest.raises(ValueError):
        cons.extend_t(p, -1)


def test_inflate_cayley81_n7_gives_20_16(cayley81_n7_lift):
    p = cons.inflate_s(cayley81_n7_lift.partition, 2)
    assert (p.n, str(p.quotient.intersection_array())) == (14, "{20;16}")
    report = cons.verify_rule(p, samples=20_000)
    assert report.ok and report.mode == "sampled"


def test_inflate_23_4_gives_46_8():
    x = _golden("srg81_24_H1", "{23;4}")
    p = cons.inflate_s(cons.lift(load_matrix("srg81_24_H1"), x.code()).partition, 2)
    assert (p.n, str(p.quotient.intersection_array())) == (24, "{46;8}")
    assert cons.verify_rule(p, samples=5_000).ok


@settings(max_examples=12, deadline=None)
@given(s=st.integers(1, 3), t=st.integers(0, 2))
def test_inflate_then_extend_stays_equitable(triangle, s, t):
    p = cons.extend_t(cons.inflate_s(triangle, s), t)
    if p.q**p.n > 3**8:
        return
    assert _oracle_quotient(p) == _as_lists(p.quotient)
    assert tuple(np.bincount(cons.all_labels(p), minlength=2)) == p.sizes


def test_split_binary_exhaustive():
    base = cons.code_partition(2, 2, ["00", "11"])
    assert _as_lists(base.quotient) == [[0, 2], [2, 0]]
    p = cons.split(base, 1)
    assert p.n == 6
    assert _as_lists(p.quotient) == [[0, 6], [2, 4]]
    assert _oracle_quotient(p) == [[0, 6], [2, 4]]
    assert cons.verify_rule(p).mode == "exhaustive"


@pytest.mark.parametrize("i", [1, 2])
def test_split_ternary_matches_predicted_quotient(triangle, i):
    p = cons.split(triangle, i)
    assert p.quotient == cons.split_quotient(0, 4, 2, 3, i)
    assert sum(p.quotient[0]) == 0 + 3 * 4 + 2 * 2 == p.degree
    assert _oracle_quotient(p) == _as_lists(p.quotient)


def test_alpha_split_cells_balance(triangle):
    p = cons.AlphaSplit(triangle)
    counts = np.bincount(cons.all_labels(p), minlength=4)
    assert counts[:3].tolist() == [counts[0]] * 3
    assert tuple(counts) == p.sizes
    assert _oracle_quotient(p) == _as_lists(p.quotient)


def test_split_10_8_gives_46_8(cayley81_n7_lift):
    """c_1 = c: {b;c} with a <= c gives {(q-i)c+qb; ic} in H(a+qb+(q-1)c)/(q-1) coordinates."""
    p = cons.split(cayley81_n7_lift.partition, 1)
    assert (p.n, str(p.quotient.intersection_array())) == (25, "{46;8}")
    assert cons.verify_rule(p, samples=3_000).ok


def test_split_rejects_bad_input(triangle, cayley81_n7_lift):
    with pytest.raises(ValueError):
        cons.split(triangle, 3)
    big_a = cons.code_partition(2, 3, ["000", "001", "010", "011"])
    assert big_a.quotient[0][0] > big_a.quotient[1][0]
    with pytest.raises(ValueError):
        cons.split(big_a, 1)
    with pytest.raises(ValueError):
        cons.split(cons.code_partition(3, 2, ["00"]), 1)


def test_as_rule_refuses_syndrome_graphs(graph):
    x = _golden("cayley81_n7", "{10;8}")
    g = graph("cayley81_n7")
    labels, quotient = cons.partition_of_code(g, x.code(g))
    with pytest.raises(ValueError):
        cons.as_rule(EquitablePartition(g, labels, quotient))


def test_rule_text_round_trip(cayley81_n7_lift, triangle):
    rules = [
        cons.split(cayley81_n7_lift.partition, 2),
        cons.extend_t(cons.inflate_s(triangle, 2), 1),
        cons.split(triangle, 1),
    ]
    rng = np.random.default_rng(0)
    for p in rules:
        back = cons.parse_rule(p.to_text())
        assert back.quotient == p.quotient and back.sizes == p.sizes and back.n == p.n
        words = rng.integers(0, p.q, size=(500, p.n), dtype=np.int8)
        assert back.labels(words).tolist() == p.labels(words).tolist()
    with pytest.raises(ValueError):
        cons.parse_rule("")
    with pytest.raises(ValueError):
        cons.parse_rule("inflate s=2")


def test_sampled_check_catches_a_wrong_quotient(triangle):
    bad = cons.Explicit(3, 2, cons.all_labels(triangle), QuotientMatrix([[1, 3], [2, 2]]))
    assert not cons.verify_rule(bad)
    assert not cons.verify_rule(bad, exhaustive=False, samples=200)
