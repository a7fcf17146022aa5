import itertools

import pytest
from hypothesis import given

from ddyck import (
    DyckPath,
    SetPartition,
    bell_d,
    catalan,
    count_d_dyck,
    d_dyck_to_ncd,
    enumerate_d_dyck,
    enumerate_dyck,
    enumerate_set_partitions,
    graph_representation,
    is_d_dyck,
    is_ncd_member,
    is_non_crossing,
    is_pid_member,
    ncd_to_d_dyck,
    phi,
    phi_inverse,
    reflect,
    reverse_partition,
)
from ddyck.errors import CrossingPartition, InvalidPartition, NotDDyck, NotNcdMember

from conftest import dyck_paths, set_partitions
from test_dyck import EXAMPLE_13

P = SetPartition.from_blocks
PHI_EXAMPLE = "UUUUDDUUUUUDUDDDDDDD"
NC2_13 = P([[1, 2], [3, 12, 13], [4, 9, 10, 11], [5, 7, 8], [6]])


def crosses_brute(p):
    arcs = graph_representation(p)
    return any(a < c < b < d for (a, b), (c, d) in itertools.permutations(arcs, 2))


def brute_partitions(n):
    """Partitions of [n] by inserting elements one at a time (not via growth strings)."""
    parts = [[]]
    for v in range(1, n + 1):
        nxt = []
        for blocks in parts:
            for i in range(len(blocks)):
                nxt.append(blocks[:i] + [blocks[i] + [v]] + blocks[i + 1 :])
            nxt.append(blocks + [[v]])
        parts = nxt
    return {SetPartition(n, tuple(tuple(b) for b in blocks)) for blocks in parts}


def test_canonical_order():
    p = P([[5, 8], [3], [7, 2, 6], [4, 1]])
    assert p.blocks == ((1, 4), (2, 6, 7), (3,), (5, 8))
    assert p.to_json() == "[[1,4],[2,6,7],[3],[5,8]]"


@pytest.mark.parametrize("blocks", [[[1, 2], [2, 3]], [[1, 3]], [[1], []]])
def test_invalid(blocks):
    with pytest.raises(InvalidPartition):
        P(blocks)


def test_graph_representation():
    assert graph_representation(P([[1, 4], [2, 6, 7], [3], [5, 8]])) == {(1, 4), (2, 6), (6, 7), (5, 8)}
    assert graph_representation(P([[1], [2], [3]])) == frozenset()
    g = graph_representation(P([[1, 2, 5, 6, 7, 8, 10], [3, 4], [9]]))
    assert len(g) == 6 + 1 + 0 == 10 - 3


def test_crossing_examples():
    assert is_non_crossing(P([[1, 2, 5, 6, 7, 8, 10], [3, 4], [9]]))
    assert not is_non_crossing(P([[1, 3], [2, 4]]))


@pytest.mark.parametrize("n", range(10))
def test_non_crossing_count_is_catalan(n):
    assert sum(1 for p in enumerate_set_partitions(n) if is_non_crossing(p)) == catalan(n)


@given(set_partitions(max_n=14))
def test_crossing_matches_arc_definition(p):
    assert is_non_crossing(p) == (not crosses_brute(p))


def test_enumerate_set_partitions_n3():
    got = list(enumerate_set_partitions(3))
    assert [q.to_json() for q in got] == [
        "[[1,2,3]]",
        "[[1,2],[3]]",
        "[[1,3],[2]]",
        "[[1],[2,3]]",
        "[[1],[2],[3]]",
    ]
    assert list(enumerate_set_partitions(0)) == [SetPartition(0, ())]


@pytest.mark.parametrize("n", range(8))
def test_enumerate_set_partitions_complete(n):
    got = list(enumerate_set_partitions(n))
    assert len(got) == len(set(got))
    assert set(got) == brute_partitions(n)


def test_bell_10():
    assert sum(1 for _ in enumerate_set_partitions(10)) == 115975


def test_phi_example():
    assert phi(DyckPath(PHI_EXAMPLE)) == P([[1, 2, 5, 6, 7, 8, 10], [3, 4], [9]])
    assert phi_inverse(P([[1, 2, 5, 6, 7, 8, 10], [3, 4], [9]])).word == PHI_EXAMPLE


@pytest.mark.parametrize("n", range(1, 8))
def test_phi_extremes(n):
    assert phi(DyckPath("U" * n + "D" * n)) == P([range(1, n + 1)])
    assert phi(DyckPath("UD" * n)) == P([[i] for i in range(1, n + 1)])
    assert phi_inverse(P([range(1, n + 1)])).word == "U" * n + "D" * n


@pytest.mark.parametrize("n", range(1, 10))
def test_phi_bijection(n):
    paths = list(enumerate_dyck(n))
    image = [phi(p) for p in paths]
    assert len(set(image)) == len(image) == catalan(n)
    assert all(is_non_crossing(q) for q in image)
    assert all(phi_inverse(q) == p for p, q in zip(paths, image))


def test_phi_inverse_rejects_crossing():
    with pytest.raises(CrossingPartition):
        phi_inverse(P([[1, 3], [2, 4]]))


def test_reverse_example():
    src = P([[1, 2, 11], [3, 4, 5, 10], [6, 7, 9], [8], [12, 13]])
    assert reverse_partition(src) == NC2_13
    singles = P([[1], [2], [3]])
    assert reverse_partition(singles) == singles


@given(set_partitions())
def test_reverse_involution(p):
    r = reverse_partition(p)
    assert reverse_partition(r) == p
    assert len(r) == len(p)
    assert is_non_crossing(r) == is_non_crossing(p)


def test_ncd_examples():
    assert is_ncd_member(NC2_13, 2)
    assert not is_ncd_member(NC2_13, 3)
    assert is_ncd_member(P([[1, 2], [3]]), 9)
    assert not is_ncd_member(P([[1, 3], [2, 4]]), 1)


def test_pid_examples():
    assert is_pid_member(P([[1], [2, 10, 11], [3, 8, 9], [4, 6, 7], [5]]), 2)
    assert all(is_pid_member(q, 0) for q in enumerate_set_partitions(6))


def test_d_dyck_to_ncd_example():
    p = DyckPath(EXAMPLE_13)
    assert phi(reflect(p)) == P([[1, 2, 11], [3, 4, 5, 10], [6, 7, 9], [8], [12, 13]])
    assert d_dyck_to_ncd(p, 2) == NC2_13
    assert ncd_to_d_dyck(NC2_13, 2) == p


@pytest.mark.parametrize("n", range(1, 8))
def test_ncd_extremes(n):
    top = DyckPath("U" * n + "D" * n)
    assert d_dyck_to_ncd(top, 3) == P([range(1, n + 1)])
    assert ncd_to_d_dyck(P([range(1, n + 1)]), 3) == top


def test_ncd_errors():
    with pytest.raises(NotDDyck):
        d_dyck_to_ncd(DyckPath("UDUDUD"), 2)
    with pytest.raises(NotNcdMember):
        ncd_to_d_dyck(P([[1, 3], [2, 4]]), 1)


@pytest.mark.parametrize("d", [1, 2, 3])
@pytest.mark.parametrize("n", range(1, 9))
def test_ncd_bijection_exhaustive(n, d):
    brute = {q for q in brute_partitions(n) if not crosses_brute(q) and is_ncd_member(q, d)}
    paths = list(enumerate_d_dyck(n, d))
    image = [d_dyck_to_ncd(p, d) for p in paths]
    assert len(set(image)) == len(image)
    assert set(image) == brute
    assert len(brute) == count_d_dyck(n, d)
    for p, q in zip(paths, image):
        assert ncd_to_d_dyck(q, d) == p
        assert len(q) == len(p.valleys) + 1


@given(dyck_paths(max_n=11))
def test_ncd_roundtrip_random(p):
    for d in (1, 2, 3):
        if p.semilength and is_d_dyck(p, d):
            q = d_dyck_to_ncd(p, d)
            assert is_ncd_member(q, d) and is_pid_member(q, d)
            assert ncd_to_d_dyck(q, d) == p


TABLE = {
    0: [1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975],
    1: [1, 1, 2, 4, 9, 23, 65, 199, 654, 2296, 8569],
    2: [1, 1, 2, 4, 8, 17, 40, 104, 291, 857, 2634],
    3: [1, 1, 2, 4, 8, 16, 33, 73, 177, 467, 1309],
    4: [1, 1, 2, 4, 8, 16, 32, 65, 138, 315, 782],
}


@pytest.mark.parametrize("d", range(5))
def test_bell_d_table(d):
    assert [bell_d(n, d) for n in range(11)] == TABLE[d]


@pytest.mark.parametrize("n", range(9))
def test_bell_d_bruteforce(n):
    parts = brute_partitions(n)
    for d in range(5):
        assert bell_d(n, d) == sum(1 for q in parts if is_pid_member(q, d))


@pytest.mark.parametrize("n", range(1, 13))
def test_bell_d_large_d(n):
    for d in range(n, n + 4):
        assert bell_d(n, d) == 2 ** (n - 1)


def test_bell_d_negative_n():
    assert bell_d(-3, 2) == bell_d(0, 2) == bell_d(1, 5) == 1


@pytest.mark.parametrize("n", range(9))
def test_ncd_subset_of_pid(n):
    for q in enumerate_set_partitions(n):
        for d in (1, 2, 3):
            if is_ncd_member(q, d):
                assert is_pid_member(q, d)


def test_json_roundtrip():
    assert SetPartition.from_json(NC2_13.to_json()) == NC2_13
    with pytest.raises(InvalidPartition):
        SetPartition.from_json('[[1,"2"]]')
    with pytest.raises(InvalidPartition):
        SetPartition.from_json('{"a":1}')
