import json
from math import comb

import numpy as np
import pytest

from trilat.errors import DomainError, ResourceGuardError
from trilat.lattice import (
    TAG_A, TAG_B, CountTable, DomainSpec, LatticeWalk, StepSet, count_walks, enumerate_walks,
    map_to_strip_pair, neighbors, walk_from_positions,
)


def test_domain_point_count():
    for d in (1, 2, 3, 4):
        for L in range(6):
            dom = DomainSpec(d, L)
            assert len(dom.points) == comb(L + d, d) == len(dom)
            assert all(sum(p) == L and min(p) >= 0 for p in dom.points)


def test_domain_rejects_bad_parameters():
    with pytest.raises(DomainError):
        DomainSpec(0, 1)
    with pytest.raises(DomainError):
        DomainSpec(2, -1)
    with pytest.raises(DomainError):
        DomainSpec(2, 2).check_point((1, 0, 0))


def test_stepset_shape():
    for d in (1, 2, 3):
        ss = StepSet.standard(d)
        assert len(ss) == d * (d + 1)
        for vec, _ in ss:
            assert sorted(vec) == [-1] + [0] * (d - 1) + [1]
    tags = dict(StepSet.standard(2).steps)
    assert {v for v, t in tags.items() if t == TAG_A} == {(1, 0, -1), (-1, 1, 0), (0, -1, 1)}
    assert {v for v, t in tags.items() if t == TAG_B} == {(1, -1, 0), (-1, 0, 1), (0, 1, -1)}
    assert all(t == TAG_A for _, t in StepSet.standard(3))


def test_neighbors_examples():
    assert neighbors((1, 0, 0), StepSet.standard(2)) == [((0, 1, 0), TAG_A), ((0, 0, 1), TAG_B)]
    assert len(neighbors((1, 1, 1), StepSet.standard(2))) == 6
    assert [q for q, _ in neighbors((1, 1), StepSet.standard(1))] == [(2, 0), (0, 2)]


def test_count_walks_examples():
    assert count_walks(DomainSpec(2, 1), (1, 0, 0), 4).totals() == [1, 2, 4, 8, 16]
    assert count_walks(DomainSpec(2, 2), (2, 0, 0), 3).totals() == [1, 2, 8, 24]
    t = count_walks(DomainSpec(2, 3), (3, 0, 0), 4)
    assert [t.total(n, p=n) for n in range(5)] == [1, 1, 2, 4, 8]


def test_count_walks_matches_enumeration_for_tag_a_only():
    dom = DomainSpec(2, 3)
    t = count_walks(dom, (3, 0, 0), 6)
    for n in range(7):
        assert t.total(n, p=n) == len(enumerate_walks(dom, (3, 0, 0), n, TAG_A))
        assert t.total(n, p=0) == len(enumerate_walks(dom, (3, 0, 0), n, TAG_B))


def test_count_table_basic_invariants():
    dom = DomainSpec(2, 3)
    for start in dom.points:
        t = count_walks(dom, start, 5)
        assert t.count(0, start, 0) == 1
        assert t.total(0) == 1
        assert t.total(1) == len(neighbors(start, StepSet.standard(2)))
        assert all(c > 0 and 0 <= p <= n for n, _, p, c in t.entries())


def test_count_walks_rejects_foreign_start():
    with pytest.raises(DomainError):
        count_walks(DomainSpec(2, 2), (1, 0, 0), 3)


def test_enumerate_walks_examples():
    dom = DomainSpec(2, 1)
    assert [w.steps for w in enumerate_walks(dom, (1, 0, 0), 0)] == [()]
    assert len(enumerate_walks(dom, (1, 0, 0), 2)) == 4
    (cycle,) = enumerate_walks(dom, (1, 0, 0), 3, TAG_A)
    assert cycle.positions == [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 0, 0)]


def test_enumerate_walks_guard(monkeypatch):
    dom = DomainSpec(2, 2)
    with pytest.raises(ResourceGuardError):
        enumerate_walks(dom, (2, 0, 0), 4, guard=79)
    assert len(enumerate_walks(dom, (2, 0, 0), 4, guard=80)) == 80
    monkeypatch.setenv("TRILAT_GUARD_LIMIT", "5")
    with pytest.raises(ResourceGuardError):
        enumerate_walks(dom, (2, 0, 0), 3)


def _transfer_matrix_totals(dom, start, n_max):
    """Independent oracle: powers of the 0/1 adjacency matrix with exact object entries."""
    pts = dom.points
    idx = {p: i for i, p in enumerate(pts)}
    M = np.zeros((len(pts), len(pts)), dtype=object)
    for p in pts:
        for vec, _ in StepSet.standard(dom.d):
            q = tuple(a + b for a, b in zip(p, vec))
            if min(q) >= 0:
                M[idx[p], idx[q]] += 1
    row = np.zeros(len(pts), dtype=object)
    row[idx[start]] = 1
    out = []
    for _ in range(n_max + 1):
        out.append(int(row.sum()))
        row = row.dot(M)
    return out


@pytest.mark.parametrize("d", [1, 2, 3])
@pytest.mark.parametrize("L", [0, 1, 2, 3])
def test_dp_totals_equal_enumeration(d, L):
    dom = DomainSpec(d, L)
    for start in dom.points:
        table = count_walks(dom, start, 8)
        for n in range(9):
            if table.total(n) <= 50_000:
                walks = enumerate_walks(dom, start, n)
                assert len(walks) == table.total(n)
                assert len(set(walks)) == len(walks)
                for w in walks:
                    assert all(sum(p) == L and min(p) >= 0 for p in w.positions)
        # the largest d=3 cases run to millions of walks; a matrix-power oracle covers them
        assert table.totals() == _transfer_matrix_totals(dom, start, 8)


def test_enumerated_walks_are_tag_resolved_correctly():
    dom = DomainSpec(2, 2)
    table = count_walks(dom, (1, 1, 0), 5)
    for n in range(6):
        tally = {}
        for w in enumerate_walks(dom, (1, 1, 0), n):
            key = (w.end, w.tag_count(TAG_A))
            tally[key] = tally.get(key, 0) + 1
        assert tally == {(e, p): table.count(n, e, p) for e, row in table.endpoint_by_p(n).items()
                         for p, c in enumerate(row) if c}


@pytest.mark.parametrize("L", range(6))
def test_binomial_factorization_of_totals(L):
    dom = DomainSpec(2, L)
    for start in dom.points:
        table = count_walks(dom, start, 12)
        for n in range(13):
            row = table.by_p(n)
            assert row == [comb(n, p) * row[n] for p in range(n + 1)]


def test_binomial_factorization_fails_endpoint_resolved():
    # holds for totals only: one step from the unit-triangle corner reaches
    # (0,1,0) by an A step and never by a B step
    table = count_walks(DomainSpec(2, 1), (1, 0, 0), 1)
    assert table.endpoint_by_p(1)[(0, 1, 0)] == [0, 1]


@pytest.mark.parametrize("L", range(5))
def test_tag_swap_reverses_p(L):
    dom = DomainSpec(2, L)
    swapped = StepSet.standard(2).swapped()
    for start in dom.points:
        a = count_walks(dom, start, 8)
        b = count_walks(dom, start, 8, stepset=swapped)
        for n in range(9):
            assert b.by_p(n) == a.by_p(n)[::-1]


def test_strip_pair_examples():
    ss = StepSet.standard(2)
    assert map_to_strip_pair(LatticeWalk((1, 1, 1), (), ss)) == ([1], [2])
    w = walk_from_positions([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert map_to_strip_pair(w) == ([1, 0, 0], [1, 1, 0])
    with pytest.raises(DomainError):
        map_to_strip_pair(walk_from_positions([(1, 0), (0, 1)]))


def test_strip_pair_confined_and_non_crossing():
    dom = DomainSpec(2, 10)
    rng = np.random.default_rng(7)
    ss = StepSet.standard(2)
    for _ in range(200):
        pos = tuple(int(x) for x in rng.multinomial(10, [1 / 3] * 3))
        path = [pos]
        for _ in range(10):
            options = [q for q, _ in neighbors(path[-1], ss)]
            path.append(options[rng.integers(len(options))])
        lower, upper = map_to_strip_pair(walk_from_positions(path))
        assert all(0 <= lo <= up <= dom.L for lo, up in zip(lower, upper))
        assert all(abs(a - b) <= 1 for a, b in zip(lower, lower[1:]))
        assert all(abs(a - b) <= 1 for a, b in zip(upper, upper[1:]))


def test_walk_rejects_leaving_domain():
    ss = StepSet.standard(2)
    k = [v for v, _ in ss.steps].index((1, -1, 0))
    with pytest.raises(DomainError):
        LatticeWalk((1, 0, 0), (k,), ss)


def test_count_table_json_roundtrip():
    table = count_walks(DomainSpec(2, 2), (1, 0, 1), 6)
    data = json.loads(json.dumps(table.to_dict()))
    assert list(data) == ["d", "L", "start", "n_max", "entries"]
    assert all(isinstance(e["count"], str) for e in data["entries"])
    assert data["entries"][0] == {"n": 0, "end": [1, 0, 1], "p": 0, "count": "1"}
    assert CountTable.from_dict(data) == table


def test_large_counts_stay_exact():
    # 6**30 overflows int64, so this runs on the object-array path
    table = count_walks(DomainSpec(2, 30), (10, 10, 10), 30)
    assert table.total(30) > 2**63
    assert table.total(30) == _transfer_matrix_totals(DomainSpec(2, 30), (10, 10, 10), 30)[30]
