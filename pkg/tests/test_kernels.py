import numpy as np
import pytest

from trilat import _kernels
from trilat.lattice import DomainSpec, _adjacency, StepSet, count_walks

needs_numba = pytest.mark.skipif(_kernels.njit is None, reason="numba not installed")


@needs_numba
@pytest.mark.parametrize("d,L", [(1, 4), (2, 0), (2, 3), (2, 6), (3, 2)])
def test_backends_agree(d, L):
    dom = DomainSpec(d, L)
    nbr, tag = _adjacency(dom, StepSet.standard(d))
    for start in range(len(dom.points)):
        a = _kernels.propagate(nbr, tag, start, 12, backend="numba")
        b = _kernels.propagate(nbr, tag, start, 12, backend="numpy")
        assert a.dtype == np.int64 and b.dtype == object
        assert (a == b.astype(np.int64)).all()


@needs_numba
def test_numba_refuses_overflowing_size():
    nbr, tag = _adjacency(DomainSpec(2, 3), StepSet.standard(2))
    with pytest.raises(OverflowError):
        _kernels.propagate(nbr, tag, 0, 30, backend="numba")


def test_env_flag_forces_numpy(monkeypatch):
    monkeypatch.setenv("TRILAT_DISABLE_NUMBA", "1")
    assert not _kernels.numba_enabled()
    nbr, tag = _adjacency(DomainSpec(2, 2), StepSet.standard(2))
    assert _kernels.propagate(nbr, tag, 0, 4).dtype == object


def test_count_walks_same_on_both_backends(monkeypatch):
    dom = DomainSpec(2, 4)
    ref = count_walks(dom, (2, 1, 1), 10, backend="numpy")
    monkeypatch.setenv("TRILAT_DISABLE_NUMBA", "1")
    assert count_walks(dom, (2, 1, 1), 10) == ref
    monkeypatch.delenv("TRILAT_DISABLE_NUMBA")
    assert count_walks(dom, (2, 1, 1), 10) == ref
