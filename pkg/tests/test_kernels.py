import random

import pytest

from salient import _kernels, _pykernels
from salient.posets import all_natural_posets
from salient.words import descent_set

try:
    from salient import _ckernels
except ImportError:
    _ckernels = None

needs_compiled = pytest.mark.skipif(_ckernels is None,
                                    reason="compiled kernels not built")


def test_backend_selected():
    assert _kernels.BACKEND in ("python", "c")
    assert "python" in _kernels.backends()


def test_edge_cases():
    assert _kernels.descent_vector(0, ()) == [1]
    assert _kernels.natural_flag_vectors(0, ()) == ([1], [1])
    assert _kernels.descent_vector(1, (0,)) == [1]
    assert _kernels.natural_flag_vectors(1, (0,)) == ([1], [1])
    assert _kernels.zeta_vector([1, 2], 1) == [1, 3]


def test_descent_vector_against_direct_enumeration():
    for n in range(7):
        for q in all_natural_posets(n):
            vec = _kernels.descent_vector(q.n, q.down)
            direct = [0] * max(1, 1 << max(n - 1, 0))
            for w in q.linear_extensions():
                mask = 0
                for i in descent_set(w):
                    mask |= 1 << (i - 1)
                direct[mask] += 1
            assert vec == direct


def test_pure_flag_vectors_match_lattice():
    for n in range(6):
        for q in all_natural_posets(n):
            alpha, beta = _pykernels.natural_flag_vectors(q.n, q.down)
            J = q.ideals_lattice()
            assert alpha == J.flag_alpha_vector()
            assert beta == J.flag_beta_vector()


def test_zeta_inverts_moebius():
    rng = random.Random(2)
    for nbits in range(6):
        vec = [rng.randint(-9, 9) for _ in range(1 << nbits)]
        transformed = _pykernels.zeta_vector(vec, nbits)
        # subtract the strict-subset sums back off
        recovered = list(transformed)
        for b in range(nbits):
            bit = 1 << b
            for s in range(len(recovered)):
                if s & bit:
                    recovered[s] -= recovered[s ^ bit]
        assert recovered == vec


@needs_compiled
def test_backend_parity_exhaustive():
    for n in range(6):
        for q in all_natural_posets(n):
            assert (_pykernels.descent_vector(q.n, q.down)
                    == _ckernels.descent_vector(q.n, q.down))
            assert (_pykernels.natural_flag_vectors(q.n, q.down)
                    == _ckernels.natural_flag_vectors(q.n, q.down))


@needs_compiled
def test_backend_parity_sampled():
    rng = random.Random(3)
    for n in (6, 7):
        sweep = all_natural_posets(n)
        for q in rng.sample(sweep, 200):
            assert (_pykernels.descent_vector(q.n, q.down)
                    == _ckernels.descent_vector(q.n, q.down))
            assert (_pykernels.natural_flag_vectors(q.n, q.down)
                    == _ckernels.natural_flag_vectors(q.n, q.down))
            vec = _pykernels.natural_flag_vectors(q.n, q.down)[1]
            assert (_pykernels.zeta_vector(vec, n - 1)
                    == _ckernels.zeta_vector(vec, n - 1))


@needs_compiled
def test_compiled_range_guard():
    with pytest.raises(ValueError):
        _ckernels.descent_vector(15, (0,) * 15)
    # the dispatcher falls back to pure python past the compiled range
    down = tuple((1 << max(i - 1, 0)) - 1 for i in range(15))
    vec = _kernels.descent_vector(15, down)
    assert sum(vec) == 987
