import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qutrit_dsd import linalg
from qutrit_dsd.errors import NotHermitian
from qutrit_dsd.states import PSI_PLUS, projector, random_unitary, realign


def random_hermitian(rng, n):
    x = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return 0.5 * (x + x.conj().T)


def charpoly_roots(h, n_grid=40001):
    """Eigenvalues as sign changes of det(H - lambda I), refined by bisection."""
    n = h.shape[0]
    bound = np.linalg.norm(h) + 1.0
    det = lambda lam: np.linalg.det(h - lam * np.eye(n)).real  # noqa: E731
    grid = np.linspace(-bound, bound, n_grid)
    vals = np.array([det(x) for x in grid])
    roots = []
    for k in np.flatnonzero(np.sign(vals[:-1]) != np.sign(vals[1:])):
        lo, hi = grid[k], grid[k + 1]
        for _ in range(60):
            mid = 0.5 * (lo + hi)
            if np.sign(det(mid)) == np.sign(det(lo)):
                lo = mid
            else:
                hi = mid
        roots.append(0.5 * (lo + hi))
    return np.array(roots)


def test_identity_eigenvalues():
    np.testing.assert_array_equal(linalg.hermitian_eigenvalues(np.eye(9)), np.ones(9))


def test_diagonal_sorted():
    np.testing.assert_array_equal(linalg.hermitian_eigenvalues(np.diag([3.0, -2.0, 0.0])), [-2.0, 0.0, 3.0])


@pytest.mark.parametrize("n", [2, 3, 4])
def test_eigenvalues_match_characteristic_polynomial(rng, n):
    h = random_hermitian(rng, n)
    roots = charpoly_roots(h)
    assert len(roots) == n
    np.testing.assert_allclose(linalg.hermitian_eigenvalues(h), np.sort(roots), atol=1e-9)


def test_rejects_non_hermitian():
    with pytest.raises(NotHermitian):
        linalg.hermitian_eigenvalues(np.array([[1.0, 1.0], [0.0, 1.0]]))


def test_symmetrizes_within_tolerance():
    m = np.array([[1.0, 0.5 + 1e-12], [0.5, 2.0]])
    w = linalg.hermitian_eigenvalues(m)
    assert np.all(np.isreal(w)) and w.shape == (2,)


def test_eigenvectors_diagonalize(rng):
    h = random_hermitian(rng, 9)
    w, v = linalg.jacobi_eigh(h, vectors=True)
    np.testing.assert_allclose(h @ v, v * w, atol=1e-12)
    np.testing.assert_allclose(v.conj().T @ v, np.eye(9), atol=1e-12)


def test_decoupled_block_keeps_relative_accuracy():
    # tiny 2x2 block next to an O(1) entry: eigenvalue -1e-16 * 0.5 must survive
    m = np.zeros((3, 3))
    m[0, 0] = 1.0
    m[1:, 1:] = 1e-16 * np.array([[0.5, 1.0], [1.0, 0.5]])
    w = linalg.hermitian_eigenvalues(m)
    assert w[0] == pytest.approx(-0.5e-16, rel=1e-12)


def test_coupled_blocks():
    m = np.zeros((4, 4))
    m[0, 2] = m[2, 0] = 1.0
    m[1, 1] = m[3, 3] = 1.0
    blocks = linalg.coupled_blocks(m)
    assert [b.tolist() for b in blocks] == [[0, 2], [1], [3]]


def test_singular_values_identity_and_zero():
    np.testing.assert_allclose(linalg.singular_values(np.eye(9)), np.ones(9))
    np.testing.assert_array_equal(linalg.singular_values(np.zeros((4, 4))), np.zeros(4))


def test_singular_values_from_gram_oracle(rng):
    m = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    gram = m.conj().T @ m
    expected = np.sqrt(np.sort(np.linalg.eigvalsh(gram))[::-1])
    np.testing.assert_allclose(linalg.singular_values(m), expected, atol=1e-12)


def test_singular_values_rectangular(rng):
    m = rng.normal(size=(2, 5))
    s = linalg.singular_values(m)
    assert s.shape == (2,)
    np.testing.assert_allclose(s, np.linalg.svd(m, compute_uv=False), atol=1e-12)


def test_trace_norm_examples(rng):
    assert linalg.trace_norm(np.eye(9)) == pytest.approx(9.0)
    g = rng.normal(size=(9, 9)) + 1j * rng.normal(size=(9, 9))
    rho = g @ g.conj().T
    rho /= np.trace(rho).real
    assert linalg.trace_norm(rho) == pytest.approx(1.0, abs=1e-12)


def test_trace_norm_of_realigned_maximally_entangled():
    # |Psi+> is a permuted Schmidt form with three 1/sqrt(3) coefficients; its
    # realignment is a sum of nine orthogonal rank-one terms of weight 1/3.
    r = realign(projector(PSI_PLUS))
    oracle = np.sqrt(np.clip(np.linalg.eigvalsh(r.conj().T @ r), 0, None)).sum()
    assert oracle == pytest.approx(3.0, abs=1e-12)
    assert linalg.trace_norm(r) == pytest.approx(3.0, abs=1e-12)


def test_kron():
    np.testing.assert_array_equal(linalg.kron(np.eye(3), np.eye(3)), np.eye(9))
    k = linalg.kron(np.diag([1, 0, 0]), np.diag([0, 1, 0]))
    expected = np.zeros((9, 9))
    expected[1, 1] = 1.0
    np.testing.assert_array_equal(k, expected)


def test_kron_trace(rng):
    a = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    b = rng.normal(size=(4, 4))
    assert np.trace(linalg.kron(a, b)) == pytest.approx(np.trace(a) * np.trace(b))


seeds = st.integers(min_value=0, max_value=2**32 - 1)


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(min_value=1, max_value=9))
def test_eigenvalue_sum_is_trace(seed, n):
    h = random_hermitian(np.random.default_rng(seed), n)
    assert linalg.hermitian_eigenvalues(h).sum() == pytest.approx(np.trace(h).real, abs=1e-10)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_singular_values_unitarily_invariant(seed):
    rng = np.random.default_rng(seed)
    m = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    u, v = random_unitary(rng, 3), random_unitary(rng, 3)
    np.testing.assert_allclose(linalg.singular_values(u @ m @ v), linalg.singular_values(m), atol=1e-10)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_trace_norm_bounds_trace(seed):
    rng = np.random.default_rng(seed)
    m = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    assert linalg.trace_norm(m) >= abs(np.trace(m)) - 1e-12


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_spectrum_invariant_under_conjugation(seed):
    rng = np.random.default_rng(seed)
    h = random_hermitian(rng, 9)
    u = random_unitary(rng, 9)
    np.testing.assert_allclose(
        linalg.hermitian_eigenvalues(u @ h @ u.conj().T), linalg.hermitian_eigenvalues(h), atol=1e-10
    )
