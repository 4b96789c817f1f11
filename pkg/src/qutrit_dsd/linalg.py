"""Small dense complex linear algebra.

Everything here works on plain ``numpy`` arrays.  Eigenvalues come from a
cyclic complex Jacobi solver; singular values are square roots of the
eigenvalues of the Gram matrix.  Dimensions in this package never exceed 9,
so the solver favours accuracy over speed.

Before diagonalising, a Hermitian matrix is split into the connected
components of its sparsity pattern (exact zeros only).  The spectrum is the
union of the block spectra, so this is exact, and it lets tiny eigenvalues
living in tiny decoupled blocks keep full relative accuracy.
"""

import math

import numpy as np

from .errors import NoConvergence, NotHermitian

HERMITIAN_TOL = 1e-10
MAX_SWEEPS = 100
OFF_DIAGONAL_TOL = 1e-14


def as_matrix(m):
    """Return ``m`` as a 2-D complex array, rejecting NaN/Inf."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    return a


def hermitian_defect(m):
    """Largest absolute entry of ``m - m^dagger``."""
    a = np.asarray(m)
    return float(np.max(np.abs(a - a.conj().T))) if a.size else 0.0


def symmetrize(m, tol=HERMITIAN_TOL):
    """Check Hermiticity within ``tol`` and return ``(m + m^dagger) / 2``."""
    a = as_matrix(m)
    if a.shape[0] != a.shape[1]:
        raise NotHermitian(f"matrix is not square: {a.shape}")
    defect = hermitian_defect(a)
    if defect > tol:
        raise NotHermitian(f"max |m - m^dagger| = {defect:.3g} exceeds {tol:.3g}")
    return 0.5 * (a + a.conj().T)


def coupled_blocks(m):
    """Index sets of the connected components of the nonzero pattern of ``m``.

    Two indices are linked when ``m[i, j] != 0`` or ``m[j, i] != 0``.  Blocks
    are returned in order of their smallest index.
    """
    a = np.asarray(m)
    n = a.shape[0]
    linked = (a != 0) | (a.T != 0)
    seen = np.zeros(n, dtype=bool)
    blocks = []
    for start in range(n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        members = []
        while stack:
            i = stack.pop()
            members.append(i)
            for j in np.flatnonzero(linked[i] & ~seen):
                seen[j] = True
                stack.append(int(j))
        blocks.append(np.array(sorted(members)))
    return blocks


try:
    from numba import njit
except ImportError:  # pragma: no cover - slow but correct fallback
    def njit(**_kwargs):
        return lambda f: f


@njit(cache=True)
def _jacobi_sweeps(a, v, max_sweeps, off_tol):
    """Run cyclic sweeps on ``a`` in place; returns sweeps used or -1."""
    n = a.shape[0]
    scale = 0.0
    for i in range(n):
        for j in range(n):
            scale += a[i, j].real ** 2 + a[i, j].imag ** 2
    scale = math.sqrt(scale)
    for sweep in range(max_sweeps):
        off = 0.0
        for i in range(n):
            for j in range(n):
                if i != j:
                    off += a[i, j].real ** 2 + a[i, j].imag ** 2
        if math.sqrt(off) <= off_tol * scale:
            return sweep
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                if mag == 0.0:
                    continue
                app = a[p, p].real
                aqq = a[q, q].real
                if mag <= off_tol * math.sqrt(abs(app * aqq)):
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    continue
                rotated = True
                phase = apq / mag
                pc = phase.conjugate()
                theta = (aqq - app) / (2.0 * mag)
                if abs(theta) > 1e150:
                    t = 0.5 / abs(theta)
                else:
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                # a <- u^dagger a u, u = diag(1, conj(phase)) [[c, s], [-s, c]]
                for k in range(n):
                    xp = a[k, p]
                    xq = a[k, q]
                    a[k, p] = c * xp - s * pc * xq
                    a[k, q] = s * xp + c * pc * xq
                for k in range(n):
                    xp = a[p, k]
                    xq = a[q, k]
                    a[p, k] = c * xp - s * phase * xq
                    a[q, k] = s * xp + c * phase * xq
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = app - t * mag
                a[q, q] = aqq + t * mag
                if v.shape[0] == n:
                    for k in range(n):
                        xp = v[k, p]
                        xq = v[k, q]
                        v[k, p] = c * xp - s * pc * xq
                        v[k, q] = s * xp + c * pc * xq
        if not rotated:
            return sweep
    return -1


def jacobi_eigh(m, vectors=False, max_sweeps=MAX_SWEEPS):
    """Cyclic Jacobi diagonalisation of a Hermitian matrix (no checks).

    An off-diagonal entry is treated as converged once
    ``|a_pq| <= 1e-14 * sqrt(|a_pp a_qq|)``; iteration stops when a sweep
    makes no rotation or the off-diagonal Frobenius norm drops below
    ``1e-14`` times the matrix norm.  Returns the unsorted eigenvalues (and
    the eigenvector matrix when ``vectors``).
    """
    a = np.array(m, dtype=np.complex128)
    n = a.shape[0]
    v = np.eye(n, dtype=np.complex128) if vectors else np.zeros((0, 0), dtype=np.complex128)
    if _jacobi_sweeps(a, v, max_sweeps, OFF_DIAGONAL_TOL) < 0:
        raise NoConvergence(f"Jacobi did not converge in {max_sweeps} sweeps")
    w = np.diag(a).real.copy()
    return (w, v) if vectors else w


def block_spectra(m, tol=HERMITIAN_TOL):
    """Eigenvalues of each decoupled block of a Hermitian matrix.

    Returns a list of ``(indices, eigenvalues_ascending, block_norm)`` where
    ``block_norm`` is the Frobenius norm of the block.
    """
    a = symmetrize(m, tol)
    out = []
    for idx in coupled_blocks(a):
        block = a[np.ix_(idx, idx)]
        w = np.sort(jacobi_eigh(block))
        out.append((idx, w, float(np.linalg.norm(block))))
    return out


def hermitian_eigenvalues(m, tol=HERMITIAN_TOL):
    """All eigenvalues of a Hermitian matrix, ascending.

    Raises ``NotHermitian`` when ``max |m - m^dagger| > tol``; otherwise the
    matrix is symmetrised before decomposition.
    """
    spectra = block_spectra(m, tol)
    return np.sort(np.concatenate([w for _, w, _ in spectra]))


def singular_values(m):
    """Singular values, descending, ``min(rows, cols)`` of them."""
    a = as_matrix(m)
    rows, cols = a.shape
    gram = a @ a.conj().T if rows < cols else a.conj().T @ a
    lam = hermitian_eigenvalues(0.5 * (gram + gram.conj().T))
    return np.sqrt(np.maximum(lam, 0.0))[::-1]


def trace_norm(m):
    return float(np.sum(singular_values(m)))


def kron(a, b):
    return np.kron(as_matrix(a), as_matrix(b))


def is_unitary(u, tol=HERMITIAN_TOL):
    u = np.asarray(u, dtype=complex)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        return False
    return bool(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0]))) <= tol)
