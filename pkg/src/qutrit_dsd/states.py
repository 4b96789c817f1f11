"""Two-qutrit states, partial transpose and realignment.

Basis convention
----------------
Each qutrit has levels ``2`` (excited state ``e``, decays at ``gamma_e``),
``1`` (excited state ``u``, decays at ``gamma_u``) and ``0`` (ground ``g``).
The pair ``|a, b>`` sits at flat index ``3 * (2 - a) + (2 - b)``, so the
ordering is ``|2,2>, |2,1>, |2,0>, |1,2>, ..., |0,0>``: index 0 is the
doubly-``e``-excited state and index 8 the joint ground state.  Inside a
single qutrit the same rule gives local index ``2 - level``.

Density matrices are plain ``(9, 9)`` complex ``numpy`` arrays.
"""

import io
import math

import numpy as np

from . import linalg
from .errors import AlphaOutOfRange, NotUnitary, ParseError, POutOfRange, ValidationError

DIM = 3
LEVELS = (2, 1, 0)
TRACE_TOL = 1e-10
PSD_TOL = 1e-9


def index(a, b):
    """Flat index of ``|a, b>``."""
    if a not in LEVELS or b not in LEVELS:
        raise ValueError(f"levels must be 0, 1 or 2, got ({a}, {b})")
    return DIM * (2 - a) + (2 - b)


def levels(i):
    """Inverse of :func:`index`."""
    if not 0 <= i < DIM * DIM:
        raise ValueError(f"flat index out of range: {i}")
    return 2 - i // DIM, 2 - i % DIM


def ket(a, b):
    v = np.zeros(DIM * DIM, dtype=complex)
    v[index(a, b)] = 1.0
    return v


def local_ket(level):
    v = np.zeros(DIM, dtype=complex)
    v[2 - level] = 1.0
    return v


def projector(v):
    v = np.asarray(v, dtype=complex)
    return np.outer(v, v.conj())


def _mixture(pairs):
    return sum(projector(ket(a, b)) for a, b in pairs) / len(pairs)


PSI_PLUS = (ket(0, 1) + ket(1, 0) + ket(2, 2)) / math.sqrt(3)
PSI_PLUS_ROTATED = (ket(0, 0) + ket(1, 1) + ket(2, 2)) / math.sqrt(3)

# theta = |0><1| + |1><0| + |2><2|
THETA = (
    np.outer(local_ket(0), local_ket(1))
    + np.outer(local_ket(1), local_ket(0))
    + np.outer(local_ket(2), local_ket(2))
)


def _check_alpha(alpha):
    if not 2.0 <= alpha <= 5.0:
        raise AlphaOutOfRange(f"alpha must lie in [2, 5], got {alpha}")


def horodecki_state(alpha):
    """One-parameter family mixing ``|Psi+>`` with two separable states.

    Separable for ``2 <= alpha <= 3``, PPT (bound) entangled for
    ``3 < alpha <= 4`` and NPT for ``4 < alpha <= 5``.
    """
    _check_alpha(alpha)
    sigma_plus = _mixture([(0, 0), (1, 2), (2, 1)])
    sigma_minus = _mixture([(1, 1), (2, 0), (0, 2)])
    return 2 / 7 * projector(PSI_PLUS) + alpha / 7 * sigma_plus + (5 - alpha) / 7 * sigma_minus


def horodecki_state_rotated(alpha):
    """``horodecki_state(alpha)`` conjugated by ``I_3 (x) THETA``."""
    _check_alpha(alpha)
    sigma_plus = _mixture([(0, 1), (1, 2), (2, 0)])
    sigma_minus = _mixture([(1, 0), (2, 1), (0, 2)])
    return (
        2 / 7 * projector(PSI_PLUS_ROTATED)
        + alpha / 7 * sigma_plus
        + (5 - alpha) / 7 * sigma_minus
    )


def isotropic_state(p):
    if not 0.0 <= p <= 1.0:
        raise POutOfRange(f"p must lie in [0, 1], got {p}")
    return p * projector(PSI_PLUS) + (1 - p) / 9 * np.eye(9, dtype=complex)


def validate_density_matrix(rho, trace_tol=TRACE_TOL, psd_tol=PSD_TOL):
    """Raise ``ValidationError`` unless ``rho`` is a density matrix.

    Checks, in order: square shape, finite entries, Hermiticity (1e-10),
    unit trace and ``min eigenvalue >= -psd_tol``.  Returns ``rho`` as a
    complex array.
    """
    a = np.asarray(rho, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValidationError("shape", f"expected a square matrix, got {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValidationError("finite", "matrix has NaN or Inf entries")
    defect = linalg.hermitian_defect(a)
    if defect > linalg.HERMITIAN_TOL:
        raise ValidationError("hermiticity", f"max |rho - rho^dagger| = {defect:.3g}")
    tr = np.trace(a)
    if abs(tr - 1.0) > trace_tol:
        raise ValidationError("trace", f"trace is {tr.real:.12g}, expected 1")
    lam = linalg.hermitian_eigenvalues(a)[0]
    if lam < -psd_tol:
        raise ValidationError("positivity", f"minimum eigenvalue {lam:.3g} is negative")
    return a


def partial_transpose(rho, subsystem="B"):
    """Transpose one qutrit factor: ``<i k| rho^T_B |j l> = <i l| rho |j k>``."""
    r = np.asarray(rho, dtype=complex).reshape(DIM, DIM, DIM, DIM)
    if subsystem == "B":
        return r.transpose(0, 3, 2, 1).reshape(9, 9)
    if subsystem == "A":
        return r.transpose(2, 1, 0, 3).reshape(9, 9)
    raise ValueError(f"subsystem must be 'A' or 'B', got {subsystem!r}")


def realign(rho):
    """Realigned matrix ``R[(i, j), (k, l)] = <i k| rho |j l>``.

    ``i, j`` are subsystem-A levels (row/column of the A factor) and ``k, l``
    the subsystem-B levels, all as local indices.  For a product
    ``a (x) b`` this gives ``vec(a) vec(b)^T``.
    """
    r = np.asarray(rho, dtype=complex).reshape(DIM, DIM, DIM, DIM)
    return r.transpose(0, 2, 1, 3).reshape(9, 9)


def local_unitary_conjugate(rho, u_a, u_b, tol=linalg.HERMITIAN_TOL):
    for name, u in (("u_a", u_a), ("u_b", u_b)):
        if np.shape(u) != (DIM, DIM) or not linalg.is_unitary(u, tol):
            raise NotUnitary(f"{name} is not a 3x3 unitary")
    w = np.kron(u_a, u_b)
    return w @ np.asarray(rho, dtype=complex) @ w.conj().T


def random_density_matrix(rng, dim=9, rank=None):
    """Random density matrix from a complex Ginibre matrix ``G G^dagger / tr``."""
    rank = dim if rank is None else rank
    g = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_unitary(rng, dim=3):
    """Haar-random unitary from the QR decomposition of a Ginibre matrix."""
    z = (rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))) / math.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


# -- text format ------------------------------------------------------------

def format_density_matrix(rho):
    """Serialise as ``dim N`` followed by ``N`` rows of ``re+imj`` entries."""
    a = np.asarray(rho, dtype=complex)
    lines = [f"dim {a.shape[0]}"]
    for row in a:
        lines.append(" ".join(f"{z.real:.17g}{z.imag:+.17g}j" for z in row))
    return "\n".join(lines) + "\n"


def parse_density_matrix(text):
    """Inverse of :func:`format_density_matrix`.  Blank lines are ignored."""
    rows = [(n, line.split()) for n, line in enumerate(io.StringIO(text), start=1)]
    rows = [(n, toks) for n, toks in rows if toks]
    if not rows:
        raise ParseError("empty input", line=1)
    n0, header = rows[0]
    if len(header) != 2 or header[0] != "dim":
        raise ParseError("expected header 'dim N'", line=n0, column=1)
    try:
        dim = int(header[1])
    except ValueError:
        raise ParseError(f"bad dimension {header[1]!r}", line=n0, column=2) from None
    if dim <= 0:
        raise ParseError(f"dimension must be positive, got {dim}", line=n0, column=2)
    body = rows[1:]
    if len(body) != dim:
        line = body[-1][0] + 1 if body else n0 + 1
        raise ParseError(f"expected {dim} matrix rows, found {len(body)}", line=line)
    out = np.empty((dim, dim), dtype=complex)
    for r, (n, toks) in enumerate(body):
        if len(toks) != dim:
            raise ParseError(f"expected {dim} entries, found {len(toks)}", line=n)
        for c, tok in enumerate(toks):
            try:
                out[r, c] = complex(tok)
            except ValueError:
                raise ParseError(f"cannot parse complex number {tok!r}", line=n, column=c + 1) from None
    return out


def write_density_matrix(path, rho):
    with open(path, "w") as fh:
        fh.write(format_density_matrix(rho))


def read_density_matrix(path):
    with open(path) as fh:
        return parse_density_matrix(fh.read())
