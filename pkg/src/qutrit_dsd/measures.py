"""Entanglement criteria: negativity, PPT test and the realignment (CCNR) score.

A positive ``ccnr_score`` certifies entanglement.  A PPT state with a
nonpositive score is *undetected*, which is not the same as separable.
"""

from dataclasses import dataclass

import numpy as np

from . import linalg
from .states import partial_transpose, realign

NEGATIVITY_TOL = 1e-10


@dataclass(frozen=True)
class CriteriaSample:
    negativity: float
    ccnr_score: float
    pt_min_eigenvalue: float
    pt_negative_eigenvalues: tuple
    pt_eigenvalues: np.ndarray
    # min over decoupled PT blocks of (smallest eigenvalue / block Frobenius norm)
    pt_min_relative: float

    @property
    def is_ppt(self):
        return not self.pt_negative_eigenvalues

    @property
    def status(self):
        """``"NPT"``, ``"PPT-entangled"`` (CCNR-detected) or ``"undetected"``."""
        if not self.is_ppt:
            return "NPT"
        return "PPT-entangled" if self.ccnr_score > 0 else "undetected"


def pt_eigenvalues(rho, subsystem="B"):
    return linalg.hermitian_eigenvalues(partial_transpose(rho, subsystem))


def relative_min_pt_eigenvalue(rho, subsystem="B"):
    """Smallest PT eigenvalue measured against the norm of its own block.

    The partial transpose is split into blocks that are decoupled by exact
    zeros; each block's lowest eigenvalue is divided by the block's
    Frobenius norm.  The sign matches the plain minimum eigenvalue, but the
    value stays O(1) while the whole block decays exponentially in time.
    """
    spectra = linalg.block_spectra(partial_transpose(rho, subsystem))
    return min(w[0] / norm if norm > 0 else 0.0 for _, w, norm in spectra)


def _negative_part(eigs, tol):
    return tuple(float(x) for x in eigs if x < -tol)


def negativity(rho, tol=NEGATIVITY_TOL):
    """Absolute sum of the negative eigenvalues of the partial transpose.

    Eigenvalues with ``|lambda| <= tol`` count as zero.
    """
    return float(-sum(_negative_part(pt_eigenvalues(rho), tol)))


def ccnr_score(rho):
    """``||rho^R||_1 - 1``; positive means entangled."""
    return linalg.trace_norm(realign(rho)) - 1.0


def is_ppt(rho, tol=NEGATIVITY_TOL):
    return bool(pt_eigenvalues(rho)[0] >= -tol)


def criteria_sample(rho, tol=NEGATIVITY_TOL):
    spectra = linalg.block_spectra(partial_transpose(rho, "B"))
    eigs = np.sort(np.concatenate([w for _, w, _ in spectra]))
    rel = min(w[0] / norm if norm > 0 else 0.0 for _, w, norm in spectra)
    neg = _negative_part(eigs, tol)
    return CriteriaSample(
        negativity=float(-sum(neg)),
        ccnr_score=ccnr_score(rho),
        pt_min_eigenvalue=float(eigs[0]),
        pt_negative_eigenvalues=neg,
        pt_eigenvalues=eigs,
        pt_min_relative=float(rel),
    )
