"""Distillability sudden death of two qutrits under amplitude damping.

Submodules: ``linalg`` (Jacobi eigensolver, SVD, trace norm), ``states``
(state families, partial transpose, realignment, text format), ``dynamics``
(closed-form propagator and RK4 oracle), ``measures`` (negativity, CCNR),
``dsd`` (death-time search and classification) and ``cli``.
"""

from .dsd import (
    DsdReport,
    Trajectory,
    TrajectoryType,
    classify,
    find_negativity_death,
    find_realignment_death,
    sample_trajectory,
)
from .dynamics import DecayParams, JumpSpec, integrate, propagate_closed_form
from .measures import CriteriaSample, ccnr_score, criteria_sample, is_ppt, negativity
from .states import (
    horodecki_state,
    horodecki_state_rotated,
    isotropic_state,
    local_unitary_conjugate,
    partial_transpose,
    realign,
)

__version__ = "0.1.0"
