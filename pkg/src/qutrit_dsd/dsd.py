"""Distillability sudden death along closed-form trajectories.

Death times are located in two stages: a uniform grid over ``[0, t_max]``
brackets the last sign change, and bisection narrows the bracket to
``tol_t``.

The negativity death test uses the sign of the *block-relative* minimum PT
eigenvalue (see :func:`measures.relative_min_pt_eigenvalue`).  Under
amplitude damping every PT eigenvalue decays exponentially, so any fixed
absolute threshold would eventually declare every trajectory PPT.  Scaling
each eigenvalue by the block it lives in removes that artefact without
changing where the sign changes.
"""

import enum
import warnings
from dataclasses import dataclass, field

import numpy as np

from .dynamics import DecayParams, propagate_closed_form
from .errors import NonMonotoneWarning
from .measures import NEGATIVITY_TOL, ccnr_score, criteria_sample, relative_min_pt_eigenvalue

DEFAULT_T_MAX = 20.0
DEFAULT_GRID = 2000
DEFAULT_TOL_T = 1e-5
CCNR_TOL = 1e-10
# block-relative eigenvalues below this are taken as a resolved negative sign
SIGN_RESOLUTION = 1e-13


class TrajectoryType(str, enum.Enum):
    NPT_FOREVER = "NPT_FOREVER"
    ESD_NO_DSD = "ESD_NO_DSD"
    DSD_THEN_UNDETECTED = "DSD_THEN_UNDETECTED"


@dataclass
class Trajectory:
    times: np.ndarray
    samples: list

    def __post_init__(self):
        self.times = np.asarray(self.times, dtype=float)
        if len(self.times) != len(self.samples):
            raise ValueError("times and samples differ in length")
        if len(self.times) and (self.times[0] != 0 or np.any(np.diff(self.times) <= 0)):
            raise ValueError("times must start at 0 and increase strictly")

    @property
    def negativity(self):
        return np.array([s.negativity for s in self.samples])

    @property
    def ccnr_score(self):
        return np.array([s.ccnr_score for s in self.samples])

    @property
    def pt_min_eigenvalue(self):
        return np.array([s.pt_min_eigenvalue for s in self.samples])

    def pt_lowest(self, k=3):
        """The ``k`` smallest PT eigenvalues at each time, shape ``(n, k)``."""
        return np.array([s.pt_eigenvalues[:k] for s in self.samples])


@dataclass
class DsdReport:
    t_N: float | None
    t_R: float | None
    trajectory_type: TrajectoryType
    horizon: float
    window: tuple | None = None
    initially_ppt: bool = False
    # True whenever the verdict past t_N rests on CCNR *not* detecting anything
    entanglement_after_tN_unknown: bool = False
    notes: list = field(default_factory=list)


def sample_trajectory(rho0, params, t_max, n_points, tol=NEGATIVITY_TOL):
    if not t_max > 0:
        raise ValueError(f"t_max must be positive, got {t_max}")
    if n_points < 2:
        raise ValueError(f"n_points must be at least 2, got {n_points}")
    times = np.linspace(0.0, t_max, n_points)
    samples = [criteria_sample(propagate_closed_form(rho0, t, params), tol) for t in times]
    return Trajectory(times, samples)


def _npt_indicator(rho0, params, tol):
    def f(t):
        return relative_min_pt_eigenvalue(propagate_closed_form(rho0, t, params)) + tol

    return f


def _ccnr_indicator(rho0, params, tol):
    def f(t):
        return ccnr_score(propagate_closed_form(rho0, t, params)) - tol

    return f


def _scan(f, t_max, n_grid):
    times = np.linspace(0.0, t_max, n_grid + 1)
    return times, np.array([f(t) for t in times])


def bisect_sign_change(f, lo, hi, tol_t):
    """Shrink ``[lo, hi]`` around the sign change of ``f``; return its midpoint.

    ``f(lo)`` and ``f(hi)`` must differ in sign (``f(lo) < 0 <= f(hi)`` or
    the reverse).
    """
    below = f(lo) < 0
    if (f(hi) < 0) == below:
        raise ValueError(f"no sign change on [{lo}, {hi}]")
    while hi - lo > tol_t:
        mid = 0.5 * (lo + hi)
        if (f(mid) < 0) == below:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _negativity_death(rho0, params, t_max, tol_t, n_grid, tol):
    f = _npt_indicator(rho0, params, tol)
    times, values = _scan(f, t_max, n_grid)
    npt = values < 0
    if npt[-1]:
        return None, times
    if not npt.any():
        return 0.0, times
    k = int(np.flatnonzero(npt)[-1])
    if not npt[: k + 1].all():
        warnings.warn(
            f"negativity vanished and revived before t = {times[k]:.6g}",
            NonMonotoneWarning,
            stacklevel=3,
        )
    return float(bisect_sign_change(f, times[k], times[k + 1], tol_t)), times


def find_negativity_death(
    rho0,
    params,
    t_max=DEFAULT_T_MAX,
    tol_t=DEFAULT_TOL_T,
    n_grid=DEFAULT_GRID,
    tol=NEGATIVITY_TOL,
):
    """Time after which the state stays PPT on the scan grid.

    Returns ``None`` when the state is still NPT at ``t_max`` and ``0.0``
    when it is PPT on the whole grid.  Issues :class:`NonMonotoneWarning`
    if the state was PPT at some grid point before the last NPT one.
    """
    if not t_max > 0:
        raise ValueError(f"t_max must be positive, got {t_max}")
    return _negativity_death(rho0, params, t_max, tol_t, n_grid, tol)[0]


def find_realignment_death(
    rho0,
    params,
    t_max=DEFAULT_T_MAX,
    tol_t=DEFAULT_TOL_T,
    n_grid=DEFAULT_GRID,
    tol=CCNR_TOL,
):
    """Last time the realignment criterion still detects entanglement.

    ``None`` if ``ccnr_score <= tol`` at every grid point; ``t_max`` if the
    score is still positive at the horizon.
    """
    if not t_max > 0:
        raise ValueError(f"t_max must be positive, got {t_max}")
    f = _ccnr_indicator(rho0, params, tol)
    times, values = _scan(f, t_max, n_grid)
    positive = values > 0
    if not positive.any():
        return None
    k = int(np.flatnonzero(positive)[-1])
    if k == len(times) - 1:
        return float(t_max)
    if not positive[: k + 1].all() and positive[0]:
        warnings.warn(
            f"CCNR detection lapsed and resumed before t = {times[k]:.6g}",
            NonMonotoneWarning,
            stacklevel=2,
        )
    # f > 0 on the left end, f <= 0 on the right
    g = lambda t: -f(t)  # noqa: E731
    return float(bisect_sign_change(g, times[k], times[k + 1], tol_t))


def classify(
    rho0,
    params=None,
    t_max=DEFAULT_T_MAX,
    tol_t=DEFAULT_TOL_T,
    n_grid=DEFAULT_GRID,
):
    """Sort a trajectory into one of the three dynamical types.

    * ``NPT_FOREVER`` -- still NPT at ``t_max`` (a statement about the
      horizon, not about infinite time);
    * ``DSD_THEN_UNDETECTED`` -- became PPT at ``t_N`` and CCNR still
      certifies entanglement somewhere after ``t_N``;
    * ``ESD_NO_DSD`` -- became PPT and CCNR detects nothing afterwards.
      CCNR silence does not prove separability, hence the caveat flag.
    """
    params = DecayParams() if params is None else params
    t_n, _ = _negativity_death(rho0, params, t_max, tol_t, n_grid, NEGATIVITY_TOL)
    t_r = find_realignment_death(rho0, params, t_max, tol_t, n_grid)
    report = DsdReport(t_N=t_n, t_R=t_r, trajectory_type=TrajectoryType.NPT_FOREVER, horizon=float(t_max))
    if t_n is None:
        report.notes.append(f"NPT at the horizon gamma_e t = {t_max:g}")
        return report

    report.initially_ppt = bool(t_n == 0.0)
    residual = relative_min_pt_eigenvalue(propagate_closed_form(rho0, t_max, params))
    if residual < -SIGN_RESOLUTION:
        report.notes.append(
            f"t_N is a threshold crossing: a PT eigenvalue is still negative at the horizon "
            f"({residual:.3g} relative to its block), only smaller than the tolerance"
        )
    if report.initially_ppt:
        report.notes.append("initially PPT")
    report.entanglement_after_tN_unknown = True
    if t_r is not None and t_r > t_n + tol_t:
        report.trajectory_type = TrajectoryType.DSD_THEN_UNDETECTED
        report.window = (t_n, t_r)
    else:
        report.trajectory_type = TrajectoryType.ESD_NO_DSD
        if t_r is not None:
            report.notes.append("realignment stops detecting before the state becomes PPT (t_R < t_N)")
    return report


def ccnr_positive_after(rho0, params, t_start, t_max, n_points=DEFAULT_GRID, tol=CCNR_TOL):
    """Whether the CCNR score exceeds ``tol`` anywhere on a grid over ``(t_start, t_max]``."""
    if t_start >= t_max:
        return False
    times = np.linspace(t_start, t_max, n_points + 1)[1:]
    return any(ccnr_score(propagate_closed_form(rho0, t, params)) > tol for t in times)

