"""Amplitude-damping dynamics of V-type qutrits.

Two evolvers live here:

* :func:`propagate_closed_form` -- the exact element-wise solution for two
  independent V-type atoms (``e -> g`` at ``gamma_e``, ``u -> g`` at
  ``gamma_u``), each on its own zero-temperature reservoir.
* :func:`integrate` -- fixed-step classical RK4 for an arbitrary dissipator
  given as a :class:`JumpSpec`.  It shares no code with the closed form and
  serves as its oracle.

Time for the two-atom problem is dimensionless, ``tau = gamma_e * t``: the
evolvers and :func:`system_II_dissipator_two_atom` use ``gamma_e = 1`` and
``gamma_u = params.ratio``.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .errors import AccuracyLoss, DegenerateRates, InvalidRates
from .states import DIM, local_ket

DEFAULT_DT = 1e-3
ORACLE_DT = 1e-4
TRACE_DRIFT_TOL = 1e-9
NEGATIVITY_TOL = 1e-7


@dataclass(frozen=True)
class DecayParams:
    """Reservoir decay rates of the two excited levels."""

    gamma_e: float = 1.0
    gamma_u: float = 0.5

    def __post_init__(self):
        if not self.gamma_e > 0:
            raise ValueError(f"gamma_e must be positive, got {self.gamma_e}")
        if not self.gamma_u >= 0:
            raise ValueError(f"gamma_u must be nonnegative, got {self.gamma_u}")

    @classmethod
    def from_ratio(cls, ratio):
        return cls(1.0, float(ratio))

    @property
    def ratio(self):
        """``gamma_u / gamma_e``."""
        return self.gamma_u / self.gamma_e


@dataclass(frozen=True)
class DipoleSpec:
    mu_abs_1: float
    mu_abs_2: float
    omega_1: float
    omega_2: float
    cos_angle: float

    def __post_init__(self):
        for name in ("mu_abs_1", "mu_abs_2", "omega_1", "omega_2"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be nonnegative")
        if not -1.0 <= self.cos_angle <= 1.0:
            raise ValueError(f"cos_angle must lie in [-1, 1], got {self.cos_angle}")


# -- interference scalars -------------------------------------------------------

def decay_rate_from_dipole(mu_abs, omega, hbar=1.0, c=1.0):
    """Spontaneous emission rate ``2 mu^2 / (3 hbar) * (omega / c)^3``."""
    if mu_abs < 0 or omega < 0:
        raise ValueError("dipole magnitude and frequency must be nonnegative")
    return 2.0 * mu_abs**2 / (3.0 * hbar) * (omega / c) ** 3


def beta_I(spec):
    """Normalised overlap of the two transition dipoles."""
    return float(spec.cos_angle)


def cross_damping(spec, gamma_1, gamma_2):
    return beta_I(spec) * math.sqrt(gamma_1 * gamma_2)


def beta_II(gamma_e, gamma_u=None):
    """``(gamma_e - gamma_u) / (gamma_e + gamma_u)``.

    Accepts a :class:`DecayParams` or the two rates.
    """
    if gamma_u is None:
        gamma_e, gamma_u = gamma_e.gamma_e, gamma_e.gamma_u
    total = gamma_e + gamma_u
    if total == 0:
        raise DegenerateRates("gamma_e + gamma_u vanishes")
    return (gamma_e - gamma_u) / total


# -- dissipators ---------------------------------------------------------------

@dataclass
class JumpSpec:
    """Dissipator ``sum_k w_k/2 (2 L rho R^+ - R^+ L rho - rho R^+ L)``.

    ``terms`` holds ``(weight, left, right)`` triples; ``left is right`` gives
    an ordinary decay channel, ``left != right`` a cross-damping term.
    """

    terms: list = field(default_factory=list)

    def __post_init__(self):
        dims = {np.shape(op) for _, left, right in self.terms for op in (left, right)}
        if len(dims) > 1:
            raise ValueError(f"operators of mismatched shapes: {sorted(dims)}")
        for w, _, _ in self.terms:
            if np.iscomplexobj(w) or not np.isfinite(w):
                raise ValueError(f"weights must be finite reals, got {w!r}")

    @property
    def dim(self):
        return np.shape(self.terms[0][1])[0] if self.terms else None

    def apply(self, rho):
        """Generator applied to ``rho`` (supports leading batch axes)."""
        rho = np.asarray(rho, dtype=complex)
        out = np.zeros_like(rho)
        for w, left, right in self.terms:
            rd = np.asarray(right, dtype=complex).conj().T
            rl = rd @ left
            out += 0.5 * w * (2 * left @ rho @ rd - rl @ rho - rho @ rl)
        return out

    def superoperator(self):
        """Matrix acting on row-major ``rho.reshape(-1)``."""
        n = self.dim
        eye = np.eye(n)
        s = np.zeros((n * n, n * n), dtype=complex)
        for w, left, right in self.terms:
            left = np.asarray(left, dtype=complex)
            right = np.asarray(right, dtype=complex)
            rl = right.conj().T @ left
            s += 0.5 * w * (2 * np.kron(left, right.conj()) - np.kron(rl, eye) - np.kron(eye, rl.T))
        return s


def transition(to_level, from_level):
    """Single-qutrit ``|to><from|`` in the package's level labelling."""
    return np.outer(local_ket(to_level), local_ket(from_level).conj())


def system_I_dissipator(gamma_1, gamma_2, gamma_12):
    """Single V atom with dipole interference.

    Levels ``|1>, |2>`` (excited) and ``|3>`` (ground) map to indices 0, 1, 2.
    """
    if gamma_1 < 0 or gamma_2 < 0:
        raise InvalidRates("decay rates must be nonnegative")
    if gamma_12**2 > gamma_1 * gamma_2 * (1 + 1e-12):
        raise InvalidRates(f"gamma_12^2 = {gamma_12**2:.6g} exceeds gamma_1 gamma_2 = {gamma_1 * gamma_2:.6g}")
    e = np.eye(3)
    s31 = np.outer(e[2], e[0])
    s32 = np.outer(e[2], e[1])
    return JumpSpec([
        (gamma_1, s31, s31),
        (gamma_2, s32, s32),
        (gamma_12, s31, s32),
        (gamma_12, s32, s31),
    ])


def system_II_dissipator(params):
    """Single V atom without interference, in the package basis (dimensionless time)."""
    s_ge = transition(0, 2)
    s_gu = transition(0, 1)
    return JumpSpec([(1.0, s_ge, s_ge), (params.ratio, s_gu, s_gu)])


def system_II_dissipator_two_atom(params):
    """Independent decay of atoms A and B, rates ``1`` and ``gamma_u / gamma_e``."""
    eye = np.eye(DIM)
    s_ge = transition(0, 2)
    s_gu = transition(0, 1)
    terms = []
    for local, rate in ((s_ge, 1.0), (s_gu, params.ratio)):
        op_a = np.kron(local, eye)
        terms.append((rate, op_a, op_a))
    for local, rate in ((s_ge, 1.0), (s_gu, params.ratio)):
        op_b = np.kron(eye, local)
        terms.append((rate, op_b, op_b))
    return JumpSpec(terms)


# -- evolvers ------------------------------------------------------------------

def integrate(rho0, spec, t, dt_max=DEFAULT_DT):
    """Classical RK4 with ``ceil(t / dt_max)`` equal steps.

    ``rho0`` may carry leading batch axes.  The result is Hermitised; it is
    not renormalised.  Raises ``AccuracyLoss`` when the trace drifts by more
    than 1e-9 or an eigenvalue falls below -1e-7.
    """
    if t < 0:
        raise ValueError(f"t must be nonnegative, got {t}")
    if not dt_max > 0:
        raise ValueError(f"dt_max must be positive, got {dt_max}")
    rho0 = np.asarray(rho0, dtype=complex)
    if t == 0:
        return rho0.copy()
    n = rho0.shape[-1]
    batch = rho0.shape[:-2]
    y = rho0.reshape(-1, n * n).T.copy()
    gen = spec.superoperator()
    steps = math.ceil(t / dt_max)
    h = t / steps
    for _ in range(steps):
        k1 = gen @ y
        k2 = gen @ (y + 0.5 * h * k1)
        k3 = gen @ (y + 0.5 * h * k2)
        k4 = gen @ (y + h * k3)
        y += (h / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)
    out = y.T.reshape(batch + (n, n))
    out = 0.5 * (out + np.swapaxes(out, -1, -2).conj())

    start_tr = np.trace(rho0, axis1=-2, axis2=-1)
    drift = np.max(np.abs(np.trace(out, axis1=-2, axis2=-1) - start_tr))
    if drift > TRACE_DRIFT_TOL:
        raise AccuracyLoss(f"trace drifted by {drift:.3g}; reduce dt_max")
    for m in out.reshape(-1, n, n):
        lam = linalg.hermitian_eigenvalues(m)[0]
        if lam < -NEGATIVITY_TOL:
            raise AccuracyLoss(f"eigenvalue {lam:.3g} below -1e-7; reduce dt_max")
    return out


def propagate_closed_form(rho0, t, params):
    """Exact two-atom evolution to dimensionless time ``t = gamma_e * time``.

    Entries are named with the 1-based labels of the basis
    ``|2,2>, |2,1>, ..., |0,0>`` (``r(1, 1)`` is the ``|2,2>`` population).
    Only the upper triangle is computed; the rest follows by Hermiticity.
    The ground population uses ``1 + Theta(t)`` and so assumes unit trace.
    """
    if t < 0:
        raise ValueError(f"t must be nonnegative, got {t}")
    rho0 = np.asarray(rho0, dtype=complex)
    ge, gu = 1.0, params.ratio

    def r(i, j):
        return rho0[i - 1, j - 1]

    def decay(rate):
        return math.exp(-rate * t)

    up = np.zeros((9, 9), dtype=complex)

    def put(i, j, value):
        up[i - 1, j - 1] = value

    def got(i, j):
        return up[i - 1, j - 1]

    put(1, 1, r(1, 1) * decay(2 * ge))
    put(1, 2, r(1, 2) * decay((3 * ge + gu) / 2))
    put(1, 3, r(1, 3) * decay(3 * ge / 2))
    put(1, 4, r(1, 4) * decay((3 * ge + gu) / 2))
    put(1, 5, r(1, 5) * decay(ge + gu))
    put(1, 6, r(1, 6) * decay((2 * ge + gu) / 2))
    put(1, 7, r(1, 7) * decay(3 * ge / 2))
    put(1, 8, r(1, 8) * decay((2 * ge + gu) / 2))
    put(1, 9, r(1, 9) * decay(ge))
    put(2, 2, r(2, 2) * decay(ge + gu))
    put(2, 3, r(2, 3) * decay((2 * ge + gu) / 2))
    put(2, 4, r(2, 4) * decay(ge + gu))
    put(2, 5, r(2, 5) * decay((ge + 3 * gu) / 2))
    put(2, 6, r(2, 6) * decay((ge + 2 * gu) / 2))
    put(2, 7, r(2, 7) * decay((2 * ge + gu) / 2))
    put(2, 8, r(2, 8) * decay((ge + 2 * gu) / 2))
    put(2, 9, r(2, 9) * decay((ge + gu) / 2))
    put(3, 4, r(3, 4) * decay((2 * ge + gu) / 2))
    put(3, 5, r(3, 5) * decay((ge + 2 * gu) / 2))
    put(3, 7, r(3, 7) * decay(ge))
    put(3, 8, r(3, 8) * decay((ge + gu) / 2))
    put(4, 4, r(4, 4) * decay(ge + gu))
    put(4, 5, r(4, 5) * decay((ge + 3 * gu) / 2))
    put(4, 6, r(4, 6) * decay((ge + 2 * gu) / 2))
    put(4, 7, r(4, 7) * decay((2 * ge + gu) / 2))
    put(4, 8, r(4, 8) * decay((ge + 2 * gu) / 2))
    put(4, 9, r(4, 9) * decay((ge + gu) / 2))
    put(5, 5, r(5, 5) * decay(2 * gu))
    put(5, 6, r(5, 6) * decay(3 * gu / 2))
    put(5, 7, r(5, 7) * decay((ge + 2 * gu) / 2))
    put(5, 8, r(5, 8) * decay(3 * gu / 2))
    put(5, 9, r(5, 9) * decay(gu))
    put(6, 7, r(6, 7) * decay((ge + gu) / 2))
    put(6, 8, r(6, 8) * decay(gu))

    # entries fed by a jump of one atom
    put(3, 3, (r(1, 1) + r(2, 2) + r(3, 3)) * decay(ge) - got(1, 1) - got(2, 2))
    put(3, 6, (r(1, 4) + r(2, 5) + r(3, 6)) * decay((ge + gu) / 2) - got(1, 4) - got(2, 5))
    put(3, 9, (r(1, 7) + r(2, 8) + r(3, 9)) * decay(ge / 2) - got(1, 7) - got(2, 8))
    put(6, 6, (r(4, 4) + r(5, 5) + r(6, 6)) * decay(gu) - got(4, 4) - got(5, 5))
    put(6, 9, (r(4, 7) + r(5, 8) + r(6, 9)) * decay(gu / 2) - got(4, 7) - got(5, 8))
    put(7, 7, (r(1, 1) + r(4, 4) + r(7, 7)) * decay(ge) - got(1, 1) - got(4, 4))
    put(7, 8, (r(1, 2) + r(4, 5) + r(7, 8)) * decay((ge + gu) / 2) - got(1, 2) - got(4, 5))
    put(7, 9, (r(1, 3) + r(4, 6) + r(7, 9)) * decay(ge / 2) - got(1, 3) - got(4, 6))
    put(8, 8, (r(2, 2) + r(5, 5) + r(8, 8)) * decay(gu) - got(2, 2) - got(5, 5))
    put(8, 9, (r(2, 3) + r(5, 6) + r(8, 9)) * decay(gu / 2) - got(2, 3) - got(5, 6))

    if 2 * (ge + gu) * t < 600:
        theta = math.exp(-2 * (ge + gu) * t) * (
            r(1, 1) * math.exp(2 * gu * t)
            + (r(2, 2) + r(4, 4)) * math.exp((ge + gu) * t)
            + r(5, 5) * math.exp(2 * ge * t)
            - (2 * r(1, 1) + r(2, 2) + r(3, 3) + r(4, 4) + r(7, 7)) * math.exp((ge + 2 * gu) * t)
            - (r(2, 2) + r(4, 4) + 2 * r(5, 5) + r(6, 6) + r(8, 8)) * math.exp((2 * ge + gu) * t)
        )
    else:
        # same expression with the prefactor folded in; avoids exp overflow
        theta = (
            r(1, 1) * decay(2 * ge)
            + (r(2, 2) + r(4, 4)) * decay(ge + gu)
            + r(5, 5) * decay(2 * gu)
            - (2 * r(1, 1) + r(2, 2) + r(3, 3) + r(4, 4) + r(7, 7)) * decay(ge)
            - (r(2, 2) + r(4, 4) + 2 * r(5, 5) + r(6, 6) + r(8, 8)) * decay(gu)
        )
    put(9, 9, 1 + theta)

    diag = np.diag(np.diag(up).real)
    strict = np.triu(up, 1)
    return diag + strict + strict.conj().T


def closed_form_trajectory(rho0, times, params):
    """``propagate_closed_form`` at each time; shape ``(len(times), 9, 9)``."""
    return np.stack([propagate_closed_form(rho0, t, params) for t in times])
