# %% [markdown]
# # Escaping sudden death with a local unitary
#
# sigma_alpha is rho_alpha with the second qutrit's e and u levels relabelled
# by a permutation.  Same entanglement at t = 0, different fate under decay.

# %%
import math

import numpy as np

from qutrit_dsd import DecayParams, classify, horodecki_state, horodecki_state_rotated, negativity
from qutrit_dsd.states import THETA, local_unitary_conjugate

params = DecayParams.from_ratio(0.5)
sigma = horodecki_state_rotated(4.2)
print(np.allclose(sigma, local_unitary_conjugate(horodecki_state(4.2), np.eye(3), THETA)))
print(negativity(sigma), negativity(horodecki_state(4.2)))

# %% [markdown]
# The negative eigenvalue sits in the block spanned by |e,u> and |u,e>,
# which only ever decays, so it keeps its sign:
# lambda(t) = lambda(0) exp(-(gamma_e + gamma_u) t).

# %%
from qutrit_dsd import sample_trajectory

traj = sample_trajectory(sigma, params, t_max=20.0, n_points=6)
lam0 = (5 - math.sqrt((2 * 4.2 - 5) ** 2 + 16)) / 42
for t, e in zip(traj.times, traj.pt_lowest(3)):
    print(f"t = {t:4.1f}  lowest PT eigenvalues {e}  exact {lam0 * math.exp(-1.5 * t):.3e}")

# %%
print(classify(sigma, params).trajectory_type.value)
print(classify(horodecki_state(4.2), params).trajectory_type.value)
