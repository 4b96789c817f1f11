# %% [markdown]
# # Cross damping as two independent channels
#
# A single V atom with equal rates gamma and cross damping beta * gamma
# decays like an atom with a symmetric channel at gamma (1 + beta) and an
# antisymmetric one at gamma (1 - beta).  Both sides are integrated with RK4.

# %%
import math

import numpy as np

from qutrit_dsd.dynamics import JumpSpec, integrate, system_I_dissipator
from qutrit_dsd.states import random_density_matrix

s = np.array([1.0, 1.0, 0.0]) / math.sqrt(2)
a = np.array([1.0, -1.0, 0.0]) / math.sqrt(2)
g = np.array([0.0, 0.0, 1.0])
rho0 = random_density_matrix(np.random.default_rng(7), dim=3)

for beta in (0.0, 1 / 3, 0.9):
    channels = JumpSpec([(1 + beta, np.outer(g, s), np.outer(g, s)), (1 - beta, np.outer(g, a), np.outer(g, a))])
    x = integrate(rho0, system_I_dissipator(1.0, 1.0, beta), 1.0)
    y = integrate(rho0, channels, 1.0)
    print(f"beta = {beta:.3f}  max difference = {np.max(np.abs(x - y)):.2e}")

# %% [markdown]
# At beta = 1 the antisymmetric state never decays.

# %%
dark = np.outer(a, a).astype(complex)
print(np.round(integrate(dark, system_I_dissipator(1.0, 1.0, 1.0), 5.0).real, 12))
