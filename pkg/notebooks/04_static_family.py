# %% [markdown]
# # The family at t = 0
#
# Separable up to alpha = 3, PPT but entangled up to 4, NPT beyond.

# %%
import numpy as np

from qutrit_dsd import ccnr_score, horodecki_state, negativity

for alpha in np.arange(2.0, 5.01, 0.25):
    rho = horodecki_state(alpha)
    print(f"alpha = {alpha:4.2f}  negativity = {negativity(rho):.5f}  ccnr = {ccnr_score(rho):+.5f}")

# %% [markdown]
# In 3 < alpha <= 4 the CCNR score is positive while the negativity is zero:
# the realignment criterion sees bound entanglement that PPT misses.
