# %% [markdown]
# # A window of bound entanglement
#
# Two V-type qutrits start in the NPT member alpha = 4.2 of the Horodecki
# family and decay independently, with gamma_u = gamma_e / 2.  Negativity
# dies first; realignment keeps certifying entanglement for a while after.

# %%
import numpy as np

from qutrit_dsd import DecayParams, classify, horodecki_state, sample_trajectory

params = DecayParams.from_ratio(0.5)
rho0 = horodecki_state(4.2)

# %%
traj = sample_trajectory(rho0, params, t_max=0.4, n_points=41)
for t, n, c in zip(traj.times[::4], traj.negativity[::4], traj.ccnr_score[::4]):
    print(f"t = {t:.2f}  negativity = {n:.5f}  ccnr = {c:+.5f}")

# %% [markdown]
# Between t_N and t_R the state is PPT but CCNR-detected, so it is bound
# entangled: distillability has died, entanglement has not.

# %%
report = classify(rho0, params)
print(report.trajectory_type.value, report.window)
print("width of the window:", np.diff(report.window)[0])
