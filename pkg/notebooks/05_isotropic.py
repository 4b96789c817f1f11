# %% [markdown]
# # Isotropic states
#
# p |Psi+><Psi+| + (1 - p) I / 9 is NPT exactly when p > 1/4, and its PPT
# part is separable, so realignment has nothing extra to find.

# %%
from qutrit_dsd import DecayParams, classify, isotropic_state, negativity

lo, hi = 0.0, 1.0
while hi - lo > 1e-10:
    mid = 0.5 * (lo + hi)
    lo, hi = (lo, mid) if negativity(isotropic_state(mid)) > 0 else (mid, hi)
print("NPT threshold:", 0.5 * (lo + hi))

# %% [markdown]
# Under the decay the p = 0.9 state keeps a small negative eigenvalue
# through the whole default horizon.

# %%
report = classify(isotropic_state(0.9), DecayParams.from_ratio(0.5))
print(report.trajectory_type.value, report.t_N, report.window)
