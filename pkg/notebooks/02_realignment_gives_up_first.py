# %% [markdown]
# # When realignment gives up first
#
# For alpha = 4.5 the order flips: CCNR loses the state long before the
# partial transpose turns positive.  No bound-entangled window is certified.

# %%
from qutrit_dsd import DecayParams, classify, horodecki_state

report = classify(horodecki_state(4.5), DecayParams.from_ratio(0.5))
print(f"t_R = {report.t_R:.4f}, t_N = {report.t_N:.4f}")
print(report.trajectory_type.value)
print(report.notes)

# %% [markdown]
# Death times across the NPT part of the family.  Large alpha holds on to
# its negative eigenvalue much longer; near alpha = 5 it only fades below
# the numerical tolerance, which the report notes say.

# %%
for alpha in (4.1, 4.3, 4.5, 4.7, 4.8, 4.9, 5.0):
    rep = classify(horodecki_state(alpha), DecayParams.from_ratio(0.5))
    print(f"{alpha:.1f}  t_N = {rep.t_N:8.4f}  t_R = {rep.t_R:.4f}  {rep.trajectory_type.value}")
