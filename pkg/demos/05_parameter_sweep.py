"""Mapping the evidence region in the (lam, a) plane.

For the family w = lam z, phi = a z + 1 - a with candidate exponent s, the
certified region should be lam * a^s > 1 (candidate orbit grows) inside
lam < 1 (weight norms vanish).  The sweep runs one classify per cell; cells
are independent, so a worker pool could evaluate them concurrently, and the
table is assembled in grid order either way.
"""

import numpy as np

from wcochaos.experiments import ExperimentConfig, run_sweep_cell

s = -0.4
base = ExperimentConfig(space="h2", degree=256, horizon=500,
                        candidates=[{"s": s, "k": 0}]).to_dict()

lams = np.linspace(0.5, 0.9, 5)
avals = np.linspace(0.1, 0.5, 5)

print(f"candidate s = {s}; entries show the plain-certificate verdict")
print("        " + "  ".join(f"a={a:.1f}" for a in avals))
for lam in lams:
    row = []
    for a in avals:
        out = run_sweep_cell(("lambda-a", float(lam), float(a), base))
        kind = out["li_kind"]
        mark = {"LI_YORKE_EVIDENCE": "E", "INCONCLUSIVE": ".", "NO_EVIDENCE": "o"}[kind]
        rate = lam * a**s
        row.append(f"{mark}({rate:4.2f})")
    print(f"lam={lam:.1f} " + "  ".join(row))

print("\nE = evidence, . = inconclusive; the number is the candidate rate lam * a^s.")
print("The E region fills the rate > 1 region, except cells barely above 1")
print("(like rate 1.01), where the crossing needs a horizon ~ log(G)/log(rate)")
print("far beyond the 500 steps used here.  Certificates only ever claim what")
print("the computed horizon shows.")
