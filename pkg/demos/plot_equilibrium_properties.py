"""
Equilibrium properties of a spin-1/2
====================================

A spin in a magnetic field has two levels a gap apart.  Everything about
its canonical equilibrium state follows from x = gap / (k_B T).
"""

import numpy as np

from twolevel import EquilibriumState, gap_from_field, is_hotter, temperature_from_entropy

# a 1600 T field at 600 K
gap = gap_from_field(1600.0)
state = EquilibriumState(600.0, gap)
print(f"x = {state.x:.6f}")
print(f"excited population p = {state.p:.6g}")
print(f"E = {state.energy:.6g} J, S = {state.entropy:.6g} J/K, M = {state.massieu:.6g} J/K")

# flip the sign of T and the populations swap
inverted = EquilibriumState(-600.0, gap)
print(f"p at -600 K = {inverted.p:.6g}  (1 - p = {1 - state.p:.6g})")

# negative temperatures are hotter than any positive one
for a, b in [(600.0, 300.0), (-300.0, 1e9), (-300.0, -600.0)]:
    print(f"{a:>8g} K hotter than {b:>8g} K: {is_hotter(a, b)}")

# entropy has two temperature branches
s = 0.4 * 1.380649e-23
print("T on each branch for S = 0.4 k_B:",
      temperature_from_entropy(s, gap), temperature_from_entropy(s, gap, "negative"))

# entropy against x, peaking at ln 2 when x -> 0
x = np.geomspace(1e-3, 30, 7)
print(np.column_stack([x, [EquilibriumState(gap / (1.380649e-23 * xi), gap).entropy / 1.380649e-23 for xi in x]]))
