"""
A Carnot cycle between 600 K and 300 K
======================================

Two isotherms joined by two isoentropes.  The field runs from 1600 T down to
250 T; the other two corner fields follow from the temperatures.
"""

from twolevel import (
    CarnotSpec,
    build_carnot,
    carnot_bounds,
    evaluate_carnot,
    gap_from_field,
    reverse_cycle,
    three_gap_carnot,
)

spec = CarnotSpec(600.0, 300.0, gap_from_field(1600.0), gap_from_field(250.0))
cycle = build_carnot(spec)
print("corner fields (T):", [round(c.magnetic_field, 6) for c in cycle.corners])

report = evaluate_carnot(cycle)
for leg in report.legs:
    print(f"{leg.kind:>10}: q_in = {leg.q_in:+.4e} J  w_out = {leg.w_out:+.4e} J")
print("efficiency:", report.coefficient, "closed form:", report.coefficient_exact)

# where the efficiency sits between the gap-ratio bounds
b = carnot_bounds(spec)
print(f"{b.lower:.4f} < {b.value:.4f} < {b.upper:.4f}")

# run it backwards
print("refrigerator COP:", reverse_cycle(cycle, "refrigeration").coefficient)
print("heat pump COP:   ", reverse_cycle(cycle, "heat_pump").coefficient)

# the special cycle with only three distinct gaps
special = build_carnot(three_gap_carnot(600.0, 300.0, gap_from_field(1600.0)))
print("three-gap fields:", [round(c.magnetic_field, 6) for c in special.corners])
