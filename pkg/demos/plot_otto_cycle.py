"""
Otto-like cycles inscribed in a Carnot cycle
============================================

Replace the isotherms by fixed-gap legs that exchange heat with the Carnot
baths.  The efficiency drops to 1 - gap_low/gap_high and entropy is
generated on the fixed-gap legs.
"""

import math

from twolevel import (
    Bath,
    CarnotSpec,
    InfeasibleError,
    build_carnot,
    build_otto,
    evaluate_otto,
    gap_from_field,
    inscribe_otto,
    reverse_cycle,
    special_otto,
)

for b_low in (500.0, 250.0):
    carnot = build_carnot(CarnotSpec(600.0, 300.0, gap_from_field(1600.0), gap_from_field(b_low)))
    otto = build_otto(inscribe_otto(carnot))
    rep = evaluate_otto(otto)
    print(f"B_low = {b_low:g} T: t1' = {otto.t1:g} K, t3' = {otto.t3:g} K, "
          f"efficiency {rep.coefficient:.4f}, S_gen = {rep.s_gen_total:.3e} J/K")
    try:
        print("  reversed, COP =", reverse_cycle(otto).coefficient)
    except InfeasibleError as exc:
        print("  cannot reverse:", exc)

# hotter and colder baths only add entropy generation
otto = build_otto(inscribe_otto(build_carnot(
    CarnotSpec(600.0, 300.0, gap_from_field(1600.0), gap_from_field(500.0)))))
wide = evaluate_otto(otto, Bath(800.0), Bath(200.0))
print("S_gen with 800 K / 200 K baths:", wide.s_gen_total)

# the special Otto cycle has t1' = t3' and efficiency 1 - sqrt(t_low/t_high)
sp = build_otto(special_otto(600.0, 300.0, gap_from_field(1600.0)))
print(sp.t1, sp.t3, evaluate_otto(sp).coefficient, 1 - math.sqrt(0.5))
