"""Boundary values of the sectionally analytic function.

Phi(z) = integral of f(x)/(x - z)^(n+1) over [a, b] is analytic off the
segment.  Approaching a point x0 inside the segment from above and below
gives two different limits Phi+ and Phi-; their average recovers the
principal value / finite part, and their difference is 2*pi*i times the
residue term.  The limits are taken by evaluating Phi at x0 + i*y on a
shrinking schedule of y and extrapolating to y = 0.
"""

import math

from apvint import apv_average
from apvint.cosexample import cos_problem
from apvint.spf import boundary_values

for n in (0, 1, 2):
    spec = cos_problem(n)
    rep = boundary_values(spec)
    avg = 0.5 * (rep.phi_plus + rep.phi_minus)
    jump = rep.phi_plus - rep.phi_minus
    contour = apv_average(spec).value
    print(f"n = {n}")
    print(f"    Phi+            {rep.phi_plus:.12f}")
    print(f"    Phi-            {rep.phi_minus:.12f}")
    print(f"    average (real)  {avg.real:.12f}   contour route {contour:.12f}")
    print(f"    jump / (2 pi i) {(jump / (2j * math.pi)):.12f}")
