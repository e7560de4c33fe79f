"""Closed-form checks for the cos(x)/x^(n+1) problem on [-1, 1].

For odd n the finite part has a closed form in cos 1, sin 1 and the sine
integral Si(1); even n (and the n = 0 principal value) vanish by symmetry.
This script evaluates the contour-average route and prints it next to the
closed forms.
"""

import math

from apvint import apv_average
from apvint.cosexample import cos_problem, si

si1 = si(1.0)
closed = {
    0: 0.0,
    1: -2.0 * (math.cos(1.0) + si1),
    2: 0.0,
    3: (si1 + math.sin(1.0) - math.cos(1.0)) / 3.0,
    4: 0.0,
}

print(f"{'n':>3} {'contour average':>22} {'closed form':>22} {'abs err':>10}")
for n, exact in closed.items():
    rep = apv_average(cos_problem(n))
    print(f"{n:>3} {rep.value:>22.15f} {exact:>22.15f} {abs(rep.value - exact):>10.2e}")
