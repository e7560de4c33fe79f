"""Large-n expansion of the cos finite part versus quadrature.

The finite part of cos(x)/x^(n+1) on [-1, 1] admits a large-n expansion in
powers of 1/n (odd n only; even n vanish identically).  With six terms the
truncation error decays like n^-7.  This script tabulates the error and the
fitted log-log slope, and leaves a CSV behind for plotting.
"""

import numpy as np

from apvint.cosexample import write_asymptotic_csv
from apvint.quadrature import QuadConfig

cfg = QuadConfig(rel_tol=1e-13, abs_tol=1e-14, max_subdivisions=4000)
ns = list(range(21, 82, 10))
rows = write_asymptotic_csv("asymptotic_decay.csv", ns, terms=6, cfg=cfg)

print(f"{'n':>5} {'quadrature':>16} {'expansion':>16} {'abs err':>10}")
for n, ref, asym, err in rows:
    print(f"{n:>5} {ref:>16.10f} {asym:>16.10f} {err:>10.2e}")

slope = np.polyfit(np.log([r[0] for r in rows]), np.log([r[3] for r in rows]), 1)[0]
print(f"\nfitted error slope: {slope:.2f}  (expected about -7)")
print("wrote asymptotic_decay.csv")
