"""The seeded verification suites, end to end.

Each suite samples random instances from an explicit seed and checks one
structural statement exactly: coproducts of monos stay mono (with the
word-category expansion as a cross-check), filtered colimits preserve
kernels, colimits interchange with finite limits, and fixed points pass
through filtered colimits.
"""

import time

from abcat.verify import (ab4_suite, ab5_suite, commute_suite, fixpoints_suite,
                          harting_suite)

SEED = 20260808

for suite, trials in ((harting_suite, 10), (ab4_suite, 10), (ab5_suite, 10),
                      (commute_suite, 20), (fixpoints_suite, 10)):
    start = time.perf_counter()
    report = suite(trials, SEED)
    elapsed = time.perf_counter() - start
    flag = "ok" if report.ok else "FAILED"
    print(f"{report.name:45s} {flag}  ({trials} trials, {elapsed:.2f} s)")
