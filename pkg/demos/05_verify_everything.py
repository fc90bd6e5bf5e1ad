"""Run all four verification claims across a small parameter grid.

Run with: python demos/05_verify_everything.py
Exits nonzero if any claim fails.
"""

import sys

from quotbox import (
    verify_hilb_counts,
    verify_product_formula,
    verify_rank2_free,
    verify_stanley,
)

GRID = [(1, 1, 1), (2, 1, 1), (1, 2, 1), (1, 1, 2), (2, 2, 1), (2, 2, 2), (1, 2, 3)]

reports = []
for v in GRID:
    order = 4 if v == (1, 1, 1) else 3
    reports.append(verify_product_formula(v, order))
for v in [(1, 1, 1), (2, 2, 1), (2, 2, 2), (1, 2, 3)]:
    reports.append(verify_stanley(v))
    reports.append(verify_hilb_counts(v))
reports.append(verify_rank2_free(8))

failures = 0
for report in reports:
    print(report.summary())
    if not report.ok:
        failures += 1

print(f"\n{len(reports)} claims, {failures} failures")
sys.exit(1 if failures else 0)
