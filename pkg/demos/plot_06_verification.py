"""
Randomised verification
=======================

A seeded run of every identity, as performed by ``kelpbed verify``.
"""

from kelpbed.verification import format_report, verify

###############################################################################
# Same seed, same report.
report = verify(trials=200, n=5, max_entry=3, seed=42)
print(format_report(report), end="")
