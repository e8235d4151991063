"""
Running the verification suites
===============================

``heckeduality.verify.run`` drives every check over a roster of systems and
all their parabolic subsets and returns a report that serializes to JSON or
markdown.  The ``heckeduality verify`` command is a thin wrapper around it.
"""

from heckeduality.verify import PROBE_TITLE, SuiteConfig, run

config = SuiteConfig(systems=["A2", "B2"], parabolics="all", suites=["all"], seed=1)
report = run(config)
print(len(report.entries), "checks,", len(report.failures), "failures")

###############################################################################
# The probe section records pairs ``x < y`` in Bruhat order for which
# ``l(x^-1 y) != l(y) - l(x)``.  It never fails the run.

for name, finding in report.findings[PROBE_TITLE].items():
    print(name, finding["bruhat_pairs"], "pairs,", len(finding["counterexamples"]), "without length additivity")
    for line in finding["counterexamples"][:2]:
        print("   ", line)

###############################################################################
# The markdown rendering starts with a summary table.

print("\n".join(report.to_markdown().splitlines()[:12]))
