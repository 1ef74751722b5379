# # Verification reports
# Each suite compares a formula with its oracle. The conjecture suite only
# reports: it prints the conjectured doubly-refined values next to alpha.

from monotri.verify import run_suite

for name in ("formula", "q", "conjecture"):
    rep = run_suite(name)
    print(rep.to_text().splitlines()[-1])

for case in run_suite("conjecture").cases[:6]:
    print(case.input, "formula:", case.expected, "alpha:", case.actual)
