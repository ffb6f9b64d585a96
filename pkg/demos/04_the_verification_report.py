"""Run the whole verification suite and summarise it.

Flagged records are places where the derivation as usually typeset does not
hold as written; each carries both the printed and the consistent value.
"""

import time

from ramanujan58 import verification

start = time.perf_counter()
reports = verification.run()
elapsed = time.perf_counter() - start

for r in reports:
    print(r.to_text())
counts = verification.summary(reports)
print(f"\n{counts['pass']} passed, {counts['fail']} failed, {counts['flagged']} flagged in {elapsed:.1f} s")

print("\nflag details:")
for r in reports:
    if r.status == "flagged":
        print(f"- {r.id}: {r.notes}")
        for k, v in r.values.items():
            print(f"    {k} = {v}")
