# Exhaustive structural checks plus the classical sequences as sanity anchors.
from stacksort.oracle import classic_counts, motzkin_report, verify_lemmas

for r in verify_lemmas(5):
    print(f"{'ok  ' if r.ok else 'FAIL'} {r.property:34} checked {r.checked}")
print()

# all permutations (no trailing 0): one pass gives Catalan, two give the closed form
for n in range(1, 8):
    print(n, classic_counts(n))
print()

# with 0 appended and two passes the counts look like Motzkin numbers
for row in motzkin_report(15):
    print(row["n"], row["count"], row["motzkin"], "ok" if row["match"] else "DIFFERS")
