# Turning a permutation into its tableau and back into a count.
from stacksort.hooks import count_for_tableau, hook_table, tableau_membership
from stacksort.oracle import primed_permutations
from stacksort.perm import sort_depth
from stacksort.tableau import build_tableau

p = (9, 3, 10, 7, 8, 2, 6, 1, 4, 5, 0)
T = build_tableau(p)

print("shape:", T.shape)
print(T.render())
print()

# width of the shape is the number of passes needed
print("width", max(T.shape), "= passes", sort_depth(p))
print()

print("hooks:")
for row in hook_table(T.shape).rows():
    print("  ", row)
print()

# the hook product predicts how many permutations share this exact tableau
predicted = count_for_tableau(T.shape, T)
print("predicted class size:", predicted)

# checking that takes all 10! permutations, so try a smaller one instead
q = (3, 1, 4, 2, 0)
Tq = build_tableau(q)
same = [r for r in primed_permutations(4) if build_tableau(r) == Tq]
print(f"{q}: predicted {count_for_tableau(Tq.shape, Tq)}, found {len(same)}: {same}")

# membership can be decided from p alone, without running the map
print("member:", tableau_membership(p, T.shape, T))
