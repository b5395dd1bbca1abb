# Exact counts of t-sortable permutations ending in 0, far past brute force.
import time

from stacksort.dp import count_layers, count_sortable, count_table
from stacksort.oracle import brute_count

# small sizes agree with simulating every permutation
for n in range(1, 8):
    print(n, [count_sortable(n, t) for t in range(1, 5)], [brute_count(n, t) for t in range(1, 5)])
print()

# the state space stays small, which is why large n is cheap
for m, layer in count_layers(12, 3):
    print(f"m={m:2}  states={len(layer):5}  permutations={sum(layer.values())}")
print()

t0 = time.perf_counter()
for n, c in count_table(30, 2)[-3:]:
    print(n, c)
print(f"t=2 up to n=30 in {time.perf_counter() - t0:.2f}s")
