# Every permutation lands in exactly one shape, so the shape counts sum to n!.
from math import factorial

from stacksort.hooks import count_for_composition, hook_product, linear_extensions
from stacksort.tableau import compositions

n = 5
total = 0
for alpha in compositions(n):
    ext = linear_extensions(alpha)
    c = count_for_composition(alpha)
    total += c
    print(f"{str(alpha):18} extensions {ext:3}  hook product {hook_product(alpha):3}  -> {c}")
print("sum", total, "n!", factorial(n))
