# Watching the stack-sorting map work, one pass at a time.
from stacksort.cli import annotate
from stacksort.perm import iterates, sort_depth, stack_sort
from stacksort.tableau import column_blocks

p = (9, 3, 10, 7, 8, 2, 6, 1, 4, 5, 0)

# one pass: entries wait on the stack until something larger arrives
print("p      =", p)
print("s(p)   =", stack_sort(p))
print("depth  =", sort_depth(p))
print()

# every pass, with blocks in parentheses and the column values left bare
for k, q in enumerate(iterates(p)):
    print(k, annotate(q))
print()

# columns are what crosses the 0 on the next pass
for i in range(1, sort_depth(p) + 1):
    columns, blocks = column_blocks(p, i)
    print(f"pass {i}: columns {columns}  blocks {blocks}")
