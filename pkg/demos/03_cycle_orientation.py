"""
Products of even cycles
=======================

Both cycles run i -> i+1; even vertices play the role of side A. The claimed
diameter is max(m, n)/2 + 1. Some pairs come out one lower.
"""

from strongprod import directed_diameter
from strongprod.cycle_orient import claimed_cycle_diameter, orient_cycle_product

sizes = (4, 6, 8, 10, 12)
print("m\\n " + "".join(f"{n:>7d}" for n in sizes))
for m in sizes:
    cells = []
    for n in sizes:
        d = directed_diameter(orient_cycle_product(m, n).digraph).diameter
        c = claimed_cycle_diameter(m, n)
        cells.append(f"{d}/{c}" + ("*" if d != c else " "))
    print(f"{m:3d} " + "".join(f"{x:>7s}" for x in cells))
print("measured/claimed, * marks a difference")
