#!/usr/bin/env python3
"""The grid matrix / rectangle dictionary.

The n x n grid matrix (entries: decreasing row offset + column index) is
TP_2, and each of its 2x2 minors equals the area of an axis-parallel
rectangle in the integer grid [1..n]^2.  So the minor-value census, the
rectangle counter, and the divisor-sum closed form must all agree -- and the
most repeated minor is driven by the divisor function.
"""

from tpminors import (
    Point2,
    best_k,
    divisor_count,
    grid_area_k_count,
    grid_matrix,
    max_repeated_minor,
    minor_census,
    unit_rectangles,
    verify_tp,
)

n = 8
G = grid_matrix(n)
print("grid matrix n=%d, TP_2: %s" % (n, verify_tp(G, 2).ok))

census = minor_census(G, 2, scope="all-pairs")
pts = [Point2(x, y) for x in range(1, n + 1) for y in range(1, n + 1)]
print("value  census  rectangles  closed-form")
for v in sorted(census)[:10]:
    k = int(v)
    print("%5d  %6d  %10d  %11d"
          % (k, census[v], unit_rectangles(pts, k), grid_area_k_count(n, k)))

value, count = max_repeated_minor(G, 2)
print("most repeated minor: value %s with multiplicity %d" % (value, count))

print()
print("the divisor function drives the best area:")
for n in (20, 50, 100):
    k, d = best_k(n)
    print("  n=%3d  best k<=n/2 by div: k=%d (div=%d), area-k rectangles: %d"
          % (n, k, d, grid_area_k_count(n, k)))
