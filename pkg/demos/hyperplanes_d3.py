#!/usr/bin/env python3
"""Unit minors of a d x n TP matrix as point-hyperplane incidences (d = 3).

For each (d-1)-tuple I of columns, the cofactor hyperplane at level 1 passes
through exactly those later columns p_k whose d x d minor on I + (k) equals 1.
The family is pairwise distinct and its incidence graph with the columns is
K_{d,2}-free, which is what caps the number of repeated minors.
"""

from tpminors import (
    count_minors_equal,
    hyperplane_family,
    point_hyperplane_incidences,
    power_sum_matrix,
    scale_to_unit,
    verify_no_Kd2,
)

A = power_sum_matrix(range(1, 9), (3, 2, 1), 3)   # TP 3x8
A = scale_to_unit(A, (1, 2, 3), (1, 2, 3))        # force at least one unit minor

fam = hyperplane_family(A, 1)
print("3x%d TP matrix -> %d cofactor hyperplanes (pairwise distinct)"
      % (A.cols, len(fam)))

pts = [A.column(j) for j in range(1, A.cols + 1)]
ordered = point_hyperplane_incidences(
    pts, [h for _, h in fam], [I for I, _ in fam]
)
brute = count_minors_equal(A, 3, 1, scope="columns-only")
print("ordered incidences at level 1: %d" % ordered)
print("unit 3x3 minors (columns-only): %d" % brute)
print("equal: %s" % (ordered == brute))

ok, witness = verify_no_Kd2(pts, [h for _, h in fam])
print("incidence graph K_{3,2}-free: %s" % ok)
