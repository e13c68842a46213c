"""
Closures and complete solution sets of linear inequalities
==========================================================

Two facts carry all the location solvers:

1. A x <= d is solved exactly by x <= (d~ A)~, and that bound is tight.
2. x >= A x (+) p has solutions iff every cycle of A has nonpositive
   weight; then the solutions are x = A* u for u >= p, with A* the
   closure I (+) A (+) A^2 (+) ...
"""

import numpy as np

from tropiloc.linear import solve_double, solve_fixed_point, solve_upper
from tropiloc.semiring import BOTTOM, as_matrix, as_vector, mat_vec, trace_and_closure

a = as_matrix([[0.0, 2.0], [BOTTOM, 1.0]])
d = as_vector([3.0, 4.0])

xbar = solve_upper(a, d)
print("largest x with A x <= d:", xbar)
print("check  A xbar =", mat_vec(a, xbar), "<=", d)

# the closure: trace_and_closure reports the heaviest cycle weight too
b = as_matrix([[BOTTOM, 1.0], [-3.0, BOTTOM]])
gauge, star = trace_and_closure(b)
print()
print("cycle gauge Tr(B) =", gauge, "(<= 0, so B* exists)")
print("B* =")
print(star)

# with a positive cycle there is no closure and no solution
bad = as_matrix([[BOTTOM, 2.0], [-1.0, BOTTOM]])
gauge, star = trace_and_closure(bad)
print()
print("positive cycle example: gauge =", gauge, "closure =", star)

# fixed points: all solutions of x >= B x (+) p form the family B* u, u >= p
p = as_vector([0.0, -5.0])
fam = solve_fixed_point(b, p)
print()
print("generator of {x : x >= B x (+) p}:")
print(fam.generator)
print("least solution:", fam.member(fam.u_lo))

# two-sided systems add an upper bound on x and may come back empty
up = as_vector([10.0, 10.0])
fam = solve_double(b, p, up)
print()
print("double inequality family: u in [", fam.u_lo, ",", fam.u_hi, "]")
print("sample member:", fam.member(np.array([2.0, -1.0])))
