"""
Max-plus arithmetic in two minutes
==================================

The whole library runs on one algebraic structure: the real numbers
extended with -inf, where "addition" is max and "multiplication" is +.
This script walks the scalar and matrix layers.
"""

import numpy as np

from tropiloc.semiring import (
    BOTTOM,
    ONE,
    as_matrix,
    as_vector,
    conjugate_transpose,
    d1,
    dinf,
    identity,
    mat_mul,
    mat_vec,
    scalar_add,
    scalar_inv,
    scalar_mul,
)

# scalar layer: max is addition, + is multiplication
print("3 (+) 5   =", scalar_add(3.0, 5.0))        # max -> 5
print("3 (x) 5   =", scalar_mul(3.0, 5.0))        # sum -> 8
print("zero      =", BOTTOM)                       # -inf, neutral for (+)
print("one       =", ONE)                          # 0.0, neutral for (x)
print("inv(3)    =", scalar_inv(3.0))              # -3, since 3 + (-3) = 0

# the zero is absorbing for multiplication
print("3 (x) zero =", scalar_mul(3.0, BOTTOM))

# vectors and matrices are plain float64 numpy arrays; -inf encodes
# "no entry", and the constructors refuse NaN and +inf
a = as_matrix([[0.0, 2.0], [BOTTOM, 1.0]])
x = as_vector([1.0, -1.0])
print()
print("A =")
print(a)
print("A (x) x   =", mat_vec(a, x))  # rowwise max(a_ik + x_k)

# matrix product: (A (x) B)_ij = max_k a_ik + b_kj
b = as_matrix([[1.0, BOTTOM], [0.0, 0.0]])
print("A (x) B   =")
print(mat_mul(a, b))
print("I (x) A == A:", np.array_equal(mat_mul(identity(2), a), a))

# the conjugate transpose negates and flips; it is the workhorse behind
# every "largest solution" bound in the solvers
y = as_vector([2.0, 5.0])
print()
print("y~        =", conjugate_transpose(y))
print("y~ (x) y  =", float(mat_vec(conjugate_transpose(y)[None, :], y)[0]), "(always 0 for finite y)")

# the two metrics the location problems use
p = as_vector([3.0, 1.0])
q = as_vector([0.0, 5.0])
print()
print("Chebyshev distance  dinf =", dinf(p, q))
print("rectilinear distance d1  =", d1(p, q))
