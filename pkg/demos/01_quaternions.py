"""
Quaternions and their similarity classes
========================================

Two quaternions are similar when one is a unit-quaternion conjugate of the
other.  A class is fixed by the real part and the length of the imaginary
part, so each class has one representative in the closed upper half-plane.
"""

import numpy as np

from quatrange.quaternion import I, J, K, Quaternion, canonical_rep, parse_quaternion, similar

# %% The multiplication table: i j = k but j i = -k.
print("i*j =", I * J, "  j*i =", J * I, "  i*j*k =", I * J * K)

# %% Text form round-trips through the parser.
q = parse_quaternion("2+3j-4k")
print("q =", q, " |q| =", abs(q))

# %% Rotating q by any unit quaternion s keeps its class.
rng = np.random.default_rng(0)
s = Quaternion(*rng.standard_normal(4))
s = s / abs(s)
r = s.conj() * q * s
print("s* q s =", r)
print("similar(q, s* q s):", similar(q, r, 1e-12))

# %% The class representative: real part plus |Im| times i.
print("canonical_rep(q) =", canonical_rep(q), "(the imaginary part has length 5)")
