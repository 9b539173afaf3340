#!/usr/bin/env python3
"""The arithmetic side functions that predict extremal sumset sizes.

v_g(n,h) caps critical numbers from below; u(n,m,h) IS the minimum h-fold
sumset size of an m-subset of Z_n (and of any abelian group of order n);
uhat is its restricted sibling.  All are maxima/minima over the divisors
of n.
"""

from sumsetlab.sides import (h_critical, h_critical_bruteforce, u, u_hat, v,
                             v_hat, v_pm)

print("v_2(18,4) =", v(18, 4, 2), " (the accelerated path; pass check=True"
      " to re-derive it from the definition)")
print("v_2(18,4) =", v(18, 4, 2, check=True), " (checked)")

print("\nv_1(n,3) for n = 2..16:", [v(n, 3, 1) for n in range(2, 17)])
print("v_pm(n,3) for n = 2..16:", [v_pm(n, 3) for n in range(2, 17)])

print("\nu(15,m,h): minimum h-fold sumset size of an m-subset of Z15")
print("m:          ", list(range(1, 16)))
for h in (2, 3, 4, 5):
    print(f"h={h}:        ", [u(15, m, h) for m in range(1, 16)])

print("\nuhat(15,m,h): same for sums of distinct elements")
for h in (2, 3, 4, 5):
    row = ["." if m <= h else u_hat(15, m, h) for m in range(1, 16)]
    print(f"h={h}:        ", row)

# The h-critical number of n: the least m forcing u(n,m,h) = n.  The
# closed form v_1(n,h)+1 matches a direct scan.
print("\nh-critical numbers of n = 12:")
for h in (1, 2, 3, 4):
    print(f"  h={h}: closed form {h_critical(12, h)},"
          f" scan {h_critical_bruteforce(12, h)}")

print("\nvhat(n,2) for n = 2..16:", [v_hat(n, 2) for n in range(2, 17)])
