"""Where 9801, 1103 and 26390 come from.

Everything follows from one unit of Q(sqrt 29): u = (5 + sqrt 29)/2, which
is also g_58^2.  Exact surd arithmetic shows the chain, including the one
step where the usual write-up says 9801 but the exact value is 1820 sqrt 29.
"""

from fractions import Fraction

from ramanujan58.exact_field import U29, pell_fundamental, surd_pow
from ramanujan58.invariants import exact58
from ramanujan58.numeric_kernel import pi_oracle

u3 = surd_pow(U29, 3)
u6 = surd_pow(U29, 6)
print(f"u    = {U29}   (norm {U29.norm()})")
print(f"u^3  = {u3}")
print(f"u^6  = {u6}")
print(f"Pell x^2 - 29 y^2 = 1: {pell_fundamental(29).x}, {pell_fundamental(29).y}")

ex = exact58()
print(f"\nk58  = {ex.k}")
print(f"x58  = 4k k'^2/(1+k^2)^2 = {ex.x}")
print(f"(g^12 + g^-12)/2 = {ex.half_sum}")
print(f"(g^12 - g^-12)/2 = {ex.half_diff}  ~ {ex.half_diff.to_real(20)}")

print(f"\nA = {ex.A}, and 2206 = 2 * 1103")
print(f"B = {ex.B}, and 52780 = 2 * 26390 = 2 * 29 * 70 * 13")
print(f"396^4 = 256 * 9801^2: {396 ** 4 == 256 * 9801 ** 2}")
print(f"alpha(58) = {ex.alpha}")
print(f"          ~ {ex.alpha.to_real(25)}, while 1/pi differs by {float(ex.alpha.to_real(40) - 1 / pi_oracle(40)):.2e}")
assert ex.x.c0 == Fraction(1, 9801)
