"""Compute pi from the level-58 series and watch the digits arrive.

Each term of the series adds about eight correct digits.  We first look at
the partial sums directly, then let binary splitting produce ten thousand
digits and compare them with the Machin-formula oracle.
"""

import time
from fractions import Fraction

from ramanujan58.numeric_kernel import kernel_sqrt, pi_digits, pi_oracle, real
from ramanujan58.pi_engine import LiteralRamanujanTerm, digits_per_term, pi_ramanujan_string

inv_pi = 1 / pi_oracle(120)
root = 2 * kernel_sqrt(real(2, 120)) / 9801
partial = Fraction(0)
print("terms  error in 1/pi")
for n in range(6):
    partial += LiteralRamanujanTerm(n).value
    print(f"{n + 1:5d}  {float(abs(root * partial - inv_pi)):.3e}")

rep = digits_per_term()
print(f"\ndigits per term: analytic {rep.analytic.to_str(6)}, "
      f"measured {', '.join(f'{d:.3f}' for d in rep.digits_gained[:4])} ...")

start = time.perf_counter()
digits = pi_ramanujan_string(10_000)
elapsed = time.perf_counter() - start
print(f"\n10000 digits in {elapsed * 1000:.1f} ms; matches oracle: {digits == pi_digits(10_000)}")
print(digits[:52] + "...")
