"""Exact constants: the rational span behind every closed form.

Every symbolic value the engine produces lives in the rational span of
1, log(pi), prime logarithms, zeta'(-1) and zeta(-1).  This demo shows how
differently assembled expressions land on one normal form, and how the
numerical evaluation is anchored to frozen high-precision references.
"""

from fractions import Fraction

from hirzebruch_torsion.constants import (
    ExactConstant,
    LOG_PI,
    ZETA_M1,
    ZETA_PRIME_M1,
    atom_table,
    log_2pi,
    log_rational,
)

print("Atom basis with reference values")
for label, ref in atom_table():
    print(f"  {label:<12s} {ref}")

print("\nlog(2*pi) decomposes into prime-log + log(pi) atoms:")
print("  log(2*pi)         =", log_2pi())
print("  log(2*pi)-log(pi) =", log_2pi() - ExactConstant.atom(LOG_PI))

print("\nLogs of rationals factor through the primes:")
for q in (Fraction(3, 2), Fraction(4), Fraction(35, 12)):
    print(f"  log({q}) = {log_rational(q)}")

print("\nThe torsion of the projective line, assembled atom by atom:")
tau = (ExactConstant.rational(1) + log_2pi()).scale(Fraction(1, 3)) \
    - ExactConstant.atom(ZETA_PRIME_M1, 4) - ExactConstant.atom(ZETA_M1, 2)
print("  tau =", tau)
print("  tau as float =", tau.to_float())
print("  doubled      =", (tau + tau))

print("\nJSON serialization (exact, round-trips):")
print(" ", tau.to_json_dict())
