"""The graded intersection ring: rewriting, pushforwards, the height.

Classes are polynomials in the base hyperplane and the tautological class
plus analytic a(*) terms.  Two rewrite rules put every product into normal
form; the degree map halves the mass of what remains.  The height of the
polarized model comes out of the same machinery along two routes.
"""

from hirzebruch_torsion import chow, torsion

n = 3
print(f"ruling index n = {n}\n")

print("Rewriting the cube of the tautological class (with trace):")
trace = []
cube = chow.height_class(n, trace)
print("  normal form:", cube)
print("  rewrite steps:")
for step in trace:
    print(f"    {step['rule']:<22s} {step['before']} -> {step['after']}")

print("\nDegree of the cube (= the arithmetic height):")
print("  ", chow.pushforward_deg(cube))

print("\nThe pushforward route through the base model:")
s1, s2 = chow.segre_classes(n)
print("  first class :", s1)
print("  second class:", s2)
print("  degree      :", chow.pushforward_deg(s2))
print("  closed form :", torsion.closed_height(n))

print("\nHeights for small n:")
for k in range(0, 8):
    print(f"  n={k}: {torsion.height(k)}")

print("\nExample reductions:")
examples = [
    ("xhat^2 (base model)", chow.ChowClass(n, chow.BASE, {(2, 0): 1})),
    ("xhat^3 (base model)", chow.ChowClass(n, chow.BASE, {(3, 0): 1})),
    ("ahat^2*xhat", chow.ChowClass(n, chow.SURFACE, {(1, 2): 1})),
]
for label, cls in examples:
    print(f"  {label:<22s} -> {chow.reduce(cls)}")

print("\nDegrees of the standard pushforward examples:")
print("  deg(xhat^2 on the base)  =",
      chow.pushforward_deg(chow.ChowClass(n, chow.BASE, {(2, 0): 1})))
print("  deg(ahat*xhat^2)         =",
      chow.pushforward_deg(chow.ChowClass(n, chow.SURFACE, {(2, 1): 1})))
print("  deg(ahat^2*xhat)         =",
      chow.pushforward_deg(chow.ChowClass(n, chow.SURFACE, {(1, 2): 1})))
