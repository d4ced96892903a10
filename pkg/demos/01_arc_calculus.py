"""Arcs, admissibility, and the three functor actions.

For a modulus n, an arc (t, u) on the integer line is admissible when
u - t >= 2 and u - t = 1 (mod n).  Admissible arcs are the indecomposable
objects of the model; the suspension, Serre functor and AR translate act by
sliding arcs left.
"""

from infgon import Arc, ModelParams, component, cross, is_admissible, serre, shift, tau

p = ModelParams(3)

print("admissibility for n = 3:")
for arc in (Arc(-4, 3), Arc(3, 6), Arc(0, 1), Arc(-5, 5)):
    print(f"  {arc}: {is_admissible(arc, p)}")

a = Arc(2, 9)
print(f"\nfunctors on {a} (n = 3):")
print(f"  suspension  {shift(a, 1)}")
print(f"  AR translate {tau(a, p)}   (shift by n)")
print(f"  Serre        {serre(a, p)}   (shift by n + 1)")

print("\nthe quiver splits into n components, indexed by u mod n:")
for arc in (Arc(-4, 0), Arc(-1, 3), Arc(1, 8), Arc(0, 7)):
    print(f"  {arc} lives in component {component(arc, p)}")
print("suspension rotates through the components:")
b = Arc(-4, 6)
for k in range(4):
    print(f"  shift^{k} {shift(b, k)} -> component {component(shift(b, k), p)}")

print("\ncrossing is strict interleaving of endpoints:")
for x, y in ((Arc(-4, 3), Arc(-1, 6)), (Arc(-4, 3), Arc(-4, 6)), (Arc(-1, 3), Arc(-4, 6))):
    verdict = "cross" if cross(x, y) else "do not cross"
    print(f"  {x} and {y}: {verdict}")
