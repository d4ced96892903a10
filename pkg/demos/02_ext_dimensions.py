"""Hom and Ext dimensions, and why crossing is the whole story.

Every Hom space between indecomposables has dimension 0 or 1, and two arcs
cross exactly when some Ext^i between them (1 <= i <= n) is nonzero.  The
extension triangle writes the crossing resolution down explicitly.
"""

from infgon import (
    Arc,
    ModelParams,
    Window,
    admissible_arcs_in,
    cross,
    ext_dim,
    ext_profile,
    ext_triangle,
    hom_dim,
    serre,
)

p = ModelParams(3)
x, y = Arc(2, 9), Arc(-1, 6)

print(f"n = 3, x = {x}, y = {y} (they cross)")
print(f"  ext profile of (x, y): {ext_profile(x, y, p)}")
print(f"  ext profile of (y, x): {ext_profile(y, x, p)}")
print(f"  hom(x, y) = {hom_dim(x, y, p)}, hom(y, x) = {hom_dim(y, x, p)}")

tri = ext_triangle(x, y, p)
print(f"  triangle for Ext^1(x, y):  {tri.left} -> {tri.mid1} (+) {tri.mid2} -> {tri.right}")

z = Arc(-4, 6)
print(f"\nnon-crossing pair x = {Arc(-4, 3)}, z = {z}:")
print(f"  ext profile: {ext_profile(Arc(-4, 3), z, p)}  (all degrees vanish)")

print("\nexhaustive dictionary check on a small window:")
arcs = list(admissible_arcs_in(Window(-8, 8), p))
agree = sum(
    1
    for a in arcs
    for b in arcs
    if cross(a, b) == any(ext_dim(a, b, i, p) for i in (1, 2, 3))
)
print(f"  crossing == (some Ext survives) for {agree}/{len(arcs) ** 2} ordered pairs")

print("\nthe Serre functor trades directions and degrees:")
a, b = Arc(-1, 6), Arc(2, 9)
for i in (1, 2, 3):
    print(
        f"  dim Ext^{i}({a}, {b}) = {ext_dim(a, b, i, p)}"
        f"   dim Ext^{4 - i}({b}, {a}) = {ext_dim(b, a, 4 - i, p)}"
    )
print(f"  hom({a}, {b}) = {hom_dim(a, b, p)} = hom({b}, S{a}) = {hom_dim(b, serre(a, p), p)}")
