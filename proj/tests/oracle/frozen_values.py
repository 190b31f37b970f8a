"""Independent reference values frozen into the C++ tests.

Coefficients come from sympy series expansion of the functions themselves,
not from the closed forms used by the library. Run: python3 frozen_values.py
"""
import itertools

import mpmath as mp
import sympy as sp

mp.mp.dps = 40


def multivariate_coefficients(expr, variables, max_degree):
    """Taylor coefficients of expr in the given variables up to total degree max_degree."""
    t = sp.Symbol("t")
    scaled = expr.subs({v: t * v for v in variables}, simultaneous=True)
    series = sp.series(scaled, t, 0, max_degree + 1).removeO()
    poly = sp.Poly(sp.expand(series), t, *variables)
    coeffs = {}
    for monom, c in poly.terms():
        coeffs[monom[1:]] = c
    return coeffs


def literal_area(coeffs, radii):
    total = sp.Integer(0)
    for alpha, c in coeffs.items():
        k = sum(alpha)
        if k == 0:
            continue
        mono = sp.Integer(1)
        for ai, ri in zip(alpha, radii):
            mono *= ri ** (2 * ai)
        total += k * abs(c) ** 2 * mono
    return total


def majorant_tail(coeffs, radii):
    total = sp.Integer(0)
    for alpha, c in coeffs.items():
        if sum(alpha) == 0:
            continue
        mono = sp.Integer(1)
        for ai, ri in zip(alpha, radii):
            mono *= ri ** ai
        total += abs(c) * mono
    return total


def show(label, value):
    print(f"{label} = {mp.nstr(mp.mpf(sp.N(value, 40)), 17)}")


z1, z2, z3 = sp.symbols("z1 z2 z3")
a = sp.Rational(3, 5)

# (a - s) / (1 - a s) with s = z1 + z2, at r = 1/6, through degree 40.
unit2 = (a - (z1 + z2)) / (1 - a * (z1 + z2))
c = multivariate_coefficients(unit2, [z1, z2], 40)
show("literal area unit:0.6,2 r=1/6 K=40", literal_area(c, [sp.Rational(1, 6)] * 2))
show("coefficient unit:0.6,2 alpha=(2,1)", c[(2, 1)])

# (a - s/2) / (1 - a s/2), at r = 1/2, through degree 60 (lemma (a) left side).
scaled2 = (a - (z1 + z2) / 2) / (1 - a * (z1 + z2) / 2)
c = multivariate_coefficients(scaled2, [z1, z2], 60)
show("literal area scaled:0.6,2 r=1/2 K=60", literal_area(c, [sp.Rational(1, 2)] * 2))
k2 = sum(abs(v) ** 2 for al, v in c.items() if sum(al) == 2)
show("degree-2 square sum scaled:0.6,2", k2)

# three variables, vector radius, majorant tail of the scaled family
scaled3 = (sp.Rational(1, 2) - (z1 + z2 + z3) / 3) / (1 - sp.Rational(1, 2) * (z1 + z2 + z3) / 3)
c = multivariate_coefficients(scaled3, [z1, z2, z3], 30)
show("majorant tail scaled:0.5,3 r=(0.1,0.2,0.3) K=30",
     majorant_tail(c, [sp.Rational(1, 10), sp.Rational(2, 10), sp.Rational(3, 10)]))

# Blaschke product with zeros 1/2 and -3i/10.
z = sp.Symbol("z")
w1, w2 = sp.Rational(1, 2), -3 * sp.I / 10
blaschke = (z - w1) / (1 - sp.conjugate(w1) * z) * (z - w2) / (1 - sp.conjugate(w2) * z)
ser = sp.series(blaschke, z, 0, 81).removeO()
coeffs = [sp.nsimplify(sp.expand(ser).coeff(z, m)) for m in range(81)]
r = sp.Rational(2, 5)
show("blaschke majorant r=0.4 K=80", sum(sp.Abs(cm) * r**m for m, cm in enumerate(coeffs)))
show("blaschke area r=0.4 K=80", sum(m * sp.Abs(cm) ** 2 * r ** (2 * m) for m, cm in enumerate(coeffs)))
show("blaschke c3 real", sp.re(coeffs[3]))
show("blaschke c3 imag", sp.im(coeffs[3]))

# Torus supremum of |unit:0.6,2| on |z1| = |z2| = 0.2, brute force over a fine grid.
best = mp.mpf(0)
m = 720
for i, j in itertools.product(range(m), repeat=2):
    s = 0.2 * mp.expjpi(2 * mp.mpf(i) / m) + 0.2 * mp.expjpi(2 * mp.mpf(j) / m)
    best = max(best, abs((mp.mpf("0.6") - s) / (1 - mp.mpf("0.6") * s)))
print(f"torus sup unit:0.6,2 r=0.2 = {mp.nstr(best, 17)}")
