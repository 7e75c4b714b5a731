"""Independent sympy computations behind the frozen expected values in the C++ tests.

Run: python3 tests/oracles/derive_expected.py
"""
from itertools import product
from math import factorial

import sympy as sp

x, y, xd, yd, z, zd = sp.symbols("x y xd yd z zd")


def rule(a, b1, b2, g):
    return a * x * y + b1 * x * yd + b2 * xd * y + g * xd * yd


def subst(P, m):
    return sp.expand(P.subs(m, simultaneous=True))


def assoc_diff(P):
    inner = subst(P, {x: y, xd: yd, y: z, yd: zd})
    lhs = subst(P, {y: y * z, yd: inner})
    left = subst(P, {})
    rhs = subst(P, {x: x * y, xd: left, y: z, yd: zd})
    return sp.expand(lhs - rhs)


print("reduce x^4 mod GB{x^2-y, y^2}:", sp.reduced(x**4, [x**2 - y, y**2], x, y, order="grevlex")[1])
print("GB{x^2-1, xy-1}:", list(sp.groebner([x**2 - 1, x * y - 1], x, y, order="grevlex")))
print("assoc diff for x*y + xd*yd:", assoc_diff(rule(1, 0, 0, 1)))
print("assoc diff for (1,2,2):", assoc_diff(rule(1, 2, 2, 2)))

# multiplicative unit for (1,2,2): alpha + beta*eta = 0
eta = sp.Symbol("eta")
print("eta(1,2,2):", sp.solve([1 + 2 * eta, 2 - 1 + 2 * eta], eta))

# infiltration extension of x^2 with Dx = x: D(ab) = a Db + Da b + Da Db
a_, da = x, x
print("infiltration D(x^2):", sp.expand(a_ * da + da * a_ + da * da))

# reversal commutation on x*y over 8 formal variables
X, Lx, Rx, LRx, Y, Ly, Ry, LRy = sp.symbols("x Lx Rx LRx y Ly Ry LRy")


def ext(P, D, poly):
    """P-extension of a variable map D to polynomials, recursive on monomials."""
    poly = sp.Poly(sp.expand(poly), *D.keys())
    out = 0
    for monom, c in poly.terms():
        vars_ = []
        for v, e in zip(D.keys(), monom):
            vars_ += [v] * e
        out += c * ext_mono(P, D, vars_)
    return sp.expand(out)


def ext_mono(P, D, vs):
    if len(vs) == 1:
        return D[vs[0]]
    head, rest = vs[0], vs[1:]
    m = sp.Mul(*rest)
    return subst(P, {x: head, xd: D[head], y: m, yd: ext_mono(P, D, rest)})


for name, trip in [("shuffle", (0, 1, 1, 0)), ("hadamard", (0, 0, 0, 1)), ("simple122", (1, 2, 2, 2))]:
    P = rule(*trip)
    DL = {X: Lx, Rx: LRx, Y: Ly, Ry: LRy, Lx: 0, LRx: 0, Ly: 0, LRy: 0}
    DR = {X: Rx, Lx: LRx, Y: Ry, Ly: LRy, Rx: 0, LRx: 0, Ry: 0, LRy: 0}
    xy = X * Y
    left = ext(P, DL, xy)
    rl = ext(P, DR, left)
    right = ext(P, DR, xy)
    lr = ext(P, DL, right)
    print(name, "rev-commutes:", sp.expand(rl - lr) == 0, "terms:", len(sp.Add.make_args(rl)), len(sp.Add.make_args(lr)))

# 2^n equivalence (shuffle): A: Dx = x, F x = 1, p = x^2; B: Dy = 2y, F y = 1, q = y
def shuffle_coeffs_pow(n):
    # D(x^k) = k x^(k-1) Dx = k x^k, so D^n x^2 = 2^n x^2
    return [2**k for k in range(n + 1)]

print("2^n table:", shuffle_coeffs_pow(10))
print("factorials:", [factorial(n) for n in range(9)])
print("double exp:", [2 ** (2**n) for n in range(5)])
