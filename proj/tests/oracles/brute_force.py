"""Independent brute-force oracle for the frozen expected values in the C++ tests.

Everything here works from first definitions with fractions.Fraction and plain
coefficient lists; nothing is shared with the C++ implementation. Run it to
reprint the values that the test suites assert.
"""
from fractions import Fraction as F
from math import comb, factorial


def q_int(q, n):
    return sum(q ** k for k in range(n))


def poly_eval(c, x):
    return sum(ci * x ** i for i, ci in enumerate(c))


def deriv(c):
    return [i * c[i] for i in range(1, len(c))]


def falling(x, n):
    out = 1
    for j in range(n):
        out *= x - j
    return out


def psi_raise(c, psi):
    out = [F(0)] * (len(c) + 1)
    for n, cn in enumerate(c):
        out[n + 1] = cn * (n + 1) / psi(n + 1)
    return out


def psi_lower(c, psi):
    return [c[n] * psi(n) for n in range(1, len(c))]


def star(f, g, psi):
    out = [F(0)] * (len(f) + len(g))
    cur = list(g)
    for i, fi in enumerate(f):
        if i:
            cur = psi_raise(cur, psi)
        for j, v in enumerate(cur):
            out[j] += fi * v
    while out and out[-1] == 0:
        out.pop()
    return out


def show(name, value):
    print(f"{name}: {value}")


half = F(1, 2)
qpsi = lambda n: q_int(half, n)

# rebase(x^2 - 2x, 1): solve c0 + c1 (x-1) + c2 (x-1)^2 through x = 0, 1, 2.
p = [F(0), F(-2), F(1)]
v0, v1, v2 = (poly_eval(p, F(x)) for x in (0, 1, 2))
c0 = v1
c2 = (v0 + v2 - 2 * v1) / 2
c1 = (v2 - v0) / 2
show("rebase(x^2-2x,1)", [c0, c1, c2])

show("falling(3,2), falling(2,3)", (falling(3, 2), falling(2, 3)))
show("q=1/2 n_psi 1..4", [qpsi(n) for n in range(1, 5)])
fact3 = qpsi(1) * qpsi(2) * qpsi(3)
show("q=1/2 3_psi!, 3!/3_psi!", (fact3, 6 / fact3))

show("d_psi x^3 coefficient", 3 and qpsi(3))
show("x_psi x^2 coefficient", F(3) / qpsi(3))
# [d_psi, x_psi] on x^2
c = [F(0), F(0), F(1)]
lhs = psi_lower(psi_raise(c, qpsi), qpsi)
rhs = psi_raise(psi_lower(c, qpsi), qpsi)
show("[d,x] x^2", [a - b for a, b in zip(lhs, rhs + [0] * 5)])

# compose(Delta, a) on f(r) = r^2 at x = 4
a = lambda x: sum(k * k for k in range(x))
show("Delta a f at 4", a(5) - a(4))

# star products at q = 1/2
x = [F(0), F(1)]
show("x*x", star(x, x, qpsi))
show("x*x^2", star(x, [0, 0, F(1)], qpsi))
show("x^2*x", star([0, 0, F(1)], x, qpsi))
custom = lambda n: F(2) if n == 1 else F(n)
show("x*1 with 1_psi=2", star(x, [F(1)], custom))
show("(x*x)*x", star(star(x, x, qpsi), x, qpsi))
show("x*(x*x)", star(x, star(x, x, qpsi), qpsi))
show("x^{3*}", star(x, star(x, star(x, [F(1)], qpsi), qpsi), qpsi))
show("exp_psi(1) to x^2", [F(1) / (1 if n == 0 else F(1) * __import__('functools').reduce(lambda u, v: u * v, [qpsi(k) for k in range(1, n + 1)])) for n in range(3)])
show("obs-c x^2 coefficient", F(4) / (qpsi(1) * qpsi(2)))
# Leibniz f = x, g = x
lhs = psi_lower(star(x, x, qpsi), qpsi)
rhs_a = star([F(1)], x, qpsi)
rhs_b = star(x, psi_lower(x, qpsi), qpsi)
show("leibniz lhs, rhs", (lhs, [u + v for u, v in zip(rhs_a, rhs_b + [0])]))

# psi integration, q = 1/2
show("int_psi x^2 coefficient", 1 / qpsi(3))
show("int_0^1 t d_psi t", 1 / qpsi(2))

# Jackson sum truncated far out (float) vs closed form
import math
def jackson(c, q, z, terms):
    return (1 - q) * z * sum(poly_eval(c, q ** k * z) * q ** k for k in range(terms))
show("jackson x^2 q=1/2 z=1", jackson([0, 0, 1], 0.5, 1.0, 200))
show("jackson x^2 q=0.999 z=1", jackson([0, 0, 1], 0.999, 1.0, 200000))

# Cauchy kernels: iterated summation of 1, twice, at x = 3
a1 = lambda x: sum(1 for _ in range(x))
show("a(a 1)(3)", sum(a1(r) for r in range(3)))

# per partes, f = x, g = x^2, [0, 1]
def int_psi_def(c, lo, hi):
    anti = [F(0)] + [c[m] / qpsi(m + 1) for m in range(len(c))]
    return poly_eval(anti, hi) - poly_eval(anti, lo)
g = [F(0), F(0), F(1)]
lhs = int_psi_def(star(x, psi_lower(g, qpsi), qpsi), 0, 1)
fg = star(x, g, qpsi)
rhs = poly_eval(fg, 1) - poly_eval(fg, 0) - int_psi_def(star([F(1)], g, qpsi), 0, 1)
show("per partes lhs, rhs", (lhs, rhs))

# classical Bernoulli-Taylor x^3, alpha 1, x 2, n 2; remainder by exact antiderivative of (2-t)^2 * 3
f = [F(0), F(0), F(0), F(1)]
terms = []
d = f
for k in range(3):
    terms.append(poly_eval(d, F(1)) * F(1) ** k / factorial(k))
    d = deriv(d)
# integrand (2 - t)^2 / 2 * 6 = 3 (4 - 4t + t^2)
anti = lambda t: 3 * (4 * t - 2 * t * t + t ** 3 / 3)
show("classical terms, remainder", (terms, anti(F(2)) - anti(F(1))))

# delta Bernoulli-Taylor with brute-force difference tables
def diff_table(vals, k):
    for _ in range(k):
        vals = [vals[i + 1] - vals[i] for i in range(len(vals) - 1)]
    return vals
fx2 = [F(r * r) for r in range(0, 12)]
for n in (2, 1):
    terms = [F(falling(5, k), factorial(k)) * diff_table(fx2, k)[0] for k in range(n + 1)]
    rem = sum(F(falling(5 - r - 1, n), factorial(n)) * diff_table(fx2, n + 1)[r] for r in range(5))
    show(f"delta x^2 n={n} point 5", (terms, rem))

# maclaurin, printed signs, with nabla computed from a table on -5..10
def nabla(fun, k, xx):
    vals = [fun(xx - j) for j in range(k, -1, -1)]
    return diff_table(vals, k)[0]
def maclaurin(fun, alpha, n):
    terms = [F(falling(alpha, k), factorial(k)) * (-1) ** (k + 1) * nabla(fun, k, alpha) for k in range(n + 1)]
    rem = (-1) ** n * sum(F(falling(r, n), factorial(n)) * nabla(fun, n + 1, r + 1) for r in range(alpha))
    return terms, rem
show("maclaurin x^2 alpha 2 n 1", maclaurin(lambda t: F(t * t), 2, 1))
show("maclaurin x alpha 1 n 1", maclaurin(lambda t: F(t), 1, 1))
show("maclaurin 7 alpha 1 n 0 (sum = -f(0))", maclaurin(lambda t: F(7), 1, 0))
show("maclaurin x+1 alpha 1 n 1 (sum = -f(0))", maclaurin(lambda t: F(t + 1), 1, 1))

# psi Bernoulli-Taylor, f = x^2, q = 1/2, alpha 0, point 1, n 1, center 0
f = [F(0), F(0), F(1)]
T0 = f
T1 = [-v for v in psi_raise(psi_lower(f, qpsi), qpsi)]
G = [u + v for u, v in zip(T0 + [0] * 3, T1 + [0] * 3)]
integrand = psi_raise(psi_lower(psi_lower(f, qpsi), qpsi), qpsi)
show("psi G(1) - G(0), remainder", (poly_eval(G, 1) - poly_eval(G, 0), -int_psi_def(integrand, 0, 1)))

# literal psi formula, substitution reading, f = x^2, alpha 0, n 2
acc = [F(0)] * 3
d = f
for k in range(3):
    value = poly_eval(d, 0)
    sp = [F(0)] * k + [F(factorial(k)) / (1 if k == 0 else __import__('functools').reduce(lambda u, v: u * v, [qpsi(j) for j in range(1, k + 1)]))]
    term = star(sp, [value], qpsi) if value != 0 else []
    for i, v in enumerate(term):
        acc[i] += v / factorial(k)
    d = psi_lower(d, qpsi)
show("literal sum f=x^2", acc)
