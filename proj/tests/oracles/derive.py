"""Independent reference values frozen into the unit tests.

Special functions, constants and the kernel use mpmath at 40 digits. The
majorants and the bound use a separate scipy implementation written from the
formulas, not from the C++ sources. Run: python3 tests/oracles/derive.py
"""
from math import cos, exp, pi, sin, sqrt, tan, hypot

import mpmath as mp
from scipy import integrate, special

mp.mp.dps = 40

print("# special functions")
for x in [-8, -3, -1, 0, 0.5, 1, 2.5, 6]:
    print(f"Phi({x}) = {mp.nstr(mp.ncdf(x), 17)}")
for x in [1e-6, 0.1, 1, 5, 30, 200]:
    print(f"E1({x}) = {mp.nstr(mp.e1(x), 17)}")

print("# constants")
th0 = mp.findroot(lambda t: t**2 + 2 * t * mp.sin(t) + 6 * (mp.cos(t) - 1), 4.0)
kap = (mp.cos(th0) - 1 + th0**2 / 2) / th0**3
brr_x = mp.findroot(lambda x: mp.npdf(x) - 2 * x / (1 + x**2) ** 2, (0.1, 0.3), solver="anderson")
brr = mp.ncdf(brr_x) - brr_x**2 / (1 + brr_x**2)
print("theta0 =", mp.nstr(th0, 17))
print("kappa =", mp.nstr(kap, 17))
print("esseen =", mp.nstr((mp.sqrt(10) + 3) / (6 * mp.sqrt(2 * mp.pi)), 17))
print("brr =", mp.nstr(brr, 17), "at x =", mp.nstr(brr_x, 17))

print("# kernel")
for t in [1e-3, 0.01, 0.1, 0.25, 0.5, 0.75, 0.9, 0.999]:
    t = mp.mpf(t)
    re = (1 - t) / 2
    im = ((1 - t) * mp.cot(mp.pi * t) + 1 / mp.pi) / 2
    dep = im - 1 / (2 * mp.pi * t)
    print(f"K({mp.nstr(t, 4)}) = {mp.nstr(re, 17)} + {mp.nstr(im, 17)}i ; "
          f"|K - i/(2 pi t)| = {mp.nstr(mp.hypot(re, dep), 17)}")

th0f, kapf = float(th0), float(kap)


def psi(t, e):
    t = abs(t)
    if e * t <= th0f:
        return t * t / 2 - kapf * e * t**3
    if e * t <= 2 * pi:
        return (1 - cos(e * t)) / e**2
    return 0.0


def maj(t, n, l):
    e = l + 1 / sqrt(n)
    m = max(1 - 2 * psi(t, e) / n, 0.0) ** (n / 2)
    if abs(t) <= pi / 2 * sqrt(n):
        p = psi(t, l)
        m = min(m, ((1 - p / n) ** 2 + l * l * t**6 / (36 * n * n)) ** (n / 2))
    return min(m, 1.0)


def cap(u, l):
    return sin(min(u * l / 4, pi / 2))


def quad(f, a, b):
    return integrate.quad(f, a, b, limit=500, epsabs=1e-13, epsrel=1e-12)[0]


def r_int(t, n, l):
    if t == 0:
        return 0.0
    return 2 * quad(lambda u: u * exp((u * u - t * t) / 2) * cap(u, l) * maj(u, n, l) ** ((n - 1) / n), 0, t)


def r_tel(t, n, l):
    if t == 0:
        return 0.0
    j = quad(lambda u: u * exp(u * u / (2 * n)) * cap(u, l), 0, t)
    a, b = exp(-t * t / (2 * n)), maj(t, n, l) ** (1 / n)
    return 2 * j * sum(b ** (n - k - 1) * a ** (k + 1) for k in range(n)) / n


def rn(t, n, l):
    return min(r_int(t, n, l), r_tel(t, n, l), maj(t, n, l) + exp(-t * t / 2), 2.0)


print("# majorants")
for n, b3, t in [(4, 1.284, 0.7), (4, 1.284, 2.0), (4, 1.284, 3.5), (1, 1.5, 1.2), (10, 2.0, 2.5), (6, 1.0, 4.0)]:
    l = b3 / sqrt(n)
    print(f"n={n} beta3={b3} t={t}: |f_n|<= {maj(t, n, l):.15g} r_int={r_int(t, n, l):.15g} "
          f"r_tel={r_tel(t, n, l):.15g} rn={rn(t, n, l):.15g}")


def kabs(t):
    return hypot(0.5 * (1 - t), 0.5 * ((1 - t) / tan(pi * t) + 1 / pi))


def kdep(t):
    return hypot(0.5 * (1 - t), 0.5 * ((1 - t) / tan(pi * t) + 1 / pi) - 1 / (2 * pi * t))


def bound(n, b3, t0, T):
    l = b3 / sqrt(n)
    i1 = 2 * quad(lambda t: kabs(t) * rn(T * t, n, l), 0, t0)
    i2 = 2 * quad(lambda t: kabs(t) * maj(T * t, n, l), t0, 1)
    i3 = 2 * quad(lambda t: kdep(t) * exp(-T * T * t * t / 2), 0, t0)
    i4 = special.exp1(T * T * t0 * t0 / 2) / (2 * pi)
    return i1, i2, i3, i4


print("# bound")
for n, b3, t0, T, s in [(4, 1.284, 0.398, 5.451, 0.429), (4, 1.261, 0.394, 5.513, 0.415),
                        (6, 1.0, 0.317, 7.723, 0.415)]:
    parts = bound(n, b3, t0, T)
    tot = sum(parts)
    print(f"n={n} beta3={b3} t0={t0} T={T}: " + " ".join(f"{p:.12g}" for p in parts)
          + f" total={tot:.12g} ratio={tot * sqrt(n) / (b3 + s):.12g}")
