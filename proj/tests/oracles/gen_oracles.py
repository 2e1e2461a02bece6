#!/usr/bin/env python3
"""Freeze reference values computed with mpmath and a smallest-prime-factor
sieve into values.hpp. Run once; the output is committed."""

import mpmath as mp

mp.mp.dps = 50


def mu_table(n):
    spf = list(range(n + 1))
    i = 2
    while i * i <= n:
        if spf[i] == i:
            for j in range(i * i, n + 1, i):
                if spf[j] == j:
                    spf[j] = i
        i += 1
    mu = [0] * (n + 1)
    mu[1] = 1
    for k in range(2, n + 1):
        p = spf[k]
        q = k // p
        mu[k] = 0 if q % p == 0 else -mu[q]
    return mu


MU = mu_table(10**6)


def s(x):
    return mp.mpf(x)


def fmt(v):
    return mp.nstr(v, 40, min_fixed=-5, max_fixed=5)


zeta_points = [
    ("2", 2, 0), ("3", 3, 0), ("0", 0, 0), ("1.5", 1.5, 0), ("-0.5", -0.5, 0),
    ("0.5+14.13i", 0.5, 14.13), ("0.5+10i", 0.5, 10), ("0.5+3i", 0.5, 3),
    ("1.04", 1.04, 0), ("2+5i", 2, 5), ("-0.5+14.13i", -0.5, 14.13),
    ("3+14.13i", 3, 14.13), ("1.0001+5i", 1.0001, 5),
]

def split(name):
    if not name.endswith("i"):
        return name, "0"
    k = max(name.rfind("+"), name.rfind("-"))
    return name[:k], name[k:-1]


out = []
out.append("#pragma once")
out.append("// Generated by gen_oracles.py (mpmath, 50 digits). Do not edit.")
out.append("")
out.append("namespace oracle_values {")
out.append("")
out.append(f"inline constexpr long long mertens_1e6 = {sum(MU[1:])};")
out.append(f"inline constexpr long long mertens_1e5 = {sum(MU[1:100001])};")
out.append("")
out.append("struct ZetaPoint { const char* s; double sigma, tau; const char* re; const char* im; const char* dre; const char* dim; };")
out.append("inline const ZetaPoint zeta_points[] = {")
for name, a, b in zeta_points:
    # evaluate at the decimal point itself, not its double rounding
    pt = mp.mpc(*(mp.mpf(v) for v in split(name)))
    z = mp.zeta(pt)
    d = mp.zeta(pt, derivative=1)
    out.append(f'    {{"{name}", {a}, {b}, "{fmt(z.real)}", "{fmt(z.imag)}", "{fmt(d.real)}", "{fmt(d.imag)}"}},')
out.append("};")
out.append("")

# (s-1) zeta(s) near the pole
sig = 1 + mp.mpf("1e-6")
out.append(f'inline const char* pole_product = "{fmt((sig - 1) * mp.zeta(sig))}";')

# exact signed L1 integral of Q_s / t^2
def qref(x):
    return 1 / (x - 1) - mp.zeta(x) + mp.euler
out.append(f'inline const char* q_l1_s2 = "{fmt(qref(s(2)))}";')
out.append(f'inline const char* q_l1_s3 = "{fmt(qref(s(3)))}";')
out.append(f'inline const char* q_l1_s1p5 = "{fmt(qref(s(1.5)))}";')
out.append(f'inline const char* q_l1_s1p0001 = "{fmt(qref(1 + mp.mpf("1e-4")))}";')

# Landau constants
def landau(a, b):
    r = mp.mpc(a, b)
    return 1 / (1 + abs(r - 1) * abs(r) / r.real)
out.append(f'inline const char* landau_14134725 = "{fmt(landau(0.5, mp.mpf("14.134725")))}";')
out.append(f'inline const char* landau_1413 = "{fmt(landau(0.5, mp.mpf("14.13")))}";')

# direct sums
def m(x):
    return mp.fsum(mp.mpf(MU[n]) / n for n in range(1, int(x) + 1))
def mcheck(x):
    return mp.fsum(mp.mpf(MU[n]) / n * mp.log(mp.mpf(x) / n) for n in range(1, int(x) + 1))
def mdcheck(x):
    return mp.fsum(mp.mpf(MU[n]) / n * mp.log(mp.mpf(x) / n) ** 2 for n in range(1, int(x) + 1))
out.append(f'inline const char* m_10 = "{fmt(m(10))}";')
out.append(f'inline const char* mcheck_100 = "{fmt(mcheck(100))}";')
out.append(f'inline const char* mcheck_50 = "{fmt(mcheck(50))}";')
out.append(f'inline const char* mdcheck_1000 = "{fmt(mdcheck(1000))}";')
out.append(f'inline const char* harmonic_1e6 = "{fmt(mp.harmonic(10**6))}";')
out.append("")
out.append("} // namespace oracle_values")

with open(__file__.replace("gen_oracles.py", "values.hpp"), "w") as f:
    f.write("\n".join(out) + "\n")
