#!/usr/bin/env python3
"""Reference values for the polylog tests, from mpmath at 40 digits.

Writes tests/oracle_values.inc. Rerun after changing the sample points.
"""
import mpmath as mp

mp.mp.dps = 40

POINTS = [
    mp.mpc(0.3, 0.4), mp.mpc(-0.7, 0.2), mp.mpc(2, 1), mp.mpc(0, 1), mp.mpc(3, 0),
    mp.mpc(0.5, -0.9), mp.mpc(-4, -3), mp.mpc(1.2, 0.05), mp.mpc(0.9, 0.3), mp.mpc(-0.2, 0),
    mp.mpc(7, 2), mp.mpc(0.05, 0.01), mp.mpc(1, 1), mp.mpc(-1, 0), mp.mpc(0.999, 0.001),
]


def proj(w, m):
    # coefficient of i^m in pi_m(w)
    return mp.re(w * mp.power(1j, -m))


def pmod(n, z):
    s = mp.mpc(0)
    L = mp.log(abs(z))
    for k in range(n):
        s += mp.mpf(2) ** k * mp.bernoulli(k) / mp.factorial(k) * L ** k * mp.polylog(n - k, z)
    return proj(s, n - 1)


def pzag(n, z):
    s = mp.mpc(0)
    L = mp.log(abs(z))
    for k in range(n):
        s += (-L) ** k / mp.factorial(k) * mp.polylog(n - k, z)
    return proj(s, n - 1)


def main():
    rows = []
    for z in POINTS:
        for n in range(2, 6):
            rows.append((n, z, pmod(n, z), pzag(n, z)))
    li = [(k, z, mp.polylog(k, z)) for k in (1, 2, 3, 4) for z in POINTS if not (k == 1 and z == 1)]
    with open("tests/oracle_values.inc", "w") as f:
        f.write("// Generated by tools/gen_oracle.py (mpmath, 40 digits). Do not edit.\n")
        f.write("// {n, re z, im z, P_n^mod coeff, P_n,Zag coeff}\n")
        f.write("static const OracleRow kPolylogOracle[] = {\n")
        for n, z, a, b in rows:
            f.write(f"    {{{n}, {mp.nstr(z.real, 17)}, {mp.nstr(z.imag, 17)}, {mp.nstr(a, 20)}, {mp.nstr(b, 20)}}},\n")
        f.write("};\n")
        f.write("// {k, re z, im z, re Li_k, im Li_k}\n")
        f.write("static const LiRow kLiOracle[] = {\n")
        for k, z, v in li:
            f.write(f"    {{{k}, {mp.nstr(z.real, 17)}, {mp.nstr(z.imag, 17)}, {mp.nstr(v.real, 20)}, {mp.nstr(v.imag, 20)}}},\n")
        f.write("};\n")


if __name__ == "__main__":
    main()
