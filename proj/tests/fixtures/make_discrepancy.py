"""Regenerates discrepancy.json: DT/GW ratio for trivial metadata.

DT side multiplies by (s - 1/s)^c (i s)^-c at s = unit * exp(iu/2); the GW side
multiplies by (i s)^-c (-i u)^-c and divides by (sin(u/2)/(u/2))^c. The payload
cancels, leaving ((s - 1/s) (-i) u sin(u/2)/(u/2))^c.
"""

import json

import sympy as sp

ORDER = 10
u = sp.symbols("u")
units = {"1": 1, "-1": -1, "i": sp.I, "-i": -sp.I}


def frac(q):
    q = sp.Rational(q)
    return str(q.p) if q.q == 1 else f"{q.p}/{q.q}"


out = []
for c in range(4):
    for name, e in units.items():
        s = e * sp.exp(sp.I * u / 2)
        expr = ((s - 1 / s) * (-sp.I) * u * sp.sin(u / 2) / (u / 2)) ** c
        poly = sp.series(sp.simplify(expr), u, 0, ORDER).removeO()
        coeffs = []
        for k in range(ORDER):
            z = sp.nsimplify(sp.expand(poly.coeff(u, k)))
            re, im = sp.re(z), sp.im(z)
            if re != 0 or im != 0:
                coeffs.append([k, frac(re), frac(im)])
        out.append({"c": c, "branch": name, "order": ORDER, "coeffs": coeffs})

with open("discrepancy.json", "w") as f:
    f.write("[\n" + ",\n".join("  " + json.dumps(r) for r in out) + "\n]\n")
