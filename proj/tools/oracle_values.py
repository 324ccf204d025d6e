"""Arbitrary-precision reference values frozen into the unit tests.

Run with `python3 tools/oracle_values.py`; needs mpmath. Every quantity is
recomputed from the defining formulas with generic numerical methods
(matrix eigensolver, quadrature, root finding), not from the C++ code paths.
"""
import mpmath as mp

mp.mp.dps = 40

TOP = dict(rho_s=2200, rho_f=950, phi=mp.mpf("0.4"), a=2, K_s=mp.mpf("6.9e9"), K_f=mp.mpf("2e9"),
           K_b=mp.mpf("6.7e9"), mu=mp.mpf("3e9"))
BOTTOM = dict(rho_s=2650, rho_f=750, phi=mp.mpf("0.2"), a=2, K_s=mp.mpf("37e9"), K_f=mp.mpf("1.7e9"),
              K_b=mp.mpf("2.2e9"), mu=mp.mpf("4.4e9"))


def layer(p):
    rho = p["phi"] * p["rho_f"] + (1 - p["phi"]) * p["rho_s"]
    rho_w = p["a"] * p["rho_f"] / p["phi"]
    beta = 1 - p["K_b"] / p["K_s"]
    m = 1 / (p["phi"] / p["K_f"] + (beta - p["phi"]) / p["K_s"])
    lam = p["K_b"] - 2 * p["mu"] / 3
    alpha = lam + 2 * p["mu"] + m * beta**2
    A = mp.matrix([[rho, p["rho_f"]], [p["rho_f"], rho_w]])
    B = mp.matrix([[alpha, m * beta], [m * beta, m]])
    E, ER = mp.eig(A**-1 * B)
    order = sorted(range(2), key=lambda i: -mp.re(E[i]))
    cols = []
    for i in order:
        v = [mp.re(ER[0, i]), mp.re(ER[1, i])]
        n = mp.sqrt(v[0]**2 + v[1]**2)
        v = [c / n for c in v]
        if v[0] < 0 or (v[0] == 0 and v[1] < 0):
            v = [-c for c in v]
        cols.append(v)
    vs = mp.sqrt(p["mu"] * rho_w / (rho * rho_w - p["rho_f"]**2))
    return dict(rho=rho, rho_w=rho_w, beta=beta, m=m, lam=lam, alpha=alpha, A=A, B=B,
                V_Pf=mp.sqrt(mp.re(E[order[0]])), V_Ps=mp.sqrt(mp.re(E[order[1]])), V_S=vs,
                P=mp.matrix([[cols[0][0], cols[1][0]], [cols[0][1], cols[1][1]]]))


def show(name, v):
    print(f"{name:28s} {mp.nstr(v, 20)}")


top, bot = layer(TOP), layer(BOTTOM)
for tag, d in (("top", top), ("bottom", bot)):
    for k in ("rho", "rho_w", "beta", "m", "lam", "alpha", "V_Pf", "V_Ps", "V_S"):
        show(f"{tag}.{k}", d[k])
    for i in range(2):
        for j in range(2):
            show(f"{tag}.P[{i}][{j}]", d["P"][i, j])

# Source projection F+ = (A P)^-1 (f_u - beta m f_p, f_w - m f_p).
for name, (fu, fw, fp) in (("bulk", (-1e10, -1e10, 0)), ("pressure", (0, 0, 1))):
    rhs = mp.matrix([fu - top["beta"] * top["m"] * fp, fw - top["m"] * fp])
    F = mp.lu_solve(top["A"] * top["P"], rhs)
    show(f"{name}.F_Pf", F[0])
    show(f"{name}.F_Ps", F[1])

# gauss5 wavelet and its primitive by quadrature.
f0 = mp.mpf(15)
a = mp.pi**2 / f0**2


def f(t):
    s = t - 1 / f0
    return 4 * a * (9 * s + 4 * a * s**3 - 4 * a**2 * s**5) * mp.exp(-a * s**2)


for t in (0, mp.mpf("0.3"), mp.mpf(1)):
    show(f"f({t})", f(t))
    show(f"primitive({t})", mp.quad(f, [-mp.inf, 1 / f0, t]))

# Two-leg arrival times from Snell's law.
def arrival(x, da, va, db, vb):
    X = abs(x)
    g = lambda xi: xi / (va * mp.sqrt(xi**2 + da**2)) - (X - xi) / (vb * mp.sqrt((X - xi)**2 + db**2))
    xi = mp.findroot(g, (mp.mpf(0), mp.mpf(X)), solver="anderson")
    return mp.sqrt(xi**2 + da**2) / va + mp.sqrt((X - xi)**2 + db**2) / vb


show("t0 R_PfPs (400,533)", arrival(400, 533, top["V_Ps"], 500, top["V_Pf"]))
show("t0 R_PsS (400,533)", arrival(400, 533, top["V_S"], 500, top["V_Ps"]))
show("t0 T_PfS (400,-533)", arrival(400, 533, bot["V_S"], 500, top["V_Pf"]))
show("t0 T_PsPf (400,-533)", arrival(400, 533, bot["V_Pf"], 500, top["V_Ps"]))

# Head time for the slow transmitted mode below (fast refractor V_Pf top).
def head_time(x, da, va, db, vb, vmax):
    p = 1 / vmax
    return abs(x) * p + da * mp.sqrt(1 / va**2 - p**2) + db * mp.sqrt(1 / vb**2 - p**2)


vmax = max(top["V_Pf"], bot["V_Pf"])
show("t_h T_PsPs (400,-533)", head_time(400, 533, bot["V_Ps"], 500, top["V_Ps"], vmax))
show("t0 T_PsPs (400,-533)", arrival(400, 533, bot["V_Ps"], 500, top["V_Ps"]))

# Contour point of a mixed path: F(q, t) = da k_a + db k_b + i q x - t = 0.
def kap(V, q):
    return mp.sqrt(1 / V**2 + q**2)


def contour(t, x, da, va, db, vb, guess):
    F = lambda q: da * kap(va, q) + db * kap(vb, q) + 1j * q * x - t
    return mp.findroot(F, mp.mpc(guess))


q = contour(mp.mpf("0.8"), 400, 533, top["V_Ps"], 500, top["V_Pf"], mp.mpc("3e-4", "-3e-4"))
show("contour R_PfPs t=0.8 re", mp.re(q))
show("contour R_PfPs t=0.8 im", mp.im(q))

# Incident kernel from the analytic gradient of F arccosh(V t / r) / (2 pi V^2).
def incident(V, F, p11, x, y, h, t):
    psi = lambda xx, yy: F / (2 * mp.pi * V**2) * mp.acosh(V * t / mp.sqrt(xx**2 + (yy - h)**2))
    return p11 * mp.diff(lambda xx: psi(xx, y), x), p11 * mp.diff(lambda yy: psi(x, yy), y)


Fb = mp.lu_solve(top["A"] * top["P"], mp.matrix([-1e10, -1e10]))
vx, vy = incident(top["V_Pf"], Fb[0], top["P"][0, 0], 400, 533, 500, mp.mpf("0.3"))
show("inc_Pf (400,533) t=0.3 x", vx)
show("inc_Pf (400,533) t=0.3 y", vy)
