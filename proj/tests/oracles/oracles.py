"""Reference values for the C++ test suite, computed with sympy / mpmath.

Run: python3 oracles.py
The printed numbers are frozen into tests/oracle_values.hpp.
"""
import itertools

import mpmath as mp
import sympy as sp

mp.mp.dps = 30
x, y, z, s = sp.symbols("x y z s")


def section(name):
    print(f"\n== {name}")


# -- discriminants of g = (d+1) s^d - d s^(d-1) - 1
section("disc g")
for d in range(2, 7):
    g = (d + 1) * s**d - d * s ** (d - 1) - 1
    roots = sp.Poly(g, s).nroots(n=30)
    print(d, sp.discriminant(g, s), "distinct", len(set(sp.N(r, 12) for r in roots)))


# -- invariants of a plane cubic y^2 z + b xyz + c yz^2 = p x^3 + q x^2 z + r x z^2 + t z^3,
# by completing the square: (y + (b x + c)/2)^2 = f(x), Delta = 16 disc(f) for monic f after scaling.
def cubic_invariants(F):
    G = sp.expand(F.subs(z, 1))
    P = sp.Poly(G, x, y)
    A = P.coeff_monomial(y**2)
    G = sp.expand(G / A)
    P = sp.Poly(G, x, y)
    lin = sp.expand(sum(c * x**m[0] for m, c in P.terms() if m[1] == 1))
    rest = sp.expand(G - y**2 - lin * y)
    f = sp.expand(lin**2 / 4 - rest)  # (y + lin/2)^2 = f(x)
    lead = sp.Poly(f, x).LC()
    # x -> x / lead makes f monic up to the square factor lead^2 on y
    fm = sp.expand(f.subs(x, x / lead) * lead**2)
    assert sp.Poly(fm, x).LC() == 1
    a2, a4, a6 = [sp.Poly(fm, x).coeff_monomial(x**k) for k in (2, 1, 0)]
    disc = 16 * sp.discriminant(fm, x)
    c4 = 16 * (a2**2 - 3 * a4)
    return disc, sp.nsimplify(c4**3 / disc), fm


section("cubic")
F = x**3 + y**2 * z - 3 * x * y * z + x * z**2
disc, j, fm = cubic_invariants(F)
print("Delta", disc, "j", j, "monic", fm)
T = {x: -x + z, y: -x + y + 2 * z, z: z}
FT = sp.expand(F.subs(T, simultaneous=True))
dT, jT, _ = cubic_invariants(FT)
print("transformed", FT, "Delta", dT, "j", jT)

# -- plane images of the punctures, exactly on the cubic
section("punctures on cubic")
r5 = sp.sqrt(5)
pts = {
    "p1": (1, 1, 1), "p2": (0, 1, 0), "p3": (0, 0, 1), "p4": (1, 2, 1),
    "p5": (-sp.I, 0, 1), "p5'": (sp.I, 0, 1),
    "p6": ((-1 - r5) / 2, 1, 1), "p6'": ((-1 + r5) / 2, 1, 1),
    "p7": ((1 - r5) / 2, (3 - r5) / 2, 1), "p7'": ((1 + r5) / 2, (3 + r5) / 2, 1),
}
for k, (a, b, c) in pts.items():
    print(k, sp.simplify(F.subs({x: a, y: b, z: c}, simultaneous=True)))


# group law on y^2 - 3xy = x^3 + x (image [-x : -y : z])
def on_long(p):
    a, b, c = p
    if c == 0:
        return None
    return (sp.nsimplify(-sp.Rational(1) * a / c), sp.nsimplify(-sp.Rational(1) * b / c))


A1, A3, A2, A4, A6 = -3, 0, 0, 1, 0


def add(P, Q):
    if P is None:
        return Q
    if Q is None:
        return P
    (x1, y1), (x2, y2) = P, Q
    if sp.simplify(x1 - x2) == 0:
        if sp.simplify(y1 + y2 + A1 * x2 + A3) == 0:
            return None
        lam = (3 * x1**2 + 2 * A2 * x1 + A4 - A1 * y1) / (2 * y1 + A1 * x1 + A3)
    else:
        lam = (y2 - y1) / (x2 - x1)
    nu = y1 - lam * x1
    x3 = sp.simplify(lam**2 + A1 * lam - A2 - x1 - x2)
    y3 = sp.simplify(-(lam + A1) * x3 - nu - A3)
    return (sp.radsimp(x3), sp.radsimp(y3))


section("group")
E = {k: on_long(v) for k, v in pts.items()}
for k in ["p1", "p3", "p4"]:
    P, n = E[k], 1
    Q = P
    while Q is not None:
        Q = add(Q, P)
        n += 1
    print(k, "order", n)
for a, b in [("p5", "p5'"), ("p6", "p6'"), ("p6", "p7"), ("p6", "p7'")]:
    R = add(E[a], E[b])
    rational = R is None or all(sp.nsimplify(c).is_rational for c in R)
    print(a, "+", b, "=", R, "rational" if rational else "irrational")

# -- periods of y^2 = 4x^3 - g2 x - g3 for the long form above
section("periods")
b2 = A1**2 + 4 * A2
b4 = 2 * A4 + A1 * A3
b6 = A3**2 + 4 * A6
c4 = b2**2 - 24 * b4
c6 = -(b2**3) + 36 * b2 * b4 - 216 * b6
g2, g3 = mp.mpf(c4) / 12, mp.mpf(c6) / 216
e = sorted([mp.re(r) for r in mp.polyroots([4, 0, -g2, -g3])], reverse=True)
h = lambda t: 4 * t**3 - g2 * t - g3
w1 = 2 * mp.quad(lambda t: 1 / mp.sqrt(h(t)), [e[0], e[0] + 1, mp.inf])
w2 = 2 * mp.quad(lambda t: 1 / mp.sqrt(-h(t)), [-mp.inf, e[2] - 1, e[2]])
print("g2", g2, "g3", g3)
print("w1", mp.nstr(w1, 15), "w2 (imaginary part)", mp.nstr(w2, 15))

# wp by theta functions: v = pi u / w1, q = exp(i pi tau)
tau = 1j * w2 / w1
q = mp.exp(1j * mp.pi * tau)


def wp(u):
    v = mp.pi * u / w1
    t2, t3, t4 = mp.jtheta(2, 0, q), mp.jtheta(3, 0, q), mp.jtheta(4, 0, q)
    p = (mp.pi / w1) ** 2 * ((t2 * t3 * mp.jtheta(4, v, q) / mp.jtheta(1, v, q)) ** 2 - (t2**4 + t3**4) / 3)
    return p


for u in [mp.mpc(0.37, 0.81), mp.mpc(1.2, -0.4), mp.mpc(0.05, 0.02)]:
    p = wp(u)
    dp = mp.diff(wp, u)
    print("wp", u, mp.nstr(p, 15), "dwp", mp.nstr(dp, 15), "ode", mp.nstr(abs(dp**2 - (4 * p**3 - g2 * p - g3)), 3))

# -- a point of Per_{2,5} at x3 = 2: f = M o z^2 with cycle 0 -> 1 -> x3 -> x4 -> x5 -> 0
section("sample point")
x3, x4, x5 = sp.symbols("x3 x4 x5")
a, b, c = sp.symbols("a b c")
# M(w) = (a w + b) / (c w + 1) normalized by M(0) = 1: b = 1
Mw = lambda w, a, c: (a * w + 1) / (c * w + 1)
sol = sp.solve([Mw(1, a, c) - x3, Mw(x5**2, a, c)], [a, c], dict=True)[0]
M = lambda w: Mw(w, sol[a], sol[c])
e1 = sp.numer(sp.together(M(x3**2) - x4))
e2 = sp.numer(sp.together(M(x4**2) - x5))
e1 = e1.subs(x3, 2)
e2 = e2.subs(x3, 2)
R = sp.resultant(e1, e2, x5)
found = []
for r4 in sp.Poly(R, x4).nroots(n=30, maxsteps=200):
    for r5_ in sp.Poly(e1.subs(x4, r4), x5).nroots(n=30):
        if abs(sp.N(e2.subs({x4: r4, x5: r5_}))) > 1e-15:
            continue
        xs = [sp.Integer(0), sp.Integer(1), sp.Integer(2), r4, r5_]
        sq = [sp.N(t**2) for t in xs]
        if any(abs(t) < 1e-9 for t in xs[2:]) or len({sp.N(t, 10) for t in xs}) < 5:
            continue
        if len({sp.N(t, 10) for t in sq}) < 5:
            continue
        found.append((r4, r5_))


def crv(p1, p2, p3, p4):
    return (p4 - p2) * (p3 - p1) / ((p3 - p2) * (p4 - p1))


for r4, r5_ in sorted(found, key=lambda t: (float(sp.re(t[0])), float(sp.im(t[0])))):
    X = sp.N(crv(2, r4, r5_, 0), 20)
    Y = sp.N(crv(r5_, 1, 2, r4), 20)
    onF = sp.N(F.subs({x: X, y: Y, z: 1}), 5)
    print("x4", sp.N(r4, 17), "x5", sp.N(r5_, 17), "X", X, "Y", Y, "cubic", onF)

# -- PCF maps: both critical points in the 5-cycle, infinity at position k
section("pcf")
pcf_xy = []
for k in range(1, 5):
    # cycle c_0 = 0, c_k = inf; c_j (j != 0, k) finite, the first of them = 1
    others = [j for j in range(1, 5) if j != k]
    u, v = sp.symbols("u v")
    pos = {0: 0, k: sp.oo, others[0]: 1, others[1]: u, others[2]: v}
    # f(z) = M(z^2); M sends c_{i}^2 to c_{i+1}; infinity is critical with f(inf) = M(inf)
    A_, B_, C_, D_ = sp.symbols("A B C D")

    def Mapply(w):
        if w is sp.oo:
            return (A_, C_)
        return (A_ * w + B_, C_ * w + D_)

    eqs = []
    for i in range(5):
        src, dst = pos[i], pos[(i + 1) % 5]
        w = sp.oo if src is sp.oo else src**2
        num, den = Mapply(w)
        eqs.append(den if dst is sp.oo else num - dst * den)
    # linear in A..D: nontrivial solution iff all 4x4 minors vanish
    Mat = sp.Matrix([[sp.diff(e_, t) for t in (A_, B_, C_, D_)] for e_ in eqs])
    minors = [sp.factor(Mat.extract(list(rows), [0, 1, 2, 3]).det()) for rows in itertools.combinations(range(5), 4)]
    G = sp.groebner([sp.numer(sp.together(m)) for m in minors if m != 0], u, v, order="lex")
    # eliminate through the lex basis: last element is univariate in v
    pv = sp.Poly(G.exprs[-1], v)
    cnt = 0
    for vv in pv.nroots(n=30, maxsteps=200):
        for e_ in G.exprs:
            pu = sp.Poly(e_.subs(v, vv), u)
            if pu.degree() >= 1:
                break
        for uu in pu.nroots(n=30, maxsteps=200):
            pts_ = [0, 1, uu, vv]
            if any(abs(sp.N(m.subs({u: uu, v: vv}))) > 1e-12 for m in minors):
                continue
            fin = [pos[i] for i in range(5) if pos[i] is not sp.oo]
            vals = [sp.N(t.subs({u: uu, v: vv})) if hasattr(t, "subs") else t for t in fin]
            sqs = [t**2 for t in vals]
            if len({sp.N(t, 10) for t in vals}) < 4 or len({sp.N(t, 10) for t in sqs}) < 4:
                continue
            cnt += 1
            P = {i: (pos[i] if pos[i] is sp.oo else sp.N(sp.sympify(pos[i]).subs({u: uu, v: vv}), 20)) for i in range(5)}

            def cr_inf(p1, p2, p3, p4):
                df = lambda a_, b_: 1 if (a_ is sp.oo or b_ is sp.oo) else a_ - b_
                return sp.N(df(p4, p2) * df(p3, p1) / (df(p3, p2) * df(p4, p1)), 15)

            # marks a_i = c_{i-1}
            a_ = [P[i] for i in range(5)]
            X = cr_inf(a_[2], a_[3], a_[4], a_[0])
            Y = cr_inf(a_[4], a_[1], a_[2], a_[3])
            pcf_xy.append((k, X, Y))
    print("infinity at position", k, ":", cnt, "maps")
for k, X, Y in sorted(pcf_xy, key=lambda t: (t[0], float(sp.re(t[1])), float(sp.im(t[1])))):
    print("pcf", k, sp.re(X), sp.im(X), sp.re(Y), sp.im(Y))
