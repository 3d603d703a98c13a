"""High-precision reference values frozen into the C++ test suites.

Run with `python3 tests/oracles/reference_values.py`; every printed value is
computed independently of the library using mpmath at 50 digits.
"""
import mpmath as mp

mp.mp.dps = 50


def lngstar(x, y):
    x, y = mp.mpf(x), mp.mpf(y)
    return mp.loggamma(1 + x) + mp.loggamma(1 + y) - 2 * mp.loggamma(1 + (x + y) / 2)


def eps_bound(x, y, m):
    x, y = mp.mpf(x), mp.mpf(y)
    h = (x - y) / 2
    s = mp.nsum(lambda n: 1 / ((n + x) ** m * (n + y) ** m), [1, mp.inf])
    return h ** (2 * m) * s / m


def s_m(x, y, m):
    x, y = mp.mpf(x), mp.mpf(y)
    h, a = (x - y) / 2, (x + y) / 2
    return mp.fsum(h ** (2 * k) * mp.zeta(2 * k, 1 + a) / k for k in range(1, m))


def v_m(x, y, m):
    x, y = mp.mpf(x), mp.mpf(y)
    g = mp.sqrt(x * y)
    q = abs(x - y) / (2 * (1 + g))
    return q ** (2 * m) * (1 + (1 + g) / (2 * m - 1)) / m


def t_of(x, y):
    x, y = mp.mpf(x), mp.mpf(y)
    h = (x - y) / 2
    target = lngstar(x, y)
    t = mp.findroot(lambda t: h * h * mp.zeta(2, 1 + t) - target,
                    (mp.sqrt(x * y), (x + y) / 2), solver='bisect')
    g, a = mp.sqrt(x * y), (x + y) / 2
    return t, (t - g) / (a - g)


def show(name, v):
    print(f"{name:40s} {mp.nstr(v, 20)}")


show("lgamma(0.5)", mp.loggamma(0.5))
for x in ["1e-300", "1e-8", "1e-3", "0.01", "0.1", "0.3", "0.5", "0.7", "0.9", "0.999",
          "1.001", "1.2", "1.4616321449683623", "1.5", "1.8", "1.999", "2.001", "2.2",
          "2.4999", "2.5", "2.5001", "3", "7.5", "10", "33.3", "100", "1234.5",
          "100000", "1000000"]:
    show(f"lgamma({x})", mp.loggamma(mp.mpf(float(x))))  # exact binary64 input
show("zeta(2,3)", mp.zeta(2, 3))
show("zeta(4,3)", mp.zeta(4, 3))
show("zeta(2,4)", mp.zeta(2, 4))
show("zeta(6,0.5)", mp.zeta(6, 0.5))
show("zeta(10,3.7)", mp.zeta(10, mp.mpf(3.7)))
show("zeta(2,1+sqrt3)", mp.zeta(2, 1 + mp.sqrt(3)))
show("zeta(2,1+sqrt8)", mp.zeta(2, 1 + mp.sqrt(8)))
show("lnG*(1,3)", lngstar(1, 3))
show("lnG*(2,4)", lngstar(2, 4))
show("lnG*(0.01,10)", lngstar("0.01", 10))
show("lnG*(0.5,7.5)", lngstar("0.5", "7.5"))
show("G(0.5,7.5)", mp.gamma(0.5) * mp.gamma(7.5) / mp.gamma(4) ** 2)
show("Q(1,3)", mp.mpf(1) / (1 + mp.sqrt(3)))
show("Q(0.01,10)", mp.mpf("9.99") / (2 * (1 + mp.sqrt(mp.mpf("0.1")))))
for m in range(2, 11):
    show(f"S_{m}(1,3)", s_m(1, 3, m))
    show(f"eps_{m}(1,3)", eps_bound(1, 3, m))
    show(f"V_{m}(1,3)", v_m(1, 3, m))
show("eps_3(0.01,10)", eps_bound("0.01", 10, 3))
show("S_3(0.01,10)", s_m("0.01", 10, 3))
show("V_3(0.01,10)", v_m("0.01", 10, 3))
for p in [(1, 3), (2, 4), ("0.01", 20), (1, 10)]:
    t, lam = t_of(*p)
    show(f"t{p}", t)
    show(f"lambda{p}", lam)
print("bernoulli", [mp.nstr(mp.bernoulli(2 * k), 20) for k in range(1, 31)])
print("zeta(k)-1", [mp.nstr(mp.zeta(k) - 1, 20) for k in range(2, 61)])


def lambda_grid_summary():
    """min / max / mean of lambda over {0.5, 1, ..., 10}^2 with x != y."""
    mp.mp.dps = 30
    grid = [mp.mpf(k) / 2 for k in range(1, 21)]
    lams = {}
    for i, x in enumerate(grid):
        for y in grid[i + 1:]:
            lams[(x, y)] = t_of(x, y)[1]
    vals = [lams[(min(x, y), max(x, y))] for x in grid for y in grid if x != y]
    return min(vals), max(vals), mp.fsum(vals) / len(vals), len(vals)


lo, hi, mean, count = lambda_grid_summary()
show("grid lambda min", lo)
show("grid lambda max", hi)
show("grid lambda mean", mean)
print("grid count", count)
