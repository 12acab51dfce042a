"""High-precision reference values for the slice-area tests.

Independent of the C++ code path: areas are integrated over the horizontal
coordinate x (area under the boundary graph t = h(sqrt(x^2 + b^2))) instead of
over the profile angle, with mpmath at 30 significant digits.

Run: python3 tests/oracles/slice_area_oracle.py
"""
import mpmath as mp

mp.mp.dps = 30
PI = mp.pi


def radial(phi):
    return mp.mpf(1) if phi == 0 else abs(mp.sin(phi / 2) / (phi / 2))


def height(phi):
    return mp.mpf(0) if phi == 0 else 2 * (phi - mp.sin(phi)) / phi**2


def inverse_radial(r):
    if r >= 1:
        return mp.mpf(0)
    if r <= 0:
        return 2 * PI
    lo, hi = mp.mpf(0), 2 * PI
    for _ in range(mp.mp.prec + 8):
        mid = (lo + hi) / 2
        if radial(mid) > r:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def upper_boundary(x, b):
    return height(inverse_radial(mp.sqrt(x * x + b * b)))


def area_by_x(b):
    if b >= 1:
        return mp.mpf(0)
    xmax = mp.sqrt(1 - b * b)
    if b == 0:
        # kink of the boundary at x = 0 (conical dimple at the poles)
        return 4 * mp.quad(lambda x: upper_boundary(x, b), [0, 2 / PI, xmax])
    return 4 * mp.quad(lambda x: upper_boundary(x, b), [0, xmax])


def integral_central():
    f = lambda p: mp.sqrt(2 - 2 * mp.cos(p)) / p**4 * (2 * mp.sin(p) - p * mp.cos(p) - p)
    return mp.quad(f, [0, PI, 2 * PI])


def integral_offset():
    c = 8 / (9 * PI**2)
    f = lambda p: mp.sqrt((2 - 2 * mp.cos(p)) / p**2 - c) * (2 * mp.sin(p) - p * mp.cos(p) - p) / p**3
    return mp.re(mp.quad(f, [0, PI, 3 * PI / 2]))


def golden_max(f, lo, hi, tol):
    g = (mp.sqrt(5) - 1) / 2
    a, b = mp.mpf(lo), mp.mpf(hi)
    c, d = b - g * (b - a), a + g * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - g * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + g * (b - a)
            fd = f(d)
    x = (a + b) / 2
    return x, f(x)


if __name__ == "__main__":
    mp.mp.dps = 20
    b1 = 2 * mp.sqrt(2) / (3 * PI)
    print("I_central   =", mp.nstr(integral_central(), 17))
    print("I_offset    =", mp.nstr(integral_offset(), 17))
    print("A(0)        =", mp.nstr(area_by_x(0), 17))
    print("A(b1)       =", mp.nstr(area_by_x(b1), 17))
    for b in ["0.1", "0.5", "0.9"]:
        print("A(%s)      =" % b, mp.nstr(area_by_x(mp.mpf(b)), 17))
    bstar, beta = golden_max(area_by_x, mp.mpf("0.25"), mp.mpf("0.30"), mp.mpf("1e-9"))
    print("b_star      =", mp.nstr(bstar, 12))
    print("beta        =", mp.nstr(beta, 17))
    print("gamma       =", mp.nstr(area_by_x(0) / beta, 17))
    k = 4 * mp.quad(lambda x: mp.sqrt(1 - x**4), [0, 1])
    print("koranyi A(0)=", mp.nstr(k, 17))
