#!/usr/bin/env python3
"""Extended-precision reference values for the test suites.

Every value here is computed with mpmath at 120 bits, directly from the
series and product definitions (no shared code with the C++ library).
Run it to regenerate the constants frozen into tests/*.cpp.
"""
import mpmath as mp

mp.mp.prec = 120
PI = mp.pi
I = mp.mpc(0, 1)


def theta(z, tau, terms=60):
    return mp.fsum(mp.exp(PI * I * n * n * tau + 2 * PI * I * n * z)
                   for n in range(-terms, terms + 1))


def qsum(tau, terms=400):
    q2 = mp.exp(2 * PI * I * tau)
    return mp.fsum(mp.log(abs(1 - q2 ** n)) for n in range(1, terms + 1))


def eta(tau, terms=400):
    q2 = mp.exp(2 * PI * I * tau)
    p = mp.mpf(1)
    for n in range(1, terms + 1):
        p *= 1 - q2 ** n
    return mp.exp(PI * I * tau / 12) * p


def theta_norm(z, tau):
    t = mp.im(tau)
    return t ** mp.mpf(0.25) * mp.exp(-PI * mp.im(z) ** 2 / t) * abs(theta(z, tau))


def green(z, w, tau):
    t = mp.im(tau)
    arg = z - w + (1 + tau) / 2
    return mp.log(theta_norm(arg, tau) / (t ** mp.mpf(0.25) * abs(eta(tau))))


def capacity(tau):
    t = mp.im(tau)
    return mp.sqrt(t) * 2 * PI * mp.exp(-PI * t / 6 + 2 * qsum(tau))


def f_ratio(tau):
    t = mp.im(tau)
    return -2 * mp.log(t) - mp.log(4 * PI) + PI * t / 3 - 4 * qsum(tau)


def golden_section(f, a, b, tol=mp.mpf('1e-20')):
    gr = (mp.sqrt(5) - 1) / 2
    c, d = b - gr * (b - a), a + gr * (b - a)
    while b - a > tol:
        if f(c) < f(d):
            b, d = d, c
            c = b - gr * (b - a)
        else:
            a, c = c, d
            d = a + gr * (b - a)
    return (a + b) / 2


def show(name, value):
    print(f"{name:40s} {mp.nstr(value, 20)}")


if __name__ == "__main__":
    show("nome(2i)", mp.exp(-2 * PI))
    show("|nome(i)|", mp.exp(-PI))
    show("theta(0, i)", mp.re(theta(0, I)))
    show("|eta(i)|", abs(eta(I)))
    show("gamma(1/4)/(2 pi^(3/4))", mp.gamma(0.25) / (2 * PI ** 0.75))
    show("|eta(2i)|", abs(eta(2 * I)))
    show("eta_norm(2i)", mp.mpf(2) ** 0.25 * abs(eta(2 * I)))
    show("S(2i)", qsum(2 * I))
    show("S(0.5+2i)", qsum(mp.mpf(0.5) + 2 * I))
    show("green(0.25, 0; 2i)", green(mp.mpf(0.25), 0, 2 * I))
    show("green(0.2+0.1i, 0.7+1.3i; 0.5+1.9192i)",
         green(mp.mpc(0.2, 0.1), mp.mpc(0.7, 1.3), mp.mpc(0.5, 1.9192)))
    show("capacity(2i)", capacity(2 * I))
    show("capacity(0.5+1.91i)", capacity(mp.mpc(0.5, 1.91)))
    show("F(2i)", f_ratio(2 * I))
    show("F(10i)", f_ratio(10 * I))
    show("F(0.5+1.9192i)", f_ratio(mp.mpc(0.5, 1.9192)))
    for re in (mp.mpf(0), mp.mpf(0.5)):
        t = golden_section(lambda t: f_ratio(re + I * t), mp.mpf(1.8), mp.mpf(2.0))
        show(f"argmin_t F({mp.nstr(re, 2)} + it)", t)
        show(f"min_t F({mp.nstr(re, 2)} + it)", f_ratio(re + I * t))
        show(f"exp(-min) [alpha]", mp.exp(-f_ratio(re + I * t)))
        show(f"exp(min)", mp.exp(f_ratio(re + I * t)))
    show("6/pi", 6 / PI)
