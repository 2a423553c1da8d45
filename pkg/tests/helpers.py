"""Independent oracles and samplers shared by the test modules.

The oracles deliberately avoid the library's structured product/closed-form
code paths: multiplication is expanded over the 16 basis products, and the
transcendental functions are summed as raw power series.
"""
from __future__ import annotations

import cmath
import math
import random

from biqz import Biquaternion, Sequence, as_biquaternion

# basis multiplication table: (a, b) -> (result_axis, sign), axes 0=1,1=i,2=j,3=k
_BASIS = {
    (0, 0): (0, 1), (0, 1): (1, 1), (0, 2): (2, 1), (0, 3): (3, 1),
    (1, 0): (1, 1), (1, 1): (0, -1), (1, 2): (3, 1), (1, 3): (2, -1),
    (2, 0): (2, 1), (2, 1): (3, -1), (2, 2): (0, -1), (2, 3): (1, 1),
    (3, 0): (3, 1), (3, 1): (2, 1), (3, 2): (1, -1), (3, 3): (0, -1),
}


def brute_mul(p: Biquaternion, q: Biquaternion) -> Biquaternion:
    """16-term basis expansion of the Hamilton product; I commutes throughout."""
    pc = (p.w, p.x, p.y, p.z)
    qc = (q.w, q.x, q.y, q.z)
    out = [0j, 0j, 0j, 0j]
    for a in range(4):
        for b in range(4):
            axis, sign = _BASIS[(a, b)]
            out[axis] += sign * pc[a] * qc[b]
    return Biquaternion(*out)


def series_exp(q, terms: int = 40) -> Biquaternion:
    """sum_{n<terms} q**n / n!, accumulated term by term."""
    q = as_biquaternion(q)
    total = Biquaternion(1.0)
    term = Biquaternion(1.0)
    for n in range(1, terms):
        term = term * q / n
        total = total + term
    return total


def series_cos(q, terms: int = 40) -> Biquaternion:
    """sum_m (-1)**m q**(2m) / (2m)! with `terms` summands."""
    q = as_biquaternion(q)
    q2 = q * q
    total = Biquaternion(1.0)
    term = Biquaternion(1.0)
    for m in range(1, terms):
        term = term * q2 * (-1.0 / ((2 * m - 1) * (2 * m)))
        total = total + term
    return total


def series_sin(q, terms: int = 40) -> Biquaternion:
    """sum_m (-1)**m q**(2m+1) / (2m+1)! with `terms` summands."""
    q = as_biquaternion(q)
    q2 = q * q
    total = q
    term = q
    for m in range(1, terms):
        term = term * q2 * (-1.0 / ((2 * m) * (2 * m + 1)))
        total = total + term
    return total


def partial_transform(f: Sequence, x, n_terms: int) -> Biquaternion:
    """Direct partial sum sum_{n<n_terms} f_n * x**-n, no stopping logic."""
    x = as_biquaternion(x)
    x_inv = x.inverse()
    total = f.term(0)
    x_pow = x_inv
    for n in range(1, n_terms):
        total = total + f.term(n) * x_pow
        x_pow = x_pow * x_inv
    return total


def comp_dist(a, b) -> float:
    return (as_biquaternion(a) - as_biquaternion(b)).component_norm()


def rel_err(got, want) -> float:
    want = as_biquaternion(want)
    return comp_dist(got, want) / max(1.0, want.component_norm())


def rand_biquat(rng: random.Random, scale: float = 1.0) -> Biquaternion:
    return Biquaternion(
        complex(rng.uniform(-scale, scale), rng.uniform(-scale, scale)),
        complex(rng.uniform(-scale, scale), rng.uniform(-scale, scale)),
        complex(rng.uniform(-scale, scale), rng.uniform(-scale, scale)),
        complex(rng.uniform(-scale, scale), rng.uniform(-scale, scale)),
    )


def root_magnitudes(q: Biquaternion) -> tuple[float, float]:
    """(larger, smaller) |root| of z**2 - 2*q0*z + cns(q); the componentwise
    growth rates of the powers of q, whose geometric mean is real_norm(q)."""
    s = cmath.sqrt(q.w * q.w - q.complex_norm_sq())
    a, b = abs(q.w + s), abs(q.w - s)
    return max(a, b), min(a, b)


def rand_conditioned(
    rng: random.Random,
    scale: float = 1.0,
    max_root_ratio: float = 3.0,
    min_cns_frac: float = 0.05,
) -> Biquaternion:
    """A random biquaternion kept away from the zero-divisor variety.

    Near that variety the real gauge of a value sits far below its component
    size and double precision cannot resolve real-gauge identities, so
    samplers for gauge-based checks bound the root asymmetry.
    """
    while True:
        q = rand_biquat(rng, scale)
        size_sq = q.component_norm() ** 2
        if size_sq < 0.1 * scale * scale:
            continue
        if abs(q.complex_norm_sq()) < min_cns_frac * size_sq:
            continue
        big, small = root_magnitudes(q)
        if small == 0.0 or big / small > max_root_ratio:
            continue
        return q


def rand_complex_shell(rng: random.Random, lo: float, hi: float) -> complex:
    r = rng.uniform(lo, hi)
    theta = rng.uniform(0.0, 2.0 * math.pi)
    return complex(r * math.cos(theta), r * math.sin(theta))


def worked_examples():
    """The four worked linear relations and their closed-form solutions.

    Note the second relation: its widely-quoted form carries a sign error on
    the first-shift coefficient; with (Ij)**2 == +1 the stated solution
    (Ij)**n forces f(n+2) = 2 f(n) - f(n+1)(Ij), which is what this encodes.
    """
    from biqz import ForcingTerm, LinearRecurrence, ONE, Sequence
    import biqz.catalog as cat
    from biqz.algebra import i, j, k

    I = 1j
    examples = []

    rec1 = LinearRecurrence([-(i + j), ONE - (i + j), ONE], [ONE, i + j])
    examples.append((rec1, Sequence.geometric(i + j), "powers of i+j"))

    rec2 = LinearRecurrence([-2, I * j, ONE], [ONE, I * j])
    examples.append((rec2, Sequence.geometric(I * j), "powers of Ij"))

    rec3 = LinearRecurrence([-2, -2 * I, ONE], [ONE, I * i + I])
    examples.append((rec3, Sequence.geometric(I * i + I), "powers of Ii+I"))

    u = ONE + I * k
    forcing = [
        ForcingTerm(Sequence.constant(1), [2], entry=cat.const_one()),
        ForcingTerm(Sequence.geometric(I * k), [2 - 2 * (I * k)], entry=cat.pow_p(I * k)),
        ForcingTerm(Sequence.geometric(u), [-1], entry=cat.pow_p(u)),
    ]
    rec4 = LinearRecurrence([ONE, -2, ONE], [0, 0], forcing)
    closed4 = Sequence(lambda n: Biquaternion(n * n) - u**n + (I * k) ** n)
    examples.append((rec4, closed4, "n^2 - (Ik+1)^n + (Ik)^n"))

    return examples
