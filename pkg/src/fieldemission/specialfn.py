"""Special functions: Hermite polynomials, the Airy pair, Hankel functions of
order 1/3 and the Nordheim image-correction functions v(y), t(y).

Hermite and Airy are evaluated here from power and asymptotic series; the
complete elliptic integrals behind v and t come from :mod:`scipy.special`.

Airy evaluation strategy
------------------------
* ``|eta| <= 4.5``: Maclaurin series.
* ``|eta| >= 9``: asymptotic expansions (the smallest-term error there is
  below ~1e-15 relative).
* In between, the asymptotic expansion alone is only good to ~1e-6, so the
  solution is carried across the gap by re-expanding the Airy equation in
  Taylor series over short steps, always in the direction in which the
  carried solution grows:

  - ``Ai`` for ``eta > 4.5`` is stepped back from the asymptotic anchor at 9,
  - ``Bi`` for ``eta > 4.5`` is stepped forward from the Maclaurin values at 4.5,
  - both functions on ``-9 < eta < -4.5`` are stepped from the anchor at -9.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from scipy import special

HERMITE_MAX_ORDER = 200
AIRY_MAX_ARG = 100.0
AIRY_SERIES_RADIUS = 4.5
AIRY_ASYMPTOTIC_RADIUS = 9.0

_SQRT3 = math.sqrt(3.0)
_SQRT_PI = math.sqrt(math.pi)
_AI0 = 3.0 ** (-2.0 / 3.0) / math.gamma(2.0 / 3.0)
_AIP0 = -(3.0 ** (-1.0 / 3.0)) / math.gamma(1.0 / 3.0)
_BI0 = _SQRT3 * _AI0
_BIP0 = -_SQRT3 * _AIP0


class AiryPair(NamedTuple):
    ai: float
    ai_prime: float
    bi: float
    bi_prime: float


def hermite(n: int, xi: float) -> float:
    """Physicists' Hermite polynomial ``H_n(xi)`` by the three-term recurrence."""
    if n < 0 or int(n) != n:
        raise ValueError(f"Hermite order must be a non-negative integer, got {n!r}")
    if n > HERMITE_MAX_ORDER:
        raise ValueError(f"Hermite order {n} exceeds the supported bound {HERMITE_MAX_ORDER}")
    h_prev, h = 0.0, 1.0
    for k in range(n):
        h_prev, h = h, 2.0 * xi * h - 2.0 * k * h_prev
    return h


# ---------------------------------------------------------------------------
# Airy functions
# ---------------------------------------------------------------------------


def _taylor_step(center, values, h):
    """Advance solutions of ``y'' = eta*y`` from ``center`` to ``center + h``.

    ``values`` is a sequence of ``(y, y')`` pairs at ``center``; the result is
    the matching list at ``center + h``. Uses the exact Taylor coefficient
    recurrence ``(k+2)(k+1) a[k+2] = center*a[k] + a[k-1]``.
    """
    out = []
    for y0, dy0 in values:
        a_km1, a_k, a_kp1 = 0.0, y0, dy0  # a[k-1], a[k], a[k+1] at k = 0
        hk = 1.0  # h**k
        val = y0 + dy0 * h
        der = dy0
        k = 0
        small = 0
        scale = abs(y0) + abs(dy0 * h) + 1e-300
        while True:
            a_next = (center * a_k + a_km1) / ((k + 2) * (k + 1))
            hk *= h
            term_v = a_next * hk * h
            term_d = (k + 2) * a_next * hk
            val += term_v
            der += term_d
            scale = max(scale, abs(val))
            if abs(term_v) <= 1e-17 * scale and abs(term_d * h) <= 1e-17 * scale:
                small += 1
                if small >= 3:
                    break
            else:
                small = 0
            a_km1, a_k, a_kp1 = a_k, a_kp1, a_next
            k += 1
            if k > 2000:
                raise ArithmeticError("Airy Taylor series failed to converge")
        out.append((val, der))
    return out


def _march(start, values, target):
    """Carry solutions from ``start`` to ``target`` in short Taylor steps."""
    x = start
    while x != target:
        # local wavelength / decay length ~ |eta|**-0.5
        h_max = 0.5 / max(1.0, math.sqrt(abs(x)))
        h = target - x
        if abs(h) > h_max:
            h = math.copysign(h_max, h)
        values = _taylor_step(x, values, h)
        x = target if abs(target - (x + h)) < 1e-15 else x + h
    return values


def _maclaurin(eta):
    (ai, aip), (bi, bip) = _taylor_step(0.0, [(_AI0, _AIP0), (_BI0, _BIP0)], eta)
    return ai, aip, bi, bip


def _asymptotic_coefficients():
    u = [1.0]
    v = [1.0]
    for k in range(1, 60):
        u.append(u[-1] * (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / ((2 * k - 1) * 216 * k))
        v.append(-(6 * k + 1) / (6 * k - 1) * u[-1])
    return u, v


_U, _V = _asymptotic_coefficients()


def _truncated(coeffs, zeta, sign, start=0, stride=1):
    """Sum ``sum_k sign**j coeffs[start+stride*j] / zeta**(start+stride*j)`` up
    to the smallest term."""
    total = 0.0
    last = math.inf
    j = 0
    while True:
        k = start + stride * j
        if k >= len(coeffs):
            break
        term = coeffs[k] / zeta**k * (sign**j)
        if abs(term) > last:
            break
        total += term
        if abs(term) < 1e-17 * abs(total):
            break
        last = abs(term)
        j += 1
    return total


def _asymptotic(eta):
    x = abs(eta)
    zeta = 2.0 / 3.0 * x**1.5
    q = x**0.25
    if eta > 0:
        su = _truncated(_U, zeta, -1)
        sv = _truncated(_V, zeta, -1)
        decay = math.exp(-zeta)
        grow = math.exp(zeta)
        ai = decay / (2.0 * _SQRT_PI * q) * su
        aip = -q * decay / (2.0 * _SQRT_PI) * sv
        bi = grow / (_SQRT_PI * q) * _truncated(_U, zeta, 1)
        bip = q * grow / _SQRT_PI * _truncated(_V, zeta, 1)
        return ai, aip, bi, bip
    phase = zeta - math.pi / 4.0
    c, s = math.cos(phase), math.sin(phase)
    u_even = _truncated(_U, zeta, -1, 0, 2)
    u_odd = _truncated(_U, zeta, -1, 1, 2)
    v_even = _truncated(_V, zeta, -1, 0, 2)
    v_odd = _truncated(_V, zeta, -1, 1, 2)
    ai = (c * u_even + s * u_odd) / (_SQRT_PI * q)
    aip = q * (s * v_even - c * v_odd) / _SQRT_PI
    bi = (-s * u_even + c * u_odd) / (_SQRT_PI * q)
    bip = q * (c * v_even + s * v_odd) / _SQRT_PI
    return ai, aip, bi, bip


def airy(eta: float) -> AiryPair:
    """Ai, Ai', Bi, Bi' at real ``eta`` with ``|eta| <= 100``."""
    eta = float(eta)
    if not math.isfinite(eta) or abs(eta) > AIRY_MAX_ARG:
        raise ValueError(f"Airy argument {eta!r} outside the supported range |eta| <= {AIRY_MAX_ARG}")
    x = abs(eta)
    if x <= AIRY_SERIES_RADIUS:
        return AiryPair(*_maclaurin(eta))
    if x >= AIRY_ASYMPTOTIC_RADIUS:
        return AiryPair(*_asymptotic(eta))
    if eta > 0:
        anchor = AIRY_ASYMPTOTIC_RADIUS
        ai_a, aip_a, _, _ = _asymptotic(anchor)
        ((ai, aip),) = _march(anchor, [(ai_a, aip_a)], eta)
        _, _, bi_s, bip_s = _maclaurin(AIRY_SERIES_RADIUS)
        ((bi, bip),) = _march(AIRY_SERIES_RADIUS, [(bi_s, bip_s)], eta)
        return AiryPair(ai, aip, bi, bip)
    anchor = -AIRY_ASYMPTOTIC_RADIUS
    ai_a, aip_a, bi_a, bip_a = _asymptotic(anchor)
    (ai, aip), (bi, bip) = _march(anchor, [(ai_a, aip_a), (bi_a, bip_a)], eta)
    return AiryPair(ai, aip, bi, bip)


def hankel_one_third(eta: float, branch: int) -> complex:
    """Hankel function ``H^(branch)_{1/3}(zeta)`` with ``zeta = (2/3) eta**1.5``.

    Built from the Airy pair at ``-eta``::

        J_{1/3}(zeta) = (3 Ai(-eta) - sqrt(3) Bi(-eta)) / (2 sqrt(eta))
        Y_{1/3}(zeta) = -(sqrt(3) Ai(-eta) + 3 Bi(-eta)) / (2 sqrt(eta))

    and ``H^(1,2) = J +/- i Y``.
    """
    if branch not in (1, 2):
        raise ValueError(f"branch must be 1 or 2, got {branch!r}")
    if not eta > 0:
        raise ValueError(f"Hankel/Airy connection requires eta > 0, got {eta!r}")
    ai, _, bi, _ = airy(-eta)
    root = math.sqrt(eta)
    j = (3.0 * ai - _SQRT3 * bi) / (2.0 * root)
    y = -(_SQRT3 * ai + 3.0 * bi) / (2.0 * root)
    return complex(j, y) if branch == 1 else complex(j, -y)


# ---------------------------------------------------------------------------
# Nordheim functions
# ---------------------------------------------------------------------------


def _elliptic_ke(y: float) -> tuple[float, float]:
    """K(m), E(m) at the Nordheim modulus ``m = (1-y)/(1+y)``.

    K is evaluated from the complementary parameter ``1 - m = 2y/(1+y)`` so
    that it keeps full precision as y -> 0.
    """
    return float(special.ellipkm1(2.0 * y / (1.0 + y))), float(special.ellipe((1.0 - y) / (1.0 + y)))


def _check_y(y):
    if not 0.0 <= y <= 1.0:
        raise ValueError(f"Nordheim parameter must lie in [0, 1], got {y!r}")


def nordheim_v(y: float) -> float:
    """Barrier-form correction ``v(y) = sqrt(1+y) [E(k) - y K(k)]``,
    ``k**2 = (1-y)/(1+y)``."""
    _check_y(y)
    if y == 0.0:
        return 1.0
    if y == 1.0:
        return 0.0
    k, e = _elliptic_ke(y)
    return math.sqrt(1.0 + y) * (e - y * k)


def nordheim_t(y: float) -> float:
    """Prefactor correction ``t(y) = [(1+y) E(k) - y K(k)] / sqrt(1+y)``.

    Equals ``v - (2/3) y dv/dy``.
    """
    _check_y(y)
    if y == 0.0:
        return 1.0
    if y == 1.0:
        return math.pi / (2.0 * math.sqrt(2.0))
    k, e = _elliptic_ke(y)
    return ((1.0 + y) * e - y * k) / math.sqrt(1.0 + y)


def nordheim_v_approx(y: float) -> float:
    """Fast approximation ``v ~ 1 - y**2 + (y**2/3) ln y``.

    Absolute error below 2.4e-3 on [0, 1] (largest, 2.38e-3, near y = 0.42).
    """
    _check_y(y)
    if y == 0.0:
        return 1.0
    return 1.0 - y * y + y * y * math.log(y) / 3.0
