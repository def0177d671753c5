"""Self-contained special-function kernel.

Everything downstream (densities, quadrature cross-checks, the holomorphic
extension of Phi) rests on the accuracy of this module, so the kernel is
implemented from scratch instead of delegating to an external library:

* ``log_gamma_pos``   -- log Gamma(x) on (0, inf), promoted Stirling series
* ``log_gamma_cut``   -- the holomorphic branch of log Gamma on the cut plane
                         C \\ (-inf, 0], real on the positive axis
* ``digamma``         -- psi(x) summed term by term from the series
                         psi(x) = log x + sum_k [log(1+1/(x+k)) - 1/(x+k)]
* ``log_abs_gamma_one_minus`` -- log |Gamma(1-s)| for s >= 0 via reflection

Accuracy model: errors in a log-domain result are quoted as absolute errors
of the log, which is the relative error of the underlying Gamma value.  A
strict pointwise relative error at the zeros of log Gamma (x = 1, 2) is not
attainable in fixed precision (the condition number blows up there); those
two points return exactly 0.0.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "EULER_GAMMA",
    "EXP_NEG_EULER_GAMMA",
    "CutPlanePoint",
    "log_gamma_pos",
    "log_gamma_cut",
    "digamma",
    "log_abs_gamma_one_minus",
]

# Euler's constant, 0.57721566490153286060651209008240243104215933593992...
# (literal carries > 20 correct digits; the binary64 value is the nearest double).
EULER_GAMMA = 0.57721566490153286060651209008240243104

# exp(-EULER_GAMMA); this equals the s -> 0 limit of the h density and the
# mass of the point measure at s = 0 in the representation of Phi.
EXP_NEG_EULER_GAMMA = 0.5614594835668851698241432

_HALF_LOG_TWO_PI = 0.91893853320467274178032973640562  # log(2*pi)/2
_LOG_PI = 1.1447298858494001741434273513531  # log(pi)

# Stirling-series coefficients B_{2k} / (2k (2k-1)) for k = 1..10, from the
# Bernoulli numbers B_2 = 1/6 ... B_20 = -174611/330.  With argument >= 8 the
# first omitted term is |B_22/(22*21)| / 8^21 ~ 1.5e-18, far below double
# precision rounding of the leading terms.
_STIRLING_COEF = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
)

# Promote arguments below this point; keeps the Stirling magnitudes small so
# the back-subtraction of the promotion logs stays well conditioned.
_STIRLING_CUT = 8.0


@dataclass(frozen=True)
class CutPlanePoint:
    """A point of the cut plane A = C \\ (-inf, 0].

    All holomorphic extensions in this package live on A; constructing a
    point on the cut raises ``ValueError``.
    """

    re: float
    im: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.re) and math.isfinite(self.im)):
            raise ValueError("cut-plane point must be finite")
        if self.im == 0.0 and self.re <= 0.0:
            raise ValueError(f"point {self.re}+{self.im}j lies on the cut (-inf, 0]")

    @property
    def as_complex(self) -> complex:
        return complex(self.re, self.im)


def to_cut_plane(z) -> complex:
    """Coerce ``z`` (complex, real, or CutPlanePoint) to complex, rejecting the cut."""
    if isinstance(z, CutPlanePoint):
        return z.as_complex
    w = complex(z)
    if not (math.isfinite(w.real) and math.isfinite(w.imag)):
        raise ValueError("cut-plane point must be finite")
    if w.imag == 0.0 and w.real <= 0.0:
        raise ValueError(f"point {w} lies on the cut (-inf, 0]")
    return w


def _stirling_series_tail(y):
    """sum_k c_k / y^(2k-1) for the Stirling expansion; y may be ndarray."""
    r = 1.0 / y
    r2 = r * r
    ser = _STIRLING_COEF[-1]
    for c in _STIRLING_COEF[-2::-1]:
        ser = ser * r2 + c
    return ser * r


def _stirling_log_gamma(y):
    """log Gamma(y) for y >= _STIRLING_CUT (scalar or ndarray)."""
    return (y - 0.5) * np.log(y) - y + _HALF_LOG_TWO_PI + _stirling_series_tail(y)


def log_gamma_pos(x):
    """log Gamma(x) for real x > 0.  Accepts a float or ndarray.

    Promoted Stirling: for x < 8 evaluate log Gamma(x+n) with x+n >= 8 and
    subtract log of the product x(x+1)...(x+n-1).  Error <= a few ulp of
    max(1, |log Gamma(x)|); x = 1 and x = 2 return exactly 0.
    """
    arr = np.asarray(x, dtype=float)
    if arr.size and (not np.all(np.isfinite(arr)) or np.any(arr <= 0.0)):
        raise ValueError("log_gamma_pos requires finite x > 0")
    scalar = arr.ndim == 0
    a = np.atleast_1d(arr).astype(float)

    small = a < _STIRLING_CUT
    # Number of promotion steps per element (0 for large arguments).
    steps = np.where(small, np.ceil(_STIRLING_CUT - a), 0.0).astype(np.int64)
    y = a + steps
    out = _stirling_log_gamma(y)
    if np.any(small):
        prod = np.ones_like(a)
        nmax = int(steps.max())
        for k in range(nmax):
            factor = np.where(steps > k, a + k, 1.0)
            prod = prod * factor
        out = out - np.log(prod)
    # Exactness anchors: Gamma(1) = Gamma(2) = 1.
    out[(a == 1.0) | (a == 2.0)] = 0.0
    return float(out[0]) if scalar else out.reshape(arr.shape)


def _stirling_log_gamma_complex(w: complex) -> complex:
    r = 1.0 / w
    r2 = r * r
    ser = _STIRLING_COEF[-1]
    for c in _STIRLING_COEF[-2::-1]:
        ser = ser * r2 + c
    return (w - 0.5) * cmath.log(w) - w + _HALF_LOG_TWO_PI + ser * r


def log_gamma_cut(z) -> complex:
    """The holomorphic branch of log Gamma on the cut plane, real on (0, inf).

    Computed as log Gamma(z+n) - sum_k Log(z+k) with the principal Log of
    every factor.  After promotion Re(z+n) >= 8, where the Stirling series
    itself delivers the principal (real-on-positive-axis) branch, and the
    recurrence then propagates that branch through the whole cut plane; no
    winding-number bookkeeping is needed.  Note the result is *not* the
    principal logarithm of Gamma(z), which would jump across Im log Gamma =
    +-pi; it is the continuous branch with conjugate symmetry
    f(conj z) = conj f(z).
    """
    w = to_cut_plane(z)
    re_logs: list[float] = []
    im_logs: list[float] = []
    while w.real < _STIRLING_CUT:
        lg = cmath.log(w)
        re_logs.append(lg.real)
        im_logs.append(lg.imag)
        w += 1.0
    s = _stirling_log_gamma_complex(w)
    return complex(s.real - math.fsum(re_logs), s.imag - math.fsum(im_logs))


# psi(y) - log(y) asymptotic tail: -1/(2y) - B_2/(2 y^2) - B_4/(4 y^4) - ...
# With y >= 48 the first omitted term 1/(240 y^8) < 2e-16.
_DIGAMMA_TAIL_MIN_ARG = 48.0


def digamma(x: float) -> float:
    """psi(x) for x > 0, summed directly from the series

        psi(x) = log x + sum_{k>=0} [log(1 + 1/(x+k)) - 1/(x+k)].

    The first K terms (K chosen so x + K >= 48) are accumulated exactly as
    written, which doubles as a running check of the series itself; the
    remainder sum_{k>=K} telescopes into log((x+K)/...) corrections that are
    exactly the classical asymptotic psi(y) - log y at y = x + K.
    Absolute error <= ~1e-13 for x >= 1e-3 (the 1/x term's own rounding
    dominates below that).
    """
    if not (isinstance(x, (int, float)) and math.isfinite(x)) or x <= 0.0:
        raise ValueError("digamma requires finite x > 0")
    x = float(x)
    n_terms = int(max(0.0, math.ceil(_DIGAMMA_TAIL_MIN_ARG - x)))
    terms = [math.log(x)]
    for k in range(n_terms):
        u = 1.0 / (x + k)
        terms.append(math.log1p(u) - u)
    y = x + n_terms
    r = 1.0 / y
    r2 = r * r
    # -1/(2y) - 1/(12y^2) + 1/(120y^4) - 1/(252y^6)
    tail = -0.5 * r + r2 * (-1.0 / 12.0 + r2 * (1.0 / 120.0 - r2 / 252.0))
    terms.append(tail)
    return math.fsum(terms)


def _reduced_log_abs_sin_pi(s):
    """log |sin(pi s)| via the fractional part nearest an integer.

    r = s - round(s) is exact for |s| < 2^52, so sin(pi*r) loses no accuracy
    near the zeros even for very large s.  Scalar or ndarray.
    """
    r = s - np.round(s)
    return np.log(np.abs(np.sin(np.pi * r)))


def log_abs_gamma_one_minus(s):
    """log |Gamma(1-s)| for s >= 0, s not an integer >= 1.  Float or ndarray.

    For s < 1 this is log Gamma(1-s) directly.  For s > 1 the reflection
    formula Gamma(1-s) Gamma(s) = pi / sin(pi s) gives

        log |Gamma(1-s)| = log pi - log |sin(pi s)| - log Gamma(s),

    with |sin(pi s)| evaluated from the reduced fractional part of s so no
    accuracy is lost near the poles.  Integer s >= 1 are poles of Gamma(1-s)
    and raise ``ValueError``; callers that need the integer points handle
    them through the limiting value of their own formulas.
    """
    arr = np.asarray(s, dtype=float)
    if arr.size and (not np.all(np.isfinite(arr)) or np.any(arr < 0.0)):
        raise ValueError("log_abs_gamma_one_minus requires finite s >= 0")
    scalar = arr.ndim == 0
    a = np.atleast_1d(arr).astype(float)
    if np.any((a >= 1.0) & (a == np.floor(a))):
        raise ValueError("Gamma(1-s) has a pole at integer s >= 1")

    out = np.empty_like(a)
    low = a < 1.0
    if np.any(low):
        out[low] = log_gamma_pos(1.0 - a[low])
    high = ~low
    if np.any(high):
        sh = a[high]
        out[high] = _LOG_PI - _reduced_log_abs_sin_pi(sh) - log_gamma_pos(sh)
    return float(out[0]) if scalar else out.reshape(arr.shape)
