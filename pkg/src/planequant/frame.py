"""Truncated coherent-state frame on the complex plane.

The frame lives in an N-dimensional Hilbert space spanned by the first N
Fock states.  A phase-space point z = (q + ip)/sqrt(2) is mapped to the
normalized state with coefficients z^n / sqrt(n! * N(|z|^2)), where
N(x) = sum_{n<N} x^n/n! is the truncated exponential series.  Everything
here is dimensionless (unit mass, unit frequency, unit action); physical
scales enter only in the bounds calculator of the CLI.

All functions are pure and the per-dimension caches on ``FrameConfig`` are
immutable after construction, so concurrent use from multiple threads is
safe.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import DimensionMismatchError, QuadratureOrderError, RangeOverflowError

# Largest |z|^2 accepted by the linear-scale routines.  exp(710) overflows a
# double; we reject a little earlier and point callers at the log variants.
OVERFLOW_R2 = 700.0

# Unit-norm tolerance for coherent-state coefficient vectors.
NORM_TOL = 1e-12

# Dimension up to which cumulative 1/sqrt(n!) factors are reliable; beyond
# this the log-gamma path is used for coefficient formation.
_DIRECT_FACTORIAL_DIM = 170


@dataclass(frozen=True)
class PhasePoint:
    """A point of the classical phase plane, z = (q + i p)/sqrt(2)."""

    q: float
    p: float

    def __post_init__(self):
        if not (math.isfinite(self.q) and math.isfinite(self.p)):
            raise ValueError(f"phase point components must be finite, got ({self.q}, {self.p})")

    @property
    def z(self) -> complex:
        return complex(self.q, self.p) / math.sqrt(2.0)

    @property
    def r2(self) -> float:
        """|z|^2 = (q^2 + p^2)/2."""
        return (self.q * self.q + self.p * self.p) / 2.0

    @classmethod
    def from_z(cls, z: complex) -> "PhasePoint":
        z = complex(z)
        return cls(q=math.sqrt(2.0) * z.real, p=math.sqrt(2.0) * z.imag)


@dataclass(frozen=True)
class FrameConfig:
    """Truncation level N >= 1 plus derived per-dimension caches."""

    dim: int

    def __post_init__(self):
        if not isinstance(self.dim, int) or self.dim < 1:
            raise ValueError(f"dim must be an integer >= 1, got {self.dim!r}")

    @cached_property
    def inv_sqrt_fact(self) -> np.ndarray:
        """1/sqrt(n!) for n = 0..N-1, by cumulative product (exact to ~N*eps)."""
        out = np.empty(self.dim)
        out[0] = 1.0
        for n in range(1, self.dim):
            out[n] = out[n - 1] / math.sqrt(n)
        out.setflags(write=False)
        return out

    @cached_property
    def half_log_fact(self) -> np.ndarray:
        """0.5 * log(n!) for n = 0..N-1, for the log-domain coefficient path."""
        out = 0.5 * np.array([math.lgamma(n + 1.0) for n in range(self.dim)])
        out.setflags(write=False)
        return out


@dataclass(frozen=True)
class CoherentState:
    """Unit-norm coefficient vector of a truncated coherent state."""

    dim: int
    coeffs: np.ndarray
    source: PhasePoint | None = None

    def __post_init__(self):
        coeffs = np.asarray(self.coeffs, dtype=complex)
        if coeffs.shape != (self.dim,):
            raise ValueError(f"expected {self.dim} coefficients, got shape {coeffs.shape}")
        coeffs.setflags(write=False)
        object.__setattr__(self, "coeffs", coeffs)
        nrm = float(np.linalg.norm(coeffs))
        if abs(nrm - 1.0) > NORM_TOL:
            raise ValueError(f"coherent-state coefficients must have unit norm, got {nrm!r}")


def normalization_factor(n_dim: int, r2: float) -> float:
    """Truncated exponential series sum_{n<N} r2^n / n!.

    Forward term recurrence with compensated (Kahan) summation.  Rejects
    r2 beyond the overflow threshold; use ``log_normalization_factor``
    there instead.
    """
    if n_dim < 1:
        raise ValueError(f"n_dim must be >= 1, got {n_dim}")
    if not (r2 >= 0.0):
        raise ValueError(f"r2 must be nonnegative, got {r2!r}")
    if r2 > OVERFLOW_R2:
        raise RangeOverflowError(
            f"|z|^2 = {r2} exceeds the linear-scale limit {OVERFLOW_R2}; "
            "use log_normalization_factor"
        )
    total = 1.0
    comp = 0.0
    term = 1.0
    for n in range(1, n_dim):
        term *= r2 / n
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
    return total


def log_normalization_factor(n_dim: int, r2: float) -> float:
    """log of the truncated exponential series, stable for any r2 >= 0."""
    if n_dim < 1:
        raise ValueError(f"n_dim must be >= 1, got {n_dim}")
    if not (r2 >= 0.0):
        raise ValueError(f"r2 must be nonnegative, got {r2!r}")
    if r2 == 0.0:
        return 0.0
    n = np.arange(n_dim)
    logs = n * math.log(r2) - np.array([math.lgamma(k + 1.0) for k in range(n_dim)])
    top = logs.max()
    return top + math.log(np.exp(logs - top).sum())


def coherent_state(cfg: FrameConfig, x: PhasePoint) -> CoherentState:
    """Normalized truncated coherent state attached to the phase point x."""
    r2 = x.r2
    if r2 > OVERFLOW_R2:
        raise RangeOverflowError(
            f"|z|^2 = {r2} exceeds the linear-scale limit {OVERFLOW_R2}; "
            "use coherent_state_log"
        )
    n = cfg.dim
    z = x.z
    if z == 0:
        coeffs = np.zeros(n, dtype=complex)
        coeffs[0] = 1.0
        return CoherentState(dim=n, coeffs=coeffs, source=x)

    # Direct path while z^n and 1/sqrt(n!) are individually representable;
    # otherwise assemble each coefficient in the log domain (the result is
    # a unit vector, so the exponentials themselves never overflow).
    direct = n <= _DIRECT_FACTORIAL_DIM and (n - 1) * math.log(max(abs(z), 1.0)) < 600.0
    if direct:
        powers = z ** np.arange(n)
        raw = powers * cfg.inv_sqrt_fact
        coeffs = raw / math.sqrt(normalization_factor(n, r2))
    else:
        logmag, phase = coherent_state_log(cfg, x)
        coeffs = np.exp(logmag) * np.exp(1j * phase)
    return CoherentState(dim=n, coeffs=coeffs, source=x)


def coherent_state_log(cfg: FrameConfig, x: PhasePoint) -> tuple[np.ndarray, np.ndarray]:
    """Log-domain coherent state: (log-magnitude, phase) coefficient pairs.

    Valid for any |z|^2, including beyond the linear-scale overflow limit.
    """
    n = cfg.dim
    z = x.z
    ns = np.arange(n)
    if z == 0:
        logmag = np.full(n, -np.inf)
        logmag[0] = 0.0
        return logmag, np.zeros(n)
    log_norm = log_normalization_factor(n, x.r2)
    logmag = ns * math.log(abs(z)) - cfg.half_log_fact - 0.5 * log_norm
    phase = ns * cmath.phase(z)
    return logmag, phase


def overlap(a: CoherentState, b: CoherentState) -> complex:
    """Inner product <a|b> of two states in the same truncated space."""
    if a.dim != b.dim:
        raise DimensionMismatchError(f"state dimensions differ: {a.dim} vs {b.dim}")
    return complex(np.vdot(a.coeffs, b.coeffs))


@dataclass(frozen=True)
class QuadratureSpec:
    """Phase-plane quadrature orders: radial Gauss-Laguerre x uniform angular."""

    radial_order: int
    angular_order: int

    def __post_init__(self):
        if self.radial_order < 1 or self.angular_order < 1:
            raise ValueError("quadrature orders must be >= 1")

    @classmethod
    def default_for(cls, dim: int) -> "QuadratureSpec":
        # Exact for matrix elements of the N-dim frame: radial degree in
        # t = |z|^2 is at most 2N-2 and angular Fourier modes satisfy
        # |m| <= N-1, with headroom for low-degree symbol factors.
        return cls(radial_order=dim + 4, angular_order=4 * dim + 4)


def gauss_laguerre_rule(m: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights for integral_0^inf f(t) e^{-t} dt, exact to degree 2m-1.

    Delegates to numpy's Newton-polished rule: the plain Jacobi-matrix
    eigenvector construction loses all relative accuracy in the tiny weights
    of the largest nodes (first eigenvector components below sqrt(eps)),
    which wrecks moments beyond degree ~40.
    """
    if m < 1:
        raise ValueError(f"quadrature order must be >= 1, got {m}")
    nodes, weights = np.polynomial.laguerre.laggauss(m)
    return nodes, weights


def phase_plane_quadrature(quad: QuadratureSpec) -> tuple[np.ndarray, np.ndarray]:
    """Flattened nodes z_j and weights w_j discretizing (1/pi) e^{-|z|^2} d^2z.

    With t = |z|^2 the Gaussian-plane integral becomes a Laguerre integral in
    t times a uniform angular average, so sum_j w_j g(z_j) recovers
    (1/pi) int g(z) e^{-|z|^2} d^2z exactly for g polynomial in (z, conj z)
    within the orders of ``quad``.
    """
    t, wt = gauss_laguerre_rule(quad.radial_order)
    k = quad.angular_order
    theta = 2.0 * np.pi * np.arange(k) / k
    z = np.sqrt(t)[:, None] * np.exp(1j * theta)[None, :]
    w = np.repeat(wt / k, k)
    return z.ravel(), w


def monomial_state_matrix(dim: int, z: np.ndarray) -> np.ndarray:
    """Matrix V with V[n, j] = z_j^n / sqrt(n!) for n = 0..dim-1.

    These are the unnormalized coherent-state coefficients at each node;
    quadrature sandwiches V * w * V^H reproduce frame integrals.
    """
    z = np.asarray(z, dtype=complex)
    ns = np.arange(dim)
    amax = float(np.max(np.abs(z))) if z.size else 0.0
    if dim <= _DIRECT_FACTORIAL_DIM and (dim - 1) * math.log(max(amax, 1.0)) < 600.0:
        cfg = FrameConfig(dim)
        return z[None, :] ** ns[:, None] * cfg.inv_sqrt_fact[:, None]
    # log-domain fill for large dimensions / large nodes
    cfg = FrameConfig(dim)
    absz = np.abs(z)
    safe = np.where(absz == 0.0, 1.0, absz)
    logmag = ns[:, None] * np.log(safe)[None, :] - cfg.half_log_fact[:, None]
    v = np.exp(logmag) * np.exp(1j * ns[:, None] * np.angle(z)[None, :])
    if np.any(absz == 0.0):
        cols = absz == 0.0
        v[:, cols] = 0.0
        v[0, cols] = 1.0
    return v


def verify_identity_resolution(
    cfg: FrameConfig,
    quad: QuadratureSpec | None = None,
    tol: float | None = None,
) -> float:
    """Max-abs deviation of the quadrature frame integral from the identity.

    Evaluates (1/pi) int |z><z| N(|z|^2) e^{-|z|^2} d^2z entrywise with the
    supplied (or default) quadrature and returns max |G - I|.  If ``tol`` is
    given and the deviation exceeds it, raises ``QuadratureOrderError`` with
    the orders needed for exactness.
    """
    if quad is None:
        quad = QuadratureSpec.default_for(cfg.dim)
    z, w = phase_plane_quadrature(quad)
    gram = np.zeros((cfg.dim, cfg.dim), dtype=complex)
    # chunk the nodes to bound the Vandermonde workspace
    chunk = 16384
    for start in range(0, z.size, chunk):
        zs = z[start:start + chunk]
        v = monomial_state_matrix(cfg.dim, zs)
        gram += (v * w[start:start + chunk]) @ v.conj().T
    dev = float(np.max(np.abs(gram - np.eye(cfg.dim))))
    if tol is not None and dev > tol:
        raise QuadratureOrderError(
            f"identity resolution deviates by {dev:.3e} > {tol:.1e} with radial order "
            f"{quad.radial_order}, angular order {quad.angular_order}; exactness for "
            f"dim {cfg.dim} needs radial order >= {cfg.dim} and angular order >= {2 * cfg.dim - 1}"
        )
    return dev
