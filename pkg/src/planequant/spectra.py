"""Spectral analysis of the position/momentum matrices at scale.

The position matrix is symmetric tridiagonal with zero diagonal and
off-diagonal sqrt(k/2); its eigenvalues are the zeros of the degree-N
Hermite polynomial, symmetric about the origin.  Two independent routes are
provided:

* ``eig_all``       - full spectrum via the implicit-shift QL/QR iteration
                      (LAPACK sterf), eigenvalues only, for moderate N;
* ``sturm_count`` / ``extreme_eigenvalues``
                    - Sturm-sequence pivot counting plus certified bisection
                      for the extreme positive eigenvalues, O(N) per count,
                      practical to N = 10^6.

From the smallest and largest positive eigenvalues the summary assembles
the minimal forbidden cell delta_N (lambda_m for odd N, 2*lambda_m for even
N), the spectral width Delta_N = 2*lambda_M and their product
sigma_N = delta_N * Delta_N, which stays below 2*pi and increases within
each parity class.  A closed-form semicircle density and a scaled
three-term recurrence for the characteristic polynomial provide the
remaining cross-checks.

Bisection is deterministic: identical brackets and midpoints for identical
inputs, independent of thread count.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.linalg import LinAlgError, eigvalsh_tridiagonal

from .errors import BracketError, ConvergenceError, VerificationError
from .operators import OperatorMatrix

TWO_PI = 2.0 * math.pi

# Full-spectrum routine cap; extreme eigenvalues use bisection beyond.
DENSE_SPECTRUM_CAP = 20_000

# Default relative tolerance on bisected eigenvalues.
DEFAULT_EIG_TOL = 1e-13

# Rescale cadence for the characteristic-polynomial recurrence.
_RESCALE_EVERY = 16

# sigma_table switches to the vectorized multi-dimension bisection when the
# batch is wide enough and every matrix is small enough to pad.
_BATCH_MIN_SIZE = 16
_BATCH_MAX_DIM = 4096


@dataclass(frozen=True)
class SymTridiagonal:
    """Symmetric tridiagonal matrix as diagonal + off-diagonal arrays."""

    diag: np.ndarray
    offdiag: np.ndarray

    def __post_init__(self):
        diag = np.asarray(self.diag, dtype=float)
        off = np.asarray(self.offdiag, dtype=float)
        if diag.ndim != 1 or off.ndim != 1 or off.shape[0] != max(diag.shape[0] - 1, 0):
            raise ValueError(
                f"need diag length N and offdiag length N-1, got {diag.shape} and {off.shape}"
            )
        if off.size and not np.all(off > 0.0):
            raise ValueError("off-diagonal entries must be strictly positive (unreduced matrix)")
        diag.setflags(write=False)
        off.setflags(write=False)
        object.__setattr__(self, "diag", diag)
        object.__setattr__(self, "offdiag", off)

    @property
    def dim(self) -> int:
        return self.diag.shape[0]

    @classmethod
    def from_operator(cls, op: OperatorMatrix) -> "SymTridiagonal":
        """Extract tridiagonal data from a (possibly complex) tridiagonal operator.

        A complex Hermitian tridiagonal is unitarily equivalent to the real
        symmetric one with the same diagonal and |off-diagonal|, so the
        spectrum is preserved.
        """
        m = op.entries
        outside = np.abs(np.triu(m, 2)) + np.abs(np.tril(m, -2))
        if float(outside.max()) > 0.0:
            raise ValueError("operator is not tridiagonal")
        if float(np.max(np.abs(np.imag(np.diag(m))))) > 1e-14:
            raise ValueError("diagonal must be real")
        diag = np.real(np.diag(m)).copy()
        upper = np.diag(m, 1)
        lower = np.diag(m, -1)
        if upper.size and float(np.max(np.abs(np.abs(upper) - np.abs(lower)))) > 1e-12:
            raise ValueError("off-diagonal magnitudes must match for a Hermitian matrix")
        return cls(diag=diag, offdiag=np.abs(upper).astype(float))

    @cached_property
    def _count_data(self):
        """Plain-Python lists and pivot floor, cached for repeated counting."""
        diag = self.diag.tolist()
        bsq = (self.offdiag * self.offdiag).tolist()
        max_bsq = max(bsq) if bsq else 1.0
        pivmin = np.finfo(float).tiny * max(max_bsq, 1.0)
        return diag, bsq, pivmin

    def gershgorin_bound(self) -> float:
        """Upper bound on |eigenvalues| from row sums."""
        n = self.dim
        if n == 1:
            return abs(float(self.diag[0]))
        radius = np.zeros(n)
        radius[:-1] += self.offdiag
        radius[1:] += self.offdiag
        return float(np.max(np.abs(self.diag) + radius))


def position_tridiagonal(n_dim: int) -> SymTridiagonal:
    """Tridiagonal data of the position matrix: zero diagonal, sqrt(k/2) off."""
    if n_dim < 1:
        raise ValueError(f"n_dim must be >= 1, got {n_dim}")
    return SymTridiagonal(
        diag=np.zeros(n_dim),
        offdiag=np.sqrt(np.arange(1, n_dim) / 2.0),
    )


# ---------------------------------------------------------------------------
# characteristic polynomial recurrence
# ---------------------------------------------------------------------------

def char_poly_recurrence(n_dim: int, lam: float) -> tuple[float, int]:
    """Characteristic polynomial p_N(lam) of the position matrix, scaled.

    p_0 = 1, p_1 = -lam, p_{k+1} = -lam p_k - (k/2) p_{k-1}.  Returned as
    (mantissa, exp2) with p_N(lam) = mantissa * 2**exp2; periodic rescaling
    keeps the recurrence in range for any N.
    """
    if n_dim < 0:
        raise ValueError(f"n_dim must be >= 0, got {n_dim}")
    p_prev, p = 1.0, -lam
    if n_dim == 0:
        return 1.0, 0
    exp2 = 0
    for k in range(1, n_dim):
        p, p_prev = -lam * p - 0.5 * k * p_prev, p
        if k % _RESCALE_EVERY == 0:
            m = max(abs(p), abs(p_prev))
            if m > 0.0 and (m > 2.0**500 or m < 2.0**-500):
                shift = math.frexp(m)[1]
                p = math.ldexp(p, -shift)
                p_prev = math.ldexp(p_prev, -shift)
                exp2 += shift
    return p, exp2


def hermite_value(n_dim: int, lam: float) -> tuple[float, int]:
    """Scaled Hermite polynomial value: H_N(lam) = (-2)^N p_N(lam).

    Same (mantissa, exp2) convention as ``char_poly_recurrence``.
    """
    p, exp2 = char_poly_recurrence(n_dim, lam)
    sign = -1.0 if n_dim % 2 else 1.0
    return sign * p, exp2 + n_dim


def hermite_residual(n_dim: int, lams) -> np.ndarray:
    """|p_N| / max(|p_N|, |p_{N-1}|) at each lam, vectorized.

    Near a zero of p_N the denominator is carried by p_{N-1} (the zeros of
    consecutive orders interlace), so the ratio measures closeness to a zero
    relative to the local polynomial scale.
    """
    lams = np.atleast_1d(np.asarray(lams, dtype=float))
    p_prev = np.ones_like(lams)
    p = -lams.copy()
    for k in range(1, n_dim):
        p, p_prev = -lams * p - 0.5 * k * p_prev, p
        if k % _RESCALE_EVERY == 0:
            scale = np.maximum(np.abs(p), np.abs(p_prev))
            scale[scale == 0.0] = 1.0
            p = p / scale
            p_prev = p_prev / scale
    denom = np.maximum(np.abs(p), np.abs(p_prev))
    denom[denom == 0.0] = 1.0
    return np.abs(p) / denom


# ---------------------------------------------------------------------------
# full spectrum (implicit-shift QL/QR, eigenvalues only)
# ---------------------------------------------------------------------------

def eig_all(t: SymTridiagonal, max_dense_dim: int = DENSE_SPECTRUM_CAP) -> np.ndarray:
    """All eigenvalues in ascending order via implicit-shift QL/QR iteration.

    Eigenvalues only (no eigenvector accumulation), O(N^2) work, accuracy a
    small multiple of machine epsilon times the spectral width.  Dimensions
    beyond ``max_dense_dim`` are rejected; use the bisection routines there.
    """
    if t.dim > max_dense_dim:
        raise ValueError(
            f"dim {t.dim} exceeds the full-spectrum cap {max_dense_dim}; "
            "use extreme_eigenvalues/sturm_count instead"
        )
    if t.dim == 1:
        return t.diag.copy()
    try:
        return eigvalsh_tridiagonal(t.diag, t.offdiag, lapack_driver="sterf")
    except LinAlgError as exc:
        raise ConvergenceError(
            f"implicit QL/QR failed to converge within {30 * t.dim} implicit steps "
            f"for dim {t.dim}: {exc}"
        ) from exc


# ---------------------------------------------------------------------------
# Sturm counting and certified bisection
# ---------------------------------------------------------------------------

def sturm_count(t: SymTridiagonal, lam: float) -> int:
    """Number of eigenvalues strictly below lam.

    Counts negative pivots of the LDL^T factorization of T - lam*I via
    d_k = (diag_k - lam) - offdiag_{k-1}^2 / d_{k-1}, with tiny pivots
    replaced by a signed floor so the division never produces infinities.
    Monotone nondecreasing in lam.
    """
    diag, bsq, pivmin = t._count_data
    count = 0
    d = diag[0] - lam
    if d <= 0.0:
        if d > -pivmin:
            d = -pivmin
        count = 1
    elif d < pivmin:
        d = pivmin
    for i, b in enumerate(bsq):
        d = diag[i + 1] - lam - b / d
        if d <= 0.0:
            if d > -pivmin:
                d = -pivmin
            count += 1
        elif d < pivmin:
            d = pivmin
    return count


def _bisect_eigenvalue(t: SymTridiagonal, index: int, lo: float, hi: float, tol: float) -> float:
    """Eigenvalue with 0-based ascending index via Sturm-count bisection.

    Requires count(lo) <= index < count(hi); certified before refinement.
    """
    c_lo = sturm_count(t, lo)
    c_hi = sturm_count(t, hi)
    if not (c_lo <= index < c_hi):
        raise BracketError(
            f"bracket [{lo}, {hi}] does not enclose eigenvalue {index}: "
            f"counts are {c_lo} and {c_hi} for dim {t.dim}"
        )
    for _ in range(300):
        mid = 0.5 * (lo + hi)
        if not (lo < mid < hi):
            break  # interval no longer splittable in floating point
        if sturm_count(t, mid) <= index:
            lo = mid
        else:
            hi = mid
        if hi - lo <= tol * max(abs(lo), abs(hi)):
            break
    return 0.5 * (lo + hi)


def _extreme_indices(n_dim: int) -> tuple[int, int]:
    """0-based indices of the smallest positive and the largest eigenvalue.

    The spectrum is symmetric with floor(N/2) negative values and, for odd
    N, a zero in the middle; the first positive eigenvalue therefore sits at
    index N/2 (even) or (N+1)/2 (odd).
    """
    idx_m = n_dim // 2 if n_dim % 2 == 0 else n_dim // 2 + 1
    return idx_m, n_dim - 1


def extreme_eigenvalues(t: SymTridiagonal, tol: float = DEFAULT_EIG_TOL) -> tuple[float, float]:
    """(smallest positive, largest) eigenvalue of a zero-diagonal tridiagonal.

    Each bisection costs O(N) per count; total O(N log(1/tol)), practical at
    N = 10^6.  Requires the symmetric-spectrum structure (zero diagonal).
    """
    if t.dim < 2:
        raise ValueError(f"need dim >= 2 for a positive eigenvalue, got {t.dim}")
    if float(np.max(np.abs(t.diag))) != 0.0:
        raise ValueError("extreme_eigenvalues expects a zero-diagonal (sign-symmetric) matrix")
    if not (tol > 0.0):
        raise ValueError(f"tol must be positive, got {tol!r}")
    ub = t.gershgorin_bound() + 1.0
    idx_m, idx_max = _extreme_indices(t.dim)
    lam_max = _bisect_eigenvalue(t, idx_max, 0.0, ub, tol)
    lam_min = _bisect_eigenvalue(t, idx_m, 0.0, ub, tol)
    return lam_min, lam_max


def _batch_position_counts(lams: np.ndarray, dims: np.ndarray, pivmin: np.ndarray) -> np.ndarray:
    """Sturm counts for the position family, vectorized over problems.

    Problem j has dimension dims[j] and shift lams[j]; the off-diagonal
    squares k/2 are shared by the whole family, so the recurrences advance
    in lockstep with a per-problem active mask.
    """
    n_max = int(dims.max())
    d = -lams.copy()
    neg = d <= 0.0
    d[neg & (d > -pivmin)] = -pivmin[neg & (d > -pivmin)]
    pos_floor = ~neg & (d < pivmin)
    d[pos_floor] = pivmin[pos_floor]
    counts = neg.astype(np.int64)
    for k in range(1, n_max):
        active = dims > k
        if not active.any():
            break
        dn = -lams - (0.5 * k) / d
        neg = dn <= 0.0
        dn = np.where(neg & (dn > -pivmin), -pivmin, dn)
        dn = np.where(~neg & (dn < pivmin), pivmin, dn)
        counts += (neg & active).astype(np.int64)
        d = np.where(active, dn, d)
    return counts


def _batch_extremes(dims: np.ndarray, tol: float) -> tuple[np.ndarray, np.ndarray]:
    """(lambda_min_positive, lambda_max) for many position matrices at once."""
    dims = np.asarray(dims, dtype=np.int64)
    idx_m = np.where(dims % 2 == 0, dims // 2, dims // 2 + 1)
    targets = np.concatenate([idx_m, dims - 1])
    both_dims = np.concatenate([dims, dims])
    pivmin = np.finfo(float).tiny * np.maximum((both_dims - 1) / 2.0, 1.0)
    lo = np.zeros(both_dims.shape)
    hi = np.sqrt(2.0 * both_dims) + 1.0
    c_hi = _batch_position_counts(hi, both_dims, pivmin)
    if not np.all(c_hi == both_dims):
        bad = int(both_dims[np.argmax(c_hi != both_dims)])
        raise BracketError(f"upper bracket failed to capture all eigenvalues at dim {bad}")
    for _ in range(300):
        mid = 0.5 * (lo + hi)
        counts = _batch_position_counts(mid, both_dims, pivmin)
        go_up = counts <= targets
        lo = np.where(go_up, mid, lo)
        hi = np.where(go_up, hi, mid)
        if np.all(hi - lo <= tol * np.maximum(np.abs(lo), np.abs(hi))):
            break
    res = 0.5 * (lo + hi)
    half = dims.shape[0]
    return res[:half], res[half:]


# ---------------------------------------------------------------------------
# summaries
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SpectrumSummary:
    """Extreme positive eigenvalues and the forbidden-cell/width product."""

    dim: int
    lambda_min_pos: float
    lambda_max: float
    delta: float
    width: float
    sigma: float
    parity: str

    def __post_init__(self):
        if not (0.0 < self.lambda_min_pos <= self.lambda_max):
            raise VerificationError(
                f"need 0 < lambda_m <= lambda_M, got ({self.lambda_min_pos}, {self.lambda_max})"
            )
        if not (self.sigma < TWO_PI):
            raise VerificationError(f"sigma = {self.sigma} violates the 2*pi bound at dim {self.dim}")

    @classmethod
    def from_extremes(cls, n_dim: int, lam_min: float, lam_max: float) -> "SpectrumSummary":
        even = n_dim % 2 == 0
        delta = 2.0 * lam_min if even else lam_min
        width = 2.0 * lam_max
        return cls(
            dim=n_dim,
            lambda_min_pos=lam_min,
            lambda_max=lam_max,
            delta=delta,
            width=width,
            sigma=delta * width,
            parity="even" if even else "odd",
        )


def spectrum_summary(n_dim: int, tol: float = DEFAULT_EIG_TOL, method: str = "bisect") -> SpectrumSummary:
    """Assemble the forbidden-cell/width summary for one dimension."""
    if n_dim < 2:
        raise ValueError(f"need n_dim >= 2 for a positive eigenvalue, got {n_dim}")
    t = position_tridiagonal(n_dim)
    if method == "bisect":
        lam_min, lam_max = extreme_eigenvalues(t, tol=tol)
    elif method == "qr":
        ev = eig_all(t)
        idx_m, idx_max = _extreme_indices(n_dim)
        lam_min, lam_max = float(ev[idx_m]), float(ev[idx_max])
    else:
        raise ValueError(f"method must be 'bisect' or 'qr', got {method!r}")
    return SpectrumSummary.from_extremes(n_dim, lam_min, lam_max)


def sigma_table(n_list, tol: float = DEFAULT_EIG_TOL) -> list[SpectrumSummary]:
    """Summaries for a batch of dimensions, vectorized when profitable."""
    n_list = [int(n) for n in n_list]
    if not n_list:
        raise ValueError("empty dimension list")
    for n in n_list:
        if n < 2:
            raise ValueError(f"need n >= 2 in sigma_table, got {n}")
    if len(n_list) >= _BATCH_MIN_SIZE and max(n_list) <= _BATCH_MAX_DIM:
        dims = np.array(n_list, dtype=np.int64)
        lam_min, lam_max = _batch_extremes(dims, tol)
        return [
            SpectrumSummary.from_extremes(n, float(lm), float(lx))
            for n, lm, lx in zip(n_list, lam_min, lam_max)
        ]
    return [spectrum_summary(n, tol=tol) for n in n_list]


# ---------------------------------------------------------------------------
# structural checks
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GapReport:
    """Gap and interlacing diagnostics for one dimension."""

    dim: int
    parity: str
    gaps_ok: bool
    worst_gap_margin: float
    interlacing_ok: bool
    worst_interlacing_margin: float

    @property
    def passed(self) -> bool:
        return self.gaps_ok and self.interlacing_ok


def gap_properties(n_dim: int, max_dense_dim: int = DENSE_SPECTRUM_CAP) -> GapReport:
    """Check consecutive-gap lower bounds and interlacing with order N+1.

    Every gap between consecutive positive eigenvalues exceeds the smallest
    positive one (odd N) or twice it (even N), and the order-N and order-N+1
    spectra strictly interlace.
    """
    if n_dim < 2:
        raise ValueError(f"need n_dim >= 2, got {n_dim}")
    ev_n = eig_all(position_tridiagonal(n_dim), max_dense_dim)
    ev_n1 = eig_all(position_tridiagonal(n_dim + 1), max_dense_dim)
    pos = ev_n[ev_n > 1e-10 * math.sqrt(2.0 * n_dim)]
    lam1 = float(pos[0])
    bound = lam1 if n_dim % 2 else 2.0 * lam1
    if pos.size >= 2:
        worst_gap = float(np.min(np.diff(pos)) - bound)
    else:
        worst_gap = math.inf
    # strict interlacing: ev_n1[i] < ev_n[i] < ev_n1[i+1]
    left = ev_n - ev_n1[:-1]
    right = ev_n1[1:] - ev_n
    worst_inter = float(min(left.min(), right.min()))
    return GapReport(
        dim=n_dim,
        parity="even" if n_dim % 2 == 0 else "odd",
        gaps_ok=worst_gap > 0.0,
        worst_gap_margin=worst_gap,
        interlacing_ok=worst_inter > 0.0,
        worst_interlacing_margin=worst_inter,
    )


def semicircle_density(n_dim: int, x1: float, x2: float) -> float:
    """Predicted eigenvalue count in [x1, x2] from the semicircle density.

    Integrates w(t) = sqrt(2N - t^2)/(pi N) in closed form; intervals
    reaching outside the support [-sqrt(2N), sqrt(2N)] are clipped with a
    warning.
    """
    if n_dim < 1:
        raise ValueError(f"n_dim must be >= 1, got {n_dim}")
    if not x1 < x2:
        raise ValueError(f"need x1 < x2, got ({x1}, {x2})")
    a = math.sqrt(2.0 * n_dim)
    cx1, cx2 = max(x1, -a), min(x2, a)
    if cx1 != x1 or cx2 != x2:
        warnings.warn(
            f"interval ({x1}, {x2}) clipped to the spectral support (+-{a:.6g})",
            stacklevel=2,
        )
    if cx1 >= cx2:
        return 0.0

    def antideriv(tv: float) -> float:
        return 0.5 * (tv * math.sqrt(max(2.0 * n_dim - tv * tv, 0.0))
                      + 2.0 * n_dim * math.asin(tv / a))

    return (antideriv(cx2) - antideriv(cx1)) / math.pi


def semicircle_count_deviation(n_dim: int, x1: float, x2: float) -> tuple[float, int, float]:
    """(predicted, counted, relative deviation) for one interval.

    The exact count comes from Sturm pivots, independent of the density
    formula.
    """
    t = position_tridiagonal(n_dim)
    counted = sturm_count(t, x2) - sturm_count(t, x1)
    predicted = semicircle_density(n_dim, x1, x2)
    rel = abs(predicted - counted) / max(counted, 1)
    return predicted, counted, rel


@dataclass(frozen=True)
class AsymptoticReport:
    """Large-N ratio diagnostics; every ratio approaches 1 from below."""

    dim: int
    parity: str
    largest_ratio: float       # lambda_M / sqrt(2N)
    smallest_ratio: float      # lambda_m * sqrt(2N)/pi (odd) or *2 (even)
    sigma_ratio: float         # sigma / (2*pi)


def asymptotic_check(n_dim: int, tol: float = DEFAULT_EIG_TOL) -> AsymptoticReport:
    """Ratios of the extreme eigenvalues to their large-N laws."""
    if n_dim < 100:
        raise ValueError(f"asymptotic ratios need n_dim >= 100, got {n_dim}")
    summary = spectrum_summary(n_dim, tol=tol)
    scale = math.sqrt(2.0 * n_dim)
    even = n_dim % 2 == 0
    small = summary.lambda_min_pos * scale / math.pi
    if even:
        small *= 2.0
    return AsymptoticReport(
        dim=n_dim,
        parity="even" if even else "odd",
        largest_ratio=summary.lambda_max / scale,
        smallest_ratio=small,
        sigma_ratio=summary.sigma / TWO_PI,
    )


# ---------------------------------------------------------------------------
# exports
# ---------------------------------------------------------------------------

SUMMARY_FIELDS = ("N", "lambda_m", "lambda_M", "delta", "width", "sigma", "parity")


def summaries_to_csv(summaries, include_two_pi: bool = False) -> str:
    """CSV with schema N,lambda_m,lambda_M,delta,width,sigma,parity[,two_pi]."""
    header = list(SUMMARY_FIELDS) + (["two_pi"] if include_two_pi else [])
    lines = [",".join(header)]
    for s in summaries:
        row = [
            str(s.dim),
            f"{s.lambda_min_pos:.9g}",
            f"{s.lambda_max:.9g}",
            f"{s.delta:.9g}",
            f"{s.width:.9g}",
            f"{s.sigma:.9g}",
            s.parity,
        ]
        if include_two_pi:
            row.append(f"{TWO_PI:.9g}")
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"


def summaries_to_json(summaries, include_two_pi: bool = False) -> str:
    rows = []
    for s in summaries:
        row = {
            "N": s.dim,
            "lambda_m": s.lambda_min_pos,
            "lambda_M": s.lambda_max,
            "delta": s.delta,
            "width": s.width,
            "sigma": s.sigma,
            "parity": s.parity,
        }
        if include_two_pi:
            row["two_pi"] = TWO_PI
        rows.append(row)
    return json.dumps(rows)


def spectrum_to_csv(eigenvalues) -> str:
    """Full-spectrum dump with schema index,eigenvalue."""
    lines = ["index,eigenvalue"]
    lines.extend(f"{i},{v:.9g}" for i, v in enumerate(eigenvalues))
    return "\n".join(lines) + "\n"


def spectrum_to_json(eigenvalues) -> str:
    return json.dumps({"eigenvalues": [float(v) for v in eigenvalues]})


def gnuplot_sigma_script(csv_name: str) -> str:
    """Plot sigma against dimension with the 2*pi asymptote."""
    return "\n".join(
        [
            "# forbidden-cell / spectral-width product against dimension",
            "set datafile separator ','",
            "set logscale x",
            "set xlabel 'N'",
            "set ylabel 'sigma'",
            f"two_pi = {TWO_PI!r}",
            f"plot '{csv_name}' every ::1 using 1:6 with linespoints title 'sigma', \\",
            "     two_pi with lines dashtype 2 title '2 pi'",
        ]
    ) + "\n"


def gnuplot_extremes_script(csv_name: str) -> str:
    """Plot the extreme positive eigenvalues split by parity."""
    return "\n".join(
        [
            "# extreme positive eigenvalues against dimension, by parity",
            "set datafile separator ','",
            "set logscale x",
            "set xlabel 'N'",
            "set ylabel 'eigenvalue'",
            f"plot '{csv_name}' every ::1 using 1:(strcol(7) eq 'even' ? $2 : 1/0) "
            "with points title 'smallest positive (even N)', \\",
            f"     '{csv_name}' every ::1 using 1:(strcol(7) eq 'odd' ? $2 : 1/0) "
            "with points title 'smallest positive (odd N)', \\",
            f"     '{csv_name}' every ::1 using 1:3 with lines title 'largest'",
        ]
    ) + "\n"


def gnuplot_interlacing_script(csv_name: str) -> str:
    """Plot the smallest positive eigenvalue for consecutive dimensions."""
    return "\n".join(
        [
            "# interlacing of the smallest positive eigenvalues across dimensions",
            "set datafile separator ','",
            "set xlabel 'N'",
            "set ylabel 'smallest positive eigenvalue'",
            f"plot '{csv_name}' every ::1 using 1:2 with linespoints notitle",
        ]
    ) + "\n"
