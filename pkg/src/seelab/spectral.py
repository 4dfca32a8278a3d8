"""Hilbert-space substrate: eigenstructures, weighted norms, projections, semigroup.

The state space is realized in the eigenbasis of the diagonal generator.  An
element of H (or of an interpolation space H_r) is represented by a finite 1-D
float array of spectral coefficients; mode n (1-based) lives in slot n-1 and
all modes beyond the array length are exactly zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import gammaln

from .errors import DomainError, NumericsError

__all__ = [
    "Eigenstructure",
    "ModeSet",
    "hr_norm",
    "project",
    "semigroup_apply",
    "projection_operator_norm",
    "smoothing_bound",
    "calE",
]


@dataclass(frozen=True)
class Eigenstructure:
    """Diagonal generator: shift eta and eigenvalue family lambda_n < eta.

    Either a power law lambda_n = -c * n**rho (minus an optional extra
    downward shift, used by the generator-shift rewriting) or an explicit
    finite list of eigenvalues.
    """

    eta: float = 0.0
    c: float | None = None
    rho: float | None = None
    explicit: tuple[float, ...] | None = None
    lam_shift: float = 0.0

    def __post_init__(self):
        if (self.c is None) == (self.explicit is None):
            raise DomainError("exactly one of power-law (c, rho) or explicit eigenvalues required")
        if self.c is not None:
            if self.rho is None or self.c <= 0 or self.rho <= 0:
                raise DomainError("power law requires c > 0 and rho > 0")
            if -self.c - self.lam_shift >= self.eta:
                raise DomainError("lambda_1 must lie below eta")
        else:
            lams = np.asarray(self.explicit, dtype=float)
            if lams.size == 0:
                raise DomainError("explicit eigenvalue list is empty")
            if np.any(lams - self.lam_shift >= self.eta):
                raise DomainError("all eigenvalues must lie below eta")
            object.__setattr__(self, "explicit", tuple(float(v) for v in lams))

    @classmethod
    def power_law(cls, c: float, rho: float, eta: float = 0.0) -> "Eigenstructure":
        return cls(eta=eta, c=c, rho=rho)

    @classmethod
    def from_eigenvalues(cls, lams, eta: float = 0.0) -> "Eigenstructure":
        return cls(eta=eta, explicit=tuple(float(v) for v in lams))

    @classmethod
    def dirichlet_laplace(cls) -> "Eigenstructure":
        """lambda_n = -pi^2 n^2, the 1-D Dirichlet Laplacian spectrum."""
        return cls.power_law(math.pi**2, 2.0)

    @property
    def is_power_law(self) -> bool:
        return self.c is not None

    @property
    def n_max(self) -> float:
        """Largest representable mode index (inf for power laws)."""
        return math.inf if self.is_power_law else len(self.explicit)

    def lam(self, n):
        """Eigenvalue(s) at 1-based mode index n (scalar or array)."""
        n = np.asarray(n)
        if self.is_power_law:
            base = -self.c * np.power(n, self.rho, dtype=float)
        else:
            if np.any(n < 1) or np.any(n > len(self.explicit)):
                raise DomainError("mode index outside explicit eigenvalue list")
            base = np.asarray(self.explicit, dtype=float)[n - 1]
        out = base - self.lam_shift
        return float(out) if out.ndim == 0 else out

    def gap(self, n):
        """eta - lambda_n, the positive weights of the interpolation norms."""
        return self.eta - self.lam(n)

    def lam_array(self, dim: int) -> np.ndarray:
        return self.lam(np.arange(1, dim + 1))

    def gap_array(self, dim: int) -> np.ndarray:
        return self.eta - self.lam_array(dim)

    def shifted(self) -> "Eigenstructure":
        """Equivalent eigenstructure with eta folded into the eigenvalues (eta' = 0)."""
        if self.is_power_law:
            return Eigenstructure(eta=0.0, c=self.c, rho=self.rho,
                                  lam_shift=self.lam_shift + self.eta)
        return Eigenstructure(eta=0.0,
                              explicit=tuple(v - self.eta for v in self.explicit),
                              lam_shift=self.lam_shift)


@dataclass(frozen=True)
class ModeSet:
    """A set of 1-based mode indices: a prefix {1..N}, an explicit mask, or an
    infinite tail {N+1, N+2, ...} (tails appear only in analytic expressions)."""

    kind: str  # "prefix" | "mask" | "tail"
    n: int = 0
    bools: tuple[bool, ...] = field(default=())

    @classmethod
    def prefix(cls, n: int) -> "ModeSet":
        if n < 0:
            raise DomainError("prefix size must be nonnegative")
        return cls(kind="prefix", n=int(n))

    @classmethod
    def mask(cls, bools) -> "ModeSet":
        return cls(kind="mask", bools=tuple(bool(b) for b in bools))

    @classmethod
    def tail(cls, after: int) -> "ModeSet":
        """All modes with index > after."""
        if after < 0:
            raise DomainError("tail start must be nonnegative")
        return cls(kind="tail", n=int(after))

    @property
    def is_finite(self) -> bool:
        return self.kind != "tail"

    def indicator(self, dim: int) -> np.ndarray:
        """Boolean membership array for modes 1..dim."""
        idx = np.arange(1, dim + 1)
        if self.kind == "prefix":
            return idx <= self.n
        if self.kind == "tail":
            return idx > self.n
        out = np.zeros(dim, dtype=bool)
        m = min(dim, len(self.bools))
        out[:m] = self.bools[:m]
        return out

    def members(self) -> np.ndarray:
        """1-based indices of a finite set."""
        if self.kind == "prefix":
            return np.arange(1, self.n + 1)
        if self.kind == "mask":
            return np.flatnonzero(np.asarray(self.bools)) + 1
        raise DomainError("tail sets are not finite")

    def min_mode(self) -> int:
        """Smallest member (where the spectral gap of the set is attained)."""
        if self.kind == "tail":
            return self.n + 1
        mem = self.members()
        if mem.size == 0:
            raise DomainError("mode set is empty")
        return int(mem[0])

    def is_empty(self) -> bool:
        if self.kind == "tail":
            return False
        if self.kind == "prefix":
            return self.n == 0
        return not any(self.bools)


def hr_norm(x: np.ndarray, r: float, eig: Eigenstructure) -> float:
    """Interpolation-space norm ||x||_{H_r} = (sum_n (eta-lambda_n)^{2r} x_n^2)^{1/2}."""
    x = np.asarray(x, dtype=float)
    if x.size == 0:
        return 0.0
    if not np.all(np.isfinite(x)):
        raise DomainError("coefficients must be finite")
    if r == 0.0:
        return float(np.sqrt(np.sum(x * x)))
    gaps = eig.gap_array(x.size)
    # powers via exp(2r log gap) for numerical uniformity across r
    w = np.exp(2.0 * r * np.log(gaps))
    s = np.sum(w * x * x)
    if not np.isfinite(s):
        raise NumericsError("overflow in weighted norm; r or mode count too large")
    return float(np.sqrt(s))


def project(x: np.ndarray, modes: ModeSet) -> np.ndarray:
    """Spectral projection: keep coefficients with index in the set, zero the rest."""
    x = np.asarray(x, dtype=float)
    return np.where(modes.indicator(x.size), x, 0.0)


def semigroup_apply(x: np.ndarray, t: float, eig: Eigenstructure) -> np.ndarray:
    """Diagonal semigroup action e^{At}: coefficient n scales by e^{lambda_n t}."""
    if t < 0:
        raise DomainError("semigroup time must be nonnegative")
    x = np.asarray(x, dtype=float)
    if t == 0.0 or x.size == 0:
        return x.copy()
    return x * np.exp(eig.lam_array(x.size) * t)


def projection_operator_norm(excluded: ModeSet, r: float, eig: Eigenstructure) -> float:
    """||P_J||_{L(H, H_{-r})} = [inf_{n in J} (eta - lambda_n)]^{-r} for J the
    given mode set (typically the complement of a Galerkin prefix)."""
    if r < 0:
        raise DomainError("r must be nonnegative")
    if excluded.is_empty():
        raise DomainError("operator norm of an empty projection is undefined")
    if excluded.kind == "tail" or eig.is_power_law and excluded.kind == "prefix":
        gap_inf = eig.gap(excluded.min_mode())
    else:
        gap_inf = float(np.min(eig.gap(excluded.members())))
    return float(gap_inf ** (-r))


def smoothing_bound(r: float) -> float:
    """sup_t ||(-tA)^r e^{At}|| <= (r/e)^r for r in [0,1], with 0^0 = 1."""
    if not 0.0 <= r <= 1.0:
        raise DomainError("smoothing bound only valid for r in [0, 1]")
    if r == 0.0:
        return 1.0
    return (r / math.e) ** r


_CALE_MAX_TERMS = 100_000
_CALE_RTOL = 1e-16


def calE(r: float, x: float) -> float:
    """Square root of the exponential-type series sum_n x^{2n} Gamma(r)^n / Gamma(nr+1).

    Evaluated term-by-term in log space; truncates when the relative term size
    drops below 1e-16.
    """
    if not 0.0 < r <= 1.0:
        raise DomainError("calE requires r in (0, 1]")
    if x < 0:
        raise DomainError("calE requires x >= 0")
    if x == 0.0:
        return 1.0
    log_x2 = 2.0 * math.log(x)
    log_gamma_r = float(gammaln(r))
    total = 1.0  # n = 0 term
    for n in range(1, _CALE_MAX_TERMS + 1):
        log_term = n * (log_x2 + log_gamma_r) - float(gammaln(n * r + 1.0))
        term = math.exp(log_term)
        total += term
        if not math.isfinite(total):
            raise NumericsError("calE series overflow")
        if term < _CALE_RTOL * total:
            return math.sqrt(total)
    raise NumericsError(f"calE series did not converge within {_CALE_MAX_TERMS} terms")
