"""Hyperbolic-cross index sets and the stabilized differentiation step.

The estimator keeps only coefficients inside a cross-shaped index set
before applying the coefficient-space derivative operator: for the
mixed derivative order (r,0) ("t" axis) the set is

    Gamma = {(k,j) : r <= k <= n,  k * j**gamma <= n},

with j = 0 always admitted, and the mirrored condition for (0,r). The
truncation level n and shape gamma are chosen from the smoothness class
and the noise level; the formulas below implement that selection together
with its admissibility hypotheses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .coeffs import CoeffGrid
from .legendre import DerivOperator

__all__ = [
    "CrossSet",
    "SmoothnessParams",
    "MethodParams",
    "build_cross",
    "cardinality_growth",
    "truncate",
    "choose_n",
    "choose_gamma",
    "class_norm",
]

_AXES = ("t", "tau")


@dataclass(frozen=True)
class CrossSet:
    """A hyperbolic-cross index set with its defining parameters."""

    n: int
    gamma: float
    r: int
    axis: str
    indices: tuple = field(repr=False, default=())

    @property
    def cardinality(self) -> int:
        return len(self.indices)

    def mask(self, K: int, J: int) -> np.ndarray:
        """Boolean (K+1, J+1) membership mask; errors if the set sticks out."""
        m = np.zeros((K + 1, J + 1), dtype=bool)
        for k, j in self.indices:
            if k > K or j > J:
                raise ValueError(
                    f"cross index ({k},{j}) outside grid of degrees ({K},{J})"
                )
            m[k, j] = True
        return m

    def save(self, path) -> None:
        """Write the index set as CSV with header k,j."""
        with open(str(path), "w") as fh:
            fh.write("k,j\n")
            for k, j in self.indices:
                fh.write(f"{k},{j}\n")


@dataclass(frozen=True)
class SmoothnessParams:
    """Weighted-summability class parameters plus the data accuracy delta."""

    s: float
    mu1: float
    mu2: float
    p: float
    delta: float

    def __post_init__(self):
        if not self.s >= 1.0:
            raise ValueError(f"summability index s={self.s} must be >= 1")
        if not (self.mu1 > 0.0 and self.mu2 > 0.0):
            raise ValueError("smoothness weights mu1, mu2 must be positive")
        if not (self.p >= 1.0 or math.isinf(self.p)):
            raise ValueError(f"norm index p={self.p} must lie in [1, inf]")
        if not 0.0 < self.delta < 1.0:
            raise ValueError(f"accuracy delta={self.delta} must lie in (0,1)")


@dataclass(frozen=True)
class MethodParams:
    """Resolved method parameters for one reconstruction."""

    n: int
    gamma: float
    r: int
    axis: str = "t"

    def __post_init__(self):
        if self.axis not in _AXES:
            raise ValueError(f"axis must be one of {_AXES}")
        if self.r < 1:
            raise ValueError("derivative order r must be >= 1")
        if not self.gamma >= 1.0:
            raise ValueError(f"cross shape gamma={self.gamma} must be >= 1")


def _limit(n: int, k: int, gamma: float) -> int:
    """Largest j with k * j**gamma <= n, evaluated with the same float test
    a brute-force scan would use so the two enumerations agree exactly."""
    j = int(math.floor((n / k) ** (1.0 / gamma) + 1e-12))
    while k * float(j + 1) ** gamma <= n:
        j += 1
    while j > 0 and k * float(j) ** gamma > n:
        j -= 1
    return j


def build_cross(n: int, gamma: float, r: int, axis: str = "t") -> CrossSet:
    """Enumerate the cross for level n, shape gamma, derivative order r.

    n < r yields the empty set (a valid degenerate case, not an error).
    """
    if r < 1:
        raise ValueError("derivative order r must be >= 1")
    if not gamma >= 1.0:
        raise ValueError(f"cross shape gamma={gamma} must be >= 1")
    if axis not in _AXES:
        raise ValueError(f"axis must be one of {_AXES}")
    indices = []
    for k in range(r, n + 1):
        for j in range(_limit(n, k, gamma) + 1):
            indices.append((k, j) if axis == "t" else (j, k))
    if axis == "tau":
        indices.sort()
    return CrossSet(n=n, gamma=gamma, r=r, axis=axis, indices=tuple(indices))


def cardinality_growth(gamma: float, r: int, n_list) -> list:
    """[(n, card)] along an increasing sequence of levels."""
    n_list = list(n_list)
    if any(b <= a for a, b in zip(n_list[:-1], n_list[1:])):
        raise ValueError("n_list must be strictly increasing")
    return [(n, build_cross(n, gamma, r).cardinality) for n in n_list]


def truncate(coeffs: CoeffGrid, params: MethodParams, deriv_op: DerivOperator) -> CoeffGrid:
    """Zero coefficients outside the cross, then apply the derivative operator.

    The result is the coefficient grid of the stabilized approximation to
    the (r,0) or (0,r) partial derivative, with provenance "derivative".
    """
    if deriv_op.order != params.r:
        raise ValueError(
            f"operator order {deriv_op.order} does not match requested r={params.r}"
        )
    cross = build_cross(params.n, params.gamma, params.r, params.axis)
    keep = cross.mask(coeffs.K, coeffs.J)  # raises if grid too small
    masked = np.where(keep, coeffs.data, 0.0)
    if params.axis == "t":
        if deriv_op.max_degree < coeffs.K:
            raise ValueError("derivative operator smaller than grid degree")
        mat = deriv_op.matrix[: coeffs.K + 1, : coeffs.K + 1]
        out = mat @ masked
    else:
        if deriv_op.max_degree < coeffs.J:
            raise ValueError("derivative operator smaller than grid degree")
        mat = deriv_op.matrix[: coeffs.J + 1, : coeffs.J + 1]
        out = masked @ mat.T
    return CoeffGrid(data=out, provenance="derivative")


def choose_n(sp: SmoothnessParams, r: int, c: float = 0.9) -> int:
    """Truncation level n(delta) = c * delta**(-1/(mu1 - 1/p + 1/s)), rounded.

    Requires mu1 > 2r - 1/s + 1/2 (the regime where the reconstruction
    converges); the calibration constant c defaults to 0.9.
    """
    if r < 1:
        raise ValueError("derivative order r must be >= 1")
    if c <= 0:
        raise ValueError("calibration constant c must be positive")
    if not sp.mu1 > 2 * r - 1.0 / sp.s + 0.5:
        raise ValueError(
            f"smoothness mu1={sp.mu1} too small for order r={r}: "
            f"need mu1 > {2 * r - 1.0 / sp.s + 0.5:g}"
        )
    inv_p = 0.0 if math.isinf(sp.p) else 1.0 / sp.p
    expo = 1.0 / (sp.mu1 - inv_p + 1.0 / sp.s)
    return max(r, int(round(c * sp.delta ** (-expo))))


def choose_gamma(sp: SmoothnessParams, r: int, metric: str = "L2") -> float:
    """Midpoint of the admissible cross-shape interval (1, gamma_max).

    gamma_max depends on the error metric and on whether the summability
    index s reaches 2; an empty interval (gamma_max <= 1) raises.
    """
    if r < 1:
        raise ValueError("derivative order r must be >= 1")
    if metric == "L2":
        den = sp.mu1 - 2 * r + 1.0 / sp.s - 0.5
        if not den > 0:
            raise ValueError(
                f"smoothness mu1={sp.mu1} too small for order r={r} in L2: "
                f"need mu1 > {2 * r - 1.0 / sp.s + 0.5:g}"
            )
        if sp.s >= 2.0:
            gamma_max = (sp.mu2 + 1.0 / sp.s - 0.5) / den
        else:
            gamma_max = sp.mu2 / den
    elif metric == "C":
        den = sp.mu1 - 2 * r + 1.0 / sp.s - 1.5
        if not den > 0:
            raise ValueError(
                f"smoothness mu1={sp.mu1} too small for order r={r} in C: "
                f"need mu1 > {2 * r - 1.0 / sp.s + 1.5:g}"
            )
        gamma_max = (sp.mu2 + 1.0 / sp.s - 1.5) / den
    else:
        raise ValueError(f"metric must be 'L2' or 'C', got {metric!r}")
    if not gamma_max > 1.0:
        raise ValueError(
            f"admissible gamma interval is empty (gamma_max={gamma_max:g} <= 1)"
        )
    return 0.5 * (1.0 + gamma_max)


def class_norm(coeffs, s: float, mu1: float, mu2: float) -> float:
    """Weighted coefficient norm (sum_k,j max(1,k)^(s mu1) max(1,j)^(s mu2)
    |c_kj|^s)^(1/s) used to measure smoothness-class membership."""
    if not s >= 1.0:
        raise ValueError(f"summability index s={s} must be >= 1")
    data = np.asarray(getattr(coeffs, "data", coeffs), dtype=float)
    kbar = np.maximum(1.0, np.arange(data.shape[0], dtype=float))
    jbar = np.maximum(1.0, np.arange(data.shape[1], dtype=float))
    weighted = (
        kbar[:, None] ** (s * mu1) * jbar[None, :] ** (s * mu2) * np.abs(data) ** s
    )
    return float(np.sum(weighted) ** (1.0 / s))
