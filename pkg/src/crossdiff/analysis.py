"""Test-function corpus, error metrics, and noise-convergence rate studies.

The corpus functions are separable, F(t,tau) = g(t) q(tau) / C, with
factors that are either piecewise polynomials (a kink of limited
smoothness at t = 0) or trigonometric; both carry exact derivative
closed forms so reconstruction errors can be measured without a
reference discretization. Synthetic class members are built directly
from prescribed coefficient decay.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np
from numpy.polynomial import polynomial as npoly

from .coeffs import CoeffGrid, NoiseSpec, _composite_rule, add_noise, exact_coeffs
from .legendre import iterate_derivative, mueller_first_derivative, phi_matrix, synthesize
from .truncation import (
    MethodParams,
    SmoothnessParams,
    choose_gamma,
    choose_n,
    class_norm,
    truncate,
)

__all__ = [
    "PiecewisePoly",
    "CosFactor",
    "TestFunction",
    "example1_F",
    "example2_F",
    "make_class_function",
    "corpus",
    "l2_error",
    "c_error",
    "RateStudyResult",
    "rate_study",
    "theoretical_slope",
]


@dataclass(frozen=True)
class PiecewisePoly:
    """Piecewise polynomial factor on [-1,1]; pieces meet at breakpoints.

    pieces[i] holds ascending-power coefficients valid on the i-th
    subinterval; the right endpoint of the last piece is inclusive.
    """

    breakpoints: tuple
    pieces: tuple

    def eval(self, t):
        t = np.asarray(t, dtype=float)
        edges = (-np.inf, *self.breakpoints, np.inf)
        out = np.zeros_like(t)
        for lo, hi, cs in zip(edges[:-1], edges[1:], self.pieces):
            sel = (t >= lo) & (t < hi)
            out = np.where(sel, npoly.polyval(t, np.asarray(cs, dtype=float)), out)
        return out

    def deriv(self, r: int) -> "PiecewisePoly":
        if r == 0:
            return self
        pieces = tuple(
            tuple(npoly.polyder(np.asarray(cs, dtype=float), r)) for cs in self.pieces
        )
        return PiecewisePoly(self.breakpoints, pieces)


@dataclass(frozen=True)
class CosFactor:
    """amplitude * cos(freq * t + phase); differentiation shifts the phase."""

    amplitude: float
    freq: float
    phase: float = 0.0

    breakpoints = ()

    def eval(self, t):
        return self.amplitude * np.cos(self.freq * np.asarray(t, dtype=float) + self.phase)

    def deriv(self, r: int) -> "CosFactor":
        return CosFactor(
            self.amplitude * self.freq ** r, self.freq, self.phase + 0.5 * r * math.pi
        )


def _synth_eval(data: np.ndarray, t, tau):
    """Evaluate a coefficient grid at points, exploiting tensor structure
    when t, tau arrive as a (m,1) column against a (1,n) row."""
    t = np.asarray(t, dtype=float)
    tau = np.asarray(tau, dtype=float)
    if t.ndim == 2 and tau.ndim == 2 and t.shape[1] == 1 and tau.shape[0] == 1:
        return synthesize(data, t.ravel(), tau.ravel())
    tt, tt2 = np.broadcast_arrays(t, tau)
    pt = phi_matrix(data.shape[0] - 1, tt.ravel())
    ptau = phi_matrix(data.shape[1] - 1, tt2.ravel())
    vals = np.einsum("kp,kj,jp->p", pt, data, ptau)
    return vals.reshape(tt.shape)


@dataclass(eq=False)
class TestFunction:
    """A bivariate test function with exact derivatives.

    Either separable (t_factor, tau_factor, divided by C) or given
    directly by a coefficient grid (coeff_data). class_info records the
    smoothness class the function is designed to sit in; its delta field
    is a nominal placeholder.
    """

    id: str
    C: float = 1.0
    t_factor: object | None = None
    tau_factor: object | None = None
    coeff_data: np.ndarray | None = None
    class_info: SmoothnessParams | None = None

    @property
    def breakpoints_t(self) -> tuple:
        return getattr(self.t_factor, "breakpoints", ()) if self.t_factor else ()

    @property
    def breakpoints_tau(self) -> tuple:
        return getattr(self.tau_factor, "breakpoints", ()) if self.tau_factor else ()

    def eval(self, t, tau):
        if self.coeff_data is not None:
            return _synth_eval(self.coeff_data, t, tau)
        return self.t_factor.eval(t) * self.tau_factor.eval(tau) / self.C

    def exact_deriv(self, r: int, axis: str = "t"):
        """Callable (t,tau) -> d^r F / d axis^r, exact."""
        if axis not in ("t", "tau"):
            raise ValueError(f"axis must be 't' or 'tau', got {axis!r}")
        if r < 0:
            raise ValueError("derivative order r must be >= 0")
        if self.coeff_data is not None:
            data = self.coeff_data
            if r > 0:
                deg = (data.shape[0] if axis == "t" else data.shape[1]) - 1
                op = iterate_derivative(mueller_first_derivative(deg), r)
                data = op.matrix @ data if axis == "t" else data @ op.matrix.T
            return lambda t, tau: _synth_eval(data, t, tau)
        gt = self.t_factor.deriv(r) if axis == "t" else self.t_factor
        qt = self.tau_factor.deriv(r) if axis == "tau" else self.tau_factor
        scale = self.C
        return lambda t, tau: gt.eval(t) * qt.eval(tau) / scale


def _kink_factor() -> PiecewisePoly:
    """The degree-8 piecewise factor with a C^6 kink at t = 0."""
    left = (0.0, 0.0, -1 / 8, 0.0, 1 / 12, -1 / 25, 0.0, 1 / 38, -1 / 108)
    right = (0.0, 0.0, -1 / 8, 0.0, 1 / 12, -1 / 25, 0.0, 1 / 102, -1 / 198)
    return PiecewisePoly((0.0,), (left, right))


def example1_F() -> TestFunction:
    """First corpus function: product of two kink factors, scaled by 947."""
    f = _kink_factor()
    return TestFunction(
        id="example1",
        C=947.0,
        t_factor=f,
        tau_factor=f,
        class_info=SmoothnessParams(s=2.0, mu1=5.6, mu2=5.6, p=2.0, delta=1e-7),
    )


def example2_F() -> TestFunction:
    """Second corpus function: kink factor times 2 cos(pi tau), scaled by 26318."""
    return TestFunction(
        id="example2",
        C=26318.0,
        t_factor=_kink_factor(),
        tau_factor=CosFactor(2.0, math.pi),
        class_info=SmoothnessParams(s=2.0, mu1=5.4, mu2=5.4, p=2.0, delta=1e-7),
    )


def make_class_function(
    s: float = 2.0,
    mu1: float = 5.6,
    mu2: float = 5.6,
    eps: float = 0.01,
    max_degree: int = 128,
) -> TestFunction:
    """Synthetic class member with coefficients max(1,k)^(-mu1-1/s-eps) *
    max(1,j)^(-mu2-1/s-eps), normalized to class norm exactly 1."""
    kbar = np.maximum(1.0, np.arange(max_degree + 1, dtype=float))
    data = np.outer(kbar ** (-mu1 - 1.0 / s - eps), kbar ** (-mu2 - 1.0 / s - eps))
    data /= class_norm(data, s, mu1, mu2)
    return TestFunction(
        id=f"class-s{s:g}-mu{mu1:g}x{mu2:g}",
        coeff_data=data,
        class_info=SmoothnessParams(s=s, mu1=mu1, mu2=mu2, p=2.0, delta=1e-7),
    )


def corpus() -> list:
    """Default test functions used across examples and rate studies."""
    return [example1_F(), example2_F(), make_class_function()]


def _effective_degrees(data: np.ndarray) -> tuple[int, int]:
    rows, cols = np.nonzero(data)
    if rows.size == 0:
        return 0, 0
    return int(rows.max()), int(cols.max())


def l2_error(
    approx: CoeffGrid,
    exact,
    quad_nodes: int,
    breakpoints_t=(),
    breakpoints_tau=(),
) -> float:
    """L2([-1,1]^2) distance between a synthesized grid and a reference.

    quad_nodes (per smooth piece per axis) must exceed the highest active
    degree of approx by >= 32 so the quadrature resolves the integrand;
    breakpoints split the rule where the reference is only piecewise smooth.
    """
    kmax, jmax = _effective_degrees(approx.data)
    if quad_nodes < max(kmax, jmax) + 32:
        raise ValueError(
            f"quad_nodes={quad_nodes} too small for active degrees ({kmax},{jmax})"
        )
    t, wt = _composite_rule(quad_nodes, breakpoints_t)
    tau, wtau = _composite_rule(quad_nodes, breakpoints_tau)
    diff = synthesize(approx, t, tau) - np.asarray(
        exact(t[:, None], tau[None, :]), dtype=float
    )
    val = wt @ (diff * diff) @ wtau
    return math.sqrt(max(val, 0.0))


def c_error(approx: CoeffGrid, exact, grid_points: int = 513) -> float:
    """Max-norm distance sampled on a uniform inclusive grid (>= 257 per axis)."""
    if grid_points < 257:
        raise ValueError(f"grid_points={grid_points} must be >= 257")
    t = np.linspace(-1.0, 1.0, grid_points)
    diff = synthesize(approx, t, t) - np.asarray(
        exact(t[:, None], t[None, :]), dtype=float
    )
    return float(np.abs(diff).max())


def theoretical_slope(sp: SmoothnessParams, r: int, metric: str = "L2", axis: str = "t") -> float:
    """Predicted exponent of the error's power-law decay in delta."""
    mu_a, mu_b = (sp.mu1, sp.mu2) if axis == "t" else (sp.mu2, sp.mu1)
    inv_p = 0.0 if math.isinf(sp.p) else 1.0 / sp.p
    den = mu_a - inv_p + 1.0 / sp.s
    if metric == "L2":
        num = mu_a - 2 * r + 1.0 / sp.s - 0.5
    elif metric == "C":
        num = mu_a - 2 * r + 1.0 / sp.s - 1.5
    else:
        raise ValueError(f"metric must be 'L2' or 'C', got {metric!r}")
    return num / den


@dataclass(eq=False)
class RateStudyResult:
    """Outcome of a noise-convergence study over a list of noise levels.

    rows holds one (delta, n, gamma, error_l2, error_c, seed) record per
    trial; errors holds the per-delta medians in the study metric.
    """

    metric: str
    delta_list: list
    errors: list
    fitted_slope: float
    theoretical_slope: float
    rows: list = field(default_factory=list)

    def save(self, path) -> None:
        """CSV of all trial rows, then a summary row whose first field is
        'slope' carrying (fitted, theoretical) in the two error columns."""
        with open(str(path), "w") as fh:
            fh.write("delta,n,gamma,error_l2,error_c,seed\n")
            for delta, n, gamma, el2, ec, seed in self.rows:
                fh.write(
                    f"{delta:.17g},{n},{gamma:.17g},{el2:.17g},{ec:.17g},{seed}\n"
                )
            fh.write(
                f"slope,,,{self.fitted_slope:.17g},{self.theoretical_slope:.17g},\n"
            )


def rate_study(
    fn: TestFunction,
    sp: SmoothnessParams,
    r: int,
    metric: str,
    delta_list,
    seeds: int,
    *,
    c: float = 0.9,
    gamma: float | None = None,
    axis: str = "t",
    noise_mode: str = "rescaled",
    base_seed: int = 1000,
    grid_degree: int | None = None,
) -> RateStudyResult:
    """Measure error versus noise level and fit the decay exponent.

    For each delta the truncation level comes from choose_n and the cross
    shape from choose_gamma (unless gamma overrides it); `seeds`
    independent perturbations are reconstructed and the per-delta median
    error in the requested metric enters a log-log least-squares fit.
    Requires delta_list to span at least three decades.
    """
    delta_list = [float(d) for d in delta_list]
    if len(delta_list) < 2 or max(delta_list) / min(delta_list) < 0.999e3:
        raise ValueError("delta_list must span at least three decades")
    if seeds < 1:
        raise ValueError("seeds must be >= 1")
    if metric not in ("L2", "C"):
        raise ValueError(f"metric must be 'L2' or 'C', got {metric!r}")

    if fn.coeff_data is not None:
        grid = CoeffGrid(data=np.array(fn.coeff_data), provenance="exact")
    else:
        deg = 64 if grid_degree is None else grid_degree
        grid = exact_coeffs(fn, deg, deg, deg + 40)
    deg_k, deg_j = grid.K, grid.J
    op_deg = deg_k if axis == "t" else deg_j
    op = iterate_derivative(mueller_first_derivative(op_deg), r)
    exact_d = fn.exact_deriv(r, axis)
    quad = max(deg_k, deg_j) + 40

    rows = []
    medians = []
    for i, delta in enumerate(delta_list):
        spd = replace(sp, delta=delta)
        n = choose_n(spd, r, c)
        g = choose_gamma(spd, r, metric) if gamma is None else float(gamma)
        limit = deg_k if axis == "t" else deg_j
        if n > limit:
            raise ValueError(
                f"truncation level n={n} exceeds grid degree {limit}; "
                "increase grid_degree"
            )
        params = MethodParams(n=n, gamma=g, r=r, axis=axis)
        vals = []
        for sd in range(seeds):
            seed = base_seed + 997 * i + sd
            noisy = add_noise(grid, NoiseSpec(delta, sp.p, noise_mode, seed))
            approx = truncate(noisy, params, op)
            el2 = l2_error(approx, exact_d, quad, fn.breakpoints_t, fn.breakpoints_tau)
            ec = c_error(approx, exact_d)
            rows.append((delta, n, g, el2, ec, seed))
            vals.append(el2 if metric == "L2" else ec)
        medians.append(float(np.median(vals)))

    slope = float(np.polyfit(np.log(delta_list), np.log(medians), 1)[0])
    return RateStudyResult(
        metric=metric,
        delta_list=delta_list,
        errors=medians,
        fitted_slope=slope,
        theoretical_slope=theoretical_slope(sp, r, metric, axis),
        rows=rows,
    )
