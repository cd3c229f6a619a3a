"""Least-action machinery for locating zeros of the truncated zeta series.

A unit harmonic oscillator x(t) = cos t is perturbed by the zeta modulus::

    X(t) = cos t * (1 + a * sin t),        a = M**2  (or M**(1/sigma))
    L    = X'(t)**2 / 2 - X(t)**2 / 2

Over one period [0, 2 pi] the action integrates to 3 pi a**2 / 8, i.e.
3 pi M**4 / 8, or 3 pi M**(2/sigma) / 8 for the sigma-dependent amplitude.
Zeros of the series are minima of the action; they are triangulated from
1-D minima along the rotated coordinates omega = tau - sigma and
eta = tau + sigma.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import zeta_core
from .errors import DomainError, NoMinimumError, PoleError, QuadratureError
from .zeta_core import ComplexPoint

ACTION_COEFF = 3.0 * math.pi / 8.0
ENERGY_COEFF = 5.0 / 16.0
RATIO = ENERGY_COEFF / ACTION_COEFF  # 5 / (6 pi)
MIRROR_DECIMALS = 12

OMEGA_ETA = "omega_eta_scan"
F_TAU = "f_tau_scan"
PARAMETRIC_SIGMA = "parametric_sigma"


@dataclass(frozen=True)
class ActionSample:
    sigma: float
    tau: float
    action: float
    log_action: float
    omega: float
    eta: float


@dataclass(frozen=True)
class EnergyDispersion:
    value: float


@dataclass(frozen=True)
class RootEstimate:
    sigma: float
    tau: float
    residual: float
    source: str
    grid: dict = field(default_factory=dict)


@dataclass
class OmegaEtaScan:
    samples: list
    omega_star: float
    eta_star: float
    coarse_omega: float
    coarse_eta: float
    grid: dict
    zoom_omega: tuple = ()
    zoom_eta: tuple = ()


@dataclass(frozen=True)
class SigmaScanResult:
    tau: float
    sigma_star: float
    sigma_refined: float
    residual: float
    is_root: bool
    step: float


@dataclass
class FScan:
    sigma: float
    taus: np.ndarray
    values: np.ndarray
    minima: list
    refined: list


@dataclass(frozen=True)
class LogLogFit:
    sigma: float
    slope: float
    intercept: float
    r_squared: float
    n: int


# --- oscillator ---------------------------------------------------------------

def _amplitude(p: ComplexPoint, general=False):
    m = zeta_core.modulus(p)
    if general:
        return 0.0 if m == 0.0 else m ** (1.0 / p.sigma)
    return m * m


def test_function(t, p: ComplexPoint, amplitude=None):
    """X(t) = cos t * (1 + a sin t) with a = M**2 unless ``amplitude`` is given."""
    a = _amplitude(p) if amplitude is None else amplitude
    return np.cos(t) * (1.0 + a * np.sin(t))


def test_function_dot(t, amplitude):
    """dX/dt in closed form: -sin t + a cos 2t."""
    return -np.sin(t) + amplitude * np.cos(2.0 * t)


def lagrangian(t, amplitude):
    x = np.cos(t) * (1.0 + amplitude * np.sin(t))
    v = test_function_dot(t, amplitude)
    return 0.5 * v * v - 0.5 * x * x


def simpson(f, a, b, panels):
    if panels % 2:
        raise DomainError("Simpson needs an even number of panels")
    t = np.linspace(a, b, panels + 1)
    y = f(t)
    h = (b - a) / panels
    return h / 3.0 * (y[0] + y[-1] + 4.0 * y[1:-1:2].sum() + 2.0 * y[2:-1:2].sum())


def action_numeric(p: ComplexPoint, t_i=0.0, t_f=2.0 * math.pi, quad_tol=1e-8,
                   panels=4096, general=False, amplitude=None):
    """Composite-Simpson integral of the Lagrangian, checked against a doubled panel count."""
    a = _amplitude(p, general) if amplitude is None else amplitude
    coarse = simpson(lambda t: lagrangian(t, a), t_i, t_f, panels)
    fine = simpson(lambda t: lagrangian(t, a), t_i, t_f, 2 * panels)
    err = abs(fine - coarse)
    if not err <= quad_tol:
        raise QuadratureError(f"action quadrature did not converge: |S(2n) - S(n)| = {err:g}",
                              estimate=fine, error=err)
    return fine


def modulus_power(m, sigma=0.5):
    """M**(2/sigma), vectorized; M = 0 gives 0 for every sigma > 0."""
    m = np.asarray(m, dtype=np.float64)
    sigma = np.asarray(sigma, dtype=np.float64)
    with np.errstate(divide="ignore"):
        out = np.where(m == 0.0, 0.0, m ** (2.0 / sigma))
    return out[()] if out.ndim == 0 else out


def action_from_modulus(m, sigma=0.5):
    """3 pi / 8 * M**(2/sigma)."""
    return ACTION_COEFF * modulus_power(m, sigma)


def action_analytic(p: ComplexPoint):
    """3 pi M**4 / 8."""
    m2 = zeta_core.modulus_squared(p, "ex")
    return ACTION_COEFF * m2 * m2


def action_general(p: ComplexPoint):
    """3 pi M**(2/sigma) / 8."""
    return float(action_from_modulus(zeta_core.modulus(p), p.sigma))


def energy_dispersion(p: ComplexPoint) -> EnergyDispersion:
    """E_a - 1/2 = 5/16 * M**(2/sigma)."""
    return EnergyDispersion(ENERGY_COEFF * float(modulus_power(zeta_core.modulus(p), p.sigma)))


def _check_open_unit(sigma):
    if not 0.0 < sigma < 1.0:
        raise DomainError(f"F needs 0 < sigma < 1, got {sigma}")


def _mirror_pair(sigma):
    # snap both abscissae to 12 decimals so F(s) and F(1 - s) see the same two moduli
    s = np.round(sigma, MIRROR_DECIMALS)
    return s, np.round(1.0 - s, MIRROR_DECIMALS)


def f_function(sigma, tau, n_max=100):
    """F(sigma, tau) = [E_a(1 - sigma) - 1/2] * A(sigma)."""
    _check_open_unit(sigma)
    s, mirror = (float(v) for v in _mirror_pair(sigma))
    e = energy_dispersion(ComplexPoint(mirror, tau, n_max)).value
    a = action_general(ComplexPoint(s, tau, n_max))
    return e * a


def f_grid(sigma, tau, n_max=100, **kw):
    """Vectorized F over broadcast (sigma, tau)."""
    sigma = np.asarray(sigma, dtype=np.float64)
    if np.any((sigma <= 0) | (sigma >= 1)):
        raise DomainError("F needs 0 < sigma < 1")
    sigma, mirror = _mirror_pair(sigma)
    m = zeta_core.modulus_grid(sigma, tau, n_max, **kw)
    m_mirror = zeta_core.modulus_grid(mirror, tau, n_max, **kw)
    energy = ENERGY_COEFF * modulus_power(m_mirror, mirror)
    return energy * action_from_modulus(m, sigma)


# --- minimum location -----------------------------------------------------------

def grid(lo, hi, step):
    """Inclusive uniform grid lo, lo + step, ..., hi (rounded to kill float drift)."""
    if step <= 0:
        raise DomainError("grid step must be positive")
    if hi < lo:
        raise DomainError(f"empty window ({lo}, {hi})")
    n = int(round((hi - lo) / step))
    return np.round(lo + step * np.arange(n + 1), 12)


def parabolic_vertex(x, y, i):
    """Three-point parabolic refinement of a discrete minimum at interior index ``i``."""
    y0, y1, y2 = y[i - 1], y[i], y[i + 1]
    den = y0 - 2.0 * y1 + y2
    if not (np.isfinite(den) and np.isfinite(y0) and np.isfinite(y2)) or den <= 0:
        return float(x[i])
    h = x[i + 1] - x[i]
    return float(x[i] + 0.5 * h * (y0 - y2) / den)


def locate_minimum(x, y):
    """Discrete argmin (ties to the smaller x) with parabolic refinement.

    Returns (node, refined). Raises NoMinimumError when the argmin sits on
    the window edge.
    """
    x = np.asarray(x)
    y = np.asarray(y)
    if x.size < 3:
        raise NoMinimumError("need at least three samples to bracket a minimum")
    i = int(np.argmin(y))
    if i == 0 or i == x.size - 1:
        raise NoMinimumError(f"minimum at window edge x = {x[i]:g}; widen the window")
    return float(x[i]), parabolic_vertex(x, y, i)


def local_minima(x, y):
    """Indices of interior samples strictly below the left and not above the right neighbour."""
    y = np.asarray(y)
    inner = (y[1:-1] < y[:-2]) & (y[1:-1] <= y[2:])
    return list(np.flatnonzero(inner) + 1)


def lower_envelope(keys, values, decimals=9):
    """Minimum of ``values`` over samples sharing the same (rounded) key."""
    k = np.round(np.asarray(keys, dtype=np.float64), decimals)
    uniq, inv = np.unique(k, return_inverse=True)
    env = np.full(uniq.shape, np.inf)
    np.minimum.at(env, inv, np.asarray(values, dtype=np.float64))
    return uniq, env


def _log_action(m, sigma=0.5):
    with np.errstate(divide="ignore"):
        return np.log(action_from_modulus(m, sigma))


# --- scans ------------------------------------------------------------------------

def action_grid(sigmas, taus, n_max=100, general=False, **kw):
    """Action on the outer grid sigmas x taus (rows: sigma)."""
    s = np.asarray(sigmas, dtype=np.float64)[:, None]
    t = np.asarray(taus, dtype=np.float64)[None, :]
    m = zeta_core.modulus_grid(s, t, n_max, **kw)
    return action_from_modulus(m, s if general else 0.5)


def _zoom_envelope(center, halfwidth, step, sigmas, n_max, rotated_sign, **kw):
    # rotated_sign = -1: x = omega, tau = x + sigma;  +1: x = eta, tau = x - sigma
    xs = grid(center - halfwidth, center + halfwidth, step)
    taus = xs[None, :] - rotated_sign * sigmas[:, None]
    m = zeta_core.modulus_grid(sigmas[:, None], taus, n_max, **kw)
    return xs, _log_action(m).min(axis=0)


def scan_omega_eta(sigma_window=(0.1, 0.9), sigma_step=0.1, tau_window=(13.0, 44.0),
                   tau_step=0.1, n_max=100, zoom_step=0.001, zoom_halfwidth=0.5,
                   **kw) -> OmegaEtaScan:
    """Scan log A over a (sigma, tau) grid and locate its minimum along omega and eta.

    Stage 1 projects every sample onto omega = tau - sigma and eta = tau + sigma,
    takes the lower envelope over sigma and finds its discrete argmin
    (parabolic refinement when no zoom follows). Stage 2, if ``zoom_step`` is
    set, re-scans +-``zoom_halfwidth`` around each argmin at ``zoom_step``,
    keeping the same sigma rows.
    """
    sigmas = grid(*sigma_window, sigma_step)
    taus = grid(*tau_window, tau_step)
    if np.any(sigmas <= 0):
        raise DomainError("sigma window must lie in sigma > 0")
    m = zeta_core.modulus_grid(sigmas[:, None], taus[None, :], n_max, **kw)
    action = action_from_modulus(m)
    log_a = _log_action(m)
    ss, tt = np.meshgrid(sigmas, taus, indexing="ij")
    omega = np.round(tt - ss, 12)
    eta = np.round(tt + ss, 12)
    samples = [ActionSample(float(a), float(b), float(c), float(d), float(e), float(f))
               for a, b, c, d, e, f in zip(ss.ravel(), tt.ravel(), action.ravel(),
                                           log_a.ravel(), omega.ravel(), eta.ravel())]

    om_keys, om_env = lower_envelope(omega.ravel(), log_a.ravel())
    et_keys, et_env = lower_envelope(eta.ravel(), log_a.ravel())
    om_node, om_ref = locate_minimum(om_keys, om_env)
    et_node, et_ref = locate_minimum(et_keys, et_env)

    info = dict(sigma_window=tuple(sigma_window), sigma_step=sigma_step,
                tau_window=tuple(tau_window), tau_step=tau_step, n_max=n_max,
                zoom_step=zoom_step, zoom_halfwidth=zoom_halfwidth)
    if not zoom_step:
        return OmegaEtaScan(samples, om_ref, et_ref, om_node, et_node, info)

    zx_o, zy_o = _zoom_envelope(om_node, zoom_halfwidth, zoom_step, sigmas, n_max, -1, **kw)
    zx_e, zy_e = _zoom_envelope(et_node, zoom_halfwidth, zoom_step, sigmas, n_max, +1, **kw)
    _, omega_star = locate_minimum(zx_o, zy_o)
    _, eta_star = locate_minimum(zx_e, zy_e)
    return OmegaEtaScan(samples, omega_star, eta_star, om_node, et_node, info,
                        (zx_o, zy_o), (zx_e, zy_e))


def solve_root(omega_star, eta_star, n_max=100, source=OMEGA_ETA, grid=None) -> RootEstimate:
    """Intersect tau - sigma = omega* with tau + sigma = eta*; residual is |zeta_ex| there."""
    sigma = (eta_star - omega_star) / 2.0
    tau = (eta_star + omega_star) / 2.0
    try:
        residual = zeta_core.modulus(ComplexPoint(sigma, tau, n_max))
    except (DomainError, PoleError):
        residual = float("nan")
    return RootEstimate(sigma, tau, residual, source, dict(grid or {}))


def find_root(tau_center, window=3.0, n_max=100, **scan_kw) -> tuple:
    """Run the omega/eta pipeline on tau_center +- window/2; returns (RootEstimate, scan)."""
    lo, hi = tau_center - window / 2.0, tau_center + window / 2.0
    scan = scan_omega_eta(tau_window=(lo, hi), n_max=n_max, **scan_kw)
    return solve_root(scan.omega_star, scan.eta_star, n_max, OMEGA_ETA, scan.grid), scan


def _argmin_or_edge(x, y):
    try:
        return locate_minimum(x, y)
    except NoMinimumError:
        i = int(np.argmin(y))
        return float(x[i]), float(x[i])


def parametric_sigma_scan(tau_list, sigma_window=(0.1, 0.9), sigma_step=0.1, n_max=100,
                          zoom_step=None, residual_threshold=0.1, **kw):
    """Per tau, the sigma that minimises the action over the window.

    With ``zoom_step`` the coarse argmin is re-scanned over +-one coarse step.
    ``is_root`` flags minima whose |zeta_ex| residual is below the threshold.
    A minimum on the window edge is kept as is (no refinement).
    """
    sigmas = grid(*sigma_window, sigma_step)
    out = []
    for tau in tau_list:
        a = action_grid(sigmas, [tau], n_max, **kw)[:, 0]
        node, refined = _argmin_or_edge(sigmas, a)
        step = sigma_step
        if zoom_step:
            lo = max(node - sigma_step, sigmas[0])
            hi = min(node + sigma_step, sigmas[-1])
            fine = grid(lo, hi, zoom_step)
            fa = action_grid(fine, [tau], n_max, **kw)[:, 0]
            node, refined = _argmin_or_edge(fine, fa)
            step = zoom_step
        residual = zeta_core.modulus(ComplexPoint(node, tau, n_max))
        out.append(SigmaScanResult(float(tau), node, refined, residual,
                                   residual < residual_threshold, step))
    return out


def f_tau_scan(sigma=0.5, tau_window=(13.135, 25.935), tau_step=0.1, n_max=100, **kw) -> FScan:
    """F along tau at fixed sigma; minima are grid nodes, ``refined`` their parabolic vertices on log F."""
    taus = grid(*tau_window, tau_step)
    values = f_grid(np.full(taus.shape, float(sigma)), taus, n_max, **kw)
    with np.errstate(divide="ignore"):
        log_f = np.log(values)
    idx = local_minima(taus, log_f)
    return FScan(float(sigma), taus, values, [float(taus[i]) for i in idx],
                 [parabolic_vertex(taus, log_f, i) for i in idx])


def loglog_fit(sigma, taus, n_max=100, **kw) -> LogLogFit:
    """Least-squares line log M = slope * log A + intercept at fixed sigma."""
    taus = np.asarray(taus, dtype=np.float64)
    m = zeta_core.modulus_grid(np.full(taus.shape, float(sigma)), taus, n_max, **kw)
    keep = m > 0
    x = np.log(action_from_modulus(m[keep], sigma))
    y = np.log(m[keep])
    slope, intercept = np.polyfit(x, y, 1)
    resid = y - (slope * x + intercept)
    ss_tot = float(((y - y.mean()) ** 2).sum())
    r2 = 1.0 - float((resid ** 2).sum()) / ss_tot if ss_tot > 0 else 1.0
    return LogLogFit(float(sigma), float(slope), float(intercept), r2, int(keep.sum()))
