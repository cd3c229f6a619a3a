"""Command-line interface: every table and figure as a CSV-emitting subcommand.

Exit codes: 0 success, 2 input error, 3 numerical guard (pole / overflow /
quadrature failure).
"""
from __future__ import annotations

import csv
import math
import os
import sys

import click
import numpy as np

from . import (action_variational as av, chebyshev, config as cfgmod, euler_product,
               prime_core, prime_estimates, random_table, zeta_core)
from .errors import DomainError, NoMinimumError, OverflowGuard, PoleError, QuadratureError

EXIT_INPUT = 2
EXIT_NUMERIC = 3


def fmt(v):
    if isinstance(v, (bool, np.bool_)):
        return str(bool(v)).lower()
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return format(float(v), ".17g")
    return str(v)


def write_csv(path, header, rows):
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for r in rows:
            w.writerow([fmt(v) for v in r])
    return path


class _Group(click.Group):
    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except (PoleError, OverflowGuard, QuadratureError) as exc:
            click.echo(f"error: {exc}", err=True)
            ctx.exit(EXIT_NUMERIC)
        except (DomainError, NoMinimumError) as exc:
            click.echo(f"error: {exc}", err=True)
            ctx.exit(EXIT_INPUT)


class Ctx:
    def __init__(self, cfg, plot):
        self.cfg = cfg
        self.plot = plot

    @property
    def mode(self):
        return prime_core.Mode(self.cfg.mode)

    def out(self, given, default_name):
        return given or os.path.join(self.cfg.output_dir, default_name)

    def emit(self, path, header, rows, x=None, ys=(), logy=False, groupby=None):
        write_csv(path, header, rows)
        click.echo(f"wrote {path}", err=True)
        if self.plot and x:
            from .plotting import save_svg

            click.echo(f"wrote {save_svg(path, x, ys, logy, groupby)}", err=True)


pass_ctx = click.make_pass_decorator(Ctx)
out_option = click.option("--out", type=click.Path(dir_okay=False), default=None,
                          help="CSV path (default: <output_dir>/<name>.csv).")


@click.group(cls=_Group)
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False),
              help="Flat key=value configuration file.")
@click.option("--n-max", type=int, help="Truncation bound of the eta series (default 100).")
@click.option("--sigma-step", type=float, help="Coarse sigma step (default 0.1).")
@click.option("--tau-step", type=float, help="Coarse tau step (default 0.1).")
@click.option("--zoom-step", type=float, help="Zoom step (default 0.001).")
@click.option("--quad-tol", type=float, help="Quadrature tolerance (default 1e-8).")
@click.option("--mode", type=click.Choice(["literal", "optimized"]), help="Discriminator mode.")
@click.option("--bound-variant", type=click.Choice([prime_estimates.VARIANT_PRODUCT,
                                                    prime_estimates.VARIANT_RADICAL]))
@click.option("--seed", type=int, help="Seed for the random table.")
@click.option("--output-dir", type=click.Path(file_okay=False),
              help=f"Directory for CSV output (env {cfgmod.ENV_OUTPUT_DIR}).")
@click.option("--threads", type=int, help="Worker threads for grid evaluations.")
@click.option("--plot", is_flag=True, help="Also write an SVG next to each CSV.")
@click.pass_context
def cli(ctx, config_path, plot, **flags):
    """Prime functions, zeta approximants and least-action zero location."""
    try:
        cfg = cfgmod.resolve(flags, config_path)
    except DomainError as exc:
        raise click.UsageError(str(exc)) from None
    ctx.obj = Ctx(cfg, plot)


def _kw(c: Ctx):
    return {"workers": c.cfg.threads}


# --- primes ---------------------------------------------------------------------

@cli.group()
def primes():
    """Discriminator, generator and counter."""


@primes.command("check")
@click.argument("values", nargs=-1, required=True, type=float)
@pass_ctx
def primes_check(c, values):
    """Print u, Lambda(u), Psi(u) for each value."""
    click.echo("u,lambda,psi")
    for u in values:
        u = int(u) if u == int(u) else u
        lam = prime_core.discriminate(u, c.mode).value
        click.echo(f"{fmt(u)},{lam},{fmt(u * lam)}")


@primes.command("list")
@click.option("--from", "lo", type=int, default=0, show_default=True)
@click.option("--to", "hi", type=int, default=101, show_default=True)
@click.option("--primes-only", is_flag=True, help="Emit only rows with Lambda = 1.")
@out_option
@pass_ctx
def primes_list(c, lo, hi, primes_only, out):
    """Lambda, Psi and its discrete derivatives over an integer range (Figs. 1-3)."""
    if lo < 0 or hi < lo:
        raise DomainError("need 0 <= from <= to")
    lam = prime_core.discriminate_range(lo, hi + 2, c.mode).astype(np.int64)
    psi = np.arange(lo, hi + 3) * lam
    rows = []
    for i, u in enumerate(range(lo, hi + 1)):
        if primes_only and not lam[i]:
            continue
        d1 = psi[i + 1] - psi[i]
        d2 = psi[i + 2] - 2 * psi[i + 1] + psi[i]
        rows.append((u, lam[i], psi[i], d1, d2))
    c.emit(c.out(out, "primes.csv"), ["u", "lambda", "psi", "psi_d1", "psi_d2"], rows,
           x="u", ys=("lambda", "psi", "psi_d1"))


@primes.command("count")
@click.option("--from", "lo", type=int, default=2, show_default=True)
@click.option("--to", "hi", type=int, required=True)
@pass_ctx
def primes_count(c, lo, hi):
    """Print C(to, from)."""
    click.echo(prime_core.count(hi, lo, c.mode).count)


# --- estimates --------------------------------------------------------------------

@cli.command()
@click.option("--from", "lo", type=int, default=2, show_default=True)
@click.option("--to", "hi", type=int, default=100, show_default=True)
@click.option("--step", type=int, default=1, show_default=True)
@click.option("--bound", type=click.Choice([prime_estimates.SCHOENFELD_PI, prime_estimates.TRUDGIAN]),
              help="Check a sharp bound instead of tabulating the estimates.")
@out_option
@pass_ctx
def estimates(c, lo, hi, step, bound, out):
    """C(x,2), Li(x), x/ln x (Fig. 4) or |C - Li| against a sharp bound (Figs. 5-6)."""
    if bound:
        reps = prime_estimates.check_pi_bound(lo, hi, step, bound, c.cfg.bound_variant,
                                              mode=c.mode)
        rows = [(r.x, r.lhs, r.rhs, r.holds, r.bound_name, r.variant) for r in reps]
        c.emit(c.out(out, f"bound_{bound}.csv"),
               ["x", "lhs", "rhs", "holds", "bound", "variant"], rows, x="x", ys=("lhs", "rhs"))
        failures = sum(not r.holds for r in reps)
        click.echo(f"{bound}: {len(reps) - failures}/{len(reps)} samples satisfy the bound")
        return
    if lo < 2 or hi < lo or step < 1:
        raise DomainError("need 2 <= from <= to and step >= 1")
    lam = prime_core.discriminate_range(2, hi, c.mode)
    cum = np.concatenate([[0, 0], np.cumsum(lam)])  # cum[x] = C(x, 2)
    rows = []
    li = prime_estimates.li_gauss(lo)
    prev = lo
    for x in range(lo, hi + 1, step):
        li += prime_estimates.adaptive_simpson(lambda t: 1.0 / math.log(t), prev, x, 1e-8)
        prev = x
        li_a = prime_estimates.li_asymptotic(x)
        rows.append((x, int(cum[x]), li, li_a, int(cum[x]) / li_a))
    c.emit(c.out(out, "estimates.csv"), ["x", "count", "li", "li_asymptotic", "pnt_ratio"],
           rows, x="x", ys=("count", "li", "li_asymptotic"))


# --- euler ------------------------------------------------------------------------

@cli.command()
@click.option("--sigma-from", type=float, default=1.1, show_default=True)
@click.option("--sigma-to", type=float, default=6.0, show_default=True)
@click.option("--step", type=float, default=0.1, show_default=True)
@click.option("--H", "H", type=int, default=100, show_default=True)
@click.option("--terms", type=int, default=0,
              help="Also tabulate the Dirichlet sum with this many terms (0: skip).")
@out_option
@pass_ctx
def euler(c, sigma_from, sigma_to, step, H, terms, out):
    """Truncated Euler product vs the table-free approximant (Fig. 7)."""
    rows = []
    for s in av.grid(sigma_from, sigma_to, step):
        s = float(s)
        approx = euler_product.xi_eulap(s, H, c.mode)
        exact = euler_product.xi_product_primes(s, H)
        dsum = euler_product.xi_sum(s, terms) if terms else float("nan")
        rows.append((s, exact, approx, (exact - approx) / exact, dsum))
    c.emit(c.out(out, "euler.csv"),
           ["sigma", "xi_product", "xi_eulap", "rel_err", "xi_sum"], rows,
           x="sigma", ys=("xi_product", "xi_eulap"))


# --- zeta -------------------------------------------------------------------------

@cli.group()
def zeta():
    """Truncated eta-series zeta and its prime/composite split."""


_which = click.Choice(list(zeta_core.KINDS))


@zeta.command("eval")
@click.option("--sigma", type=float, required=True)
@click.option("--tau", type=float, required=True)
@click.option("--n-max", type=int, default=None)
@click.option("--which", type=_which, default="ex", show_default=True)
@out_option
@pass_ctx
def zeta_eval(c, sigma, tau, n_max, which, out):
    """One evaluation: sigma, tau, n_max, re, im, modulus_sq."""
    n_max = n_max or c.cfg.n_max
    z = complex(zeta_core.evaluate(sigma, tau, n_max, which, mode=c.mode))
    row = (sigma, tau, n_max, z.real, z.imag, z.real ** 2 + z.imag ** 2)
    header = ["sigma", "tau", "n_max", "re", "im", "modulus_sq"]
    click.echo(",".join(header))
    click.echo(",".join(fmt(v) for v in row))
    if out:
        write_csv(out, header, [row])


@zeta.command("scan")
@click.option("--sigma", type=float, default=0.5, show_default=True)
@click.option("--tau-from", type=float, default=-30.0, show_default=True)
@click.option("--tau-to", type=float, default=30.0, show_default=True)
@click.option("--tau-step", type=float, default=None)
@click.option("--n-max", type=int, default=None)
@click.option("--which", type=_which, default="ex", show_default=True)
@click.option("--value", "quantity", type=click.Choice(["modulus_sq", "reciprocal"]),
              default="modulus_sq", show_default=True)
@out_option
@pass_ctx
def zeta_scan(c, sigma, tau_from, tau_to, tau_step, n_max, which, quantity, out):
    """Scan along tau at fixed sigma (Figs. 8-15)."""
    n_max = n_max or c.cfg.n_max
    taus = av.grid(tau_from, tau_to, tau_step or c.cfg.tau_step)
    z = zeta_core.evaluate(sigma, taus, n_max, which, mode=c.mode, **_kw(c))
    m2 = z.real ** 2 + z.imag ** 2
    if quantity == "reciprocal":
        if np.any(m2 <= zeta_core.RECIPROCAL_FLOOR):
            raise OverflowGuard("modulus squared below the reciprocal floor in scan")
        value = 1.0 / m2
    else:
        value = m2
    header = ["sigma", "tau", "omega", "eta", "value", "re", "im", "modulus_sq"]
    cols = [np.full(taus.shape, sigma), taus, taus - sigma, taus + sigma, value, z.real, z.imag, m2]
    ys = ("re", "im") if quantity == "modulus_sq" else ("value",)
    if which != "ex":
        # reference columns for overlaying the full series
        ref = zeta_core.evaluate(sigma, taus, n_max, "ex", mode=c.mode, **_kw(c))
        header += ["re_ex", "im_ex", "modulus_sq_ex"]
        cols += [ref.real, ref.imag, ref.real ** 2 + ref.imag ** 2]
        ys += ("re_ex", "im_ex") if quantity == "modulus_sq" else ()
    c.emit(c.out(out, f"zeta_{which}_scan.csv"), header, zip(*cols), x="tau", ys=ys)


# --- action -----------------------------------------------------------------------

@cli.group()
def action():
    """Least-action zero location."""


def _action_rows(samples):
    return [(s.sigma, s.tau, s.omega, s.eta, s.log_action, s.action) for s in samples]


_ACTION_HEADER = ["sigma", "tau", "omega", "eta", "value", "action"]


@action.command("scan")
@click.option("--sigma-from", type=float, default=0.1, show_default=True)
@click.option("--sigma-to", type=float, default=0.9, show_default=True)
@click.option("--tau-from", type=float, default=13.0, show_default=True)
@click.option("--tau-to", type=float, default=44.0, show_default=True)
@click.option("--n-max", type=int, default=None)
@out_option
@pass_ctx
def action_scan(c, sigma_from, sigma_to, tau_from, tau_to, n_max, out):
    """Coarse log-action grid keyed by omega and eta (Figs. 17, A3)."""
    n_max = n_max or c.cfg.n_max
    scan = av.scan_omega_eta((sigma_from, sigma_to), c.cfg.sigma_step, (tau_from, tau_to),
                             c.cfg.tau_step, n_max, zoom_step=None, **_kw(c))
    c.emit(c.out(out, "action_scan.csv"), _ACTION_HEADER, _action_rows(scan.samples),
           x="omega", ys=("value",), groupby="sigma")
    click.echo(f"coarse minima: omega={scan.coarse_omega:g} eta={scan.coarse_eta:g}")


@action.command("roots")
@click.option("--tau-center", type=float, required=True)
@click.option("--window", type=float, default=3.0, show_default=True)
@click.option("--sigma-from", type=float, default=0.1, show_default=True)
@click.option("--sigma-to", type=float, default=0.9, show_default=True)
@click.option("--n-max", type=int, default=None)
@click.option("--no-zoom", is_flag=True, help="Stop after the coarse stage.")
@out_option
@pass_ctx
def action_roots(c, tau_center, window, sigma_from, sigma_to, n_max, no_zoom, out):
    """Omega/eta minima and the recovered root (Figs. 18, A3)."""
    n_max = n_max or c.cfg.n_max
    root, scan = av.find_root(tau_center, window, n_max, sigma_window=(sigma_from, sigma_to),
                              sigma_step=c.cfg.sigma_step, tau_step=c.cfg.tau_step,
                              zoom_step=None if no_zoom else c.cfg.zoom_step, **_kw(c))
    header = ["sigma", "tau", "omega", "eta", "residual", "coarse_omega", "coarse_eta", "n_max"]
    row = (root.sigma, root.tau, scan.omega_star, scan.eta_star, root.residual,
           scan.coarse_omega, scan.coarse_eta, n_max)
    path = c.out(out, "action_roots.csv")
    write_csv(path, header, [row])
    click.echo(",".join(header))
    click.echo(",".join(fmt(v) for v in row))
    if scan.zoom_omega:
        zoom_rows = [("omega", x, y) for x, y in zip(*scan.zoom_omega)]
        zoom_rows += [("eta", x, y) for x, y in zip(*scan.zoom_eta)]
        zpath = path.rsplit(".", 1)[0] + "_zoom.csv"
        c.emit(zpath, ["axis", "coordinate", "value"], zoom_rows,
               x="coordinate", ys=("value",), groupby="axis")


@action.command("parametric")
@click.option("--tau", "taus", type=float, multiple=True, required=True)
@click.option("--sigma-from", type=float, default=0.1, show_default=True)
@click.option("--sigma-to", type=float, default=0.9, show_default=True)
@click.option("--n-max", type=int, default=None)
@click.option("--zoom", "zoom", type=float, default=None, help="Refine with this sigma step.")
@out_option
@pass_ctx
def action_parametric(c, taus, sigma_from, sigma_to, n_max, zoom, out):
    """Action versus sigma with tau as parameter (Fig. 19)."""
    n_max = n_max or c.cfg.n_max
    sigmas = av.grid(sigma_from, sigma_to, zoom or c.cfg.sigma_step)
    a = av.action_grid(sigmas, taus, n_max, **_kw(c))
    rows = [(s, t, t - s, t + s, a[i, j]) for j, t in enumerate(taus) for i, s in enumerate(sigmas)]
    path = c.out(out, "action_parametric.csv")
    c.emit(path, ["sigma", "tau", "omega", "eta", "value"], rows,
           x="sigma", ys=("value",), logy=True, groupby="tau")
    res = av.parametric_sigma_scan(taus, (sigma_from, sigma_to), c.cfg.sigma_step, n_max,
                                   zoom_step=zoom, **_kw(c))
    mpath = path.rsplit(".", 1)[0] + "_minima.csv"
    write_csv(mpath, ["tau", "sigma_star", "sigma_refined", "residual", "is_root", "step"],
              [(r.tau, r.sigma_star, r.sigma_refined, r.residual, r.is_root, r.step) for r in res])
    for r in res:
        click.echo(f"tau={r.tau:g} sigma*={r.sigma_star:g} residual={r.residual:.3g}"
                   f"{'' if r.is_root else ' (not a root)'}")


@action.command("loglog")
@click.option("--sigma", "sigmas", type=float, multiple=True,
              default=(0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9), show_default=True)
@click.option("--tau-from", type=float, default=10.0, show_default=True)
@click.option("--tau-to", type=float, default=40.0, show_default=True)
@click.option("--n-max", type=int, default=None)
@out_option
@pass_ctx
def action_loglog(c, sigmas, tau_from, tau_to, n_max, out):
    """M, A, E_a - 1/2 and their ratios (Figs. 16, 20-22); prints the fitted slopes."""
    n_max = n_max or c.cfg.n_max
    taus = av.grid(tau_from, tau_to, c.cfg.tau_step)
    rows = []
    for s in sigmas:
        m = zeta_core.modulus_grid(np.full(taus.shape, s), taus, n_max, **_kw(c))
        a = av.action_from_modulus(m, s)
        e = av.ENERGY_COEFF * av.modulus_power(m, s)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = e / a
        rows += [(s, t, t - s, t + s, mm, aa, ee, rr) for t, mm, aa, ee, rr in zip(taus, m, a, e, ratio)]
        fit = av.loglog_fit(s, taus, n_max, **_kw(c))
        click.echo(f"sigma={s:g} slope={fit.slope:.15g} (expected {s / 2:g}) r2={fit.r_squared:.15g}")
    c.emit(c.out(out, "action_loglog.csv"),
           ["sigma", "tau", "omega", "eta", "modulus", "action", "energy", "ratio"], rows,
           x="action", ys=("modulus",), groupby="sigma")


# --- F function -----------------------------------------------------------------------

@cli.command("f-scan")
@click.option("--axis", type=click.Choice(["tau", "sigma"]), default="tau", show_default=True)
@click.option("--sigma", type=float, default=0.5, show_default=True)
@click.option("--tau", type=float, default=14.134725142, show_default=True,
              help="Fixed tau for --axis sigma.")
@click.option("--tau-from", type=float, default=13.135, show_default=True)
@click.option("--tau-to", type=float, default=25.935, show_default=True)
@click.option("--n-max", type=int, default=None)
@out_option
@pass_ctx
def f_scan(c, axis, sigma, tau, tau_from, tau_to, n_max, out):
    """F(sigma, tau) against tau (Fig. 23) or against sigma with its mirror (Fig. 24)."""
    n_max = n_max or c.cfg.n_max
    if axis == "tau":
        res = av.f_tau_scan(sigma, (tau_from, tau_to), c.cfg.tau_step, n_max, **_kw(c))
        mirror = av.f_grid(np.full(res.taus.shape, 1.0 - sigma), res.taus, n_max, **_kw(c))
        rows = [(sigma, t, t - sigma, t + sigma, v, mv) for t, v, mv in zip(res.taus, res.values, mirror)]
        c.emit(c.out(out, "f_scan_tau.csv"), ["sigma", "tau", "omega", "eta", "value", "value_mirror"],
               rows, x="tau", ys=("value",), logy=True)
        for node, ref in zip(res.minima, res.refined):
            click.echo(f"minimum tau={fmt(node)} (parabolic {ref:.6f})")
        return
    sigmas = av.grid(c.cfg.sigma_step, 1.0 - c.cfg.sigma_step, c.cfg.sigma_step / 10.0)
    vals = av.f_grid(sigmas, tau, n_max, **_kw(c))
    mirror = av.f_grid(1.0 - sigmas, tau, n_max, **_kw(c))
    rows = [(s, tau, tau - s, tau + s, v, mv) for s, v, mv in zip(sigmas, vals, mirror)]
    c.emit(c.out(out, "f_scan_sigma.csv"), ["sigma", "tau", "omega", "eta", "value", "value_mirror"],
           rows, x="sigma", ys=("value", "value_mirror"), logy=True)


# --- chebyshev ----------------------------------------------------------------------------

@cli.group("chebyshev")
def cheb():
    """Chebyshev psi and its sharp bound."""


@cheb.command("eval")
@click.option("--from", "lo", type=float, default=2.0, show_default=True)
@click.option("--to", "hi", type=float, default=200.0, show_default=True)
@click.option("--step", type=float, default=1.0, show_default=True)
@out_option
@pass_ctx
def cheb_eval(c, lo, hi, step, out):
    """Exact and table-free psi with relative error (Figs. 25, 26, A2)."""
    if lo < 2 or hi < lo or step <= 0:
        raise DomainError("need 2 <= from <= to and step > 0")
    rows = []
    for x in av.grid(lo, hi, step):
        x = float(x)
        ex = chebyshev.psi_exact(x).value
        ap = chebyshev.psi_approx(x, c.mode).value
        rows.append((x, ex, ap, abs(ap - ex) / ex))
    c.emit(c.out(out, "chebyshev.csv"), ["x", "psi_exact", "psi_approx", "rel_err"], rows,
           x="x", ys=("psi_exact", "psi_approx"))


@cheb.command("bound")
@click.option("--from", "lo", type=float, default=2.0, show_default=True)
@click.option("--to", "hi", type=float, default=400.0, show_default=True)
@click.option("--step", type=float, default=1.0, show_default=True)
@click.option("--variant", type=click.Choice(["approx", "exact"]), default="approx", show_default=True)
@out_option
@pass_ctx
def cheb_bound(c, lo, hi, step, variant, out):
    """|psi(x) - x| against sqrt(x) ln(x)^2 / (8 pi) (Fig. 27)."""
    reps = chebyshev.check_psi_bound(lo, hi, step, variant)
    rows = [(r.x, r.lhs, r.rhs, r.holds) for r in reps]
    c.emit(c.out(out, f"chebyshev_bound_{variant}.csv"), ["x", "lhs", "rhs", "holds"], rows,
           x="x", ys=("lhs", "rhs"))
    bad = [r.x for r in reps if not r.holds]
    click.echo(f"bound fails at {len(bad)} samples" + (f"; largest {fmt(max(bad))}" if bad else ""))


# --- random table -----------------------------------------------------------------------

@cli.command()
@click.option("--sets", type=int, default=4, show_default=True)
@out_option
@pass_ctx
def table(c, sets, out):
    """Random odd integers classified by Psi (Table 1)."""
    rows = []
    for grp in random_table.generate_table(c.cfg.seed, sets, mode=c.mode):
        rows += [(r.set_index, r.n, r.K, r.u_n, r.psi_u) for r in grp]
    c.emit(c.out(out, "table.csv"), ["set", "n", "K", "u_n", "psi_u"], rows)


def main(argv=None):
    return cli.main(args=argv, prog_name="primezeta")


if __name__ == "__main__":
    sys.exit(main())
