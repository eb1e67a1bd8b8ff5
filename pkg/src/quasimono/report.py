"""Report rendering: delimited check results plus diagnostic figures.

Figures are written with the Agg backend so the report path works headless.
"""

import csv
from pathlib import Path

from .restrictions import good_set, kernel_dim
from .verification import mod_z_monomials


def write_checks_csv(report, path):
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["check", "status", "detail"])
        for check in report.checks:
            writer.writerow([check.name, "pass" if check.passed else "fail",
                             check.detail])
    return path


def _pyplot():
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    return plt


def staircase_figure(ctx, gs, path):
    """The staircase of the ideal modulo z; its area is the colength a+2."""
    plt = _pyplot()
    monomials = sorted(mod_z_monomials(ctx, gs))
    fig, ax = plt.subplots(figsize=(5.5, 5))
    cells = []
    j = 0
    while True:
        row = [i for i, jg in monomials if jg <= j]
        m = min(row) if row else None
        if not m:
            break
        cells.extend((i, j) for i in range(m))
        j += 1
    for i, j in cells:
        ax.add_patch(plt.Rectangle((i, j), 1, 1, facecolor="#9ecae1",
                                   edgecolor="white"))
    xs = [i for i, _ in monomials]
    ys = [j for _, j in monomials]
    ax.scatter([x + 0.5 for x in xs], [y + 0.5 for y in ys], color="#d62728",
               zorder=3, label="ideal generators")
    ax.set_xlim(0, max(xs) + 2)
    ax.set_ylim(0, max(ys) + 2)
    ax.set_xlabel("x exponent")
    ax.set_ylabel("y exponent")
    ax.set_title(f"n={ctx.n}: staircase modulo z, colength {len(cells)} = a+2")
    ax.legend(loc="upper right")
    ax.set_aspect("equal")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def kernel_dims_figure(ctx, path, r_max=None):
    """Good-kernel dimension per member: zero below s0, the window profile after."""
    plt = _pyplot()
    if r_max is None:
        r_max = ctx.s0 + ctx.n - 1
    rs, dims = [], []
    for r in range(1, r_max + 1):
        if (r % ctx.a) > 2 * (r // ctx.a) or r >= ctx.la:
            continue
        rs.append(r)
        dims.append(kernel_dim(ctx, r, good_set(ctx, r).elements))
    fig, ax = plt.subplots(figsize=(7, 3.5))
    ax.step(rs, dims, where="mid", color="#1f77b4")
    ax.axvline(ctx.s0, color="#d62728", linestyle="--",
               label=f"s0 = {ctx.s0}")
    ax.set_xlabel("r")
    ax.set_ylabel("dim of good kernel")
    ax.set_yticks(range(max(dims) + 1))
    ax.set_title(f"n={ctx.n}: good-kernel dimensions")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def sigma_orders_figure(ctx, gs, path):
    """Leading order per generator index; even n shows the doubled slot."""
    plt = _pyplot()
    ks = [rec.k for rec in gs.generators]
    orders = [rec.sigma_order for rec in gs.generators]
    fig, ax = plt.subplots(figsize=(6, 3.5))
    ax.plot(ks, orders, "o-", color="#2ca02c")
    ax.axhline(ctx.s0, color="gray", linestyle=":", label=f"s0 = {ctx.s0}")
    ax.set_xlabel("generator index")
    ax.set_ylabel("leading order")
    ax.set_xticks(ks)
    ax.set_title(f"n={ctx.n}: leading-order layout")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def write_report_files(ctx, gs, report, out_dir):
    """Write report.csv and the three figures; returns the created paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    created = [write_checks_csv(report, out / f"report_n{ctx.n}.csv")]
    created.append(staircase_figure(ctx, gs, out / f"staircase_n{ctx.n}.png"))
    created.append(kernel_dims_figure(ctx, out / f"good_kernel_dims_n{ctx.n}.png"))
    created.append(sigma_orders_figure(ctx, gs, out / f"sigma_orders_n{ctx.n}.png"))
    return created
