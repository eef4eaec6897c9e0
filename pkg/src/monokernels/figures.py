"""Figure rendering for CLI reports.

Every function takes data already computed elsewhere (kernel table rows or
verification suite results), renders with the Agg backend, writes PNG files
into a directory, and returns the written paths.  Nothing here computes new
numbers, so the figures cannot disagree with the delimited output they
accompany.
"""

import math
import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

FIGURE_DPI = 150


def _save(fig, out_dir, name):
    path = os.path.join(out_dir, name)
    fig.savefig(path, dpi=FIGURE_DPI, bbox_inches="tight")
    plt.close(fig)
    return path


def save_kernel_figure(rows, out_dir):
    """Scalar and vector magnitudes over the evaluated rows of a kernel table."""
    os.makedirs(out_dir, exist_ok=True)
    ok_rows = [r for r in rows if r["status"] == "ok"]
    if not ok_rows:
        return []
    index = [r["index"] for r in ok_rows]
    scalar = [abs(complex(*r["value"]["scalar"])) for r in ok_rows]
    vector = [
        math.hypot(*[abs(complex(*pair)) for pair in r["value"]["vector"]])
        for r in ok_rows
    ]
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.plot(index, scalar, "o-", label="|scalar part|")
    ax.plot(index, vector, "s-", label="|vector part|")
    ax.set_xlabel("row index")
    ax.set_ylabel("magnitude")
    ax.set_yscale("log")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    ax.set_title(f"kernel values ({ok_rows[0]['kind']})")
    return [_save(fig, out_dir, "kernel-profile.png")]


def _reproducing_figure(result, out_dir):
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    for kind, data in sorted(result.plot_data.items()):
        ax.plot(data[:, 0], data[:, 1], "o-", label=f"kind {kind}")
    ax.set_xlabel("grid points per axis")
    ax.set_ylabel("reproducing residual")
    ax.set_yscale("log")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    ax.set_title("reproducing residual vs refinement")
    return _save(fig, out_dir, "reproducing-residuals.png")


def _decay_figure(result, out_dir):
    paths = []
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    for m in (2, 3):
        samples = result.plot_data.get(f"sinc-m{m}")
        envelope = result.plot_data.get(f"sinc-envelope-m{m}")
        if samples is None or envelope is None:
            continue
        ax.plot(samples[0], samples[1], alpha=0.35, label=f"|sinc| m={m}")
        ax.plot(envelope[0], envelope[1], "o-", label=f"envelope m={m}")
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("|x_vec|")
    ax.set_ylabel("magnitude")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    ax.set_title("ball sinc spatial decay")
    paths.append(_save(fig, out_dir, "sinc-decay.png"))
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    for m in (2, 3):
        data = result.plot_data.get(f"bergman-offdiag-m{m}")
        if data is None:
            continue
        ax.plot(data[0], data[1], "o-", label=f"m={m}")
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("|w_vec - x_vec|")
    ax.set_ylabel("|B(w, x)|")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    ax.set_title("Bergman kernel off-diagonal decay")
    paths.append(_save(fig, out_dir, "bergman-offdiagonal.png"))
    return paths


def _diagonal_figure(result, out_dir):
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    for key, data in sorted(result.plot_data.items()):
        ax.plot(data[0], data[1], "o-", label=key)
    ax.set_xlabel("x0")
    ax.set_ylabel("B(x, x) (a - |x0|)^(m+1)")
    ax.grid(True, alpha=0.3)
    ax.legend()
    ax.set_title("scaled Bergman diagonal")
    return _save(fig, out_dir, "bergman-diagonal.png")


def _growth_figure(result, out_dir):
    data = result.plot_data["growth"]
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.plot(data[0], data[1], "o-")
    ax.set_yscale("log")
    ax.set_xlabel("x0")
    ax.set_ylabel("|pw_extend(x0)|")
    ax.grid(True, which="both", alpha=0.3)
    ax.set_title("band-limited extension growth")
    return _save(fig, out_dir, "pw-growth.png")


_SUITE_RENDERERS = {
    "reproducing": lambda result, out_dir: [_reproducing_figure(result, out_dir)],
    "decay-rates": _decay_figure,
    "bergman-diagonal": lambda result, out_dir: [_diagonal_figure(result, out_dir)],
    "pw-growth": lambda result, out_dir: [_growth_figure(result, out_dir)],
}


def save_suite_figures(results, out_dir):
    """Render figures for every suite result that carries plot data."""
    os.makedirs(out_dir, exist_ok=True)
    paths = []
    for result in results:
        renderer = _SUITE_RENDERERS.get(result.suite)
        if renderer is not None and result.plot_data:
            paths.extend(renderer(result, out_dir))
    return paths
