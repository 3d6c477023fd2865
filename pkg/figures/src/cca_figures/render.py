"""Three fixed layouts over the persisted columns, written atomically."""

from __future__ import annotations

import os
import tempfile
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .io import FigureInputError, load_manifest, read_table

FIGURES = ("fig2", "fig3", "fig4")

_FIGSIZE = (6.4, 4.2)
_DPI = 150
_FORMATS = (".png", ".pdf", ".svg")


@dataclass(frozen=True)
class FigureSpec:
    """What to render, from where, to where.

    log_pe applies to fig2 only and toggles the population axis between
    logarithmic (default, the shape the decay curves are usually shown in)
    and linear.
    """

    figure: str
    input_dir: Path
    output: Path
    log_pe: bool = True

    def __post_init__(self):
        if self.figure not in FIGURES:
            raise ValueError(f"figure must be one of {FIGURES}, got {self.figure!r}")
        object.__setattr__(self, "input_dir", Path(self.input_dir))
        object.__setattr__(self, "output", Path(self.output))
        if self.output.suffix.lower() not in _FORMATS:
            raise ValueError(
                f"output must end in one of {_FORMATS}, got {self.output.name!r}"
            )


def render(spec: FigureSpec) -> Path:
    """Validate the dataset, build the figure, save it atomically."""
    manifest = load_manifest(spec.input_dir, spec.figure)
    if spec.figure == "fig2":
        fig = build_fig2(spec.input_dir, manifest, log_pe=spec.log_pe)
    elif spec.figure == "fig3":
        fig = build_fig3(spec.input_dir, manifest)
    else:
        fig = build_fig4(spec.input_dir, manifest)
    try:
        _atomic_save(fig, spec.output)
    finally:
        plt.close(fig)
    return spec.output


def render_figure(figure: str, input_dir, output, log_pe: bool = True) -> Path:
    """Convenience wrapper: render_figure("fig4", "results", "fig4.pdf")."""
    return render(FigureSpec(figure, input_dir, output, log_pe=log_pe))


def build_fig2(input_dir, manifest: dict, log_pe: bool = True):
    """Decay curves per alpha on a log population axis, dashed reference."""
    header, table = read_table(Path(input_dir) / "fig2_pe.csv")
    if header[0] != "t" or header[-1] != "pe_markov":
        raise FigureInputError("fig2_pe.csv is not a t,...,pe_markov table")
    alphas = manifest.get("alphas")
    if alphas is not None and len(header) != len(alphas) + 2:
        raise FigureInputError(
            f"fig2_pe.csv has {len(header) - 2} curve columns, manifest lists "
            f"{len(alphas)} alphas"
        )
    t = table[:, 0]
    fig, ax = plt.subplots(figsize=_FIGSIZE, dpi=_DPI)
    for j, name in enumerate(header[1:-1], start=1):
        ax.plot(t, table[:, j], lw=1.4,
                label=rf"$\alpha = {name.removeprefix('pe_alpha_')}$")
    ax.plot(t, table[:, -1], "k--", lw=1.2, label=r"$e^{-g^2 t}$")
    if log_pe:
        ax.set_yscale("log")
        floor = max(table[:, 1:].min(), 1e-4)
        ax.set_ylim(0.8 * floor, 1.4)
    else:
        ax.set_ylim(0.0, 1.02)
    ax.set_xlim(t[0], t[-1])
    ax.set_xlabel("$tJ$")
    ax.set_ylabel("$p_e$")
    ax.legend(frameon=False, fontsize=9)
    fig.tight_layout()
    return fig


def build_fig3(input_dir, manifest: dict):
    """Two panels: coupling-weighted mode density, then p_e over (t, omega_a)."""
    input_dir = Path(input_dir)
    dens_header, dens = read_table(input_dir / "fig3_spectral_density.csv")
    heat_header, heat = read_table(input_dir / "fig3_heatmap.csv")
    if dens_header[:2] != ["omega", "G"]:
        raise FigureInputError("fig3_spectral_density.csv is not an omega,G table")
    if heat_header[0] != "omega_a":
        raise FigureInputError("fig3_heatmap.csv must start with an omega_a column")

    times = np.array([float(c) for c in heat_header[1:]])
    omega_a = heat[:, 0]
    fig, (ax_g, ax_h) = plt.subplots(
        2, 1, figsize=(6.4, 7.2), dpi=_DPI, height_ratios=(1.0, 1.6)
    )

    ax_g.plot(dens[:, 0], dens[:, 1], lw=1.4, label="disordered")
    if "G_homogeneous" in dens_header:
        j = dens_header.index("G_homogeneous")
        ax_g.plot(dens[:, 0], dens[:, j], ls=":", lw=1.1, color="0.45",
                  label="homogeneous")
        ax_g.legend(frameon=False, fontsize=9)
    ax_g.set_xlabel(r"$\omega / J$")
    ax_g.set_ylabel(r"$G(\omega)$")

    im = ax_h.imshow(
        heat[:, 1:],
        aspect="auto",
        origin="lower",
        extent=(times[0], times[-1], omega_a[0], omega_a[-1]),
        cmap="viridis",
        vmin=0.0,
        vmax=1.0,
    )
    for key in ("band_edge_min", "band_edge_max"):
        edge = manifest.get(key)
        if edge is not None:
            ax_h.axhline(float(edge), color="w", ls="--", lw=0.9)
    ax_h.set_xlabel("$tJ$")
    ax_h.set_ylabel(r"$\omega_a / J$")
    fig.colorbar(im, ax=ax_h, label="$p_e$")
    fig.tight_layout()
    return fig


_FIG4_COLUMNS = [
    "alpha",
    "n_mean",
    "n_sem",
    "r_mean",
    "r_sem",
    "n_bath_plus_mode",
    "bath_plus_mode_valid",
    "n_lorentzian",
    "lorentzian_valid",
]


def build_fig4(input_dir, manifest: dict):
    """Mean N vs alpha with error bars, model symbol series, r(alpha) inset."""
    header, table = read_table(Path(input_dir) / "fig4_n_vs_alpha.csv")
    if header != _FIG4_COLUMNS:
        raise FigureInputError(
            "fig4_n_vs_alpha.csv columns do not match the summary layout"
        )
    alpha = table[:, 0]
    fig, ax = plt.subplots(figsize=_FIGSIZE, dpi=_DPI)
    ax.errorbar(alpha, table[:, 1], yerr=table[:, 2], fmt="o-", ms=5, lw=1.3,
                capsize=3, color="tab:blue", label="chain simulation", zorder=3)
    for col, ok_col, marker, color, label in (
        (5, 6, "s", "tab:orange", "damped-mode model"),
        (7, 8, "^", "tab:green", "lorentzian model"),
    ):
        ok = table[:, ok_col] == 1.0
        ax.plot(alpha[ok], table[ok, col], marker, ms=6, mfc="none",
                color=color, label=label)
    ax.set_xlabel(r"$\alpha$")
    ax.set_ylabel(r"$\mathcal{N}$")
    ax.legend(frameon=False, fontsize=9, loc="upper right")

    inset = ax.inset_axes((0.14, 0.12, 0.34, 0.36))
    inset.errorbar(alpha, table[:, 3], yerr=table[:, 4], fmt="o-", ms=3,
                   lw=1.0, capsize=2, color="0.25")
    inset.set_xlabel(r"$\alpha$", fontsize=8)
    inset.set_ylabel("$r$", fontsize=8)
    inset.tick_params(labelsize=7)
    fig.tight_layout()
    return fig


def _atomic_save(fig, output: Path) -> None:
    """Write next to the target and move into place: no partial outputs."""
    suffix = output.suffix.lower()
    metadata = None
    if suffix == ".pdf":
        metadata = {"CreationDate": None}  # timestamps break reproducibility
    elif suffix == ".svg":
        metadata = {"Date": None}
    output.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=output.parent, suffix=suffix)
    os.close(fd)
    # mkstemp files are 0600; give the artifact normal umask permissions
    umask = os.umask(0)
    os.umask(umask)
    os.chmod(tmp, 0o666 & ~umask)
    try:
        with matplotlib.rc_context({"svg.hashsalt": "cca-figures"}):
            fig.savefig(tmp, format=suffix[1:], dpi=_DPI, metadata=metadata)
    except BaseException:
        os.unlink(tmp)
        raise
    os.replace(tmp, output)
