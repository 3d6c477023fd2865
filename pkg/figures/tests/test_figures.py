"""Rendering behavior: validation gates, layouts, determinism, atomicity."""

import json

import pytest

cca_figures = pytest.importorskip("cca_figures")

from matplotlib import pyplot as plt  # noqa: E402

from cca_figures import (  # noqa: E402
    FigureInputError,
    FigureSpec,
    load_manifest,
    render,
    render_figure,
)
from cca_figures.cli import main  # noqa: E402
from cca_figures.render import build_fig2, build_fig3, build_fig4  # noqa: E402


def _snapshot(dirpath):
    return {p.name: p.read_bytes() for p in sorted(dirpath.iterdir()) if p.is_file()}


def test_spec_validation(tmp_path):
    with pytest.raises(ValueError, match="figure"):
        FigureSpec("fig1", tmp_path, tmp_path / "x.png")
    with pytest.raises(ValueError, match="output"):
        FigureSpec("fig2", tmp_path, tmp_path / "x.txt")


def test_empty_directory_fails_without_writing(tmp_path):
    out = tmp_path / "out" / "fig2.png"
    with pytest.raises(FigureInputError, match="no manifest"):
        render(FigureSpec("fig2", tmp_path, out))
    assert not out.exists()
    assert not out.parent.exists()


def test_manifest_schema_version_gate(fig2_dataset):
    manifest_path = fig2_dataset / "fig2_manifest.json"
    data = json.loads(manifest_path.read_text())
    data["schema_version"] = 99
    manifest_path.write_text(json.dumps(data))
    with pytest.raises(FigureInputError, match="schema_version"):
        load_manifest(fig2_dataset, "fig2")


def test_manifest_figure_mismatch(fig2_dataset):
    # a manifest that reached the wrong filename must not pass as fig4
    source = (fig2_dataset / "fig2_manifest.json").read_text()
    (fig2_dataset / "fig4_manifest.json").write_text(source)
    with pytest.raises(FigureInputError, match="describes"):
        load_manifest(fig2_dataset, "fig4")


def test_tampered_data_file_rejected(fig2_dataset):
    csv = fig2_dataset / "fig2_pe.csv"
    data = csv.read_bytes()
    csv.write_bytes(data[:-2] + b"7\n")
    out = fig2_dataset / "fig2.png"
    with pytest.raises(FigureInputError, match="digest"):
        render(FigureSpec("fig2", fig2_dataset, out))
    assert not out.exists()


def test_missing_listed_file_rejected(fig3_dataset):
    (fig3_dataset / "fig3_heatmap.csv").unlink()
    with pytest.raises(FigureInputError, match="missing"):
        load_manifest(fig3_dataset, "fig3")


def test_fig2_layout(fig2_dataset):
    manifest = load_manifest(fig2_dataset, "fig2")
    fig = build_fig2(fig2_dataset, manifest)
    ax = fig.axes[0]
    # one curve per alpha plus the dashed reference
    assert len(ax.lines) == len(manifest["alphas"]) + 1
    assert ax.lines[-1].get_linestyle() == "--"
    assert ax.get_yscale() == "log"
    plt.close(fig)
    fig = build_fig2(fig2_dataset, manifest, log_pe=False)
    assert fig.axes[0].get_yscale() == "linear"
    plt.close(fig)


def test_fig2_column_count_must_match_manifest(fig2_dataset):
    manifest = load_manifest(fig2_dataset, "fig2")
    manifest["alphas"] = [0.0, 1.0, 3.0]
    with pytest.raises(FigureInputError, match="alphas"):
        build_fig2(fig2_dataset, manifest)


def test_fig3_layout(fig3_dataset):
    manifest = load_manifest(fig3_dataset, "fig3")
    fig = build_fig3(fig3_dataset, manifest)
    # density panel, heat-map panel, colorbar
    assert len(fig.axes) == 3
    dens_ax, heat_ax = fig.axes[0], fig.axes[1]
    assert len(dens_ax.lines) == 2
    assert len(heat_ax.images) == 1
    extent = heat_ax.images[0].get_extent()
    assert extent[0] == 0.0 and extent[1] == 40.0
    assert extent[2] == -3.0 and extent[3] == 3.0
    # both band edges drawn as horizontal dashed lines
    edge_lines = [ln for ln in heat_ax.lines if ln.get_linestyle() == "--"]
    assert len(edge_lines) == 2
    plt.close(fig)


def test_fig4_layout(fig4_dataset):
    manifest = load_manifest(fig4_dataset, "fig4")
    fig = build_fig4(fig4_dataset, manifest)
    ax = fig.axes[0]
    assert len(ax.containers) == 1  # the error-barred simulation series
    sim = ax.containers[0]
    assert len(sim[0].get_xdata()) == 7
    # model symbol series: bath+mode at all 7 points, lorentzian only where
    # its validity flag is set (r = 0.3 + 0.9 alpha < 2 on the first 4 rows)
    symbol_lines = [ln for ln in ax.lines if ln.get_marker() in ("s", "^")]
    assert sorted(len(ln.get_xdata()) for ln in symbol_lines) == [4, 7]
    assert len(ax.child_axes) == 1  # the r(alpha) inset
    plt.close(fig)


def test_render_is_deterministic_and_read_only(fig4_dataset, tmp_path):
    # render into a subdirectory: the dataset fixture lives directly in
    # tmp_path, and outputs written there would show up in the snapshot
    out_dir = tmp_path / "render"
    out_dir.mkdir()
    before = _snapshot(fig4_dataset)
    first = render_figure("fig4", fig4_dataset, out_dir / "a.png")
    second = render_figure("fig4", fig4_dataset, out_dir / "b.png")
    assert first.read_bytes() == second.read_bytes()
    assert _snapshot(fig4_dataset) == before


@pytest.mark.parametrize("suffix", [".pdf", ".svg"])
def test_vector_outputs_deterministic(fig2_dataset, tmp_path, suffix):
    a = render_figure("fig2", fig2_dataset, tmp_path / f"a{suffix}")
    b = render_figure("fig2", fig2_dataset, tmp_path / f"b{suffix}")
    assert a.read_bytes() == b.read_bytes()


def test_cli_success_and_failure(fig2_dataset, tmp_path, capsys):
    out = tmp_path / "fig2.png"
    rc = main(["fig2", "--in", str(fig2_dataset), "--out", str(out)])
    assert rc == 0
    assert out.exists()
    assert "wrote" in capsys.readouterr().out

    rc = main(["fig3", "--in", str(tmp_path), "--out", str(tmp_path / "x.png")])
    assert rc == 1
    assert "no manifest" in capsys.readouterr().err
    assert not (tmp_path / "x.png").exists()
