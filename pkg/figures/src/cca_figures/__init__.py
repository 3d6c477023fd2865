"""Figure rendering for persisted cca-decay datasets.

Strictly a consumer: everything plotted here comes out of the CSV/JSON
files a sweep or figure pipeline wrote, nothing is recomputed.  The
Markovian reference curve in fig2, for instance, is the pe_markov column
of the dataset, not a fresh exponential.
"""

from .io import SUPPORTED_SCHEMA_VERSION, FigureInputError, load_manifest, read_table
from .render import FIGURES, FigureSpec, render, render_figure

__version__ = "0.1.0"

__all__ = [
    "FIGURES",
    "FigureInputError",
    "FigureSpec",
    "SUPPORTED_SCHEMA_VERSION",
    "load_manifest",
    "read_table",
    "render",
    "render_figure",
]
