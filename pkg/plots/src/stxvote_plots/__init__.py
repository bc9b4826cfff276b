"""Figure rendering for stx-vote sweep CSV files."""

from .render import (FORMATS, PlotSpec, build_pdr_figure, build_per_figures,
                     render, series_label)
from .schema import CSV_COLUMNS, SchemaError, SweepRow, load_rows

__version__ = "0.1.0"

__all__ = [
    "CSV_COLUMNS",
    "FORMATS",
    "PlotSpec",
    "SchemaError",
    "SweepRow",
    "build_pdr_figure",
    "build_per_figures",
    "load_rows",
    "render",
    "series_label",
]
