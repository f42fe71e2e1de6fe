"""Figure renderer for seeded-ising CSV outputs.

Reads the documented CSV schemas (sweep heatmaps, binned histograms,
match-rate curves, binomial fit reports) and draws them without
recomputing any statistic; a probe mode re-emits the plotted series so
the pass-through can be audited.
"""

from .io import SchemaError, Table, read_table
from .render import KINDS, FigureSpec, render

__version__ = "0.1.0"

__all__ = ["FigureSpec", "KINDS", "SchemaError", "Table", "read_table", "render"]
