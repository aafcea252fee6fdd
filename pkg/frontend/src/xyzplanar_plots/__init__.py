"""Figure rendering for xyzplanar experiment outputs (CSV + fit JSON)."""

from .figures import collapse_residual, plot_collapse, plot_vs_bias, plot_vs_distance
from .io import ResultRow, ScalingFit, SchemaError, read_fit, read_results

__all__ = [
    "ResultRow",
    "ScalingFit",
    "SchemaError",
    "collapse_residual",
    "plot_collapse",
    "plot_vs_bias",
    "plot_vs_distance",
    "read_fit",
    "read_results",
]
