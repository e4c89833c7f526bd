"""Askey-Wilson polynomial calculus: operators, structure relations and
extreme-zero bounds, with exact-rational and float backends."""

from .scalars import QContext, gamma_alpha, q_pochhammer
from .sympoly import SymLaurent, XPoly, f_basis, laurent_to_x, x_to_laurent
from .families import AWParams, RecurrenceCoeffs, aw_monic, aw_series_poly, extract_recurrence

__all__ = [
    "QContext", "gamma_alpha", "q_pochhammer",
    "SymLaurent", "XPoly", "f_basis", "laurent_to_x", "x_to_laurent",
    "AWParams", "RecurrenceCoeffs", "aw_monic", "aw_series_poly",
    "extract_recurrence",
]

__version__ = "0.1.0"
