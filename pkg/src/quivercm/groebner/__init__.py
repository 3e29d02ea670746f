"""Groebner bases, Hilbert series and minimal free resolutions over Q and F_p."""

from .buchberger import buchberger, is_groebner
from .hilbert import hilbert_dimension, hilbert_numerator
from .polynomial import Poly, PolyRing
from .resolution import BettiTable, minimal_free_resolution, resolve
from .verify import CmReport, pd_formula_survey, rank_condition_ideal, verify_cm
