"""Equilateral stick realizations of knots from arc presentations."""

__version__ = "0.1.0"

from .arcpres import (
    ArcPresentation,
    binding_rotate,
    normalize_no_extremal_arc,
    page_rotate,
    parse_text,
    serialize_text,
    validate,
)
from .compose import CompositePlan, choose_splice_arcs, merge_presentations, realize_composite
from .diagram import PlanarDiagram, arcpres_to_diagram, format_pd, parse_pd
from .geometry import ClearanceReport, check_embedding
from .invariants import determinant, jones_polynomial, kauffman_bracket, state_sum_bracket
from .laurent import LaurentPolynomial, equal_up_to_mirror
from .projection import polygon_to_diagram
from .realize import EquilateralPolygon, RealizationParams, realize, realize_doubled, reduce_at_extremes
from .table import get_entry, load_table

__all__ = [
    "ArcPresentation", "binding_rotate", "normalize_no_extremal_arc", "page_rotate", "parse_text",
    "serialize_text", "validate", "CompositePlan", "choose_splice_arcs", "merge_presentations",
    "realize_composite", "PlanarDiagram", "arcpres_to_diagram", "format_pd", "parse_pd",
    "ClearanceReport", "check_embedding", "determinant", "jones_polynomial", "kauffman_bracket",
    "state_sum_bracket", "LaurentPolynomial", "equal_up_to_mirror", "polygon_to_diagram",
    "EquilateralPolygon", "RealizationParams", "realize", "realize_doubled", "reduce_at_extremes",
    "get_entry", "load_table",
]
