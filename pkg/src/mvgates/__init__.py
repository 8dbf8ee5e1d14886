"""Workbench for finite-valued reversible and conservative logic gates."""

from .gates import (
    Gate,
    GateReport,
    family_gate,
    make_gate,
    named_gate,
    parse_gate,
    format_gate,
)
from .values import Value, value_from_level

__all__ = [
    "Gate",
    "GateReport",
    "Value",
    "family_gate",
    "format_gate",
    "make_gate",
    "named_gate",
    "parse_gate",
    "value_from_level",
]
