"""Reliability, confidence and assurance for pass/fail test campaigns."""

from ._core import (
    AssuranceResult,
    AssuranceTable,
    BoundaryError,
    DegeneratePlanError,
    DomainError,
    FinrelError,
    NoSolutionError,
    ReliabilityStep,
    TailEstimate,
    UnsupportedSizeError,
    assurance_finite,
    assurance_infinite,
    assurance_table,
    confidence_finite,
    confidence_infinite,
    enumerate_assurance_oracle,
    format_percent,
    reliability_finite,
    reliability_infinite,
    simulate_tail_probability,
    step_grid,
)

__all__ = [
    "AssuranceResult",
    "AssuranceTable",
    "BoundaryError",
    "DegeneratePlanError",
    "DomainError",
    "FinrelError",
    "NoSolutionError",
    "ReliabilityStep",
    "TailEstimate",
    "UnsupportedSizeError",
    "assurance_finite",
    "assurance_infinite",
    "assurance_table",
    "confidence_finite",
    "confidence_infinite",
    "enumerate_assurance_oracle",
    "format_percent",
    "reliability_finite",
    "reliability_infinite",
    "simulate_tail_probability",
    "step_grid",
]
