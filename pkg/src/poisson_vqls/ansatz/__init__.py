"""Parameterized state-preparation circuits."""

from .builders import (
    all_pairs,
    amplitude_embedding,
    brick_pairs,
    build_ansatz,
    build_gea,
    build_hea,
    prepare_b,
    reference_params,
)
from .params import Q_DELTA_PRESETS, init_params
from .specs import DEFAULT_LAYERS, AnsatzKind, AnsatzSpec, ParameterVector

__all__ = [
    "DEFAULT_LAYERS",
    "Q_DELTA_PRESETS",
    "AnsatzKind",
    "AnsatzSpec",
    "ParameterVector",
    "all_pairs",
    "amplitude_embedding",
    "brick_pairs",
    "build_ansatz",
    "build_gea",
    "build_hea",
    "init_params",
    "prepare_b",
    "reference_params",
]
