"""Criteria, proof procedures and the submodule probe."""
from .criteria import (criterion_omega, criterion_tensor, criterion_virasoro_whittaker,
                       criterion_whittaker_D, criterion_whittaker_H, iso_predicate_omega,
                       iso_predicate_tensor)
from .probe import (CYCLIC, DEFAULT_CAPS, INCONCLUSIVE, PROPER, ProbeCaps, ProbeOutcome,
                    certify_seed, designated_seed, probe_submodule, replay,
                    whittaker_vector_check)
from .strip import W0Degree, reduce_to_whittaker, strip_step, w0_degree
from .tensor_tools import extract_tensor_leader, generate_omega_line, tensor_components

__all__ = [
    "CYCLIC", "DEFAULT_CAPS", "INCONCLUSIVE", "PROPER", "ProbeCaps", "ProbeOutcome",
    "W0Degree", "certify_seed", "criterion_omega", "criterion_tensor",
    "criterion_virasoro_whittaker", "criterion_whittaker_D", "criterion_whittaker_H",
    "designated_seed", "extract_tensor_leader", "generate_omega_line", "iso_predicate_omega",
    "iso_predicate_tensor", "probe_submodule", "reduce_to_whittaker", "replay", "strip_step",
    "tensor_components", "w0_degree", "whittaker_vector_check",
]
