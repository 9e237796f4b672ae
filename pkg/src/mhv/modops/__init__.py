"""Module families for D with an exact action engine."""
from .decomposition import decomposition_target, h_monomials, pi_map
from .modules import (CharacterModule, InducedModule, LiftModule, Module, OmegaModule,
                      SugawaraModule, TensorModule, TwistedModule, lift_trivial_H,
                      restricted_bound, sugawara_act, tensor, twist_module, whittaker_module)
from .vectors import Vector

__all__ = [
    "CharacterModule", "InducedModule", "LiftModule", "Module", "OmegaModule", "SugawaraModule",
    "TensorModule", "TwistedModule", "Vector", "decomposition_target", "h_monomials",
    "lift_trivial_H", "pi_map", "restricted_bound", "sugawara_act", "tensor", "twist_module",
    "whittaker_module",
]
