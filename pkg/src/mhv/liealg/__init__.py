"""Exact scalars, the algebra D, its theta-automorphisms and Whittaker functions."""
from .algebra import (C, FULL, HEISENBERG, L, VIRASORO, Dmn, DmInf, Generator, Hm,
                      LieElement, SubalgebraSpec, Vm, bracket, bracket_gens, d, h, h2,
                      jacobi_defect, window_generators)
from .automorphism import AutomorphismSpec, apply_automorphism
from .scalars import Scalar, as_scalar, parse_scalar, render_scalar
from .whittaker import (RawFunctional, WhittakerFunctionD, WhittakerFunctionH,
                        WhittakerFunctionV, derive_phi_prime, normalize_whittaker,
                        solve_twist_coefficients, twist_whittaker, validate_whittaker)

__all__ = [
    "AutomorphismSpec", "C", "Dmn", "DmInf", "FULL", "Generator", "HEISENBERG", "Hm", "L",
    "LieElement", "RawFunctional", "Scalar", "SubalgebraSpec", "VIRASORO", "Vm",
    "WhittakerFunctionD", "WhittakerFunctionH", "WhittakerFunctionV", "apply_automorphism",
    "as_scalar", "bracket", "bracket_gens", "d", "derive_phi_prime", "h", "h2",
    "jacobi_defect", "normalize_whittaker", "parse_scalar", "render_scalar",
    "solve_twist_coefficients", "twist_whittaker", "validate_whittaker", "window_generators",
]
