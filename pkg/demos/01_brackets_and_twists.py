"""Brackets, automorphisms and normalising a Whittaker function.

Run with ``python3 demos/01_brackets_and_twists.py``.
"""
from mhv.liealg import (AutomorphismSpec, WhittakerFunctionD, apply_automorphism, bracket, d,
                        derive_phi_prime, h, normalize_whittaker)
from mhv.uea import normal_form, render_element

print("[d_2, d_-2]      =", bracket(d(2), d(-2)))
print("[h_1/2, h_-1/2]  =", bracket(h("1/2"), h("-1/2")))
print("[d_1, h_1/2]     =", bracket(d(1), h("1/2")))

# words in U(D) are rewritten into PBW normal order
print("h_1/2 h_-1/2     =", render_element(normal_form((h("1/2"), h("-1/2")))))

theta = AutomorphismSpec({0: 1})
print("theta(d_1)       =", apply_automorphism(theta, d(1)))
print("theta(h_1/2)     =", apply_automorphism(theta, h("1/2")))

# with l = 0 and phi(h_{m-1/2}) != 0 a twist clears every d-value
phi = WhittakerFunctionD.make(2, {2: 3, 3: -1, 4: 2}, {"1/2": 1, "3/2": 2}, 0, 0)
twisted, spec = normalize_whittaker(phi)
print("\nphi              =", phi)
print("twist coeffs     =", spec.as_dict())
print("twisted phi      =", twisted)

# with l != 0 the Virasoro part of the decomposition sees phi'
phi = WhittakerFunctionD.make(1, {1: 2, 2: 0}, {"1/2": 2}, 0, 1)
print("\nphi'             =", derive_phi_prime(phi))
