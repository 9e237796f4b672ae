"""The free U(C d_0)-modules Omega(lambda, alpha, beta) and their tensor products.

Omega(lambda, 0, 0) has the proper submodule t C[t]; otherwise t generates
everything.  In Omega (x) W the vector 1 (x) v_s can be pulled out of any
element using only high-index generators, and the whole line t^j (x) v follows.
"""
import random

from mhv.analysis import (designated_seed, extract_tensor_leader, generate_omega_line,
                          probe_submodule)
from mhv.analysis.probe import ProbeCaps
from mhv.cli.seedexpr import parse_seed
from mhv.liealg import WhittakerFunctionD, d
from mhv.modops import OmegaModule, tensor, whittaker_module

caps = ProbeCaps(4, 4, 400)

om = OmegaModule(2, 1, 3)
print("d_1 . t      =", om.act(d(1), om.basis(1)).render())
for params in [(1, 0, 0), (1, 1, 0), (1, 0, 1)]:
    m = OmegaModule(*params)
    out = probe_submodule(m, m.basis(1), caps)
    print(f"Omega{params}: probe from t -> {out.verdict} (certified={out.certified})")

phi = WhittakerFunctionD.make(1, {1: 1, 2: 1}, {"1/2": 1}, 0, 1)
T = tensor(OmegaModule(1, 1, 1), whittaker_module(phi))
v = parse_seed("t^2 (x) h(-1/2) * w + 3 * t (x) w - t^0 (x) d(0) * w", T)
lead, combo = extract_tensor_leader(v, record=True)
print("\nv            =", v.render())
print("leader       =", lead.render(), f"(from {len(combo)} operators)")
vectors, _ = generate_omega_line(T, lead, 3)
for j, vec in enumerate(vectors):
    print(f"  t^{j} line:", vec.render())

T0 = tensor(OmegaModule(1), whittaker_module(phi))
seed = designated_seed(T0)
out = probe_submodule(T0, seed, caps)
print(f"\nOmega(1,0,0) (x) W: seed {seed.render()} -> {out.verdict} (certified={out.certified})")
