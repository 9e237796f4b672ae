"""Sugawara operators on a Heisenberg Whittaker module and the splitting W = H (x) W'.

The Sugawara quadratics turn the Heisenberg module into a D-module with
central charge 1.  For phi(l) != 0 the D-Whittaker module maps onto the tensor
product of that module with the line of phi'.
"""
from fractions import Fraction

from mhv.checks import pi_equivariance, sugawara_relations
from mhv.liealg import WhittakerFunctionD, WhittakerFunctionH, d, h
from mhv.modops import SugawaraModule, decomposition_target, pi_map, whittaker_module

S = SugawaraModule(WhittakerFunctionH.make({"1/2": 1}, 1))
w = S.vacuum()
for n in (1, 0, -1):
    print(f"d_{n} w = {S.act(d(n), w).render()}")

lhs = S.act(d(2), S.act(d(-2), w)) - S.act(d(-2), S.act(d(2), w)) - S.act(d(0), w) * 4
print("[d_2, d_-2] w - 4 d_0 w =", lhs.render(), " (expect 1/2*w)")
print("relations on test vectors:", sugawara_relations(S, M=2, R2=5))

phi = WhittakerFunctionD.make(1, {1: Fraction(3, 2), 2: 1}, {"1/2": 1}, 0, 1)
W = whittaker_module(phi)
target = decomposition_target(phi)
v = W.basis((h("-3/2"), h("-1/2")))
print("\npi(v)        =", pi_map(v, target).render())
print("pi(d_1 v)    =", pi_map(W.act(d(1), v), target).render())
print("d_1 pi(v)    =", target.act(d(1), pi_map(v, target)).render())
res = pi_equivariance(W, max_degree=3)
print(f"equivariance: {res.cases} cases, {res.failures} failures")
