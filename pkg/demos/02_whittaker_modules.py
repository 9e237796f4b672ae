"""When is a Whittaker module irreducible, and how do we see it?

For a few functions on D^(m,0) this prints the criterion, then the evidence:
a certified proper submodule when the criterion fails, and a reduction back
to the cyclic vector when it holds.
"""
from mhv.analysis import (criterion_whittaker_D, designated_seed, probe_submodule,
                          reduce_to_whittaker)
from mhv.analysis.probe import ProbeCaps
from mhv.liealg import WhittakerFunctionD, d, normalize_whittaker
from mhv.modops import restricted_bound, whittaker_module

caps = ProbeCaps(4, 4, 600)

cases = [
    WhittakerFunctionD.make(1, {1: 1, 2: 1}, {"1/2": 0}, 0, 0),   # reducible, l = 0
    WhittakerFunctionD.make(1, {1: 2, 2: 0}, {"1/2": 2}, 0, 1),   # reducible, l != 0
    WhittakerFunctionD.make(1, {1: 1, 2: 3}, {"1/2": 1}, 0, 0),   # irreducible, l = 0
]

for phi in cases:
    W = whittaker_module(phi)
    print(f"\n{phi}")
    print("  restricted bound of w:", restricted_bound(W, W.vacuum()))
    if not criterion_whittaker_D(phi):
        seed = designated_seed(W)
        out = probe_submodule(W, seed, caps)
        print(f"  reducible; seed {seed.render()}")
        print(f"  probe: {out.verdict}, certified={out.certified}, dims={out.dims_explored}")
        continue
    twisted, _ = normalize_whittaker(phi)
    Wt = whittaker_module(twisted)
    v = Wt.basis((d(0), d(0)))
    red, steps = reduce_to_whittaker(v, twisted)
    print(f"  irreducible; {v.render()} strips to {red.render()} in {steps} steps")
