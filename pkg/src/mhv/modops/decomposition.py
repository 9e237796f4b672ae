"""The map ``pi: W_phi -> W_phi|H (x) W_phi'`` on the Heisenberg part of a Whittaker module."""
from ..errors import NotInHSpan
from ..liealg.whittaker import derive_phi_prime
from .modules import (CharacterModule, LiftModule, SugawaraModule, TensorModule,
                      whittaker_module)
from .vectors import Vector


def decomposition_target(phi):
    """``H^D (x) (C w')^D``: Sugawara structure on ``W_{phi|H}`` times the ``phi'`` line."""
    if not phi.l_value:
        raise ValueError("the decomposition needs phi(l) != 0")
    left = SugawaraModule(phi.restrict_heisenberg())
    right = LiftModule(CharacterModule(derive_phi_prime(phi)))
    return TensorModule(left, right)


def pi_map(v, target=None):
    """Send ``M w`` (``M`` an h-monomial) to ``M w (x) w'``, extended linearly."""
    phi = v.module.phi
    if target is None:
        target = decomposition_target(phi)
    coords = {}
    for key, c in v.items():
        if any(g.kind != "h" for g in key):
            raise NotInHSpan(f"{v.module.render_key(key)} is not in the Heisenberg span")
        coords[(key, ())] = c
    return Vector._raw(target, coords)


def h_monomials(max_degree, max_twice):
    """Canonical h-monomials ``h_{r_1} ... h_{r_k} w`` with ``r_i <= -1/2``, ``|2 r_i| <= max_twice``."""
    from ..liealg.algebra import Generator
    gens = [Generator("h", -t) for t in range(max_twice if max_twice % 2 else max_twice - 1, 0, -2)]
    out = [()]

    def grow(prefix, start, left):
        for i in range(start, len(gens)):
            mono = prefix + (gens[i],)
            out.append(mono)
            if left > 1:
                grow(mono, i, left - 1)
    if max_degree > 0:
        grow((), 0, max_degree)
    return out


__all__ = ["decomposition_target", "h_monomials", "pi_map", "whittaker_module"]
