"""Constructive steps inside ``Omega(lambda, alpha, beta) (x) V`` for restricted ``V``.

Both procedures only act with generators whose index is at least the
restricted bound of the ``V``-components, so those generators touch the
``Omega`` factor alone and the computation reduces to polynomial identities
in ``t``.
"""
from fractions import Fraction
from math import prod

from ..errors import DegenerateParams
from ..liealg.algebra import Generator
from ..modops.modules import OmegaModule, TensorModule, restricted_bound
from ..modops.vectors import Vector, add_into


def _check(module):
    if not (isinstance(module, TensorModule) and isinstance(module.left, OmegaModule)):
        raise TypeError("expected a tensor product Omega (x) V")
    om = module.left
    if not om.alpha and not om.beta:
        raise DegenerateParams("alpha = beta = 0: t C[t] (x) V is a proper submodule")
    return om


def tensor_components(v):
    """``{i: v_i}`` with ``v = sum_i t^i (x) v_i``."""
    parts = {}
    for (i, kr), c in v.items():
        parts.setdefault(i, {})[kr] = c
    return {i: Vector._raw(v.module.right, coords) for i, coords in parts.items()}


def _leading_weights(points):
    """``c_k`` with ``sum_k c_k x_k^e = [e == len(points) - 1]`` (Vandermonde leading row)."""
    return [Fraction(1) / prod((x - y for y in points if y != x), start=Fraction(1))
            for x in points]


def extract_tensor_leader(v, module=None, record=False):
    """``1 (x) v_s`` from ``v = sum_{i<=s} t^i (x) v_i``, using operators of ``U(D)`` only.

    With ``beta != 0`` the operators are ``beta^-1 lambda^-r h_r`` at ``s+1``
    half-integers ``r >= N``; with ``beta = 0`` they are ``lambda^-m d_m`` at
    ``s+2`` integers ``m >= N`` (the result is then divided by ``alpha``).
    With ``record=True`` the ``(coef, word)`` combination is returned too.
    """
    module = module or v.module
    om = _check(module)
    comps = tensor_components(v)
    if not comps:
        raise ValueError("v must be nonzero")
    s = max(comps)
    n = max(restricted_bound(module.right, vi) for vi in comps.values())
    combo = []
    if om.beta:
        twice = [2 * n + 1 + 2 * k for k in range(s + 1)]
        weights = _leading_weights([Fraction(t, 2) for t in twice])
        for t2, c in zip(twice, weights):
            combo.append((c / (om.beta * om.lam_pow_half(t2)), (Generator("h", t2),)))
    else:
        ms = [n + k for k in range(s + 2)]
        weights = _leading_weights([Fraction(x) for x in ms])
        for x, c in zip(ms, weights):
            combo.append((c / (om.alpha * om.lam_pow_half(2 * x)), (Generator("d", x),)))
    out = {}
    for coef, word in combo:
        for k, c in module.act_word(word, v).items():
            add_into(out, k, coef * c)
    result = Vector._raw(module, out)
    return (result, combo) if record else result


def generate_omega_line(module, base, j_max):
    """``[t^j (x) v for j in 0..j_max]`` from ``base = 1 (x) v``.

    Uses ``lambda^-m d_m (t^j (x) v) = (t + m alpha)(t + m)^j (x) v`` with
    ``m = N(v)`` and subtracts the lower powers already produced.  Returns
    ``(vectors, combinations)``; each combination is a ``{word: coef}`` map
    with ``sum coef * (word . base)`` equal to the matching vector.
    """
    om = _check(module)
    comps = tensor_components(base)
    if set(comps) != {0}:
        raise ValueError("base must be of the form 1 (x) v")
    m = max(restricted_bound(module.right, comps[0]), 0)
    dm = Generator("d", m)
    scale = 1 / om.lam_pow_half(2 * m)
    vectors = [base]
    combos = [{(): Fraction(1)}]
    for j in range(j_max):
        new = module.act(dm, vectors[j]) * scale
        combo = {(dm,) + w: c * scale for w, c in combos[j].items()}
        # (t + m alpha)(t + m)^j - t^{j+1}: subtract its lower coefficients
        lower = {}
        for i, c in OmegaModule(om.lambda0, om.alpha, 0).act_key(dm, j).items():
            if i <= j:
                lower[i] = c * scale
        for i, c in lower.items():
            new = new - vectors[i] * c
            for w, c2 in combos[i].items():
                add_into(combo, w, -c * c2)
        vectors.append(new)
        combos.append(combo)
    return vectors, combos
