"""Degree stripping on ``W_0 = U(span(d_0, ..., d_{m-1})) w`` for normalised ``phi`` with ``l = 0``.

Basis monomials are ``d_0^{i_0} ... d_{m-1}^{i_{m-1}} w``; their degrees are
compared in reverse-lexicographic order (first differing entry from ``i_0``
decides).  Acting with ``h_{m-p-1/2} - phi(h_{m-p-1/2})``, where ``p`` is the
first nonzero position of the leading degree, lowers the degree by exactly
``e_p``.
"""
from functools import total_ordering

from ..errors import AlreadyVacuumLine, NotNormalized, Stalled
from ..liealg.algebra import Generator
from ..modops.modules import InducedModule


@total_ordering
class W0Degree:
    """Exponent tuple ``(i_0, ..., i_{m-1})`` with the reverse-lex comparator."""

    __slots__ = ("exps",)

    def __init__(self, exps):
        self.exps = tuple(exps)

    @classmethod
    def of_key(cls, key, m):
        exps = [0] * m
        for g in key:
            if g.kind != "d" or not 0 <= g.idx < m:
                raise ValueError(f"{g} is not one of d_0..d_{m - 1}")
            exps[g.idx] += 1
        return cls(exps)

    @classmethod
    def unit(cls, m, p):
        return cls(1 if s == p else 0 for s in range(m))

    def __eq__(self, other):
        return isinstance(other, W0Degree) and self.exps == other.exps

    def __lt__(self, other):
        # tuple comparison from position 0 is exactly the reverse-lex order
        return self.exps < other.exps

    def __hash__(self):
        return hash(self.exps)

    def __sub__(self, other):
        return W0Degree(a - b for a, b in zip(self.exps, other.exps))

    @property
    def lowest_position(self):
        return next((s for s, e in enumerate(self.exps) if e), None)

    def total(self):
        return sum(self.exps)

    def __repr__(self):
        return f"W0Degree{self.exps}"


def w0_degree(v, m):
    return max(W0Degree.of_key(k, m) for k in v.keys())


def _check_normalized(module, phi):
    if phi.l_value:
        raise ValueError("degree stripping needs phi(l) = 0")
    m = phi.m
    if any(phi.d(k) for k in range(m, 2 * m + 1)):
        raise NotNormalized(f"phi has nonzero d-values at indices >= {m}; twist it first")
    if not phi.value(Generator("h", 2 * m - 1)):
        raise ValueError(f"degree stripping needs phi(h_{m}-1/2) != 0")
    if not isinstance(module, InducedModule) or module.phi != phi:
        raise ValueError("the vector must live in the Whittaker module of phi")


def strip_step(v, phi):
    """``(h_{m-p-1/2} - phi(h_{m-p-1/2})) v`` with ``p`` the first nonzero position of ``deg v``."""
    _check_normalized(v.module, phi)
    m = phi.m
    if all(len(k) == 0 for k in v.keys()):
        raise AlreadyVacuumLine("v is a multiple of w")
    p = w0_degree(v, m).lowest_position
    g = Generator("h", 2 * (m - p) - 1)
    return v.module.act(g, v) - v * phi.value(g)


def reduce_to_whittaker(v, phi, max_steps=None):
    """Strip until a multiple of ``w`` remains; returns ``(vector, steps)``.

    Every step is checked to drop the degree by exactly ``e_p``; a step that
    does not raises :class:`Stalled`.
    """
    _check_normalized(v.module, phi)
    m = phi.m
    if not v:
        raise Stalled("the zero vector cannot be reduced")
    steps = 0
    while any(len(k) for k in v.keys()):
        if max_steps is not None and steps >= max_steps:
            raise Stalled(f"no multiple of w after {steps} steps")
        deg = w0_degree(v, m)
        p = deg.lowest_position
        new = strip_step(v, phi)
        if not new:
            raise Stalled(f"strip step annihilated a vector of degree {deg}")
        expected = deg - W0Degree.unit(m, p)
        got = w0_degree(new, m)
        if got != expected:
            raise Stalled(f"degree went from {deg} to {got}, expected {expected}")
        v = new
        steps += 1
    return v, steps
