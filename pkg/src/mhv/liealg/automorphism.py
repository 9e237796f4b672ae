"""The automorphisms ``theta_alpha = exp(ad alpha)`` for ``alpha`` in the Heisenberg part.

``alpha = sum_i 2 a_i / (2i - 1) h_{i-1/2}`` with finitely many nonzero ``a_i``;
the automorphism is stored through the coefficient family ``{a_i}`` since the
generator formulas are closed-form in it::

    theta(d_n) = d_n + sum_i a_i h_{n+i-1/2} + 1/2 sum_i a_i a_{-n-i+1} l
    theta(h_r) = h_r + a_{-r+1/2} l
    theta(c) = c,  theta(l) = l
"""
from dataclasses import dataclass
from fractions import Fraction

from .algebra import L, Generator, LieElement, as_element
from .scalars import as_scalar


@dataclass(frozen=True)
class AutomorphismSpec:
    """Finitely supported family ``i -> a_i``; stored as a sorted tuple of pairs."""

    coeffs: tuple = ()

    def __post_init__(self):
        raw = self.coeffs.items() if hasattr(self.coeffs, "items") else self.coeffs
        clean = {}
        for i, a in raw:
            a = as_scalar(a)
            if a:
                clean[int(i)] = a
        object.__setattr__(self, "coeffs", tuple(sorted(clean.items())))

    def a(self, i):
        for j, v in self.coeffs:
            if j == i:
                return v
        return Fraction(0)

    @property
    def support(self):
        return tuple(i for i, _ in self.coeffs)

    def as_dict(self):
        return dict(self.coeffs)

    def negated(self):
        return AutomorphismSpec({i: -a for i, a in self.coeffs})

    def __bool__(self):
        return bool(self.coeffs)

    def element(self):
        """The element ``alpha`` itself, for display."""
        return LieElement({Generator("h", 2 * i - 1): Fraction(2) * a / (2 * i - 1)
                           for i, a in self.coeffs})

    def image(self, g):
        """``theta(g)`` for a single generator."""
        return LieElement(_image_terms(self, g))

    def __call__(self, x):
        return apply_automorphism(self, x)


def _image_terms(spec, g):
    terms = {g: Fraction(1)}
    if g.kind == "h":
        # a_{-r+1/2}: with 2r = g.idx, -r + 1/2 = (1 - g.idx) / 2
        a = spec.a((1 - g.idx) // 2)
        if a:
            terms[L] = terms.get(L, 0) + a
    elif g.kind == "d":
        n = g.idx
        quad = Fraction(0)
        coeffs = dict(spec.coeffs)
        for i, a in spec.coeffs:
            hg = Generator("h", 2 * (n + i) - 1)
            terms[hg] = terms.get(hg, 0) + a
            partner = coeffs.get(-n - i + 1)
            if partner:
                quad += a * partner
        if quad:
            terms[L] = terms.get(L, 0) + quad / 2
    return terms


def apply_automorphism(spec, x):
    """Linear extension of the generator formulas to any element."""
    x = as_element(x)
    out = {}
    for g, c in x.items():
        for g2, c2 in _image_terms(spec, g).items():
            out[g2] = out.get(g2, 0) + c * c2
    return LieElement(out)
