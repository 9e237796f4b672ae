"""Generators, brackets and subalgebras of the mirror Heisenberg-Virasoro algebra.

Basis: ``d_m`` (m in Z), ``h_r`` (r in 1/2 + Z) and the central ``c``, ``l``::

    [d_m, d_n] = (m - n) d_{m+n} + (m^3 - m)/12 delta_{m+n,0} c
    [d_m, h_r] = -r h_{m+r}
    [h_r, h_s] = r delta_{r+s,0} l

Half-integer indices are stored as ``2r`` so index arithmetic stays integral.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .scalars import as_scalar, parse_half, render_scalar


class Generator(NamedTuple):
    """A basis element.  ``idx`` is ``m`` for ``d``, ``2r`` for ``h``, 0 for c/l."""

    kind: str
    idx: int = 0

    @property
    def index(self):
        """Index value: an ``int`` for d, a ``Fraction`` for h, 0 for centrals."""
        if self.kind == "h":
            return Fraction(self.idx, 2)
        return self.idx

    @property
    def twice(self):
        """Twice the index, an integer for every kind."""
        return 2 * self.idx if self.kind == "d" else self.idx

    @property
    def is_central(self):
        return self.kind in ("c", "l")

    def __str__(self):
        if self.kind == "d":
            return f"d({self.idx})"
        if self.kind == "h":
            return f"h({self.idx}/2)"
        return self.kind

    def __repr__(self):
        return str(self)


C = Generator("c")
L = Generator("l")


def d(m):
    return Generator("d", int(m))


def h(r):
    """``h_r`` from an index given as Fraction, int-free string ``"p/2"`` etc."""
    return Generator("h", parse_half(r))


def h2(twice):
    """``h_r`` from ``2r`` (must be odd)."""
    if twice % 2 == 0:
        raise ValueError(f"h index 2r={twice} must be odd")
    return Generator("h", twice)


def window_generators(K, kinds="dhcl"):
    """All generators with |index| <= K, in a fixed deterministic order."""
    out = []
    if "c" in kinds:
        out.append(C)
    if "l" in kinds:
        out.append(L)
    if "d" in kinds:
        out.extend(d(m) for m in range(-K, K + 1))
    if "h" in kinds:
        out.extend(h2(t) for t in range(-2 * K + 1, 2 * K, 2))
    return out


@lru_cache(maxsize=None)
def bracket_gens(x, y):
    """Structure constants: ``[x, y]`` as a tuple of ``(Generator, Fraction)``."""
    if x.is_central or y.is_central:
        return ()
    if x.kind == "d" and y.kind == "d":
        m, n = x.idx, y.idx
        out = []
        if m != n:
            out.append((d(m + n), Fraction(m - n)))
        if m + n == 0 and m * m * m - m != 0:
            out.append((C, Fraction(m * m * m - m, 12)))
        return tuple(out)
    if x.kind == "d":
        # [d_m, h_r] = -r h_{m+r}
        return ((Generator("h", 2 * x.idx + y.idx), Fraction(-y.idx, 2)),)
    if y.kind == "d":
        return ((Generator("h", 2 * y.idx + x.idx), Fraction(x.idx, 2)),)
    if x.idx + y.idx == 0:
        return ((L, Fraction(x.idx, 2)),)
    return ()


class LieElement:
    """A finite linear combination of generators with exact coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            items = terms.items() if hasattr(terms, "items") else terms
            for g, c in items:
                c = as_scalar(c)
                if c:
                    clean[g] = clean.get(g, 0) + c
                    if not clean[g]:
                        del clean[g]
        self.terms = clean

    @classmethod
    def of(cls, g, coeff=1):
        return cls({g: coeff})

    def items(self):
        return self.terms.items()

    def coeff(self, g):
        return self.terms.get(g, Fraction(0))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, LieElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for g, c in other.terms.items():
            out[g] = out.get(g, 0) + c
        return LieElement(out)

    def __neg__(self):
        return LieElement({g: -c for g, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        scalar = as_scalar(scalar)
        return LieElement({g: c * scalar for g, c in self.terms.items()})

    __rmul__ = __mul__

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for g in sorted(self.terms, key=_display_key):
            c = self.terms[g]
            parts.append(str(g) if c == 1 else f"{render_scalar(c)}*{g}")
        return " + ".join(parts)


def _display_key(g):
    return ({"c": 0, "l": 1}.get(g.kind, 2), g.twice)


def as_element(x):
    if isinstance(x, LieElement):
        return x
    if isinstance(x, Generator):
        return LieElement.of(x)
    raise TypeError(f"not a Lie element: {x!r}")


def bracket(x, y):
    """Bilinear bracket of two elements (generators are promoted)."""
    x, y = as_element(x), as_element(y)
    out = {}
    for g1, c1 in x.items():
        for g2, c2 in y.items():
            for g, c in bracket_gens(g1, g2):
                out[g] = out.get(g, 0) + c1 * c2 * c
    return LieElement(out)


def jacobi_defect(x, y, z):
    """``[x,[y,z]] + [y,[z,x]] + [z,[x,y]]``; identically zero on the algebra."""
    return (bracket(x, bracket(y, z)) + bracket(y, bracket(z, x))
            + bracket(z, bracket(x, y)))


@dataclass(frozen=True)
class SubalgebraSpec:
    """One of the subalgebras used for induction and Whittaker functions.

    ``kind`` is one of ``"Dmn"`` (generators d_i, i>=m; h_r, r >= -n+1/2; c, l),
    ``"DmInf"`` (d_i, i>=m; all h; c, l), ``"Vm"`` (d_i, i>=m; c),
    ``"Hm"`` (h_r, r >= m+1/2; l), ``"Virasoro"``, ``"Heisenberg"``, ``"Full"``.
    """

    kind: str
    m: int = 0
    n: int = 0

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown subalgebra kind {self.kind!r}")
        if self.m < 0 or self.n < 0:
            raise ValueError("subalgebra parameters must be non-negative")

    def contains(self, g):
        return _contains(self, g)

    __contains__ = contains

    def __str__(self):
        if self.kind == "Dmn":
            return f"D^({self.m},{-self.n})"
        if self.kind == "DmInf":
            return f"D^({self.m},-inf)"
        if self.kind in ("Vm", "Hm"):
            return f"{self.kind[0]}^({self.m})"
        return self.kind


_KINDS = ("Dmn", "DmInf", "Vm", "Hm", "Virasoro", "Heisenberg", "Full")


@lru_cache(maxsize=None)
def _contains(spec, g):
    k = spec.kind
    if k == "Full":
        return True
    if k == "Virasoro":
        return g.kind in ("d", "c")
    if k == "Heisenberg":
        return g.kind in ("h", "l")
    if k == "Vm":
        return g.kind == "c" or (g.kind == "d" and g.idx >= spec.m)
    if k == "Hm":
        return g.kind == "l" or (g.kind == "h" and g.idx >= 2 * spec.m + 1)
    if g.is_central:
        return True
    if g.kind == "d":
        return g.idx >= spec.m
    if k == "DmInf":
        return True
    return g.idx >= -2 * spec.n + 1


def Dmn(m, n=0):
    return SubalgebraSpec("Dmn", m, n)


def DmInf(m):
    return SubalgebraSpec("DmInf", m)


def Vm(m):
    return SubalgebraSpec("Vm", m)


def Hm(m):
    return SubalgebraSpec("Hm", m)


FULL = SubalgebraSpec("Full")
VIRASORO = SubalgebraSpec("Virasoro")
HEISENBERG = SubalgebraSpec("Heisenberg")
