"""Sparse vectors over a module's canonical basis."""
from fractions import Fraction

from ..liealg.scalars import as_scalar, render_scalar


def add_into(acc, key, c):
    v = acc.get(key, 0) + c
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


class Vector:
    """Finite linear combination of basis keys of ``module``; exact equality."""

    __slots__ = ("module", "coords")

    def __init__(self, module, coords=None):
        self.module = module
        clean = {}
        for k, c in (coords or {}).items():
            c = as_scalar(c)
            if c:
                clean[k] = c
        self.coords = clean

    @classmethod
    def _raw(cls, module, coords):
        # trusted constructor: coords already nonzero Fractions
        v = cls.__new__(cls)
        v.module = module
        v.coords = coords
        return v

    def coeff(self, key):
        return self.coords.get(key, Fraction(0))

    def keys(self):
        return self.coords.keys()

    def items(self):
        return self.coords.items()

    def __len__(self):
        return len(self.coords)

    def __bool__(self):
        return bool(self.coords)

    def _check(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        if other.module != self.module:
            raise ValueError("vectors belong to different modules")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        out = dict(self.coords)
        for k, c in other.coords.items():
            add_into(out, k, c)
        return Vector._raw(self.module, out)

    def __neg__(self):
        return Vector._raw(self.module, {k: -c for k, c in self.coords.items()})

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar):
        s = as_scalar(scalar)
        if not s:
            return Vector._raw(self.module, {})
        return Vector._raw(self.module, {k: c * s for k, c in self.coords.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.coords
        if not isinstance(other, Vector):
            return NotImplemented
        return self.module == other.module and self.coords == other.coords

    def __hash__(self):
        return hash(frozenset(self.coords.items()))

    def render(self):
        """Seed-expression rendering, e.g. ``-1/2*h(-1/2) * w + w``."""
        if not self.coords:
            return "0"
        parts = []
        for k in sorted(self.coords, key=self.module.sort_key):
            c = self.coords[k]
            body = self.module.render_key(k)
            parts.append(body if c == 1 else f"{render_scalar(c)}*{body}")
        return " + ".join(parts)

    def __repr__(self):
        return f"Vector({self.render()})"
