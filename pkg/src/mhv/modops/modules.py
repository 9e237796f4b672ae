"""Concrete D-modules with an exact generator-action engine.

Every module exposes the same small surface:

* ``accepts(g)`` -- whether ``g`` may act (tensor products with one-dimensional
  modules over a subalgebra only accept that subalgebra);
* ``act(g, v)`` / ``act_element(x, v)`` -- the action on a :class:`Vector`;
* ``vacuum()``, ``basis(key)``, ``check_key(key)``, ``render_key(key)``;
* ``zero_bound(key)`` -- an index ``U`` such that ``d_i`` and ``h_{i-1/2}``
  kill the basis vector for every ``i >= U`` (restricted modules only).

Actions on basis keys are memoised per module instance.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import comb, floor

from ..errors import BasisKeyError, NotRestricted, OutsideDomain
from ..liealg.algebra import FULL, HEISENBERG, VIRASORO, Generator, Hm, SubalgebraSpec, as_element
from ..liealg.automorphism import AutomorphismSpec, apply_automorphism
from ..liealg.scalars import as_scalar
from ..liealg.whittaker import (WhittakerFunctionD, WhittakerFunctionH, WhittakerFunctionV,
                                _Functional)
from ..uea import engine, render_monomial, splitting_order
from .vectors import Vector, add_into

ONE = Fraction(1)
_H_HALF = Generator("h", 1)


class Module:
    arity = 1

    def __post_init__(self):
        object.__setattr__(self, "_cache", {})

    # -- basis -------------------------------------------------------------
    def vacuum(self):
        return Vector._raw(self, {self.vacuum_key: ONE})

    def basis(self, key):
        self.check_key(key)
        return Vector._raw(self, {key: ONE})

    def vector(self, coords):
        for k in coords:
            self.check_key(k)
        return Vector(self, coords)

    def zero(self):
        return Vector._raw(self, {})

    def sort_key(self, key):
        return key

    # -- action ------------------------------------------------------------
    def act_key(self, g, key):
        ck = (g, key)
        hit = self._cache.get(ck)
        if hit is None:
            hit = self._act_key(g, key)
            self._cache[ck] = hit
        return hit

    def act_dict(self, g, coords):
        if not self.accepts(g):
            raise OutsideDomain(f"{g} does not act on {self}")
        out = {}
        get = out.get
        for key, c in coords.items():
            for k2, c2 in self.act_key(g, key).items():
                v = get(k2)
                out[k2] = c * c2 if v is None else v + c * c2
        return {k: v for k, v in out.items() if v}

    def act(self, g, v):
        if v.module != self:
            raise ValueError("vector does not belong to this module")
        return Vector._raw(self, self.act_dict(g, v.coords))

    def act_element(self, x, v):
        """Action of a Lie element (central generators act by their scalars)."""
        out = {}
        for g, c in as_element(x).items():
            for k, c2 in self.act_dict(g, v.coords).items():
                add_into(out, k, c * c2)
        return Vector._raw(self, out)

    def act_word(self, word, v):
        """Apply ``word = (g_1, ..., g_k)`` as the product ``g_1 ... g_k`` (g_k first)."""
        for g in reversed(tuple(word)):
            v = self.act(g, v)
        return v

    def zero_bound(self, key):
        raise NotRestricted(f"{type(self).__name__} is not a restricted module")


# ---------------------------------------------------------------------------
@dataclass(frozen=True, eq=True)
class OmegaModule(Module):
    """``Omega(lambda, alpha, beta) = C[t]`` with ``lambda = lambda0**2``::

        d_m f(t) = lambda^m (t + m alpha) f(t + m)
        h_r f(t) = beta lambda^r f(t + r),      lambda^r := lambda0^(2r)
        c f = l f = 0

    With ``virasoro_only`` the h-action is absent (the Virasoro module
    ``Omega(lambda, alpha)``).  Basis keys are exponents ``j`` of ``t^j``.
    """

    lambda0: Fraction
    alpha: Fraction = Fraction(0)
    beta: Fraction = Fraction(0)
    virasoro_only: bool = False

    def __post_init__(self):
        for name in ("lambda0", "alpha", "beta"):
            object.__setattr__(self, name, as_scalar(getattr(self, name)))
        if not self.lambda0:
            raise ValueError("lambda0 must be nonzero")
        if self.virasoro_only and self.beta:
            raise ValueError("a Virasoro-only Omega module has no beta")
        super().__post_init__()

    @property
    def lam(self):
        return self.lambda0 ** 2

    def lam_pow_half(self, twice):
        """``lambda^(twice/2) = lambda0^twice``."""
        return self.lambda0 ** twice

    vacuum_key = 0

    def accepts(self, g):
        return not (self.virasoro_only and g.kind in ("h", "l"))

    def check_key(self, key):
        if not isinstance(key, int) or isinstance(key, bool) or key < 0:
            raise BasisKeyError(f"{key!r} is not an exponent of t")

    def render_key(self, key):
        return "t" if key == 1 else f"t^{key}"

    def _act_key(self, g, j):
        if g.is_central:
            return {}
        if g.kind == "d":
            m = g.idx
            lam_m = self.lambda0 ** (2 * m)
            out = {}
            # (t + m alpha) * sum_i C(j,i) m^(j-i) t^i
            for i in range(j + 1):
                c = comb(j, i) * Fraction(m) ** (j - i) * lam_m
                add_into(out, i + 1, c)
                add_into(out, i, c * m * self.alpha)
            return out
        if not self.beta:
            return {}
        r = Fraction(g.idx, 2)
        scale = self.beta * self.lam_pow_half(g.idx)
        out = {}
        for i in range(j + 1):
            add_into(out, i, scale * comb(j, i) * r ** (j - i))
        return out

    def __repr__(self):
        return f"Omega(lambda0={self.lambda0}, alpha={self.alpha}, beta={self.beta})"


# ---------------------------------------------------------------------------
def _index_sum(mono):
    return sum((Fraction(g.twice, 2) for g in mono), Fraction(0))


@dataclass(frozen=True, eq=True)
class InducedModule(Module):
    """``Ind_sub^ambient C w`` for a Whittaker function ``phi`` on ``sub``.

    Basis keys are PBW monomials over the complement of ``sub`` in ``ambient``,
    sorted in the splitting order.  ``g . (M w)`` is computed by normal-ordering
    ``g M`` in the splitting order, splitting each monomial into
    complement * subalgebra parts and evaluating ``phi`` on the latter.
    """

    sub: SubalgebraSpec
    phi: _Functional
    ambient: SubalgebraSpec = FULL

    def __post_init__(self):
        if self.phi.domain != self.sub:
            raise ValueError(f"phi is defined on {self.phi.domain}, not {self.sub}")
        super().__post_init__()
        object.__setattr__(self, "_order", splitting_order(self.sub))
        object.__setattr__(self, "_engine", engine(self._order))

    vacuum_key = ()

    @property
    def order(self):
        return self._order

    def accepts(self, g):
        return self.ambient.contains(g)

    def is_complement(self, g):
        return self.ambient.contains(g) and not g.is_central and not self.sub.contains(g)

    def check_key(self, key):
        if not isinstance(key, tuple) or not all(isinstance(g, Generator) for g in key):
            raise BasisKeyError(f"{key!r} is not a PBW monomial")
        for g in key:
            if not self.is_complement(g):
                where = "lies in " + str(self.sub) if self.sub.contains(g) else "is outside " + str(self.ambient)
                raise BasisKeyError(f"{g} {where}; {render_monomial(key)} is not a basis monomial")
        if not self._order.is_sorted(key):
            raise BasisKeyError(f"{render_monomial(key)} is not in PBW normal order")

    def render_key(self, key):
        return render_monomial(key, "w")

    def sort_key(self, key):
        return (len(key), [g.twice for g in key])

    def _act_key(self, g, key):
        phi = self.phi
        sub = self.sub
        out = {}
        for mono, c in self._engine.left_mul_gen(g, key).items():
            # centrals sit in front; complement factors precede subalgebra factors
            cut = len(mono)
            scalar = c
            for i, x in enumerate(mono):
                if x.is_central:
                    continue
                if sub.contains(x):
                    cut = i
                    break
            comp = []
            for i, x in enumerate(mono):
                if x.is_central:
                    scalar *= phi.value(x)
                elif i < cut:
                    comp.append(x)
                else:
                    scalar *= phi.value(x)
                if not scalar:
                    break
            if scalar:
                add_into(out, tuple(comp), scalar)
        return out

    def _complement_top(self):
        """Largest index of a complement generator (as a Fraction)."""
        s = self.sub
        if s.kind == "Dmn":
            return max(Fraction(s.m - 1), Fraction(-2 * s.n - 1, 2))
        if s.kind == "Vm":
            return Fraction(s.m - 1)
        if s.kind == "Hm":
            return Fraction(2 * s.m - 1, 2)
        return Fraction(0)

    def zero_bound(self, key):
        top = max(Fraction(self.phi.support_twice, 2), self._complement_top(), Fraction(0))
        return floor((len(key) + 1) * top - _index_sum(key) + Fraction(1, 2)) + 1

    def __repr__(self):
        return f"Ind_{self.sub}^{self.ambient}({self.phi})"


def whittaker_module(phi):
    """The induced module matching the flavour of ``phi``."""
    if isinstance(phi, WhittakerFunctionD):
        return InducedModule(phi.domain, phi, FULL)
    if isinstance(phi, WhittakerFunctionH):
        return InducedModule(phi.domain, phi, HEISENBERG)
    if isinstance(phi, WhittakerFunctionV):
        return InducedModule(phi.domain, phi, VIRASORO)
    raise TypeError(f"not a Whittaker function: {phi!r}")


# ---------------------------------------------------------------------------
@dataclass(frozen=True, eq=True)
class SugawaraModule(Module):
    """The Heisenberg Whittaker module ``W_phi`` made into a D-module::

        d_n -> 1/(2l) sum_{k in Z+1/2} h_{n-k} h_k              (n != 0)
        d_0 -> 1/(2l) sum_{k in Z+1/2} h_{-|k|} h_{|k|} + 1/16
        c -> 1,  l -> l

    Each positive ``k`` occurs twice in the ``d_0`` sum (as ``k`` and ``-k``).
    """

    phi: WhittakerFunctionH

    def __post_init__(self):
        if not self.phi.l_value:
            raise ValueError("the Sugawara construction needs phi(l) != 0")
        super().__post_init__()
        object.__setattr__(self, "inner", InducedModule(Hm(0), self.phi, HEISENBERG))

    vacuum_key = ()

    def accepts(self, g):
        return True

    def check_key(self, key):
        self.inner.check_key(key)

    def render_key(self, key):
        return self.inner.render_key(key)

    def sort_key(self, key):
        return self.inner.sort_key(key)

    def _h_act(self, twice, coords):
        return self.inner.act_dict(Generator("h", twice), coords)

    def _pair_term(self, n, k2, key):
        """``h_{n-k} h_k`` applied to a basis key, with ``k2 = 2k``."""
        first = self._h_act(k2, {key: ONE})
        return self._h_act(2 * n - k2, first) if first else {}

    def sugawara_key(self, n, key):
        l = self.phi.l_value
        b2 = max([abs(g.idx) for g in key] + [self.phi.support_twice, 1])
        out = {}
        if n != 0:
            lo, hi = 2 * n - b2, b2
            if lo % 2 == 0:
                lo += 1
            for k2 in range(lo, hi + 1, 2):
                for k, c in self._pair_term(n, k2, key).items():
                    add_into(out, k, c / (2 * l))
            edges = (lo - 2, hi + 2)
        else:
            for k2 in range(1, b2 + 1, 2):
                for k, c in self._pair_term(0, k2, key).items():
                    add_into(out, k, c / l)
            add_into(out, key, Fraction(1, 16))
            edges = (b2 + 2 if b2 % 2 else b2 + 1,)
        for k2 in edges:
            # certified range: the first omitted summand must vanish
            if n == 0:
                assert not self._pair_term(0, k2, key), "Sugawara sum not terminated"
            else:
                assert not self._pair_term(n, k2, key), "Sugawara sum not terminated"
        return out

    def _act_key(self, g, key):
        if g.kind == "d":
            return self.sugawara_key(g.idx, key)
        if g.kind == "c":
            return {key: ONE}
        return self.inner.act_key(g, key)

    def sugawara_act(self, n, v):
        out = {}
        for key, c in v.coords.items():
            for k2, c2 in self.act_key(Generator("d", n), key).items():
                add_into(out, k2, c * c2)
        return Vector._raw(self, out)

    def zero_bound(self, key):
        top = max(Fraction(self.phi.support_twice, 2), Fraction(0))
        return floor((len(key) + 2) * top - _index_sum(key) + Fraction(1, 2)) + 1

    def __repr__(self):
        return f"Sugawara({self.phi})"


def sugawara_act(module, n, v):
    return module.sugawara_act(n, v)


# ---------------------------------------------------------------------------
@dataclass(frozen=True, eq=True)
class CharacterModule(Module):
    """One-dimensional module ``C w`` over the domain of a functional."""

    phi: _Functional

    vacuum_key = ()

    def accepts(self, g):
        return self.phi.domain.contains(g)

    def check_key(self, key):
        if key != ():
            raise BasisKeyError(f"{key!r}: a one-dimensional module has only w")

    def render_key(self, key):
        return "w"

    def _act_key(self, g, key):
        val = self.phi.value(g)
        return {(): val} if val else {}

    def zero_bound(self, key):
        return self.phi.support_twice // 2 + 1

    def __repr__(self):
        return f"C_{self.phi}"


@dataclass(frozen=True, eq=True)
class LiftModule(Module):
    """A Virasoro module viewed as a D-module with ``H`` acting by zero."""

    inner: Module

    def __post_init__(self):
        if self.inner.accepts(_H_HALF) or self.inner.accepts(Generator("l")):
            raise ValueError("only Virasoro modules can be lifted")
        super().__post_init__()

    @property
    def vacuum_key(self):
        return self.inner.vacuum_key

    def accepts(self, g):
        return g.kind in ("h", "l") or self.inner.accepts(g)

    def check_key(self, key):
        self.inner.check_key(key)

    def render_key(self, key):
        return self.inner.render_key(key)

    def sort_key(self, key):
        return self.inner.sort_key(key)

    def _act_key(self, g, key):
        if g.kind in ("h", "l"):
            return {}
        return self.inner.act_key(g, key)

    def zero_bound(self, key):
        return self.inner.zero_bound(key)

    def __repr__(self):
        return f"Lift({self.inner!r})"


def lift_trivial_H(inner):
    return LiftModule(inner)


@dataclass(frozen=True, eq=True)
class TwistedModule(Module):
    """``x . v = theta(x) v`` for the automorphism given by ``spec``."""

    inner: Module
    spec: AutomorphismSpec

    @property
    def vacuum_key(self):
        return self.inner.vacuum_key

    def accepts(self, g):
        return all(self.inner.accepts(g2) for g2 in self.spec.image(g))

    def check_key(self, key):
        self.inner.check_key(key)

    def render_key(self, key):
        return self.inner.render_key(key)

    def sort_key(self, key):
        return self.inner.sort_key(key)

    def _act_key(self, g, key):
        out = {}
        for g2, c in apply_automorphism(self.spec, g).items():
            for k, c2 in self.inner.act_key(g2, key).items():
                add_into(out, k, c * c2)
        return out

    def zero_bound(self, key):
        u = self.inner.zero_bound(key)
        jmin = min(min(self.spec.support, default=0), 0)
        return max(u - jmin, 2 - 2 * jmin, 2 - jmin)

    def __repr__(self):
        return f"Twist({self.inner!r}, {dict(self.spec.coeffs)})"


def twist_module(inner, spec):
    return TwistedModule(inner, spec)


@dataclass(frozen=True, eq=True)
class TensorModule(Module):
    """Tensor product with the diagonal (Leibniz) action; keys are pairs."""

    left: Module
    right: Module

    @property
    def arity(self):
        return self.left.arity + self.right.arity

    @property
    def vacuum_key(self):
        return (self.left.vacuum_key, self.right.vacuum_key)

    def accepts(self, g):
        return self.left.accepts(g) and self.right.accepts(g)

    def check_key(self, key):
        if not (isinstance(key, tuple) and len(key) == 2):
            raise BasisKeyError(f"{key!r} is not a tensor key")
        self.left.check_key(key[0])
        self.right.check_key(key[1])

    def render_key(self, key):
        return f"{self.left.render_key(key[0])} (x) {self.right.render_key(key[1])}"

    def sort_key(self, key):
        return (self.left.sort_key(key[0]), self.right.sort_key(key[1]))

    def _act_key(self, g, key):
        kl, kr = key
        out = {}
        for k, c in self.left.act_key(g, kl).items():
            add_into(out, (k, kr), c)
        for k, c in self.right.act_key(g, kr).items():
            add_into(out, (kl, k), c)
        return out

    def zero_bound(self, key):
        return max(self.left.zero_bound(key[0]), self.right.zero_bound(key[1]))

    def pure(self, u, v):
        """``u (x) v`` for vectors of the two factors."""
        return Vector._raw(self, {(ku, kv): cu * cv for ku, cu in u.items() for kv, cv in v.items()})

    def __repr__(self):
        return f"({self.left!r} (x) {self.right!r})"


def tensor(left, right):
    return TensorModule(left, right)


def restricted_bound(module, v):
    """Least ``N`` with ``d_i v = h_{i-1/2} v = 0`` for all ``i >= N``.

    Each module supplies a structural index beyond which the generators must
    kill a basis key (index bookkeeping in the PBW basis); below it the
    annihilation is checked by direct computation.
    """
    if v.module != module:
        raise ValueError("vector does not belong to this module")
    if not v:
        return 0
    upper = max(module.zero_bound(k) for k in v.keys())
    n = upper
    for i in range(upper - 1, -1, -1):
        dgen, hgen = Generator("d", i), Generator("h", 2 * i - 1)
        if any(module.accepts(g) and module.act(g, v) for g in (dgen, hgen)):
            break
        if not (module.accepts(dgen) or module.accepts(hgen)):
            break
        n = i
    return n
