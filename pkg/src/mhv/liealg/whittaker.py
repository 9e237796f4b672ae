"""Whittaker functions and the procedures that transform them.

A Whittaker function is a Lie homomorphism from a positive-part subalgebra to
the scalars.  Three flavours are used:

* :class:`WhittakerFunctionD` on ``D^(m,0)``: values at d_m..d_{2m}, at
  h_{1/2}..h_{m-1/2}, and at c, l (every other slot is forced to vanish);
* :class:`WhittakerFunctionH` on ``H^(0)``: finitely many h_r values and l;
* :class:`WhittakerFunctionV` on ``V^(m)``: values at d_m..d_{2m} and c.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from ..errors import (OutsideDomain, Singular, SupportViolation, WhittakerViolation,
                      WrongCase, ZeroCentralCharge)
from .algebra import C, L, Generator, Dmn, Hm, Vm, bracket_gens
from .automorphism import AutomorphismSpec, apply_automorphism
from .scalars import as_scalar, parse_half, render_scalar

ZERO = Fraction(0)


def _freeze(mapping, keyfn):
    out = {}
    for k, v in (mapping or {}).items():
        v = as_scalar(v)
        if v:
            out[keyfn(k)] = v
    return tuple(sorted(out.items()))


def _half_key(r):
    return r if isinstance(r, int) and r % 2 else parse_half(r)


class _Functional:
    """Shared evaluation logic; subclasses define ``domain`` and ``_lookup``."""

    def value(self, g, strict=True):
        """``phi(g)``.  With ``strict=False`` the function is extended by zero
        outside its domain (the convention used when pulling back along theta)."""
        if not self.domain.contains(g):
            if strict:
                raise OutsideDomain(f"{g} is not in {self.domain}")
            return ZERO
        return self._lookup(g)

    def __call__(self, x):
        if isinstance(x, Generator):
            return self.value(x)
        return sum((c * self.value(g) for g, c in x.items()), ZERO)

    def support(self):
        """Generators (non-central) with nonzero value."""
        raise NotImplementedError

    @property
    def support_twice(self):
        """Largest ``2 * index`` of a non-central generator with nonzero value (or 0)."""
        return max((g.twice for g in self.support()), default=0)


@dataclass(frozen=True, eq=True)
class WhittakerFunctionD(_Functional):
    m: int
    d_values: tuple = ()
    h_values: tuple = ()
    c_value: Fraction = ZERO
    l_value: Fraction = ZERO

    def __post_init__(self):
        m = self.m
        if m < 0:
            raise ValueError("m must be >= 0")
        dv = _freeze(dict(self.d_values), int)
        hv = _freeze(dict(self.h_values), _half_key)
        for k, v in dv:
            if not m <= k <= 2 * m:
                raise SupportViolation(f"phi(d_{k}) = {v} but d_{k} is forced to vanish (m={m})")
        for t, v in hv:
            if not 1 <= t <= 2 * m - 1:
                raise SupportViolation(f"phi(h_{t}/2) = {v} but that slot is forced to vanish (m={m})")
        object.__setattr__(self, "d_values", dv)
        object.__setattr__(self, "h_values", hv)
        object.__setattr__(self, "c_value", as_scalar(self.c_value))
        object.__setattr__(self, "l_value", as_scalar(self.l_value))

    @classmethod
    def make(cls, m, d=None, h=None, c=0, l=0):
        return cls(m, tuple((d or {}).items()), tuple((h or {}).items()), c, l)

    @property
    def domain(self):
        return Dmn(self.m, 0)

    def d(self, k):
        return dict(self.d_values).get(k, ZERO)

    def h(self, r):
        return dict(self.h_values).get(_half_key(r), ZERO)

    def _lookup(self, g):
        if g.kind == "d":
            return self.d(g.idx)
        if g.kind == "h":
            return dict(self.h_values).get(g.idx, ZERO)
        return self.c_value if g.kind == "c" else self.l_value

    def support(self):
        return ([Generator("d", k) for k, _ in self.d_values]
                + [Generator("h", t) for t, _ in self.h_values])

    def restrict_heisenberg(self):
        """The restriction to ``H^(0)``, i.e. the character of ``U(H) w``."""
        return WhittakerFunctionH(self.h_values, self.l_value)

    def __repr__(self):
        parts = [f"m={self.m}"]
        parts += [f"d_{k}={render_scalar(v)}" for k, v in self.d_values]
        parts += [f"h_{t}/2={render_scalar(v)}" for t, v in self.h_values]
        parts += [f"c={render_scalar(self.c_value)}", f"l={render_scalar(self.l_value)}"]
        return f"phiD({', '.join(parts)})"


@dataclass(frozen=True, eq=True)
class WhittakerFunctionH(_Functional):
    h_values: tuple = ()
    l_value: Fraction = ZERO

    def __post_init__(self):
        hv = _freeze(dict(self.h_values), _half_key)
        for t, v in hv:
            if t < 1:
                raise SupportViolation(f"h_{t}/2 is not in H^(0)")
        object.__setattr__(self, "h_values", hv)
        object.__setattr__(self, "l_value", as_scalar(self.l_value))

    @classmethod
    def make(cls, h=None, l=0):
        return cls(tuple((h or {}).items()), l)

    @property
    def domain(self):
        return Hm(0)

    def h(self, r):
        return dict(self.h_values).get(_half_key(r), ZERO)

    def _lookup(self, g):
        if g.kind == "h":
            return dict(self.h_values).get(g.idx, ZERO)
        return self.l_value

    def support(self):
        return [Generator("h", t) for t, _ in self.h_values]

    def __repr__(self):
        parts = [f"h_{t}/2={render_scalar(v)}" for t, v in self.h_values]
        parts.append(f"l={render_scalar(self.l_value)}")
        return f"phiH({', '.join(parts)})"


@dataclass(frozen=True, eq=True)
class WhittakerFunctionV(_Functional):
    m: int
    d_values: tuple = ()
    c_value: Fraction = ZERO

    def __post_init__(self):
        if self.m < 0:
            raise ValueError("m must be >= 0")
        dv = _freeze(dict(self.d_values), int)
        for k, v in dv:
            if not self.m <= k <= 2 * self.m:
                raise SupportViolation(f"psi(d_{k}) = {v} but d_{k} is forced to vanish")
        object.__setattr__(self, "d_values", dv)
        object.__setattr__(self, "c_value", as_scalar(self.c_value))

    @classmethod
    def make(cls, m, d=None, c=0):
        return cls(m, tuple((d or {}).items()), c)

    @property
    def domain(self):
        return Vm(self.m)

    def d(self, k):
        return dict(self.d_values).get(k, ZERO)

    def _lookup(self, g):
        return self.d(g.idx) if g.kind == "d" else self.c_value

    def support(self):
        return [Generator("d", k) for k, _ in self.d_values]

    def __repr__(self):
        parts = [f"m={self.m}"] + [f"d_{k}={render_scalar(v)}" for k, v in self.d_values]
        parts.append(f"c={render_scalar(self.c_value)}")
        return f"phiV({', '.join(parts)})"


class RawFunctional(_Functional):
    """An arbitrary finitely supported functional on a subalgebra (for validation)."""

    def __init__(self, domain, values):
        self.domain = domain
        self.values = {g: as_scalar(v) for g, v in values.items() if as_scalar(v)}
        for g in self.values:
            if not domain.contains(g):
                raise OutsideDomain(f"{g} is not in {domain}")

    def _lookup(self, g):
        return self.values.get(g, ZERO)

    def support(self):
        return [g for g in self.values if not g.is_central]


def _domain_window(domain, top_twice):
    """Generators of ``domain`` with 2*index in [low, top_twice]."""
    gens = [g for g in (C, L) if domain.contains(g)]
    for t in range(-4 * (top_twice + 2), top_twice + 1):
        g = Generator("d", t // 2) if t % 2 == 0 else Generator("h", t)
        if domain.contains(g):
            gens.append(g)
    return gens


def validate_whittaker(phi, window=None):
    """Check that ``phi`` kills ``[A, A]`` for its domain ``A`` over an index window.

    The window (in units of the index) defaults to one that covers twice the
    support of ``phi`` and the domain's forced-zero region.  Raises
    :class:`WhittakerViolation` on the first commutator with nonzero value.
    """
    m = getattr(phi, "m", 0)
    if window is None:
        window = max(2 * m + 2, phi.support_twice // 2 + 2)
    gens = [g for g in _domain_window(phi.domain, 2 * window) if not g.is_central]
    for x, y in combinations_with_replacement(gens, 2):
        terms = bracket_gens(x, y)
        if not terms:
            continue
        val = sum((c * phi.value(g) for g, c in terms), ZERO)
        if val:
            lead = max((g for g, _ in terms), key=lambda g: (not g.is_central, g.twice))
            raise WhittakerViolation(lead, phi.value(lead) if not lead.is_central else val)
    return True


def derive_phi_prime(phi):
    """The Virasoro Whittaker function paired with ``phi`` when ``phi(l) != 0``::

        phi'(c)   = phi(c) - 1
        phi'(d_k) = phi(d_k) - 1/(2l) sum_{i=0}^{m-1} phi(h_{i+1/2}) phi(h_{k-i-1/2})
                    - delta_{0,k}/16          (m <= k <= 2m)
    """
    l = phi.l_value
    if not l:
        raise ZeroCentralCharge("phi(l) must be nonzero")
    m = phi.m
    hv = dict(phi.h_values)
    values = {}
    for k in range(m, 2 * m + 1):
        s = sum((hv.get(2 * i + 1, ZERO) * hv.get(2 * (k - i) - 1, ZERO) for i in range(m)), ZERO)
        v = phi.d(k) - s / (2 * l)
        if k == 0:
            v -= Fraction(1, 16)
        values[k] = v
    return WhittakerFunctionV.make(m, values, phi.c_value - 1)


def solve_twist_coefficients(phi):
    """Solve the upper-triangular system for ``a_0, a_{-1}, ..., a_{-m}``.

    Row ``j`` (0 <= j <= m) reads ``phi(d_{m+j}) = sum_c phi(h_{m-1/2+j-c}) a_{-c}``
    with the convention ``phi(h_{-1/2}) = 0``; the diagonal is ``phi(h_{m-1/2})``.
    The returned family satisfies ``phi(d_n) = sum_i a_i phi(h_{n+i-1/2})`` for
    all ``n >= m``; twist by its negation to kill the d-values.
    """
    if phi.l_value:
        raise WrongCase("the twist normalization applies only when phi(l) = 0")
    m = phi.m
    if m < 1:
        raise WrongCase("the twist normalization needs m >= 1")
    diag = phi.h(2 * m - 1)
    if not diag:
        raise Singular(f"phi(h_{{{m}-1/2}}) = 0")

    def hval(twice):
        return dict(phi.h_values).get(twice, ZERO) if twice >= 1 else ZERO

    a = [ZERO] * (m + 1)  # a[c] = a_{-c}
    for j in range(m, -1, -1):
        rhs = phi.d(m + j)
        for c in range(j + 1, m + 1):
            rhs -= hval(2 * m - 1 + 2 * (j - c)) * a[c]
        a[j] = rhs / diag
    return AutomorphismSpec({-c: a[c] for c in range(m + 1)})


def twist_whittaker(phi, spec):
    """Pull back ``phi`` along ``theta_spec``: ``x -> phi(theta(x))`` on ``D^(m,0)``.

    ``phi`` is extended by zero outside its domain (so ``phi(h_{-1/2}) = 0``).
    Raises :class:`SupportViolation` if the pullback is nonzero at a slot the
    type forces to vanish.
    """
    m = phi.m
    spread = max((abs(i) for i in spec.support), default=0)

    def pulled(g):
        return sum((c * phi.value(g2, strict=False)
                    for g2, c in apply_automorphism(spec, g).items()), ZERO)

    dvals, hvals = {}, {}
    for k in range(m, 2 * m + 2 * spread + 4):
        v = pulled(Generator("d", k))
        if k > 2 * m and v:
            raise SupportViolation(f"pullback is {v} at d_{k}")
        dvals[k] = v
    for t in range(1, 2 * m + 4 * spread + 4, 2):
        v = pulled(Generator("h", t))
        if t > 2 * m - 1 and v:
            raise SupportViolation(f"pullback is {v} at h_{t}/2")
        hvals[t] = v
    return WhittakerFunctionD.make(
        m,
        {k: v for k, v in dvals.items() if k <= 2 * m},
        {t: v for t, v in hvals.items() if t <= 2 * m - 1},
        pulled(C),
        pulled(L),
    )


def normalize_whittaker(phi):
    """Twist a ``phi(l) = 0`` function so that every d-value vanishes.

    Returns ``(normalized_phi, spec)`` where ``spec`` is the automorphism
    actually applied (the negated solution of the triangular system).
    """
    spec = solve_twist_coefficients(phi).negated()
    return twist_whittaker(phi, spec), spec
