"""PBW normal ordering in the universal enveloping algebra of D.

A PBW monomial is a tuple of generators, non-decreasing for an
:class:`OrderKey` (repeated factors encode powers).  An element of U(D) is a
plain ``dict`` mapping monomials to nonzero :class:`~fractions.Fraction`
coefficients.  The central generators c and l are ordinary commuting factors
here; modules evaluate them when they act.

Reordering uses the single rule ``x y -> y x + [x, y]`` for adjacent
out-of-order pairs.  :class:`PBWEngine` applies it recursively with
memoisation; :func:`rewrite_normal_form` is the literal word-rewriting system,
kept as an independent route for confluence checks.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import groupby
from typing import Optional

from .errors import NotSplittingOrder
from .liealg.algebra import SubalgebraSpec, bracket_gens
from .liealg.scalars import render_scalar

ONE = Fraction(1)
IDENTITY = ()


@dataclass(frozen=True)
class OrderKey:
    """Total order on generators.

    Central generators come first (c before l).  Without ``sub`` the rest is
    sorted by index value; d and h indices interleave without collisions.
    With ``sub`` set, the order *splits* for that subalgebra: all
    complement generators precede all (non-central) generators of ``sub``,
    each block sorted by index.
    """

    sub: Optional[SubalgebraSpec] = None

    def key(self, g):
        return _order_key(self.sub, g)

    def sort(self, word):
        return tuple(sorted(word, key=self.key))

    def is_sorted(self, word):
        k = self.key
        return all(k(a) <= k(b) for a, b in zip(word, word[1:]))


DEFAULT_ORDER = OrderKey()


def splitting_order(sub):
    return OrderKey(sub)


@lru_cache(maxsize=None)
def _order_key(sub, g):
    if g.kind == "c":
        return (0, 0)
    if g.kind == "l":
        return (0, 1)
    if sub is not None and sub.contains(g):
        return (2, g.twice)
    return (1, g.twice)


def _add(acc, mono, c):
    v = acc.get(mono, 0) + c
    if v:
        acc[mono] = v
    else:
        acc.pop(mono, None)


class PBWEngine:
    """Memoised left multiplication of normal-form monomials by generators."""

    def __init__(self, order=DEFAULT_ORDER):
        self.order = order
        self._key = order.key
        self._cache = {}

    def left_mul_gen(self, g, mono):
        """Normal form of ``g * mono`` (``mono`` already sorted).  Do not mutate the result."""
        ck = (g, mono)
        hit = self._cache.get(ck)
        if hit is not None:
            return hit
        key = self._key
        if not mono or key(g) <= key(mono[0]):
            res = {(g,) + mono: ONE}
        else:
            x1, rest = mono[0], mono[1:]
            res = {}
            # g x1 rest = x1 (g rest) + [g, x1] rest
            for m2, c2 in self.left_mul_gen(g, rest).items():
                for m3, c3 in self.left_mul_gen(x1, m2).items():
                    _add(res, m3, c2 * c3)
            for gb, cb in bracket_gens(g, x1):
                for m2, c2 in self.left_mul_gen(gb, rest).items():
                    _add(res, m2, cb * c2)
        self._cache[ck] = res
        return res

    def left_mul(self, g, elem):
        out = {}
        for mono, c in elem.items():
            for m2, c2 in self.left_mul_gen(g, mono).items():
                _add(out, m2, c * c2)
        return out

    def normal_form(self, word):
        elem = {IDENTITY: ONE}
        for g in reversed(tuple(word)):
            elem = self.left_mul(g, elem)
        return elem

    def multiply(self, a, b):
        out = {}
        for mono, ca in a.items():
            part = b
            for g in reversed(mono):
                part = self.left_mul(g, part)
            for m2, c2 in part.items():
                _add(out, m2, ca * c2)
        return out


@lru_cache(maxsize=None)
def engine(order=DEFAULT_ORDER):
    """Shared engine (and cache) per order."""
    return PBWEngine(order)


def normal_form(word, order=DEFAULT_ORDER):
    """Normal form of a word of generators (leftmost factor first)."""
    return engine(order).normal_form(word)


def multiply(a, b, order=DEFAULT_ORDER):
    return engine(order).multiply(a, b)


def element(mono=IDENTITY, coeff=1):
    return {tuple(mono): Fraction(coeff)} if coeff else {}


def rewrite_normal_form(word, order=DEFAULT_ORDER, strategy="leftmost"):
    """Literal adjacent-swap rewriting, returning ``(normal_form, steps)``.

    ``strategy`` picks the leftmost or rightmost inversion of each word.  The
    step count is bounded by :func:`rewrite_step_bound` of the word length.
    """
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(strategy)
    key = order.key
    todo = {tuple(word): ONE}
    done = {}
    steps = 0
    while todo:
        w, c = todo.popitem()
        pos = [i for i in range(len(w) - 1) if key(w[i]) > key(w[i + 1])]
        if not pos:
            _add(done, w, c)
            continue
        i = pos[0] if strategy == "leftmost" else pos[-1]
        steps += 1
        x, y = w[i], w[i + 1]
        _add(todo, w[:i] + (y, x) + w[i + 2:], c)
        for g, cb in bracket_gens(x, y):
            _add(todo, w[:i] + (g,) + w[i + 2:], c * cb)
    return done, steps


@lru_cache(maxsize=None)
def rewrite_step_bound(n):
    """Upper bound on swap steps for one word of length ``n``.

    A swap either keeps the length and removes one inversion, or (for each of
    the at most two bracket terms) shortens the word by one.
    """
    if n <= 1:
        return 0
    inversions = n * (n - 1) // 2
    return inversions * (1 + 2 * rewrite_step_bound(n - 1))


def split_monomial(mono, sub, order):
    """Factor ``mono = complement_part * subalgebra_part``.

    Central factors are placed in the subalgebra part (they commute with
    everything).  Requires ``order`` to be the splitting order for ``sub``.
    """
    if order.sub != sub:
        raise NotSplittingOrder(f"order {order} does not split {sub}")
    comp, subpart = [], []
    seen_sub = False
    for g in mono:
        if g.is_central:
            if not sub.contains(g):
                raise NotSplittingOrder(f"central {g} outside {sub}")
            subpart.append(g)
        elif sub.contains(g):
            seen_sub = True
            subpart.append(g)
        else:
            if seen_sub:
                raise NotSplittingOrder(f"{g} follows a generator of {sub} in {mono}")
            comp.append(g)
    return tuple(comp), tuple(subpart)


def monomial_factors(mono):
    """``[(generator, exponent), ...]`` in written order."""
    return [(g, len(list(grp))) for g, grp in groupby(mono)]


def degree(mono):
    return len(mono)


def render_monomial(mono, vacuum="w"):
    """Display grammar ``h(-3/2)^2 * d(0) * w``."""
    parts = [str(g) if e == 1 else f"{g}^{e}" for g, e in monomial_factors(mono)]
    if vacuum:
        parts.append(vacuum)
    return " * ".join(parts) if parts else "1"


def render_element(elem, vacuum=None):
    if not elem:
        return "0"
    out = []
    for mono in sorted(elem, key=lambda mn: (len(mn), [g.twice for g in mn])):
        c = elem[mono]
        body = render_monomial(mono, vacuum)
        out.append(body if c == 1 else f"{render_scalar(c)}*{body}")
    return " + ".join(out)
