"""Finite exploration of the submodule generated by a seed vector.

The probe grows the span of ``{u . seed}`` over words ``u`` in the window
generators, breadth first, keeping an exact echelon basis.  Basis columns are
numbered in order of first appearance with the vacuum key as column 0, and
each row's pivot is its largest column; the vacuum vector lies in the span
exactly when column 0 becomes a pivot.
"""
from dataclasses import dataclass, field
from fractions import Fraction

from ..liealg.algebra import Generator, window_generators
from ..modops.modules import (CharacterModule, InducedModule, LiftModule, OmegaModule,
                              SugawaraModule, TensorModule, TwistedModule, restricted_bound)
from ..modops.vectors import Vector, add_into
from ..errors import NotRestricted


@dataclass(frozen=True)
class ProbeCaps:
    index_window: int = 6
    max_word_length: int = 6
    max_dimension: int = 4000

    def __post_init__(self):
        if min(self.index_window, self.max_word_length, self.max_dimension) < 1:
            raise ValueError("probe caps must be positive")


DEFAULT_CAPS = ProbeCaps()

CYCLIC = "CyclicEvidence"
PROPER = "ProperWitness"
INCONCLUSIVE = "Inconclusive"


@dataclass
class ProbeOutcome:
    verdict: str
    certified: bool = False
    witness_basis: list = field(default_factory=list)
    path: tuple = None
    combination: list = None
    dims_explored: int = 0
    words_explored: int = 0

    def to_json(self, max_basis=16):
        out = {"verdict": self.verdict, "certified": self.certified,
               "dims_explored": self.dims_explored, "words_explored": self.words_explored}
        if self.verdict == PROPER:
            out["witness_basis"] = [v.render() for v in self.witness_basis[:max_basis]]
        if self.path is not None:
            out["path"] = [str(g) for g in self.path]
        return out


def replay(module, seed, combination):
    """``sum coef * (word . seed)`` for a list of ``(coef, word)`` pairs."""
    out = module.zero()
    for coef, word in combination:
        out = out + module.act_word(word, seed) * coef
    return out


class _Echelon:
    def __init__(self, vacuum_key):
        self.col = {vacuum_key: 0}
        self.rows = {}  # pivot column -> row dict (column -> coefficient)

    def to_row(self, coords):
        col = self.col
        row = {}
        for k, c in coords.items():
            j = col.get(k)
            if j is None:
                j = col[k] = len(col)
            row[j] = c
        return row

    def reduce(self, row):
        """Reduce against the stored rows; returns ``(row, pivot)`` (pivot None if zero).

        Stored rows are scaled so that their pivot coefficient is 1.
        """
        rows = self.rows
        while row:
            p = max(row)
            base = rows.get(p)
            if base is None:
                inv = 1 / row[p]
                return {j: c * inv for j, c in row.items()}, p
            f = row.pop(p)
            for j, c in base.items():
                if j == p:
                    continue
                v = row.get(j)
                if v is None:
                    row[j] = -f * c
                else:
                    v -= f * c
                    if v:
                        row[j] = v
                    else:
                        del row[j]
        return row, None


def _probe_generators(module, K):
    return [g for g in window_generators(K) if not g.is_central and module.accepts(g)]


def probe_submodule(module, seed, caps=DEFAULT_CAPS, certified=None):
    """Explore ``U(D) . seed`` up to ``caps``; see :class:`ProbeOutcome`.

    ``certified`` overrides the structural seed check of :func:`certify_seed`.
    """
    if not seed:
        raise ValueError("the seed must be nonzero")
    gens = _probe_generators(module, caps.index_window)
    ech = _Echelon(module.vacuum_key)
    kept = []  # (word, vector) of independent vectors, in insertion order
    words = 0
    frontier = []
    hit = None

    def offer(word, vec):
        nonlocal hit
        row, piv = ech.reduce(ech.to_row(vec.coords))
        if piv is None:
            return False
        ech.rows[piv] = row
        kept.append((word, vec))
        frontier.append(len(kept) - 1)
        if piv == 0:
            hit = len(kept) - 1
        return True

    words += 1
    offer((), seed)
    capped = False
    for _ in range(caps.max_word_length):
        if hit is not None or not frontier:
            break
        current, frontier[:] = list(frontier), []
        for idx in current:
            word, vec = kept[idx]
            for g in gens:
                words += 1
                offer((g,) + word, module.act(g, vec))
                if hit is not None or len(kept) >= caps.max_dimension:
                    break
            if hit is not None or len(kept) >= caps.max_dimension:
                break
        if len(kept) >= caps.max_dimension and hit is None:
            capped = True
            break
    else:
        capped = bool(frontier) and hit is None

    if hit is not None:
        combo = _vacuum_combination(module, kept)
        path = next(word for coef, word in combo
                    if module.act_word(word, seed).coeff(module.vacuum_key))
        return ProbeOutcome(CYCLIC, False, [], path, combo, len(kept), words)
    if certified is None:
        certified = certify_seed(module, seed)
    basis = [vec for _, vec in kept]
    if not capped:
        return ProbeOutcome(PROPER, bool(certified), basis, None, None, len(kept), words)
    if certified:
        return ProbeOutcome(PROPER, True, basis, None, None, len(kept), words)
    return ProbeOutcome(INCONCLUSIVE, False, [], None, None, len(kept), words)


def _vacuum_combination(module, kept):
    """Express the vacuum vector through the kept word vectors."""
    ech = _Echelon(module.vacuum_key)
    combos = {}
    for i, (word, vec) in enumerate(kept):
        row = ech.to_row(vec.coords)
        combo = {i: Fraction(1)}
        while row:
            p = max(row)
            base = ech.rows.get(p)
            if base is None:
                break
            f = row[p] / base[p]
            for j, c in base.items():
                add_into(row, j, -f * c)
            for j, c in combos[p].items():
                add_into(combo, j, -f * c)
        if not row:
            continue
        p = max(row)
        ech.rows[p] = row
        combos[p] = combo
        if p == 0:
            scale = 1 / row[0]
            return [(c * scale, kept[j][0]) for j, c in sorted(combo.items())]
    raise AssertionError("vacuum vector not in the explored span")


# -- certificates ------------------------------------------------------------

def _subalgebra_generators(sub, top):
    """Non-central generators of ``sub`` with index <= ``top`` plus c and l."""
    out = [Generator("c"), Generator("l")]
    out += [g for g in window_generators(top) if not g.is_central and sub.contains(g)]
    return [g for g in out if sub.contains(g)]


def whittaker_vector_check(module, v, phi, window=None):
    """True iff ``x . v = phi(x) v`` for every generator of ``phi``'s domain up to ``window``.

    Without a window the check runs up to an index past which both sides vanish
    (restricted bound of ``v`` and support of ``phi``), so it is exact.
    """
    if window is None:
        top = max([restricted_bound(module, v), phi.support_twice // 2 + 1])
        window = top + 1
    for g in _subalgebra_generators(phi.domain, window):
        if not module.accepts(g):
            continue
        if module.act(g, v) != v * phi.value(g):
            return False
    return True


def _rank_one(v):
    """Split a tensor vector into ``(left_coords, right_coords)`` if it is a pure tensor."""
    items = sorted(v.items(), key=lambda kv: v.module.sort_key(kv[0]))
    (kl0, kr0), c0 = items[0]
    right = {kr: c for (kl, kr), c in items if kl == kl0}
    left = {kl: c / c0 for (kl, kr), c in items if kr == kr0}
    for (kl, kr), c in items:
        if left.get(kl, 0) * right.get(kr, 0) != c:
            return None
    if len(left) * len(right) != len(items):
        return None
    return left, right


def certify_seed(module, v):
    """Structural proof that ``U(D) v`` is a proper submodule (vacuum not reached).

    * induced modules: ``v`` is a Whittaker vector for the inducing function
      and ``v`` is not a multiple of the vacuum (the associated graded of
      ``U(D)`` is a domain, so every ``u v`` keeps positive PBW degree);
    * ``Omega(lambda, 0, 0)``: ``v`` lies in ``t C[t]``, which is closed;
    * twists and lifts: same submodules as the inner module;
    * tensors: a pure tensor with a certified factor, or ``t C[t] (x) V``.
    """
    if not v or v.coeff(module.vacuum_key) and len(v) == 1:
        return False
    if isinstance(module, InducedModule):
        if all(len(k) == 0 for k in v.keys()):
            return False
        return whittaker_vector_check(module, v, module.phi)
    if isinstance(module, SugawaraModule):
        return certify_seed(module.inner, Vector._raw(module.inner, v.coords))
    if isinstance(module, OmegaModule):
        return not module.alpha and not module.beta and 0 not in v.coords
    if isinstance(module, (LiftModule, TwistedModule)):
        return certify_seed(module.inner, Vector._raw(module.inner, v.coords))
    if isinstance(module, TensorModule):
        left = module.left
        if (isinstance(left, OmegaModule) and not left.alpha and not left.beta
                and all(kl >= 1 for kl, _ in v.keys())):
            return True
        split = _rank_one(v)
        if split is None:
            return False
        lv = Vector._raw(module.left, split[0])
        rv = Vector._raw(module.right, split[1])
        return certify_seed(module.left, lv) or certify_seed(module.right, rv)
    return False


# -- designated witnesses ----------------------------------------------------

def designated_seed(module):
    """The vector whose submodule witnesses reducibility, or None if irreducible.

    * D-Whittaker, ``l = 0``: ``h_{-1/2} w`` when ``phi(h_{m-1/2}) = 0``;
    * D-Whittaker, ``l != 0``: ``(d_{m-1} - d^S_{m-1}) w`` where ``d^S`` is the
      Sugawara quadratic in the h's, when the criterion fails;
    * H-Whittaker with ``l = 0``: ``h_{-1/2} w``;
    * V-Whittaker with ``psi(d_2m) = psi(d_{2m-1}) = 0``: ``d_{m-1} w``;
    * ``Omega(lambda, 0, 0)``: ``t``;
    * tensors: ``t (x) w`` or ``1 (x) (right seed)``.
    """
    from ..liealg.whittaker import WhittakerFunctionD, WhittakerFunctionH, WhittakerFunctionV
    from .criteria import criterion_virasoro_whittaker, criterion_whittaker_D
    if isinstance(module, OmegaModule):
        return None if (module.alpha or module.beta) else module.basis(1)
    if isinstance(module, (LiftModule, TwistedModule)):
        s = designated_seed(module.inner)
        return None if s is None else Vector._raw(module, s.coords)
    if isinstance(module, SugawaraModule):
        return None
    if isinstance(module, TensorModule):
        ls, rs = designated_seed(module.left), designated_seed(module.right)
        if isinstance(module.left, OmegaModule) and ls is not None:
            return module.pure(ls, module.right.vacuum())
        if rs is not None:
            return module.pure(module.left.vacuum(), rs)
        if ls is not None:
            return module.pure(ls, module.right.vacuum())
        return None
    if isinstance(module, InducedModule):
        phi = module.phi
        if isinstance(phi, WhittakerFunctionH):
            return None if phi.l_value else module.basis((Generator("h", -1),))
        if isinstance(phi, WhittakerFunctionV):
            if phi.m < 1 or criterion_virasoro_whittaker(phi):
                return None
            return module.basis((Generator("d", phi.m - 1),))
        if isinstance(phi, WhittakerFunctionD):
            if phi.m < 1 or criterion_whittaker_D(phi):
                return None
            if not phi.l_value:
                return module.basis((Generator("h", -1),))
            return module.basis((Generator("d", phi.m - 1),)) - _sugawara_in(module, phi.m - 1)
    return None


def _sugawara_in(module, n):
    """``d^S_n w`` computed with the h-action of ``module`` itself."""
    from ..modops.modules import SugawaraModule
    sug = SugawaraModule(module.phi.restrict_heisenberg())
    image = sug.act(Generator("d", n), sug.vacuum())
    return Vector._raw(module, dict(image.coords))
