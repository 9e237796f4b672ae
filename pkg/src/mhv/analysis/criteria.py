"""Irreducibility and isomorphism criteria as exact predicates."""
from ..errors import HypothesisUnmet, UnsupportedM
from ..liealg.algebra import Generator


def _need_positive_m(m):
    if m < 1:
        raise UnsupportedM("the criterion is stated for m >= 1 (m = 0 is the Verma case)")


def criterion_whittaker_H(phi):
    """``W_phi`` over the twisted Heisenberg algebra is irreducible iff ``phi(l) != 0``."""
    return bool(phi.l_value)


def criterion_whittaker_D(phi):
    """Irreducibility of the D-Whittaker module ``W_phi`` (``m >= 1``).

    With ``phi(l) != 0``: ``phi(d_2m) != 0`` or ``2 phi(l) phi(d_{2m-1}) - phi(h_{m-1/2})^2 != 0``.
    With ``phi(l) = 0``: ``phi(h_{m-1/2}) != 0``.
    """
    m = phi.m
    _need_positive_m(m)
    top_h = phi.value(Generator("h", 2 * m - 1))
    if phi.l_value:
        return bool(phi.d(2 * m)) or bool(2 * phi.l_value * phi.d(2 * m - 1) - top_h ** 2)
    return bool(top_h)


def criterion_virasoro_whittaker(psi):
    """``(psi(d_2m), psi(d_{2m-1})) != (0, 0)``."""
    _need_positive_m(psi.m)
    return bool(psi.d(2 * psi.m)) or bool(psi.d(2 * psi.m - 1))


def _omega_params(p):
    if hasattr(p, "lambda0"):
        return p.lambda0, p.alpha, p.beta
    return tuple(p)


def criterion_omega(p):
    """``Omega(lambda, alpha, beta)`` is irreducible iff ``(alpha, beta) != (0, 0)``."""
    _, alpha, beta = _omega_params(p)
    return bool(alpha) or bool(beta)


def criterion_tensor(p, phi):
    """``Omega(lambda, alpha, beta) (x) W_phi`` is irreducible iff both factors are."""
    return criterion_whittaker_D(phi) and criterion_omega(p)


def iso_predicate_omega(p1, p2):
    """Equal generator actions: same ``lambda0^2``, same alpha, same ``beta * lambda0``."""
    l1, a1, b1 = _omega_params(p1)
    l2, a2, b2 = _omega_params(p2)
    return l1 * l1 == l2 * l2 and a1 == a2 and b1 * l1 == b2 * l2


def iso_predicate_tensor(p1, phi1, p2, phi2):
    """Isomorphism of irreducible ``Omega (x) W_phi`` modules.

    Whittaker factors are compared by ``(m, phi)`` equality, used as a stand-in
    for module isomorphism.
    """
    for phi in (phi1, phi2):
        if not criterion_whittaker_D(phi):
            raise HypothesisUnmet(f"W for {phi!r} is reducible")
    return iso_predicate_omega(p1, p2) and phi1 == phi2
