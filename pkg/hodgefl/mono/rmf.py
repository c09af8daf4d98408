"""
Relative monodromy filtrations.

Given a nilpotent ``N`` on ``V`` and an ``N``-stable increasing filtration
``L``, the relative monodromy filtration ``W`` satisfies ``N W_k ⊆ W_(k-2)``
and induces on every ``gr^L_j`` the monodromy filtration of ``N`` centered
at ``j``. It need not exist; when it does it is unique.

``W`` is built one level of ``L`` at a time. On ``gr^L_j`` the monodromy
filtration is known; a basis adapted to it is lifted to ``L_j`` and the
lifts are corrected by elements of ``L_(j-1)`` so that ``N`` lowers weights
by two. The corrections solve a linear system, which is inconsistent
exactly when no filtration exists.

 :copyright: hodgefl Developers, see AUTHORS
 :license: MIT License, see LICENSE
"""
import logging
from fractions import Fraction

from hodgefl.linalg import (QMatrix, Subspace, Filtration, image,
                            restricted_map, quotient_map, monodromy_filtration)
from hodgefl.linalg.matrices import combine, dot
from hodgefl.report import Report


log = logging.getLogger(__name__)


class RmfError(Exception):
    """
    Signals input that cannot carry a relative monodromy filtration.
    """
    pass


def _check_input(N, L):
    if N.rows != N.cols:
        raise RmfError('N must be square, got shape {0}'.format(N.shape))
    if L.ambient_dim != N.rows:
        raise RmfError('L filters Q^{0} but N acts on Q^{1}'.format(L.ambient_dim, N.rows))
    if not N.is_nilpotent():
        raise RmfError('N is not nilpotent')
    found = L.maps_into(N, L)
    if found is not None:
        raise RmfError('N does not preserve L_{0}'.format(found[0]))


def graded_piece(N, lower, upper):
    """
    ``N`` on ``upper / lower``.

    :returns: ``(N_gr, lift, inner)``; ``N_gr`` acts in the quotient
              coordinates of ``inner``, which is ``lower`` written in the
              echelon coordinates of ``upper``. ``lift`` takes quotient
              coordinates back to the ambient space.
    """
    n = N.rows
    inner = Subspace(upper.dim, [upper.coordinates(v) for v in lower.basis])
    N_gr = quotient_map(restricted_map(N, upper, upper), inner)

    def lift(q):
        return combine(inner.quotient_lift(q), upper.basis, n)

    return N_gr, lift, inner


def _adapted_basis(filtration):
    """
    A basis of the filtered space with a grade per vector, such that every
    level is spanned by the vectors of grade at most its index.
    """
    n = filtration.ambient_dim
    basis, current = [], Subspace.zero(n)
    for k, level in filtration.levels:
        for v in level.basis:
            if not current.contains_vector(v):
                basis.append((k, v))
                current = current + Subspace(n, [v])
    return basis


def _subtract(u, v):
    return tuple(a - b for a, b in zip(u, v))


def rmf(N, L, center=0):
    """
    The relative monodromy filtration of ``N`` with respect to ``L``.

    :param N: nilpotent endomorphism of ``Q^n``
    :type N: :class:`~hodgefl.linalg.QMatrix`
    :param L: ``N``-stable filtration of ``Q^n``
    :type L: :class:`~hodgefl.linalg.Filtration`
    :param center: added to every center ``j``
    :returns: the filtration or ``None`` if none exists
    :raises: :class:`RmfError` for invalid input
    """
    _check_input(N, L)
    n = N.rows
    graded = []
    lower = Subspace.zero(n)

    for j, upper in L.levels:
        N_gr, lift, _ = graded_piece(N, lower, upper)
        q = N_gr.rows
        basis = _adapted_basis(monodromy_filtration(N_gr, j + center))
        change = QMatrix.from_columns([g for _, g in basis], q).inverse()
        known = [v for _, v in graded]
        s = len(known)
        N_known = [N.apply(v) for v in known]

        equations, rhs = [], []
        for t, (grade, g) in enumerate(basis):
            allowed = Subspace(n, [v for k, v in graded if k <= grade - 2])
            image_coefficients = change.apply(N_gr.apply(g))
            defect = _subtract(N.apply(lift(g)), lift(N_gr.apply(g)))
            for c in allowed.annihilator():
                row = [Fraction(0)] * (q * s)
                for a in range(s):
                    row[t * s + a] += dot(c, N_known[a])
                    pairing = dot(c, known[a])
                    if pairing:
                        for h, coefficient in enumerate(image_coefficients):
                            row[h * s + a] -= coefficient * pairing
                equations.append(row)
                rhs.append(-dot(c, defect))

        if equations:
            x = QMatrix(equations, len(equations), q * s).solve(rhs)
            if x is None:
                log.info('no relative monodromy filtration: obstruction on gr^L_{0}'.format(j))
                return None
        else:
            x = (Fraction(0),) * (q * s)

        for t, (grade, g) in enumerate(basis):
            correction = combine(x[t * s:(t + 1) * s], known, n)
            graded.append((grade, tuple(a + b for a, b in zip(lift(g), correction))))
        lower = upper

    grades = sorted(set(k for k, _ in graded))
    if not grades:
        return Filtration.trivial(n)
    return Filtration(n, [(k, Subspace(n, [v for g, v in graded if g <= k])) for k in grades])


def check_rmf(N, L, W, center=0):
    """
    Verify that ``W`` is the relative monodromy filtration of ``N`` with
    respect to ``L``: ``N W_k ⊆ W_(k-2)``, and on every ``gr^L_j`` the map
    ``N^l: gr^W_(j+l) -> gr^W_(j-l)`` is an isomorphism for ``l >= 1``.
    """
    _check_input(N, L)
    report = Report('rmf', center=center)
    if W.ambient_dim != N.rows:
        raise RmfError('W filters Q^{0} but N acts on Q^{1}'.format(W.ambient_dim, N.rows))
    found = W.maps_into(N, W, -2)
    report.add('nilpotent-shift', found is None,
               {'level': found[0], 'vector': found[1]} if found else None)

    lower = Subspace.zero(N.rows)
    failures = []
    for j, upper in L.levels:
        N_gr, _, inner = graded_piece(N, lower, upper)
        W_gr = W.induced_on_sub(upper).induced_on_quotient(inner)
        c = j + center
        q = N_gr.rows
        for l in range(1, q + 1):
            top, top_below = W_gr.level(c + l), W_gr.level(c + l - 1)
            bottom, bottom_below = W_gr.level(c - l), W_gr.level(c - l - 1)
            same_dims = top.dim - top_below.dim == bottom.dim - bottom_below.dim
            onto = image(N_gr.power(l), top) + bottom_below == bottom
            if not (same_dims and onto):
                failures.append({'L': j, 'l': l, 'dims': [top.dim - top_below.dim,
                                                          bottom.dim - bottom_below.dim]})
        report.add('monodromy-on-gr.{0}'.format(j), W_gr == monodromy_filtration(N_gr, c))
        lower = upper
    report.add('hard-lefschetz-on-gr', not failures, failures or None)
    return report
