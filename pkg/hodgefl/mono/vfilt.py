"""
The V-filtration of a monodromic module along the origin.

For a monodromic module the V-filtration is read off from the eigenspaces:
``V^chi M`` is the sum of the ``M^lambda`` with ``lambda >= chi``.

 :copyright: hodgefl Developers, see AUTHORS
 :license: MIT License, see LICENSE
"""
import logging

from hodgefl.linalg import QMatrix, Subspace, image
from hodgefl.mono.module import validate
from hodgefl.report import Report
from hodgefl.weyl import WeylElement, v_degree, theta


log = logging.getLogger(__name__)


class VFiltration(object):
    """
    The decreasing filtration ``V^chi = sum_(lambda >= chi) M^lambda``,
    restricted to the window of the module.
    """

    def __init__(self, module):
        self.module = module

    def eigenvalues_from(self, chi):
        return [l for l in self.module.support() if l >= chi]

    def dim(self, chi):
        return sum(self.module.dim(l) for l in self.eigenvalues_from(chi))

    @property
    def jumps(self):
        """
        The eigenvalues at which ``V`` gets smaller, increasing.
        """
        return self.module.support()

    def graded_dims(self):
        return dict((chi, self.module.dim(chi)) for chi in self.jumps)

    def to_json(self):
        return {
            'jumps': [str(chi) for chi in self.jumps],
            'dims': dict((str(chi), self.dim(chi)) for chi in self.jumps),
        }


def _generator_degrees(r):
    degrees = {}
    for i in range(1, r + 1):
        degrees['z{0}'.format(i)] = v_degree(WeylElement.generator('z', i), 'z')
        degrees['dz{0}'.format(i)] = v_degree(WeylElement.generator('z', i, True), 'z')
    degrees['theta'] = v_degree(theta('z', r), 'z')
    return degrees


def v_filtration(M):
    """
    Compute ``V`` and check its defining properties on the window:

    - ``z_i V^chi ⊆ V^(chi+1)`` and ``dz_i V^chi ⊆ V^(chi-1)``, matching the
      ``V``-degrees of the generators;
    - ``gr_V^chi = M^chi`` is finite dimensional;
    - ``s + chi`` with ``s = -theta - r`` is nilpotent on ``gr_V^chi``;
    - ``sum z_i V^chi = V^(chi+1)`` from some eigenvalue on, as far as the
      window shows.

    :returns: ``(filtration, report)``
    """
    V = VFiltration(M)
    report = Report('v-filtration', r=M.r)

    degrees = _generator_degrees(M.r)
    report.add('generator-degrees',
               all(degrees['z{0}'.format(i)] == (1, 1) and degrees['dz{0}'.format(i)] == (-1, -1)
                   for i in range(1, M.r + 1)) and degrees['theta'] == (0, 0),
               degrees)

    moves = []
    for maps, step in ((M.zmaps, 1), (M.dmaps, -1)):
        for (i, chi), m in sorted(maps.items()):
            before, after = M.euler(chi), M.euler(chi + step)
            if before is None or after is None:
                continue
            shifted = before + QMatrix.scalar(M.dim(chi), step)
            if after * m != m * shifted:
                moves.append({'map': ('z' if step == 1 else 'dz') + str(i), 'eigenvalue': chi})
    report.add('compatibility', not moves, moves or None)

    structure = validate(M)
    report.add('nilpotency', all(c.passed for c in structure.checks if c.name == 'nilpotency'),
               [c.witness for c in structure.failures if c.name == 'nilpotency'] or None)

    surjective_from = None
    for chi in reversed(M.eigenvalues):
        target = chi + 1
        if not M.in_window(target):
            continue
        reached = Subspace.zero(M.dim(target))
        for i in range(1, M.r + 1):
            reached = reached + image(M.zmaps[(i, chi)], Subspace.full(M.dim(chi)))
        if not reached.is_full():
            break
        surjective_from = chi
    report.info['dims'] = V.graded_dims()
    report.info['surjective-from'] = surjective_from
    log.debug('V-filtration with jumps {0}'.format([str(chi) for chi in V.jumps]))
    return V, report
