"""
Exact linear algebra over Q and Z: matrices, lattices, subspaces and
filtrations.

 :copyright: hodgefl Developers, see AUTHORS
 :license: MIT License, see LICENSE
"""
from hodgefl.linalg.matrices import (QMatrix, IntMatrix, DimensionMismatchError,
                                     NotInSpanError, rational, vector, rref)
from hodgefl.linalg.lattice import (smith_normal_form, hermite_normal_form,
                                    kernel_lattice, integer_solve, invariant_factors)
from hodgefl.linalg.subspace import (Subspace, span, subspace_sum, intersect, image,
                                     preimage, kernel, quotient_dim, restricted_map,
                                     quotient_map)
from hodgefl.linalg.filtration import Filtration, FiltrationError, monodromy_filtration

__all__ = [
    'QMatrix', 'IntMatrix', 'DimensionMismatchError', 'NotInSpanError', 'rational',
    'vector', 'rref',
    'smith_normal_form', 'hermite_normal_form', 'kernel_lattice', 'integer_solve',
    'invariant_factors',
    'Subspace', 'span', 'subspace_sum', 'intersect', 'image', 'preimage', 'kernel',
    'quotient_dim', 'restricted_map', 'quotient_map',
    'Filtration', 'FiltrationError', 'monodromy_filtration',
]
