"""
Weyl algebras with named variable groups.

 :copyright: hodgefl Developers, see AUTHORS
 :license: MIT License, see LICENSE
"""
from hodgefl.weyl.algebra import (WeylElement, Variable, WeylError, GROUPS, POSITION,
                                  DERIVATION, multiply, commutator, power,
                                  fl_automorphism, v_degree, theta, s_operator,
                                  euler_operator)
from hodgefl.weyl.grammar import ParseError, parse_element, format_element

__all__ = [
    'WeylElement', 'Variable', 'WeylError', 'GROUPS', 'POSITION', 'DERIVATION',
    'multiply', 'commutator', 'power', 'fl_automorphism', 'v_degree', 'theta',
    's_operator', 'euler_operator',
    'ParseError', 'parse_element', 'format_element',
]
