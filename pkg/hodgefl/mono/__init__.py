"""
Monodromic modules: validation, Fourier-Laplace transform, restriction to
the origin, relative monodromy filtrations and V-filtrations.

 :copyright: hodgefl Developers, see AUTHORS
 :license: MIT License, see LICENSE
"""
from hodgefl.mono.module import (MonodromicModule, FilteredSpace, ModuleError,
                                 UnsupportedError, validate, weight_truncation,
                                 direct_sum, external_product, extend_window,
                                 find_sign_intertwiner)
from hodgefl.mono.transform import (fl, tate_twist, antipode, fourier_inversion_check,
                                    hodge_transport_check)
from hodgefl.mono.restriction import (FilteredTwoTermComplex, restrict_shriek,
                                      restrict_star, check_fl_restriction, check_can_var)
from hodgefl.mono.rmf import RmfError, rmf, check_rmf
from hodgefl.mono.vfilt import VFiltration, v_filtration
from hodgefl.mono.corpus import czmodel, deltamodel, random_module, random_corpus

__all__ = [
    'MonodromicModule', 'FilteredSpace', 'ModuleError', 'UnsupportedError', 'validate',
    'weight_truncation', 'direct_sum', 'external_product', 'extend_window',
    'find_sign_intertwiner',
    'fl', 'tate_twist', 'antipode', 'fourier_inversion_check', 'hodge_transport_check',
    'FilteredTwoTermComplex', 'restrict_shriek', 'restrict_star', 'check_fl_restriction',
    'check_can_var',
    'RmfError', 'rmf', 'check_rmf',
    'VFiltration', 'v_filtration',
    'czmodel', 'deltamodel', 'random_module', 'random_corpus',
]
