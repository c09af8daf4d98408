"""
hodgefl is an exact-arithmetic workbench for Fourier-Laplace transforms of
monodromic modules with Hodge and weight filtrations, the microlocal
comparison map between the graph embedding and the microlocal module, and
GKZ system construction.

 :copyright: hodgefl Developers, see AUTHORS
 :license: MIT License, see LICENSE
"""

__version__ = '0.1'
