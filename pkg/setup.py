from setuptools import setup
from hodgefl import __version__

setup(name='hodgefl',
        version=__version__,
        description='Exact checks for Fourier-Laplace transforms of monodromic modules',
        packages=['hodgefl', 'hodgefl.linalg', 'hodgefl.weyl', 'hodgefl.mono',
                  'hodgefl.tests'],
        package_data={'hodgefl.tests': ['data/*.json']},
        scripts=['bin/hodgefl'],
        install_requires=[
            'numpy',
            'sympy>=1.13',
            'argparse']
        )
