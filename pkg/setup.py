from a5verify import __version__
from setuptools import find_packages
from setuptools import setup

install_requires = ['PyYAML']

setup(
    name='a5verify',
    version=__version__,
    install_requires=install_requires,
    extras_require={
        'test': [
            'flake8',
            'flake8-builtins',
            'flake8-docstrings',
            'flake8-import-order',
            'pytest',
        ],
    },
    packages=find_packages(exclude=['test']),
    classifiers=['Intended Audience :: Science/Research',
                 'License :: OSI Approved :: Apache Software License',
                 'Programming Language :: Python',
                 'Topic :: Scientific/Engineering :: Mathematics'],
    description='a5verify reproduces the exact computations behind the '
                'A5 fixed point theorem.',
    long_description='\
a5verify checks representation moduli, quaternion lift Jacobians, Brown \
presentations, coset enumerations and equivariant homology with exact \
arithmetic in real quadratic towers.',
    license='Apache License, Version 2.0',
    entry_points={
        'console_scripts': [
            'a5v = a5verify.commands.a5v:main',
            'a5v-brown = a5verify.commands.brown:main',
            'a5v-complex = a5verify.commands.complex:main',
            'a5v-coset-enum = a5verify.commands.coset_enum:main',
            'a5v-exponent-matrix = a5verify.commands.exponent_matrix:main',
            'a5v-help = a5verify.commands.help:main',
            'a5v-jacobian = a5verify.commands.jacobian:main',
            'a5v-kernel-check = a5verify.commands.kernel_check:main',
            'a5v-solve-universal = a5verify.commands.solve_universal:main',
            'a5v-verify-moduli = a5verify.commands.verify_moduli:main',
            'a5v-word-identity = a5verify.commands.word_identity:main',
        ]
    }
)
