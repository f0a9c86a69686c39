#! /usr/bin/env python
from setuptools import setup
setup(
    version="0.3.0",
      author="pyhermitcodes developers",
      description="Improved one-point and two-point codes on Hermitian curves",
      long_description=\
"""
pyhermitcodes builds classical and Feng-Rao improved one-point and
two-point algebraic-geometry codes on Hermitian curves, computes their
coset, distance and redundancy bounds, and checks small codes with
exhaustive weight enumeration.
""",
    classifiers=[
        'Development Status :: 4 - Beta',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'Intended Audience :: Developers',
        'Intended Audience :: Education',
        'License :: OSI Approved :: GNU General Public License v3 (GPLv3)',
        'Operating System :: MacOS :: MacOS X',
        'Operating System :: Microsoft :: Windows',
        'Operating System :: POSIX',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics'
        ],
    license="GPL v3",
    name="pyhermitcodes",
    python_requires=">=3.8",
    install_requires=['numpy>=1.21', 'scipy>=1.7', 'galois>=0.3'],
    extras_require={'test': ['jsonschema>=4.0']},
    packages=["pyhermitcodes"],
    scripts = ["hermitcodes.py"],
    package_dir={'pyhermitcodes': 'pyhermitcodes'},
    package_data={'pyhermitcodes': ["schemas/*.json",
                                    "doc/_build/html/*.*",
                                    "doc/_build/html/_sources/*.*",
                                    "doc/_build/html/_static/*.*"],},
    )
