"""
This file is part of pcollect which is released under MIT.
See file LICENSE.txt for full license details.
"""


import os
from setuptools import find_packages, setup


# Custom environment variable to disable extension building.
PURE_PY_ENV_VAR = 'PURE_PY_DIST'

# Modules compiled when extensions are enabled.
EXTENSION_MODULES = (
    'pcollect.collection',
    'pcollect.lefschetz',
    'pcollect.utility',
    'pcollect.group.perm',
    'pcollect.group.handle',
    'pcollect.group.search',
    'pcollect.topology.certificate',
    'pcollect.topology.homology',
    'pcollect.topology.poset',
    'pcollect.topology.quotient',
    'pcollect.pipeline.stage',
    'pcollect.pipeline.verifier',
    )


# Package building parameters.
setup_info = dict(
    name='pcollect',
    use_scm_version=True,
    setup_requires=['setuptools_scm', 'cython',],
    install_requires=['sympy>=1.12', 'networkx>=2.6',],
    extras_require={'test': ['pytest>=7',],},
    python_requires='>=3.8',
    description=(
        'Distinguished collections of p-subgroups, their posets, '
        'homology and Lefschetz class functions'
        ),
    long_description_content_type='text/markdown',
    url='https://github.com/Foxbud/pcollect',
    author='Garrett Fairburn',
    author_email='garrett@fairburn.dev',
    license='MIT',
    packages=find_packages(exclude=['tests',]),
    entry_points={
        'console_scripts': ['pcollect = pcollect.cli:main',],
        },
    classifiers=[
        'Programming Language :: Python :: 3',
        'License :: OSI Approved :: MIT License',
        'Operating System :: OS Independent',
        'Environment :: Console',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Natural Language :: English',
        ],
    )


# Load README.
with open('README.md', 'r') as f_in:
  setup_info['long_description'] = f_in.read()


# Only cythonize extensions if not disabled.
if PURE_PY_ENV_VAR not in os.environ:
  from setuptools import Extension

  setup_info['ext_modules'] = [
      Extension(
        module,
        sources=[module.replace('.', '/') + '.py',],
        extra_compile_args=['-O1',]
        )
      for module
      in EXTENSION_MODULES
      ]


setup(**setup_info)
