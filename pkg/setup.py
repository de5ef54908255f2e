#!/usr/bin/env python
from setuptools import setup
from io import open

# read the contents of the README file
with open('README.md', encoding="utf-8") as f:
    long_description = f.read()

setup(name='cratlas',
      version='0.1',
      description='cratlas: exact classification of compact homogeneous CR manifolds',
      long_description=long_description,
      long_description_content_type='text/markdown',
      author='The cratlas team',
      install_requires=['numpy', 'sympy', 'networkx'],
      packages=['cratlas'],
      scripts=['bin/CrAtlas.py'],
      test_suite='tests',
      tests_require=['pytest'],
      classifiers=[
          'Development Status :: 4 - Beta',
          'Intended Audience :: Science/Research',
          'License :: OSI Approved',
          'Operating System :: MacOS :: MacOS X',
          'Operating System :: POSIX :: Linux',
          'Programming Language :: Python :: 3',
          'Topic :: Scientific/Engineering :: Mathematics'
      ]
      )
