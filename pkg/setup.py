#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# Copyright 2011 Yesudeep Mangalapilly <yesudeep@gmail.com>
# Copyright 2012 Google Inc. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact computations with derangements of finite permutation groups:
classes of derangements, Frobenius and affine structure, Camina pairs and
character tables, with a catalog of named groups and the published tables
that the computations reproduce."""


from __future__ import absolute_import

import logging

from setuptools import setup


def gmpy_complain(version):
  logging.warning("gmpy2 speeds up modular arithmetic and primality tests. "
                  "Install it with the 'fast' extra if you work with large "
                  "moduli. Found %r." % (version,))

try:
  import gmpy2
except ImportError:
  gmpy2 = None
  gmpy_complain(None)


install_requires = [
    "numpy >=1.17",
    "scipy >=1.3",
    ]


setup(name="derangekit",
      version="0.1.0",
      license="Apache Software License 2.0",
      url="http://github.com/gorakhargosh/derangekit",
      description="Derangements and characters of finite permutation groups.",
      long_description=__doc__,
      author="Yesudeep Mangalapilly",
      author_email="yesudeep@google.com",
      zip_safe=False,
      platforms="any",
      packages=["derangekit", "derangekit.tests"],
      package_data={"derangekit": ["data/*/*"]},
      include_package_data=True,
      install_requires=install_requires,
      extras_require={
          "fast": ["gmpy2 >=2.0"],
          "oracle": ["sympy >=1.5"],
          },
      entry_points={
          "console_scripts": [
              "derangekit = derangekit.cli:main",
              ],
          },
      keywords=" ".join([
          "python",
          "group theory",
          "permutation groups",
          "derangements",
          "character tables",
          ]),
      classifiers=[
          "Development Status :: 4 - Beta",
          "Intended Audience :: Science/Research",
          "License :: OSI Approved :: Apache Software License",
          "Operating System :: OS Independent",
          "Programming Language :: Python :: 3",
          "Topic :: Scientific/Engineering :: Mathematics",
          ]
      )
