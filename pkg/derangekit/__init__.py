#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
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

""":synopsis: Derangements in finite transitive permutation groups.
:module: derangekit

How many classes of derangements does an action have?
------------------------------------------------------
A derangement is an element of a transitive permutation group with no fixed
point. This library counts the conjugacy classes of derangements exactly,
for a group acting on its points or on the cosets of a subgroup, and checks
the structure theory around actions with one or two such classes.

Everything is exact: permutations are integer arrays, proportions are
:class:`fractions.Fraction` values and character values are cyclotomic
integers. Reports are plain dictionaries that render as JSON, text or CSV.

.. automodule:: derangekit.perm
.. automodule:: derangekit.engine
.. automodule:: derangekit.derangements
.. automodule:: derangekit.structure
.. automodule:: derangekit.constructors
.. automodule:: derangekit.catalog
.. automodule:: derangekit.chars
"""

import logging

__author__ = "yesudeep@google.com (Yesudeep Mangalapilly)"

__version__ = "0.1.0"

logging.getLogger(__name__).addHandler(logging.NullHandler())
