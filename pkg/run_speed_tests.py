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

"""Times the hot kernels: stores, class tables, kappa and characters.

Groups are rebuilt inside each statement so that nothing cached on a group
survives between loops.
"""

from __future__ import absolute_import
from __future__ import print_function

import sys

from derangekit.tests.speed import report


IMPORTS = ("from derangekit import arith, chars, constructors, derangements; "
           "from derangekit import _affine")

BENCHMARKS = [
    ("store A7", "constructors.alternating(7).store"),
    ("classes M10", "constructors.m10().classes"),
    None,
    ("kappa AGL1(32), affine path",
     "derangements.kappa(constructors.agl1(2, 5))"),
    ("kappa AGL1(32), generic path",
     "g = constructors.agl1(2, 5); "
     "derangements.kappa(g, g.point_stabilizer(0))"),
    ("kappa 2^4:Sp4(2)",
     "derangements.kappa(constructors.affine_symplectic(2, 4))"),
    ("kappa L2(8):3 on 28 points",
     "g = constructors.pgammal2(2, 3); "
     "derangements.kappa(g, g.normalizer(g.sylow(3)))"),
    None,
    ("character table S6", "chars.character_table(constructors.symmetric(6))"),
    ("character table L2(16)", "chars.character_table(constructors.psl2(16))"),
    None,
    ("pow_mod", "arith.pow_mod(3, 10 ** 40, 2 ** 127 - 1)"),
    ("_pure_pow_mod", "arith._pure_pow_mod(3, 10 ** 40, 2 ** 127 - 1)"),
    ("smallest_prime_congruent_one",
     "arith.smallest_prime_congruent_one(27720, 10 ** 4)"),
]


def main(benchmarks):
  print("Python %s" % sys.version)
  for benchmark in benchmarks:
    if benchmark is None:
      print("")
    else:
      label, statement = benchmark
      report(label, statement, IMPORTS)
  print("\n%s" % ("-" * 100))

if __name__ == "__main__":
  main(BENCHMARKS)
