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

""":synopsis: Published values that regenerated tables must match.
:module: derangekit.goldens

Each golden table is a tuple of :class:`GoldenRow`. ``sub`` names a
subgroup file of the catalog entry ``group``; ``None`` means the group acts
on its own points. Rows with ``measure == "phi"`` compare the minimum of
kappa over the entry's maximal subgroups.

.. autoclass:: GoldenRow
.. autodata:: TABLES
.. autofunction:: golden_table
"""

from __future__ import absolute_import

import collections


__author__ = "yesudeep@google.com (Yesudeep Mangalapilly)"


__all__ = [
    "AFFINE_TABLE2",
    "AN_TABLE4",
    "GoldenRow",
    "HERING_ELIMINATIONS",
    "KAPPA_TABLE1",
    "M11_ROW",
    "PHI_SMALL",
    "TABLES",
    "golden_table",
    ]


GoldenRow = collections.namedtuple(
    "GoldenRow", ["label", "group", "sub", "measure", "expected", "slow"])


def _kappa(label, group, sub, expected, slow=False):
  return GoldenRow(label, group, sub, "kappa", expected, slow)


def _phi(label, group, expected, slow=False):
  return GoldenRow(label, group, None, "phi", expected, slow)


# Almost simple primitive groups with at most two classes of derangements.
KAPPA_TABLE1 = (
    _kappa("(A5, D10)", "A5", "D10", 1),
    _kappa("(L2(8):3, D18:3)", "L2_8.3", "D18_3", 1),
    _kappa("(A5, D6)", "A5", "D6", 2),
    _kappa("(A5, A4)", "A5", "A4", 2),
    _kappa("(S5, D12)", "S5", "D12", 2),
    _kappa("(S5, S4)", "S5", "S4", 2),
    _kappa("(A6, 3^2:4)", "A6", "E9_4", 2),
    _kappa("(A6, A5)", "A6", "A5", 2),
    _kappa("(S6, 3^2:D8)", "S6", "E9_D8", 2),
    _kappa("(M10, [16])", "M10", "P16", 2),
    _kappa("(L2(7), 7:3)", "L2_7", "F21", 2),
    _kappa("(L2(7), S4)", "L2_7", "S4", 2),
    _kappa("(L3(4), 2^4:A5)", "L3_4", "E16_A5", 2),
    _kappa("(2B2(8):3, 5:4x3)", "Sz8_3", "F20x3", 2),
    )

# Kappa for every maximal action of A5, S5, A6 and S6.
AN_TABLE4 = (
    _kappa("(A5, D10)", "A5", "D10", 1),
    _kappa("(A5, D6)", "A5", "D6", 2),
    _kappa("(A5, A4)", "A5", "A4", 2),
    _kappa("(S5, D12)", "S5", "D12", 2),
    _kappa("(S5, S4)", "S5", "S4", 2),
    _kappa("(A6, 3^2:4)", "A6", "E9_4", 2),
    _kappa("(A6, A5)", "A6", "A5", 2),
    _kappa("(S6, 3^2:D8)", "S6", "E9_D8", 2),
    _kappa("(S5, 5:4)", "S5", "F20", 3),
    _kappa("(A6, S4)", "A6", "S4", 3),
    _kappa("(S6, S4x2)", "S6", "S4x2", 3),
    _kappa("(S6, S5)", "S6", "S5", 4),
    )

# Affine 2-transitive groups with two classes of derangements.
AFFINE_TABLE2 = (
    _kappa("2^2:S3 = S4", "S4", None, 2),
    _kappa("5^2:(2^(1+2).6)", "P_25_17", None, 2),
    _kappa("11^2:(2^(1+2).[30])", "P_121_42", None, 2),
    _kappa("3^4:((2xQ8):2):5", "P_81_70", None, 2),
    _kappa("29^2:(7x2.SL2(5))", "P_841_104", None, 2),
    )

# Affine 2-transitive groups ruled out by their number of classes.
HERING_ELIMINATIONS = (
    _kappa("2^3:SL3(2)", "AGL3_2", None, 5, slow=True),
    _kappa("3^3:SL3(3)", "ASL3_3", None, 10, slow=True),
    _kappa("3^3:GL3(3)", "AGL3_3", None, 11, slow=True),
    _kappa("2^4:Sp4(2)", "ASp4_2", None, 10, slow=True),
    _kappa("3^4:Sp4(3)", "ASp4_3", None, 24, slow=True),
    _kappa("3^4:Sp4(3).2", "ASp4_3.2", None, 18, slow=True),
    _kappa("2^6:G2(2)'", "AG2_2d", None, 10, slow=True),
    _kappa("2^6:G2(2)", "AG2_2", None, 14, slow=True),
    _kappa("2^4:A6", "A2_4_A6", None, 5, slow=True),
    _kappa("2^4:A7", "A2_4_A7", None, 6, slow=True),
    _kappa("3^6:SL2(13)", "A3_6_SL2_13", None, 3, slow=True),
    )

M11_ROW = (
    _kappa("M10", "M11", "M10", 3),
    _kappa("L2(11)", "M11", "L2_11", 3),
    _kappa("M9.2", "M11", "M9_2", 3),
    _kappa("S5", "M11", "S5", 4),
    _kappa("2.S4", "M11", "2S4", 3),
    _phi("Phi(M11)", "M11", 3),
    )

PHI_SMALL = (
    _phi("Phi(A5)", "A5", 1),
    _phi("Phi(S5)", "S5", 2),
    _phi("Phi(M10)", "M10", 2),
    _phi("Phi(PGL2(9))", "PGL2_9", 4),
    _phi("Phi(Aut(A6))", "AutA6", 4),
    _kappa("(M10, 3^2:Q8)", "M10", "E9_Q8", 3),
    _kappa("(M10, 5:4)", "M10", "F20", 4),
    _phi("Phi(A7)", "A7", 3, slow=True),
    _phi("Phi(S7)", "S7", 4, slow=True),
    _phi("Phi(A8)", "A8", 5, slow=True),
    _phi("Phi(S8)", "S8", 5, slow=True),
    _phi("Phi(M12)", "M12", 5, slow=True),
    )

TABLES = collections.OrderedDict([
    ("kappa_table1", KAPPA_TABLE1),
    ("affine_table2", AFFINE_TABLE2),
    ("an_table4", AN_TABLE4),
    ("hering_eliminations", HERING_ELIMINATIONS),
    ("m11_row", M11_ROW),
    ("phi_small", PHI_SMALL),
    ])


def golden_table(table_id):
  """The rows of a golden table; raises :class:`KeyError` for unknown ids."""
  try:
    return TABLES[table_id]
  except KeyError:
    raise KeyError("unknown table %r; expected one of %s"
                   % (table_id, ", ".join(TABLES)))
