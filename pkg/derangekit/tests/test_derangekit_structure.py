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

from __future__ import absolute_import

import unittest

from derangekit import catalog
from derangekit import constructors
from derangekit import engine
from derangekit import structure
from derangekit.errors import ActionError
from derangekit.tests import constants


__author__ = "yesudeep@google.com (Yesudeep Mangalapilly)"


S4 = constructors.symmetric(4)
A5 = constructors.alternating(5)
D8 = constructors.dihedral(4)
D10 = constructors.dihedral(5)


def _entry(name):
  return catalog.catalog_entry(name, constants.DATA_DIR)


def _trivial(group):
  return engine.group_from_generators(group.degree, [])


class Test_classify_unique_vanishing(unittest.TestCase):
  def test_frobenius_index_two(self):
    entry = _entry("D10")
    case = structure.classify_unique_vanishing(entry.group, entry.sub("Z5"))
    self.assertEqual(case.tag, structure.FROBENIUS_INDEX2_ABELIAN_ODD)
    self.assertEqual(case.n_order, 5)
    self.assertTrue(case.side("equals_derived"))

  def test_frobenius_quotient_p_group(self):
    group = _entry("AGL1_8").group
    case = structure.classify_unique_vanishing(group,
                                               group.point_stabilizer(0))
    self.assertEqual(case.tag, structure.FROB_QUOTIENT_c)
    self.assertEqual((case.p, case.n), (2, 3))
    self.assertEqual(case.m_order, 8)

  def test_a5(self):
    entry = _entry("A5")
    case = structure.classify_unique_vanishing(entry.group, entry.sub("D10"))
    self.assertEqual(case.tag, structure.A5_CASE)
    self.assertTrue(case.side("centralizer_is_cyclic_3"))
    self.assertRaises(KeyError, case.side, "missing")

  def test_l2_8(self):
    entry = _entry("L2_8.3")
    case = structure.classify_unique_vanishing(entry.group,
                                               entry.sub("D18_3"))
    self.assertEqual(case.tag, structure.L28_CASE)
    self.assertEqual(case.n_order, 1)

  def test_none_when_two_classes(self):
    entry = _entry("S5")
    case = structure.classify_unique_vanishing(entry.group, entry.sub("S4"))
    self.assertEqual(case.tag, structure.NONE)


class Test_frobenius(unittest.TestCase):
  def test_kernel(self):
    self.assertEqual(structure.frobenius_kernel(D10).order(), 5)
    self.assertEqual(structure.frobenius_kernel(constructors.agl1(2, 3))
                     .order(), 8)
    self.assertEqual(structure.frobenius_kernel(S4), None)

  def test_delta_in_translations(self):
    group = constructors.agl1(5)
    found = structure.frobenius_iff_delta_in_N(group,
                                               group.translation_subgroup())
    self.assertTrue(found.frobenius)
    self.assertTrue(found.delta_in_n)

  def test_not_frobenius(self):
    klein = S4.derived_subgroup().derived_subgroup()
    found = structure.frobenius_iff_delta_in_N(S4, klein)
    self.assertFalse(found.frobenius)
    self.assertFalse(found.delta_in_n)
    self.assertTrue(found.agree)

  def test_ActionError_when_not_regular(self):
    self.assertRaises(ActionError, structure.frobenius_iff_delta_in_N, S4,
                      S4.derived_subgroup())

  def test_is_frobenius_with_kernel(self):
    rotations = D10.subgroup([D10.gens[0]])
    self.assertTrue(structure.is_frobenius_with_kernel(D10, rotations))
    self.assertFalse(structure.is_frobenius_with_kernel(
        S4, S4.derived_subgroup()))


class Test_camina(unittest.TestCase):
  def test_frobenius_kernel_is_camina(self):
    rotations = D10.subgroup([D10.gens[0]])
    self.assertTrue(structure.is_camina_pair(D10, rotations))

  def test_extraspecial_groups(self):
    self.assertTrue(structure.is_camina_group(D8))
    self.assertTrue(structure.is_camina_group(constructors.q8_on_vectors()))
    self.assertTrue(structure.is_camina_group(constructors.heisenberg(3)))

  def test_not_camina(self):
    self.assertFalse(structure.is_camina_pair(S4, S4.derived_subgroup()))
    self.assertFalse(structure.is_camina_group(A5))

  def test_ActionError_when_not_normal(self):
    self.assertRaises(ActionError, structure.is_camina_pair, S4,
                      S4.point_stabilizer(0))


class Test_w_triple_verify(unittest.TestCase):
  def test_frobenius_point_stabilizer(self):
    kernel = structure.w_triple_verify(D10, D10.point_stabilizer(0),
                                       _trivial(D10))
    self.assertEqual(kernel.order(), 5)

  def test_not_a_triple(self):
    self.assertEqual(structure.w_triple_verify(S4, S4.point_stabilizer(0),
                                               _trivial(S4)), None)

  def test_ActionError_when_inner_not_normal(self):
    stabilizer = S4.point_stabilizer(0)
    inner = stabilizer.subgroup([[0, 2, 1, 3]])
    self.assertRaises(ActionError, structure.w_triple_verify, S4, stabilizer,
                      inner)


class Test_is_almost_simple(unittest.TestCase):
  def test_almost_simple(self):
    self.assertTrue(structure.is_almost_simple(A5))
    self.assertTrue(structure.is_almost_simple(constructors.symmetric(5)))

  def test_not_almost_simple(self):
    self.assertFalse(structure.is_almost_simple(S4))
    self.assertFalse(structure.is_almost_simple(D10))


class Test_reduction_check(unittest.TestCase):
  def test_sharply_2transitive(self):
    found = structure.reduction_check(_entry("AGL1_8").group)
    self.assertEqual(found.kappa, 1)
    self.assertTrue(found.sharply_2transitive)
    self.assertFalse(found.almost_simple)

  def test_almost_simple(self):
    found = structure.reduction_check(A5)
    self.assertEqual(found.kappa, 2)
    self.assertTrue(found.almost_simple)

  def test_ActionError_when_imprimitive(self):
    self.assertRaises(ActionError, structure.reduction_check, D8)


class Test_affine_lemma_checks(unittest.TestCase):
  def test_gl1_ext2(self):
    found = structure.affine_lemma_checks(constructors.gl1_ext2(3, 2))
    self.assertEqual(found.kappa, 2)
    self.assertEqual(found.stabilizer_order, 2)
    self.assertTrue(all(holds for _, holds in found.checks))

  def test_sylow_checks(self):
    found = structure.affine_lemma_checks(constructors.sl2_affine_char2(1))
    names = [name for name, _ in found.checks]
    self.assertTrue("commutator_proper" in names)
    self.assertTrue("sylow_shifts_derange" in names)

  def test_ActionError_when_frobenius(self):
    self.assertRaises(ActionError, structure.affine_lemma_checks,
                      constructors.agl1(5))


class Test_imprimitive_corollary_check(unittest.TestCase):
  def test_a5_on_cosets_of_z5(self):
    entry = _entry("A5")
    found = structure.imprimitive_corollary_check(entry.group,
                                                  entry.sub("Z5"))
    self.assertTrue(found.applies)
    self.assertEqual(found.kappa, 2)

  def test_primitive_action_does_not_apply(self):
    entry = _entry("A5")
    found = structure.imprimitive_corollary_check(entry.group,
                                                  entry.sub("D10"))
    self.assertFalse(found.applies)
