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

from derangekit import chars
from derangekit import constructors
from derangekit.engine import ActionStructure
from derangekit.errors import FieldError
from derangekit.field import field_build
from derangekit.tests import constants


__author__ = "yesudeep@google.com (Yesudeep Mangalapilly)"


class Test_field_of_order(unittest.TestCase):
  def test_specs(self):
    self.assertEqual(constructors.field_of_order(9).order, 9)
    self.assertEqual(constructors.field_of_order((2, 3)).order, 8)
    field = field_build(7, 1)
    self.assertTrue(constructors.field_of_order(field) is field)

  def test_FieldError(self):
    self.assertRaises(FieldError, constructors.field_of_order, 6)
    self.assertRaises(FieldError, constructors.field_of_order, 1)


class Test_small_families(unittest.TestCase):
  def test_orders(self):
    self.assertEqual(constructors.symmetric(5).order(), 120)
    self.assertEqual(constructors.symmetric(1).order(), 1)
    self.assertEqual(constructors.alternating(6).order(), 360)
    self.assertEqual(constructors.alternating(7).order(), 2520)
    self.assertEqual(constructors.cyclic(7).order(), 7)
    self.assertEqual(constructors.dihedral(5).order(), 10)

  def test_names(self):
    self.assertEqual(constructors.symmetric(4).name, "S4")
    self.assertEqual(constructors.dihedral(5).name, "D10")
    self.assertEqual(constructors.cyclic(3, name="Z3").name, "Z3")

  def test_heisenberg(self):
    group = constructors.heisenberg(3)
    self.assertEqual((group.degree, group.order()), (9, 27))
    self.assertFalse(group.is_abelian())
    self.assertEqual(group.center().order(), 3)

  def test_ValueError(self):
    self.assertRaises(ValueError, constructors.dihedral, 2)


class Test_matrix_gen_set(unittest.TestCase):
  def test_FieldError(self):
    field = field_build(3, 1)
    self.assertRaises(FieldError, constructors.matrix_gen_set, field, [])
    self.assertRaises(FieldError, constructors.matrix_gen_set, field,
                      [[[0]]])
    self.assertRaises(FieldError, constructors.matrix_gen_set, field,
                      [[[1]], [[1, 0], [0, 1]]])


class Test_affine(unittest.TestCase):
  def test_one_dimensional(self):
    self.assertEqual(constructors.agl1(5).order(), 20)
    self.assertEqual(constructors.agl1(2, 3).order(), 56)
    self.assertEqual(constructors.frobenius_half(7).order(), 21)
    self.assertEqual(constructors.gammaL1(2, 3).order(), 168)
    self.assertEqual(constructors.gl1_ext2(3, 2).order(), 144)

  def test_translations(self):
    group = constructors.agl1(2, 3)
    self.assertEqual((group.p, group.dim), (2, 3))
    self.assertEqual(group.translation_subgroup().order(), 8)
    self.assertEqual(group.linear_part.order(), 7)
    self.assertTrue(group.is_normal(group.translation_subgroup()))

  def test_frobenius(self):
    self.assertTrue(ActionStructure(constructors.agl1(7)).is_frobenius)
    self.assertTrue(
        ActionStructure(constructors.frobenius_half(7)).is_frobenius)
    self.assertFalse(
        ActionStructure(constructors.gl1_ext2(3, 2)).is_frobenius)

  def test_higher_dimension(self):
    self.assertEqual(constructors.affine_general_linear(2, 3).order(), 1344)
    self.assertEqual(constructors.affine_special_linear(3, 2).order(), 216)
    self.assertEqual(constructors.affine_symplectic(2, 4).order(), 11520)
    self.assertEqual(
        constructors.affine_symplectic(3, 2, similitudes=True).order(), 432)

  def test_sl2_affine_char2(self):
    group = constructors.sl2_affine_char2(1)
    self.assertEqual(group.order(), 24)
    self.assertEqual(group.fingerprint(),
                     constructors.symmetric(4).fingerprint())
    self.assertEqual(constructors.sl2_affine_char2(2).order(), 960)
    first, second = constructors.sl2_affine_witnesses(2)
    self.assertTrue(first.is_derangement() and second.is_derangement())

  def test_gamma_l1_subgroups(self):
    found = constructors.gamma_l1_subgroups(3, 2)
    orders = [group.linear_part.order() for _, group in found]
    self.assertTrue(16 in orders)
    self.assertTrue(8 in orders)
    self.assertTrue(all(16 % order == 0 for order in orders))
    self.assertEqual(found[0][0], (1, 1, 0))

  def test_ValueError(self):
    self.assertRaises(ValueError, constructors.frobenius_half, 2)
    self.assertRaises(ValueError, constructors.gl1_ext2, 3, 3)
    self.assertRaises(ValueError, constructors.affine_symplectic, 3, 3)
    self.assertRaises(ValueError, constructors.sl2_affine_char2, 0)
    self.assertRaises(ValueError, constructors.sl2_affine_char2, 5)


class Test_vector_actions(unittest.TestCase):
  def test_sl2_3(self):
    group = constructors.sl2_3_on_vectors()
    self.assertEqual((group.degree, group.order()), (8, 24))

  def test_q8(self):
    group = constructors.q8_on_vectors()
    self.assertEqual(group.order(), 8)
    self.assertTrue(ActionStructure(group).is_regular)
    self.assertEqual(sorted(chars.character_table(group).degrees),
                     constants.Q8_DEGREES)


class Test_projective(unittest.TestCase):
  def test_psl2(self):
    self.assertEqual(constructors.psl2(7).order(), 168)
    self.assertEqual(constructors.psl2(7).degree, 8)
    self.assertEqual(constructors.psl2(8).order(), 504)
    self.assertEqual(constructors.pgl2(5).order(), 120)
    self.assertEqual(constructors.pgammal2(2, 3).order(), 1512)
    self.assertEqual(constructors.pgammal2(9).order(), 1440)

  def test_m10(self):
    group = constructors.m10()
    self.assertEqual((group.degree, group.order()), (10, 720))
    self.assertTrue(ActionStructure(group).is_2transitive)
    self.assertFalse(ActionStructure(group).is_sharply_2transitive)

  def test_psl3(self):
    group = constructors.psl3_projective(2)
    self.assertEqual((group.degree, group.order()), (7, 168))

  def test_suzuki(self):
    group = constructors.suzuki_ovoid(8)
    self.assertEqual((group.degree, group.order()), (65, 29120))
    self.assertTrue(ActionStructure(group).is_2transitive)

  @unittest.skipUnless(constants.SLOW, constants.SLOW_REASON)
  def test_suzuki_with_automorphisms(self):
    group = constructors.suzuki_ovoid(8, with_field_automorphisms=True)
    self.assertEqual(group.order(), 87360)

  def test_ValueError(self):
    self.assertRaises(ValueError, constructors.suzuki_ovoid, 4)
    self.assertRaises(ValueError, constructors.suzuki_ovoid, 9)
