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

from derangekit import cyclotomic
from derangekit.cyclotomic import Cyclotomic


__author__ = "yesudeep@google.com (Yesudeep Mangalapilly)"


def zeta(order, exponent=1):
  coeffs = [0] * (exponent + 1)
  coeffs[exponent] = 1
  return Cyclotomic(order, coeffs)


class Test_cyclotomic_polynomial(unittest.TestCase):
  def test_small_orders(self):
    self.assertEqual(cyclotomic.cyclotomic_polynomial(1), (-1, 1))
    self.assertEqual(cyclotomic.cyclotomic_polynomial(2), (1, 1))
    self.assertEqual(cyclotomic.cyclotomic_polynomial(4), (1, 0, 1))
    self.assertEqual(cyclotomic.cyclotomic_polynomial(6), (1, -1, 1))
    self.assertEqual(cyclotomic.cyclotomic_polynomial(12), (1, 0, -1, 0, 1))

  def test_degree_is_totient(self):
    for order, totient in [(5, 4), (9, 6), (15, 8), (30, 8), (60, 16)]:
      self.assertEqual(len(cyclotomic.cyclotomic_polynomial(order)) - 1,
                       totient)

  def test_ValueError(self):
    self.assertRaises(ValueError, cyclotomic.cyclotomic_polynomial, 0)


class Test_Cyclotomic(unittest.TestCase):
  def test_sum_of_roots_is_zero(self):
    self.assertTrue(Cyclotomic(5, [1, 1, 1, 1, 1]).is_zero())
    self.assertTrue(Cyclotomic(7, [1] * 7).is_zero())

  def test_reduction(self):
    z3 = zeta(3)
    self.assertEqual(z3 * z3, -1 - z3)
    self.assertEqual(zeta(4) * zeta(4), -1)

  def test_power_wraps(self):
    self.assertEqual(zeta(5, 7), zeta(5, 2))
    self.assertEqual(zeta(5, 5), 1)

  def test_equality_across_conductors(self):
    self.assertEqual(zeta(3), zeta(6, 2))
    self.assertEqual(zeta(2), -1)
    self.assertNotEqual(zeta(3), zeta(6))

  def test_lift(self):
    lifted = zeta(3).lift(12)
    self.assertEqual(lifted.order, 12)
    self.assertEqual(lifted, zeta(12, 4))
    self.assertRaises(ValueError, zeta(3).lift, 10)

  def test_galois_and_conjugate(self):
    z5 = zeta(5)
    self.assertEqual(z5.galois(2), zeta(5, 2))
    self.assertEqual(z5.conjugate(), zeta(5, 4))
    self.assertEqual(z5 * z5.conjugate(), 1)
    self.assertRaises(ValueError, z5.galois, 5)

  def test_gauss_sum(self):
    root5 = zeta(5) + zeta(5, 4) - zeta(5, 2) - zeta(5, 3)
    self.assertFalse(root5.is_rational())
    self.assertEqual(root5 * root5, 5)
    self.assertEqual((root5 * root5).as_integer(), 5)

  def test_as_integer(self):
    self.assertEqual(Cyclotomic.integer(-3).as_integer(), -3)
    self.assertRaises(ValueError, zeta(3).as_integer)

  def test_to_complex(self):
    value = (zeta(4) + 2).to_complex()
    self.assertAlmostEqual(value.real, 2.0)
    self.assertAlmostEqual(value.imag, 1.0)

  def test_arithmetic_with_ints(self):
    z = zeta(7)
    self.assertEqual(z + 0, z)
    self.assertEqual(2 * z - z, z)
    self.assertEqual(1 - z, -(z - 1))

  def test_hash_of_rationals(self):
    self.assertEqual(hash(Cyclotomic(6, [4])), hash(4))
    self.assertEqual(len(set([Cyclotomic(6, [4]), Cyclotomic.integer(4)])),
                     1)

  def test_hash_ignores_the_ambient_field(self):
    z3 = zeta(3)
    lifts = [z3, z3.lift(6), z3.lift(12), z3.lift(30)]
    self.assertEqual(len(set(hash(x) for x in lifts)), 1)
    self.assertEqual(len(set(lifts)), 1)
    self.assertEqual(hash(zeta(6)), hash(-(z3 * z3)))
    self.assertEqual(hash(zeta(4).lift(12)), hash(zeta(4)))

  def test_hash_with_large_coefficients(self):
    big = Cyclotomic(5, [10 ** 12, 3])
    self.assertEqual(hash(big), hash(big.lift(15)))
    self.assertNotEqual(hash(big), hash(Cyclotomic(5, [10 ** 12, 4])))

  def test_conductor(self):
    self.assertEqual(Cyclotomic.integer(7, 12).conductor(), 1)
    self.assertEqual(zeta(3).lift(12).conductor(), 3)
    self.assertEqual(zeta(6).conductor(), 3)
    self.assertEqual(zeta(4).lift(20).conductor(), 4)
    self.assertEqual((zeta(5) + zeta(5, 4)).lift(15).conductor(), 5)


class Test_render(unittest.TestCase):
  def test_render(self):
    self.assertEqual(Cyclotomic(5, [-1, 2]).render(), "-1 + 2*z5")
    self.assertEqual(Cyclotomic(3, [0, -1]).render(), "-z3")
    self.assertEqual(Cyclotomic(5, [0, 1, -1]).render(), "z5 - z5^2")
    self.assertEqual(Cyclotomic.integer(3).render(), "3")
    self.assertEqual(Cyclotomic(7, []).render(), "0")

  def test_as_dict(self):
    self.assertEqual(Cyclotomic(3, [1]).as_dict(),
                     {"conductor": 3, "coefficients": [1, 0]})
