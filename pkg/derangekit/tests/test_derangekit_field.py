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

from derangekit import field
from derangekit.errors import FieldError
from derangekit.field import field_build


__author__ = "yesudeep@google.com (Yesudeep Mangalapilly)"


SMALL_FIELDS = [(2, 1), (3, 1), (2, 2), (2, 3), (3, 2), (5, 2), (2, 4)]


class Test_field_build(unittest.TestCase):
  def test_cached(self):
    self.assertTrue(field_build(3, 2) is field_build(3, 2))

  def test_FieldError_when_not_prime(self):
    self.assertRaises(FieldError, field_build, 4, 1)
    self.assertRaises(FieldError, field_build, 1, 3)

  def test_FieldError_when_bad_degree(self):
    self.assertRaises(FieldError, field_build, 2, 0)

  def test_FieldError_when_too_large(self):
    self.assertRaises(FieldError, field_build, 2, 33)

  def test_conway_free_choice_is_smallest_irreducible(self):
    self.assertEqual(field_build(2, 2).polynomial, (1, 1, 1))
    self.assertEqual(field_build(3, 2).polynomial, (1, 0, 1))
    self.assertEqual(field_build(2, 3).polynomial, (1, 0, 1, 1))


class Test_is_irreducible(unittest.TestCase):
  def test_irreducible(self):
    self.assertTrue(field.is_irreducible([1, 1, 1], 2))
    self.assertTrue(field.is_irreducible([2, 0, 1], 5))

  def test_reducible(self):
    self.assertFalse(field.is_irreducible([1, 0, 1], 2))
    self.assertFalse(field.is_irreducible([1, 0, 1], 5))
    self.assertFalse(field.is_irreducible([1], 5))


class Test_arithmetic(unittest.TestCase):
  def test_inverses(self):
    for prime, degree in SMALL_FIELDS:
      gf = field_build(prime, degree)
      for value in range(1, gf.order):
        self.assertEqual(gf.mul(value, gf.inv(value)), 1)

  def test_additive_inverse(self):
    for prime, degree in SMALL_FIELDS:
      gf = field_build(prime, degree)
      for value in range(gf.order):
        self.assertEqual(gf.add(value, gf.neg(value)), 0)

  def test_distributive(self):
    gf = field_build(3, 2)
    for a in range(gf.order):
      for b in range(gf.order):
        for c in range(gf.order):
          self.assertEqual(gf.mul(a, gf.add(b, c)),
                           gf.add(gf.mul(a, b), gf.mul(a, c)))

  def test_gamma_is_primitive(self):
    for prime, degree in SMALL_FIELDS:
      gf = field_build(prime, degree)
      self.assertEqual(gf.gamma.minimal_order(), gf.order - 1)

  def test_log_exp(self):
    gf = field_build(5, 2)
    for value in range(1, gf.order):
      self.assertEqual(gf.exp(gf.log(value)).value, value)

  def test_FieldError_on_zero(self):
    gf = field_build(3, 2)
    self.assertRaises(FieldError, gf.inv, 0)
    self.assertRaises(FieldError, gf.log, 0)
    self.assertRaises(FieldError, gf.multiplicative_order, 0)

  def test_without_tables(self):
    gf = field_build(257, 2)
    self.assertRaises(FieldError, gf.digits_array, [1, 2])
    value = 12345
    self.assertEqual(gf.mul(value, gf.inv(value)), 1)
    self.assertEqual(gf.power(value, gf.order - 1), 1)


class Test_structure(unittest.TestCase):
  def test_frobenius_is_multiplicative(self):
    gf = field_build(2, 4)
    for a in gf.elements():
      for b in gf.elements():
        self.assertEqual((a * b).frobenius(), a.frobenius() * b.frobenius())

  def test_frobenius_has_order_k(self):
    gf = field_build(3, 2)
    for a in gf.elements():
      self.assertEqual(a.frobenius(2), a)

  def test_trace_is_balanced(self):
    gf = field_build(3, 2)
    traces = [gf.trace(a) for a in gf.elements()]
    for digit in range(3):
      self.assertEqual(traces.count(digit), 3)

  def test_norm_lands_in_prime_field(self):
    gf = field_build(5, 2)
    for a in range(1, gf.order):
      self.assertTrue(0 < gf.norm(a) < 5)

  def test_sqrt(self):
    gf = field_build(3, 2)
    squares = 0
    for a in gf.elements()[1:]:
      root = gf.sqrt(a)
      if root is not None:
        squares += 1
        self.assertEqual(root * root, a)
    self.assertEqual(squares, 4)

  def test_sqrt_char2_always_exists(self):
    gf = field_build(2, 3)
    for a in gf.elements():
      root = gf.sqrt(a)
      self.assertEqual(root * root, a)


class Test_FieldElem(unittest.TestCase):
  def test_operators(self):
    gf = field_build(5, 1)
    a, b = gf.elem(3), gf.elem(4)
    self.assertEqual(a + b, 2)
    self.assertEqual(a - b, 4)
    self.assertEqual(a * b, 2)
    self.assertEqual(a / b, 2)
    self.assertEqual(a ** 4, 1)
    self.assertEqual(1 - a, 3)

  def test_FieldError_when_mixing_fields(self):
    a = field_build(2, 2).elem(1)
    b = field_build(2, 3).elem(1)
    self.assertRaises(FieldError, lambda: a + b)

  def test_FieldError_when_out_of_range(self):
    self.assertRaises(FieldError, field_build(2, 2).elem, 4)


class Test_projective_line_image(unittest.TestCase):
  def test_identity(self):
    gf = field_build(2, 3)
    self.assertEqual(field.projective_line_image(gf, (1, 0, 0, 1)),
                     list(range(field.projective_line_points(gf))))

  def test_inversion_swaps_zero_and_infinity(self):
    gf = field_build(3, 2)
    images = field.projective_line_image(gf, (0, 1, 1, 0))
    self.assertEqual(images[0], gf.order)
    self.assertEqual(images[gf.order], 0)
    self.assertEqual(sorted(images), list(range(gf.order + 1)))

  def test_twist_fixes_prime_field(self):
    gf = field_build(2, 3)
    images = field.projective_line_image(gf, (1, 0, 0, 1), twist=1)
    self.assertEqual(images[0], 0)
    self.assertEqual(images[1], 1)
    self.assertEqual(images[gf.order], gf.order)
    self.assertNotEqual(images, list(range(gf.order + 1)))
