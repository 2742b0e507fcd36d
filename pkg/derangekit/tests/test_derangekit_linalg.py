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

import numpy as np

from derangekit import _linalg
from derangekit.errors import FieldError
from derangekit.field import field_build


__author__ = "yesudeep@google.com (Yesudeep Mangalapilly)"


GF5 = field_build(5, 1)
GF4 = field_build(2, 2)


class Test_products(unittest.TestCase):
  def test_mul_prime_field(self):
    a = _linalg.as_matrix(GF5, [[1, 2], [3, 4]])
    b = _linalg.as_matrix(GF5, [[0, 1], [1, 0]])
    self.assertEqual(_linalg.mul(GF5, a, b).tolist(), [[2, 1], [4, 3]])

  def test_mul_extension_field(self):
    gamma = GF4.gamma.value
    a = _linalg.scalar(2, gamma)
    product = _linalg.power(GF4, a, 3)
    self.assertEqual(product.tolist(), _linalg.identity(2).tolist())

  def test_power_negative(self):
    a = _linalg.as_matrix(GF5, [[1, 1], [0, 1]])
    self.assertEqual(_linalg.power(GF5, a, -1).tolist(), [[1, 4], [0, 1]])
    self.assertEqual(_linalg.power(GF5, a, 5).tolist(),
                     _linalg.identity(2).tolist())

  def test_kron(self):
    a = _linalg.as_matrix(GF5, [[0, 1], [1, 0]])
    result = _linalg.kron(GF5, a, _linalg.identity(2))
    self.assertEqual(result.shape, (4, 4))
    self.assertEqual(result[0].tolist(), [0, 0, 1, 0])
    self.assertEqual(result[3].tolist(), [0, 1, 0, 0])

  def test_as_matrix_FieldError(self):
    self.assertRaises(FieldError, _linalg.as_matrix, GF5, [[1, 2, 3]])


class Test_elimination(unittest.TestCase):
  def test_rank_and_nullspace(self):
    matrix = _linalg.as_matrix(GF5, [[1, 2, 3], [0, 1, 1], [1, 3, 4]])
    self.assertEqual(_linalg.rank(GF5, matrix), 2)
    basis = _linalg.nullspace(GF5, matrix)
    self.assertEqual(basis.shape, (1, 3))
    self.assertEqual((matrix.dot(basis[0]) % 5).tolist(), [0, 0, 0])
    self.assertFalse(_linalg.is_invertible(GF5, matrix))

  def test_inverse(self):
    matrix = _linalg.as_matrix(GF5, [[2, 1], [1, 1]])
    inverse = _linalg.inverse(GF5, matrix)
    self.assertEqual(_linalg.mul(GF5, matrix, inverse).tolist(),
                     _linalg.identity(2).tolist())

  def test_inverse_FieldError_when_singular(self):
    self.assertRaises(FieldError, _linalg.inverse, GF5,
                      _linalg.as_matrix(GF5, [[1, 2], [2, 4]]))

  def test_determinant(self):
    self.assertEqual(_linalg.determinant(
        GF5, _linalg.as_matrix(GF5, [[2, 1], [1, 1]])), 1)
    self.assertEqual(_linalg.determinant(
        GF5, _linalg.as_matrix(GF5, [[0, 1], [1, 0]])), 4)
    self.assertEqual(_linalg.determinant(
        GF5, _linalg.as_matrix(GF5, [[1, 2], [2, 4]])), 0)


class Test_vectors(unittest.TestCase):
  def test_all_vectors_encoding(self):
    coords = _linalg.all_vectors(GF5, 2)
    self.assertEqual(coords.shape, (25, 2))
    self.assertEqual(coords[7].tolist(), [2, 1])
    self.assertEqual(_linalg.encode_vectors(GF5, coords).tolist(),
                     list(range(25)))

  def test_matrix_permutation(self):
    swap = _linalg.as_matrix(GF5, [[0, 1], [1, 0]])
    images = _linalg.matrix_permutation(GF5, swap)
    self.assertEqual(sorted(images.tolist()), list(range(25)))
    self.assertEqual(images[7], 11)

  def test_normalize_projective(self):
    coords = np.array([[0, 3], [2, 4]], dtype=np.int64)
    self.assertEqual(_linalg.normalize_projective(GF5, coords).tolist(),
                     [[0, 1], [1, 2]])

  def test_frobenius_array(self):
    values = np.arange(4, dtype=np.int64)
    once = _linalg.frobenius_array(GF4, values)
    self.assertEqual(once.tolist(),
                     [GF4.power(int(v), 2) for v in values])
    self.assertEqual(_linalg.frobenius_array(GF4, values, 2).tolist(),
                     values.tolist())
