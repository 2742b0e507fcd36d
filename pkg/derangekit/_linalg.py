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

"""Dense matrices over finite fields, stored as int64 arrays of encodings.

Matrices act on column vectors. Vectors of GF(q)^d are encoded as the point
``v_0 + v_1 q + ... + v_{d-1} q^{d-1}``.
"""

from __future__ import absolute_import
from __future__ import division

import numpy as np

from derangekit.errors import FieldError


__author__ = "yesudeep@google.com (Yesudeep Mangalapilly)"


def as_matrix(field, rows):
  """Coerces nested rows of ints or field elements to an encoding array."""
  matrix = np.array([[int(entry) % field.order if field.k == 1 else int(entry)
                      for entry in row] for row in rows], dtype=np.int64)
  if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
    raise FieldError("matrix must be square, got shape %r" % (matrix.shape,))
  return matrix


def identity(dim):
  return np.eye(dim, dtype=np.int64)


def scalar(dim, value):
  return np.eye(dim, dtype=np.int64) * int(value)


def mul(field, mat_a, mat_b):
  """Matrix product over ``field``."""
  mat_a = np.asarray(mat_a, dtype=np.int64)
  mat_b = np.asarray(mat_b, dtype=np.int64)
  if field.k == 1:
    return mat_a.dot(mat_b) % field.p
  products = field.mul_array(mat_a[:, :, None], mat_b[None, :, :])
  return field.sum_array(products, axis=1)


def add(field, mat_a, mat_b):
  return field.add_array(mat_a, mat_b)


def power(field, matrix, exponent):
  result = identity(matrix.shape[0])
  base = np.array(matrix, dtype=np.int64)
  if exponent < 0:
    base = inverse(field, base)
    exponent = -exponent
  while exponent:
    if exponent & 1:
      result = mul(field, result, base)
    base = mul(field, base, base)
    exponent >>= 1
  return result


def kron(field, mat_a, mat_b):
  """Kronecker product over ``field``."""
  mat_a = np.asarray(mat_a, dtype=np.int64)
  mat_b = np.asarray(mat_b, dtype=np.int64)
  rows_a, cols_a = mat_a.shape
  rows_b, cols_b = mat_b.shape
  blocks = field.mul_array(mat_a[:, None, :, None], mat_b[None, :, None, :])
  return blocks.reshape(rows_a * rows_b, cols_a * cols_b)


def echelon(field, matrix):
  """
  Reduced row echelon form.

  :returns:
      ``(reduced, pivot_columns)``.
  """
  rows = [[int(x) for x in row] for row in np.asarray(matrix)]
  n_rows = len(rows)
  n_cols = len(rows[0]) if rows else 0
  pivots = []
  row_index = 0
  for col in range(n_cols):
    pivot = None
    for i in range(row_index, n_rows):
      if rows[i][col]:
        pivot = i
        break
    if pivot is None:
      continue
    rows[row_index], rows[pivot] = rows[pivot], rows[row_index]
    inv_lead = field.inv(rows[row_index][col])
    rows[row_index] = [field.mul(inv_lead, x) for x in rows[row_index]]
    for i in range(n_rows):
      if i != row_index and rows[i][col]:
        factor = rows[i][col]
        rows[i] = [field.sub(x, field.mul(factor, y))
                   for x, y in zip(rows[i], rows[row_index])]
    pivots.append(col)
    row_index += 1
    if row_index == n_rows:
      break
  return np.array(rows, dtype=np.int64).reshape(n_rows, n_cols), pivots


def rank(field, matrix):
  return len(echelon(field, matrix)[1])


def nullspace(field, matrix):
  """Basis (rows) of the right null space ``{v : matrix v = 0}``."""
  matrix = np.asarray(matrix, dtype=np.int64)
  n_cols = matrix.shape[1]
  reduced, pivots = echelon(field, matrix)
  free = [c for c in range(n_cols) if c not in pivots]
  basis = []
  for free_col in free:
    vector = [0] * n_cols
    vector[free_col] = 1
    for row, pivot_col in enumerate(pivots):
      vector[pivot_col] = field.neg(int(reduced[row][free_col]))
    basis.append(vector)
  return np.array(basis, dtype=np.int64).reshape(len(basis), n_cols)


def inverse(field, matrix):
  """Inverse over ``field``; raises :class:`FieldError` when singular."""
  matrix = np.asarray(matrix, dtype=np.int64)
  dim = matrix.shape[0]
  augmented = np.hstack([matrix, identity(dim)])
  reduced, pivots = echelon(field, augmented)
  if pivots[:dim] != list(range(dim)) or len(pivots) < dim:
    raise FieldError("matrix is singular over %r" % field)
  return reduced[:, dim:]


def is_invertible(field, matrix):
  return rank(field, matrix) == np.asarray(matrix).shape[0]


def determinant(field, matrix):
  """Determinant by elimination."""
  rows = [[int(x) for x in row] for row in np.asarray(matrix)]
  dim = len(rows)
  det = 1
  for col in range(dim):
    pivot = None
    for i in range(col, dim):
      if rows[i][col]:
        pivot = i
        break
    if pivot is None:
      return 0
    if pivot != col:
      rows[col], rows[pivot] = rows[pivot], rows[col]
      det = field.neg(det)
    det = field.mul(det, rows[col][col])
    inv_lead = field.inv(rows[col][col])
    for i in range(col + 1, dim):
      if rows[i][col]:
        factor = field.mul(rows[i][col], inv_lead)
        rows[i] = [field.sub(x, field.mul(factor, y))
                   for x, y in zip(rows[i], rows[col])]
  return det


def all_vectors(field, dim):
  """Array ``(q**dim, dim)`` of coordinates, row ``v`` encoding point ``v``."""
  codes = np.arange(field.order ** dim, dtype=np.int64)
  coords = np.zeros((codes.size, dim), dtype=np.int64)
  for i in range(dim):
    codes, coords[:, i] = np.divmod(codes, field.order)
  return coords


def encode_vectors(field, coords):
  weights = np.array([field.order ** i for i in range(coords.shape[-1])],
                     dtype=np.int64)
  return np.asarray(coords, dtype=np.int64).dot(weights)


def frobenius_array(field, values, times=1):
  """Applies ``x -> x**(p**times)`` entrywise."""
  values = np.asarray(values, dtype=np.int64)
  if field.k == 1 or not times % field.k:
    return values
  field._require_tables()
  exponent = field.p ** (times % field.k)
  logs = (field._log[values] * exponent) % (field.order - 1)
  return np.where(values == 0, 0, field._exp[logs])


def apply_to_vectors(field, matrix, coords):
  """Images ``M v`` for every row ``v`` of ``coords``."""
  matrix = np.asarray(matrix, dtype=np.int64)
  coords = np.asarray(coords, dtype=np.int64)
  if field.k == 1:
    return coords.dot(matrix.T) % field.p
  products = field.mul_array(matrix[None, :, :], coords[:, None, :])
  return field.sum_array(products, axis=2)


def normalize_projective(field, coords):
  """Scales each nonzero row so that its first nonzero entry is 1."""
  coords = np.asarray(coords, dtype=np.int64)
  nonzero = coords != 0
  first = np.argmax(nonzero, axis=1)
  leads = coords[np.arange(coords.shape[0]), first]
  if field.k == 1:
    inverses = np.array(
        [field.inv(int(x)) if x else 0 for x in range(field.p)],
        dtype=np.int64)
  else:
    field._require_tables()
    inverses = np.zeros(field.order, dtype=np.int64)
    inverses[1:] = field._exp[(-field._log[1:]) % (field.order - 1)]
  return field.mul_array(coords, inverses[leads][:, None])


def matrix_permutation(field, matrix, twist=0):
  """
  The permutation of GF(q)^d induced by ``v -> M v^(p**twist)``.

  :returns:
      int64 array of images indexed by point encoding.
  """
  matrix = np.asarray(matrix, dtype=np.int64)
  coords = all_vectors(field, matrix.shape[0])
  if twist:
    coords = frobenius_array(field, coords, twist)
  return encode_vectors(field, apply_to_vectors(field, matrix, coords))
