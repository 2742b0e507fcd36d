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

""":synopsis: Deterministic builders for permutation and affine groups.
:module: derangekit.constructors

Every builder returns a :class:`~derangekit.engine.PermGroup` (affine builders
return the :class:`~derangekit._affine.AffineGroup` subclass). Points of
``GF(q)^d`` use the encoding of :mod:`derangekit._linalg`; points of the
projective line are the field encodings with ``q`` standing for infinity.

Small families
--------------
.. autofunction:: symmetric
.. autofunction:: alternating
.. autofunction:: cyclic
.. autofunction:: dihedral
.. autofunction:: heisenberg

Matrix groups and affine groups
-------------------------------
.. autoclass:: MatrixGenSet
.. autofunction:: matrix_gen_set
.. autofunction:: matrix_group_on_vectors
.. autofunction:: affine_group
.. autofunction:: agl1
.. autofunction:: frobenius_half
.. autofunction:: gammaL1
.. autofunction:: gl1_ext2
.. autofunction:: gamma_l1_subgroups
.. autofunction:: affine_general_linear
.. autofunction:: affine_special_linear
.. autofunction:: affine_symplectic
.. autofunction:: sl2_affine_char2
.. autofunction:: sl2_affine_witnesses

Projective actions
------------------
.. autofunction:: psl2
.. autofunction:: pgl2
.. autofunction:: pgammal2
.. autofunction:: m10
.. autofunction:: psl3_projective
.. autofunction:: suzuki_ovoid
"""

from __future__ import absolute_import
from __future__ import division

import collections
import logging

import numpy as np

from derangekit import _linalg
from derangekit import arith
from derangekit._affine import AffineGroup
from derangekit._affine import translation
from derangekit.engine import PermGroup
from derangekit.errors import FieldError
from derangekit.errors import InternalError
from derangekit.field import FiniteField
from derangekit.field import field_build
from derangekit.field import projective_line_image
from derangekit.perm import Permutation


__author__ = "yesudeep@google.com (Yesudeep Mangalapilly)"


__all__ = [
    "MatrixGenSet",
    "affine_from_linear",
    "affine_general_linear",
    "affine_group",
    "affine_special_linear",
    "affine_symplectic",
    "agl1",
    "alternating",
    "cyclic",
    "dihedral",
    "field_of_order",
    "frobenius_half",
    "gammaL1",
    "gamma_l1_subgroups",
    "general_linear_generators",
    "gl1_ext2",
    "heisenberg",
    "m10",
    "matrix_gen_set",
    "matrix_group_on_vectors",
    "pgammal2",
    "pgl2",
    "psl2",
    "psl3_projective",
    "q8_on_vectors",
    "sl2_3_on_vectors",
    "sl2_affine_char2",
    "sl2_affine_witnesses",
    "special_linear_generators",
    "suzuki_ovoid",
    "symmetric",
    "symplectic_generators",
    ]


LOG = logging.getLogger(__name__)


def field_of_order(spec):
  """
  Resolves a field from a :class:`FiniteField`, a ``(p, k)`` pair or a
  prime power ``q``.
  """
  if isinstance(spec, FiniteField):
    return spec
  if isinstance(spec, tuple):
    return field_build(*spec)
  found = arith.is_prime_power(spec) if spec >= 2 else None
  if found is None:
    raise FieldError("%r is not a prime power" % (spec,))
  return field_build(*found)


# Small families.

def symmetric(degree, name=None):
  """``Sym(n)`` from a transposition and an n-cycle."""
  gens = []
  if degree >= 2:
    gens.append(Permutation.from_cycles([(0, 1)], degree))
  if degree >= 3:
    gens.append(Permutation.from_cycles([tuple(range(degree))], degree))
  return PermGroup(degree, gens, name=name or "S%d" % degree)


def alternating(degree, name=None):
  """``Alt(n)`` from ``(0 1 2)`` and a long even cycle."""
  gens = []
  if degree >= 3:
    gens.append(Permutation.from_cycles([(0, 1, 2)], degree))
  if degree >= 4:
    start = 0 if degree % 2 else 1
    gens.append(Permutation.from_cycles([tuple(range(start, degree))],
                                        degree))
  return PermGroup(degree, gens, name=name or "A%d" % degree)


def cyclic(degree, name=None):
  gens = []
  if degree >= 2:
    gens.append(Permutation.from_cycles([tuple(range(degree))], degree))
  return PermGroup(degree, gens, name=name or "C%d" % degree)


def dihedral(degree, name=None):
  """The dihedral group of order ``2n`` on the vertices of an n-gon."""
  if degree < 3:
    raise ValueError("dihedral groups need at least 3 points, got %d"
                     % degree)
  rotation = Permutation([(i + 1) % degree for i in range(degree)])
  reflection = Permutation([(-i) % degree for i in range(degree)])
  return PermGroup(degree, [rotation, reflection],
                   name=name or "D%d" % (2 * degree))


def heisenberg(prime, name=None):
  """
  Unitriangular ``3 x 3`` matrices over GF(p) acting on the affine plane;
  extraspecial of order ``p^3``.
  """
  points = prime * prime
  shift = [((code % prime + 1) % prime) + prime * (code // prime)
           for code in range(points)]
  shear = [(code % prime) + prime * ((code // prime + code % prime) % prime)
           for code in range(points)]
  return PermGroup(points, [shift, shear],
                   name=name or "%d^(1+2)" % prime)


# Matrix groups.

class MatrixGenSet(collections.namedtuple("MatrixGenSet",
                                          "field dim matrices twists")):
  """
  Invertible ``dim x dim`` matrices over ``field``; ``twists[i]`` applies
  ``x -> x^(p^twist)`` to coordinates before matrix ``i``.
  """


def matrix_gen_set(field, matrices, twists=None):
  """
  Validates matrices into a :class:`MatrixGenSet`.

  :raises FieldError:
      For a singular or non-square matrix.
  """
  field = field_of_order(field)
  arrays = [_linalg.as_matrix(field, m) for m in matrices]
  if not arrays:
    raise FieldError("a matrix generating set needs at least one matrix")
  dim = arrays[0].shape[0]
  for matrix in arrays:
    if matrix.shape != (dim, dim):
      raise FieldError("matrices of different sizes in one generating set")
    if not _linalg.is_invertible(field, matrix):
      raise FieldError("singular matrix %r over %r" % (matrix.tolist(),
                                                       field))
  twists = list(twists) if twists is not None else [0] * len(arrays)
  return MatrixGenSet(field, dim, arrays, twists)


def matrix_group_on_vectors(gen_set, name=None, cap=None, tier="core"):
  """The permutation image of a matrix group on the vectors of
  ``GF(q)^dim``."""
  field = gen_set.field
  gens = [Permutation(_linalg.matrix_permutation(field, matrix, twist),
                      check=False)
          for matrix, twist in zip(gen_set.matrices, gen_set.twists)]
  return PermGroup(field.order ** gen_set.dim, gens, name=name, cap=cap,
                   tier=tier)


def affine_from_linear(prime, dim, linear, name=None, tier="core"):
  """``V:H`` from the permutation image ``H`` of a group on GF(p)^dim."""
  translations = [translation(prime, dim, prime ** i) for i in range(dim)]
  return AffineGroup(prime, dim, linear, translations, name=name, tier=tier)


def affine_group(field, gen_set, include_translations=True, name=None,
                 tier="core"):
  """
  ``V:H`` acting on ``V = GF(q)^d`` with ``H`` generated by ``gen_set``.

  :param field:
      Field, ``(p, k)`` or ``q``; must match ``gen_set.field``.
  :returns:
      :class:`~derangekit._affine.AffineGroup`, or the linear part alone when
      ``include_translations`` is false.
  """
  field = field_of_order(field)
  if field is not gen_set.field:
    raise FieldError("generating set is over %r, not %r" % (gen_set.field,
                                                            field))
  linear = matrix_group_on_vectors(gen_set, tier=tier,
                                   name=name and "%s stabilizer" % name)
  if not include_translations:
    return linear
  return affine_from_linear(field.p, field.k * gen_set.dim, linear,
                            name=name, tier=tier)


def _elementary(field, dim, row, col, value):
  matrix = _linalg.identity(dim)
  matrix[row, col] = value
  return matrix


def special_linear_generators(field, dim):
  """Elementary transvections generating ``SL_dim(q)``."""
  basis = [field.p ** j for j in range(field.k)]
  gens = []
  for i in range(dim - 1):
    for value in basis:
      gens.append(_elementary(field, dim, i, i + 1, value))
      gens.append(_elementary(field, dim, i + 1, i, value))
  return gens


def general_linear_generators(field, dim):
  gens = special_linear_generators(field, dim)
  diagonal = _linalg.identity(dim)
  diagonal[0, 0] = field.gamma.value
  return gens + [diagonal]


def symplectic_form(field, dim):
  """``[[0, I], [-I, 0]]``."""
  half = dim // 2
  form = np.zeros((dim, dim), dtype=np.int64)
  for i in range(half):
    form[i, half + i] = 1
    form[half + i, i] = field.neg(1)
  return form


def symplectic_generators(field, dim, form=None):
  """
  The transvections ``v -> v + B(v, u) u``, one per projective point ``u``;
  they generate the isometry group of the alternating form ``B``.
  """
  if dim % 2:
    raise ValueError("symplectic groups need an even dimension, got %d" % dim)
  form = symplectic_form(field, dim) if form is None else np.asarray(form)
  vectors = _linalg.all_vectors(field, dim)
  points = np.unique(_linalg.encode_vectors(
      field, _linalg.normalize_projective(field, vectors[1:])))
  gens = []
  for code in points:
    vector = vectors[code]
    pairing = _linalg.apply_to_vectors(field, form, vector[None, :])[0]
    outer = field.mul_array(vector[:, None], pairing[None, :])
    gens.append(field.add_array(_linalg.identity(dim), outer))
  return gens


def agl1(prime, degree=1, name=None):
  """``AGL_1(p^k)``, sharply 2-transitive."""
  field = field_build(prime, degree)
  gens = matrix_gen_set(field, [[[field.gamma.value]]])
  return affine_group(field, gens, name=name or "AGL1(%d)" % field.order)


def frobenius_half(prime, degree=1, name=None):
  """``V:H`` with ``H`` the squares of ``GF(q)*``; Frobenius for odd q."""
  if prime == 2:
    raise ValueError("frobenius_half needs an odd characteristic")
  field = field_build(prime, degree)
  square = field.power(field.gamma.value, 2)
  gens = matrix_gen_set(field, [[[square]]])
  return affine_group(field, gens,
                      name=name or "%d:%d" % (field.order,
                                              (field.order - 1) // 2))


def gammaL1(prime, degree=1, name=None):
  """``AGammaL_1(p^k)``."""
  field = field_build(prime, degree)
  matrices = [[[field.gamma.value]]]
  twists = [0]
  if degree > 1:
    matrices.append([[1]])
    twists.append(1)
  gens = matrix_gen_set(field, matrices, twists)
  return affine_group(field, gens, name=name or "AGammaL1(%d)" % field.order)


def gl1_ext2(prime, degree, name=None):
  """``V:(GL_1(p^k).2)`` with the field automorphism of order 2."""
  if degree % 2:
    raise ValueError("gl1_ext2 needs an even degree, got %d" % degree)
  field = field_build(prime, degree)
  gens = matrix_gen_set(field, [[[field.gamma.value]], [[1]]],
                        [0, degree // 2])
  return affine_group(field, gens, name=name or "%d:GL1.2" % field.order)


def gamma_l1_subgroups(prime, degree):
  """
  Every subgroup ``H(d, e, s) = <a^d, a^s phi^(k/e)>`` of ``GammaL_1(p^k)``,
  where ``a`` multiplies by a primitive element and ``phi`` is the Frobenius
  map, as affine groups on ``p^k`` points. Duplicate subgroups are dropped.

  :returns:
      List of ``((d, e, s), group)``.
  """
  field = field_build(prime, degree)
  order = field.order - 1
  gamma = field.gamma.value
  found, seen = [], set()
  for step in arith.divisors(order):
    for ext in arith.divisors(degree):
      for shift in range(step if ext > 1 else 1):
        matrices = [[[field.power(gamma, step)]]]
        twists = [0]
        if ext > 1:
          matrices.append([[field.power(gamma, shift)]])
          twists.append(degree // ext)
        gens = matrix_gen_set(field, matrices, twists)
        group = affine_group(field, gens,
                             name="GammaL1(%d)[%d,%d,%d]" % (
                                 field.order, step, ext, shift))
        key = frozenset(row.tobytes()
                        for row in group.linear_part.store.elements)
        if key in seen:
          continue
        seen.add(key)
        found.append(((step, ext, shift), group))
  LOG.debug("%d subgroups of GammaL1(%d)", len(found), field.order)
  return found


def affine_general_linear(prime, dim, name=None):
  """``AGL_dim(p)``."""
  field = field_build(prime, 1)
  gens = matrix_gen_set(field, general_linear_generators(field, dim))
  return affine_group(field, gens,
                      name=name or "%d^%d:GL%d(%d)" % (prime, dim, dim, prime))


def affine_special_linear(prime, dim, degree=1, name=None):
  """``GF(q)^dim : SL_dim(q)`` with ``q = p^degree``."""
  field = field_build(prime, degree)
  gens = matrix_gen_set(field, special_linear_generators(field, dim))
  return affine_group(field, gens,
                      name=name or "%d^%d:SL%d(%d)" % (field.order, dim, dim,
                                                       field.order))


def affine_symplectic(prime, dim, similitudes=False, name=None, tier="core"):
  """
  ``p^dim : Sp_dim(p)``; with ``similitudes`` the linear part is extended by
  ``diag(1, .., 1, -1, .., -1)``, which scales the form by ``-1``.
  """
  field = field_build(prime, 1)
  matrices = symplectic_generators(field, dim)
  if similitudes and prime > 2:
    scale = _linalg.identity(dim)
    for i in range(dim // 2, dim):
      scale[i, i] = prime - 1
    matrices.append(scale)
  gens = matrix_gen_set(field, matrices)
  suffix = ".2" if similitudes else ""
  return affine_group(field, gens, tier=tier,
                      name=name or "%d^%d:Sp%d(%d)%s" % (prime, dim, dim,
                                                         prime, suffix))


def _embedded_plane_images(field, matrix):
  """Images of the points ``(x, y)`` under ``(1, x, y) -> M (1, x, y)``."""
  coords = _linalg.all_vectors(field, 2)
  homogeneous = np.hstack([np.ones((coords.shape[0], 1), dtype=np.int64),
                           coords])
  images = _linalg.apply_to_vectors(field, matrix, homogeneous)
  if (images[:, 0] != 1).any():
    raise FieldError("matrix does not fix the first coordinate")
  return Permutation(_linalg.encode_vectors(field, images[:, 1:]),
                     check=False)


def sl2_affine_char2(exponent, name=None):
  """
  ``q^2 : SL_2(q)`` for ``q = 2^m``, built from the lower block matrices
  ``[[1, 0, 0], [alpha, a, b], [beta, c, d]]`` of ``SL_3(q)`` acting on
  ``(1, x, y)``.
  """
  if not 1 <= exponent <= 4:
    raise ValueError("exponent must be in 1..4, got %d" % exponent)
  field = field_build(2, exponent)
  basis = [2 ** j for j in range(exponent)]
  linear, translations = [], []
  for value in basis:
    linear.append(_embedded_plane_images(
        field, [[1, 0, 0], [0, 1, value], [0, 0, 1]]))
    linear.append(_embedded_plane_images(
        field, [[1, 0, 0], [0, 1, 0], [0, value, 1]]))
    translations.append(_embedded_plane_images(
        field, [[1, 0, 0], [value, 1, 0], [0, 0, 1]]))
    translations.append(_embedded_plane_images(
        field, [[1, 0, 0], [0, 1, 0], [value, 0, 1]]))
  points = field.order ** 2
  label = name or "%d^2:SL2(%d)" % (field.order, field.order)
  return AffineGroup(2, 2 * exponent,
                     PermGroup(points, linear, name="SL2(%d)" % field.order),
                     translations, name=label)


def sl2_affine_witnesses(exponent):
  """
  The derangements ``z1`` and ``z2`` of :func:`sl2_affine_char2`:
  ``[[1,0,0],[1,1,0],[0,1,1]]`` and ``[[1,0,0],[g,1,0],[0,1,1]]`` with ``g``
  a primitive element.
  """
  field = field_build(2, exponent)
  gamma = field.gamma.value
  first = _embedded_plane_images(field, [[1, 0, 0], [1, 1, 0], [0, 1, 1]])
  second = _embedded_plane_images(field,
                                  [[1, 0, 0], [gamma, 1, 0], [0, 1, 1]])
  return first, second


# Reference groups on the nonzero vectors of GF(3)^2.

def _nonzero_vector_action(matrices, name):
  field = field_build(3, 1)
  gens = []
  for matrix in matrices:
    images = _linalg.matrix_permutation(field, _linalg.as_matrix(field,
                                                                 matrix))
    gens.append([int(images[code]) - 1 for code in range(1, 9)])
  return PermGroup(8, gens, name=name)


def sl2_3_on_vectors():
  """``SL_2(3)`` on the 8 nonzero vectors of ``GF(3)^2``."""
  return _nonzero_vector_action([[[1, 1], [0, 1]], [[1, 0], [1, 1]]],
                                "SL2(3)")


def q8_on_vectors():
  """The quaternion group, regular on the 8 nonzero vectors of ``GF(3)^2``."""
  return _nonzero_vector_action([[[0, 2], [1, 0]], [[1, 1], [1, 2]]], "Q8")


# Projective actions.

def _projective_line_group(field, entries, name):
  gens = [Permutation(projective_line_image(field, matrix, twist),
                      check=False)
          for matrix, twist in entries]
  return PermGroup(field.order + 1, gens, name=name)


def _psl2_entries(field):
  gamma = field.gamma.value
  minus_one = field.neg(1)
  return [((1, 1, 0, 1), 0),
          ((gamma, 0, 0, field.inv(gamma)), 0),
          ((0, minus_one, 1, 0), 0)]


def psl2(order, name=None):
  """``PSL_2(q)`` on the ``q + 1`` points of the projective line."""
  field = field_of_order(order)
  return _projective_line_group(field, _psl2_entries(field),
                                name or "L2(%d)" % field.order)


def pgl2(order, name=None):
  field = field_of_order(order)
  entries = _psl2_entries(field) + [((field.gamma.value, 0, 0, 1), 0)]
  return _projective_line_group(field, entries,
                                name or "PGL2(%d)" % field.order)


def pgammal2(order, degree=None, name=None):
  """``PGammaL_2(q)``; ``pgammal2(2, 3)`` is ``L2(8):3``."""
  field = field_of_order((order, degree) if degree else order)
  entries = _psl2_entries(field) + [((field.gamma.value, 0, 0, 1), 0)]
  if field.k > 1:
    entries.append(((1, 0, 0, 1), 1))
  return _projective_line_group(field, entries,
                                name or "PGammaL2(%d)" % field.order)


def m10(name=None):
  """``M_10 = PSL_2(9) . <x -> g x^3>`` on 10 points."""
  field = field_build(3, 2)
  entries = _psl2_entries(field) + [((field.gamma.value, 0, 0, 1), 1)]
  return _projective_line_group(field, entries, name or "M10")


def _projective_points(field, dim):
  vectors = _linalg.all_vectors(field, dim)[1:]
  normal = _linalg.normalize_projective(field, vectors)
  return np.unique(_linalg.encode_vectors(field, normal))


def _point_images(field, matrix, coords, lookup, twist=0):
  if twist:
    coords = _linalg.frobenius_array(field, coords, twist)
  images = _linalg.apply_to_vectors(field, matrix, coords)
  codes = _linalg.encode_vectors(field,
                                 _linalg.normalize_projective(field, images))
  result = lookup[codes]
  if (result < 0).any():
    raise InternalError("matrix does not preserve the point set")
  return Permutation(result, check=False)


def psl3_projective(order, name=None):
  """``PSL_3(q)`` on the ``q^2 + q + 1`` points of the projective plane."""
  field = field_of_order(order)
  codes = _projective_points(field, 3)
  lookup = np.full(field.order ** 3, -1, dtype=np.int64)
  lookup[codes] = np.arange(codes.size)
  coords = _linalg.all_vectors(field, 3)[codes]
  gens = [_point_images(field, matrix, coords, lookup)
          for matrix in special_linear_generators(field, 3)]
  return PermGroup(codes.size, gens, name=name or "L3(%d)" % field.order)


def suzuki_ovoid(order, with_field_automorphisms=False, name=None):
  """
  ``Sz(q)`` on the ``q^2 + 1`` points of the ovoid
  ``{(1, x, y, xy + x^(s+2) + y^s)} + {(0, 0, 0, 1)}`` of ``PG(3, q)``, where
  ``q = 2^(2n+1)`` and ``s = 2^(n+1)``.

  Generators: the unipotent maps over ``(x, y) -> (x + a, y + b + a^s x)``,
  the torus ``diag(1, k, k^(s+1), k^(s+2))`` and the coordinate reversal.
  With ``with_field_automorphisms`` the Frobenius map is added.
  """
  field = field_of_order(order)
  if field.p != 2 or field.k % 2 == 0 or field.k < 3:
    raise ValueError("Suzuki groups need q = 2^(2n+1) >= 8, got %d"
                     % field.order)
  q = field.order
  sigma = 2 ** ((field.k + 1) // 2)
  power, mul = field.power, field.mul

  def ovoid_z(x, y):
    return mul(x, y) ^ power(x, sigma + 2) ^ power(y, sigma)

  coords = np.zeros((q * q + 1, 4), dtype=np.int64)
  for y in range(q):
    for x in range(q):
      coords[x + q * y] = (1, x, y, ovoid_z(x, y))
  coords[q * q] = (0, 0, 0, 1)
  codes = _linalg.encode_vectors(field, coords)
  lookup = np.full(q ** 4, -1, dtype=np.int64)
  lookup[codes] = np.arange(codes.size)

  matrices = []
  basis = [2 ** j for j in range(field.k)]
  for a_val, b_val in [(v, 0) for v in basis] + [(0, v) for v in basis]:
    matrices.append([
        [1, 0, 0, 0],
        [a_val, 1, 0, 0],
        [b_val, power(a_val, sigma), 1, 0],
        [mul(a_val, b_val) ^ power(a_val, sigma + 2) ^ power(b_val, sigma),
         b_val ^ power(a_val, sigma + 1), a_val, 1]])
  kappa = field.gamma.value
  matrices.append([[1, 0, 0, 0], [0, kappa, 0, 0],
                   [0, 0, power(kappa, sigma + 1), 0],
                   [0, 0, 0, power(kappa, sigma + 2)]])
  matrices.append([[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]])
  gens = [_point_images(field, np.array(m, dtype=np.int64), coords, lookup)
          for m in matrices]
  label = "Sz(%d)" % q
  if with_field_automorphisms:
    gens.append(_point_images(field, _linalg.identity(4), coords, lookup,
                              twist=1))
    label += ":%d" % field.k
  return PermGroup(codes.size, gens, name=name or label)
