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

""":synopsis: Point stabilisers of exceptional 2-transitive affine groups.
:module: derangekit.hering

The groups here have no one-line formula. Each builder runs a deterministic
search and checks the order it finds, raising
:class:`~derangekit.errors.InternalError` when the search misses.

* Quaternion units ``i, j`` in ``SL_2(p)`` give ``SL_2(3)``; icosians give
  ``SL_2(5)``.
* The extraspecial group ``2^(1+4)`` sits in ``Sp_4(3)`` as a Kronecker
  product of ``Q_8`` and ``D_8``.
* ``G_2(2)`` is the automorphism group of the split octonions over GF(2),
  found by searching images of a generating triple.
* ``SL_2(13)`` is the odd part of the Weil representation over GF(27),
  descended to GF(3).

Table stabilisers
-----------------
.. autofunction:: quaternion_units
.. autofunction:: table2_group

Eliminated stabilisers
----------------------
.. autofunction:: hering_group
.. autodata:: HERING_CASES
"""

from __future__ import absolute_import
from __future__ import division

import collections
import functools
import itertools
import logging

import numpy as np

from derangekit import _linalg
from derangekit import constructors
from derangekit._chain import StabilizerChain
from derangekit.engine import PermGroup
from derangekit.errors import FieldError
from derangekit.errors import InternalError
from derangekit.field import field_build
from derangekit.perm import Permutation


__author__ = "yesudeep@google.com (Yesudeep Mangalapilly)"


__all__ = [
    "HERING_CASES",
    "HeringCase",
    "TABLE2_CASES",
    "extraspecial_normalizer_element",
    "g2_2_linear",
    "hering_group",
    "quaternion_units",
    "sl2_13_over_gf3",
    "table2_group",
    ]


LOG = logging.getLogger(__name__)


HeringCase = collections.namedtuple("HeringCase",
                                    "name builder expected_kappa tier")


def _linear_group(field, matrices, name=None, tier="core"):
  gens = constructors.matrix_gen_set(field, matrices)
  return constructors.matrix_group_on_vectors(gens, name=name, tier=tier)


def _combination(field, terms):
  """``sum(c * M)`` over a prime field."""
  total = np.zeros_like(terms[0][1])
  for coef, matrix in terms:
    total = (total + int(coef) * matrix) % field.p
  return total


# Quaternion and icosian units.

def quaternion_units(prime):
  """
  Matrices ``i, j, k`` in ``SL_2(p)``, ``p`` odd, with ``i^2 = j^2 = -1`` and
  ``ij = k = -ji``.
  """
  if prime == 2:
    raise FieldError("quaternion units need an odd characteristic")
  field = field_build(prime, 1)
  minus_one = prime - 1
  pair = next((a, b) for a in range(prime) for b in range(prime)
              if (a * a + b * b) % prime == minus_one)
  unit_i = np.array([[0, minus_one], [1, 0]], dtype=np.int64)
  unit_j = np.array([[pair[0], pair[1]], [pair[1], (-pair[0]) % prime]],
                    dtype=np.int64)
  return unit_i, unit_j, _linalg.mul(field, unit_i, unit_j)


def _binary_tetrahedral(prime):
  """``i``, ``j`` and ``-(1 + i + j + k)/2``."""
  field = field_build(prime, 1)
  unit_i, unit_j, unit_k = quaternion_units(prime)
  minus_half = field.neg(field.inv(2))
  omega = _combination(field, [(minus_half, _linalg.identity(2)),
                               (minus_half, unit_i), (minus_half, unit_j),
                               (minus_half, unit_k)])
  return [unit_i, unit_j, omega]


def _binary_icosahedral(prime):
  """
  ``SL_2(5)`` as the unit icosians: the Hurwitz units plus one
  ``(0 + i + s j + t k)/2`` with ``s, t = (1 -+ sqrt 5)/2``, trying the
  coordinate orders until the generated group has order 120.
  """
  field = field_build(prime, 1)
  root = field.sqrt(5 % prime)
  if root is None:
    raise FieldError("5 is not a square modulo %d" % prime)
  half = field.inv(2)
  tau = field.mul(half, field.add(1, root.value))
  sigma = field.mul(half, field.sub(1, root.value))
  tetrahedral = _binary_tetrahedral(prime)
  unit_i, unit_j, unit_k = quaternion_units(prime)
  basis = [_linalg.identity(2), unit_i, unit_j, unit_k]
  for coords in itertools.permutations((0, 1, sigma, tau)):
    unit = _combination(field, [(field.mul(half, c), m)
                                for c, m in zip(coords, basis)])
    if not _linalg.is_invertible(field, unit):
      continue
    gens = tetrahedral + [unit]
    if _linear_group(field, gens).order() == 120:
      return gens
  raise InternalError("no icosian unit generates SL2(5) over GF(%d)" % prime)


def _scalar_generator(field):
  return _linalg.scalar(2, field.gamma.value)


def _table2_sl23(prime):
  field = field_build(prime, 1)
  return _binary_tetrahedral(prime) + [_scalar_generator(field)]


def _table2_q8_normalizer(prime):
  field = field_build(prime, 1)
  unit_i = quaternion_units(prime)[0]
  return _table2_sl23(prime) + [field.add_array(_linalg.identity(2), unit_i)]


def _table2_sl25(prime):
  field = field_build(prime, 1)
  return _binary_icosahedral(prime) + [_scalar_generator(field)]


def extraspecial_normalizer_element(sp4, extraspecial):
  """The first class representative of order 5 in ``N_Sp(E)``."""
  normalizer = sp4.normalizer(extraspecial)
  LOG.debug("normalizer of the extraspecial group has order %d",
            normalizer.order())
  table = normalizer.classes
  for rep, order in zip(table.reps, table.orders):
    if order == 5:
      return rep
  raise InternalError("no element of order 5 normalizes 2^(1+4)")


def _table2_extraspecial():
  """``2^(1+4).5`` inside ``Sp_4(3)``, returned as a permutation group."""
  field = field_build(3, 1)
  unit_i, unit_j, _ = quaternion_units(3)
  swap = np.array([[0, 1], [1, 0]], dtype=np.int64)
  flip = np.array([[1, 0], [0, 2]], dtype=np.int64)
  eye = _linalg.identity(2)
  kron = lambda a, b: _linalg.kron(field, a, b)
  matrices = [kron(unit_i, eye), kron(unit_j, eye), kron(eye, swap),
              kron(eye, flip)]
  form = kron(np.array([[0, 1], [2, 0]], dtype=np.int64), eye)
  sp4 = _linear_group(field, constructors.symplectic_generators(field, 4,
                                                                form))
  extraspecial = sp4.subgroup(
      [Permutation(_linalg.matrix_permutation(field, m), check=False)
       for m in matrices])
  if extraspecial.order() != 32:
    raise InternalError("Q8 (x) D8 has order %d" % extraspecial.order())
  element = extraspecial_normalizer_element(sp4, extraspecial)
  return sp4.subgroup(list(extraspecial.gens) + [element],
                      name="2^(1+4).5")


TABLE2_CASES = collections.OrderedDict([
    ("P_25_17", (5, 48)),
    ("P_121_42", (11, 240)),
    ("P_81_70", (3, 160)),
    ("P_841_104", (29, 1680)),
    ])


def table2_group(name):
  """
  One of the affine 2-transitive groups with two derangement classes:
  ``5^2:SL_2(3)``-type (``P_25_17``), ``11^2`` with the normalizer of
  ``Q_8`` (``P_121_42``), ``3^4:2^(1+4).5`` (``P_81_70``) and
  ``29^2`` with ``SL_2(5)`` and scalars (``P_841_104``).

  :raises InternalError:
      When the stabiliser found has the wrong order.
  """
  try:
    prime, order = TABLE2_CASES[name]
  except KeyError:
    raise ValueError("unknown table entry %r" % (name,))
  field = field_build(prime, 1)
  if name == "P_81_70":
    linear = _table2_extraspecial()
    dim = 4
  else:
    builder = {"P_25_17": _table2_sl23,
               "P_121_42": _table2_q8_normalizer,
               "P_841_104": _table2_sl25}[name]
    linear = _linear_group(field, builder(prime))
    dim = 2
  if linear.order() != order:
    raise InternalError("%s stabiliser has order %d, expected %d"
                        % (name, linear.order(), order))
  return constructors.affine_from_linear(prime, dim, linear, name=name)


# Octonions over GF(2).
#
# An element (a, v; w, b) of the split octonions is a byte: a is bit 0, v is
# bits 1..3, w is bits 4..6 and b is bit 7.

_OCTONION_ONE = 0x81


def _dot(vec_a, vec_b):
  return bin(vec_a & vec_b).count("1") & 1


def _cross(vec_a, vec_b):
  bits_a = [(vec_a >> i) & 1 for i in range(3)]
  bits_b = [(vec_b >> i) & 1 for i in range(3)]
  return sum(((bits_a[(i + 1) % 3] & bits_b[(i + 2) % 3]) ^
              (bits_a[(i + 2) % 3] & bits_b[(i + 1) % 3])) << i
             for i in range(3))


def _zorn_product(left, right):
  a_1, v_1, w_1, b_1 = (left & 1, (left >> 1) & 7, (left >> 4) & 7,
                        (left >> 7) & 1)
  a_2, v_2, w_2, b_2 = (right & 1, (right >> 1) & 7, (right >> 4) & 7,
                        (right >> 7) & 1)
  a_out = (a_1 & a_2) ^ _dot(v_1, w_2)
  v_out = (v_2 if a_1 else 0) ^ (v_1 if b_2 else 0) ^ _cross(w_1, w_2)
  w_out = (w_1 if a_2 else 0) ^ (w_2 if b_1 else 0) ^ _cross(v_1, v_2)
  b_out = (b_1 & b_2) ^ _dot(w_1, v_2)
  return a_out | (v_out << 1) | (w_out << 4) | (b_out << 7)


@functools.lru_cache(maxsize=None)
def _octonion_table():
  table = np.zeros((256, 256), dtype=np.int64)
  for left in range(256):
    for right in range(256):
      table[left, right] = _zorn_product(left, right)
  return table


_MASK_BITS = (np.arange(256)[:, None] >> np.arange(8)[None, :]) & 1


def _span_table(words):
  """``XOR`` of the words selected by each 8-bit mask."""
  chosen = np.where(_MASK_BITS == 1, np.asarray(words)[None, :], 0)
  return np.bitwise_xor.reduce(chosen, axis=1)


def _words(table, triple):
  first, second, third = triple
  return [_OCTONION_ONE, first, second, third, table[first, second],
          table[second, third], table[first, third],
          table[first, table[second, third]]]


def _signature(table, left, right):
  product, reverse = table[left, right], table[right, left]
  return (product == 0, reverse == 0, product == reverse,
          table[product, product] == 0)


@functools.lru_cache(maxsize=None)
def g2_2_linear():
  """
  ``G_2(2)`` on the 64 vectors of the trace-zero octonions modulo the
  identity, as a permutation group of order 12096.
  """
  table = _octonion_table()
  base = (2, 4, 8)
  base_words = _words(table, base)
  coords = np.argsort(_span_table(base_words))
  basis = np.array([1 << i for i in range(8)], dtype=np.int64)
  expected = table[np.ix_(basis, basis)]
  nilpotent = [u for u in range(1, 256) if table[u, u] == 0]
  codes = np.arange(64, dtype=np.int64)
  points = ((codes & 7) << 1) | (((codes >> 3) & 7) << 4)
  pair_sigs = {(i, j): _signature(table, base[i], base[j])
               for i in range(3) for j in range(i + 1, 3)}
  chain = StabilizerChain(64, [])
  for first in nilpotent:
    for second in nilpotent:
      if _signature(table, first, second) != pair_sigs[0, 1]:
        continue
      for third in nilpotent:
        if (_signature(table, first, third) != pair_sigs[0, 2] or
            _signature(table, second, third) != pair_sigs[1, 2]):
          continue
        images = _span_table(_words(table, (first, second, third)))
        phi = images[coords]
        if np.unique(phi).size != 256:
          continue
        if not (table[np.ix_(phi[basis], phi[basis])] ==
                phi[expected]).all():
          continue
        moved = phi[points]
        perm = ((moved >> 1) & 7) | (((moved >> 4) & 7) << 3)
        chain.extend(tuple(int(x) for x in perm))
        if chain.order() == 12096:
          LOG.debug("G2(2) found with %d generators", len(chain.gens))
          group = PermGroup(64, chain.gens, name="G2(2)")
          group.__dict__["_lazy_chain"] = chain
          return group
  raise InternalError("octonion automorphism search reached order %d"
                      % chain.order())


# SL_2(13) in dimension 6 over GF(3).

def _weil_generators(big, coef, sign):
  zeta = big.power(big.gamma.value, 2)

  def zeta_power(exponent):
    return big.power(zeta, exponent % 13)

  diagonal = np.zeros((6, 6), dtype=np.int64)
  fourier = np.zeros((6, 6), dtype=np.int64)
  for x in range(1, 7):
    diagonal[x - 1, x - 1] = zeta_power(x * x)
    for y in range(1, 7):
      fourier[x - 1, y - 1] = big.mul(coef, big.sub(
          zeta_power(2 * sign * x * y), zeta_power(-2 * sign * x * y)))
  return [diagonal, fourier]


def _gf3_span(big, gens, start):
  """A GF(3)-basis of the smallest GF(3)-subspace holding ``start`` and
  closed under ``gens``, or ``None`` when it is not 6-dimensional."""
  small = field_build(3, 1)
  basis, queue = [start], [start]
  while queue:
    current = queue.pop(0)
    for gen in gens:
      image = _linalg.apply_to_vectors(big, gen, current[None, :])[0]
      rows = big.digits_array(np.array(basis + [image])).reshape(
          len(basis) + 1, -1)
      if _linalg.rank(small, rows) > len(basis):
        basis.append(image)
        queue.append(image)
        if len(basis) > 6:
          return None
  return basis if len(basis) == 6 else None


def _product(field, *matrices):
  return functools.reduce(lambda a, b: _linalg.mul(field, a, b), matrices)


def _descend(big, gens):
  """Conjugates ``gens`` over GF(27) into ``GL_6(3)`` when possible."""
  first, second = gens
  words = [first, second, _product(big, first, second),
           _product(big, second, first), _product(big, first, first, second),
           _product(big, first, second, first)]
  eye = _linalg.identity(6)
  for coefs in itertools.product((0, 1, 2), repeat=len(words)):
    if not any(coefs):
      continue
    combo = np.zeros((6, 6), dtype=np.int64)
    for coef, word in zip(coefs, words):
      combo = big.add_array(combo, big.mul_array(coef, word))
    for value in (0, 1, 2):
      shifted = big.sub_array(combo, big.mul_array(value, eye))
      null = _linalg.nullspace(big, shifted)
      if null.shape[0] != 1:
        continue
      basis = _gf3_span(big, gens, null[0])
      if basis is None:
        continue
      change = np.array(basis, dtype=np.int64).T
      try:
        back = _linalg.inverse(big, change)
      except FieldError:
        continue
      reduced = [_linalg.mul(big, _linalg.mul(big, back, gen), change)
                 for gen in gens]
      if all((m < 3).all() for m in reduced):
        return reduced
  return None


def sl2_13_over_gf3():
  """``SL_2(13)`` as a subgroup of ``GL_6(3)``, on the 729 vectors."""
  big = field_build(3, 3)
  small = field_build(3, 1)
  for coef in (1, 2):
    for sign in (1, -1):
      reduced = _descend(big, _weil_generators(big, coef, sign))
      if reduced is None:
        continue
      group = _linear_group(small, reduced, name="SL2(13)")
      if group.order() == 2184:
        return group
      LOG.debug("Weil generators with c=%d, sign=%d give order %d", coef,
                sign, group.order())
  raise InternalError("no Weil representation descended to GF(3)")


# Hering's exceptional and small-dimensional stabilisers.

def _sp4_2_derived():
  field = field_build(2, 1)
  sp4 = _linear_group(field, constructors.symplectic_generators(field, 4))
  return sp4.derived_subgroup()


def _a7_in_gl4_2():
  """The first ``<A_6, g>`` of order 2520 in ``GL_4(2)``."""
  field = field_build(2, 1)
  a6 = _sp4_2_derived()
  gl4 = _linear_group(field, constructors.general_linear_generators(field, 4))
  store = gl4.store
  for index in range(store.order):
    element = store.perm(index)
    if a6.contains(element):
      continue
    chain = StabilizerChain(16, [g.images for g in a6.gens] +
                            [element.images])
    if chain.order() == 2520:
      return PermGroup(16, list(a6.gens) + [element], name="A7")
  raise InternalError("no A7 above A6 in GL4(2)")


def _affine(prime, dim, linear, name, tier="core"):
  return constructors.affine_from_linear(prime, dim, linear, name=name,
                                         tier=tier)


HERING_CASES = [
    HeringCase("2^3:SL3(2)",
               lambda: constructors.affine_special_linear(2, 3), 5, "core"),
    HeringCase("3^3:SL3(3)",
               lambda: constructors.affine_special_linear(3, 3), 10, "core"),
    HeringCase("3^3:GL3(3)",
               lambda: constructors.affine_general_linear(3, 3), 11, "core"),
    HeringCase("2^4:Sp4(2)",
               lambda: constructors.affine_symplectic(2, 4), 10, "core"),
    HeringCase("3^4:Sp4(3)",
               lambda: constructors.affine_symplectic(3, 4), 24, "core"),
    HeringCase("3^4:Sp4(3).2",
               lambda: constructors.affine_symplectic(3, 4, similitudes=True,
                                                      tier="extended"),
               18, "extended"),
    HeringCase("2^6:G2(2)'",
               lambda: _affine(2, 6, g2_2_linear().derived_subgroup(),
                               "2^6:G2(2)'"), 10, "core"),
    HeringCase("2^6:G2(2)",
               lambda: _affine(2, 6, g2_2_linear(), "2^6:G2(2)"), 14, "core"),
    HeringCase("2^4:A6",
               lambda: _affine(2, 4, _sp4_2_derived(), "2^4:A6"), 5, "core"),
    HeringCase("2^4:A7",
               lambda: _affine(2, 4, _a7_in_gl4_2(), "2^4:A7"), 6, "core"),
    HeringCase("3^6:SL2(13)",
               lambda: _affine(3, 6, sl2_13_over_gf3(), "3^6:SL2(13)"), 3,
               "core"),
    ]


def hering_group(name, tier=None):
  """
  Builds the named affine group of :data:`HERING_CASES`.

  :param tier:
      Overrides the case's tier (the group's element cap).
  """
  for case in HERING_CASES:
    if case.name == name:
      group = case.builder()
      if tier is not None and tier != group.tier:
        group = constructors.affine_from_linear(group.p, group.dim,
                                                group.linear_part,
                                                name=group.name, tier=tier)
      return group
  raise ValueError("unknown Hering case %r" % (name,))
