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

""":synopsis: Exact ordinary character tables and induced characters.
:module: derangekit.chars

Tables are computed by simultaneous diagonalization of the class
multiplication matrices over a prime field ``GF(l)`` with
``l = 1 (mod exp(G))`` and ``l > 2 sqrt(|G|)``, then lifted to exact
cyclotomic integers through eigenvalue multiplicities. Rows are sorted by
degree and then by decreasing coefficient vectors, so the trivial character
comes first. Class functions are lists of
:class:`~derangekit.cyclotomic.Cyclotomic` indexed by the classes of
:attr:`PermGroup.classes <derangekit.engine.PermGroup.classes>`.

Tables
------
.. autoclass:: CharacterTable
   :members:
.. autofunction:: character_table
.. autofunction:: character_table_json

Class functions
---------------
.. autofunction:: permutation_character
.. autofunction:: induce
.. autofunction:: restrict
.. autofunction:: inner_product
.. autofunction:: vanishing_classes

Checks
------
.. autofunction:: burnside_check
.. autofunction:: column_orthogonality
.. autofunction:: mno_check
.. autofunction:: find_unique_vanishing_induced
"""

from __future__ import absolute_import
from __future__ import division

import fractions
import logging

import numpy as np

from derangekit import _linalg
from derangekit import arith
from derangekit import settings
from derangekit import structure
from derangekit.collections import Record
from derangekit.cyclotomic import Cyclotomic
from derangekit.decorators import timed
from derangekit.derangements import derangement_classes
from derangekit.errors import CapExceededError
from derangekit.errors import InternalError
from derangekit.errors import MembershipError
from derangekit.errors import VerificationError
from derangekit.field import field_build
from derangekit.perm import format_cycles


__author__ = "yesudeep@google.com (Yesudeep Mangalapilly)"


__all__ = [
    "CharacterTable",
    "burnside_check",
    "character_table",
    "character_table_json",
    "column_orthogonality",
    "find_unique_vanishing_induced",
    "induce",
    "inner_product",
    "mno_check",
    "permutation_character",
    "restrict",
    "vanishing_classes",
    ]


LOG = logging.getLogger(__name__)

_TABLE_SLOT = "_character_table"


class CharacterTable(object):
  """
  The irreducible characters of a group.

  :attr group:
      The :class:`~derangekit.engine.PermGroup`.
  :attr characters:
      List of tuples of :class:`~derangekit.cyclotomic.Cyclotomic`, one
      value per class.
  :attr degrees:
      ``chi(1)`` for each row.
  :attr conductor:
      The group exponent; every value lies in ``Q(z_conductor)``.
  :attr prime:
      The prime ``l`` used for the modular computation.
  """

  def __init__(self, group, characters, degrees, conductor, prime):
    self.group = group
    self.classes = group.classes
    self.order = group.order()
    self.characters = characters
    self.degrees = degrees
    self.conductor = conductor
    self.prime = prime

  def __len__(self):
    return len(self.characters)

  def __getitem__(self, index):
    return self.characters[index]

  def __iter__(self):
    return iter(self.characters)

  def nonlinear(self):
    return [row for row, degree in zip(self.characters, self.degrees)
            if degree > 1]

  def trivial(self):
    return self.characters[0]


def _check_caps(group):
  order = group.order()
  if order > settings.CHARS_ORDER_CAP:
    raise CapExceededError("character table group order", order,
                           settings.CHARS_ORDER_CAP, group.tier)
  count = len(group.classes)
  if count > settings.CHARS_CLASS_CAP:
    raise CapExceededError("character table classes", count,
                           settings.CHARS_CLASS_CAP, group.tier)


def _structure_constants(group):
  """
  ``a[j, k, l]``: the number of ``x`` in class ``j`` with ``x^-1 z_l`` in
  class ``k``, for the representative ``z_l`` of class ``l``.
  """
  store = group.store
  table = group.classes
  count = len(table)
  class_of = table.class_of
  inverses = store.inverses
  constants = np.zeros((count, count, count), dtype=np.int64)
  for target, row in enumerate(table.first_index):
    rep = store.elements[row].astype(np.intp)
    idx = store.index_of_base(inverses[:, rep[store.base]])
    if (idx < 0).any():
      raise InternalError("products left the element store of %r" % group)
    counts = np.zeros((count, count), dtype=np.int64)
    np.add.at(counts, (class_of, class_of[idx]), 1)
    constants[:, :, target] = counts
  return constants


def _charpoly(prime, matrix):
  """Characteristic polynomial mod ``prime``, low degree first."""
  h = [[int(x) % prime for x in row] for row in matrix]
  size = len(h)
  for m in range(1, size - 1):
    pivot = None
    for i in range(m, size):
      if h[i][m - 1]:
        pivot = i
        break
    if pivot is None:
      continue
    if pivot != m:
      h[pivot], h[m] = h[m], h[pivot]
      for row in h:
        row[pivot], row[m] = row[m], row[pivot]
    inv = pow(h[m][m - 1], prime - 2, prime)
    for i in range(m + 1, size):
      factor = h[i][m - 1] * inv % prime
      if not factor:
        continue
      for col in range(size):
        h[i][col] = (h[i][col] - factor * h[m][col]) % prime
      for row in h:
        row[m] = (row[m] + factor * row[i]) % prime
  # Hessenberg recurrence.
  polys = [[1]]
  for k in range(1, size + 1):
    diag = h[k - 1][k - 1]
    prev = polys[k - 1]
    current = [0] + prev
    for i, coef in enumerate(prev):
      current[i] = (current[i] - diag * coef) % prime
    product = 1
    for i in range(1, k):
      product = product * h[k - i][k - i - 1] % prime
      weight = product * h[k - i - 1][k - 1] % prime
      if weight:
        for j, coef in enumerate(polys[k - i - 1]):
          current[j] = (current[j] - weight * coef) % prime
    polys.append(current)
  return polys[size]


def _roots(prime, poly):
  values = np.zeros(prime, dtype=np.int64)
  points = np.arange(prime, dtype=np.int64)
  for coef in reversed(poly):
    values = (values * points + coef) % prime
  return [int(x) for x in np.flatnonzero(values == 0)]


def _split_spaces(field, matrices):
  """
  Common eigenvectors of commuting matrices; each space is ``(basis,
  pivots)`` with basis columns and ``basis[pivots] = I``.
  """
  prime = field.p
  count = matrices[0].shape[0]
  spaces = [(np.eye(count, dtype=np.int64), list(range(count)))]
  for matrix in matrices:
    if all(basis.shape[1] == 1 for basis, _ in spaces):
      break
    refined = []
    for basis, pivots in spaces:
      dim = basis.shape[1]
      if dim == 1:
        refined.append((basis, pivots))
        continue
      restricted = _linalg.mul(field, matrix, basis)[pivots, :]
      found = 0
      for value in _roots(prime, _charpoly(prime, restricted)):
        shifted = (restricted - value * np.eye(dim, dtype=np.int64)) % prime
        kernel = _linalg.nullspace(field, shifted)
        vectors = _linalg.mul(field, basis, kernel.T)
        reduced, new_pivots = _linalg.echelon(field, vectors.T)
        refined.append((reduced.T.copy(), new_pivots))
        found += kernel.shape[0]
      if found != dim:
        raise InternalError("class algebra is not split mod %d" % prime)
    spaces = refined
  if not all(basis.shape[1] == 1 for basis, _ in spaces):
    raise InternalError("class matrices do not separate characters mod %d"
                        % prime)
  return [basis[:, 0] for basis, _ in spaces]


def _lift(values_mod, table, conductor, prime, zeta, degree, powers):
  """Exact values from values mod ``prime`` via eigenvalue multiplicities."""
  lifted = []
  for k, order in enumerate(table.orders):
    step = conductor // order
    root = pow(zeta, step, prime)
    inv_order = pow(order, prime - 2, prime)
    coeffs = [0] * conductor
    for i in range(order):
      total = 0
      for t in range(order):
        total += values_mod[powers[k][t]] * pow(root, (-i * t) % order, prime)
      mult = total * inv_order % prime
      if mult > degree:
        raise InternalError("eigenvalue multiplicity %d exceeds degree %d"
                            % (mult, degree))
      coeffs[i * step] += mult
    lifted.append(Cyclotomic(conductor, coeffs))
  return tuple(lifted)


def _row_key(row_and_degree):
  row, degree = row_and_degree
  trivial = all(value == 1 for value in row)
  return (degree, not trivial,
          tuple(tuple(-c for c in value.coeffs) for value in row))


@timed(__name__)
def character_table(group):
  """
  The irreducible characters of ``group``; cached on the group.

  :raises CapExceededError:
      When the order or the class count exceeds its cap.
  """
  cached = group.__dict__.get(_TABLE_SLOT)
  if cached is not None:
    return cached
  _check_caps(group)
  table = group.classes
  order = group.order()
  count = len(table)
  conductor = group.exponent()
  prime = arith.smallest_prime_congruent_one(conductor, 2 * order ** 0.5)
  field = field_build(prime, 1)
  LOG.info("character table of %r: %d classes, working mod %d", group,
           count, prime)
  constants = _structure_constants(group) % prime
  omegas = _split_spaces(field, [constants[j] for j in range(1, count)] or
                         [constants[0]])
  sizes = [int(s) for s in table.sizes]
  inverse_class = [table.class_index(rep.inverse()) for rep in table.reps]
  powers = [[table.class_index(rep ** t) for t in range(o)]
            for rep, o in zip(table.reps, table.orders)]
  zeta = pow(arith.primitive_root(prime), (prime - 1) // conductor, prime)
  roots = int(order ** 0.5)
  rows = []
  for omega in omegas:
    lead = int(omega[0])
    if not lead:
      raise InternalError("central character vanishes at the identity")
    omega = omega * pow(lead, prime - 2, prime) % prime
    norm = sum(int(omega[k]) * int(omega[inverse_class[k]]) *
               pow(sizes[k], prime - 2, prime) for k in range(count)) % prime
    target = order * pow(norm, prime - 2, prime) % prime
    degree = None
    for candidate in range(1, roots + 2):
      if candidate * candidate % prime == target:
        degree = candidate
        break
    if degree is None:
      raise InternalError("no character degree squares to %d mod %d"
                          % (target, prime))
    values_mod = [int(omega[k]) * degree * pow(sizes[k], prime - 2, prime)
                  % prime for k in range(count)]
    rows.append((_lift(values_mod, table, conductor, prime, zeta, degree,
                       powers), degree))
  if sum(degree * degree for _, degree in rows) != order:
    raise InternalError("character degrees of %r do not square-sum to %d"
                        % (group, order))
  rows.sort(key=_row_key)
  result = CharacterTable(group, [row for row, _ in rows],
                          [degree for _, degree in rows], conductor, prime)
  group.__dict__[_TABLE_SLOT] = result
  return result


def permutation_character(group, sub):
  """``1_H^G``: the number of fixed points of each class on ``G/H``."""
  table = group.classes
  hits = table.hits(group.subgroup_mask(sub))
  sub_order = sub.order()
  return [Cyclotomic.integer(int(c) * int(h) // sub_order)
          for c, h in zip(table.centralizer_orders, hits)]


def _fusion(sub, group):
  try:
    return [group.classes.class_index(rep) for rep in sub.classes.reps]
  except MembershipError as e:
    raise InternalError("class fusion of %r into %r failed: %s"
                        % (sub, group, e))


def induce(values, sub, group):
  """
  The class function of ``group`` induced from ``values`` on ``sub``.

  :raises InternalError:
      When a class of ``sub`` does not fuse into ``group``.
  """
  fusion = _fusion(sub, group)
  sub_order = sub.order()
  accumulated = [Cyclotomic.integer(0) for _ in group.classes.reps]
  for value, size, target in zip(values, sub.classes.sizes, fusion):
    accumulated[target] = accumulated[target] + value * int(size)
  result = []
  for total, centralizer in zip(accumulated, group.classes.centralizer_orders):
    scaled = total * int(centralizer)
    if any(c % sub_order for c in scaled.coeffs):
      raise InternalError("induced value %s is not divisible by %d"
                          % (scaled.render(), sub_order))
    result.append(Cyclotomic(scaled.order,
                             [c // sub_order for c in scaled.coeffs]))
  return result


def restrict(values, group, sub):
  """``values`` on the classes of ``sub``."""
  return [values[k] for k in _fusion(sub, group)]


def _group_of(table_or_group):
  return getattr(table_or_group, "group", table_or_group)


def inner_product(table_or_group, left, right):
  """
  ``(1/|G|) sum |x^G| left(x) conj(right(x))`` as a :class:`Fraction`.

  :raises InternalError:
      When the sum is not rational.
  """
  group = _group_of(table_or_group)
  total = Cyclotomic.integer(0)
  for size, a, b in zip(group.classes.sizes, left, right):
    total = total + a * b.conjugate() * int(size)
  if not total.is_rational():
    raise InternalError("inner product %s is irrational" % total.render())
  return fractions.Fraction(total.as_integer(), group.order())


def vanishing_classes(values):
  """
  ``(n, indices)``: the number of classes where ``values`` is zero, and
  their indices.
  """
  zeros = [k for k, value in enumerate(values) if value.is_zero()]
  return len(zeros), zeros


def burnside_check(table):
  """Every nonlinear irreducible character has a zero."""
  return all(vanishing_classes(row)[0] for row in table.nonlinear())


def column_orthogonality(table):
  """``sum_chi chi(x) conj(chi(y)) = delta_xy |C_G(x)|`` for all classes."""
  count = len(table.classes)
  columns = [[row[k] for row in table] for k in range(count)]
  conjugates = [[value.conjugate() for value in column] for column in columns]
  for x in range(count):
    for y in range(count):
      total = Cyclotomic.integer(0)
      for a, b in zip(columns[x], conjugates[y]):
        total = total + a * b
      expected = table.classes.centralizer_orders[x] if x == y else 0
      if total != expected:
        LOG.warning("columns %d and %d of %r are not orthogonal", x, y,
                    table.group)
        return False
  return True


def mno_check(table):
  """Every nonlinear irreducible character vanishes on a prime-power class."""
  orders = table.classes.orders
  for row in table.nonlinear():
    if not any(arith.is_prime_power(orders[k])
               for k in vanishing_classes(row)[1]):
      return False
  return True


def find_unique_vanishing_induced(group, subs):
  """
  Induced characters ``phi^G`` that are irreducible and vanish on exactly
  one class, for ``phi`` irreducible on each maximal subgroup in ``subs``.

  :param subs:
      Sequence of ``(name, subgroup)`` pairs.
  :returns:
      List of :class:`~derangekit.collections.Record`.
  :raises VerificationError:
      When such a character exists but the derangements of ``G`` on the
      cosets of ``H`` are not exactly its vanishing class.
  """
  big = character_table(group)
  found = []
  for name, sub in subs:
    small = character_table(sub)
    for index, row in enumerate(small):
      induced = induce(row, sub, group)
      if inner_product(big, induced, induced) != 1:
        continue
      _, zeros = vanishing_classes(induced)
      if len(zeros) != 1:
        continue
      report = derangement_classes(group, sub, with_flags=False)
      derangement_set = sorted(group.classes.class_index(entry.element)
                               for entry in report.classes)
      if derangement_set != zeros:
        raise VerificationError(
            "phi_%d^G of %s vanishes only on class %d but derangements lie "
            "in classes %s" % (index, name, zeros[0], derangement_set),
            counterexample={"sub": name, "phi": index,
                            "vanishing": zeros[0],
                            "derangements": derangement_set})
      case = structure.classify_unique_vanishing(group, sub)
      rep = group.classes.reps[zeros[0]]
      found.append(Record(sub=name, phi_index=index,
                          degree=small.degrees[index] * (group.order() //
                                                         sub.order()),
                          vanishing_class=format_cycles(rep),
                          vanishing_order=rep.order(), tag=case.tag))
      LOG.info("%s: phi_%d induces an irreducible with one zero (%s)",
               name, index, case.tag)
  return found


def character_table_json(table):
  """Plain data for :mod:`derangekit.codec`."""
  classes = table.classes
  return {
      "group": table.group.name or repr(table.group),
      "order": table.order,
      "conductor": table.conductor,
      "prime": table.prime,
      "classes": [{"rep": format_cycles(rep), "size": int(size),
                   "order": order}
                  for rep, size, order in zip(classes.reps, classes.sizes,
                                              classes.orders)],
      "characters": [{"degree": degree,
                      "values": [value.render() for value in row],
                      "coefficients": [value.as_dict() for value in row]}
                     for row, degree in zip(table.characters, table.degrees)],
      }
