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

""":synopsis: Exact integers of cyclotomic fields.
:module: derangekit.cyclotomic

Character values are algebraic integers of ``Q(z_n)`` with ``z_n`` a
primitive ``n``-th root of unity. They are stored as integer coefficient
vectors in the power basis ``1, z_n, ..., z_n^(phi(n)-1)``, reduced modulo
the ``n``-th cyclotomic polynomial, so equality and the zero test are exact.

.. autoclass:: Cyclotomic
   :members:
.. autofunction:: cyclotomic_polynomial
.. autofunction:: root_of_unity
"""

from __future__ import absolute_import
from __future__ import division

import cmath
import fractions
import functools

import numpy as np

from derangekit import arith


__author__ = "yesudeep@google.com (Yesudeep Mangalapilly)"


__all__ = [
    "Cyclotomic",
    "cyclotomic_polynomial",
    "root_of_unity",
    ]


def _poly_divmod(num, den):
  """Division of integer polynomials (lowest degree first) by a monic one."""
  num = list(num)
  shift = len(num) - len(den)
  if shift < 0:
    return [0], num
  quotient = [0] * (shift + 1)
  for i in range(shift, -1, -1):
    coef = num[i + len(den) - 1]
    quotient[i] = coef
    if coef:
      for j, d in enumerate(den):
        num[i + j] -= coef * d
  return quotient, num[:len(den) - 1]


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(order):
  """Coefficients of the ``order``-th cyclotomic polynomial, low first."""
  if order < 1:
    raise ValueError("cyclotomic order must be positive, got %r" % order)
  poly = [-1] + [0] * (order - 1) + [1]
  for divisor in arith.divisors(order):
    if divisor < order:
      poly, remainder = _poly_divmod(poly, cyclotomic_polynomial(divisor))
      assert not any(remainder)
  return tuple(poly)


@functools.lru_cache(maxsize=None)
def _basis_matrix(order):
  """Row ``i`` holds the coordinates of ``z^i`` for ``0 <= i < order``."""
  modulus = np.array(cyclotomic_polynomial(order), dtype=np.int64)
  width = len(modulus) - 1
  rows = np.zeros((order, width), dtype=np.int64)
  current = np.zeros(width, dtype=np.int64)
  current[0] = 1
  for i in range(order):
    rows[i] = current
    top = current[-1]
    current = np.concatenate([[0], current[:-1]]) - top * modulus[:width]
  return rows


def _reduce(coeffs, order):
  """Coordinates of ``sum coeffs[i] z^i`` using ``z^order = 1``."""
  coeffs = np.asarray(coeffs, dtype=np.int64)
  folded = np.zeros(order, dtype=np.int64)
  np.add.at(folded, np.arange(coeffs.size) % order, coeffs)
  return tuple(int(x) for x in folded.dot(_basis_matrix(order)))


class Cyclotomic(object):
  """
  An element ``sum c_i z_n^i`` of ``Z[z_n]``.

  :param order:
      The conductor ``n`` of the ambient field.
  :param coeffs:
      Integer coefficients of powers of ``z_n``, low degree first; any
      length, reduced on construction.
  """

  __slots__ = ("order", "coeffs")

  def __init__(self, order, coeffs):
    self.order = int(order)
    self.coeffs = _reduce([int(c) for c in coeffs] or [0], self.order)

  @classmethod
  def integer(cls, value, order=1):
    return cls(order, [value])

  def _promote(self, other):
    if not isinstance(other, Cyclotomic):
      other = Cyclotomic.integer(int(other), self.order)
    order = arith.lcm(self.order, other.order)
    return self.lift(order), other.lift(order)

  def lift(self, order):
    """The same number written over ``Q(z_order)``; ``self.order | order``."""
    if order == self.order:
      return self
    if order % self.order:
      raise ValueError("cannot lift conductor %d to %d" % (self.order, order))
    step = order // self.order
    coeffs = [0] * (step * (len(self.coeffs) - 1) + 1)
    for i, coef in enumerate(self.coeffs):
      coeffs[i * step] = coef
    return Cyclotomic(order, coeffs)

  def galois(self, exponent):
    """Image under ``z_n -> z_n^exponent`` with ``exponent`` prime to ``n``."""
    if arith.gcd(exponent, self.order) != 1:
      raise ValueError("%d is not a unit mod %d" % (exponent, self.order))
    coeffs = np.zeros(self.order, dtype=np.int64)
    np.add.at(coeffs, (np.arange(len(self.coeffs)) * exponent) % self.order,
              self.coeffs)
    return Cyclotomic(self.order, coeffs)

  def conjugate(self):
    return self.galois(self.order - 1 if self.order > 1 else 1)

  def is_zero(self):
    return not any(self.coeffs)

  def is_rational(self):
    return not any(self.coeffs[1:])

  def as_integer(self):
    if not self.is_rational():
      raise ValueError("%s is not rational" % self.render())
    return self.coeffs[0] if self.coeffs else 0

  def to_complex(self):
    return sum(coef * root_of_unity(self.order, i)
               for i, coef in enumerate(self.coeffs) if coef)

  def __add__(self, other):
    left, right = self._promote(other)
    return Cyclotomic(left.order,
                      [a + b for a, b in zip(left.coeffs, right.coeffs)])

  __radd__ = __add__

  def __neg__(self):
    return Cyclotomic(self.order, [-c for c in self.coeffs])

  def __sub__(self, other):
    left, right = self._promote(other)
    return left + (-right)

  def __rsub__(self, other):
    return (-self) + other

  def __mul__(self, other):
    left, right = self._promote(other)
    product = np.convolve(np.array(left.coeffs, dtype=np.int64),
                          np.array(right.coeffs, dtype=np.int64))
    return Cyclotomic(left.order, product)

  __rmul__ = __mul__

  def __eq__(self, other):
    if isinstance(other, int):
      other = Cyclotomic.integer(other)
    if not isinstance(other, Cyclotomic):
      return NotImplemented
    left, right = self._promote(other)
    return left.coeffs == right.coeffs

  def __ne__(self, other):
    result = self.__eq__(other)
    if result is NotImplemented:
      return result
    return not result

  def __hash__(self):
    conductor, coeffs = _canonical(self.order, self.coeffs)
    if conductor == 1:
      return hash(coeffs[0])
    return hash((conductor, coeffs))

  def conductor(self):
    """The smallest ``m`` with the number in ``Q(z_m)``."""
    return _canonical(self.order, self.coeffs)[0]

  def sort_key(self):
    return (self.order, self.coeffs)

  def render(self):
    """Text such as ``-1 + 2*z5^3``; rational values render as integers."""
    terms = []
    for i, coef in enumerate(self.coeffs):
      if not coef:
        continue
      if i == 0:
        terms.append(str(coef))
        continue
      power = "z%d" % self.order if i == 1 else "z%d^%d" % (self.order, i)
      if coef == 1:
        terms.append(power)
      elif coef == -1:
        terms.append("-" + power)
      else:
        terms.append("%d*%s" % (coef, power))
    if not terms:
      return "0"
    text = terms[0]
    for term in terms[1:]:
      text += " - " + term[1:] if term.startswith("-") else " + " + term
    return text

  def as_dict(self):
    return {"conductor": self.order, "coefficients": list(self.coeffs)}

  def __str__(self):
    return self.render()

  def __repr__(self):
    return "Cyclotomic(%d, %r)" % (self.order, self.coeffs)


@functools.lru_cache(maxsize=4096)
def _canonical(order, coeffs):
  """``(conductor, coeffs)`` of the number over its smallest field."""
  number = Cyclotomic(order, coeffs)
  for divisor in arith.divisors(order):
    if divisor == order:
      break
    units = [a for a in range(1 + divisor, order, divisor)
             if arith.gcd(a, order) == 1]
    if all(number.galois(a).coeffs == number.coeffs for a in units):
      return divisor, _descend(number.coeffs, order, divisor)
  return order, number.coeffs


def _descend(coeffs, order, conductor):
  """Coordinates over ``Q(z_conductor)`` of a number lying in that field."""
  step = order // conductor
  width = len(cyclotomic_polynomial(conductor)) - 1
  basis = _basis_matrix(order)
  system = [[fractions.Fraction(int(basis[j * step][i]))
             for j in range(width)] + [fractions.Fraction(coef)]
            for i, coef in enumerate(coeffs)]
  for col in range(width):
    pivot = next(r for r in range(col, len(system)) if system[r][col])
    system[col], system[pivot] = system[pivot], system[col]
    lead = system[col][col]
    system[col] = [value / lead for value in system[col]]
    for r, row in enumerate(system):
      if r != col and row[col]:
        factor = row[col]
        system[r] = [a - factor * b for a, b in zip(row, system[col])]
  return tuple(int(system[i][-1]) for i in range(width))


def root_of_unity(order, exponent=1):
  """Complex value of ``z_order^exponent``."""
  return cmath.exp(2j * cmath.pi * exponent / order)
