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

""":synopsis: Exact arithmetic in GF(p**k).
:module: derangekit.field

Elements are encoded as integers ``c_0 + c_1 p + ... + c_{k-1} p^{k-1}``
where ``c_i`` is the coefficient of ``x^i`` in the reduced polynomial. The
same base-p encoding doubles as the point encoding of vector spaces, so a
vector ``(v_0, ..., v_{d-1})`` over GF(q) is the point
``v_0 + v_1 q + ... + v_{d-1} q^{d-1}``.

The defining polynomial is the lexicographically smallest monic irreducible,
comparing coefficients from the constant term upwards.

.. autofunction:: field_build
.. autoclass:: FiniteField
   :members:
.. autoclass:: FieldElem
   :members:
.. autofunction:: projective_line_points
.. autofunction:: projective_line_image
"""

from __future__ import absolute_import
from __future__ import division

import functools
import itertools
import logging

import numpy as np

from derangekit import _compat
from derangekit import arith
from derangekit.errors import FieldError


__author__ = "yesudeep@google.com (Yesudeep Mangalapilly)"


__all__ = [
    "FieldElem",
    "FiniteField",
    "field_build",
    "projective_line_image",
    "projective_line_points",
    ]


LOG = logging.getLogger(__name__)

MAX_FIELD_ORDER = 1 << 32
# Log/exp and digit tables are kept when the field is at most this large.
TABLE_LIMIT = 1 << 16


# Polynomials over GF(p) are lists of ints, constant term first.

def _poly_trim(poly):
  while poly and not poly[-1]:
    poly.pop()
  return poly


def _poly_mod(num, den, prime):
  num = list(num)
  inv_lead = arith.inverse_mod(den[-1], prime)
  shift = len(num) - len(den)
  while shift >= 0 and num:
    coef = (num[-1] * inv_lead) % prime
    if coef:
      for i, d_coef in enumerate(den):
        num[shift + i] = (num[shift + i] - coef * d_coef) % prime
    num.pop()
    _poly_trim(num)
    shift = len(num) - len(den)
  return _poly_trim(num)


def _poly_mul(poly_a, poly_b, prime):
  if not poly_a or not poly_b:
    return []
  result = [0] * (len(poly_a) + len(poly_b) - 1)
  for i, a_coef in enumerate(poly_a):
    if a_coef:
      for j, b_coef in enumerate(poly_b):
        result[i + j] = (result[i + j] + a_coef * b_coef) % prime
  return _poly_trim(result)


def _poly_sub(poly_a, poly_b, prime):
  size = max(len(poly_a), len(poly_b))
  result = [((poly_a[i] if i < len(poly_a) else 0) -
             (poly_b[i] if i < len(poly_b) else 0)) % prime
            for i in range(size)]
  return _poly_trim(result)


def _poly_gcd(poly_a, poly_b, prime):
  poly_a, poly_b = _poly_trim(list(poly_a)), _poly_trim(list(poly_b))
  while poly_b:
    poly_a, poly_b = poly_b, _poly_mod(poly_a, poly_b, prime)
  return poly_a


def _poly_powmod(base, power, modulus, prime):
  result = [1]
  base = _poly_mod(base, modulus, prime)
  while power:
    if power & 1:
      result = _poly_mod(_poly_mul(result, base, prime), modulus, prime)
    base = _poly_mod(_poly_mul(base, base, prime), modulus, prime)
    power >>= 1
  return result


def is_irreducible(poly, prime):
  """Rabin's test for a monic ``poly`` (constant term first) over GF(prime)."""
  degree = len(poly) - 1
  if degree < 1:
    return False
  if degree == 1:
    return True
  if not poly[0] % prime:
    return False
  x_poly = [0, 1]
  if _poly_sub(_poly_powmod(x_poly, prime ** degree, poly, prime),
               x_poly, prime):
    return False
  for divisor in arith.prime_divisors(degree):
    residue = _poly_sub(_poly_powmod(x_poly, prime ** (degree // divisor),
                                     poly, prime), x_poly, prime)
    if len(_poly_gcd(poly, residue, prime)) != 1:
      return False
  return True


def _smallest_irreducible(prime, degree):
  for coefficients in itertools.product(range(prime), repeat=degree):
    poly = list(coefficients) + [1]
    if is_irreducible(poly, prime):
      return tuple(poly)
  raise FieldError("no irreducible polynomial of degree %d over GF(%d)" % (
      degree, prime))


class FiniteField(object):
  """
  GF(p**k). Build instances with :func:`field_build`; they are immutable
  and cached, so ``field_build(p, k) is field_build(p, k)``.

  :param prime:
      The characteristic.
  :param degree:
      Degree over the prime field.
  """

  def __init__(self, prime, degree):
    self.p = prime
    self.k = degree
    self.order = prime ** degree
    self.polynomial = _smallest_irreducible(prime, degree)
    self._modulus = list(self.polynomial)
    self._powers = np.array([prime ** i for i in range(degree)],
                            dtype=np.int64)
    self._exp = None
    self._log = None
    self._digits = None
    self.gamma = self.elem(self._find_primitive())
    if self.order <= TABLE_LIMIT:
      self._build_tables()
    LOG.debug("built GF(%d^%d) with polynomial %r and gamma %d",
              prime, degree, self.polynomial, self.gamma.value)

  # Encoding.

  def coefficients(self, value):
    """Coefficient list (constant term first) of an encoded element."""
    coefs = []
    for _ in range(self.k):
      value, digit = divmod(value, self.p)
      coefs.append(digit)
    return coefs

  def encode(self, coefs):
    """Encodes a coefficient sequence (constant term first)."""
    value = 0
    for coef in reversed(list(coefs)[:self.k]):
      value = value * self.p + (coef % self.p)
    return value

  def elem(self, value):
    """The element with the given integer encoding."""
    if isinstance(value, FieldElem):
      if value.field is not self:
        raise FieldError("element of %r used in %r" % (value.field, self))
      return value
    if not _compat.is_integer(value) or not 0 <= value < self.order:
      raise FieldError("%r is not an element encoding of %r" % (value, self))
    return FieldElem(self, int(value))

  from_int = elem

  def to_int(self, element):
    return self.elem(element).value

  @property
  def zero(self):
    return FieldElem(self, 0)

  @property
  def one(self):
    return FieldElem(self, 1)

  def elements(self):
    """All elements, in encoding order."""
    return [FieldElem(self, v) for v in range(self.order)]

  # Raw arithmetic on encodings.

  def add(self, num_a, num_b):
    if self.p == 2:
      return num_a ^ num_b
    if self._digits is not None:
      return int(((self._digits[num_a] + self._digits[num_b]) % self.p)
                 .dot(self._powers))
    coefs_a, coefs_b = self.coefficients(num_a), self.coefficients(num_b)
    return self.encode([a + b for a, b in zip(coefs_a, coefs_b)])

  def neg(self, num_a):
    if self.p == 2:
      return num_a
    return self.encode([-c for c in self.coefficients(num_a)])

  def sub(self, num_a, num_b):
    return self.add(num_a, self.neg(num_b))

  def _poly_mul_encoded(self, num_a, num_b):
    product = _poly_mul(self.coefficients(num_a), self.coefficients(num_b),
                        self.p)
    return self.encode(_poly_mod(product, self._modulus, self.p))

  def mul(self, num_a, num_b):
    if not num_a or not num_b:
      return 0
    if self._log is not None:
      return int(self._exp[(self._log[num_a] + self._log[num_b]) %
                           (self.order - 1)])
    return self._poly_mul_encoded(num_a, num_b)

  def power(self, num_a, exponent):
    if exponent < 0:
      num_a = self.inv(num_a)
      exponent = -exponent
    if not num_a:
      return 1 if exponent == 0 else 0
    if self._log is not None:
      return int(self._exp[(int(self._log[num_a]) * exponent) %
                           (self.order - 1)])
    result = 1
    while exponent:
      if exponent & 1:
        result = self._poly_mul_encoded(result, num_a)
      num_a = self._poly_mul_encoded(num_a, num_a)
      exponent >>= 1
    return result

  def inv(self, num_a):
    if not num_a:
      raise FieldError("zero has no inverse in GF(%d)" % self.order)
    if self._log is not None:
      return int(self._exp[(-int(self._log[num_a])) % (self.order - 1)])
    return self.power(num_a, self.order - 2)

  def div(self, num_a, num_b):
    return self.mul(num_a, self.inv(num_b))

  # Vectorised arithmetic on arrays of encodings (table-backed fields only).

  def _require_tables(self):
    if self._log is None:
      raise FieldError("GF(%d) is too large for array arithmetic" % self.order)

  def digits_array(self, values):
    """Coefficient digits of an array of encodings; last axis has length k."""
    self._require_tables()
    return self._digits[np.asarray(values, dtype=np.int64)]

  def from_digits(self, digits):
    return (np.asarray(digits, dtype=np.int64) % self.p).dot(self._powers)

  def add_array(self, values_a, values_b):
    values_a = np.asarray(values_a, dtype=np.int64)
    values_b = np.asarray(values_b, dtype=np.int64)
    if self.p == 2:
      return values_a ^ values_b
    if self.k == 1:
      return (values_a + values_b) % self.p
    self._require_tables()
    return ((self._digits[values_a] + self._digits[values_b]) % self.p
            ).dot(self._powers)

  def neg_array(self, values):
    values = np.asarray(values, dtype=np.int64)
    if self.p == 2:
      return values
    if self.k == 1:
      return (-values) % self.p
    self._require_tables()
    return ((-self._digits[values]) % self.p).dot(self._powers)

  def sub_array(self, values_a, values_b):
    return self.add_array(values_a, self.neg_array(values_b))

  def mul_array(self, values_a, values_b):
    values_a = np.asarray(values_a, dtype=np.int64)
    values_b = np.asarray(values_b, dtype=np.int64)
    if self.k == 1:
      return (values_a * values_b) % self.p
    self._require_tables()
    values_a, values_b = np.broadcast_arrays(values_a, values_b)
    logs = (self._log[values_a] + self._log[values_b]) % (self.order - 1)
    result = self._exp[logs]
    return np.where((values_a == 0) | (values_b == 0), 0, result)

  def sum_array(self, values, axis):
    """Field sum of an array of encodings along ``axis``."""
    values = np.asarray(values, dtype=np.int64)
    if self.p == 2:
      return np.bitwise_xor.reduce(values, axis=axis)
    if self.k == 1:
      return values.sum(axis=axis) % self.p
    digits = self._digits[values].sum(axis=axis)
    return (digits % self.p).dot(self._powers)

  # Structure.

  def _find_primitive(self):
    if self.order == 2:
      return 1
    factors = arith.prime_divisors(self.order - 1)
    for candidate in range(1, self.order):
      if all(self.power(candidate, (self.order - 1) // r) != 1
             for r in factors):
        return candidate
    raise FieldError("no primitive element in GF(%d)" % self.order)

  def _build_tables(self):
    size = self.order
    exp_table = np.zeros(size, dtype=np.int64)
    log_table = np.zeros(size, dtype=np.int64)
    value = 1
    for i in range(size - 1):
      exp_table[i] = value
      log_table[value] = i
      value = self._poly_mul_encoded(value, self.gamma.value)
    exp_table[size - 1] = 1
    digits = np.zeros((size, self.k), dtype=np.int64)
    codes = np.arange(size, dtype=np.int64)
    for i in range(self.k):
      codes, digits[:, i] = np.divmod(codes, self.p)
    self._digits = digits
    self._exp = exp_table
    self._log = log_table

  def log(self, element):
    """Discrete logarithm to the base :attr:`gamma`."""
    value = self.to_int(element)
    if not value:
      raise FieldError("log of zero")
    if self._log is not None:
      return int(self._log[value])
    current, index = 1, 0
    while current != value:
      current = self._poly_mul_encoded(current, self.gamma.value)
      index += 1
    return index

  def exp(self, index):
    """``gamma ** index``."""
    return FieldElem(self, self.power(self.gamma.value, index))

  def frobenius(self, element, times=1):
    """``element ** (p ** times)``."""
    value = self.to_int(element)
    return FieldElem(self, self.power(value, self.p ** (times % self.k)))

  def trace(self, element):
    """Absolute trace, returned as an int in ``0..p-1``."""
    value = self.to_int(element)
    total = 0
    for i in range(self.k):
      total = self.add(total, self.power(value, self.p ** i))
    return total

  def norm(self, element):
    """Absolute norm, returned as an int in ``0..p-1``."""
    value = self.to_int(element)
    return self.power(value, (self.order - 1) // (self.p - 1))

  def multiplicative_order(self, element):
    value = self.to_int(element)
    if not value:
      raise FieldError("zero has no multiplicative order")
    order = self.order - 1
    for prime, exponent in arith.factorize(order) if order > 1 else ():
      for _ in range(exponent):
        if self.power(value, order // prime) == 1:
          order //= prime
        else:
          break
    return order

  def sqrt(self, element):
    """A square root of ``element`` or ``None`` when it is a non-square."""
    value = self.to_int(element)
    if not value:
      return self.zero
    if self.p == 2:
      return FieldElem(self, self.power(value, self.order // 2))
    index = self.log(value)
    if index % 2:
      return None
    return self.exp(index // 2)

  def __repr__(self):
    return "GF(%d^%d)" % (self.p, self.k)


class FieldElem(object):
  """An element of a :class:`FiniteField`; supports ``+ - * / **``."""

  __slots__ = ("field", "value")

  def __init__(self, field, value):
    self.field = field
    self.value = value

  def _coerce(self, other):
    if isinstance(other, FieldElem):
      if other.field is not self.field:
        raise FieldError("cannot mix %r and %r" % (self.field, other.field))
      return other.value
    if _compat.is_integer(other):
      return int(other) % self.field.p
    raise TypeError("unsupported operand %r" % (other,))

  def __add__(self, other):
    return FieldElem(self.field, self.field.add(self.value,
                                                self._coerce(other)))

  __radd__ = __add__

  def __sub__(self, other):
    return FieldElem(self.field, self.field.sub(self.value,
                                                self._coerce(other)))

  def __rsub__(self, other):
    return FieldElem(self.field, self.field.sub(self._coerce(other),
                                                self.value))

  def __neg__(self):
    return FieldElem(self.field, self.field.neg(self.value))

  def __mul__(self, other):
    return FieldElem(self.field, self.field.mul(self.value,
                                                self._coerce(other)))

  __rmul__ = __mul__

  def __truediv__(self, other):
    return FieldElem(self.field, self.field.div(self.value,
                                                self._coerce(other)))

  def __rtruediv__(self, other):
    return FieldElem(self.field, self.field.div(self._coerce(other),
                                                self.value))

  def __pow__(self, exponent):
    return FieldElem(self.field, self.field.power(self.value, exponent))

  def inverse(self):
    return FieldElem(self.field, self.field.inv(self.value))

  def frobenius(self, times=1):
    return self.field.frobenius(self, times)

  def trace(self):
    return self.field.trace(self)

  def norm(self):
    return self.field.norm(self)

  def minimal_order(self):
    """Multiplicative order of this (nonzero) element."""
    return self.field.multiplicative_order(self)

  def __eq__(self, other):
    if isinstance(other, FieldElem):
      return self.field is other.field and self.value == other.value
    if _compat.is_integer(other):
      return self.value == other
    return NotImplemented

  def __ne__(self, other):
    result = self.__eq__(other)
    if result is NotImplemented:
      return result
    return not result

  def __hash__(self):
    return hash((self.field.p, self.field.k, self.value))

  def __int__(self):
    return self.value

  __index__ = __int__

  def __repr__(self):
    return "%r(%d)" % (self.field, self.value)


@functools.lru_cache(maxsize=None)
def field_build(prime, degree):
  """
  Builds (once) the field GF(prime**degree).

  :param prime:
      The characteristic; must be prime.
  :param degree:
      Degree ``k >= 1``.
  :returns:
      :class:`FiniteField`.
  """
  if not _compat.is_integer(prime) or not arith.is_prime(prime):
    raise FieldError("characteristic %r is not prime" % (prime,))
  if not _compat.is_integer(degree) or degree < 1:
    raise FieldError("degree %r must be a positive integer" % (degree,))
  if prime ** degree > MAX_FIELD_ORDER:
    raise FieldError("GF(%d^%d) exceeds the field cap 2**32" % (prime, degree))
  return FiniteField(prime, degree)


def projective_line_points(field):
  """Number of points of PG(1, q); point ``q`` is infinity."""
  return field.order + 1


def projective_line_image(field, matrix, twist=0):
  """
  Images of the points of PG(1, q) under
  ``x -> (a x^s + b) / (c x^s + d)`` where ``s = p**twist``.

  :param matrix:
      ``(a, b, c, d)`` as encodings.
  :returns:
      List of point indices; index ``q`` is infinity.
  """
  num_a, num_b, num_c, num_d = matrix
  infinity = field.order
  images = []
  for point in range(field.order + 1):
    if point == infinity:
      top, bottom = num_a, num_c
    else:
      value = field.power(point, field.p ** twist) if twist else point
      top = field.add(field.mul(num_a, value), num_b)
      bottom = field.add(field.mul(num_c, value), num_d)
    if not bottom:
      images.append(infinity)
    else:
      images.append(field.div(top, bottom))
  return images
