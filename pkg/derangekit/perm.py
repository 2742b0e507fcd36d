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

""":synopsis: Permutations and their exact arithmetic.
:module: derangekit.perm

Points are ``0..n-1`` internally; text uses 1-based disjoint cycle notation
such as ``(1,2)(3,4)``, and the identity renders as ``()``.

``compose(a, b)`` is function composition: ``compose(a, b)[i] == a[b[i]]``,
so ``b`` acts first. ``conjugate(a, g)`` is ``g^-1 a g``.

Permutations
------------
.. autoclass:: Permutation
   :members:
.. autoclass:: CycleType
.. autofunction:: compose
.. autofunction:: inverse
.. autofunction:: conjugate
.. autofunction:: cycle_type
.. autofunction:: order
.. autofunction:: fixed_points
.. autofunction:: is_derangement
.. autofunction:: parse_cycles
.. autofunction:: format_cycles
"""

from __future__ import absolute_import

import functools
import random as _random
import re

import numpy as np

from derangekit import _compat
from derangekit import arith
from derangekit.errors import DegreeMismatchError
from derangekit.errors import MalformedPermutationError


__author__ = "yesudeep@google.com (Yesudeep Mangalapilly)"


__all__ = [
    "CycleType",
    "MAX_DEGREE",
    "Permutation",
    "compose",
    "conjugate",
    "cycle_type",
    "fixed_points",
    "format_cycles",
    "inverse",
    "is_derangement",
    "order",
    "parse_cycles",
    ]


MAX_DEGREE = 1 << 16

_CYCLE_PATTERN = re.compile(r"\(([^()]*)\)")


class CycleType(tuple):
  """Cycle lengths of a permutation, longest first; fixed points count as 1."""

  def __new__(cls, lengths):
    return tuple.__new__(cls, sorted(lengths, reverse=True))

  def render(self):
    """Exponential notation, e.g. ``2^2 1``."""
    parts = []
    for length in sorted(set(self), reverse=True):
      count = self.count(length)
      parts.append("%d^%d" % (length, count) if count > 1 else str(length))
    return " ".join(parts)


class Permutation(object):
  """
  An immutable permutation of ``0..n-1``.

  :param images:
      Sequence whose entry ``i`` is the image of point ``i``.
  :param check:
      Validate that the images form a bijection.
  """

  __slots__ = ("_img", "_hash")

  def __init__(self, images, check=True):
    img = tuple(int(x) for x in images)
    if check:
      degree = len(img)
      if degree > MAX_DEGREE:
        raise MalformedPermutationError(
            "degree %d exceeds the cap %d" % (degree, MAX_DEGREE))
      if sorted(img) != list(range(degree)):
        raise MalformedPermutationError(
            "images %r are not a bijection of 0..%d" % (img[:20], degree - 1))
    self._img = img
    self._hash = None

  @classmethod
  def identity(cls, degree):
    return cls(range(degree), check=False)

  @classmethod
  def from_cycles(cls, cycles, degree):
    """Builds from 0-based cycles, e.g. ``[(0, 1), (2, 3)]``."""
    img = list(range(degree))
    seen = set()
    for cycle in cycles:
      for point in cycle:
        if not 0 <= point < degree or point in seen:
          raise MalformedPermutationError(
              "bad point %r in cycles %r of degree %d" % (point, cycles,
                                                          degree))
        seen.add(point)
      for i, point in enumerate(cycle):
        img[point] = cycle[(i + 1) % len(cycle)]
    return cls(img, check=False)

  @classmethod
  def random(cls, degree, rng=None):
    rng = rng or _random.Random(0)
    img = list(range(degree))
    rng.shuffle(img)
    return cls(img, check=False)

  @property
  def degree(self):
    return len(self._img)

  @property
  def images(self):
    return self._img

  def as_array(self):
    return np.array(self._img, dtype=_compat.point_dtype(len(self._img)))

  def __getitem__(self, point):
    return self._img[point]

  def __len__(self):
    return len(self._img)

  def __call__(self, point):
    return self._img[point]

  def __mul__(self, other):
    return compose(self, other)

  def __pow__(self, exponent):
    return power(self, exponent)

  def __invert__(self):
    return inverse(self)

  def inverse(self):
    return inverse(self)

  def conjugate(self, other):
    return conjugate(self, other)

  def is_identity(self):
    return all(i == x for i, x in enumerate(self._img))

  def cycles(self):
    return cycles(self)

  def cycle_type(self):
    return cycle_type(self)

  def order(self):
    return order(self)

  def fixed_points(self):
    return fixed_points(self)

  def is_derangement(self):
    return is_derangement(self)

  def sign(self):
    return sign(self)

  def __eq__(self, other):
    if not isinstance(other, Permutation):
      return NotImplemented
    return self._img == other._img

  def __ne__(self, other):
    if not isinstance(other, Permutation):
      return NotImplemented
    return self._img != other._img

  def __lt__(self, other):
    return self._img < other._img

  def __hash__(self):
    if self._hash is None:
      self._hash = hash(self._img)
    return self._hash

  def __str__(self):
    return format_cycles(self)

  def __repr__(self):
    return "Permutation(%r)" % (format_cycles(self),)


def _check_degrees(perm_a, perm_b):
  if len(perm_a) != len(perm_b):
    raise DegreeMismatchError("degrees %d and %d differ" % (len(perm_a),
                                                          len(perm_b)))


def compose(perm_a, perm_b):
  """``a o b``: apply ``b`` first, then ``a``."""
  _check_degrees(perm_a, perm_b)
  img_a = perm_a.images
  return Permutation([img_a[x] for x in perm_b.images], check=False)


def inverse(perm):
  img = [0] * len(perm)
  for i, x in enumerate(perm.images):
    img[x] = i
  return Permutation(img, check=False)


def conjugate(perm, other):
  """``g^-1 a g`` for ``perm = a`` and ``other = g``."""
  _check_degrees(perm, other)
  inv = inverse(other).images
  img_a = perm.images
  return Permutation([inv[img_a[x]] for x in other.images], check=False)


def power(perm, exponent):
  if exponent < 0:
    perm = inverse(perm)
    exponent = -exponent
  result = Permutation.identity(len(perm))
  base = perm
  while exponent:
    if exponent & 1:
      result = compose(result, base)
    base = compose(base, base)
    exponent >>= 1
  return result


def cycles(perm):
  """Nontrivial cycles, each starting at its smallest point."""
  seen = [False] * len(perm)
  result = []
  img = perm.images
  for start in range(len(img)):
    if seen[start]:
      continue
    cycle = [start]
    seen[start] = True
    point = img[start]
    while point != start:
      cycle.append(point)
      seen[point] = True
      point = img[point]
    if len(cycle) > 1:
      result.append(tuple(cycle))
  return result


def cycle_type(perm):
  lengths = [len(c) for c in cycles(perm)]
  lengths.extend([1] * (len(perm) - sum(lengths)))
  return CycleType(lengths)


def order(perm):
  """Least common multiple of the cycle lengths."""
  return functools.reduce(arith.lcm, (len(c) for c in cycles(perm)), 1)


def fixed_points(perm):
  return frozenset(i for i, x in enumerate(perm.images) if i == x)


def is_derangement(perm):
  return all(i != x for i, x in enumerate(perm.images))


def sign(perm):
  """``+1`` for even permutations and ``-1`` for odd ones."""
  parity = sum(len(c) - 1 for c in cycles(perm)) % 2
  return -1 if parity else 1


def parse_cycles(text, degree):
  """
  Parses 1-based disjoint cycle notation.

  :param text:
      For example ``"(1,2)(3,4,5)"``; ``"()"`` is the identity. Commas or
      whitespace separate points.
  :param degree:
      Degree of the result.
  """
  text = text.strip()
  stripped = _CYCLE_PATTERN.sub("", text).strip()
  if stripped:
    raise MalformedPermutationError("cannot parse cycles %r" % text)
  cycles_found = []
  for body in _CYCLE_PATTERN.findall(text):
    tokens = [t for t in re.split(r"[,\s]+", body.strip()) if t]
    try:
      points = [int(t) - 1 for t in tokens]
    except ValueError:
      raise MalformedPermutationError("cannot parse cycle %r" % body)
    if points:
      cycles_found.append(points)
  return Permutation.from_cycles(cycles_found, degree)


def format_cycles(perm):
  """1-based disjoint cycle notation; identity is ``()``."""
  found = cycles(perm)
  if not found:
    return "()"
  return "".join("(%s)" % ",".join(str(p + 1) for p in c) for c in found)
