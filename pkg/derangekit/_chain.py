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

"""Deterministic Schreier-Sims stabilizer chains.

Elements are plain tuples of images. The chain is built with a fixed rule
(new base points are the smallest moved point of the offending element), so
the same generators always give the same base and transversals.
"""

from __future__ import absolute_import

import logging

import numpy as np

from derangekit import _compat


__author__ = "yesudeep@google.com (Yesudeep Mangalapilly)"


LOG = logging.getLogger(__name__)


def _compose(img_a, img_b):
  return tuple(img_a[x] for x in img_b)


def _inverse(img):
  result = [0] * len(img)
  for i, x in enumerate(img):
    result[x] = i
  return tuple(result)


def _smallest_moved(img):
  for i, x in enumerate(img):
    if i != x:
      return i
  return None


class _Level(object):
  """One level: base point, strong generators fixing earlier points and
  the transversal of the basic orbit."""

  __slots__ = ("point", "gens", "orbit", "transversal", "inverses",
               "verified")

  def __init__(self, point, identity):
    self.point = point
    self.gens = []
    self.orbit = [point]
    self.transversal = {point: identity}
    self.inverses = {point: identity}
    self.verified = set()

  def extend_orbit(self):
    """Closes the orbit under the current generators, keeping old entries."""
    index = 0
    while index < len(self.orbit):
      point = self.orbit[index]
      word = self.transversal[point]
      for gen in self.gens:
        image = gen[point]
        if image not in self.transversal:
          new_word = _compose(gen, word)
          self.transversal[image] = new_word
          self.inverses[image] = _inverse(new_word)
          self.orbit.append(image)
      index += 1


class StabilizerChain(object):
  """
  A base and strong generating set for the group generated by ``gens``.

  :param degree:
      Number of points.
  :param gens:
      Iterable of image tuples.
  :param base:
      Optional prefix of base points, used as given.
  """

  def __init__(self, degree, gens, base=None):
    self.degree = degree
    self.identity = tuple(range(degree))
    self.levels = []
    for point in base or ():
      self.levels.append(_Level(point, self.identity))
    self.gens = []
    for gen in gens:
      gen = tuple(gen)
      if gen != self.identity and gen not in self.gens:
        self.gens.append(gen)
    for gen in self.gens:
      self._install(gen, 0)
    self._schreier_sims(len(self.levels) - 1)
    LOG.debug("chain of degree %d: base %r, orbit sizes %r", degree,
              self.base, [len(level.orbit) for level in self.levels])

  @property
  def base(self):
    return [level.point for level in self.levels]

  def order(self):
    result = 1
    for level in self.levels:
      result *= len(level.orbit)
    return result

  def _install(self, gen, first):
    """Adds ``gen`` as a strong generator on levels ``first..`` it fixes."""
    if all(gen[level.point] == level.point for level in self.levels):
      self.levels.append(_Level(_smallest_moved(gen), self.identity))
    for index in range(first, len(self.levels)):
      level = self.levels[index]
      level.gens.append(gen)
      level.extend_orbit()
      if gen[level.point] != level.point:
        break

  def sift(self, img, start=0):
    """
    Strips ``img`` through the chain.

    :returns:
        ``(residue, depth)``; ``depth == len(base)`` and an identity
        residue mean membership.
    """
    for depth in range(start, len(self.levels)):
      level = self.levels[depth]
      image = img[level.point]
      inverse = level.inverses.get(image)
      if inverse is None:
        return img, depth
      img = _compose(inverse, img)
    return img, len(self.levels)

  def contains(self, img):
    if len(img) != self.degree:
      return False
    residue, _ = self.sift(tuple(img))
    return residue == self.identity

  def _schreier_sims(self, index):
    while index >= 0:
      level = self.levels[index]
      moved_to = None
      for beta in list(level.orbit):
        word = level.transversal[beta]
        for gen_index, gen in enumerate(level.gens):
          if (beta, gen_index) in level.verified:
            continue
          image = gen[beta]
          schreier = _compose(level.inverses[image], _compose(gen, word))
          residue, depth = self.sift(schreier, index + 1)
          if residue != self.identity:
            if depth == len(self.levels):
              self.levels.append(_Level(_smallest_moved(residue),
                                        self.identity))
            for lower in range(index + 1, depth + 1):
              self.levels[lower].gens.append(residue)
              self.levels[lower].extend_orbit()
            moved_to = depth
            break
          level.verified.add((beta, gen_index))
        if moved_to is not None:
          break
      if moved_to is None:
        index -= 1
      else:
        index = moved_to

  def extend(self, img):
    """
    Adds a generator unless it already lies in the group.

    :returns:
        ``True`` when the group grew.
    """
    img = tuple(img)
    if self.contains(img):
      return False
    self.gens.append(img)
    self._install(img, 0)
    self._schreier_sims(len(self.levels) - 1)
    return True

  def transversal_array(self, index, dtype):
    level = self.levels[index]
    return np.array([level.transversal[point] for point in level.orbit],
                    dtype=dtype)

  def enumerate(self, dtype=None):
    """
    Every element as a row of a ``(order, degree)`` array; row 0 is the
    identity.
    """
    dtype = dtype or _compat.point_dtype(self.degree)
    elements = np.arange(self.degree, dtype=dtype)[None, :]
    for index in reversed(range(len(self.levels))):
      reps = self.transversal_array(index, dtype)
      elements = reps[:, elements].reshape(-1, self.degree)
    return elements

  def stabilizer_gens(self, depth):
    """Strong generators of the stabilizer of the first ``depth`` points."""
    if depth >= len(self.levels):
      return []
    return list(self.levels[depth].gens)

  def random_element(self, rng):
    img = self.identity
    for level in reversed(self.levels):
      point = level.orbit[rng.randrange(len(level.orbit))]
      img = _compose(level.transversal[point], img)
    return img
