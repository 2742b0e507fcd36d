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

"""Affine groups V:H and their derangement classes computed from H alone.

Points of V = GF(p)^dim are encoded in base p. An element ``x -> h(x) + v``
fixes a point exactly when ``v`` lies in ``Im(h - 1)``, and two such elements
with the same linear part are conjugate exactly when their translation
cosets modulo ``Im(h - 1)`` lie in one ``C_H(h)``-orbit. So the derangement
classes over an H-class representative ``h`` are the ``C_H(h)``-orbits on the
nonzero cosets of ``V / Im(h - 1)``.
"""

from __future__ import absolute_import

import logging

import numpy as np
from scipy import sparse
from scipy.sparse import csgraph

from derangekit.engine import PermGroup
from derangekit.errors import CapExceededError
from derangekit.perm import Permutation


__author__ = "yesudeep@google.com (Yesudeep Mangalapilly)"


LOG = logging.getLogger(__name__)


class AffineGroup(PermGroup):
  """
  ``V:H`` acting on ``V``, where ``linear_part`` is ``H`` as a group of
  permutations of the same points fixing 0.
  """

  def __init__(self, prime, dim, linear_part, translations, name=None,
               cap=None, tier="core"):
    PermGroup.__init__(self, prime ** dim,
                       list(linear_part.gens) + list(translations),
                       name=name, cap=cap, tier=tier)
    self.p = prime
    self.dim = dim
    self.linear_part = linear_part

  def order(self):
    return self.degree * self.linear_part.order()

  def translation_subgroup(self):
    """The regular normal subgroup ``V``."""
    return self._child([translation(self.p, self.dim, self.p ** i)
                        for i in range(self.dim)],
                       name="%s translations" % (self.name or "V"))


def _digits(codes, prime, dim):
  codes = np.asarray(codes, dtype=np.int64)
  digits = np.zeros(codes.shape + (dim,), dtype=np.int64)
  for i in range(dim):
    codes, digits[..., i] = np.divmod(codes, prime)
  return digits


def _encode(digits, prime):
  dim = digits.shape[-1]
  weights = np.array([prime ** i for i in range(dim)], dtype=np.int64)
  return (digits % prime).dot(weights)


def _coset_labels(image_codes, all_digits, prime):
  """Smallest code in ``x + Im`` for every point ``x``."""
  image_digits = _digits(image_codes, prime, all_digits.shape[1])
  sums = all_digits[:, None, :] + image_digits[None, :, :]
  return _encode(sums, prime).min(axis=1)


def translation(prime, dim, vector_code):
  digits = _digits(np.arange(prime ** dim), prime, dim)
  shift = _digits(np.array([vector_code]), prime, dim)[0]
  return Permutation(_encode(digits + shift, prime), check=False)


def affine_derangement_classes(group):
  """
  Derangement classes of an :class:`AffineGroup` acting on V.

  :returns:
      List of ``(representative, size, order)`` triples in a fixed order:
      by H-class, then by smallest coset label.
  """
  if group.order() > group.cap:
    raise CapExceededError("elements", group.order(), group.cap, group.tier)
  prime, dim = group.p, group.dim
  linear = group.linear_part
  degree = group.degree
  points = np.arange(degree, dtype=np.int64)
  all_digits = _digits(points, prime, dim)
  store = linear.store
  elements = store.elements.astype(np.intp)
  table = linear.classes
  result = []
  for class_index, rep in enumerate(table.reps):
    images = np.array(rep.images, dtype=np.intp)
    moved = _encode(all_digits[images] - all_digits, prime)
    image_codes = np.unique(moved)
    labels = _coset_labels(image_codes, all_digits, prime)
    reps = np.unique(labels)
    reps = reps[reps != 0]
    if not reps.size:
      continue
    commuting = (images[elements] == elements[:, images]).all(axis=1)
    centralizer = elements[commuting]
    node_of = np.full(degree, -1, dtype=np.intp)
    node_of[reps] = np.arange(reps.size, dtype=np.intp)
    targets = node_of[labels[centralizer[:, reps]]]
    sources = np.broadcast_to(np.arange(reps.size, dtype=np.intp),
                              targets.shape)
    graph = sparse.csr_matrix(
        (np.ones(targets.size, dtype=np.int8),
         (sources.ravel(), targets.ravel())), shape=(reps.size, reps.size))
    count, components = csgraph.connected_components(graph, directed=False)
    first = np.full(count, reps.size, dtype=np.intp)
    np.minimum.at(first, components, np.arange(reps.size, dtype=np.intp))
    orbit_sizes = np.bincount(components, minlength=count)
    for component in np.argsort(first, kind="stable"):
      shift = all_digits[reps[first[component]]]
      perm = Permutation(_encode(all_digits[images] + shift, prime),
                         check=False)
      size = (int(table.sizes[class_index]) * int(image_codes.size) *
              int(orbit_sizes[component]))
      result.append((perm, size, perm.order()))
  LOG.debug("affine group of degree %d: %d derangement classes", degree,
            len(result))
  return result


def affine_action_flags(group):
  """Sharp 2-transitivity and Frobenius property read off ``H``."""
  linear = group.linear_part
  order = linear.order()
  nonzero = [orbit for orbit in linear.orbits() if orbit != [0]]
  two_transitive = len(nonzero) == 1
  frobenius = order > 1 and all(len(orbit) == order for orbit in nonzero)
  sharply = two_transitive and order == group.degree - 1
  return two_transitive, sharply, frobenius
