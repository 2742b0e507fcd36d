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

""":synopsis: Finite permutation groups.
:module: derangekit.engine

A :class:`PermGroup` is a generator list plus three lazily built layers:

* a stabilizer chain (order, membership, point stabilizers);
* an element store, every element as a row of a numpy array, keyed by its
  images of the chain base so that whole batches can be looked up at once;
* a conjugacy class table, obtained as the orbits of conjugation by the
  generators on the store.

Subgroups are always generator lists of the parent's degree. Everything that
needs a set of elements (centralizers, cores, normalizers, stabilizers of
sets) works with boolean masks over the parent's store and turns the mask
back into generators with :meth:`PermGroup.subgroup_from_mask`.

Groups
------
.. autoclass:: PermGroup
   :members:
.. autoclass:: ElementStore
   :members:
.. autoclass:: ConjClassTable
   :members:
.. autofunction:: group_from_generators

Actions
-------
.. autoclass:: CosetAction
   :members:
.. autofunction:: coset_action
.. autoclass:: ActionStructure
   :members:
.. autofunction:: structure_predicates
"""

from __future__ import absolute_import
from __future__ import division

import collections
import functools
import logging
import random as _random

import numpy as np
from scipy import sparse
from scipy.sparse import csgraph

from derangekit import _compat
from derangekit import arith
from derangekit import settings
from derangekit._chain import StabilizerChain
from derangekit.collections import Record
from derangekit.decorators import lazy_attribute
from derangekit.decorators import timed
from derangekit.errors import ActionError
from derangekit.errors import CapExceededError
from derangekit.errors import DegreeMismatchError
from derangekit.errors import MalformedPermutationError
from derangekit.errors import MembershipError
from derangekit.perm import MAX_DEGREE
from derangekit.perm import Permutation


__author__ = "yesudeep@google.com (Yesudeep Mangalapilly)"


__all__ = [
    "ActionStructure",
    "ConjClassTable",
    "CosetAction",
    "ElementStore",
    "PermGroup",
    "coset_action",
    "group_from_generators",
    "structure_predicates",
    ]


LOG = logging.getLogger(__name__)


def _as_images(gen, degree):
  if isinstance(gen, Permutation):
    images = gen.images
  else:
    images = Permutation(gen).images
  if len(images) != degree:
    raise DegreeMismatchError("generator of degree %d in a group of degree %d"
                              % (len(images), degree))
  return images


def _compose_rows(rows_a, rows_b):
  """Row-wise ``a o b`` for two equally shaped arrays of permutations."""
  return np.take_along_axis(rows_a, rows_b.astype(np.intp), axis=1)


class ElementStore(object):
  """
  Every element of a group, materialized.

  :attr elements:
      ``(order, degree)`` array; row 0 is the identity.
  :attr base:
      Chain base; an element is determined by its images of these points.
  """

  def __init__(self, chain):
    self.degree = chain.degree
    self.base = np.array(chain.base, dtype=np.intp)
    self.elements = chain.enumerate()
    self.order = self.elements.shape[0]
    self._weights = None
    self._table = None
    if self.degree ** max(1, len(self.base)) <= _compat.INT64_MAX:
      self._weights = np.array([self.degree ** i
                                for i in range(len(self.base))],
                               dtype=np.int64)
      keys = self._keys(self.elements[:, self.base])
      self._order = np.argsort(keys, kind="stable")
      self._sorted = keys[self._order]
    else:
      rows = self.elements[:, self.base].astype(np.int64)
      self._table = dict((row.tobytes(), i) for i, row in enumerate(rows))
    LOG.debug("element store of order %d on %d points, base length %d",
              self.order, self.degree, len(self.base))

  def _keys(self, base_images):
    return np.asarray(base_images, dtype=np.int64).dot(self._weights)

  def index_of_base(self, base_images):
    """
    Row indices of the elements with the given base images; ``-1`` where
    no element matches.
    """
    base_images = np.asarray(base_images, dtype=np.int64)
    if base_images.ndim == 1:
      base_images = base_images[None, :]
    if not len(self.base):
      return np.zeros(base_images.shape[0], dtype=np.intp)
    if self._table is not None:
      return np.array([self._table.get(row.tobytes(), -1)
                       for row in base_images], dtype=np.intp)
    keys = self._keys(base_images)
    pos = np.searchsorted(self._sorted, keys)
    pos = np.minimum(pos, self.order - 1)
    found = self._sorted[pos] == keys
    return np.where(found, self._order[pos], -1).astype(np.intp)

  def index_of(self, perms):
    """Row indices of whole permutations (verified); ``-1`` for strangers."""
    perms = np.asarray(perms)
    if perms.ndim == 1:
      perms = perms[None, :]
    idx = self.index_of_base(perms[:, self.base])
    hit = idx >= 0
    if hit.any():
      same = (self.elements[idx[hit]] == perms[hit]).all(axis=1)
      bad = np.flatnonzero(hit)[~same]
      idx[bad] = -1
    return idx

  def mask_of(self, perms):
    mask = np.zeros(self.order, dtype=bool)
    idx = self.index_of(perms)
    mask[idx[idx >= 0]] = True
    return mask

  @lazy_attribute
  def inverses(self):
    """Array of inverses; row ``i`` inverts row ``i``."""
    inv = np.empty_like(self.elements)
    points = np.broadcast_to(np.arange(self.degree, dtype=self.elements.dtype),
                             self.elements.shape)
    np.put_along_axis(inv, self.elements.astype(np.intp), points, axis=1)
    return inv

  @lazy_attribute
  def inverse_index(self):
    return self.index_of_base(self.inverses[:, self.base])

  def conjugation_index(self, gen):
    """Index map ``i -> index(g^-1 x_i g)`` for a member ``g``."""
    gen = np.asarray(gen, dtype=np.intp)
    gen_inv = np.argsort(gen)
    images = gen_inv[self.elements[:, gen[self.base]]]
    return self.index_of_base(images)

  def perm(self, index):
    return Permutation(self.elements[index], check=False)


class ConjClassTable(object):
  """
  Conjugacy classes of a group, ordered by the smallest store index of their
  elements; class 0 is the identity.

  :attr reps:
      Class representatives (:class:`Permutation`).
  :attr sizes:
      Class sizes.
  :attr class_of:
      Store index to class index.
  :attr orders:
      Element order per class.
  :attr centralizer_orders:
      ``|C_G(x)|`` per class.
  """

  def __init__(self, group, store):
    self.group = group
    self.store = store
    order = store.order
    if group.gens and order > 1:
      rows, cols = [], []
      for gen in group.gens:
        cols.append(store.conjugation_index(gen.images))
        rows.append(np.arange(order, dtype=np.intp))
      rows = np.concatenate(rows)
      cols = np.concatenate(cols)
      graph = sparse.csr_matrix((np.ones(rows.size, dtype=np.int8),
                                 (rows, cols)), shape=(order, order))
      count, labels = csgraph.connected_components(graph, directed=False)
    else:
      count, labels = order, np.arange(order)
    first = np.full(count, order, dtype=np.intp)
    np.minimum.at(first, labels, np.arange(order, dtype=np.intp))
    rank = np.argsort(first, kind="stable")
    relabel = np.empty(count, dtype=np.intp)
    relabel[rank] = np.arange(count, dtype=np.intp)
    self.class_of = relabel[labels]
    self.first_index = first[rank]
    self.sizes = np.bincount(self.class_of, minlength=count).astype(np.int64)
    self.reps = [store.perm(i) for i in self.first_index]
    self.orders = [rep.order() for rep in self.reps]
    self.centralizer_orders = [order // int(size) for size in self.sizes]
    LOG.debug("%d conjugacy classes in a group of order %d", count, order)

  def __len__(self):
    return len(self.reps)

  def class_index(self, element):
    idx = self.store.index_of(np.array(element.images))[0]
    if idx < 0:
      raise MembershipError("%s is not in the group" % element)
    return int(self.class_of[idx])

  def power_map(self, exponent):
    """Class index of ``x**exponent`` for each class representative."""
    result = []
    for rep in self.reps:
      result.append(self.class_index(rep ** exponent))
    return result

  def hits(self, mask):
    """Number of elements of ``mask`` in each class."""
    return np.bincount(self.class_of[mask], minlength=len(self.reps))

  def mask_of_classes(self, class_indices):
    chosen = np.zeros(len(self.reps), dtype=bool)
    chosen[list(class_indices)] = True
    return chosen[self.class_of]


class PermGroup(object):
  """
  A permutation group given by generators.

  :param degree:
      Number of points.
  :param gens:
      :class:`Permutation` instances or image sequences.
  :param name:
      Optional label used in reports.
  :param cap:
      Element cap for materialization; defaults to the core tier cap.
  :param tier:
      ``"core"`` or ``"extended"``; only used for error messages.
  """

  def __init__(self, degree, gens, name=None, cap=None, tier="core",
               base=None):
    if degree > MAX_DEGREE:
      raise MalformedPermutationError("degree %d exceeds the cap %d"
                                      % (degree, MAX_DEGREE))
    self.degree = int(degree)
    seen = []
    for gen in gens:
      images = _as_images(gen, self.degree)
      if images != tuple(range(self.degree)) and images not in seen:
        seen.append(images)
    self.gens = [Permutation(images, check=False) for images in seen]
    self.name = name
    self.tier = tier
    self.cap = cap if cap is not None else settings.element_cap(tier)
    self._base_prefix = base

  def __repr__(self):
    label = self.name or "group"
    return "<PermGroup %s degree=%d gens=%d>" % (label, self.degree,
                                                 len(self.gens))

  def _child(self, gens, name=None):
    return PermGroup(self.degree, gens, name=name, cap=self.cap,
                     tier=self.tier)

  # Chain level.

  @lazy_attribute
  def chain(self):
    return StabilizerChain(self.degree, [g.images for g in self.gens],
                           base=self._base_prefix)

  def order(self):
    return self.chain.order()

  def contains(self, element):
    images = _as_images(element, self.degree)
    return self.chain.contains(images)

  __contains__ = contains

  def identity(self):
    return Permutation.identity(self.degree)

  def random_element(self, rng=None):
    rng = rng or _random.Random(0)
    return Permutation(self.chain.random_element(rng), check=False)

  def orbit(self, point):
    seen = [point]
    known = set(seen)
    for current in seen:
      for gen in self.gens:
        image = gen[current]
        if image not in known:
          known.add(image)
          seen.append(image)
    return sorted(seen)

  def orbits(self):
    result, covered = [], set()
    for point in range(self.degree):
      if point not in covered:
        orbit = self.orbit(point)
        covered.update(orbit)
        result.append(orbit)
    return result

  def is_transitive(self):
    return len(self.orbit(0)) == self.degree if self.degree else True

  def point_stabilizer(self, point):
    chain = StabilizerChain(self.degree, [g.images for g in self.gens],
                            base=[point])
    return self._child(chain.stabilizer_gens(1))

  def is_subgroup(self, other):
    return all(self.contains(g) for g in other.gens)

  def _require_subgroup(self, other):
    if other.degree != self.degree:
      raise DegreeMismatchError("subgroup of degree %d in a group of degree %d"
                                % (other.degree, self.degree))
    if not self.is_subgroup(other):
      raise MembershipError("%r is not a subgroup of %r" % (other, self))

  def subgroup(self, gens, name=None):
    """The subgroup generated by ``gens``, which must be members."""
    child = self._child(gens, name=name)
    self._require_subgroup(child)
    return child

  def is_normal(self, other):
    for gen in self.gens:
      for sub_gen in other.gens:
        if not other.contains(sub_gen.conjugate(gen)):
          return False
    return True

  def conjugate(self, other, element):
    """``other^g`` for a subgroup ``other`` and an element ``g``."""
    return self._child([k.conjugate(element) for k in other.gens])

  def normal_closure(self, gens):
    """Smallest normal subgroup containing ``gens``."""
    gens = [Permutation(_as_images(g, self.degree), check=False)
            for g in gens]
    chain = StabilizerChain(self.degree, [g.images for g in gens])
    queue = list(chain.gens)
    while queue:
      current = queue.pop()
      for gen in self.gens:
        image = Permutation(current).conjugate(gen).images
        if chain.extend(image):
          queue.append(image)
    closure = self._child(chain.gens)
    closure.__dict__["_lazy_chain"] = chain
    return closure

  def derived_subgroup(self):
    commutators = []
    for gen_a in self.gens:
      for gen_b in self.gens:
        comm = gen_a.inverse() * gen_b.inverse() * gen_a * gen_b
        if not comm.is_identity():
          commutators.append(comm)
    return self.normal_closure(commutators)

  def derived_series_orders(self):
    orders = [self.order()]
    current = self
    while True:
      derived = current.derived_subgroup()
      if derived.order() == orders[-1]:
        return orders
      orders.append(derived.order())
      current = derived

  def is_abelian(self):
    return all((a * b) == (b * a) for a in self.gens for b in self.gens)

  # Store level.

  @lazy_attribute
  def store(self):
    order = self.order()
    if order > self.cap:
      raise CapExceededError("elements", order, self.cap, self.tier)
    return ElementStore(self.chain)

  def elements(self):
    return self.store.elements

  def element_index(self, element):
    idx = self.store.index_of(np.array(_as_images(element, self.degree)))[0]
    if idx < 0:
      raise MembershipError("%s is not in %r" % (element, self))
    return int(idx)

  @lazy_attribute
  @timed(__name__)
  def classes(self):
    return ConjClassTable(self, self.store)

  def conjugacy_classes(self):
    return self.classes

  def is_conjugate_in(self, elem_a, elem_b):
    return (self.classes.class_index(elem_a) ==
            self.classes.class_index(elem_b))

  def subgroup_mask(self, other):
    """Mask over this group's store marking the elements of ``other``."""
    if other.order() > self.order():
      raise MembershipError("%r is larger than %r" % (other, self))
    idx = self.store.index_of(other.store.elements)
    if (idx < 0).any():
      raise MembershipError("%r is not a subgroup of %r" % (other, self))
    mask = np.zeros(self.store.order, dtype=bool)
    mask[idx] = True
    return mask

  def subgroup_from_mask(self, mask, name=None):
    """
    Generators for the subgroup whose elements are ``mask``.

    :returns:
        :class:`PermGroup`, or ``None`` when the mask is not a subgroup.
    """
    store = self.store
    count = int(mask.sum())
    if not count or not mask[0]:
      return None
    chain = StabilizerChain(self.degree, [])
    covered = np.zeros(store.order, dtype=bool)
    covered[0] = True
    while True:
      candidates = np.flatnonzero(mask & ~covered)
      if not candidates.size:
        break
      chain.extend(tuple(int(x) for x in store.elements[candidates[0]]))
      if chain.order() > count:
        return None
      idx = store.index_of(chain.enumerate())
      if (idx < 0).any() or not mask[idx].all():
        return None
      covered[idx] = True
    group = self._child(chain.gens, name=name)
    group.__dict__["_lazy_chain"] = chain
    return group

  def centralizer(self, element):
    images = np.array(_as_images(element, self.degree), dtype=np.intp)
    if not self.contains(images):
      raise MembershipError("%s is not in %r" % (element, self))
    elements = self.store.elements
    mask = (images[elements] == elements[:, images]).all(axis=1)
    return self.subgroup_from_mask(mask)

  def centralizer_order(self, element):
    images = np.array(_as_images(element, self.degree), dtype=np.intp)
    elements = self.store.elements
    return int((images[elements] == elements[:, images]).all(axis=1).sum())

  def center(self):
    elements = self.store.elements
    mask = np.ones(self.store.order, dtype=bool)
    for gen in self.gens:
      images = np.array(gen.images, dtype=np.intp)
      mask &= (images[elements] == elements[:, images]).all(axis=1)
    return self.subgroup_from_mask(mask)

  def normal_core(self, other):
    mask = self.subgroup_mask(other)
    table = self.classes
    inside = table.hits(mask) == table.sizes
    return self.subgroup_from_mask(inside[table.class_of])

  def normalizer(self, other):
    self._require_subgroup(other)
    store = self.store
    other_mask = self.subgroup_mask(other)
    mask = np.ones(store.order, dtype=bool)
    for gen in other.gens:
      images = np.array(gen.images, dtype=np.intp)
      # g^-1 k g on the base, for every g at once.
      moved = images[store.elements[:, store.base]]
      conj = np.take_along_axis(store.inverses, moved.astype(np.intp), axis=1)
      idx = store.index_of_base(conj)
      mask &= other_mask[idx]
    return self.subgroup_from_mask(mask)

  def intersection(self, other_a, other_b=None):
    """``self`` meet ``other_a``, or ``other_a`` meet ``other_b`` inside
    ``self``."""
    if other_b is None:
      mask = np.ones(self.store.order, dtype=bool)
    else:
      mask = self.subgroup_mask(other_b)
    return self.subgroup_from_mask(mask & self.subgroup_mask(other_a))

  def set_stabilizer(self, points):
    points = np.array(sorted(points), dtype=np.intp)
    images = self.store.elements[:, points]
    mask = np.isin(images, points).all(axis=1)
    return self.subgroup_from_mask(mask)

  def partition_mask(self, blocks):
    """Store mask of the elements mapping every block onto a block."""
    labels = np.full(self.degree, -1, dtype=np.intp)
    for index, block in enumerate(blocks):
      labels[list(block)] = index
    elements = self.store.elements
    mask = np.ones(self.store.order, dtype=bool)
    for block in blocks:
      image_labels = labels[elements[:, list(block)]]
      mask &= (image_labels == image_labels[:, :1]).all(axis=1)
    return mask

  def partition_stabilizer(self, blocks):
    return self.subgroup_from_mask(self.partition_mask(blocks))

  def powers_of_elements(self, indices, exponent):
    """Store indices of ``x**exponent`` for the given store indices."""
    base = self.store.elements[indices].astype(np.intp)
    result = np.broadcast_to(np.arange(self.degree, dtype=np.intp),
                             base.shape).copy()
    square = base
    while exponent:
      if exponent & 1:
        result = _compose_rows(result, square)
      square = _compose_rows(square, square)
      exponent >>= 1
    return self.store.index_of_base(result[:, self.store.base])

  def sylow(self, prime):
    """A Sylow ``prime``-subgroup, grown one element of order p mod P at a
    time inside normalizers."""
    order = self.order()
    if order % prime:
      raise ValueError("%d does not divide |G| = %d" % (prime, order))
    target = arith.p_part(order, prime)
    current = self._child([])
    while current.order() < target:
      normalizer_mask = self.subgroup_mask(self.normalizer(current))
      current_mask = self.subgroup_mask(current)
      candidates = np.flatnonzero(normalizer_mask & ~current_mask)
      powers = self.powers_of_elements(candidates, prime)
      chosen = candidates[current_mask[powers]]
      gens = list(current.gens) + [self.store.perm(chosen[0])]
      current = self._child(gens)
    return current

  def exponent(self):
    return functools.reduce(arith.lcm, self.classes.orders, 1)

  def normal_subgroups(self):
    """
    Every normal subgroup, each with a ``class_support`` attribute, sorted
    by order and then by support.
    """
    table = self.classes
    if len(table) > settings.NORMAL_CLASS_CAP:
      raise CapExceededError("classes", len(table), settings.NORMAL_CLASS_CAP,
                             self.tier)
    found = {}

    def support(group):
      idx = self.store.index_of(group.store.elements)
      return tuple(sorted(set(int(c) for c in table.class_of[idx])))

    def record(group):
      key = support(group)
      if key not in found:
        group.class_support = key
        found[key] = group
        return True
      return False

    record(self._child([]))
    for rep in table.reps[1:]:
      record(self.normal_closure([rep]))
    changed = True
    while changed:
      changed = False
      current = list(found.values())
      for i, group_a in enumerate(current):
        for group_b in current[i + 1:]:
          joined = set(group_a.class_support) | set(group_b.class_support)
          if tuple(sorted(joined)) in found:
            continue
          if record(self.normal_closure(group_a.gens + group_b.gens)):
            changed = True
    return sorted(found.values(), key=lambda g: (g.order(), g.class_support))

  def fingerprint(self):
    """Order, class sizes, element-order multiset, derived-series orders."""
    table = self.classes
    order_counts = collections.Counter()
    for elem_order, size in zip(table.orders, table.sizes):
      order_counts[elem_order] += int(size)
    return (self.order(),
            tuple(sorted(int(s) for s in table.sizes)),
            tuple(sorted(order_counts.items())),
            tuple(self.derived_series_orders()))


def group_from_generators(degree, gens, name=None, cap=None, tier="core"):
  """Builds a :class:`PermGroup`; an empty generator list is the trivial
  group."""
  return PermGroup(degree, gens, name=name, cap=cap, tier=tier)


class CosetAction(object):
  """
  ``G`` acting on the left cosets of ``H`` by ``g . yH = gyH``.

  Cosets are named by canonical representatives: the member of ``yH`` whose
  images of ``H``'s base are lexicographically least. Coset 0 is ``H``.
  """

  def __init__(self, group, sub):
    group._require_subgroup(sub)
    index = group.order() // sub.order()
    if index > settings.COSET_INDEX_CAP:
      raise CapExceededError("coset index", index, settings.COSET_INDEX_CAP,
                             group.tier)
    self.source = group
    self.sub = sub
    self.degree = index
    self._levels = sub.chain.levels
    self._key_points = group.chain.base or [0]
    identity = tuple(range(group.degree))
    start = self._canonical(identity)
    self.reps = [start]
    self._lookup = {self._key(start): 0}
    gen_images = [[] for _ in group.gens]
    position = 0
    while position < len(self.reps):
      rep = self.reps[position]
      for gen_number, gen in enumerate(group.gens):
        gen_images[gen_number].append(self._locate(gen.images, rep))
      position += 1
    if len(self.reps) != index:
      raise ActionError("found %d cosets, expected %d" % (len(self.reps),
                                                          index))
    self.gen_images = [Permutation(images, check=False)
                       for images in gen_images]
    self.image = PermGroup(index, self.gen_images, cap=group.cap,
                           tier=group.tier,
                           name="%s on cosets" % (group.name or "G"))
    LOG.debug("coset action of degree %d", index)

  def _key(self, rep):
    return tuple(rep[p] for p in self._key_points)

  def _canonical(self, rep):
    for level in self._levels:
      best = min(level.orbit, key=lambda gamma: rep[gamma])
      if best != level.point:
        word = level.transversal[best]
        rep = tuple(rep[x] for x in word)
    return rep

  def _locate(self, gen, rep, grow=True):
    moved = self._canonical(tuple(gen[x] for x in rep))
    key = self._key(moved)
    index = self._lookup.get(key)
    if index is None:
      if not grow:
        raise MembershipError("element not in the source group")
      index = len(self.reps)
      self._lookup[key] = index
      self.reps.append(moved)
    return index

  def image_of(self, element):
    """The permutation of the cosets induced by ``element``."""
    images = _as_images(element, self.source.degree)
    if not self.source.contains(images):
      raise MembershipError("%s is not in the source group" % (element,))
    return Permutation([self._locate(images, rep, grow=False)
                        for rep in self.reps], check=False)

  def kernel(self):
    return self.source.normal_core(self.sub)


def coset_action(group, sub):
  """:class:`CosetAction` of ``group`` on the cosets of ``sub``."""
  return CosetAction(group, sub)


class ActionStructure(object):
  """
  Transitivity, primitivity and Frobenius structure of a group acting on its
  own points.
  """

  def __init__(self, group):
    self.group = group
    degree = group.degree
    self.degree = degree
    self.is_transitive = group.is_transitive()
    order = group.order()
    self.is_regular = self.is_transitive and order == degree
    self.stabilizer = group.point_stabilizer(0)
    self.stabilizer_order = self.stabilizer.order()
    self.suborbits = self.stabilizer.orbits() if degree else []
    nontrivial = [orbit for orbit in self.suborbits if orbit != [0]]
    self.is_2transitive = (self.is_transitive and degree >= 2 and
                           len(nontrivial) == 1)
    self.is_sharply_2transitive = (self.is_2transitive and
                                   order == degree * (degree - 1))
    self.is_frobenius = (self.is_transitive and not self.is_regular and
                         self.stabilizer_order > 1 and
                         all(len(orbit) == self.stabilizer_order
                             for orbit in nontrivial))
    if not self.is_transitive:
      self.is_primitive = False
    else:
      self.is_primitive = all(len(self.minimal_block(orbit[0])) == degree
                              for orbit in nontrivial)

  def minimal_block(self, beta):
    """Smallest block containing the points 0 and ``beta``."""
    parent = list(range(self.degree))

    def find(point):
      while parent[point] != point:
        parent[point] = parent[parent[point]]
        point = parent[point]
      return point

    def union(point_a, point_b):
      root_a, root_b = find(point_a), find(point_b)
      if root_a == root_b:
        return False
      parent[max(root_a, root_b)] = min(root_a, root_b)
      return True

    union(0, beta)
    queue = [(0, beta)]
    while queue:
      point_a, point_b = queue.pop()
      for gen in self.group.gens:
        image_a, image_b = find(gen[point_a]), find(gen[point_b])
        if union(image_a, image_b):
          queue.append((image_a, image_b))
    root = find(0)
    return [p for p in range(self.degree) if find(p) == root]

  def as_record(self):
    return Record(is_transitive=self.is_transitive,
                  is_regular=self.is_regular,
                  is_primitive=self.is_primitive,
                  is_2transitive=self.is_2transitive,
                  is_sharply_2transitive=self.is_sharply_2transitive,
                  is_frobenius=self.is_frobenius)


def structure_predicates(group):
  """Record of the action predicates of ``group`` on its points."""
  return ActionStructure(group).as_record()
