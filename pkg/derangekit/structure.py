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

""":synopsis: Frobenius kernels, Camina pairs, W-triples and the
classification of maximal subgroups with a single class of derangements.
:module: derangekit.structure

Quotients ``G/N`` are never built abstractly. The core ``N`` of ``H`` is the
kernel of ``G`` acting on the cosets of ``H``, so that coset image is used as
``G/N``. For a normal ``K``, the regular action on the cosets of ``K`` is used
as ``G/K``.

Isomorphism types of small quotients are decided by fingerprint: order,
class-size multiset, element-order multiset and derived-series orders.

Frobenius structure
-------------------
.. autofunction:: frobenius_kernel
.. autofunction:: frobenius_iff_delta_in_N

Camina pairs and W-triples
--------------------------
.. autofunction:: is_camina_pair
.. autofunction:: is_camina_group
.. autofunction:: w_triple_verify

Classification
--------------
.. autoclass:: StructureCase
.. autofunction:: classify_unique_vanishing
.. autofunction:: reduction_check
.. autofunction:: imprimitive_corollary_check
.. autofunction:: affine_lemma_checks
"""

from __future__ import absolute_import
from __future__ import division

import functools
import logging

import numpy as np

from derangekit import _affine
from derangekit import _linalg
from derangekit import arith
from derangekit import constructors
from derangekit.collections import Record
from derangekit.derangements import derangement_classes
from derangekit.derangements import derangement_mask
from derangekit.engine import ActionStructure
from derangekit.engine import coset_action
from derangekit.errors import ActionError
from derangekit.errors import VerificationError
from derangekit.field import field_build


__author__ = "yesudeep@google.com (Yesudeep Mangalapilly)"


__all__ = [
    "A5_CASE",
    "FROBENIUS_INDEX2_ABELIAN_ODD",
    "FROB_QUOTIENT_a",
    "FROB_QUOTIENT_b",
    "FROB_QUOTIENT_c",
    "L28_CASE",
    "NONE",
    "StructureCase",
    "affine_lemma_checks",
    "classify_unique_vanishing",
    "frobenius_iff_delta_in_N",
    "frobenius_kernel",
    "imprimitive_corollary_check",
    "is_almost_simple",
    "is_camina_group",
    "is_camina_pair",
    "is_frobenius_with_kernel",
    "reduction_check",
    "w_triple_verify",
    ]


LOG = logging.getLogger(__name__)

FROBENIUS_INDEX2_ABELIAN_ODD = "FROBENIUS_INDEX2_ABELIAN_ODD"
FROB_QUOTIENT_a = "FROB_QUOTIENT_a"
FROB_QUOTIENT_b = "FROB_QUOTIENT_b"
FROB_QUOTIENT_c = "FROB_QUOTIENT_c"
L28_CASE = "L28_CASE"
A5_CASE = "A5_CASE"
NONE = "NONE"


class StructureCase(Record):
  """
  Outcome of :func:`classify_unique_vanishing`: ``tag``, ``n_order``,
  ``m_order``, ``p``, ``n``, ``kernel_order`` and ``side_conditions``, a list
  of ``(name, holds)`` pairs.
  """

  def side(self, name):
    for key, value in self.side_conditions:
      if key == name:
        return value
    raise KeyError(name)


@functools.lru_cache(maxsize=None)
def _reference_fingerprint(label):
  if label == "A5":
    group = constructors.alternating(5)
  elif label == "L2_8.3":
    group = constructors.pgammal2(2, 3)
  elif label == "SL2_3":
    group = constructors.sl2_3_on_vectors()
  elif label == "Q8":
    group = constructors.q8_on_vectors()
  else:
    raise KeyError(label)
  return group.fingerprint()


def _is_p_group(order, prime):
  return arith.p_part(order, prime) == order


def _is_nilpotent(group):
  """One Sylow subgroup per prime, counted on the class table."""
  table = group.classes
  order = group.order()
  for prime in arith.prime_divisors(order) if order > 1 else ():
    count = sum(int(size) for elem_order, size in zip(table.orders,
                                                      table.sizes)
                if _is_p_group(elem_order, prime))
    if count != arith.p_part(order, prime):
      return False
  return True


def is_frobenius_with_kernel(group, kernel):
  """``1 < K < M`` normal with ``C_M(k) <= K`` for every ``1 != k in K``."""
  if not 1 < kernel.order() < group.order():
    return False
  if not group.is_normal(kernel):
    return False
  store = group.store
  kernel_mask = group.subgroup_mask(kernel)
  table = group.classes
  elements = store.elements
  for index, rep in enumerate(table.reps):
    if not index or not kernel_mask[table.first_index[index]]:
      continue
    images = np.array(rep.images, dtype=np.intp)
    commuting = (images[elements] == elements[:, images]).all(axis=1)
    if (commuting & ~kernel_mask).any():
      return False
  return True


def frobenius_kernel(group):
  """
  ``{1} + Delta(G)`` for a Frobenius group acting on its points, verified to
  be a regular normal subgroup; ``None`` when the group is not Frobenius.
  """
  structure = ActionStructure(group)
  if not structure.is_frobenius:
    return None
  elements = group.store.elements
  points = np.arange(group.degree, dtype=elements.dtype)
  mask = (elements != points).all(axis=1)
  mask[0] = True
  kernel = group.subgroup_from_mask(mask)
  if (kernel is None or not group.is_normal(kernel) or
      kernel.order() != group.degree or not kernel.is_transitive()):
    raise VerificationError("Frobenius kernel of %r is not a regular normal "
                            "subgroup" % group,
                            counterexample={"group": group.name})
  return kernel


def frobenius_iff_delta_in_N(group, normal):
  """
  For a regular normal subgroup ``N`` checks that ``G`` is Frobenius exactly
  when every derangement lies in ``N``.
  """
  if not (group.is_normal(normal) and normal.order() == group.degree and
          normal.is_transitive()):
    raise ActionError("%r is not a regular normal subgroup" % normal)
  stabilizer = group.point_stabilizer(0)
  if stabilizer.order() == 1:
    raise ActionError("the point stabilizer is trivial")
  frobenius = ActionStructure(group).is_frobenius
  delta = derangement_mask(group, stabilizer)
  inside = bool((delta & ~group.subgroup_mask(normal)).sum() == 0)
  if frobenius != inside:
    raise VerificationError("Frobenius %s but Delta inside N %s for %r" % (
        frobenius, inside, group), counterexample={"group": group.name})
  return Record(frobenius=frobenius, delta_in_n=inside, agree=True)


def is_camina_pair(group, normal):
  """``|C_G(g)| = |C_{G/N}(Ng)|`` for every class outside ``N``."""
  order = normal.order()
  if order == 1 or order == group.order() or not group.is_normal(normal):
    raise ActionError("need a proper nontrivial normal subgroup")
  action = coset_action(group, normal)
  quotient = action.image
  table = group.classes
  normal_mask = group.subgroup_mask(normal)
  for index, rep in enumerate(table.reps):
    if normal_mask[table.first_index[index]]:
      continue
    image = action.image_of(rep)
    if table.centralizer_orders[index] != quotient.centralizer_order(image):
      return False
  return True


def is_camina_group(group):
  """``(G, G')`` is a Camina pair; ``False`` when ``G'`` is 1 or ``G``."""
  derived = group.derived_subgroup()
  if derived.order() in (1, group.order()):
    return False
  return is_camina_pair(group, derived)


def w_triple_verify(group, sub, inner):
  """
  Tests whether ``(G, H, L)`` is a W-triple and returns its kernel ``M``.

  ``H meet H^g <= L`` for ``g`` outside ``H`` holds exactly when every element
  of ``H - L`` fixes one coset of ``H``; per class that is
  ``|G| * |x^G meet H| == |x^G| * |H|``.

  :returns:
      The kernel, verified normal with ``G = HM`` and ``H meet M = L``, or
      ``None`` when the condition fails.
  """
  if not (sub.is_subgroup(inner) and sub.is_normal(inner)):
    raise ActionError("L must be a normal subgroup of H")
  table = group.classes
  hits_sub = table.hits(group.subgroup_mask(sub))
  hits_inner = table.hits(group.subgroup_mask(inner))
  meets = (hits_sub - hits_inner) > 0
  order, sub_order = group.order(), sub.order()
  for index in np.flatnonzero(meets):
    if order * int(hits_sub[index]) != int(table.sizes[index]) * sub_order:
      return None
  kernel = group.subgroup_from_mask((~meets)[table.class_of])
  if kernel is None:
    raise VerificationError("W-triple kernel is not a subgroup",
                            counterexample={"group": group.name})
  meet = group.intersection(sub, kernel)
  if (not group.is_normal(kernel) or
      sub_order * kernel.order() != order * meet.order() or
      meet.order() != inner.order() or not meet.is_subgroup(inner)):
    raise VerificationError("W-triple kernel fails the product conditions",
                            counterexample={"group": group.name})
  return kernel


def _image_subgroup(action, group):
  return action.image._child([action.image_of(g) for g in group.gens])


def _fail(tag, side, action):
  failed = [name for name, holds in side if not holds]
  raise VerificationError("case %s failed %s for %s" % (tag, failed, action),
                          counterexample={"action": action, "failed": failed})


def classify_unique_vanishing(group, sub):
  """
  Classifies a maximal subgroup ``H`` with ``Delta_H(G) = x^G``.

  :returns:
      :class:`StructureCase`; tag ``NONE`` when there is more than one class
      of derangements.
  :raises VerificationError:
      When the structure predicted for a single class does not hold.
  """
  report = derangement_classes(group, sub, with_flags=False)
  if report.kappa != 1:
    return StructureCase(tag=NONE, n_order=None, m_order=None, p=None,
                         n=None, side_conditions=[], kernel_order=None)
  x = report.classes[0].element
  class_size = report.classes[0].size
  order, sub_order = group.order(), sub.order()
  centralizer_order = order // class_size
  core = group.normal_core(sub)
  closure = group.normal_closure([x])
  case = StructureCase(n_order=core.order(), m_order=closure.order(),
                       p=None, n=None, side_conditions=[],
                       kernel_order=None)
  side = case.side_conditions

  if group.is_normal(sub):
    derived = group.derived_subgroup()
    side.extend([
        ("index_two", order == 2 * sub_order),
        ("abelian", sub.is_abelian()),
        ("odd_order", sub_order % 2 == 1),
        ("equals_derived", derived.order() == sub_order and
         sub.is_subgroup(derived)),
        ("centralizer_order_two", centralizer_order == 2),
        ])
    case.tag = FROBENIUS_INDEX2_ABELIAN_ODD
    if not all(holds for _, holds in side):
      _fail(case.tag, side, report.action)
    return case

  action = coset_action(group, sub)
  quotient = action.image
  structure = ActionStructure(quotient)
  if structure.is_frobenius:
    index = closure.order() // core.order()
    found = arith.is_prime_power(index)
    prime, exponent = found if found else (None, None)
    case.p, case.n = prime, exponent
    image = _image_subgroup(action, closure)
    elementary = (image.is_abelian() and
                  all(prime and prime % g.order() == 0 for g in image.gens))
    derived = closure.derived_subgroup()
    side.extend([
        ("quotient_2transitive_frobenius", structure.is_2transitive),
        ("kernel_prime_power", found is not None),
        ("kernel_elementary_abelian", bool(elementary)),
        ("complement_order", prime is not None and
         sub_order // core.order() == index - 1),
        ("class_is_m_minus_n", class_size == closure.order() - core.order()),
        ("centralizer_order", centralizer_order == index),
        ("class_size_equals_h", class_size == sub_order),
        ("m_derived_is_n", derived.order() == core.order() and
         core.is_subgroup(derived)),
        ])
    if closure.order() != order:
      meet = group.intersection(sub, closure)
      kernel = w_triple_verify(group, sub, meet)
      side.append(("w_triple_kernel_is_m", kernel is not None and
                   kernel.order() == closure.order()))
    if not all(holds for _, holds in side):
      _fail("FROB_QUOTIENT", side, report.action)
    if (exponent == 1 and prime > 2 and
        is_frobenius_with_kernel(closure, derived)):
      side.append(("m_frobenius_over_derived", True))
      case.tag = FROB_QUOTIENT_a
      case.kernel_order = derived.order()
      return case
    kernel = _quaternion_kernel(group, closure)
    if kernel is not None:
      side.append(("m_frobenius_quaternion_quotient", True))
      case.tag = FROB_QUOTIENT_b
      case.kernel_order = kernel.order()
      return case
    if _is_p_group(closure.order(), prime):
      abelian = derived.order() == 1
      side.append(("camina_or_abelian", abelian or is_camina_group(closure)))
      if not side[-1][1]:
        _fail(FROB_QUOTIENT_c, side, report.action)
      case.tag = FROB_QUOTIENT_c
      return case
    _fail("FROB_QUOTIENT", side + [("subcase", False)], report.action)

  fingerprint = quotient.fingerprint()
  x_order = x.order()
  if fingerprint == _reference_fingerprint("L2_8.3"):
    side.extend([
        ("centralizer_is_cyclic_7", centralizer_order == 7 and x_order == 7),
        ("core_nilpotent", _is_nilpotent(core)),
        ("core_order_prime_to_7", core.order() % 7 != 0),
        ])
    case.tag = L28_CASE
  elif fingerprint == _reference_fingerprint("A5"):
    side.extend([
        ("centralizer_is_cyclic_3", centralizer_order == 3 and x_order == 3),
        ("core_2_group", _is_p_group(core.order(), 2)),
        ])
    case.tag = A5_CASE
  else:
    _fail("quotient", [("known_quotient", False)], report.action)
  if not all(holds for _, holds in side):
    _fail(case.tag, side, report.action)
  return case


def _quaternion_kernel(group, closure):
  """Smallest normal ``K <= M`` of index 8 with ``G/K = SL2(3)``,
  ``M/K = Q8`` and ``M`` Frobenius with kernel ``K``."""
  target = closure.order() // 8
  if closure.order() % 8 or group.order() // target != 24:
    return None
  for kernel in group.normal_subgroups():
    if kernel.order() != target or not closure.is_subgroup(kernel):
      continue
    action = coset_action(group, kernel)
    if action.image.fingerprint() != _reference_fingerprint("SL2_3"):
      continue
    image = _image_subgroup(action, closure)
    if image.fingerprint() != _reference_fingerprint("Q8"):
      continue
    if is_frobenius_with_kernel(closure, kernel):
      return kernel
  return None


def is_almost_simple(group):
  """A unique minimal normal subgroup, nonabelian and simple."""
  normals = group.normal_subgroups()
  nontrivial = [n for n in normals if n.order() > 1]
  minimal = [n for n in nontrivial
             if not any(m.order() < n.order() and n.is_subgroup(m)
                        for m in nontrivial)]
  if len(minimal) != 1:
    return False
  socle = minimal[0]
  if socle.is_abelian():
    return False
  return len(socle.normal_subgroups()) == 2


def reduction_check(group):
  """
  For a primitive group on its points: with one class of derangements and
  not almost simple it must be sharply 2-transitive; a sharply
  2-transitive group has one class and is not almost simple.
  """
  structure = ActionStructure(group)
  if not structure.is_primitive:
    raise ActionError("%r is not primitive" % group)
  count = derangement_classes(group, with_flags=False).kappa
  almost_simple = is_almost_simple(group)
  sharply = structure.is_sharply_2transitive
  holds = True
  if count == 1 and not almost_simple:
    holds = sharply
  if sharply:
    holds = holds and count == 1 and not almost_simple
  if not holds:
    raise VerificationError("reduction fails for %r" % group,
                            counterexample={"group": group.name,
                                            "kappa": count})
  return Record(kappa=count, almost_simple=almost_simple,
                sharply_2transitive=sharply, holds=holds)


def affine_lemma_checks(group):
  """
  Property checks for a non-Frobenius 2-transitive
  :class:`~derangekit._affine.AffineGroup` with ``H`` the linear part and
  ``x`` a nonzero translation.

  * ``|H| = (p^k - 1) |C_H(x)|``;
  * with two classes of derangements, ``|C_H(x)| = p^b r^c`` for one prime
    ``r != p`` and ``|H|_{p'} / (p^k - 1)`` is a prime power;
  * for a nontrivial Sylow ``H_p``, ``[N, H_p]`` is proper in ``N`` and
    ``t z`` is a derangement for every ``t`` in ``H_p`` and ``z`` outside it.
  """
  linear = group.linear_part
  prime, dim, degree = group.p, group.dim, group.degree
  two_transitive, _, frobenius = _affine.affine_action_flags(group)
  if not two_transitive:
    raise ActionError("%r is not 2-transitive" % group)
  if frobenius:
    raise ActionError("%r is Frobenius" % group)
  h_order = linear.order()
  stabilizer_order = linear.point_stabilizer(1).order()
  checks = [("order_formula", h_order == (degree - 1) * stabilizer_order)]
  count = derangement_classes(group, with_flags=False).kappa
  if count == 2:
    others = [r for r in arith.prime_divisors(stabilizer_order)
              if r != prime] if stabilizer_order > 1 else []
    checks.append(("centralizer_two_primes", len(others) <= 1))
    quotient = (h_order // arith.p_part(h_order, prime)) // (degree - 1)
    checks.append(("p_prime_part_prime_power",
                   quotient == 1 or arith.is_prime_power(quotient)
                   is not None))
  if h_order % prime == 0:
    field = field_build(prime, 1)
    vectors = _linalg.all_vectors(field, dim)
    sylow_images = vectors[linear.sylow(prime).store.elements.astype(np.intp)]
    moved = np.unique(((sylow_images - vectors[None, :, :]) % prime)
                      .reshape(-1, dim), axis=0)
    reduced, pivots = _linalg.echelon(field, moved)
    span_rank = len(pivots)
    checks.append(("commutator_proper", span_rank < dim))
    if span_rank < dim:
      outside = _first_outside_span(field, reduced[:span_rank], vectors)
      shifted = (sylow_images + vectors[outside]) % prime
      fixed = (shifted == vectors[None, :, :]).all(axis=2)
      checks.append(("sylow_shifts_derange", not bool(fixed.any())))
  if not all(holds for _, holds in checks):
    raise VerificationError("affine lemma checks fail for %r" % group,
                            counterexample={"group": group.name,
                                            "checks": checks})
  return Record(kappa=count, stabilizer_order=stabilizer_order,
                checks=checks)


def _first_outside_span(field, basis, vectors):
  """Smallest vector code outside the row span of ``basis``."""
  rank = len(basis)
  for code in range(1, len(vectors)):
    stacked = np.vstack([basis, vectors[code][None, :]])
    if _linalg.rank(field, stacked) > rank:
      return code
  raise VerificationError("span is the whole space")


def imprimitive_corollary_check(group, sub):
  """
  For an almost simple ``group`` acting imprimitively on the cosets of
  ``sub`` with at most two classes of derangements, the action must be
  ``A5`` on the cosets of ``Z5`` with exactly two classes.
  """
  action = coset_action(group, sub)
  if ActionStructure(action.image).is_primitive:
    return Record(applies=False, kappa=None, holds=True)
  count = derangement_classes(group, sub, with_flags=False).kappa
  if count > 2 or not is_almost_simple(group):
    return Record(applies=False, kappa=count, holds=True)
  holds = (count == 2 and sub.order() == 5 and
           group.fingerprint() == _reference_fingerprint("A5"))
  if not holds:
    raise VerificationError(
        "imprimitive action of %r on the cosets of %r has kappa %d"
        % (group, sub, count),
        counterexample={"group": group.name, "sub": sub.name,
                        "kappa": count})
  return Record(applies=True, kappa=count, holds=True)
