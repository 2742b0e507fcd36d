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

""":synopsis: Derangement classes, kappa, delta, elusiveness and Phi.
:module: derangekit.derangements

``G`` acts on the cosets of a proper subgroup ``H``. A class ``x^G`` consists
of derangements exactly when it misses ``H``, so every routine here marks
``H`` in the element store of ``G`` and counts hits per class once.
``H`` need not be core-free.

For an :class:`~derangekit._affine.AffineGroup` acting on its vectors the
classes are computed from the linear part alone.

Reports
-------
.. autofunction:: derangement_classes
.. autofunction:: kappa
.. autofunction:: derangement_count

Predicates and certificates
---------------------------
.. autofunction:: is_elusive
.. autofunction:: prime_power_derangement
.. autofunction:: phi_min
.. autofunction:: cameron_cohen_check
.. autofunction:: lower_bound_certificate
.. autofunction:: p_element_certificate
.. autofunction:: subnormal_inclusion_certificate
"""

from __future__ import absolute_import
from __future__ import division

import fractions
import logging

import numpy as np

from derangekit import _affine
from derangekit import arith
from derangekit import settings
from derangekit.collections import Record
from derangekit.engine import ActionStructure
from derangekit.engine import coset_action
from derangekit.errors import ActionError
from derangekit.errors import VerificationError
from derangekit.perm import format_cycles


__author__ = "yesudeep@google.com (Yesudeep Mangalapilly)"


__all__ = [
    "cameron_cohen_check",
    "derangement_classes",
    "derangement_count",
    "derangement_mask",
    "is_elusive",
    "kappa",
    "lower_bound_certificate",
    "p_element_certificate",
    "phi_min",
    "prime_power_derangement",
    "subnormal_inclusion_certificate",
    ]


LOG = logging.getLogger(__name__)


def _is_affine_pair(group, sub):
  return (isinstance(group, _affine.AffineGroup) and
          (sub is None or sub is group.linear_part))


def _label(group, sub):
  return "%s/%s" % (group.name or "G", getattr(sub, "name", None) or "H")


def derangement_mask(group, sub):
  """Mask over ``group``'s store of the derangements on ``G/sub``."""
  table = group.classes
  hits = table.hits(group.subgroup_mask(sub))
  return (hits == 0)[table.class_of]


def _generic_classes(group, sub):
  table = group.classes
  hits = table.hits(group.subgroup_mask(sub))
  found = []
  for index in np.flatnonzero(hits == 0):
    found.append((table.reps[index], int(table.sizes[index]),
                  table.orders[index]))
  return found


def _flags_from_action(group, sub):
  if _is_affine_pair(group, sub):
    _, sharply, frobenius = _affine.affine_action_flags(group)
    return sharply, frobenius
  index = group.order() // sub.order()
  if index > settings.COSET_INDEX_CAP:
    LOG.warning("index %d too large for structure flags", index)
    return None, None
  image = coset_action(group, sub).image
  structure = ActionStructure(image)
  return structure.is_sharply_2transitive, structure.is_frobenius


def derangement_classes(group, sub=None, with_flags=True):
  """
  Classes of derangements of ``group`` acting on the cosets of ``sub``.

  :param group:
      :class:`~derangekit.engine.PermGroup`.
  :param sub:
      Proper subgroup. ``None`` means the stabilizer of point 0.
  :param with_flags:
      Also build the coset image and report its sharp 2-transitivity and
      Frobenius property.
  :returns:
      :class:`~derangekit.collections.Record` with ``action``,
      ``group_order``, ``degree``, ``kappa``, ``classes``, ``delta`` (a
      :class:`fractions.Fraction`) and ``flags``.
  """
  if _is_affine_pair(group, sub):
    sub = group.linear_part
    found = _affine.affine_derangement_classes(group)
  else:
    if sub is None:
      sub = group.point_stabilizer(0)
    found = _generic_classes(group, sub)
  group_order = group.order()
  sub_order = sub.order()
  if sub_order == group_order:
    raise ActionError("the subgroup is the whole group; nothing is moved")
  degree = group_order // sub_order
  total = sum(size for _, size, _ in found)
  orders = [order for _, _, order in found]
  flags = Record(
      elusive=not any(arith.is_prime(order) for order in orders),
      has_prime_power_derangement=any(arith.is_prime_power(order)
                                      for order in orders),
      sharply_2transitive=None,
      frobenius=None)
  if with_flags:
    flags.sharply_2transitive, flags.frobenius = _flags_from_action(group,
                                                                    sub)
  report = Record(
      action=_label(group, sub),
      group_order=group_order,
      degree=degree,
      kappa=len(found),
      classes=[Record(rep=format_cycles(rep), size=size, order=order,
                      element=rep)
               for rep, size, order in found],
      delta=fractions.Fraction(total, group_order),
      flags=flags)
  LOG.debug("%s: kappa %d, delta %s", report.action, report.kappa,
            report.delta)
  return report


def kappa(group, sub=None):
  """Number of classes of derangements."""
  return derangement_classes(group, sub, with_flags=False).kappa


def derangement_count(group):
  """``|Delta(G)|`` for ``group`` acting on its own points."""
  elements = group.store.elements
  points = np.arange(group.degree, dtype=elements.dtype)
  return int((elements != points).all(axis=1).sum())


def is_elusive(group, sub=None):
  """``True`` when no derangement has prime order."""
  return derangement_classes(group, sub, with_flags=False).flags.elusive


def prime_power_derangement(group, sub=None):
  """
  A derangement of prime-power order.

  :raises VerificationError:
      When none exists; a transitive action always has one.
  """
  report = derangement_classes(group, sub, with_flags=False)
  for entry in report.classes:
    if arith.is_prime_power(entry.order):
      return entry.element
  raise VerificationError("no derangement of prime-power order in %s"
                          % report.action,
                          counterexample={"action": report.action})


def phi_min(group, subs):
  """
  Minimum of kappa over a supplied list of subgroups.

  :returns:
      ``(value, subgroup)``; the first minimum wins.
  """
  subs = list(subs)
  if not subs:
    raise ValueError("phi_min needs at least one subgroup")
  best, best_sub = None, None
  for sub in subs:
    value = kappa(group, sub)
    LOG.info("kappa(%s) = %d", _label(group, sub), value)
    if best is None or value < best:
      best, best_sub = value, sub
  return best, best_sub


def cameron_cohen_check(group, sub=None):
  """
  Checks ``delta >= 1/n``, and that equality holds exactly for sharply
  2-transitive actions.
  """
  report = derangement_classes(group, sub)
  bound = fractions.Fraction(1, report.degree)
  equality = report.delta == bound
  sharply = report.flags.sharply_2transitive
  if report.delta < bound:
    raise VerificationError("delta %s below 1/%d for %s" % (
        report.delta, report.degree, report.action),
                            counterexample={"action": report.action})
  if sharply is not None and equality != sharply:
    raise VerificationError(
        "equality %s but sharply 2-transitive %s for %s" % (
            equality, sharply, report.action),
        counterexample={"action": report.action})
  return Record(delta=report.delta, bound=bound, equality=equality,
                sharply_2transitive=sharply)


def lower_bound_certificate(group, sub):
  """
  Checks ``|Delta_H(G)| = |Delta_{H/N}(G/N)| |N| >= |H|`` with ``N`` the core
  of ``H``.
  """
  report = derangement_classes(group, sub, with_flags=False)
  total = report.delta * report.group_order
  core = group.normal_core(sub)
  image = coset_action(group, sub).image
  quotient_count = derangement_count(image)
  holds = (total == quotient_count * core.order() and total >= sub.order())
  if not holds:
    raise VerificationError("derangement count bound fails for %s" %
                            report.action,
                            counterexample={"action": report.action,
                                            "count": int(total)})
  return Record(count=int(total), quotient_count=quotient_count,
                core_order=core.order(), sub_order=sub.order())


def _is_maximal(group, sub):
  """Maximal exactly when the coset action is primitive."""
  if sub is None:
    return ActionStructure(group).is_primitive
  return ActionStructure(coset_action(group, sub).image).is_primitive


def p_element_certificate(group, sub):
  """
  When ``sub`` is maximal and ``kappa == 1`` checks that the derangements
  are p-elements with a p-group centralizer.
  """
  report = derangement_classes(group, sub, with_flags=False)
  if report.kappa != 1:
    return Record(applicable=False, prime=None)
  if not _is_maximal(group, sub):
    LOG.info("%s: subgroup is not maximal", report.action)
    return Record(applicable=False, prime=None)
  entry = report.classes[0]
  found = arith.is_prime_power(entry.order)
  centralizer_order = report.group_order // entry.size
  if found is None or (arith.p_part(centralizer_order, found[0]) !=
                       centralizer_order):
    raise VerificationError("derangement class of %s is not a p-class" %
                            report.action,
                            counterexample={"action": report.action,
                                            "order": entry.order})
  return Record(applicable=True, prime=found[0], element_order=entry.order,
                centralizer_order=centralizer_order)


def subnormal_inclusion_certificate(group, sub, normal, inner):
  """
  For ``G = HM`` with ``M`` normal and ``H meet M <= K < M`` checks that the
  derangements of ``M`` on ``M/K`` are derangements of ``G`` on ``G/H``.
  """
  if not group.is_normal(normal):
    raise ActionError("%r is not normal" % normal)
  meet = group.intersection(sub, normal)
  if group.order() * meet.order() != sub.order() * normal.order():
    raise ActionError("G is not the product HM")
  if not (inner.is_subgroup(meet) and normal.is_subgroup(inner) and
          inner.order() < normal.order()):
    raise ActionError("need H meet M <= K < M")
  outer = derangement_mask(group, sub)
  inner_mask = derangement_mask(normal, inner)
  positions = group.store.index_of(normal.store.elements[inner_mask])
  holds = bool(outer[positions].all())
  if not holds:
    raise VerificationError("inclusion of derangement sets fails",
                            counterexample={"group": group.name})
  return Record(inner_count=int(inner_mask.sum()),
                outer_count=int(outer.sum()), holds=holds)
