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

""":synopsis: Property suites run over the catalog.
:module: derangekit.suites

Each suite takes ``(root, tier, workers)`` and returns a report with
``suite``, ``checked``, ``skipped`` and ``results``. A failed property
raises :class:`~derangekit.errors.VerificationError` with a serialisable
counterexample.

Catalog suites visit every action of every entry: the group on its own
points and the group on the cosets of each listed subgroup. Entries are
independent and fan out over worker processes.

.. autodata:: SUITES
.. autofunction:: catalog_actions
.. autofunction:: run_suite
"""

from __future__ import absolute_import

import collections
import functools
import logging

from derangekit import _affine
from derangekit import catalog
from derangekit import chars
from derangekit import constructors
from derangekit import derangements
from derangekit import structure
from derangekit import tables
from derangekit.collections import Record
from derangekit.engine import ActionStructure
from derangekit.errors import ActionError
from derangekit.errors import CapExceededError
from derangekit.errors import VerificationError
from derangekit.perm import Permutation


__author__ = "yesudeep@google.com (Yesudeep Mangalapilly)"


__all__ = [
    "GAMMA_L1_FIELDS",
    "SUITES",
    "catalog_actions",
    "run_suite",
    ]


LOG = logging.getLogger(__name__)

# Store-based certificates skip groups above this order.
STORE_ORDER_LIMIT = 1 << 17

GAMMA_L1_FIELDS = ((3, 2), (2, 4), (5, 2), (3, 3), (7, 2), (2, 6), (3, 4))


def catalog_actions(entry):
  """``(label, group, sub)`` for each action of ``entry``; ``sub`` may be
  ``None`` for the group on its own points."""
  group = entry.group
  actions = []
  if group.is_transitive():
    actions.append((entry.name, group, None))
  for name, sub in entry.subs.items():
    actions.append(("%s/%s" % (entry.name, name), group, sub))
  return actions


def _skip(label, error):
  LOG.warning("%s skipped: %s", label, error)
  return Record(action=label, status="skipped", note=str(error))


def _entry_job(check, job):
  name, root, tier = job
  if catalog.needs_extended(name, root, tier):
    return [_skip(name, "needs the extended tier")]
  try:
    entry = catalog.catalog_entry(name, root, tier)
  except CapExceededError as e:
    return [_skip(name, e)]
  results = []
  for label, group, sub in catalog_actions(entry):
    try:
      outcome = check(group, sub)
    except CapExceededError as e:
      results.append(_skip(label, e))
      continue
    if outcome is None:
      continue
    outcome.action = label
    outcome.setdefault("status", "ok")
    results.append(outcome)
  return results


def _over_catalog(suite, check, root, tier, workers):
  names = catalog.catalog_list(root)
  jobs = [(name, root, tier) for name in names]
  gathered = tables.fan_out(functools.partial(_entry_job, check), jobs,
                            workers)
  results = [result for batch in gathered for result in batch]
  return _report(suite, results)


def _report(suite, results):
  return Record(suite=suite,
                checked=sum(1 for r in results if r.status == "ok"),
                skipped=sum(1 for r in results if r.status == "skipped"),
                results=results)


def _fail(message, **counterexample):
  raise VerificationError(message, counterexample=counterexample)


def _check_jordan(group, sub):
  report = derangements.derangement_classes(group, sub, with_flags=False)
  if report.kappa < 1:
    _fail("no derangement in %s" % report.action, action=report.action)
  return Record(kappa=report.kappa)


def _check_fks(group, sub):
  witness = derangements.prime_power_derangement(group, sub)
  return Record(witness=witness, order=witness.order())


def _check_cameron_cohen(group, sub):
  return derangements.cameron_cohen_check(group, sub)


def _small(group):
  return group.order() <= STORE_ORDER_LIMIT


def _check_characters(group, sub):
  """``n(1_H^G) = kappa`` and the table checks for the group."""
  if not _small(group):
    return None
  if sub is None:
    if isinstance(group, _affine.AffineGroup):
      sub = group.linear_part
    else:
      sub = group.point_stabilizer(0)
  count = derangements.kappa(group, sub)
  zeros, _ = chars.vanishing_classes(chars.permutation_character(group, sub))
  if zeros != count:
    _fail("permutation character of %r vanishes on %d classes, kappa is %d"
          % (group, zeros, count), group=group.name, kappa=count,
          vanishing=zeros)
  table = chars.character_table(group)
  checks = [("burnside", chars.burnside_check(table)),
            ("mno", chars.mno_check(table)),
            ("column_orthogonality", chars.column_orthogonality(table))]
  if not all(holds for _, holds in checks):
    _fail("character table checks fail for %r" % group, group=group.name,
          checks=checks)
  return Record(kappa=count, vanishing=zeros, table_checks=len(checks))


def _check_certificates(group, sub):
  """Derangement count bound and the p-element property for one class."""
  if not _small(group) or sub is None:
    return None
  bound = derangements.lower_bound_certificate(group, sub)
  p_element = derangements.p_element_certificate(group, sub)
  return Record(count=bound.count, p_element=p_element.applicable)


def _regular_normal_subgroups(group):
  try:
    normals = group.normal_subgroups()
  except CapExceededError:
    if not isinstance(group, _affine.AffineGroup):
      raise
    return [group.translation_subgroup()]
  return [normal for normal in normals
          if normal.order() == group.degree and normal.is_transitive()]


def _check_frobenius_lemma(group, sub):
  """Frobenius exactly when every derangement lies in ``N``, for every
  regular normal subgroup ``N``."""
  if sub is not None or not _small(group) or not group.is_transitive():
    return None
  if group.point_stabilizer(0).order() == 1:
    return None
  normals = _regular_normal_subgroups(group)
  if not normals:
    return None
  outcomes = [structure.frobenius_iff_delta_in_N(group, normal)
              for normal in normals]
  frobenius = outcomes[0].frobenius
  if frobenius:
    kernel = structure.frobenius_kernel(group)
    if kernel.order() != group.degree:
      _fail("Frobenius kernel of %r has order %d" % (group, kernel.order()),
            group=group.name)
  return Record(frobenius=frobenius,
                delta_in_n=[outcome.delta_in_n for outcome in outcomes],
                regular_normals=len(normals), agree=True)


def _check_wielandt(group, sub):
  """``(G, G_0, 1)`` is a W-triple exactly when ``G`` is Frobenius, with the
  Frobenius kernel as its kernel."""
  if sub is not None or not _small(group):
    return None
  stabilizer = group.point_stabilizer(0)
  if stabilizer.order() == 1:
    return None
  trivial = stabilizer._child([])
  kernel = structure.w_triple_verify(group, stabilizer, trivial)
  frobenius = ActionStructure(group).is_frobenius
  if frobenius != (kernel is not None):
    _fail("W-triple %s but Frobenius %s for %r" % (kernel is not None,
                                                  frobenius, group),
          group=group.name)
  if frobenius and kernel.order() != group.degree:
    _fail("W-triple kernel of %r is not regular" % group, group=group.name)
  return Record(frobenius=frobenius,
                kernel_order=kernel.order() if kernel else None)


def _suite_over(check):
  def suite(name, root, tier, workers):
    return _over_catalog(name, check, root, tier, workers)
  return suite


# (entry, subgroup, tag, whether some irreducible induces with one zero)
_THEOREM5_CASES = (
    ("D10", "Z5", structure.FROBENIUS_INDEX2_ABELIAN_ODD, True),
    ("AGL1_8", None, structure.FROB_QUOTIENT_c, True),
    ("A5", "D10", structure.A5_CASE, False),
    ("L2_8.3", "D18_3", structure.L28_CASE, None),
    )


def _theorem5(name, root, tier, workers):
  results = []
  for entry_name, sub_name, expected, induces in _THEOREM5_CASES:
    entry = catalog.catalog_entry(entry_name, root, tier)
    group = entry.group
    sub = entry.sub(sub_name) if sub_name else group.point_stabilizer(0)
    case = structure.classify_unique_vanishing(group, sub)
    label = "%s/%s" % (entry_name, sub_name or "point")
    if case.tag != expected:
      _fail("%s classified as %s, expected %s" % (label, case.tag, expected),
            action=label, tag=case.tag, expected=expected)
    found = chars.find_unique_vanishing_induced(group, [(label, sub)])
    if induces is not None and bool(found) != induces:
      _fail("%s: induced irreducibles with one zero: %d" % (label,
                                                          len(found)),
            action=label, induced=len(found))
    results.append(Record(action=label, tag=case.tag,
                          induced=len(found), status="ok"))
  a5 = catalog.catalog_entry("A5", root, tier)
  if chars.find_unique_vanishing_induced(a5.group,
                                         [("D10", a5.sub("D10"))]):
    _fail("an irreducible of D10 induces to A5 with one zero",
          action="A5/D10")
  results.append(Record(action="A5/D10 induced", tag=None, induced=0,
                        status="ok"))
  corollary = structure.imprimitive_corollary_check(a5.group, a5.sub("Z5"))
  results.append(Record(action="A5/Z5 imprimitive", tag=None,
                        kappa=corollary.kappa, status="ok"))
  for entry_name in ("AGL1_8", "AGL1_9", "F13_6", "L2_7", "A5", "S5"):
    group = catalog.catalog_entry(entry_name, root, tier).group
    outcome = structure.reduction_check(group)
    results.append(Record(action="%s reduction" % entry_name, tag=None,
                          kappa=outcome.kappa, status="ok"))
  for entry_name in ("GL1_ext2_9", "GL1_ext2_25", "SL2_char2_1", "P_25_17"):
    group = catalog.catalog_entry(entry_name, root, tier).group
    outcome = structure.affine_lemma_checks(group)
    results.append(Record(action="%s affine checks" % entry_name, tag=None,
                          kappa=outcome.kappa, status="ok"))
  return _report(name, results)


def _sweep_field(job):
  prime, degree, tier = job
  results = []
  order = prime ** degree
  for params, group in constructors.gamma_l1_subgroups(prime, degree):
    two_transitive, _, frobenius = _affine.affine_action_flags(group)
    if not two_transitive or frobenius:
      continue
    count = derangements.kappa(group)
    h_order = group.linear_part.order()
    if count == 2 and not (degree % 2 == 0 and h_order == 2 * (order - 1)):
      _fail("kappa 2 for %s with |H| = %d" % (group.name, h_order),
            group=group.name, params=list(params), h_order=h_order)
    results.append(Record(action=group.name, kappa=count, h_order=h_order,
                          status="ok"))
  return results


def _gamma_l1_sweep(name, root, tier, workers):
  jobs = [(prime, degree, tier) for prime, degree in GAMMA_L1_FIELDS]
  results = [r for batch in tables.fan_out(_sweep_field, jobs, workers)
             for r in batch]
  for prime, degree in ((3, 2), (5, 2), (7, 2), (2, 4)):
    group = constructors.gl1_ext2(prime, degree)
    count = derangements.kappa(group)
    if count != 2:
      _fail("kappa(%s) = %d, expected 2" % (group.name, count),
            group=group.name, kappa=count)
    results.append(Record(action=group.name, kappa=count,
                          h_order=group.linear_part.order(), status="ok"))
  for exponent in (1, 2, 3):
    group = constructors.sl2_affine_char2(exponent)
    count = derangements.kappa(group)
    if exponent == 1:
      holds = (count == 2 and group.fingerprint() ==
               constructors.symmetric(4).fingerprint())
    else:
      first, second = (Permutation(images) for images in
                       constructors.sl2_affine_witnesses(exponent))
      report = derangements.derangement_classes(group, with_flags=False)
      classes = group.classes
      found = set(classes.class_index(entry.element)
                  for entry in report.classes)
      holds = (count >= 3 and classes.class_index(first) in found and
               classes.class_index(second) in found and
               classes.class_index(first) != classes.class_index(second))
    if not holds:
      _fail("SL2 family check fails for m = %d (kappa %d)" % (exponent,
                                                              count),
            group=group.name, kappa=count)
    results.append(Record(action=group.name, kappa=count,
                          h_order=group.linear_part.order(), status="ok"))
  return _report(name, results)


SUITES = collections.OrderedDict([
    ("jordan", _suite_over(_check_jordan)),
    ("fks", _suite_over(_check_fks)),
    ("cameron_cohen", _suite_over(_check_cameron_cohen)),
    ("frobenius_lemma", _suite_over(_check_frobenius_lemma)),
    ("wielandt", _suite_over(_check_wielandt)),
    ("theorem5", _theorem5),
    ("gamma_l1_sweep", _gamma_l1_sweep),
    ("characters", _suite_over(_check_characters)),
    ("certificates", _suite_over(_check_certificates)),
    ])


def run_suite(name, root=None, tier="core", workers=1):
  """
  Runs one suite, or every suite in order for ``"all"``.

  :raises KeyError:
      For an unknown suite name.
  :raises VerificationError:
      On the first failed property.
  """
  if name == "all":
    reports = [run_suite(suite, root, tier, workers) for suite in SUITES]
    return Record(suite="all", checked=sum(r.checked for r in reports),
                  skipped=sum(r.skipped for r in reports),
                  results=[Record(suite=r.suite, checked=r.checked,
                                  skipped=r.skipped, status="ok")
                           for r in reports])
  try:
    suite = SUITES[name]
  except KeyError:
    raise KeyError("unknown suite %r; expected one of %s, all"
                   % (name, ", ".join(SUITES)))
  LOG.info("running suite %s", name)
  try:
    return suite(name, root, tier, workers)
  except ActionError as e:
    raise VerificationError("suite %s hit a bad action: %s" % (name, e),
                            counterexample={"suite": name, "error": str(e)})
