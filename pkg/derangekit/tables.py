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

""":synopsis: Regenerates the golden tables from the catalog.
:module: derangekit.tables

Rows are independent, so they can be spread over worker processes; results
are merged back in golden order, which keeps output identical for every
worker count.

.. autofunction:: compute_row
.. autofunction:: regenerate
.. autofunction:: fan_out
"""

from __future__ import absolute_import

import logging

from concurrent import futures

from derangekit import catalog
from derangekit import goldens
from derangekit.collections import Record
from derangekit.derangements import kappa
from derangekit.derangements import phi_min
from derangekit.errors import CapExceededError


__author__ = "yesudeep@google.com (Yesudeep Mangalapilly)"


__all__ = [
    "compute_row",
    "fan_out",
    "regenerate",
    ]


LOG = logging.getLogger(__name__)


def fan_out(func, jobs, workers=1):
  """
  ``[func(job) for job in jobs]``, on a process pool when ``workers > 1``.
  ``func`` must be a module-level function.
  """
  jobs = list(jobs)
  if workers <= 1 or len(jobs) <= 1:
    return [func(job) for job in jobs]
  with futures.ProcessPoolExecutor(max_workers=workers) as pool:
    return list(pool.map(func, jobs))


def compute_row(job):
  """
  Computes one golden row.

  :param job:
      ``(row, root, tier)`` with ``row`` a
      :class:`~derangekit.goldens.GoldenRow`.
  :returns:
      :class:`~derangekit.collections.Record` with ``label``, ``expected``,
      ``actual`` and ``status`` (``ok``, ``mismatch`` or ``skipped``).
  """
  row, root, tier = job
  result = Record(label=row.label, group=row.group, sub=row.sub,
                  measure=row.measure, expected=row.expected, actual=None,
                  status="skipped", note=None)
  if catalog.needs_extended(row.group, root, tier):
    LOG.warning("%s skipped: %s needs the extended tier", row.label,
                row.group)
    result.note = "extended tier"
    return result
  try:
    entry = catalog.catalog_entry(row.group, root, tier)
    if row.measure == "phi":
      subs = [sub for _, sub in entry.maximal_subgroups()]
      value, best = phi_min(entry.group, subs)
      result.note = "attained at %s" % best.name
    else:
      sub = entry.sub(row.sub) if row.sub else None
      value = kappa(entry.group, sub)
  except CapExceededError as e:
    LOG.warning("%s skipped: %s", row.label, e)
    result.note = str(e)
    return result
  result.actual = value
  result.status = "ok" if value == row.expected else "mismatch"
  LOG.info("%s: expected %d, got %d", row.label, row.expected, value)
  return result


def regenerate(table_id, root=None, tier="core", workers=1, slow=True):
  """
  Recomputes a golden table.

  :param slow:
      Include rows marked slow; skipped rows are reported, not dropped.
  :returns:
      Report with ``table``, ``rows``, ``mismatches`` (cell-level diff as
      ``(label, expected, actual)``) and ``skipped``.
  """
  rows = goldens.golden_table(table_id)
  jobs = [(row, root, tier) for row in rows if slow or not row.slow]
  computed = iter(fan_out(compute_row, jobs, workers))
  results = []
  for row in rows:
    if slow or not row.slow:
      results.append(next(computed))
    else:
      results.append(Record(label=row.label, group=row.group, sub=row.sub,
                            measure=row.measure, expected=row.expected,
                            actual=None, status="skipped", note="slow"))
  mismatches = [(r.label, r.expected, r.actual) for r in results
                if r.status == "mismatch"]
  return Record(table=table_id, rows=results, mismatches=mismatches,
                skipped=sum(1 for r in results if r.status == "skipped"))
