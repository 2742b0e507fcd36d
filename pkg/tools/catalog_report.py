#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# Copyright 2011 Yesudeep Mangalapilly <yesudeep@gmail.com>
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

"""Prints the validation report of every catalog entry as JSON.

Usage::

    $ python tools/catalog_report.py [data_dir] [core|extended]

Entries that fail validation are reported with their diff instead of
stopping the run.
"""

import sys
import os

sys.path[0:0] = [
  os.curdir,
  ]

from derangekit import catalog
from derangekit import codec
from derangekit.collections import Record
from derangekit.errors import CapExceededError
from derangekit.errors import CatalogMismatchError


def report(root=None, tier="core"):
  results = []
  for name in catalog.catalog_list(root):
    try:
      entry = catalog.catalog_entry(name, root, tier)
      if entry.tier == "extended" and tier == "core":
        results.append(Record(name=name, status="skipped"))
        continue
      result = catalog.catalog_validate(name, root, tier)
      result.degree = entry.group.degree
      result.order = entry.group.order()
      result.subs = list(entry.subs)
    except CatalogMismatchError as e:
      result = Record(name=name, status="mismatch",
                      diff=[list(cell) for cell in e.diff])
    except CapExceededError as e:
      result = Record(name=name, status="skipped", note=str(e))
    results.append(result)
  return Record(entries=results)


if __name__ == "__main__":
  args = sys.argv[1:]
  print(codec.json_encode(report(args[0] if args else None,
                                 args[1] if len(args) > 1 else "core")))
