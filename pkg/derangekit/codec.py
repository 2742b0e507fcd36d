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

""":synopsis: Rendering reports as JSON, text and CSV.
:module: derangekit.codec

Reports are :class:`~derangekit.collections.Record` trees. Before rendering
they are flattened to plain data: fractions become ``"a/b"`` strings,
permutations become 1-based cycles, cyclotomic numbers render as text and
the ``element`` keys that carry live permutations are dropped.

.. autofunction:: to_plain
.. autofunction:: json_encode
.. autofunction:: json_decode
.. autofunction:: text_encode
.. autofunction:: csv_encode
.. autofunction:: render
"""

from __future__ import absolute_import

import csv
import fractions
import io
import json

import numpy as np

from derangekit.cyclotomic import Cyclotomic
from derangekit.perm import Permutation
from derangekit.perm import format_cycles


__author__ = "yesudeep@google.com (Yesudeep Mangalapilly)"


__all__ = [
    "FORMATS",
    "csv_encode",
    "json_decode",
    "json_encode",
    "render",
    "text_encode",
    "to_plain",
    ]


FORMATS = ("text", "json", "csv")

_DROPPED_KEYS = frozenset(["element"])


def to_plain(obj):
  """Recursively converts a report into JSON-compatible values."""
  if isinstance(obj, dict):
    return dict((str(key), to_plain(value)) for key, value in obj.items()
                if key not in _DROPPED_KEYS)
  if isinstance(obj, (list, tuple)):
    return [to_plain(value) for value in obj]
  if isinstance(obj, fractions.Fraction):
    if obj.denominator == 1:
      return obj.numerator
    return "%d/%d" % (obj.numerator, obj.denominator)
  if isinstance(obj, Permutation):
    return format_cycles(obj)
  if isinstance(obj, Cyclotomic):
    return obj.render()
  if isinstance(obj, np.bool_):
    return bool(obj)
  if isinstance(obj, np.integer):
    return int(obj)
  if isinstance(obj, np.ndarray):
    return to_plain(obj.tolist())
  return obj


def json_encode(obj):
  """
  Encodes a report as a JSON string with sorted keys.

  :param obj:
      Report or plain value.
  :returns:
      JSON string.
  """
  if isinstance(obj, bytes):
    raise TypeError("Cannot work with bytes.")
  return json.dumps(to_plain(obj), sort_keys=True, indent=2)


def json_decode(encoded):
  if isinstance(encoded, bytes):
    raise TypeError("Cannot work with bytes.")
  return json.loads(encoded)


def _text_lines(obj, indent):
  pad = "  " * indent
  lines = []
  if isinstance(obj, dict):
    for key in sorted(obj):
      value = obj[key]
      if isinstance(value, (dict, list)) and value:
        lines.append("%s%s:" % (pad, key))
        lines.extend(_text_lines(value, indent + 1))
      else:
        lines.append("%s%s: %s" % (pad, key, _scalar(value)))
  elif isinstance(obj, list):
    for value in obj:
      if isinstance(value, dict):
        nested = _text_lines(value, indent + 1)
        if nested:
          nested[0] = pad + "- " + nested[0].lstrip()
        lines.extend(nested)
      else:
        lines.append("%s- %s" % (pad, _scalar(value)))
  else:
    lines.append(pad + _scalar(obj))
  return lines


def _scalar(value):
  if value is None:
    return "-"
  if isinstance(value, bool):
    return "yes" if value else "no"
  if isinstance(value, (list, dict)):
    return "[]" if isinstance(value, list) else "{}"
  return str(value)


def text_encode(obj):
  """Indented ``key: value`` text for terminals."""
  return "\n".join(_text_lines(to_plain(obj), 0))


def _rows_of(obj):
  plain = to_plain(obj)
  if isinstance(plain, dict):
    for key in ("rows", "results", "entries"):
      if isinstance(plain.get(key), list):
        return plain[key]
    return [plain]
  return plain


def csv_encode(obj):
  """
  One CSV row per entry of ``rows``/``results``/``entries`` (or per list
  item); nested values are written as JSON.
  """
  rows = _rows_of(obj)
  columns = []
  for row in rows:
    for key in (row if isinstance(row, dict) else {"value": row}):
      if key not in columns:
        columns.append(key)
  out = io.StringIO()
  writer = csv.writer(out, lineterminator="\n")
  writer.writerow(columns)
  for row in rows:
    if not isinstance(row, dict):
      row = {"value": row}
    writer.writerow([
        json.dumps(row[c], sort_keys=True)
        if isinstance(row.get(c), (list, dict)) else
        ("" if row.get(c) is None else row.get(c))
        for c in columns])
  return out.getvalue().rstrip("\n")


def render(obj, output_format="text"):
  """Renders ``obj`` in one of :data:`FORMATS`."""
  if output_format == "json":
    return json_encode(obj)
  if output_format == "csv":
    return csv_encode(obj)
  if output_format == "text":
    return text_encode(obj)
  raise ValueError("unknown output format %r; expected one of %s"
                   % (output_format, ", ".join(FORMATS)))
