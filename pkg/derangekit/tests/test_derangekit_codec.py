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

from __future__ import absolute_import

import csv
import fractions
import json
import unittest

import numpy as np

from derangekit import codec
from derangekit.collections import Record
from derangekit.cyclotomic import Cyclotomic
from derangekit.perm import parse_cycles


__author__ = "yesudeep@google.com (Yesudeep Mangalapilly)"


REPORT = Record(
    group="A5",
    kappa=1,
    delta=fractions.Fraction(1, 3),
    classes=[
        Record(rep=parse_cycles("(1,2,3,4,5)", 5), size=12, order=5,
               element=parse_cycles("(1,2,3,4,5)", 5)),
        ],
    )


class Test_to_plain(unittest.TestCase):
  def test_report(self):
    self.assertEqual(codec.to_plain(REPORT), {
        "group": "A5",
        "kappa": 1,
        "delta": "1/3",
        "classes": [{"rep": "(1,2,3,4,5)", "size": 12, "order": 5}],
        })

  def test_scalars(self):
    self.assertEqual(codec.to_plain(fractions.Fraction(4, 2)), 2)
    self.assertEqual(codec.to_plain(np.int64(7)), 7)
    self.assertTrue(type(codec.to_plain(np.int64(7))) is int)
    self.assertTrue(codec.to_plain(np.bool_(True)) is True)
    self.assertEqual(codec.to_plain(np.arange(3)), [0, 1, 2])
    self.assertEqual(codec.to_plain((1, 2)), [1, 2])
    self.assertEqual(codec.to_plain(parse_cycles("()", 3)), "()")
    self.assertEqual(codec.to_plain(Cyclotomic.integer(-2)), "-2")


class Test_json(unittest.TestCase):
  def test_codec_identity(self):
    decoded = codec.json_decode(codec.json_encode(REPORT))
    self.assertEqual(decoded, codec.to_plain(REPORT))

  def test_sorted_keys(self):
    encoded = codec.json_encode(Record(b=1, a=2))
    self.assertEqual(encoded, '{\n  "a": 2,\n  "b": 1\n}')

  def test_TypeError_when_bytes(self):
    self.assertRaises(TypeError, codec.json_encode, b"data")
    self.assertRaises(TypeError, codec.json_decode, b"{}")


class Test_text_encode(unittest.TestCase):
  def test_nested(self):
    text = codec.text_encode(Record(group="A5", ok=True, sub=None,
                                    rows=[Record(kappa=1), 2], empty=[]))
    self.assertEqual(text.splitlines(), [
        "empty: []",
        "group: A5",
        "ok: yes",
        "rows:",
        "  - kappa: 1",
        "  - 2",
        "sub: -",
        ])

  def test_scalar(self):
    self.assertEqual(codec.text_encode(fractions.Fraction(2, 5)), "2/5")


class Test_csv_encode(unittest.TestCase):
  def test_rows(self):
    report = Record(rows=[Record(label="A5", kappa=2, extra=[1, 2]),
                          Record(label="S4", kappa=2, note=None)])
    lines = codec.csv_encode(report).splitlines()
    columns = lines[0].split(",")
    self.assertEqual(columns, ["label", "kappa", "extra", "note"])
    self.assertEqual(len(lines), 3)
    first = dict(zip(columns, _split_csv(lines[1])))
    self.assertEqual(first["label"], "A5")
    self.assertEqual(json.loads(first["extra"]), [1, 2])
    second = dict(zip(columns, _split_csv(lines[2])))
    self.assertEqual(second["note"], "")

  def test_single_record(self):
    self.assertEqual(codec.csv_encode(Record(kappa=1)), "kappa\n1")

  def test_plain_list(self):
    self.assertEqual(codec.csv_encode([3, 4]), "value\n3\n4")


class Test_render(unittest.TestCase):
  def test_formats(self):
    self.assertEqual(codec.render(Record(kappa=1)), "kappa: 1")
    self.assertEqual(codec.render(Record(kappa=1), "json"),
                     '{\n  "kappa": 1\n}')
    self.assertEqual(codec.render(Record(kappa=1), "csv"), "kappa\n1")

  def test_ValueError_when_unknown_format(self):
    self.assertRaises(ValueError, codec.render, Record(), "yaml")


def _split_csv(line):
  return next(csv.reader([line]))
