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

import os
import shutil
import tempfile
import unittest

from derangekit import catalog
from derangekit.errors import CatalogError
from derangekit.errors import CatalogMismatchError
from derangekit.errors import MalformedPermutationError
from derangekit.tests import constants


__author__ = "yesudeep@google.com (Yesudeep Mangalapilly)"


FAST_ENTRIES = ["A5", "D10", "S4", "S5", "A6", "L2_7", "AGL1_8", "AGL1_9",
                "F13_6", "GL1_ext2_9", "M10"]


def _write(root, entry, files):
  path = os.path.join(root, entry)
  if not os.path.isdir(path):
    os.makedirs(path)
  for name, text in files.items():
    with open(os.path.join(path, name), "w") as handle:
      handle.write(text)


class CatalogTestCase(unittest.TestCase):
  def setUp(self):
    self.root = tempfile.mkdtemp(prefix="derangekit-")

  def tearDown(self):
    shutil.rmtree(self.root)


class Test_parse_meta(unittest.TestCase):
  def test_values(self):
    meta = catalog.parse_meta("# comment\ndegree = 5\nprimitive = true\n"
                              "alias = L3(2)  # trailing\n\n")
    self.assertEqual(list(meta), ["degree", "primitive", "alias"])
    self.assertEqual(meta["degree"], 5)
    self.assertEqual(meta["primitive"], True)
    self.assertEqual(meta["alias"], "L3(2)")

  def test_CatalogError(self):
    self.assertRaises(CatalogError, catalog.parse_meta, "degree 5\n")


class Test_catalog_list(unittest.TestCase):
  def test_packaged(self):
    names = catalog.catalog_list(constants.DATA_DIR)
    self.assertEqual(names, sorted(names))
    for name in ["A5", "M11", "M11_12", "AGL1_8", "P_25_17", "Sz8_3"]:
      self.assertTrue(name in names, name)

  def test_CatalogError_when_missing(self):
    self.assertRaises(CatalogError, catalog.catalog_list,
                      os.path.join(constants.TEST_DIR_PATH, "no-such-dir"))


class Test_catalog_entry(unittest.TestCase):
  def test_a5(self):
    entry = catalog.catalog_entry("A5", constants.DATA_DIR)
    self.assertEqual(entry.group.order(), 60)
    self.assertEqual(entry.group.name, "A5")
    self.assertEqual(list(entry.subs), ["D10", "D6", "A4", "Z5"])
    self.assertEqual([name for name, _ in entry.maximal_subgroups()],
                     ["A4", "D10", "D6"])
    self.assertEqual(entry.sub("D10").order(), 10)
    self.assertEqual(entry.tier, "core")

  def test_orders(self):
    for name, order in constants.CATALOG_ORDERS.items():
      group = catalog.catalog_entry(name, constants.DATA_DIR).group
      self.assertEqual(group.order(), order, name)

  def test_cached(self):
    self.assertTrue(catalog.catalog_entry("A5", constants.DATA_DIR) is
                    catalog.catalog_entry("A5", constants.DATA_DIR))

  def test_catalog_load(self):
    group, subs = catalog.catalog_load("M11", constants.DATA_DIR)
    self.assertEqual(group.degree, 11)
    self.assertEqual(subs["S5"].order(), 120)

  def test_CatalogError(self):
    self.assertRaises(CatalogError, catalog.catalog_entry, "NoSuchGroup",
                      constants.DATA_DIR)
    entry = catalog.catalog_entry("A5", constants.DATA_DIR)
    self.assertRaises(CatalogError, entry.sub, "Q8")


class Test_catalog_validate(unittest.TestCase):
  def test_fast_entries(self):
    for name in FAST_ENTRIES:
      result = catalog.catalog_validate(name, constants.DATA_DIR)
      self.assertEqual(result.status, "ok", name)
      self.assertTrue(result.checked > 0)

  def test_m11(self):
    for name in ["M11", "M11_12"]:
      self.assertEqual(catalog.catalog_validate(name, constants.DATA_DIR)
                       .status, "ok")

  @unittest.skipUnless(constants.SLOW, constants.SLOW_REASON)
  def test_everything(self):
    for result in catalog.catalog_validate_all(constants.DATA_DIR):
      self.assertTrue(result.status in ("ok", "skipped"), result.name)

  @unittest.skipUnless(constants.SLOW, constants.SLOW_REASON)
  def test_m12_maximal_subgroups(self):
    entry = catalog.catalog_entry("M12", constants.DATA_DIR)
    self.assertEqual(entry.validation.status, "ok")
    self.assertEqual(entry.meta["phi"], 5)
    maximal = entry.maximal_subgroups()
    self.assertEqual(len(maximal), 11)
    self.assertEqual(sorted(sub.order() for _, sub in maximal),
                     [72, 192, 192, 240, 432, 432, 660, 1440, 1440, 7920,
                      7920])
    self.assertEqual([entry.sub(n).is_transitive()
                      for n in ["M11", "M11b", "M10_2", "M10_2b"]],
                     [False, True, False, True])

  def test_transitivity_degree(self):
    group = catalog.catalog_entry("S5", constants.DATA_DIR).group
    self.assertEqual(catalog.transitivity_degree(group, 6), 5)
    group = catalog.catalog_entry("A5", constants.DATA_DIR).group
    self.assertEqual(catalog.transitivity_degree(group), 3)


class Test_custom_catalog(CatalogTestCase):
  def _s4(self, name="T", meta="degree = 4\norder = 24\n"):
    _write(self.root, name, {
        "group.gens": "perm 4\n(1,2,3,4)\n(1,2)\n",
        "sub_P.gens": "recipe point_stabilizer 1\n",
        "sub_K.gens": "perm 4\n(1,2)(3,4)\n(1,3)(2,4)\n",
        "meta.txt": meta,
        })

  def test_load(self):
    self._s4()
    entry = catalog.catalog_entry("T", self.root)
    self.assertEqual(entry.group.order(), 24)
    self.assertEqual(sorted(entry.subs), ["K", "P"])
    self.assertEqual(entry.sub("P").order(), 6)
    self.assertEqual(entry.sub("K").order(), 4)

  def test_validate_ok(self):
    self._s4(meta="degree = 4\norder = 24\nexpected_kappa = 2\n"
                  "sub.P.order = 6\nexpected_kappa.K = 3\n")
    result = catalog.catalog_validate("T", self.root)
    self.assertEqual(result.status, "ok")
    self.assertEqual(result.checked, 5)

  def test_CatalogMismatchError(self):
    self._s4(meta="degree = 4\norder = 25\nexpected_kappa = 3\n")
    try:
      catalog.catalog_validate("T", self.root)
    except CatalogMismatchError as e:
      self.assertEqual(e.diff, [("order", 25, 24),
                                ("expected_kappa", 3, 2)])
    else:
      self.fail("CatalogMismatchError not raised")

  def test_loading_refuses_a_corrupted_entry(self):
    self._s4(meta="degree = 4\norder = 25\n")
    for _ in range(2):
      self.assertRaises(CatalogMismatchError, catalog.catalog_entry, "T",
                        self.root)
    self.assertRaises(CatalogMismatchError, catalog.catalog_load, "T",
                      self.root)
    self.assertRaises(CatalogMismatchError, catalog.resolve_group_ref,
                      "catalog:T", self.root)

  def test_validation_is_kept_on_the_entry(self):
    self._s4(meta="degree = 4\norder = 24\nsub.P.order = 6\n")
    entry = catalog.catalog_entry("T", self.root)
    self.assertEqual(entry.validation.status, "ok")
    self.assertEqual(entry.validation.checked, 3)
    self.assertTrue(catalog.catalog_validate("T", self.root) is
                    entry.validation)

  def test_entry_tier(self):
    self._s4(meta="tier = extended\norder = 1\n")
    self.assertEqual(catalog.entry_tier("T", self.root), "extended")
    self.assertTrue(catalog.needs_extended("T", self.root))
    self.assertFalse(catalog.needs_extended("T", self.root, "extended"))
    self._s4(name="U")
    self.assertEqual(catalog.entry_tier("U", self.root), "core")
    self.assertFalse(catalog.needs_extended("U", self.root))

  def test_extended_entries_are_skipped(self):
    self._s4(meta="tier = extended\norder = 1\n")
    results = catalog.catalog_validate_all(self.root, "core")
    self.assertEqual([(r.name, r.status) for r in results],
                     [("T", "skipped")])

  def test_kinds(self):
    _write(self.root, "B", {
        "group.gens": "build alternating 5\n",
        "sub_D.gens": "perm 5\n(1,2,3,4,5)\n(2,5)(3,4)\n",
        })
    _write(self.root, "C", {"group.gens": "coset B D\n"})
    _write(self.root, "M", {"group.gens": "mat 3 1 1\n2\n"})
    coset = catalog.catalog_entry("C", self.root).group
    self.assertEqual((coset.degree, coset.order()), (6, 60))
    affine = catalog.catalog_entry("M", self.root).group
    self.assertEqual((affine.degree, affine.order()), (3, 6))

  def test_recipes(self):
    _write(self.root, "R", {
        "group.gens": "build symmetric 5\n",
        "meta.txt": "subs = Y, S, Z, N, E\n",
        "sub_Y.gens": "recipe sylow 5\n",
        "sub_S.gens": "recipe set_stabilizer 1 2\n",
        "sub_Z.gens": "recipe partition_stabilizer 12/34/5\n",
        "sub_N.gens": "recipe sylow_normalizer 5\n",
        "sub_E.gens": "recipe alternating_part\n",
        })
    entry = catalog.catalog_entry("R", self.root)
    self.assertEqual([entry.sub(n).order() for n in "YSZNE"],
                     [5, 12, 8, 20, 60])

  def test_search_recipes(self):
    _write(self.root, "R", {
        "group.gens": "build symmetric 6\n",
        "sub_T.gens": "recipe partition_search 3 72 transitive\n",
        "sub_D.gens": "recipe partition_search 2 48 transitive\n",
        })
    _write(self.root, "Q", {
        "group.gens": "build symmetric 5\n",
        "sub_I.gens": "recipe cyclic_normalizer 2 1\n",
        "sub_C.gens": "recipe cyclic_normalizer 3 2\n",
        "sub_F.gens": "recipe cyclic_normalizer 5 0\n",
        })
    entry = catalog.catalog_entry("R", self.root)
    self.assertEqual([entry.sub(n).order() for n in "TD"], [72, 48])
    self.assertTrue(all(entry.sub(n).is_transitive() for n in "TD"))
    entry = catalog.catalog_entry("Q", self.root)
    self.assertEqual([entry.sub(n).order() for n in "ICF"], [8, 12, 20])

  def test_search_recipes_CatalogError(self):
    _write(self.root, "X", {"group.gens": "build symmetric 5\n",
                            "sub_P.gens": "recipe partition_search 2 8\n"})
    self.assertRaises(CatalogError, catalog.catalog_entry, "X", self.root)
    _write(self.root, "Y", {"group.gens": "build symmetric 4\n",
                            "sub_P.gens": "recipe partition_search 2 9\n"})
    self.assertRaises(CatalogError, catalog.catalog_entry, "Y", self.root)
    _write(self.root, "Z", {"group.gens": "build symmetric 4\n",
                            "sub_N.gens": "recipe cyclic_normalizer 3 0\n"})
    self.assertRaises(CatalogError, catalog.catalog_entry, "Z", self.root)

  def test_CatalogError_on_bad_files(self):
    _write(self.root, "U", {"group.gens": "build no_such_builder\n"})
    self.assertRaises(CatalogError, catalog.catalog_entry, "U", self.root)
    _write(self.root, "V", {"group.gens": "lattice 3\n"})
    self.assertRaises(CatalogError, catalog.catalog_entry, "V", self.root)
    _write(self.root, "W", {"group.gens": "mat 3 1 2\n1 0\n"})
    self.assertRaises(CatalogError, catalog.catalog_entry, "W", self.root)
    _write(self.root, "X", {"group.gens": "build symmetric 4\n",
                            "sub_Q.gens": "recipe no_such_recipe\n"})
    self.assertRaises(CatalogError, catalog.catalog_entry, "X", self.root)
    _write(self.root, "E", {"group.gens": ""})
    self.assertRaises(CatalogError, catalog.catalog_entry, "E", self.root)

  def test_MalformedPermutationError(self):
    _write(self.root, "P", {"group.gens": "perm 3\n(1,2,4)\n"})
    self.assertRaises(MalformedPermutationError, catalog.catalog_entry, "P",
                      self.root)


class Test_resolve_refs(CatalogTestCase):
  def test_catalog_refs(self):
    group = catalog.resolve_group_ref("catalog:A5", constants.DATA_DIR)
    self.assertEqual(group.order(), 60)
    sub = catalog.resolve_sub_ref("catalog:A5/D10", group, constants.DATA_DIR)
    self.assertEqual(sub.order(), 10)
    self.assertEqual(catalog.resolve_sub_ref(None, group), None)

  def test_group_prefix_of_sub_ref(self):
    group = catalog.resolve_group_ref("catalog:A5/D10", constants.DATA_DIR)
    self.assertEqual(group.order(), 60)

  def test_file_refs(self):
    path = os.path.join(self.root, "s4.gens")
    with open(path, "w") as handle:
      handle.write("perm 4\n(1,2,3,4)\n(1,2)\n")
    sub_path = os.path.join(self.root, "v4.gens")
    with open(sub_path, "w") as handle:
      handle.write("perm 4\n(1,2)(3,4)\n(1,3)(2,4)\n")
    group = catalog.resolve_group_ref("file:" + path, constants.DATA_DIR)
    self.assertEqual(group.name, "s4.gens")
    sub = catalog.resolve_sub_ref("file:" + sub_path, group)
    self.assertEqual(sub.order(), 4)

  def test_CatalogError(self):
    group = catalog.resolve_group_ref("catalog:A5", constants.DATA_DIR)
    self.assertRaises(CatalogError, catalog.resolve_group_ref, "A5")
    self.assertRaises(CatalogError, catalog.resolve_sub_ref, "catalog:A5",
                      group, constants.DATA_DIR)
    self.assertRaises(CatalogError, catalog.resolve_sub_ref,
                      "catalog:S5/S4", group, constants.DATA_DIR)
    self.assertRaises(CatalogError, catalog.resolve_group_ref,
                      "file:" + os.path.join(self.root, "missing.gens"))
