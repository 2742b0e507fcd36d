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

import unittest

from derangekit import settings


__author__ = "yesudeep@google.com (Yesudeep Mangalapilly)"


class Test_element_cap(unittest.TestCase):
  def test_tiers(self):
    self.assertEqual(settings.element_cap(), 1 << 23)
    self.assertEqual(settings.element_cap("core"), settings.ELEMENT_CAP)
    self.assertEqual(settings.element_cap("extended"), 1 << 25)

  def test_ValueError_when_unknown_tier(self):
    self.assertRaises(ValueError, settings.element_cap, "huge")


class Test_settings_from_environ(unittest.TestCase):
  def test_defaults(self):
    s = settings.settings_from_environ(environ={})
    self.assertEqual(s.tier, "core")
    self.assertEqual(s.data_dir, settings.PACKAGED_DATA_DIR)
    self.assertEqual(s.workers, 1)
    self.assertEqual(s.output_format, "text")
    self.assertEqual(s.cap, settings.ELEMENT_CAP)

  def test_environment_data_dir(self):
    s = settings.settings_from_environ(
        environ={settings.DATA_ENVIRON: "/srv/catalog"})
    self.assertEqual(s.data_dir, "/srv/catalog")

  def test_explicit_data_dir_wins(self):
    s = settings.settings_from_environ(
        data_dir="/tmp/mine", environ={settings.DATA_ENVIRON: "/srv/catalog"})
    self.assertEqual(s.data_dir, "/tmp/mine")

  def test_extended_and_workers(self):
    s = settings.settings_from_environ("extended", workers=0, environ={})
    self.assertEqual(s.workers, 1)
    self.assertEqual(s.cap, settings.EXTENDED_ELEMENT_CAP)
    s = settings.settings_from_environ(workers="4", environ={})
    self.assertEqual(s.workers, 4)

  def test_ValueError_when_unknown_tier(self):
    self.assertRaises(ValueError, settings.settings_from_environ, "small",
                      environ={})

  def test_immutable(self):
    s = settings.settings_from_environ(environ={})
    self.assertRaises(AttributeError, setattr, s, "tier", "extended")
