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

""":synopsis: Caps, tiers and run settings.
:module: derangekit.settings

.. autoclass:: Settings
.. autofunction:: element_cap
.. autofunction:: settings_from_environ
"""

from __future__ import absolute_import

import collections
import os


__author__ = "yesudeep@google.com (Yesudeep Mangalapilly)"


__all__ = [
    "CHARS_CLASS_CAP",
    "CHARS_ORDER_CAP",
    "COSET_INDEX_CAP",
    "DATA_ENVIRON",
    "ELEMENT_CAP",
    "EXTENDED_ELEMENT_CAP",
    "NORMAL_CLASS_CAP",
    "PACKAGED_DATA_DIR",
    "Settings",
    "TIERS",
    "element_cap",
    "settings_from_environ",
    ]


ELEMENT_CAP = 1 << 23
EXTENDED_ELEMENT_CAP = 1 << 25
CHARS_ORDER_CAP = 1 << 20
CHARS_CLASS_CAP = 48
NORMAL_CLASS_CAP = 64
COSET_INDEX_CAP = 1 << 16

TIERS = ("core", "extended")

DATA_ENVIRON = "DERANGEKIT_DATA"
PACKAGED_DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)),
                                 "data")


def element_cap(tier="core"):
  """Element cap in force for ``tier``."""
  if tier not in TIERS:
    raise ValueError("unknown tier %r; expected one of %r" % (tier, TIERS))
  return EXTENDED_ELEMENT_CAP if tier == "extended" else ELEMENT_CAP


_SettingsBase = collections.namedtuple(
    "_SettingsBase", ["tier", "data_dir", "workers", "output_format"])


class Settings(_SettingsBase):
  """Immutable run settings assembled from flags and the environment."""

  __slots__ = ()

  @property
  def cap(self):
    return element_cap(self.tier)


def settings_from_environ(tier="core", data_dir=None, workers=1,
                          output_format="text", environ=None):
  """
  Resolves the data directory: explicit argument, then ``DERANGEKIT_DATA``,
  then the packaged catalog.
  """
  environ = os.environ if environ is None else environ
  if data_dir is None:
    data_dir = environ.get(DATA_ENVIRON) or PACKAGED_DATA_DIR
  element_cap(tier)
  return Settings(tier=tier, data_dir=data_dir, workers=max(1, int(workers)),
                  output_format=output_format)
