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

from os import path

from derangekit import settings


__author__ = "yesudeep@google.com (Yesudeep Mangalapilly)"


TEST_DIR_PATH = path.realpath(path.abspath(path.dirname(__file__)))

DATA_DIR = settings.PACKAGED_DATA_DIR

# Rows that take minutes run only when asked for.
SLOW = bool(os.environ.get("DERANGEKIT_SLOW"))
EXTENDED = bool(os.environ.get("DERANGEKIT_EXTENDED"))

SLOW_REASON = "set DERANGEKIT_SLOW=1 to run"
EXTENDED_REASON = "set DERANGEKIT_EXTENDED=1 to run"

# Character degrees of small groups, sorted.
A5_DEGREES = [1, 3, 3, 4, 5]
S3_DEGREES = [1, 1, 2]
D10_DEGREES = [1, 1, 2, 2]
S4_DEGREES = [1, 1, 2, 3, 3]
Q8_DEGREES = [1, 1, 1, 1, 2]

# Orders of the catalog groups exercised by the fast tests.
CATALOG_ORDERS = {
    "A5": 60,
    "D10": 10,
    "S4": 24,
    "S5": 120,
    "A6": 360,
    "L2_7": 168,
    "M10": 720,
    "M11": 7920,
    "AGL1_8": 56,
    "AGL1_9": 72,
    }
