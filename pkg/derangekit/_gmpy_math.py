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

""":synopsis: gmpy2 kernels for :mod:`derangekit.arith`.
:module: derangekit._gmpy_math

Importing this module raises :class:`ImportError` when gmpy2 is missing, so
that :mod:`derangekit.arith` falls back to its pure-Python kernels.
"""

from __future__ import absolute_import

import logging


__author__ = "yesudeep@google.com (Yesudeep Mangalapilly)"


LOG = logging.getLogger(__name__)


try:
  import gmpy2
except ImportError:
  LOG.debug("gmpy2 not found; modular arithmetic runs in pure Python")
  raise


def pow_mod(base, power, modulus):
  """``base ** power % modulus`` on mpz integers, returned as an int."""
  return int(gmpy2.powmod(gmpy2.mpz(base), gmpy2.mpz(power),
                          gmpy2.mpz(modulus)))


def is_prime(num):
  """gmpy2's BPSW test followed by Miller-Rabin rounds; exact below
  ``2**64``."""
  if num < 2:
    return False
  return bool(gmpy2.is_prime(gmpy2.mpz(num)))
