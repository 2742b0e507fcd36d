#!/usr/bin/env python
# -*- coding: utf-8 -*-
# Released into the public domain.

""":synopsis: Integer limits and type tuples shared across the package.
:module: derangekit._compat

Should not be used in public code.
"""

# DO NOT REMOVE THIS LINE.
from __future__ import absolute_import

import numpy as np


__author__ = "yesudeep@google.com (Yesudeep Mangalapilly)"


INT64_MAX = (1 << 63) - 1
INT32_MAX = (1 << 31) - 1
UINT16_MAX = 0xffff
UINT8_MAX = 0xff

# Numpy scalars leak out of vectorised kernels; accept them wherever an int is.
INTEGER_TYPES = (int, np.integer)

range = range


def is_integer(obj):
  """Determines whether the object is an integer (bools excluded)."""
  return isinstance(obj, INTEGER_TYPES) and not isinstance(obj, bool)


def point_dtype(degree):
  """Smallest unsigned dtype that holds the points ``0..degree-1``."""
  if degree <= UINT8_MAX + 1:
    return np.uint8
  if degree <= UINT16_MAX + 1:
    return np.uint16
  return np.uint32
