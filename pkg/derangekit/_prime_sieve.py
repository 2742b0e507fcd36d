#!/usr/bin/env python
# -*- coding: utf-8 -*-
# http://goo.gl/9qEXu
# Public domain.

"""Generates a prime sieve."""

from __future__ import division

import functools

import numpy as np


__author__ = "yesudeep@google.com (Yesudeep Mangalapilly)"


def make_prime_sieve(max_n):  # def _numpy_primesfrom2to(max_n):
  """Returns a list of the primes ``2 <= p < max_n`` as Python ints."""
  if max_n <= 2:
    return []
  if max_n < 6:
    return [p for p in (2, 3, 5) if p < max_n]
  sieve = np.ones(max_n // 3 + (max_n % 6 == 2), dtype=bool)
  sieve[0] = False
  for i in range(int(max_n ** 0.5) // 3 + 1):
    if sieve[i]:
      k = 3 * i + 1 | 1
      sieve[((k * k) // 3)::2 * k] = False
      sieve[(k * k + 4 * k - 2 * k * (i & 1)) // 3::2 * k] = False
  primes = np.r_[2, 3, ((3 * np.nonzero(sieve)[0] + 1) | 1)]
  return [int(p) for p in primes if p < max_n]


@functools.lru_cache(maxsize=None)
def small_primes(max_n):
  """Cached tuple of the primes below ``max_n``."""
  return tuple(make_prime_sieve(max_n))
