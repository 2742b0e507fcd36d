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

""":synopsis: Elementary number theory.
:module: derangekit.arith

Everything here works on Python ints that fit in 63 bits. Results are exact;
nothing is probabilistic.

Math
----
.. autofunction:: gcd
.. autofunction:: lcm
.. autofunction:: inverse_mod
.. autofunction:: pow_mod

Primes and factorizations
-------------------------
.. autofunction:: is_prime
.. autofunction:: factorize
.. autofunction:: is_prime_power
.. autofunction:: prime_divisors
.. autofunction:: divisors
.. autofunction:: p_part
.. autofunction:: smallest_prime_congruent_one

Totients and orders
-------------------
.. autofunction:: totient
.. autofunction:: totient_lower_bound_holds
.. autofunction:: self_centralising_class_bound
.. autofunction:: multiplicative_order
.. autofunction:: primitive_root
"""

from __future__ import absolute_import
from __future__ import division

import functools
import math as _math

from derangekit import _compat
from derangekit import _prime_sieve


__author__ = "yesudeep@google.com (Yesudeep Mangalapilly)"


__all__ = [
    "divisors",
    "factorize",
    "gcd",
    "inverse_mod",
    "is_prime",
    "is_prime_power",
    "lcm",
    "multiplicative_order",
    "p_part",
    "pow_mod",
    "prime_divisors",
    "primitive_root",
    "self_centralising_class_bound",
    "smallest_prime_congruent_one",
    "totient",
    "totient_lower_bound_holds",
    ]


TRIAL_DIVISION_LIMIT = 10 ** 6

# Deterministic Miller-Rabin witnesses; correct for every n < 3.3 * 10**24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def gcd(num_a, num_b):
  """Calculates the greatest common divisor.

  Non-recursive fast implementation.

  :param num_a:
      Integer value.
  :param num_b:
      Integer value.
  :returns:
      Greatest common divisor.
  """
  num_a, num_b = abs(num_a), abs(num_b)
  num_a, num_b = max(num_a, num_b), min(num_a, num_b)
  while num_b:
    num_a, num_b = num_b, (num_a % num_b)
  return num_a


def lcm(num_a, num_b):
  """Least common multiple.

  :param num_a:
      Integer value.
  :param num_b:
      Integer value.
  :returns:
      Least common multiple.
  """
  if not num_a or not num_b:
    return 0
  return abs(num_a * num_b) // gcd(num_a, num_b)


def inverse_mod(num_a, num_b):
  """Returns inverse of a mod b, zero if none

  Uses Extended Euclidean Algorithm

  :param num_a:
      Integer value
  :param num_b:
      Modulus
  :returns:
      Inverse of a mod b, zero if none.
  """
  num_c, num_d = num_a % num_b, num_b
  num_uc, num_ud = 1, 0
  while num_c:
    quotient = num_d // num_c
    num_c, num_d = num_d - (quotient * num_c), num_c
    num_uc, num_ud = num_ud - (quotient * num_uc), num_uc
  if num_d == 1:
    return num_ud % num_b
  return 0


def _pure_pow_mod(base, power, modulus):
  """Calculates ``base**power mod modulus``; negative powers invert first."""
  if power < 0:
    inverse = inverse_mod(base, modulus)
    if not inverse:
      raise ValueError("%d is not invertible mod %d" % (base, modulus))
    return pow(inverse, -power, modulus)
  return pow(base, power, modulus)


def _pure_is_prime(num):
  """Determines whether a number is prime.

  Trial division by the small primes, then Miller-Rabin with a witness set
  that is deterministic far beyond 2**64.

  :param num:
      Number
  :returns:
      ``True`` if prime; ``False`` otherwise.
  """
  if num < 2:
    return False
  for prime_number in _prime_sieve.small_primes(1000):
    if prime_number * prime_number > num:
      return True
    if not num % prime_number:
      return num == prime_number
  num_s, num_t = num - 1, 0
  while not num_s % 2:
    num_s, num_t = num_s // 2, num_t + 1
  for base in _MR_WITNESSES:
    num_v = pow(base, num_s, num)
    if num_v == 1 or num_v == num - 1:
      continue
    for _ in range(num_t - 1):
      num_v = (num_v * num_v) % num
      if num_v == num - 1:
        break
    else:
      return False
  return True


try:
  from derangekit._gmpy_math import is_prime as _is_prime
  from derangekit._gmpy_math import pow_mod as _pow_mod
except ImportError:
  _pow_mod = _pure_pow_mod
  _is_prime = _pure_is_prime

pow_mod = _pow_mod
is_prime = _is_prime


def _pollard_brent(num):
  """Returns a nontrivial factor of the odd composite ``num``.

  Brent's cycle finding with the polynomial ``x**2 + c``; ``c`` walks
  1, 2, 3... so the factor found is reproducible.
  """
  for const in _compat.range(1, num):
    y_val, r_len, q_val = 2, 1, 1
    factor = 1
    x_val = ys_val = y_val
    while factor == 1:
      x_val = y_val
      for _ in _compat.range(r_len):
        y_val = (y_val * y_val + const) % num
      k = 0
      while k < r_len and factor == 1:
        ys_val = y_val
        for _ in _compat.range(min(128, r_len - k)):
          y_val = (y_val * y_val + const) % num
          q_val = (q_val * abs(x_val - y_val)) % num
        factor = gcd(q_val, num)
        k += 128
      r_len *= 2
    if factor == num:
      factor = 1
      while factor == 1:
        ys_val = (ys_val * ys_val + const) % num
        factor = gcd(abs(x_val - ys_val), num)
    if factor != num:
      return factor
  raise ValueError("no factor found for %d" % num)


def _factor_into(num, counts):
  if num == 1:
    return
  if is_prime(num):
    counts[num] = counts.get(num, 0) + 1
    return
  factor = _pollard_brent(num)
  _factor_into(factor, counts)
  _factor_into(num // factor, counts)


@functools.lru_cache(maxsize=4096)
def factorize(num):
  """
  Factorizes a positive integer.

  Trial division up to 10**6, then Pollard-Brent on what remains.

  :param num:
      Integer ``1 <= num <= 2**63 - 1``.
  :returns:
      Tuple of ``(prime, exponent)`` pairs sorted by prime. ``1`` gives ``()``.
  """
  if not _compat.is_integer(num) or num < 1:
    raise ValueError("factorize needs a positive integer, got %r" % (num,))
  if num > _compat.INT64_MAX:
    raise ValueError("%d does not fit in 63 bits" % num)
  counts = {}
  remaining = int(num)
  for prime_number in _prime_sieve.small_primes(TRIAL_DIVISION_LIMIT):
    if prime_number * prime_number > remaining:
      break
    while not remaining % prime_number:
      counts[prime_number] = counts.get(prime_number, 0) + 1
      remaining //= prime_number
  if remaining > 1:
    _factor_into(remaining, counts)
  return tuple(sorted(counts.items()))


def prime_divisors(num):
  """Sorted list of the distinct primes dividing ``num``."""
  return [prime for prime, _ in factorize(num)]


def divisors(num):
  """Sorted list of all positive divisors of ``num``."""
  result = [1]
  for prime, exponent in factorize(num):
    result = [d * prime ** e for d in result for e in range(exponent + 1)]
  return sorted(result)


def p_part(num, prime):
  """The largest power of ``prime`` dividing ``num``."""
  part = 1
  while num and not num % prime:
    num //= prime
    part *= prime
  return part


def is_prime_power(num):
  """
  Determines whether ``num`` is a prime power.

  :param num:
      Integer ``>= 2``.
  :returns:
      ``(p, k)`` with ``p**k == num``, or ``None``.
  """
  if num < 2:
    return None
  factors = factorize(num)
  if len(factors) == 1:
    return factors[0]
  return None


def totient(num):
  """Euler's totient. ``totient(1) == 1``."""
  result = num
  for prime, _ in factorize(num):
    result = result // prime * (prime - 1)
  return result


def totient_lower_bound_holds(num):
  """
  Checks the lower bound ``totient(n) >= sqrt(n/a)`` with ``a = 2`` when
  ``n = 2 (mod 4)`` and ``a = 1`` otherwise.

  Compared in integers: ``totient(n)**2 * a >= n``.
  """
  scale = 2 if num % 4 == 2 else 1
  return totient(num) ** 2 * scale >= num


def self_centralising_class_bound(alpha, normaliser_index):
  """
  Number of distinct classes guaranteed by a self-centralising cyclic
  subgroup of order ``alpha`` whose normaliser quotient has order
  ``normaliser_index``: ``totient(alpha) / normaliser_index``.

  ``(129, 14)`` gives 6. The quotient is floored.
  """
  return totient(alpha) // normaliser_index


def multiplicative_order(num_a, modulus):
  """Multiplicative order of ``num_a`` modulo ``modulus``."""
  if gcd(num_a, modulus) != 1:
    raise ValueError("%d is not a unit mod %d" % (num_a, modulus))
  group_order = totient(modulus)
  order = group_order
  for prime, exponent in factorize(group_order):
    for _ in range(exponent):
      if pow_mod(num_a, order // prime, modulus) == 1:
        order //= prime
      else:
        break
  return order


def primitive_root(prime):
  """Smallest primitive root modulo the prime ``prime``."""
  if not is_prime(prime):
    raise ValueError("%d is not prime" % prime)
  if prime == 2:
    return 1
  factors = prime_divisors(prime - 1)
  for candidate in _compat.range(2, prime):
    if all(pow_mod(candidate, (prime - 1) // q, prime) != 1 for q in factors):
      return candidate
  raise ValueError("no primitive root mod %d" % prime)


def smallest_prime_congruent_one(modulus, lower):
  """
  Smallest prime ``l`` with ``l = 1 (mod modulus)`` and ``l > lower``.

  :param modulus:
      Positive integer.
  :param lower:
      Real lower bound (exclusive).
  """
  candidate = modulus * (int(_math.floor(lower)) // modulus) + 1
  while candidate <= lower or not is_prime(candidate):
    candidate += modulus
  return candidate
