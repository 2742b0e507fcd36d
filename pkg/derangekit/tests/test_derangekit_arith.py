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

from derangekit import _prime_sieve
from derangekit import arith


__author__ = "yesudeep@google.com (Yesudeep Mangalapilly)"


class Test__pure_is_prime(unittest.TestCase):
  def test_pure_is_prime_for_sieves(self):
    for i in [10, 100, 1000, 10000]:
      sieve = _prime_sieve.make_prime_sieve(i)
      odds = [x for x in sieve if not arith._pure_is_prime(x)]
      self.assertEqual(odds, [])

  def test_composites(self):
    for num in [0, 1, 4, 100, 561, 1105, 3215031751, (1 << 61) + 1]:
      self.assertFalse(arith._pure_is_prime(num))

  def test_large_primes(self):
    self.assertTrue(arith._pure_is_prime((1 << 61) - 1))
    self.assertTrue(arith._pure_is_prime(1000000007))

  def test_agrees_with_is_prime(self):
    for num in range(2000):
      self.assertEqual(arith.is_prime(num), arith._pure_is_prime(num))


class Test_make_prime_sieve(unittest.TestCase):
  def test_small(self):
    self.assertEqual(_prime_sieve.make_prime_sieve(2), [])
    self.assertEqual(_prime_sieve.make_prime_sieve(5), [2, 3])
    self.assertEqual(_prime_sieve.make_prime_sieve(30),
                     [2, 3, 5, 7, 11, 13, 17, 19, 23, 29])

  def test_count(self):
    self.assertEqual(len(_prime_sieve.make_prime_sieve(10000)), 1229)


class Test_gcd(unittest.TestCase):
  def test_gcd(self):
    self.assertEqual(arith.gcd(54, 24), 6)

  def test_gcd_swap(self):
    self.assertEqual(arith.gcd(24, 54), 6)


class Test_lcm(unittest.TestCase):
  def test_lcm(self):
    self.assertEqual(arith.lcm(4, 6), 12)
    self.assertEqual(arith.lcm(6, 4), 12)
    self.assertEqual(arith.lcm(21, 6), 42)

  def test_zero(self):
    self.assertEqual(arith.lcm(0, 6), 0)


class Test_inverse_mod(unittest.TestCase):
  def test_inverse(self):
    self.assertEqual(arith.inverse_mod(3, 7), 5)
    self.assertEqual(arith.inverse_mod(2, 9), 5)

  def test_no_inverse(self):
    self.assertEqual(arith.inverse_mod(6, 9), 0)


class Test_pow_mod(unittest.TestCase):
  def test_pow_mod(self):
    self.assertEqual(arith.pow_mod(3, 4, 7), 4)

  def test_negative_power(self):
    self.assertEqual(arith._pure_pow_mod(3, -1, 7), 5)
    self.assertRaises(ValueError, arith._pure_pow_mod, 3, -1, 9)


class Test_factorize(unittest.TestCase):
  def test_small(self):
    self.assertEqual(arith.factorize(1), ())
    self.assertEqual(arith.factorize(360), ((2, 3), (3, 2), (5, 1)))
    self.assertEqual(arith.factorize(7920),
                     ((2, 4), (3, 2), (5, 1), (11, 1)))

  def test_semiprime_of_large_primes(self):
    self.assertEqual(arith.factorize(1000003 * 999983),
                     ((999983, 1), (1000003, 1)))

  def test_ValueError_when_not_positive(self):
    self.assertRaises(ValueError, arith.factorize, 0)
    self.assertRaises(ValueError, arith.factorize, -4)

  def test_ValueError_when_too_large(self):
    self.assertRaises(ValueError, arith.factorize, 1 << 64)


class Test_divisors(unittest.TestCase):
  def test_divisors(self):
    self.assertEqual(arith.divisors(12), [1, 2, 3, 4, 6, 12])
    self.assertEqual(arith.prime_divisors(60), [2, 3, 5])

  def test_p_part(self):
    self.assertEqual(arith.p_part(48, 2), 16)
    self.assertEqual(arith.p_part(48, 5), 1)


class Test_is_prime_power(unittest.TestCase):
  def test_prime_powers(self):
    self.assertEqual(arith.is_prime_power(8), (2, 3))
    self.assertEqual(arith.is_prime_power(7), (7, 1))
    self.assertEqual(arith.is_prime_power(841), (29, 2))

  def test_not_prime_powers(self):
    for num in [0, 1, 6, 12, 100]:
      self.assertEqual(arith.is_prime_power(num), None)


class Test_totient(unittest.TestCase):
  def test_totient(self):
    self.assertEqual(arith.totient(1), 1)
    self.assertEqual(arith.totient(9), 6)
    self.assertEqual(arith.totient(129), 84)

  def test_lower_bound_holds_everywhere(self):
    for num in range(1, 5000):
      self.assertTrue(arith.totient_lower_bound_holds(num), num)

  def test_lower_bound_is_tight_at_six(self):
    # totient(6) = 2 and 2 * 2**2 >= 6 but 2**2 < 6.
    self.assertEqual(arith.totient(6) ** 2, 4)
    self.assertTrue(arith.totient_lower_bound_holds(6))


class Test_self_centralising_class_bound(unittest.TestCase):
  def test_g2_element_of_order_129(self):
    self.assertEqual(arith.self_centralising_class_bound(129, 14), 6)

  def test_floors(self):
    self.assertEqual(arith.self_centralising_class_bound(7, 4), 1)


class Test_multiplicative_order(unittest.TestCase):
  def test_order(self):
    self.assertEqual(arith.multiplicative_order(2, 7), 3)
    self.assertEqual(arith.multiplicative_order(3, 7), 6)
    self.assertEqual(arith.multiplicative_order(2, 63), 6)

  def test_ValueError_when_not_unit(self):
    self.assertRaises(ValueError, arith.multiplicative_order, 3, 9)


class Test_primitive_root(unittest.TestCase):
  def test_primitive_root(self):
    self.assertEqual(arith.primitive_root(2), 1)
    self.assertEqual(arith.primitive_root(7), 3)
    self.assertEqual(arith.primitive_root(23), 5)

  def test_ValueError_when_not_prime(self):
    self.assertRaises(ValueError, arith.primitive_root, 9)


class Test_smallest_prime_congruent_one(unittest.TestCase):
  def test_above_bound(self):
    self.assertEqual(arith.smallest_prime_congruent_one(30, 2 * 60 ** 0.5),
                     31)
    self.assertEqual(arith.smallest_prime_congruent_one(4, 13), 17)

  def test_bound_is_exclusive(self):
    self.assertEqual(arith.smallest_prime_congruent_one(6, 7), 13)
