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

""":synopsis: Typed errors raised throughout the library.
:module: derangekit.errors

Every error derives from :class:`DerangekitError` and from the builtin
exception that callers of the plain routines would expect, so
``except ValueError`` keeps working.

.. autoclass:: DerangekitError
.. autoclass:: DegreeMismatchError
.. autoclass:: MalformedPermutationError
.. autoclass:: CapExceededError
.. autoclass:: MembershipError
.. autoclass:: ActionError
.. autoclass:: FieldError
.. autoclass:: CatalogError
.. autoclass:: CatalogMismatchError
.. autoclass:: VerificationError
.. autoclass:: InternalError
"""

from __future__ import absolute_import


__author__ = "yesudeep@google.com (Yesudeep Mangalapilly)"


__all__ = [
    "ActionError",
    "CapExceededError",
    "CatalogError",
    "CatalogMismatchError",
    "DegreeMismatchError",
    "DerangekitError",
    "FieldError",
    "InternalError",
    "MalformedPermutationError",
    "MembershipError",
    "VerificationError",
    ]


class DerangekitError(Exception):
  """Root of every error raised by derangekit."""


class DegreeMismatchError(DerangekitError, ValueError):
  """Permutations of different degrees were combined."""


class MalformedPermutationError(DerangekitError, ValueError):
  """An image list is not a bijection or cycle text does not parse."""


class CapExceededError(DerangekitError, MemoryError):
  """
  A computation would materialize more than the allowed number of items.

  :param what:
      Name of the quantity that overflowed (``"elements"``, ``"classes"``...).
  :param value:
      The true size, so the caller can decide whether to retry.
  :param cap:
      The cap that was exceeded.
  :param tier:
      The tier in force when the cap was hit.
  """

  def __init__(self, what, value, cap, tier="core"):
    self.what = what
    self.value = value
    self.order = value
    self.cap = cap
    self.tier = tier
    advice = ""
    if tier == "core":
      advice = "; rerun with --tier extended"
    DerangekitError.__init__(
        self, "%s count %d exceeds the %s cap %d%s" % (what, value, tier,
                                                      cap, advice))


class MembershipError(DerangekitError, ValueError):
  """An element or subgroup does not lie in the parent group."""


class ActionError(DerangekitError, ValueError):
  """The requested action is degenerate (H = G, intransitive input...)."""


class FieldError(DerangekitError, ValueError):
  """Finite-field construction or arithmetic failed."""


class CatalogError(DerangekitError, ValueError):
  """A catalog entry is missing, unreadable or names an unknown recipe."""


class CatalogMismatchError(CatalogError):
  """
  A catalog entry loaded but its recomputed metadata differs from the file.

  :param name:
      Entry name.
  :param diff:
      List of ``(field, expected, actual)`` tuples.
  """

  def __init__(self, name, diff):
    self.name = name
    self.diff = list(diff)
    lines = ["%s: expected %r, got %r" % row for row in self.diff]
    CatalogError.__init__(self, "catalog entry %r failed validation: %s" % (
        name, "; ".join(lines)))


class VerificationError(DerangekitError, AssertionError):
  """
  A theorem certificate did not hold on an instance.

  :param message:
      Human readable summary.
  :param counterexample:
      JSON-serialisable description of the offending instance.
  """

  def __init__(self, message, counterexample=None):
    self.counterexample = counterexample
    DerangekitError.__init__(self, message)


class InternalError(DerangekitError, RuntimeError):
  """An internal invariant broke (class fusion failed, ...)."""
