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

""":synopsis: Decorators used throughout the library.
:module: derangekit.decorators

.. autofunction:: lazy_attribute
.. autofunction:: timed
"""

from __future__ import absolute_import

import functools
import logging
import time


__author__ = "yesudeep@google.com (Yesudeep Mangalapilly)"


__all__ = [
    "lazy_attribute",
    "timed",
    ]


def lazy_attribute(func):
  """Computes an attribute on first access and stores it on the instance.

  Usage::

      class Group(object):
          @lazy_attribute
          def chain(self):
              return build_chain(...)

  :param func:
      Method taking only ``self``.
  :returns:
      A property that caches its value under ``_lazy_<name>``.
  """
  slot = "_lazy_" + func.__name__

  @functools.wraps(func)
  def getter(self):
    try:
      return self.__dict__[slot]
    except KeyError:
      value = func(self)
      self.__dict__[slot] = value
      return value

  return property(getter)


def timed(logger_name):
  """Logs the wall time of each call at DEBUG on ``logger_name``.

  :param logger_name:
      Name of the logger to report to.
  """
  log = logging.getLogger(logger_name)

  def decorator(func):
    @functools.wraps(func)
    def new_func(*args, **kwargs):
      """Wrapper function."""
      start = time.time()
      try:
        return func(*args, **kwargs)
      finally:
        log.debug("%s took %.3fs", func.__name__, time.time() - start)
    return new_func

  return decorator
