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

""":synopsis: Report records.
:module: derangekit.collections

Records
-------
.. autoclass:: Record
"""

from __future__ import absolute_import


__author__ = "yesudeep@google.com (Yesudeep Mangalapilly)"


__all__ = [
    "Record",
    ]


class Record(dict):
  """
  A dictionary with attribute-style access, used for every report the
  library returns. Reports stay plain dicts so they serialise directly.

  Subclass properties will override dictionary keys.
  """

  def __repr__(self):
    return "%s(%s)" % (self.__class__.__name__,
                       super(Record, self).__repr__())

  def __delattr__(self, name):
    del self[name]

  def __getattr__(self, name):
    try:
      return self[name]
    except KeyError:
      raise AttributeError("attribute %r not found" % name)

  def __setattr__(self, name, value):
    self[name] = value

  def project(self, *names):
    """A new record holding only ``names``."""
    return Record((name, self[name]) for name in names)
