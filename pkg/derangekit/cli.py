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

""":synopsis: The ``derangekit`` command line.
:module: derangekit.cli

Verbs::

    derangekit analyze --group catalog:A5 --sub catalog:A5/D10
    derangekit table kappa_table1
    derangekit verify jordan
    derangekit catalog list|validate|show
    derangekit chars table|induce|vanish

Exit codes: 0 success, 1 verification mismatch, 2 unresolvable input,
3 resource cap. Reports go to stdout and logs to stderr.

.. autofunction:: build_parser
.. autofunction:: main
"""

from __future__ import absolute_import
from __future__ import print_function

import argparse
import logging
import sys

from derangekit import __version__
from derangekit import catalog
from derangekit import chars
from derangekit import codec
from derangekit import goldens
from derangekit import settings as settings_module
from derangekit import suites
from derangekit import tables
from derangekit.collections import Record
from derangekit.derangements import derangement_classes
from derangekit.errors import CapExceededError
from derangekit.errors import CatalogError
from derangekit.errors import CatalogMismatchError
from derangekit.errors import DegreeMismatchError
from derangekit.errors import MalformedPermutationError
from derangekit.errors import MembershipError
from derangekit.errors import VerificationError
from derangekit.perm import format_cycles


__author__ = "yesudeep@google.com (Yesudeep Mangalapilly)"


__all__ = [
    "EXIT_CAP",
    "EXIT_INPUT",
    "EXIT_MISMATCH",
    "EXIT_OK",
    "build_parser",
    "main",
    ]


LOG = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2
EXIT_CAP = 3


def _emit(obj, config):
  print(codec.render(obj, config.output_format))


def _cmd_analyze(args, config):
  group = catalog.resolve_group_ref(args.group, config.data_dir, config.tier)
  sub = None
  if args.sub:
    sub = catalog.resolve_sub_ref(args.sub, group, config.data_dir,
                                  config.tier)
  _emit(derangement_classes(group, sub), config)
  return EXIT_OK


def _cmd_table(args, config):
  report = tables.regenerate(args.table_id, config.data_dir, config.tier,
                             config.workers, slow=not args.fast)
  _emit(report, config)
  if report.mismatches:
    for label, expected, actual in report.mismatches:
      LOG.error("%s: expected %s, got %s", label, expected, actual)
    return EXIT_MISMATCH
  return EXIT_OK


def _cmd_verify(args, config):
  report = suites.run_suite(args.suite, config.data_dir, config.tier,
                            config.workers)
  if config.output_format == "text":
    report = report.project("suite", "checked", "skipped")
  _emit(report, config)
  return EXIT_OK


def _cmd_catalog_list(args, config):
  names = catalog.catalog_list(config.data_dir)
  _emit(Record(entries=[Record(name=name) for name in names]), config)
  return EXIT_OK


def _cmd_catalog_validate(args, config):
  names = args.names or None
  results = tables.fan_out(_validate_one,
                           [(name, config.data_dir, config.tier)
                            for name in names or
                            catalog.catalog_list(config.data_dir)],
                           config.workers)
  _emit(Record(results=results), config)
  return EXIT_OK


def _validate_one(job):
  name, root, tier = job
  return catalog.catalog_validate_all(root, tier, [name])[0]


def _cmd_catalog_show(args, config):
  entry = catalog.catalog_entry(args.name, config.data_dir, config.tier)
  _emit(Record(name=entry.name, path=entry.path, meta=dict(entry.meta),
               subs=list(entry.subs)), config)
  return EXIT_OK


def _resolve_pair(args, config):
  group = catalog.resolve_group_ref(args.group, config.data_dir, config.tier)
  sub = None
  if getattr(args, "sub", None):
    sub = catalog.resolve_sub_ref(args.sub, group, config.data_dir,
                                  config.tier)
  return group, sub


def _cmd_chars_table(args, config):
  group, _ = _resolve_pair(args, config)
  _emit(chars.character_table_json(chars.character_table(group)), config)
  return EXIT_OK


def _cmd_chars_induce(args, config):
  group, sub = _resolve_pair(args, config)
  if sub is None:
    raise CatalogError("chars induce needs --sub")
  big = chars.character_table(group)
  small = chars.character_table(sub)
  indices = [args.phi] if args.phi is not None else range(len(small))
  rows = []
  for index in indices:
    induced = chars.induce(small[index], sub, group)
    count, zeros = chars.vanishing_classes(induced)
    rows.append(Record(phi=index, phi_degree=small.degrees[index],
                       degree=induced[0].as_integer(),
                       norm=chars.inner_product(big, induced, induced),
                       vanishing=count, classes=zeros,
                       values=[value.render() for value in induced]))
  _emit(Record(group=group.name, sub=sub.name, rows=rows), config)
  return EXIT_OK


def _cmd_chars_vanish(args, config):
  group, _ = _resolve_pair(args, config)
  table = chars.character_table(group)
  reps = table.classes.reps
  rows = []
  for index, (row, degree) in enumerate(zip(table.characters, table.degrees)):
    count, zeros = chars.vanishing_classes(row)
    rows.append(Record(chi=index, degree=degree, vanishing=count,
                       classes=[format_cycles(reps[k]) for k in zeros]))
  _emit(Record(group=group.name, burnside=chars.burnside_check(table),
               mno=chars.mno_check(table), rows=rows), config)
  return EXIT_OK


def build_parser():
  parser = argparse.ArgumentParser(
      prog="derangekit",
      description="Derangements, kappa and characters of finite "
                  "permutation groups.")
  parser.add_argument("--version", action="version",
                      version="%(prog)s " + __version__)
  parser.add_argument("--format", dest="output_format", default="text",
                      choices=codec.FORMATS)
  parser.add_argument("--tier", default="core",
                      choices=settings_module.TIERS)
  parser.add_argument("--workers", type=int, default=1)
  parser.add_argument("--data-dir", dest="data_dir", default=None)
  parser.add_argument("-v", "--verbose", action="count", default=0)
  sub = parser.add_subparsers(dest="command")
  sub.required = True

  p_analyze = sub.add_parser("analyze", help="derangement classes of an "
                                             "action")
  p_analyze.add_argument("--group", required=True)
  p_analyze.add_argument("--sub")
  p_analyze.set_defaults(func=_cmd_analyze)

  p_table = sub.add_parser("table", help="regenerate a golden table")
  p_table.add_argument("table_id", choices=list(goldens.TABLES))
  p_table.add_argument("--fast", action="store_true",
                       help="skip rows marked slow")
  p_table.set_defaults(func=_cmd_table)

  p_verify = sub.add_parser("verify", help="run a property suite")
  p_verify.add_argument("suite", choices=list(suites.SUITES) + ["all"])
  p_verify.set_defaults(func=_cmd_verify)

  p_catalog = sub.add_parser("catalog", help="inspect the catalog")
  catalog_verbs = p_catalog.add_subparsers(dest="catalog_command")
  catalog_verbs.required = True
  catalog_verbs.add_parser("list").set_defaults(func=_cmd_catalog_list)
  p_validate = catalog_verbs.add_parser("validate")
  p_validate.add_argument("names", nargs="*")
  p_validate.set_defaults(func=_cmd_catalog_validate)
  p_show = catalog_verbs.add_parser("show")
  p_show.add_argument("name")
  p_show.set_defaults(func=_cmd_catalog_show)

  p_chars = sub.add_parser("chars", help="character tables")
  chars_verbs = p_chars.add_subparsers(dest="chars_command")
  chars_verbs.required = True
  p_ctable = chars_verbs.add_parser("table")
  p_ctable.add_argument("--group", required=True)
  p_ctable.set_defaults(func=_cmd_chars_table)
  p_induce = chars_verbs.add_parser("induce")
  p_induce.add_argument("--group", required=True)
  p_induce.add_argument("--sub", required=True)
  p_induce.add_argument("--phi", type=int)
  p_induce.set_defaults(func=_cmd_chars_induce)
  p_vanish = chars_verbs.add_parser("vanish")
  p_vanish.add_argument("--group", required=True)
  p_vanish.set_defaults(func=_cmd_chars_vanish)
  return parser


def _configure_logging(verbosity):
  level = logging.WARNING
  if verbosity == 1:
    level = logging.INFO
  elif verbosity >= 2:
    level = logging.DEBUG
  logging.basicConfig(level=level, stream=sys.stderr,
                      format="%(levelname)s %(name)s: %(message)s")


def main(argv=None):
  """Runs the command line; returns the exit code."""
  args = build_parser().parse_args(argv)
  _configure_logging(args.verbose)
  try:
    config = settings_module.settings_from_environ(
        tier=args.tier, data_dir=args.data_dir, workers=args.workers,
        output_format=args.output_format)
    return args.func(args, config)
  except VerificationError as e:
    LOG.error("%s", e)
    print(codec.json_encode({"counterexample": e.counterexample}))
    return EXIT_MISMATCH
  except CatalogMismatchError as e:
    LOG.error("%s", e)
    print(codec.json_encode({"diff": [list(cell) for cell in e.diff]}))
    return EXIT_MISMATCH
  except CapExceededError as e:
    LOG.error("%s", e)
    return EXIT_CAP
  except (CatalogError, MembershipError, MalformedPermutationError,
          DegreeMismatchError, OSError) as e:
    LOG.error("%s", e)
    return EXIT_INPUT


if __name__ == "__main__":
  sys.exit(main())
