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

""":synopsis: The on-disk catalog of named groups and subgroups.
:module: derangekit.catalog

Every entry is a directory ``<data>/<name>/`` holding:

``group.gens``
    First line names the kind:

    * ``perm <degree>`` followed by one generator per line in 1-based cycle
      notation;
    * ``mat <p> <k> <dim>`` followed by ``dim x dim`` matrices of field
      encodings, separated by blank lines; the entry is the affine group of
      the matrices;
    * ``build <constructor> <args...>`` naming a formula builder;
    * ``coset <entry> <subgroup>``: the action of another entry on the cosets
      of one of its subgroups.

``sub_<name>.gens``
    Either ``perm <degree>`` with generators, or ``recipe <name> <args...>``
    deriving the subgroup from the parent when the entry is loaded.

``meta.txt``
    ``key = value`` lines with the expected metadata. The data is never
    trusted: :func:`catalog_entry` recomputes every field the first time an
    entry is loaded and refuses entries that disagree.

The data directory is, in order: the explicit argument, the
``DERANGEKIT_DATA`` environment variable, the packaged ``data`` directory.

Loading and validation
----------------------
.. autoclass:: CatalogEntry
   :members:
.. autofunction:: catalog_list
.. autofunction:: catalog_load
.. autofunction:: catalog_entry
.. autofunction:: catalog_validate
.. autofunction:: catalog_validate_all
.. autofunction:: entry_tier
.. autofunction:: needs_extended

References
----------
.. autofunction:: resolve_group_ref
.. autofunction:: resolve_sub_ref
"""

from __future__ import absolute_import
from __future__ import division

import collections
import functools
import itertools
import logging
import os

import numpy as np

from derangekit import constructors
from derangekit import derangements
from derangekit import hering
from derangekit import settings
from derangekit._chain import StabilizerChain
from derangekit.collections import Record
from derangekit.engine import ActionStructure
from derangekit.engine import PermGroup
from derangekit.engine import coset_action
from derangekit.errors import CatalogError
from derangekit.errors import CatalogMismatchError
from derangekit.field import field_build
from derangekit.perm import parse_cycles


__author__ = "yesudeep@google.com (Yesudeep Mangalapilly)"


__all__ = [
    "BUILDERS",
    "CatalogEntry",
    "RECIPES",
    "catalog_entry",
    "catalog_list",
    "catalog_load",
    "catalog_validate",
    "catalog_validate_all",
    "data_dir",
    "entry_tier",
    "needs_extended",
    "parse_meta",
    "resolve_group_ref",
    "resolve_sub_ref",
    ]


LOG = logging.getLogger(__name__)

GROUP_FILE = "group.gens"
META_FILE = "meta.txt"
SUB_PREFIX = "sub_"
SUB_SUFFIX = ".gens"


BUILDERS = {
    "symmetric": constructors.symmetric,
    "alternating": constructors.alternating,
    "cyclic": constructors.cyclic,
    "dihedral": constructors.dihedral,
    "heisenberg": constructors.heisenberg,
    "agl1": constructors.agl1,
    "frobenius_half": constructors.frobenius_half,
    "gammaL1": constructors.gammaL1,
    "gl1_ext2": constructors.gl1_ext2,
    "agl": constructors.affine_general_linear,
    "asl": constructors.affine_special_linear,
    "asp": constructors.affine_symplectic,
    "sl2_affine_char2": constructors.sl2_affine_char2,
    "psl2": constructors.psl2,
    "pgl2": constructors.pgl2,
    "pgammal2": constructors.pgammal2,
    "m10": constructors.m10,
    "psl3": constructors.psl3_projective,
    "suzuki": constructors.suzuki_ovoid,
    "table2": hering.table2_group,
    "hering": hering.hering_group,
    }


def data_dir(explicit=None):
  """The catalog directory in force."""
  return settings.settings_from_environ(data_dir=explicit).data_dir


def _coerce(token):
  lowered = token.lower()
  if lowered in ("true", "false"):
    return lowered == "true"
  try:
    return int(token)
  except ValueError:
    return token


def parse_meta(text):
  """
  Parses ``key = value`` lines; ``#`` starts a comment. Integers and
  ``true``/``false`` are converted; other values stay strings.

  :returns:
      :class:`collections.OrderedDict` in file order.
  """
  meta = collections.OrderedDict()
  for number, line in enumerate(text.splitlines(), 1):
    line = line.split("#", 1)[0].strip()
    if not line:
      continue
    if "=" not in line:
      raise CatalogError("line %d of metadata is not 'key = value': %r"
                         % (number, line))
    key, value = [part.strip() for part in line.split("=", 1)]
    meta[key] = _coerce(value)
  return meta


def _read(path):
  try:
    with open(path) as handle:
      return handle.read()
  except IOError as exc:
    raise CatalogError("cannot read %s: %s" % (path, exc))


def _header(text, path):
  lines = text.splitlines()
  if not lines or not lines[0].strip():
    raise CatalogError("%s is empty" % path)
  return lines[0].split(), lines[1:]


def _build(tokens, path):
  if not tokens:
    raise CatalogError("%s: build needs a constructor name" % path)
  try:
    builder = BUILDERS[tokens[0]]
  except KeyError:
    raise CatalogError("%s: unknown constructor %r" % (path, tokens[0]))
  return builder(*[_coerce(token) for token in tokens[1:]])


def _perm_generators(lines, degree, path):
  gens = []
  for line in lines:
    line = line.strip()
    if line and not line.startswith("#"):
      gens.append(parse_cycles(line, degree))
  if not gens:
    LOG.debug("%s lists no generators; the group is trivial", path)
  return gens


def _matrices(lines, dim, path):
  blocks, current = [], []
  for line in lines + [""]:
    if line.strip():
      current.append([int(x) for x in line.split()])
    elif current:
      if len(current) != dim or any(len(row) != dim for row in current):
        raise CatalogError("%s: matrix is not %d x %d" % (path, dim, dim))
      blocks.append(current)
      current = []
  return blocks


def _apply_tier(group, tier):
  cap = settings.element_cap(tier)
  for target in (group, getattr(group, "linear_part", None)):
    if target is not None:
      target.tier = tier
      target.cap = cap
  return group


def _load_group_text(text, path, root, tier):
  tokens, rest = _header(text, path)
  kind = tokens[0]
  if kind == "perm":
    degree = int(tokens[1])
    return PermGroup(degree, _perm_generators(rest, degree, path), tier=tier)
  if kind == "mat":
    prime, degree, dim = [int(x) for x in tokens[1:4]]
    field = field_build(prime, degree)
    gen_set = constructors.matrix_gen_set(field, _matrices(rest, dim, path))
    return constructors.affine_group(field, gen_set, tier=tier)
  if kind == "build":
    return _build(tokens[1:], path)
  if kind == "coset":
    if len(tokens) != 3:
      raise CatalogError("%s: coset needs an entry and a subgroup" % path)
    parent = catalog_entry(tokens[1], root, tier)
    return coset_action(parent.group, parent.sub(tokens[2])).image
  raise CatalogError("%s: unknown kind %r" % (path, kind))


# Subgroup recipes. Points in arguments are 1-based.

def _points(args):
  return [int(arg) - 1 for arg in args]


def _recipe_point_stabilizer(group, subs, args):
  return group.point_stabilizer(_points(args)[0] if args else 0)


def _recipe_set_stabilizer(group, subs, args):
  return group.set_stabilizer(_points(args))


def _recipe_set_search(group, subs, args):
  size, order = int(args[0]), int(args[1])
  for subset in itertools.combinations(range(group.degree), size):
    found = group.set_stabilizer(subset)
    if found.order() == order:
      return found
  raise CatalogError("no %d-set has a stabilizer of order %d" % (size, order))


def _recipe_partition_stabilizer(group, subs, args):
  blocks = [[int(ch) - 1 for ch in block.split(",")] if "," in block
            else [int(ch) - 1 for ch in block]
            for block in args[0].split("/")]
  return group.partition_stabilizer(blocks)


def _recipe_sylow(group, subs, args):
  return group.sylow(int(args[0]))


def _recipe_sylow_normalizer(group, subs, args):
  return group.normalizer(group.sylow(int(args[0])))


def _recipe_pair_search(group, subs, args):
  """``<x, y>`` of the given order, ``x`` a class representative of order
  ``a`` and ``y`` the first element of order ``b`` in store order."""
  target, order_a, order_b = int(args[0]), int(args[1]), int(args[2])
  transitive = len(args) > 3 and args[3] == "transitive"
  table = group.classes
  element_orders = np.asarray(table.orders)[table.class_of]
  candidates = np.flatnonzero(element_orders == order_b)
  for rep, order in zip(table.reps, table.orders):
    if order != order_a:
      continue
    for index in candidates:
      other = group.store.perm(index)
      chain = StabilizerChain(group.degree, [rep.images, other.images])
      if chain.order() != target:
        continue
      found = group.subgroup([rep, other])
      if transitive and not found.is_transitive():
        continue
      return found
  raise CatalogError("no pair of orders %d, %d generates order %d"
                     % (order_a, order_b, target))


def _equal_partitions(points, size):
  """Partitions of ``points`` into blocks of ``size``, each block holding the
  smallest point not yet placed."""
  if not points:
    yield []
    return
  first, rest = points[0], points[1:]
  for others in itertools.combinations(rest, size - 1):
    block = (first,) + others
    remaining = [p for p in rest if p not in others]
    for tail in _equal_partitions(remaining, size):
      yield [block] + tail


def _recipe_partition_search(group, subs, args):
  """Stabilizer of the first partition into blocks of ``size`` whose
  stabilizer has the given order."""
  size, order = int(args[0]), int(args[1])
  transitive = len(args) > 2 and args[2] == "transitive"
  if size < 1 or group.degree % size:
    raise CatalogError("cannot split %d points into blocks of %d"
                       % (group.degree, size))
  for blocks in _equal_partitions(list(range(group.degree)), size):
    mask = group.partition_mask(blocks)
    if int(mask.sum()) != order:
      continue
    found = group.subgroup_from_mask(mask)
    if transitive and not found.is_transitive():
      continue
    return found
  raise CatalogError("no partition into %d-sets has a stabilizer of order %d"
                     % (size, order))


def _recipe_cyclic_normalizer(group, subs, args):
  """Normalizer of ``<x>`` for the first class representative of the given
  order moving all but ``fixed`` points."""
  order, fixed = int(args[0]), int(args[1])
  table = group.classes
  for rep, rep_order in zip(table.reps, table.orders):
    if rep_order == order and len(rep.fixed_points()) == fixed:
      return group.normalizer(group.subgroup([rep]))
  raise CatalogError("no class of order %d with %d fixed points"
                     % (order, fixed))


def _named(subs, name):
  try:
    return subs[name]
  except KeyError:
    raise CatalogError("recipe refers to unknown subgroup %r" % (name,))


def _recipe_conjugate(group, subs, args):
  element = parse_cycles("".join(args[1:]), group.degree)
  return group.conjugate(_named(subs, args[0]), element)


def _recipe_derived(group, subs, args):
  source = _named(subs, args[0]) if args else group
  return source.derived_subgroup()


def _recipe_alternating_part(group, subs, args):
  source = _named(subs, args[0]) if args else group
  rows = source.store.elements
  even = np.array([source.store.perm(i).sign() == 1
                   for i in range(source.store.order)], dtype=bool)
  mask = group.store.mask_of(rows[even])
  return group.subgroup_from_mask(mask)


def _recipe_build(group, subs, args):
  built = _build(args, "recipe")
  return group.subgroup(built.gens)


RECIPES = {
    "point_stabilizer": _recipe_point_stabilizer,
    "set_stabilizer": _recipe_set_stabilizer,
    "set_search": _recipe_set_search,
    "partition_stabilizer": _recipe_partition_stabilizer,
    "partition_search": _recipe_partition_search,
    "cyclic_normalizer": _recipe_cyclic_normalizer,
    "sylow": _recipe_sylow,
    "sylow_normalizer": _recipe_sylow_normalizer,
    "pair_search": _recipe_pair_search,
    "conjugate": _recipe_conjugate,
    "derived": _recipe_derived,
    "alternating_part": _recipe_alternating_part,
    "build": _recipe_build,
    }


def _load_sub_text(text, path, group, subs):
  tokens, rest = _header(text, path)
  if tokens[0] == "perm":
    degree = int(tokens[1])
    if degree != group.degree:
      raise CatalogError("%s: subgroup of degree %d in a group of degree %d"
                         % (path, degree, group.degree))
    return group.subgroup(_perm_generators(rest, degree, path))
  if tokens[0] == "recipe":
    try:
      recipe = RECIPES[tokens[1]]
    except (IndexError, KeyError):
      raise CatalogError("%s: unknown recipe %r" % (path, tokens[1:2]))
    LOG.debug("%s: recipe %s %s", path, tokens[1], " ".join(tokens[2:]))
    return recipe(group, subs, tokens[2:])
  raise CatalogError("%s: unknown subgroup kind %r" % (path, tokens[0]))


class CatalogEntry(object):
  """
  A loaded catalog entry.

  :attr name: Entry name, also the group's report label.
  :attr group: The :class:`~derangekit.engine.PermGroup`.
  :attr subs: Ordered mapping of subgroup name to subgroup.
  :attr meta: Ordered mapping of expected metadata.
  :attr validation: The validation record, set once the entry has passed.
  """

  def __init__(self, name, group, subs, meta, path):
    self.name = name
    self.group = group
    self.subs = subs
    self.meta = meta
    self.path = path
    self.validation = None

  def __repr__(self):
    return "<CatalogEntry %s subs=%s>" % (self.name, list(self.subs))

  def sub(self, name):
    try:
      return self.subs[name]
    except KeyError:
      raise CatalogError("entry %s has no subgroup %r" % (self.name, name))

  def maximal_subgroups(self):
    """The subgroups listed under ``maximal``, in listed order."""
    names = self.meta.get("maximal")
    if not names:
      return []
    return [(name, self.sub(name)) for name in _split_list(names)]

  @property
  def tier(self):
    return self.meta.get("tier", "core")


def _split_list(value):
  return [part.strip() for part in str(value).split(",") if part.strip()]


def _sub_files(path):
  names = []
  for file_name in sorted(os.listdir(path)):
    if file_name.startswith(SUB_PREFIX) and file_name.endswith(SUB_SUFFIX):
      names.append(file_name[len(SUB_PREFIX):-len(SUB_SUFFIX)])
  return names


def _sub_order(path, meta):
  """Subgroup files listed under ``subs`` first, in that order, so that
  recipes may refer to earlier subgroups."""
  names = _sub_files(path)
  listed = _split_list(meta.get("subs", ""))
  return [n for n in listed if n in names] + [n for n in names
                                              if n not in listed]


@functools.lru_cache(maxsize=None)
def _load(root, name, tier):
  path = os.path.join(root, name)
  if not os.path.isdir(path):
    raise CatalogError("no catalog entry %r under %s" % (name, root))
  meta_path = os.path.join(path, META_FILE)
  meta = (parse_meta(_read(meta_path)) if os.path.exists(meta_path)
          else collections.OrderedDict())
  group_path = os.path.join(path, GROUP_FILE)
  group = _apply_tier(_load_group_text(_read(group_path), group_path, root,
                                       tier), tier)
  group.name = name
  subs = collections.OrderedDict()
  for sub_name in _sub_order(path, meta):
    sub_path = os.path.join(path, SUB_PREFIX + sub_name + SUB_SUFFIX)
    sub = _load_sub_text(_read(sub_path), sub_path, group, subs)
    sub.name = sub_name
    subs[sub_name] = sub
  LOG.debug("loaded %s: degree %d, %d subgroups", name, group.degree,
            len(subs))
  return CatalogEntry(name, group, subs, meta, path)


@functools.lru_cache(maxsize=None)
def _validated(root, name, tier):
  entry = _load(root, name, tier)
  entry.validation = _validate_entry(entry)
  return entry


def catalog_entry(name, root=None, tier="core"):
  """
  Loads and validates (once per directory and tier) the named
  :class:`CatalogEntry`.

  :raises CatalogMismatchError:
      When the recomputed metadata differs from ``meta.txt``. A failed
      entry is never cached.
  """
  return _validated(os.path.abspath(data_dir(root)), name, tier)


def catalog_load(name, root=None, tier="core"):
  """
  :returns:
      ``(group, subgroups)`` with ``subgroups`` an ordered name mapping.
  """
  entry = catalog_entry(name, root, tier)
  return entry.group, entry.subs


def catalog_list(root=None):
  """Sorted names of the entries under the data directory."""
  root = data_dir(root)
  if not os.path.isdir(root):
    raise CatalogError("catalog directory %s does not exist" % root)
  return sorted(name for name in os.listdir(root)
                if os.path.exists(os.path.join(root, name, GROUP_FILE)))


def entry_tier(name, root=None):
  """The ``tier`` named in an entry's metadata, read without loading the
  group."""
  meta_path = os.path.join(data_dir(root), name, META_FILE)
  if not os.path.exists(meta_path):
    return "core"
  return parse_meta(_read(meta_path)).get("tier", "core")


def needs_extended(name, root=None, tier="core"):
  """True when ``name`` is an extended entry and ``tier`` is core."""
  return tier == "core" and entry_tier(name, root) == "extended"


# Validation.

def transitivity_degree(group, limit=5):
  """Largest ``t <= limit`` with ``group`` t-transitive on its points."""
  current = group
  for step in range(min(limit, group.degree)):
    if len(current.orbit(step)) != group.degree - step:
      return step
    current = current.point_stabilizer(step)
  return min(limit, group.degree)


def _check(diff, field, expected, actual):
  if expected != actual:
    diff.append((field, expected, actual))
  else:
    LOG.debug("%s = %r", field, actual)


def _sub_checks(entry, diff):
  group, meta = entry.group, entry.meta
  for sub_name, sub in entry.subs.items():
    order_key = "sub.%s.order" % sub_name
    if order_key in meta:
      _check(diff, order_key, meta[order_key], sub.order())
    kappa_key = "expected_kappa.%s" % sub_name
    elusive_key = "elusive.%s" % sub_name
    if kappa_key in meta or elusive_key in meta:
      report = derangements.derangement_classes(group, sub, with_flags=False)
      if kappa_key in meta:
        _check(diff, kappa_key, meta[kappa_key], report.kappa)
      if elusive_key in meta:
        _check(diff, elusive_key, meta[elusive_key], report.flags.elusive)


def _validate_entry(entry):
  name, group, meta = entry.name, entry.group, entry.meta
  diff = []
  if "degree" in meta:
    _check(diff, "degree", meta["degree"], group.degree)
  if "order" in meta:
    _check(diff, "order", meta["order"], group.order())
  if "transitive" in meta:
    _check(diff, "transitive", meta["transitive"], group.is_transitive())
  if "primitive" in meta:
    _check(diff, "primitive", meta["primitive"],
           ActionStructure(group).is_primitive)
  if "transitivity" in meta:
    _check(diff, "transitivity", meta["transitivity"],
           transitivity_degree(group, int(meta["transitivity"]) + 1))
  if "expected_kappa" in meta or "elusive" in meta:
    report = derangements.derangement_classes(group, with_flags=False)
    if report.kappa < 1:
      diff.append(("jordan", ">= 1", report.kappa))
    if "expected_kappa" in meta:
      _check(diff, "expected_kappa", meta["expected_kappa"], report.kappa)
    if "elusive" in meta:
      _check(diff, "elusive", meta["elusive"], report.flags.elusive)
  _sub_checks(entry, diff)
  if "phi" in meta:
    value, _ = derangements.phi_min(group, [sub for _, sub
                                            in entry.maximal_subgroups()])
    _check(diff, "phi", meta["phi"], value)
  if diff:
    raise CatalogMismatchError(name, diff)
  skipped = ("alias", "tier", "subs", "maximal", "affine")
  checked = sum(1 for key in meta if key.split(".")[0] not in skipped)
  LOG.info("catalog entry %s validated (%d fields)", name, checked)
  return Record(name=name, status="ok", checked=checked)


def catalog_validate(name, root=None, tier="core"):
  """
  Recomputes every metadata field of an entry.

  :returns:
      :class:`~derangekit.collections.Record` with ``name``, ``status`` and
      the number of ``checked`` fields.
  :raises CatalogMismatchError:
      With the list of ``(field, expected, actual)`` differences.
  """
  return catalog_entry(name, root, tier).validation


def catalog_validate_all(root=None, tier="core", names=None):
  """
  Validates every entry. Entries marked ``tier = extended`` are skipped in
  the core tier.

  :raises CatalogMismatchError:
      On the first entry that fails.
  """
  results = []
  for name in names or catalog_list(root):
    if needs_extended(name, root, tier):
      LOG.warning("skipping %s: needs the extended tier", name)
      results.append(Record(name=name, status="skipped", checked=0))
      continue
    results.append(catalog_validate(name, root, tier))
  return results


# References used on the command line.

def resolve_group_ref(ref, root=None, tier="core"):
  """
  ``catalog:<name>`` or ``file:<path>``.

  :returns:
      :class:`~derangekit.engine.PermGroup`.
  """
  scheme, _, rest = ref.partition(":")
  if scheme == "catalog":
    return catalog_entry(rest.split("/")[0], root, tier).group
  if scheme == "file":
    group = _apply_tier(_load_group_text(_read(rest), rest, data_dir(root),
                                         tier), tier)
    group.name = group.name or os.path.basename(rest)
    return group
  raise CatalogError("reference %r must start with catalog: or file:" % ref)


def resolve_sub_ref(ref, group, root=None, tier="core"):
  """``catalog:<name>/<sub>`` or ``file:<path>``; ``None`` means the point
  stabilizer."""
  if ref is None:
    return None
  scheme, _, rest = ref.partition(":")
  if scheme == "catalog":
    name, _, sub_name = rest.partition("/")
    if not sub_name:
      raise CatalogError("subgroup reference %r needs <entry>/<sub>" % ref)
    sub = catalog_entry(name, root, tier).sub(sub_name)
    if sub.degree != group.degree or not group.is_subgroup(sub):
      raise CatalogError("%s is not a subgroup of %s" % (ref, group.name))
    return sub
  if scheme == "file":
    sub = _load_sub_text(_read(rest), rest, group, collections.OrderedDict())
    sub.name = os.path.basename(rest)
    return sub
  raise CatalogError("reference %r must start with catalog: or file:" % ref)
