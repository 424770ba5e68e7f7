# -*- encoding: utf-8 -*-
#
# Licensed under the Apache License, Version 2.0 (the "License"); you may
# not use this file except in compliance with the License. You may obtain
# a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
# WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
# License for the specific language governing permissions and limitations
# under the License.
"""Display names for subgroups and published table row orders.

Names are aliases only: every alias resolves to the canonical key of the
subgroup spanned by its generators, so two aliases may name one subgroup.
"""
import collections
import os

import cachetools
import daiquiri
import voluptuous

from densecode import exceptions
from densecode import json
from densecode import pauli
from densecode import subgroup


LOG = daiquiri.getLogger(__name__)

ENV_VAR = "DENSECODE_LABELS"

_OPERATOR = voluptuous.All(str, voluptuous.Length(min=1))

SCHEMA = voluptuous.Schema({
    voluptuous.Required("subgroups"): {str: [_OPERATOR]},
    voluptuous.Optional("orderings", default={}): {str: [_OPERATOR]},
    voluptuous.Optional("tables", default={}): {
        str: {
            voluptuous.Optional("state"): str,
            voluptuous.Optional("positions"): [int],
            voluptuous.Required("subgroup"): str,
            voluptuous.Required("ordering"): str,
        },
    },
})


class UnknownLabel(exceptions.DenseCodeError, KeyError):
    def __init__(self, kind, name):
        super(UnknownLabel, self).__init__(
            "Unknown %s %r" % (kind, name))
        self.kind = kind
        self.name = name

    def __str__(self):
        return self.args[0]


class InvalidLabels(exceptions.DenseCodeError, ValueError):
    def __init__(self, path, reason):
        super(InvalidLabels, self).__init__(
            "Invalid label file %s: %s" % (path, reason))
        self.path = path
        self.reason = reason


class Labels(object):

    def __init__(self, data, source="<memory>"):
        try:
            data = SCHEMA(data)
            self.subgroups = collections.OrderedDict(
                (alias, subgroup.Subgroup.from_generators(
                    [pauli.parse_op(g) for g in generators],
                    provenance={"method": subgroup.EXPLICIT,
                                "name": alias}))
                for alias, generators in sorted(data["subgroups"].items()))
            self.orderings = {
                name: [pauli.parse_op(op) for op in ops]
                for name, ops in data["orderings"].items()}
        except (voluptuous.Error, pauli.ParseError, pauli.ArityError) as e:
            raise InvalidLabels(source, e)
        self.tables = data["tables"]
        self.source = source
        self._by_key = collections.defaultdict(list)
        for alias, group in self.subgroups.items():
            self._by_key[group.key].append(alias)

    def aliases_for(self, group):
        return list(self._by_key.get(group.key, ()))

    def name(self, group):
        aliases = self.aliases_for(group)
        if aliases:
            return " = ".join(aliases)
        return group.format_key()

    def subgroup(self, alias):
        try:
            return self.subgroups[alias]
        except KeyError:
            raise UnknownLabel("subgroup", alias)

    def ordering(self, name):
        try:
            return list(self.orderings[name])
        except KeyError:
            raise UnknownLabel("ordering", name)

    def ordering_for(self, group):
        """First published ordering listing exactly the group's elements."""
        for name in sorted(self.orderings):
            ops = self.orderings[name]
            if (len(ops) == group.order
                    and set(op.vector for op in ops if op.n == group.n)
                    == group.vectors):
                return name, list(ops)
        return None, None

    def table(self, name):
        try:
            return dict(self.tables[name])
        except KeyError:
            raise UnknownLabel("table", name)


def default_path():
    return os.path.join(os.path.dirname(__file__), "data", "labels.json")


@cachetools.cached(cachetools.LRUCache(maxsize=8))
def _load(path):
    LOG.debug("Loading labels from %s", path)
    try:
        with open(path, "r") as f:
            data = json.load(f)
    except (IOError, ValueError) as e:
        raise InvalidLabels(path, e)
    return Labels(data, source=path)


def load_labels(path=None):
    """Load aliases from ``path``, $DENSECODE_LABELS or the shipped file."""
    return _load(path or os.environ.get(ENV_VAR) or default_path())
