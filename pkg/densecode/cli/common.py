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
"""Plumbing shared by the densecode-* console scripts."""
import io
import os
import sys

import daiquiri
from oslo_config import cfg

from densecode import codec
from densecode import exceptions
from densecode import json
from densecode import labels
from densecode import opts
from densecode import pauli
from densecode import selector
from densecode import service
from densecode import state
from densecode import subgroup


LOG = daiquiri.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CONSTRAINT = 3
EXIT_INVARIANT = 4


class UsageError(exceptions.DenseCodeError):
    pass


class ConstraintFailure(exceptions.DenseCodeError):
    """A state or position set violates a constraint or condition."""


STATE_OPT = cfg.StrOpt(
    "state", required=True,
    help="Builtin state name (%s) or path of a file holding one signed "
    "bitstring per line, e.g. +000 and -111."
    % ", ".join(state.BUILTIN_NAMES))

POSITIONS_OPT = cfg.StrOpt(
    "positions",
    help="Comma separated 1-based operated qubits, e.g. 1,2.")

SUBGROUP_OPT = cfg.StrOpt(
    "subgroup",
    help="Subgroup display name from the label file (e.g. G_2^12), "
    "comma separated generators (e.g. XI,IZ,ZX) or a subgroup file.")

FORMAT_OPT = cfg.StrOpt(
    "format", choices=list(codec.FORMATS),
    help="Output format, defaults to [output]/format.")

ORDERING_OPT = cfg.StrOpt(
    "ordering",
    choices=list(opts.ORDERINGS),
    help="Table row order, defaults to [output]/ordering.")

OUT_OPT = cfg.StrOpt(
    "out", metavar="PATH",
    help="Write the result to this file instead of stdout.")


def run(action, args, cli_opts):
    """Parse the command line, run ``action(conf)`` and map errors.

    Returns the process exit code.
    """
    conf = cfg.ConfigOpts()
    conf.register_cli_opts(cli_opts)
    try:
        conf = service.prepare_service(args=args, conf=conf, log_to_std=True)
    except cfg.Error as e:
        sys.stderr.write("%s\n" % e)
        return EXIT_USAGE
    try:
        result = action(conf)
    except exceptions.InvariantViolation as e:
        LOG.error("%s", e)
        return EXIT_INVARIANT
    except (ConstraintFailure, selector.VerificationFailed) as e:
        LOG.error("%s", e)
        return EXIT_CONSTRAINT
    except exceptions.DenseCodeError as e:
        LOG.error("%s", e)
        return EXIT_USAGE
    return EXIT_OK if result is None else result


def output_format(conf):
    return conf.format or conf.output.format


def write(conf, text):
    if conf.out:
        with io.open(conf.out, "w", encoding="utf-8") as f:
            f.write(text)
        LOG.info("Wrote %s", conf.out)
    else:
        sys.stdout.write(text)
        sys.stdout.flush()


def dump_json(obj):
    return json.dumps(obj, indent=2) + "\n"


def load_state(source):
    """Return (name, state) for a builtin name or a state file."""
    if os.path.isfile(source):
        with io.open(source, encoding="utf-8") as f:
            return os.path.basename(source), state.parse_state(f.read())
    return source, state.builtin_state(source)


def load_subgroup(value, label_set):
    if os.path.isfile(value):
        with io.open(value, encoding="utf-8") as f:
            content = f.read()
        if value.endswith(".json"):
            return subgroup.Subgroup.from_dict(json.loads(content))
        return subgroup.Subgroup.from_text(content)
    if value in label_set.subgroups:
        return label_set.subgroup(value)
    try:
        generators = [pauli.parse_op(g.strip()) for g in value.split(",")]
    except pauli.ParseError:
        raise labels.UnknownLabel("subgroup", value)
    return subgroup.Subgroup.from_generators(
        generators, provenance={"method": subgroup.EXPLICIT})


def positions_for(conf, s, default=None):
    """Position set from --positions or ``default``, else the first valid."""
    if conf.positions or default:
        if conf.positions:
            positions = state.PositionSet.parse(conf.positions, s.t)
        else:
            positions = state.PositionSet(default, s.t)
        if not state.projections_distinct(s, positions):
            raise ConstraintFailure(
                "Condition 2 violated: the items of the state are not "
                "distinct on qubits %s" % (positions,))
        return positions
    valid = state.valid_position_sets(s)
    if not valid:
        raise ConstraintFailure(
            "Constraint 2 violated: no choice of operated qubits keeps the "
            "items of the state distinct")
    LOG.info("Using qubits %s", valid[0])
    return valid[0]
