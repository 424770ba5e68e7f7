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
import copy

import daiquiri
from oslo_config import cfg

from densecode.cli import common
from densecode import codec
from densecode import exceptions
from densecode import opts
from densecode import pauli
from densecode import service
from densecode import state


LOG = daiquiri.getLogger(__name__)

TABLE_OPT = cfg.StrOpt(
    "table",
    help="Published table from the label file (e.g. table7); supplies "
    "the state, qubits, subgroup and row order unless given explicitly.")


def _optional_state_opt():
    state_opt = copy.copy(common.STATE_OPT)
    state_opt.required = False
    return state_opt


def _ordering(conf, label_set, h, entry):
    ordering = conf.ordering or (
        opts.ORDERING_PAPER if entry else conf.output.ordering)
    if ordering == opts.ORDERING_CANONICAL:
        return None
    if entry.get("ordering"):
        return label_set.ordering(entry["ordering"])
    name, operators = label_set.ordering_for(h)
    if name is None:
        LOG.warning("No published ordering lists %s, using the canonical "
                    "one", h.format_key())
    else:
        LOG.info("Using ordering %s", name)
    return operators


def _resolve(conf, label_set):
    """Return (table entry, subgroup, ordering) from the command line."""
    entry = label_set.table(conf.table) if conf.table else {}
    name = conf.subgroup or entry.get("subgroup")
    if not name:
        raise common.UsageError("--subgroup or --table is required")
    h = common.load_subgroup(name, label_set)
    return entry, h, _ordering(conf, label_set, h, entry)


def _load_state(conf, entry):
    source = conf.state or entry.get("state")
    if not source:
        raise common.UsageError("--state or --table is required")
    s = common.load_state(source)[1]
    return s, common.positions_for(conf, s, entry.get("positions"))


def _table(conf):
    label_set = service.get_labels(conf)
    fmt = common.output_format(conf)
    entry, h, ordering = _resolve(conf, label_set)
    if conf.multiplication or (entry and "state" not in entry
                               and not conf.state):
        common.write(conf, codec.emit_multiplication_table(
            ordering or h, fmt))
        return
    s, positions = _load_state(conf, entry)
    if conf.unverified:
        rows = codec.tabulate(ordering or h.sorted_elements(), positions, s)
        common.write(conf, codec.emit_rows(rows, positions, fmt))
        return
    cb = codec.build_codebook(h, positions, s, ordering)
    common.write(conf, codec.emit_table(cb, fmt))


def table(args=None):
    """Print the dense-coding table of a subgroup acting on a state."""
    return common.run(_table, args, [
        _optional_state_opt(), common.SUBGROUP_OPT, common.POSITIONS_OPT,
        TABLE_OPT, common.ORDERING_OPT,
        cfg.BoolOpt("multiplication", default=False,
                    help="Print the group multiplication table instead."),
        cfg.BoolOpt("unverified", default=False,
                    help="Apply the operators even when the codewords are "
                    "not orthogonal."),
        common.FORMAT_OPT, common.OUT_OPT])


def _format_transcript(transcript, bits, received, fmt):
    if fmt == codec.FORMAT_JSON:
        return common.dump_json(dict(transcript.jsonify(),
                                     input=bits, output=received))
    rows = [(c.bits, c.index, pauli.format_op(c.operator,
                                              pauli.TENSOR_SEPARATOR),
             state.render(c.codeword), c.decoded)
            for c in transcript.chunks]
    header = ("bits", "index", "operator", "codeword", "decoded")
    if fmt == codec.FORMAT_CSV:
        return codec.to_csv([header] + rows)
    lines = ["| %s |" % " | ".join(header),
             "|%s" % ("---|" * len(header))]
    lines.extend("| %s |" % " | ".join(map(str, row)) for row in rows)
    lines.extend([
        "",
        "Sent %r, received %r: %d bit(s) in %d channel use(s), %d qubit(s) "
        "sent, %s bit(s) per qubit."
        % (bits, received, transcript.bits_delivered,
           transcript.channel_uses, transcript.qubits_sent,
           transcript.efficiency if transcript.efficiency is not None
           else "-")])
    return "\n".join(lines) + "\n"


def _simulate(conf):
    label_set = service.get_labels(conf)
    entry, h, ordering = _resolve(conf, label_set)
    s, positions = _load_state(conf, entry)
    cb = codec.build_codebook(h, positions, s, ordering)
    received, transcript = codec.simulate_roundtrip(cb, conf.bits)
    if received != conf.bits:
        raise exceptions.InvariantViolation(
            repr(cb), "sent %r but decoded %r" % (conf.bits, received))
    common.write(conf, _format_transcript(
        transcript, conf.bits, received, common.output_format(conf)))


def simulate(args=None):
    """Send a bitstring through a dense-coding codebook and back."""
    return common.run(_simulate, args, [
        _optional_state_opt(), common.SUBGROUP_OPT, common.POSITIONS_OPT,
        TABLE_OPT, common.ORDERING_OPT,
        cfg.StrOpt("bits", default="",
                   help="Message to send; its length must be a multiple "
                   "of the number of qubits of the state."),
        common.FORMAT_OPT, common.OUT_OPT])
