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
"""Dense-coding codebooks: encode indexes, decode states, print tables."""
import collections
import csv
import fractions
import io
import re

import daiquiri

from densecode import exceptions
from densecode import json
from densecode import pauli
from densecode import selector
from densecode import state
from densecode import utils


LOG = daiquiri.getLogger(__name__)

FORMAT_MARKDOWN = "md"
FORMAT_CSV = "csv"
FORMAT_JSON = "json"
FORMATS = (FORMAT_MARKDOWN, FORMAT_CSV, FORMAT_JSON)

_BITS = re.compile(r"[01]*")


class IndexOutOfRange(exceptions.DenseCodeError, IndexError):
    def __init__(self, index, size):
        super(IndexOutOfRange, self).__init__(
            "Message index %d is outside 0..%d" % (index, size - 1))
        self.index = index
        self.size = size


class NoMatch(exceptions.DenseCodeError):
    """Error raised when a received state is not a codeword."""

    def __init__(self, received):
        super(NoMatch, self).__init__(
            "Received state %s is not a codeword" % state.render(received))
        self.received = received


class Ambiguous(exceptions.DenseCodeError):
    def __init__(self, received, indexes):
        super(Ambiguous, self).__init__(
            "Received state %s matches codewords %s"
            % (state.render(received), ", ".join(map(str, indexes))))
        self.received = received
        self.indexes = indexes


class InvalidMessageLength(exceptions.DenseCodeError, ValueError):
    def __init__(self, length, t):
        super(InvalidMessageLength, self).__init__(
            "Message length %d is not a multiple of %d" % (length, t))
        self.length = length
        self.t = t


class InvalidMessage(exceptions.DenseCodeError, ValueError):
    def __init__(self, bits):
        super(InvalidMessage, self).__init__(
            "Message %r is not a bitstring" % bits)
        self.bits = bits


class InvalidOrdering(exceptions.DenseCodeError, ValueError):
    def __init__(self, reason):
        super(InvalidOrdering, self).__init__(
            "Invalid operator ordering: %s" % reason)
        self.reason = reason


class UnknownFormat(exceptions.DenseCodeError, ValueError):
    def __init__(self, fmt):
        super(UnknownFormat, self).__init__(
            "Unknown output format %r, expected one of %s"
            % (fmt, ", ".join(FORMATS)))
        self.format = fmt


Row = collections.namedtuple('Row', ['index', 'operator', 'state'])


class Codebook(object):
    """Operators U_0..U_{2^t-1} and the codewords U_i applied to a state.

    Built by :func:`build_codebook`, which checks orthogonality first.
    """

    def __init__(self, base, positions, operators, group=None):
        self.base = base
        self.positions = positions
        self.operators = tuple(operators)
        self.group = group
        self.codewords = tuple(state.apply(g, positions, base)
                               for g in self.operators)

    @property
    def t(self):
        return self.base.t

    def __len__(self):
        return len(self.operators)

    def rows(self):
        return [Row(i, g, phi) for i, (g, phi)
                in enumerate(zip(self.operators, self.codewords))]

    def __repr__(self):
        return "<%s t=%d qubits=%s size=%d>" % (
            self.__class__.__name__, self.t, self.positions, len(self))

    def jsonify(self):
        return _rows_to_dict(self.rows(), self.positions)


def build_codebook(h, positions, s, ordering=None):
    """Codebook for a verified (subgroup, qubits, state) triple.

    Without ``ordering`` the operators are sorted by symplectic vector, the
    identity first. An explicit ordering must list every element of ``h``
    once and start with the identity.
    """
    positions = state.PositionSet(positions, s.t)
    verification = selector.verify_orthogonal(h, positions, s)
    if not verification:
        raise selector.VerificationFailed(h, positions, verification.witness)
    if ordering is None:
        operators = h.sorted_elements()
    else:
        operators = list(ordering)
        if len(operators) != h.order or set(operators) != h.elements:
            raise InvalidOrdering(
                "%d operator(s) do not list the %d elements of %s"
                % (len(operators), h.order, h.format_key()))
        if not operators[0].is_identity():
            raise InvalidOrdering("U0 must be the identity, got %s"
                                  % operators[0])
    cb = Codebook(s, positions, operators, h)
    if len(cb) != 1 << s.t:
        raise exceptions.InvariantViolation(
            repr(cb), "holds %d operators for t=%d" % (len(cb), s.t))
    return cb


def encode(cb, index):
    if not 0 <= index < len(cb):
        raise IndexOutOfRange(index, len(cb))
    return cb.codewords[index]


def decode(cb, received):
    """Index of the codeword equal to ``received`` up to a global sign."""
    if received.t != cb.t:
        raise state.StateMismatch(cb.t, received.t)
    matches = [i for i, phi in enumerate(cb.codewords)
               if state.distinguishability(received, phi) == 1]
    if not matches:
        raise NoMatch(received)
    if len(matches) > 1:
        raise Ambiguous(received, matches)
    return matches[0]


Chunk = collections.namedtuple(
    'Chunk', ['bits', 'index', 'operator', 'codeword', 'decoded'])


class Transcript(object):

    def __init__(self, t, n, chunks):
        self.t = t
        self.n = n
        self.chunks = list(chunks)

    @property
    def channel_uses(self):
        return len(self.chunks)

    @property
    def qubits_sent(self):
        return self.channel_uses * self.n

    @property
    def bits_delivered(self):
        return self.channel_uses * self.t

    @property
    def efficiency(self):
        """Classical bits delivered per transmitted qubit."""
        if not self.qubits_sent:
            return None
        return fractions.Fraction(self.bits_delivered, self.qubits_sent)

    def jsonify(self):
        return {
            "chunks": [{"bits": c.bits, "index": c.index,
                        "operator": c.operator,
                        "codeword": state.render(c.codeword)}
                       for c in self.chunks],
            "qubits_sent": self.qubits_sent,
            "bits_delivered": self.bits_delivered,
            "efficiency": self.efficiency,
        }


def simulate_roundtrip(cb, bits):
    """Send a bitstring through the noiseless channel t bits at a time.

    Returns the decoded bitstring and the transcript of the exchange.
    """
    if not _BITS.fullmatch(bits):
        raise InvalidMessage(bits)
    if len(bits) % cb.t:
        raise InvalidMessageLength(len(bits), cb.t)
    chunks = []
    for group in utils.grouper(bits, cb.t):
        chunk = "".join(group)
        index = int(chunk, 2)
        codeword = encode(cb, index)
        decoded = decode(cb, codeword)
        chunks.append(Chunk(chunk, index, cb.operators[index], codeword,
                            format(decoded, "0%db" % cb.t)))
    transcript = Transcript(cb.t, len(cb.positions), chunks)
    LOG.debug("Sent %d bit(s) in %d channel use(s)",
              transcript.bits_delivered, transcript.channel_uses)
    return "".join(c.decoded for c in chunks), transcript


def tabulate(operators, positions, s):
    """Rows of U_i applied to ``s`` without any orthogonality check."""
    positions = state.PositionSet(positions, s.t)
    return [Row(i, g, state.apply(g, positions, s))
            for i, g in enumerate(operators)]


def _tensor(g):
    return pauli.format_op(g, pauli.TENSOR_SEPARATOR)


def _rows_to_dict(rows, positions):
    return {
        "positions": positions,
        "rows": [{"index": r.index, "operator": _tensor(r.operator),
                  "state": state.render(r.state),
                  "items": state.format_state(r.state, ",").split(",")}
                 for r in rows],
    }


def to_csv(rows):
    output = io.StringIO()
    writer = csv.writer(output, lineterminator="\n")
    for row in rows:
        writer.writerow(row)
    return output.getvalue()


def emit_rows(rows, positions, fmt=FORMAT_MARKDOWN):
    if fmt == FORMAT_JSON:
        return json.dumps(_rows_to_dict(rows, positions)) + "\n"
    if fmt == FORMAT_CSV:
        return to_csv([("index", "operator", "state")] + [
            (r.index, _tensor(r.operator), state.render(r.state))
            for r in rows])
    if fmt == FORMAT_MARKDOWN:
        lines = ["| Unitary operators on qubits %s | Encoded states |"
                 % (positions,), "|---|---|"]
        lines.extend("| U%d = %s | %s |" % (
            r.index, _tensor(r.operator), state.render(r.state))
            for r in rows)
        return "\n".join(lines) + "\n"
    raise UnknownFormat(fmt)


def emit_table(cb, fmt=FORMAT_MARKDOWN):
    return emit_rows(cb.rows(), cb.positions, fmt)


def multiplication_table(operators):
    """Grid of products, rows and columns in the order given."""
    operators = list(operators)
    return [[pauli.mul(a, b) for b in operators] for a in operators]


def emit_multiplication_table(operators, fmt=FORMAT_MARKDOWN):
    """Print the product of every pair of ``operators``.

    ``operators`` is a sequence of strings or a subgroup, which is then
    laid out in symplectic order.
    """
    if hasattr(operators, "sorted_elements"):
        operators = operators.sorted_elements()
    operators = list(operators)
    grid = multiplication_table(operators)
    header = [pauli.format_op(g) for g in operators]
    cells = [[pauli.format_op(g) for g in row] for row in grid]
    if fmt == FORMAT_JSON:
        return json.dumps({"operators": header, "products": cells}) + "\n"
    if fmt == FORMAT_CSV:
        return to_csv([["·"] + header] + [
            [h] + row for h, row in zip(header, cells)])
    if fmt == FORMAT_MARKDOWN:
        lines = ["| · | %s |" % " | ".join(header),
                 "|%s" % ("---|" * (len(header) + 1))]
        lines.extend("| %s | %s |" % (h, " | ".join(row))
                     for h, row in zip(header, cells))
        return "\n".join(lines) + "\n"
    raise UnknownFormat(fmt)
