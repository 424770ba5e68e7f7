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
"""Exact signed superpositions of computational basis states.

A state is a list of (sign, ket) items sharing the amplitude 1/sqrt(m), m
being the number of items. Every quantity derived from it (inner products,
expectations, distinguishability) is an exact fraction.
"""
import collections
import fractions
import itertools
import math
import re

import daiquiri
import networkx

from densecode import exceptions
from densecode import pauli
from densecode import utils


LOG = daiquiri.getLogger(__name__)

Item = collections.namedtuple('Item', ['sign', 'ket'])

_SIGNS = {"+": 1, "-": -1, u"−": -1}


class StateParseError(exceptions.DenseCodeError, ValueError):
    def __init__(self, token, reason):
        super(StateParseError, self).__init__(
            "Unable to parse state item %r: %s" % (token, reason))
        self.token = token
        self.reason = reason


class UnknownState(exceptions.DenseCodeError, KeyError):
    def __init__(self, name):
        super(UnknownState, self).__init__("Unknown builtin state %r" % name)
        self.name = name

    def __str__(self):
        return self.args[0]


class StateMismatch(exceptions.DenseCodeError, ValueError):
    """Error raised when two states live on different qubit counts."""
    def __init__(self, t_a, t_b):
        super(StateMismatch, self).__init__(
            "States act on %d and %d qubits" % (t_a, t_b))
        self.t_a = t_a
        self.t_b = t_b


class InvalidPositions(exceptions.DenseCodeError, ValueError):
    def __init__(self, positions, reason):
        super(InvalidPositions, self).__init__(
            "Invalid operated qubits %s: %s" % (positions, reason))
        self.positions = positions
        self.reason = reason


class SymmetricState(object):

    def __init__(self, items):
        items = tuple(Item(*item) for item in items)
        if not items:
            raise StateParseError("", "a state needs at least one item")
        t = len(items[0].ket)
        if t == 0:
            raise StateParseError("", "empty ket")
        amplitudes = {}
        for item in items:
            if item.sign not in (1, -1):
                raise StateParseError(item, "sign must be +1 or -1")
            if len(item.ket) != t:
                raise StateParseError(
                    item.ket, "expected %d qubits, got %d"
                    % (t, len(item.ket)))
            if item.ket.strip("01"):
                raise StateParseError(item.ket, "ket must be a bitstring")
            if item.ket in amplitudes:
                raise StateParseError(item.ket, "duplicate ket")
            amplitudes[item.ket] = item.sign
        self.items = items
        self.t = t
        self.amplitudes = amplitudes

    @property
    def m(self):
        return len(self.items)

    def negate(self):
        return SymmetricState((-i.sign, i.ket) for i in self.items)

    def __eq__(self, other):
        if not isinstance(other, SymmetricState):
            return NotImplemented
        return self.amplitudes == other.amplitudes

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(frozenset(self.amplitudes.items()))

    def __repr__(self):
        return "<%s %s>" % (self.__class__.__name__, format_state(self, ","))

    def __str__(self):
        return render(self)

    def jsonify(self):
        return {"t": self.t, "items": [_format_item(i) for i in self.items]}


class PositionSet(tuple):
    """Strictly increasing 1-based qubit indices."""

    def __new__(cls, positions, t=None):
        positions = tuple(int(p) for p in positions)
        if not positions:
            raise InvalidPositions(positions, "no qubit selected")
        if any(b <= a for a, b in zip(positions, positions[1:])):
            raise InvalidPositions(positions, "indices must be increasing")
        if positions[0] < 1 or (t is not None and positions[-1] > t):
            raise InvalidPositions(
                positions, "indices must lie within 1..%s" % (t or "t"))
        return super(PositionSet, cls).__new__(cls, positions)

    @classmethod
    def parse(cls, text, t=None):
        try:
            positions = [int(p) for p in text.split(",") if p.strip()]
        except ValueError:
            raise InvalidPositions(text, "expected comma separated integers")
        return cls(positions, t)

    def __str__(self):
        return ",".join(map(str, self))

    def jsonify(self):
        return list(self)


def _format_item(item):
    return ("+" if item.sign > 0 else "-") + item.ket


def parse_state(text):
    """Parse sign+bitstring tokens separated by newlines or commas."""
    tokens = []
    for line in text.splitlines():
        line = line.split("#", 1)[0]
        tokens.extend(tok.strip() for tok in line.split(","))
    items = []
    for token in tokens:
        if not token:
            continue
        sign = _SIGNS.get(token[0])
        if sign is None:
            raise StateParseError(token, "missing or bad sign")
        items.append(Item(sign, token[1:].strip()))
    return SymmetricState(items)


def format_state(s, separator="\n"):
    return separator.join(_format_item(i) for i in s.items)


def prefactor(m):
    root = math.isqrt(m)
    if root * root == m:
        return "1" if m == 1 else "1/%d" % root
    return u"1/√%d" % m


def render(s):
    """Signed ket sum with its normalisation, e.g. 1/√2(|000⟩ - |111⟩)."""
    terms = []
    for index, item in enumerate(s.items):
        ket = u"|%s⟩" % item.ket
        if index == 0:
            terms.append(ket if item.sign > 0 else "-" + ket)
        else:
            terms.append(("+ " if item.sign > 0 else "- ") + ket)
    return u"%s(%s)" % (prefactor(s.m), " ".join(terms))


def check_constraint1(s):
    return s.m % 2 == 0


def _project(ket, positions):
    return "".join(ket[p - 1] for p in positions)


def projections_distinct(s, positions):
    projections = set(_project(i.ket, positions) for i in s.items)
    return len(projections) == s.m


def valid_position_sets(s):
    """Position sets whose projections of the kets are pairwise distinct."""
    n = utils.operated_qubits(s.t)
    return [PositionSet(c, s.t)
            for c in itertools.combinations(range(1, s.t + 1), n)
            if projections_distinct(s, c)]


def _check_operands(g, positions, s):
    if len(g) != len(positions):
        raise pauli.ArityError(len(positions), len(g))
    if positions[-1] > s.t:
        raise InvalidPositions(positions,
                               "state has only %d qubits" % s.t)


def apply(g, positions, s):
    """Apply a Pauli string on the given qubits of a state.

    X flips the bit, Z negates |1>, Y flips and negates |0>, so for every
    factor the sign changes when Z is present and the resulting bit is 1.
    """
    _check_operands(g, positions, s)
    factors = g.factors
    items = []
    for item in s.items:
        bits = list(item.ket)
        sign = item.sign
        for factor, position in zip(factors, positions):
            bit = int(bits[position - 1]) ^ factor.x
            if factor.z and bit:
                sign = -sign
            bits[position - 1] = str(bit)
        items.append(Item(sign, "".join(bits)))
    return SymmetricState(items)


def _overlap(a, b):
    if a.t != b.t:
        raise StateMismatch(a.t, b.t)
    if len(b.amplitudes) < len(a.amplitudes):
        a, b = b, a
    return sum(sign * b.amplitudes[ket]
               for ket, sign in a.amplitudes.items()
               if ket in b.amplitudes)


def inner_product(a, b):
    """Exact <a|b> of two states holding the same number of items.

    Both states must share m, as every codeword of one state does since
    `apply` keeps the item count. Overlaps of states with different m are
    measured with `distinguishability`.
    """
    if a.m != b.m:
        raise exceptions.InvariantViolation(
            "inner_product", "states hold %d and %d items" % (a.m, b.m))
    return fractions.Fraction(_overlap(a, b), a.m)


def expectation(g, positions, s):
    return inner_product(s, apply(g, positions, s))


def distinguishability(a, b):
    """Squared overlap: 0 for orthogonal states, 1 for equal up to sign."""
    overlap = _overlap(a, b)
    return fractions.Fraction(overlap * overlap, a.m * b.m)


def _ghz(m):
    return SymmetricState([(1, "0" * m), (1, "1" * m)])


def _w(t):
    return SymmetricState(
        (1, "0" * (t - 1 - i) + "1" + "0" * i) for i in range(t))


_LITERAL_STATES = {
    "bell": "+00,+11",
    "w1_4": "+1100,+0110,+0011,+1001",
    "cluster4": "+0000,+0011,+1100,-1111",
    "cluster5": "+00000,+00111,+11011,-11100",
    "w2_4": "+0001,+0010,+0100,+1000",
}

_PATTERNS = (
    (re.compile(r"^ghz_?(\d+)$"), _ghz, 2),
    (re.compile(r"^w_?(\d+)$"), _w, 2),
)

BUILTIN_NAMES = tuple(sorted(_LITERAL_STATES)) + ("ghz<M>", "w<t>")


def builtin_state(name):
    name = name.lower()
    if name in _LITERAL_STATES:
        return parse_state(_LITERAL_STATES[name])
    for pattern, factory, minimum in _PATTERNS:
        match = pattern.match(name)
        if match and int(match.group(1)) >= minimum:
            return factory(int(match.group(1)))
    raise UnknownState(name)


ClusterSite = collections.namedtuple('ClusterSite', ['site', 'eigenvalue'])


def chain(t):
    """Linear nearest-neighbour graph on qubits 1..t."""
    return networkx.path_graph(range(1, t + 1))


def verify_cluster(s, neighborhoods):
    """Check the eigenvalue equation of X_a Z_N(a) at every site a.

    ``neighborhoods`` is a networkx graph or an adjacency mapping over
    qubits 1..t. Each result holds k_a (the eigenvalue being (-1)^k_a) or
    None when the state is not an eigenstate of that site's operator.
    """
    graph = networkx.Graph(neighborhoods)
    graph.add_nodes_from(range(1, s.t + 1))
    results = []
    for site in range(1, s.t + 1):
        neighbours = set(graph.neighbors(site)) - {site}
        positions = PositionSet(sorted(neighbours | {site}), s.t)
        g = pauli.PauliString.from_factors(
            pauli.X if p == site else pauli.Z for p in positions)
        image = apply(g, positions, s)
        if image == s:
            eigenvalue = 0
        elif image == s.negate():
            eigenvalue = 1
        else:
            eigenvalue = None
        LOG.debug("Site %d operator %s on %s: %s", site, g, positions,
                  eigenvalue)
        results.append(ClusterSite(site, eigenvalue))
    return results
