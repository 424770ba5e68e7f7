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
"""Phaseless Pauli algebra.

A Pauli string on n qubits is stored as two n-bit planes, one for the X
component and one for the Z component. Qubit 1 is the most significant bit
of each plane so the textual form reads left to right like a tensor product.
Global phases are dropped: Y stands for ZX and the product of two strings is
the bitwise XOR of their planes.
"""
import collections
import functools

from densecode import exceptions


Pauli = collections.namedtuple('Pauli', ['x', 'z'])

I = Pauli(0, 0)  # noqa: E741
X = Pauli(1, 0)
Y = Pauli(1, 1)
Z = Pauli(0, 1)

LETTERS = {I: "I", X: "X", Y: "Y", Z: "Z"}
FROM_LETTER = {v: k for k, v in LETTERS.items()}

TENSOR_SEPARATOR = u"⊗"


class ArityError(exceptions.DenseCodeError, ValueError):
    """Error raised when operands act on a different number of qubits."""
    def __init__(self, expected, got):
        super(ArityError, self).__init__(
            "Arity mismatch: expected %d qubit(s), got %d" % (expected, got))
        self.expected = expected
        self.got = got


class ParseError(exceptions.DenseCodeError, ValueError):
    """Error raised when an operator string cannot be parsed."""
    def __init__(self, text, position, reason):
        super(ParseError, self).__init__(
            "Unable to parse operator %r at index %d: %s" % (
                text, position, reason))
        self.text = text
        self.position = position
        self.reason = reason


def _popcount(v):
    return bin(v).count("1")


@functools.total_ordering
class PauliString(object):

    __slots__ = ('n', 'x', 'z')

    def __init__(self, n, x=0, z=0):
        if n < 1:
            raise ValueError("A Pauli string needs at least one qubit")
        limit = 1 << n
        if not (0 <= x < limit and 0 <= z < limit):
            raise ValueError("Bit planes do not fit on %d qubit(s)" % n)
        self.n = n
        self.x = x
        self.z = z

    @classmethod
    def from_factors(cls, factors):
        factors = list(factors)
        x = z = 0
        for p in factors:
            x = (x << 1) | p.x
            z = (z << 1) | p.z
        return cls(len(factors), x, z)

    @classmethod
    def from_vector(cls, n, vector):
        """Build a string from its 2n-bit symplectic vector (x | z)."""
        mask = (1 << n) - 1
        return cls(n, (vector >> n) & mask, vector & mask)

    @property
    def vector(self):
        return (self.x << self.n) | self.z

    def factor(self, index):
        """Return the Pauli acting on qubit ``index`` (0-based)."""
        if not 0 <= index < self.n:
            raise IndexError("Qubit index %d out of range" % index)
        shift = self.n - 1 - index
        return Pauli((self.x >> shift) & 1, (self.z >> shift) & 1)

    @property
    def factors(self):
        return tuple(self.factor(i) for i in range(self.n))

    def is_identity(self):
        return self.x == 0 and self.z == 0

    def is_diagonal(self):
        return self.x == 0

    def z_count(self):
        return _popcount(self.z & ~self.x)

    def tensor(self, other):
        return PauliString(self.n + other.n,
                           (self.x << other.n) | other.x,
                           (self.z << other.n) | other.z)

    def __mul__(self, other):
        return mul(self, other)

    def __len__(self):
        return self.n

    def _key(self):
        return (self.n, self.vector)

    def __eq__(self, other):
        if not isinstance(other, PauliString):
            return NotImplemented
        return self._key() == other._key()

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __lt__(self, other):
        if not isinstance(other, PauliString):
            return NotImplemented
        return self._key() < other._key()

    def __hash__(self):
        return hash(self._key())

    def __str__(self):
        return format_op(self)

    def __repr__(self):
        return "<%s: %s>" % (self.__class__.__name__, format_op(self))

    def jsonify(self):
        return format_op(self)


def mul(a, b):
    """Phaseless product of two Pauli strings."""
    if a.n != b.n:
        raise ArityError(a.n, b.n)
    return PauliString(a.n, a.x ^ b.x, a.z ^ b.z)


def identity(n):
    return PauliString(n)


def is_diagonal(p):
    return p.is_diagonal()


def z_count(p):
    return p.z_count()


def all_strings(n):
    """Yield the 4^n strings of G_n ordered by symplectic vector."""
    for vector in range(1 << (2 * n)):
        yield PauliString.from_vector(n, vector)


def parse_op(text):
    if not isinstance(text, str) or not text:
        raise ParseError(text, 0, "empty operator")
    factors = []
    expect_factor = True
    for position, char in enumerate(text):
        if char == TENSOR_SEPARATOR:
            if expect_factor:
                raise ParseError(text, position, "misplaced separator")
            expect_factor = True
            continue
        try:
            factors.append(FROM_LETTER[char])
        except KeyError:
            raise ParseError(text, position, "unknown character %r" % char)
        expect_factor = False
    if expect_factor:
        raise ParseError(text, len(text) - 1, "trailing separator")
    return PauliString.from_factors(factors)


def format_op(p, separator=""):
    return separator.join(LETTERS[f] for f in p.factors)
