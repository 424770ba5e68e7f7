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
"""Multiplicative subgroups of the phaseless Pauli group G_n.

A subgroup of G_n is a GF(2) subspace of the 2n-bit symplectic vectors, so
it is identified by the reduced row echelon form of any generating set. That
basis is the canonical key used for equality, deduplication and ordering.

Three producers live here: the two-line construction (two tensor-product
"lines" of column sets whose union is a subgroup), the single-line baseline
G1 x ... x {I,P} x ... x G1, and the exhaustive enumeration of all subspaces
of a given dimension used to audit the other two.
"""
import collections
import functools
import itertools

import cachetools
import daiquiri
import voluptuous

from densecode import exceptions
from densecode import gf2
from densecode import pauli
from densecode import utils


LOG = daiquiri.getLogger(__name__)

ALGORITHM1 = "algorithm1"
SHUKLA = "shukla"
ORACLE = "oracle"
EXPLICIT = "explicit"

G1 = (pauli.I, pauli.X, pauli.Y, pauli.Z)
NON_IDENTITY = (pauli.X, pauli.Y, pauli.Z)

# Pauli used to split the non-shared column when the two lines share n-1
# columns; any choice yields the same union.
SPLIT_PAULI = pauli.X


class NotASubgroup(exceptions.DenseCodeError, ValueError):
    """Error raised when a set of strings is not closed under product."""
    def __init__(self, reason):
        super(NotASubgroup, self).__init__(
            "Elements do not form a subgroup: %s" % reason)
        self.reason = reason


def pair(p):
    """The two-element subgroup {I, P} of G1."""
    return (pauli.I, p)


def complement(p):
    """G1 minus {I, P}: the coset of {I, P} in G1."""
    return tuple(q for q in G1 if q not in (pauli.I, p))


def line(columns):
    """Tensor product of per-qubit Pauli sets."""
    for factors in itertools.product(*columns):
        yield pauli.PauliString.from_factors(factors)


def is_closed(elements):
    elements = set(elements)
    if not elements:
        return False
    n = next(iter(elements)).n
    for g in elements:
        if g.n != n:
            raise pauli.ArityError(n, g.n)
    if pauli.identity(n) not in elements:
        return False
    for a, b in itertools.combinations(elements, 2):
        if pauli.mul(a, b) not in elements:
            return False
    return True


@functools.total_ordering
class Subgroup(object):
    """A subgroup of G_n of order 2^t, keyed by its RREF basis."""

    def __init__(self, n, basis, provenance=None):
        self.n = n
        self.basis = tuple(basis)
        self.provenance = dict(provenance or {})
        self._vectors = None

    @classmethod
    def from_generators(cls, generators, n=None, provenance=None):
        generators = list(generators)
        if n is None:
            if not generators:
                raise ValueError("Arity is required without generators")
            n = generators[0].n
        for g in generators:
            if g.n != n:
                raise pauli.ArityError(n, g.n)
        matrix = gf2.from_vectors((g.vector for g in generators), 2 * n)
        reduced = gf2.row_reduce(matrix)
        return cls(n, gf2.to_vectors(reduced.matrix), provenance)

    @classmethod
    def from_elements(cls, elements, provenance=None):
        elements = set(elements)
        if not is_closed(elements):
            raise NotASubgroup("%d element(s) are not closed under product"
                               % len(elements))
        group = cls.from_generators(elements, provenance=provenance)
        if group.order != len(elements):
            raise exceptions.InvariantViolation(
                "subgroup", "order %d does not match %d elements"
                % (group.order, len(elements)))
        return group

    @property
    def t(self):
        return len(self.basis)

    @property
    def order(self):
        return 1 << self.t

    @property
    def key(self):
        return (self.n, self.basis)

    @property
    def vectors(self):
        if self._vectors is None:
            matrix = gf2.from_vectors(self.basis, 2 * self.n)
            self._vectors = frozenset(gf2.to_vectors(gf2.span(matrix)))
        return self._vectors

    @property
    def elements(self):
        return frozenset(pauli.PauliString.from_vector(self.n, v)
                         for v in self.vectors)

    def sorted_elements(self):
        return [pauli.PauliString.from_vector(self.n, v)
                for v in sorted(self.vectors)]

    def generators(self):
        return [pauli.PauliString.from_vector(self.n, v) for v in self.basis]

    def parity_checks(self):
        """Symplectic vectors orthogonal (dot product) to every element."""
        matrix = gf2.from_vectors(self.basis, 2 * self.n)
        return gf2.to_vectors(gf2.nullspace(matrix))

    def check_support(self):
        """1-based qubits touched by at least one parity check."""
        mask = (1 << self.n) - 1
        touched = 0
        for v in self.parity_checks():
            touched |= (v >> self.n) | (v & mask)
        return tuple(i + 1 for i in range(self.n)
                     if touched >> (self.n - 1 - i) & 1)

    def with_provenance(self, **provenance):
        merged = dict(self.provenance)
        merged.update(provenance)
        return Subgroup(self.n, self.basis, merged)

    def __contains__(self, g):
        return g.n == self.n and g.vector in self.vectors

    def __iter__(self):
        return iter(self.sorted_elements())

    def __len__(self):
        return self.order

    def __eq__(self, other):
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.key == other.key

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __lt__(self, other):
        if not isinstance(other, Subgroup):
            return NotImplemented
        return (self.n, self.t, self.basis) < (other.n, other.t, other.basis)

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return "<%s n=%d order=%d basis=%s>" % (
            self.__class__.__name__, self.n, self.order,
            ",".join(map(str, self.generators())))

    def format_key(self):
        return "n=%d:%s" % (self.n, ",".join(map(str, self.generators())))

    def format_elements(self, separator=", "):
        return separator.join(pauli.format_op(g)
                              for g in self.sorted_elements())

    def jsonify(self):
        return {
            "n": self.n,
            "order": self.order,
            "elements": self.sorted_elements(),
            "basis": self.generators(),
            "provenance": self.provenance,
        }

    SCHEMA = voluptuous.Schema({
        voluptuous.Required("n"): voluptuous.All(int, voluptuous.Range(min=1)),
        voluptuous.Required("order"): voluptuous.All(
            int, voluptuous.Range(min=1)),
        voluptuous.Required("elements"): [str],
        voluptuous.Optional("basis"): [str],
        voluptuous.Optional("provenance", default={}): dict,
    })

    @classmethod
    def from_dict(cls, d):
        d = cls.SCHEMA(d)
        elements = [pauli.parse_op(e) for e in d["elements"]]
        group = cls.from_elements(elements, provenance=d["provenance"])
        if group.n != d["n"] or group.order != d["order"]:
            raise NotASubgroup("header says n=%d order=%d, elements give "
                               "n=%d order=%d" % (d["n"], d["order"],
                                                  group.n, group.order))
        return group

    def to_text(self):
        lines = ["n=%d order=%d" % (self.n, self.order)]
        lines.extend(pauli.format_op(g) for g in self.sorted_elements())
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        lines = [row.strip() for row in text.splitlines()]
        lines = [row for row in lines if row and not row.startswith("#")]
        if not lines:
            raise NotASubgroup("empty subgroup file")
        try:
            header = dict(field.split("=", 1) for field in lines[0].split())
            n, order = int(header["n"]), int(header["order"])
        except (KeyError, ValueError):
            raise NotASubgroup("bad header %r" % lines[0])
        return cls.from_dict({
            "n": n, "order": order, "elements": lines[1:],
        })


def whole_group(n):
    return Subgroup.from_generators(
        [pauli.PauliString.from_vector(n, 1 << i) for i in range(2 * n)],
        n=n, provenance={"method": EXPLICIT, "name": "G%d" % n})


def _from_lines(a_line, b_line, provenance):
    elements = set(line(a_line))
    elements.update(line(b_line))
    return Subgroup.from_elements(elements, provenance)


def _letter(p):
    return pauli.LETTERS[p]


def _candidates_for_columns(t, n, x, y):
    filled = [c + 1 for c in range(n) if c not in (x, y)]
    candidates = []
    if t % 2 == 0:
        for p in NON_IDENTITY:
            a_line, b_line = [G1] * n, [G1] * n
            a_line[y], b_line[y] = pair(p), complement(p)
            candidates.append(_from_lines(a_line, b_line, {
                "method": ALGORITHM1, "s": n - 1, "filled": filled + [x + 1],
                "split": y + 1, "pauli": _letter(p),
            }))
        return candidates

    # Lines share the G1 columns plus one {I,P} column
    for shared, split in ((x, y), (y, x)):
        for p in NON_IDENTITY:
            a_line, b_line = [G1] * n, [G1] * n
            a_line[shared] = b_line[shared] = pair(p)
            a_line[split] = pair(SPLIT_PAULI)
            b_line[split] = complement(SPLIT_PAULI)
            candidates.append(_from_lines(a_line, b_line, {
                "method": ALGORITHM1, "s": n - 1, "filled": filled,
                "shared": shared + 1, "split": split + 1,
                "pauli": _letter(p), "split_pauli": _letter(SPLIT_PAULI),
            }))

    # Lines share only the G1 columns
    for p, q in itertools.product(NON_IDENTITY, repeat=2):
        a_line, b_line = [G1] * n, [G1] * n
        a_line[x], a_line[y] = pair(p), pair(q)
        b_line[x], b_line[y] = complement(p), complement(q)
        candidates.append(_from_lines(a_line, b_line, {
            "method": ALGORITHM1, "s": n - 2, "filled": filled,
            "columns": [x + 1, y + 1], "pauli": _letter(p) + _letter(q),
        }))
    return candidates


@cachetools.cached(cachetools.LRUCache(maxsize=16))
def mgp_candidates(t):
    """Raw output of the two-line construction, duplicates included."""
    n = utils.operated_qubits(t)
    if n == 1:
        if t == 1:
            return tuple(
                Subgroup.from_elements(line([pair(p)]), {
                    "method": ALGORITHM1, "s": 0, "pauli": _letter(p)})
                for p in NON_IDENTITY)
        return (whole_group(1).with_provenance(method=ALGORITHM1, s=1),)
    jobs = [(t, n, x, y) for x, y in itertools.combinations(range(n), 2)]
    return tuple(itertools.chain.from_iterable(
        utils.parallel_map(_candidates_for_columns, jobs)))


def _deduplicate(groups):
    unique = collections.OrderedDict()
    for group in groups:
        unique.setdefault(group.key, group)
    return tuple(sorted(unique.values()))


@cachetools.cached(cachetools.LRUCache(maxsize=16))
def construct_mgp_subgroups(t):
    """Distinct subgroups of order 2^t built by the two-line construction.

    Sorted by canonical key; each keeps the provenance of its first raw
    occurrence.
    """
    raw = mgp_candidates(t)
    groups = _deduplicate(raw)
    for group in groups:
        if group.order != 1 << t:
            raise exceptions.InvariantViolation(
                repr(group), "order is not 2^%d" % t)
    LOG.debug("Built %d raw candidates, %d distinct subgroups for t=%d",
              len(raw), len(groups), t)
    return groups


def lambda_count(t):
    n = utils.operated_qubits(t)
    if t % 2 == 0:
        return 1
    if n == 1:
        return 3
    return n * (n - 1) // 2 * 15


def shukla_subgroups(n):
    """The 3n subgroups G1^(i) x {I,P} x G1^(n-i-1) of order 2^(2n-1)."""
    if n < 1:
        raise ValueError("Arity must be positive, got %s" % n)
    groups = []
    for column in range(n):
        for p in NON_IDENTITY:
            columns = [G1] * n
            columns[column] = pair(p)
            groups.append(Subgroup.from_elements(line(columns), {
                "method": SHUKLA, "column": column + 1,
                "pauli": _letter(p)}))
    return tuple(sorted(groups))


def shukla_candidates(t):
    """Baseline operator sets for a t-qubit state.

    Odd t uses the single-line subgroups; for even t the only subgroup of
    the right order is the whole group.
    """
    n = utils.operated_qubits(t)
    if t % 2:
        return shukla_subgroups(n)
    return (whole_group(n).with_provenance(method=SHUKLA),)


@cachetools.cached(cachetools.LRUCache(maxsize=16))
def enumerate_all_subgroups(n, t):
    """Every subgroup of G_n of order 2^t, each exactly once."""
    if not 1 <= t <= 2 * n:
        raise ValueError("Need 1 <= t <= 2n, got n=%d t=%d" % (n, t))
    groups = tuple(sorted(
        Subgroup(n, gf2.to_vectors(matrix), {"method": ORACLE})
        for matrix in gf2.enumerate_rref(2 * n, t)))
    expected = gf2.gaussian_binomial(2 * n, t)
    if len(groups) != expected:
        raise exceptions.InvariantViolation(
            "oracle", "found %d subspaces, expected %d"
            % (len(groups), expected))
    return groups


AuditReport = collections.namedtuple(
    'AuditReport', ['t', 'n', 'constructed', 'total', 'missing'])


def audit(t):
    """Compare the construction with the exhaustive enumeration."""
    n = utils.operated_qubits(t)
    constructed = construct_mgp_subgroups(t)
    total = enumerate_all_subgroups(n, t)
    built = set(g.key for g in constructed)
    unknown = built - set(g.key for g in total)
    if unknown:
        raise exceptions.InvariantViolation(
            "construction", "%d subgroup(s) missing from the oracle"
            % len(unknown))
    missing = tuple(g for g in total if g.key not in built)
    LOG.info("t=%d: constructed %d, total %d, missing %d",
             t, len(constructed), len(total), len(missing))
    return AuditReport(t, n, constructed, total, missing)
