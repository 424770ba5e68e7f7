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
"""Pick the subgroups that give a dense code for a given state.

A subgroup H acting on positions p of a state yields |H| mutually
orthogonal codewords exactly when every non-identity element of H has a
zero expectation value on the state. That check is authoritative; the two
Condition 1 filters only prune work before it.
"""
import collections
import itertools

import daiquiri

from densecode import exceptions
from densecode import pauli
from densecode import state
from densecode import subgroup
from densecode import utils


LOG = daiquiri.getLogger(__name__)

FILTER_NONE = "none"
FILTER_LITERAL = "literal"
FILTER_SEMANTIC = "semantic"
FILTER_MODES = (FILTER_NONE, FILTER_LITERAL, FILTER_SEMANTIC)

ACCEPTED = "accepted"
REJECTED_CONDITION1 = "rejected-condition1"
REJECTED_ORTHOGONALITY = "rejected-orthogonality"

STATUS_OK = "ok"
STATUS_CONSTRAINT1 = "constraint1"
STATUS_CONSTRAINT2 = "constraint2"
STATUS_CONDITION2 = "condition2"

Witness = collections.namedtuple('Witness', ['operator', 'expectation'])


class OrderMismatch(exceptions.DenseCodeError, ValueError):
    def __init__(self, order, t):
        super(OrderMismatch, self).__init__(
            "A subgroup of order %d cannot encode a %d-qubit state"
            % (order, t))
        self.order = order
        self.t = t


class VerificationFailed(exceptions.DenseCodeError, ValueError):
    """Error raised when a subgroup does not give orthogonal codewords."""

    def __init__(self, group, positions, witness):
        super(VerificationFailed, self).__init__(
            "%s on qubits %s does not give orthogonal codewords: "
            "%s has expectation %s"
            % (group.format_key(), positions, witness.operator,
               witness.expectation))
        self.group = group
        self.positions = positions
        self.witness = witness


class Verification(object):
    """Outcome of an orthogonality check, truthy when it passed."""

    def __init__(self, witness=None):
        self.witness = witness

    def __bool__(self):
        return self.witness is None

    __nonzero__ = __bool__

    def __repr__(self):
        if self:
            return "<%s passed>" % self.__class__.__name__
        return "<%s failed: %s %s>" % (self.__class__.__name__,
                                       self.witness.operator,
                                       self.witness.expectation)


def _check_operands(h, positions, s):
    if h.n != len(positions):
        raise pauli.ArityError(len(positions), h.n)
    if positions[-1] > s.t:
        raise state.InvalidPositions(positions,
                                     "state has only %d qubits" % s.t)


def _nonidentity(h):
    return (g for g in h.sorted_elements() if not g.is_identity())


def literal_witness(h):
    """First non-identity diagonal element with an even number of Z."""
    for g in _nonidentity(h):
        if g.is_diagonal() and g.z_count() % 2 == 0:
            return g


def condition1_literal(h):
    return literal_witness(h) is None


def semantic_witness(h, positions, s):
    """First non-identity element acting as plus or minus identity."""
    _check_operands(h, positions, s)
    for g in _nonidentity(h):
        value = state.expectation(g, positions, s)
        if abs(value) == 1:
            return Witness(g, value)


def condition1_semantic(h, positions, s):
    return semantic_witness(h, positions, s) is None


def verify_orthogonal(h, positions, s):
    """Check that every non-identity element has zero expectation."""
    _check_operands(h, positions, s)
    if h.order != 1 << s.t:
        raise OrderMismatch(h.order, s.t)
    for g in _nonidentity(h):
        value = state.expectation(g, positions, s)
        if value != 0:
            return Verification(Witness(g, value))
    return Verification()


def verify_pairwise(h, positions, s):
    """Check orthogonality on every pair of codewords.

    The witness holds the product of the two offending operators and the
    inner product of their codewords.
    """
    _check_operands(h, positions, s)
    if h.order != 1 << s.t:
        raise OrderMismatch(h.order, s.t)
    codewords = [(g, state.apply(g, positions, s))
                 for g in h.sorted_elements()]
    for (a, phi_a), (b, phi_b) in itertools.combinations(codewords, 2):
        value = state.inner_product(phi_a, phi_b)
        if value != 0:
            return Verification(Witness(pauli.mul(a, b), value))
    return Verification()


class Entry(object):
    """Verdict for one subgroup at one position set."""

    __slots__ = ('positions', 'subgroup', 'verdict', 'witness')

    def __init__(self, positions, group, verdict, witness=None):
        self.positions = positions
        self.subgroup = group
        self.verdict = verdict
        self.witness = witness

    @property
    def accepted(self):
        return self.verdict == ACCEPTED

    def sort_key(self):
        return (tuple(self.positions), self.subgroup)

    def __repr__(self):
        return "<%s %s %s: %s>" % (self.__class__.__name__, self.positions,
                                   self.subgroup.format_key(), self.verdict)

    def jsonify(self, labels=None):
        d = {
            "positions": self.positions,
            "subgroup": self.subgroup.format_key(),
            "verdict": self.verdict,
        }
        if labels is not None:
            d["aliases"] = labels.aliases_for(self.subgroup)
        if self.witness is not None:
            d["witness"] = {"operator": self.witness.operator,
                            "expectation": self.witness.expectation}
        return d


def _judge(h, positions, s, filter_mode):
    if filter_mode == FILTER_LITERAL:
        g = literal_witness(h)
        if g is not None:
            return Entry(positions, h, REJECTED_CONDITION1, Witness(
                g, state.expectation(g, positions, s)))
    elif filter_mode == FILTER_SEMANTIC:
        witness = semantic_witness(h, positions, s)
        if witness is not None:
            return Entry(positions, h, REJECTED_CONDITION1, witness)
    verification = verify_orthogonal(h, positions, s)
    if verification:
        return Entry(positions, h, ACCEPTED)
    return Entry(positions, h, REJECTED_ORTHOGONALITY, verification.witness)


def _name(group, labels):
    if labels is None:
        return group.format_key()
    return labels.name(group)


def _constraints(s, positions=None):
    """Return (status, reason, position sets) for a state."""
    if not state.check_constraint1(s):
        return (STATUS_CONSTRAINT1,
                "Constraint 1 violated: the state has an odd number (%d) of "
                "superposition items" % s.m, [])
    if positions is not None:
        positions = state.PositionSet(positions, s.t)
        n = utils.operated_qubits(s.t)
        if len(positions) != n:
            raise pauli.ArityError(n, len(positions))
        if not state.projections_distinct(s, positions):
            return (STATUS_CONDITION2,
                    "Condition 2 violated: the items of the state are not "
                    "distinct on qubits %s" % (positions,), [])
        return STATUS_OK, None, [positions]
    valid = state.valid_position_sets(s)
    if not valid:
        return (STATUS_CONSTRAINT2,
                "Constraint 2 violated: no choice of %d operated qubit(s) "
                "keeps the items of the state distinct"
                % utils.operated_qubits(s.t), [])
    return STATUS_OK, None, valid


class SelectionReport(object):

    def __init__(self, s, filter_mode, status, reason=None, entries=(),
                 elapsed=None, name=None):
        self.state = s
        self.name = name
        self.filter_mode = filter_mode
        self.status = status
        self.reason = reason
        self.entries = sorted(entries, key=Entry.sort_key)
        self.elapsed = elapsed

    @property
    def ok(self):
        return self.status == STATUS_OK

    @property
    def position_sets(self):
        return sorted(set(e.positions for e in self.entries))

    def accepted(self, positions=None):
        """Accepted subgroups, for one position set or all of them."""
        return [e.subgroup for e in self.entries
                if e.accepted and (positions is None
                                   or tuple(e.positions) == tuple(positions))]

    def accepted_by_positions(self):
        result = collections.OrderedDict()
        for p in self.position_sets:
            result[p] = self.accepted(p)
        return result

    def rejected(self):
        return [e for e in self.entries if not e.accepted]

    def csv_rows(self, labels=None):
        rows = [("positions", "subgroup", "aliases", "verdict", "witness",
                 "expectation")]
        for e in self.entries:
            witness = e.witness or ("", "")
            rows.append((str(e.positions), e.subgroup.format_key(),
                         " = ".join(labels.aliases_for(e.subgroup))
                         if labels is not None else "",
                         e.verdict, witness[0], witness[1]))
        return rows

    def jsonify(self, labels=None):
        return {
            "state": self.name or state.format_state(self.state, ","),
            "t": self.state.t,
            "filter": self.filter_mode,
            "status": self.status,
            "reason": self.reason,
            "entries": [e.jsonify(labels) for e in self.entries],
        }

    def to_markdown(self, labels=None):
        lines = ["# Appropriate unitary operator sets for %s"
                 % (self.name or state.render(self.state)), "",
                 "- state: %s" % state.render(self.state),
                 "- filter: %s" % self.filter_mode,
                 "- status: %s" % self.status]
        if self.reason:
            lines.extend(["", self.reason])
            return "\n".join(lines) + "\n"
        for p in self.position_sets:
            entries = [e for e in self.entries
                       if tuple(e.positions) == tuple(p)]
            accepted = [e for e in entries if e.accepted]
            lines.extend([
                "", "## Qubits %s" % (p,), "",
                "The appropriate unitary operator sets are %s (%d of %d)."
                % (", ".join(_name(e.subgroup, labels) for e in accepted)
                   or "none", len(accepted), len(entries)), "",
                "| subgroup | elements | verdict | witness |",
                "|---|---|---|---|",
            ])
            for e in entries:
                witness = ""
                if e.witness is not None:
                    witness = "%s = %s" % (e.witness.operator,
                                           e.witness.expectation)
                lines.append("| %s | %s | %s | %s |" % (
                    _name(e.subgroup, labels), e.subgroup.format_elements(),
                    e.verdict, witness))
        return "\n".join(lines) + "\n"


def select(s, filter_mode=FILTER_SEMANTIC, positions=None, name=None):
    """Check every constructed subgroup at every valid position set.

    Constraint and Condition 2 failures are reported, not raised.
    """
    if filter_mode not in FILTER_MODES:
        raise ValueError("Unknown filter mode %r" % filter_mode)
    with utils.StopWatch() as sw:
        status, reason, position_sets = _constraints(s, positions)
        if status != STATUS_OK:
            LOG.error("%s", reason)
            return SelectionReport(s, filter_mode, status, reason,
                                   elapsed=sw.elapsed(), name=name)
        groups = subgroup.construct_mgp_subgroups(s.t)
        jobs = [(h, p, s, filter_mode)
                for p in position_sets for h in groups]
        entries = utils.parallel_map(_judge, jobs)
    for e in entries:
        LOG.debug("%s on %s: %s %s", e.subgroup.format_key(), e.positions,
                  e.verdict, e.witness or "")
    report = SelectionReport(s, filter_mode, status, entries=entries,
                             elapsed=sw.elapsed(), name=name)
    LOG.info("Accepted %d of %d (subgroup, qubits) pairs in %.3fs",
             len(report.accepted()), len(entries), report.elapsed)
    return report


def _verifying(groups, positions, s):
    jobs = [(h, positions, s) for h in groups]
    verdicts = utils.parallel_map(verify_orthogonal, jobs)
    return sorted(h for h, v in zip(groups, verdicts) if v)


ComparisonRow = collections.namedtuple(
    'ComparisonRow', ['positions', 'shukla', 'ours', 'oracle'])


class Comparison(object):
    """Verifying subgroups per construction method and position set."""

    def __init__(self, s, status, reason=None, rows=(), name=None):
        self.state = s
        self.name = name
        self.status = status
        self.reason = reason
        self.rows = list(rows)

    @property
    def ok(self):
        return self.status == STATUS_OK

    def csv_rows(self, labels=None):
        rows = [("positions", "single line", "two lines", "all subgroups")]
        for r in self.rows:
            rows.append((str(r.positions),) + tuple(
                " ".join(_name(h, labels) for h in groups or ())
                for groups in (r.shukla, r.ours, r.oracle)))
        return rows

    def jsonify(self, labels=None):
        def names(groups):
            if groups is None:
                return None
            return [_name(h, labels) for h in groups]
        return {
            "state": self.name or state.format_state(self.state, ","),
            "status": self.status,
            "reason": self.reason,
            "rows": [{"positions": r.positions,
                      "shukla": names(r.shukla),
                      "ours": names(r.ours),
                      "oracle": names(r.oracle)} for r in self.rows],
        }

    def to_markdown(self, labels=None):
        title = self.name or state.render(self.state)
        if self.reason:
            return "# %s\n\n%s\n" % (title, self.reason)
        with_oracle = any(r.oracle is not None for r in self.rows)
        header = ["qubits", "single line", "two lines"]
        if with_oracle:
            header.append("all subgroups")
        lines = ["# %s" % title, "",
                 "| %s |" % " | ".join(header),
                 "|%s" % ("---|" * len(header))]
        for r in self.rows:
            cells = [str(r.positions)]
            columns = [r.shukla, r.ours]
            if with_oracle:
                columns.append(r.oracle)
            for groups in columns:
                cells.append("%s (%d)" % (
                    ", ".join(_name(h, labels) for h in groups),
                    len(groups)))
            lines.append("| %s |" % " | ".join(cells))
        return "\n".join(lines) + "\n"


def compare_methods(s, oracle=False, positions=None, name=None):
    """Verifying sets of the single-line and the two-line constructions.

    With ``oracle`` every subgroup of the right order is also checked, which
    shows whether any verifying set escapes the two-line construction.
    """
    status, reason, position_sets = _constraints(s, positions)
    if status != STATUS_OK:
        LOG.error("%s", reason)
        return Comparison(s, status, reason, name=name)
    n = utils.operated_qubits(s.t)
    shukla = subgroup.shukla_candidates(s.t)
    ours = subgroup.construct_mgp_subgroups(s.t)
    everything = subgroup.enumerate_all_subgroups(n, s.t) if oracle else None
    rows = []
    for p in position_sets:
        rows.append(ComparisonRow(
            p, _verifying(shukla, p, s), _verifying(ours, p, s),
            _verifying(everything, p, s) if oracle else None))
        LOG.info("Qubits %s: %d single line, %d two lines%s", p,
                 len(rows[-1].shukla), len(rows[-1].ours),
                 ", %d overall" % len(rows[-1].oracle) if oracle else "")
    return Comparison(s, status, rows=rows, name=name)
