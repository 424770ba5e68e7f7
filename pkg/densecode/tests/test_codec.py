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
import fractions
import io
import itertools
import os
import random

import testscenarios

from densecode import codec
from densecode import json
from densecode import labels
from densecode import pauli
from densecode import selector
from densecode import state
from densecode import subgroup
from densecode.tests import base


load_tests = testscenarios.load_tests_apply_scenarios

GOLDEN_DIR = os.path.join(os.path.dirname(__file__), "golden")


def _items(s):
    return base.items(state.format_state(s))


def _normalize(text):
    return [" ".join(line.split()) for line in text.strip().splitlines()]


def _golden(name):
    path = os.path.join(GOLDEN_DIR, name + ".md")
    with io.open(path, encoding="utf-8") as f:
        return _normalize(f.read())


class CodebookMixin(object):
    def setUp(self):
        super(CodebookMixin, self).setUp()
        self.labels = labels.load_labels()

    def published(self, name):
        entry = self.labels.table(name)
        return codec.build_codebook(
            self.labels.subgroup(entry["subgroup"]), entry["positions"],
            state.builtin_state(entry["state"]),
            self.labels.ordering(entry["ordering"]))


class TestGHZTable(CodebookMixin, base.BaseTestCase):
    expected = [
        ("II", "+000,+111"),
        ("IZ", "+000,-111"),
        ("XI", "+100,+011"),
        ("XZ", "+100,-011"),
        ("YX", "-110,+001"),
        ("YY", "+110,+001"),
        ("ZX", "+010,-101"),
        ("ZY", "-010,-101"),
    ]

    def test_rows(self):
        cb = self.published("table7")
        self.assertEqual(8, len(cb))
        self.assertEqual(3, cb.t)
        for row, (op, items) in zip(cb.rows(), self.expected):
            self.assertEqual(pauli.parse_op(op), row.operator)
            self.assertEqual(base.items(items), _items(row.state))
        self.assertEqual(list(range(8)), [r.index for r in cb.rows()])

    def test_markdown(self):
        text = codec.emit_table(self.published("table7"))
        lines = text.splitlines()
        self.assertEqual(
            "| Unitary operators on qubits 1,2 | Encoded states |", lines[0])
        self.assertEqual("|---|---|", lines[1])
        self.assertEqual(u"| U0 = I⊗I | 1/√2(|000⟩ + |111⟩) |", lines[2])
        self.assertEqual(u"| U4 = Y⊗X | 1/√2(-|110⟩ + |001⟩) |", lines[6])
        self.assertEqual(10, len(lines))

    def test_csv(self):
        text = codec.emit_table(self.published("table7"), codec.FORMAT_CSV)
        lines = text.splitlines()
        self.assertEqual("index,operator,state", lines[0])
        self.assertEqual(u"1,I⊗Z,1/√2(|000⟩ - |111⟩)", lines[2])

    def test_json(self):
        data = json.loads(codec.emit_table(self.published("table7"),
                                           codec.FORMAT_JSON))
        self.assertEqual([1, 2], data["positions"])
        self.assertEqual(8, len(data["rows"]))
        self.assertEqual({"index": 6, "operator": u"Z⊗X",
                          "state": u"1/√2(|010⟩ - |101⟩)",
                          "items": ["+010", "-101"]}, data["rows"][6])

    def test_unknown_format(self):
        self.assertRaises(codec.UnknownFormat, codec.emit_table,
                          self.published("table7"), "xml")

    def test_canonical_order(self):
        h = self.labels.subgroup("G_2^12")
        cb = codec.build_codebook(h, [1, 2], state.builtin_state("ghz3"))
        self.assertEqual(h.sorted_elements(), list(cb.operators))
        self.assertTrue(cb.operators[0].is_identity())


class TestPublishedTables(CodebookMixin, base.BaseTestCase):
    def test_cluster4(self):
        cb = self.published("table1")
        self.assertEqual(16, len(cb))
        self.assertEqual((1, 4), cb.positions)
        rows = dict((str(r.operator), _items(r.state)) for r in cb.rows())
        self.assertEqual(base.items("+0000,+0011,+1100,-1111"), rows["II"])
        self.assertEqual(base.items("+0001,+0010,+1101,-1110"), rows["IX"])
        self.assertEqual(base.items("+0000,-0011,+1100,+1111"), rows["IZ"])
        self.assertEqual(base.items("+1000,+1011,+0100,-0111"), rows["XI"])
        self.assertEqual(base.items("+0000,-0011,-1100,-1111"), rows["ZZ"])

    def test_w1_4_relabelled_rows(self):
        # Codewords printed against the wrong operator in the published
        # table, keyed by the operator that actually produces them.
        printed = {
            "IZ": "-1100,-0110,+0011,+1001",
            "IY": "+1000,+0010,-0111,-1101",
            "YX": "+0000,-1010,-1111,+0101",
            "YI": "+0100,-1110,-1011,+0001",
            "YZ": "-0100,+1110,-1011,+0001",
            "YY": "+0000,-1010,+1111,-0101",
        }
        cb = self.published("table4")
        rows = dict((str(r.operator), _items(r.state)) for r in cb.rows())
        for op, items in printed.items():
            self.assertEqual(base.items(items), rows[op], op)
        self.assertEqual(pauli.parse_op("IY"), cb.operators[2])
        self.assertEqual(pauli.parse_op("IZ"), cb.operators[3])
        self.assertEqual(base.items("+1000,+0010,-0111,-1101"),
                         _items(codec.encode(cb, 2)))
        self.assertEqual(base.items("-1100,-0110,+0011,+1001"),
                         _items(codec.encode(cb, 3)))

    def test_cluster5_rejected(self):
        entry = self.labels.table("table2")
        e = self.assertRaises(
            selector.VerificationFailed, codec.build_codebook,
            self.labels.subgroup(entry["subgroup"]), entry["positions"],
            state.builtin_state(entry["state"]),
            self.labels.ordering(entry["ordering"]))
        self.assertEqual(pauli.parse_op("YXY"), e.witness.operator)
        self.assertEqual(-1, e.witness.expectation)

    def test_cluster5_tabulated(self):
        rows = codec.tabulate(self.labels.ordering("table2"), [1, 2, 3],
                              state.builtin_state("cluster5"))
        self.assertEqual(32, len(rows))
        expected = {
            0: ("III", "+00000,+00111,+11011,-11100"),
            1: ("IXI", "+01000,+01111,+10011,-10100"),
            2: ("YII", "-10000,-10111,+01011,-01100"),
            11: ("YXY", "+11100,-11011,-00111,-00000"),
            17: ("IZI", "+00000,+00111,-11011,+11100"),
            31: ("YZZ", "-10000,+10111,-01011,-01100"),
        }
        for index, (op, items) in expected.items():
            self.assertEqual(pauli.parse_op(op), rows[index].operator)
            self.assertEqual(base.items(items), _items(rows[index].state))

    def test_w3_tabulated(self):
        w = state.builtin_state("w3")
        rows = codec.tabulate(self.labels.ordering("table3"), [1, 2], w)
        self.assertEqual(pauli.parse_op("IZ"), rows[5].operator)
        self.assertEqual(base.items("+001,-010,+100"), _items(rows[5].state))
        self.assertEqual(fractions.Fraction(1, 9),
                         state.distinguishability(w, rows[5].state))

    def test_tabulate_markdown(self):
        rows = codec.tabulate(self.labels.ordering("table3"), [1, 2],
                              state.builtin_state("w3"))
        text = codec.emit_rows(rows, state.PositionSet([1, 2]))
        self.assertIn(u"| U5 = I⊗Z | 1/√3(|001⟩ - |010⟩ + |100⟩) |", text)


class TestGoldenTables(CodebookMixin, base.BaseTestCase):
    def assertGolden(self, name, text):
        self.assertEqual(_golden(name), _normalize(text))

    def test_table1(self):
        self.assertGolden("table1", codec.emit_table(self.published("table1")))

    def test_table4(self):
        self.assertGolden("table4", codec.emit_table(self.published("table4")))

    def test_table7(self):
        self.assertGolden("table7", codec.emit_table(self.published("table7")))

    def test_table2(self):
        positions = state.PositionSet([1, 2, 3])
        rows = codec.tabulate(self.labels.ordering("table2"), positions,
                              state.builtin_state("cluster5"))
        self.assertGolden("table2", codec.emit_rows(rows, positions))

    def test_table5(self):
        self.assertGolden("table5", codec.emit_multiplication_table(
            self.labels.ordering("table7")))

    def test_whitespace_is_ignored(self):
        text = codec.emit_table(self.published("table7"))
        self.assertEqual(_normalize(text),
                         _normalize(text.replace(" | ", "  |   ") + "\n\n"))


class TestOrdering(CodebookMixin, base.BaseTestCase):
    def test_incomplete(self):
        self.assertRaises(codec.InvalidOrdering, codec.build_codebook,
                          self.labels.subgroup("G_2^12"), [1, 2],
                          state.builtin_state("ghz3"),
                          base.ops("II", "IZ", "XI"))

    def test_foreign_element(self):
        ordering = self.labels.ordering("table7")
        ordering[-1] = pauli.parse_op("ZZ")
        self.assertRaises(codec.InvalidOrdering, codec.build_codebook,
                          self.labels.subgroup("G_2^12"), [1, 2],
                          state.builtin_state("ghz3"), ordering)

    def test_identity_first(self):
        ordering = self.labels.ordering("table7")
        ordering[0], ordering[1] = ordering[1], ordering[0]
        self.assertRaises(codec.InvalidOrdering, codec.build_codebook,
                          self.labels.subgroup("G_2^12"), [1, 2],
                          state.builtin_state("ghz3"), ordering)


class TestEncodeDecode(CodebookMixin, base.BaseTestCase):
    def test_encode(self):
        cb = self.published("table7")
        self.assertEqual(base.items("-110,+001"),
                         _items(codec.encode(cb, 4)))
        self.assertRaises(codec.IndexOutOfRange, codec.encode, cb, 8)
        self.assertRaises(codec.IndexOutOfRange, codec.encode, cb, -1)

    def test_decode(self):
        cb = self.published("table7")
        self.assertEqual(4, codec.decode(cb, state.parse_state("-110,+001")))
        self.assertEqual(4, codec.decode(cb, state.parse_state("+110,-001")))
        self.assertEqual(7, codec.decode(cb, state.parse_state("-101,-010")))

    def test_decode_errors(self):
        cb = self.published("table7")
        self.assertRaises(codec.NoMatch, codec.decode, cb,
                          state.parse_state("+010,+001"))
        self.assertRaises(codec.NoMatch, codec.decode, cb,
                          state.parse_state("+000"))
        self.assertRaises(state.StateMismatch, codec.decode, cb,
                          state.builtin_state("bell"))


class TestRoundtripAllAccepted(base.BaseTestCase):
    scenarios = [
        ("bell", {"name": "bell", "positions": None}),
        ("ghz3", {"name": "ghz3", "positions": None}),
        ("w1_4", {"name": "w1_4", "positions": None}),
        ("cluster4", {"name": "cluster4", "positions": None}),
        ("cluster5", {"name": "cluster5", "positions": [1, 2, 4]}),
    ]

    def test_decode_encode(self):
        s = state.builtin_state(self.name)
        report = selector.select(s, positions=self.positions)
        entries = [e for e in report.entries if e.accepted]
        self.assertNotEqual([], entries)
        for e in entries:
            cb = codec.build_codebook(e.subgroup, e.positions, s)
            for index in range(len(cb)):
                self.assertEqual(index,
                                 codec.decode(cb, codec.encode(cb, index)))


class TestSimulate(CodebookMixin, base.BaseTestCase):
    def test_roundtrip(self):
        cb = self.published("table7")
        output, transcript = codec.simulate_roundtrip(cb, "101110")
        self.assertEqual("101110", output)
        self.assertEqual(2, transcript.channel_uses)
        self.assertEqual(4, transcript.qubits_sent)
        self.assertEqual(6, transcript.bits_delivered)
        self.assertEqual(fractions.Fraction(3, 2), transcript.efficiency)
        self.assertEqual([5, 6], [c.index for c in transcript.chunks])
        self.assertEqual(pauli.parse_op("YY"), transcript.chunks[0].operator)

    def test_empty(self):
        output, transcript = codec.simulate_roundtrip(
            self.published("table7"), "")
        self.assertEqual("", output)
        self.assertEqual(0, transcript.channel_uses)
        self.assertIsNone(transcript.efficiency)

    def test_bad_messages(self):
        cb = self.published("table7")
        self.assertRaises(codec.InvalidMessageLength,
                          codec.simulate_roundtrip, cb, "1010")
        self.assertRaises(codec.InvalidMessage,
                          codec.simulate_roundtrip, cb, "10a")

    def test_trailing_newline_is_rejected(self):
        self.assertRaises(codec.InvalidMessage, codec.simulate_roundtrip,
                          self.published("table7"), "01\n")
        self.assertRaises(codec.InvalidMessage, codec.simulate_roundtrip,
                          self.published("table1"), "010\n")

    def test_two_bits_per_qubit(self):
        cb = self.published("table1")
        output, transcript = codec.simulate_roundtrip(cb, "0110" "1111")
        self.assertEqual("01101111", output)
        self.assertEqual(2, transcript.efficiency)

    def test_json(self):
        transcript = codec.simulate_roundtrip(self.published("table7"),
                                              "111")[1]
        data = json.loads(json.dumps(transcript))
        self.assertEqual("3/2", data["efficiency"])
        self.assertEqual("ZY", data["chunks"][0]["operator"])
        self.assertEqual(u"1/√2(-|010⟩ - |101⟩)",
                         data["chunks"][0]["codeword"])


class TestMultiplicationTable(CodebookMixin, base.BaseTestCase):
    def test_cells(self):
        ordering = self.labels.ordering("table7")
        grid = codec.multiplication_table(ordering)
        names = [[str(g) for g in row] for row in grid]
        self.assertEqual(["IZ", "II", "XZ", "XI", "YY", "YX", "ZY", "ZX"],
                         names[1])
        self.assertEqual(["XI", "XZ", "II", "IZ", "ZX", "ZY", "YX", "YY"],
                         names[2])

    def test_latin_square(self):
        ordering = self.labels.ordering("table7")
        grid = codec.multiplication_table(ordering)
        for i, row in enumerate(grid):
            self.assertEqual(set(ordering), set(row))
            self.assertEqual(set(ordering), set(r[i] for r in grid))
            self.assertTrue(row[i].is_identity())

    def test_markdown(self):
        text = codec.emit_multiplication_table(
            self.labels.ordering("table7"))
        lines = text.splitlines()
        self.assertEqual("| · | II | IZ | XI | XZ | YX | YY | ZX | ZY |",
                         lines[0])
        self.assertEqual("| IZ | IZ | II | XZ | XI | YY | YX | ZY | ZX |",
                         lines[3])

    def test_subgroup(self):
        h = self.labels.subgroup("G_2^12")
        data = json.loads(codec.emit_multiplication_table(
            h, codec.FORMAT_JSON))
        self.assertEqual([str(g) for g in h.sorted_elements()],
                         data["operators"])
        self.assertEqual(8, len(data["products"]))

    def test_identity(self):
        self.assertEqual(
            "| · | I |\n|---|---|\n| I | I |\n",
            codec.emit_multiplication_table([pauli.identity(1)]))
        self.assertEqual(
            u"·,I\nI,I\n",
            codec.emit_multiplication_table([pauli.identity(1)],
                                            codec.FORMAT_CSV))


class TestCodebookProperties(CodebookMixin, base.BaseTestCase):
    def test_identity_row(self):
        for name in ("table1", "table4", "table7"):
            cb = self.published(name)
            self.assertEqual(cb.base, codec.encode(cb, 0))
            self.assertEqual(0, codec.decode(cb, cb.base))

    def test_w1_4_full_set(self):
        cb = self.published("table4")
        self.assertEqual(base.items("+1100,-0110,+0011,-1001"),
                         _items(codec.encode(cb, 15)))
        canonical = codec.build_codebook(
            subgroup.whole_group(2), [1, 2], cb.base)
        self.assertEqual(set(canonical.codewords), set(cb.codewords))
        for a, b in itertools.combinations(cb.codewords, 2):
            self.assertEqual(0, state.inner_product(a, b))

    def test_bell(self):
        cb = codec.build_codebook(subgroup.whole_group(1), [1],
                                  state.builtin_state("bell"))
        self.assertEqual(4, len(cb))
        self.assertEqual(base.items("+00,-11"), _items(codec.encode(cb, 1)))

    def test_random_roundtrips(self):
        rng = random.Random(7)
        cb = self.published("table1")
        for _ in range(10):
            bits = "".join(rng.choice("01") for _ in range(16))
            output, transcript = codec.simulate_roundtrip(cb, bits)
            self.assertEqual(bits, output)
            self.assertEqual(4, transcript.channel_uses)
