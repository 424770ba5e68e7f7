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
import itertools

import numpy
import testscenarios

from densecode import gf2
from densecode.tests import base


load_tests = testscenarios.load_tests_apply_scenarios


class TestVectors(base.BaseTestCase):
    def test_pack_unpack(self):
        matrix = gf2.from_vectors([0b101, 0b011], 3)
        numpy.testing.assert_array_equal([[1, 0, 1], [0, 1, 1]], matrix)
        self.assertEqual((0b101, 0b011), gf2.to_vectors(matrix))

    def test_empty(self):
        matrix = gf2.from_vectors([], 4)
        self.assertEqual((0, 4), matrix.shape)
        self.assertEqual((), gf2.to_vectors(matrix))

    def test_row_reduce(self):
        result = gf2.row_reduce(gf2.from_vectors([0b110, 0b011, 0b101], 3))
        self.assertEqual(2, result.rank)
        self.assertEqual((0, 1), result.pivots)
        self.assertEqual((0b101, 0b011), gf2.to_vectors(result.matrix))

    def test_span(self):
        matrix = gf2.from_vectors([0b100, 0b010], 3)
        self.assertEqual({0, 0b010, 0b100, 0b110},
                         set(gf2.to_vectors(gf2.span(matrix))))
        self.assertEqual((0,), gf2.to_vectors(
            gf2.span(gf2.from_vectors([], 3))))

    def test_nullspace(self):
        matrix = gf2.from_vectors([0b1100, 0b0011], 4)
        null = gf2.to_vectors(gf2.nullspace(matrix))
        self.assertEqual(2, len(null))
        for v in null:
            for row in (0b1100, 0b0011):
                self.assertEqual(0, bin(v & row).count("1") % 2)

    def test_nullspace_full_rank(self):
        matrix = gf2.from_vectors([1 << i for i in range(3)], 3)
        self.assertEqual((0, 3), gf2.nullspace(matrix).shape)


class TestGaussianBinomial(base.BaseTestCase):
    def test_known_values(self):
        self.assertEqual(15, gf2.gaussian_binomial(4, 3))
        self.assertEqual(35, gf2.gaussian_binomial(4, 2))
        self.assertEqual(63, gf2.gaussian_binomial(6, 5))
        self.assertEqual(1, gf2.gaussian_binomial(6, 6))
        self.assertEqual(1, gf2.gaussian_binomial(6, 0))
        self.assertEqual(0, gf2.gaussian_binomial(3, 4))


class TestEnumerateRREF(base.BaseTestCase):
    scenarios = [
        ("%dx%d" % (k, width), {"width": width, "k": k})
        for width, k in ((4, 1), (4, 2), (4, 3), (5, 2), (6, 5))
    ]

    def test_count_and_uniqueness(self):
        spans = set()
        for matrix in gf2.enumerate_rref(self.width, self.k):
            self.assertEqual(self.k, gf2.rank(matrix))
            spans.add(frozenset(gf2.to_vectors(gf2.span(matrix))))
        self.assertEqual(gf2.gaussian_binomial(self.width, self.k),
                         len(spans))

    def test_already_reduced(self):
        for matrix in itertools.islice(
                gf2.enumerate_rref(self.width, self.k), 40):
            numpy.testing.assert_array_equal(
                matrix, gf2.row_reduce(matrix).matrix)
