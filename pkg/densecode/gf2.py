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
"""Linear algebra over GF(2) on numpy bit matrices.

Rows are vectors, column 0 is the most significant bit when a row is packed
into an integer.
"""
import collections
import itertools

import numpy


RowReduceResult = collections.namedtuple(
    'RowReduceResult', ['matrix', 'rank', 'pivots'])


def to_gf2(matrix):
    return numpy.array(matrix, dtype=numpy.uint8) % 2


def from_vectors(vectors, width):
    """Unpack integers into the rows of a ``len(vectors) x width`` matrix."""
    vectors = numpy.array(list(vectors), dtype=numpy.int64).reshape(-1, 1)
    shifts = numpy.arange(width - 1, -1, -1, dtype=numpy.int64)
    return ((vectors >> shifts) & 1).astype(numpy.uint8)


def to_vectors(matrix):
    """Pack every row of a bit matrix into an integer."""
    matrix = to_gf2(matrix)
    width = matrix.shape[1]
    weights = numpy.left_shift(
        1, numpy.arange(width - 1, -1, -1, dtype=numpy.int64))
    return tuple(int(v) for v in matrix.astype(numpy.int64).dot(weights))


def row_reduce(matrix):
    """Reduced row echelon form; zero rows are dropped."""
    mat = to_gf2(matrix).copy()
    m, n = mat.shape
    pivots = []
    row = 0
    for col in range(n):
        if row == m:
            break
        candidates = numpy.nonzero(mat[row:, col])[0]
        if len(candidates) == 0:
            continue
        pivot = row + candidates[0]
        if pivot != row:
            mat[[row, pivot]] = mat[[pivot, row]]
        for r in numpy.nonzero(mat[:, col])[0]:
            if r != row:
                mat[r, :] ^= mat[row, :]
        pivots.append(col)
        row += 1
    return RowReduceResult(matrix=mat[:row], rank=row, pivots=tuple(pivots))


def rank(matrix):
    return row_reduce(matrix).rank


def span(matrix):
    """All 2^k combinations of the k rows of ``matrix``."""
    mat = to_gf2(matrix)
    k = mat.shape[0]
    indexes = numpy.arange(1 << k, dtype=numpy.int64).reshape(-1, 1)
    coefficients = (indexes >> numpy.arange(k - 1, -1, -1)) & 1
    return (coefficients.dot(mat.astype(numpy.int64)) % 2).astype(
        numpy.uint8)


def gaussian_binomial(m, k, q=2):
    """Number of k-dimensional subspaces of an m-dimensional space."""
    if k < 0 or k > m:
        return 0
    num = denom = 1
    for i in range(k):
        num *= q ** (m - i) - 1
        denom *= q ** (i + 1) - 1
    return num // denom


def enumerate_rref(width, k):
    """Yield every k x width reduced row echelon matrix of rank k.

    Each k-dimensional subspace of GF(2)^width appears exactly once.
    Pivot patterns come in lexicographic order, free entries in binary
    counting order.
    """
    if k == 0:
        yield numpy.zeros((0, width), dtype=numpy.uint8)
        return
    for pivots in itertools.combinations(range(width), k):
        pivot_set = set(pivots)
        free = [(i, j)
                for i, p in enumerate(pivots)
                for j in range(p + 1, width)
                if j not in pivot_set]
        base = numpy.zeros((k, width), dtype=numpy.uint8)
        base[numpy.arange(k), list(pivots)] = 1
        for assignment in itertools.product((0, 1), repeat=len(free)):
            mat = base.copy()
            for (i, j), bit in zip(free, assignment):
                mat[i, j] = bit
            yield mat


def nullspace(matrix):
    """Basis of {v : matrix . v = 0}, one vector per row."""
    mat = to_gf2(matrix)
    width = mat.shape[1]
    reduced = row_reduce(mat)
    pivots = set(reduced.pivots)
    basis = []
    for free in range(width):
        if free in pivots:
            continue
        vec = numpy.zeros(width, dtype=numpy.uint8)
        vec[free] = 1
        for row, col in enumerate(reduced.pivots):
            if reduced.matrix[row, free]:
                vec[col] = 1
        basis.append(vec)
    if not basis:
        return numpy.zeros((0, width), dtype=numpy.uint8)
    return numpy.vstack(basis)
