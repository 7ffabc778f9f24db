"""Exact linear algebra over GF(2).

Matrices are stored bit-packed, one row of uint8 words per matrix row
(numpy.packbits with little bit order, so column c lives in byte c >> 3
at bit c & 7). Gaussian elimination XORs whole packed rows at once and
always pivots on the first row carrying a one in the current column, so
that kernels and solutions are reproducible.
"""

# installed modules
import numpy as np


def _as_bits(entries, shape=None):
    arr = np.asarray(entries)
    if arr.size == 0:
        if shape is None:
            shape = arr.shape if arr.ndim == 2 else (0, 0)
        return np.zeros(shape, dtype=np.uint8)
    if arr.ndim != 2:
        raise ValueError('a BitMatrix needs a two-dimensional array '
                         '(got shape {})'.format(arr.shape))
    if shape is not None and tuple(shape) != arr.shape:
        raise ValueError('entries of shape {} do not match shape {}'.format(
            arr.shape, tuple(shape)))
    if not np.isin(arr, (0, 1)).all():
        raise ValueError('BitMatrix entries must be 0 or 1')
    return arr.astype(np.uint8)


def _as_vector(vector, length):
    vec = np.asarray(vector, dtype=np.int64).reshape(-1)
    if vec.shape[0] != length:
        raise ValueError('vector of length {} where {} was expected'.format(
            vec.shape[0], length))
    if not np.isin(vec, (0, 1)).all():
        raise ValueError('GF(2) vector entries must be 0 or 1')
    return vec.astype(np.uint8)


def _pack(dense):
    return np.packbits(dense, axis=1, bitorder='little')


def _unpack(packed, cols):
    if packed.shape[0] == 0 or cols == 0:
        return np.zeros((packed.shape[0], cols), dtype=np.uint8)
    return np.unpackbits(packed, axis=1, count=cols, bitorder='little')


class BitMatrix(object):
    """Immutable matrix over GF(2); zero rows or columns are allowed."""

    __slots__ = ('_packed', '_rows', '_cols')

    def __init__(self, entries, shape=None):
        dense = _as_bits(entries, shape)
        self._rows, self._cols = dense.shape
        self._packed = _pack(dense)
        self._packed.setflags(write=False)

    @classmethod
    def zeros(cls, rows, cols):
        return cls(np.zeros((rows, cols), dtype=np.uint8), shape=(rows, cols))

    @classmethod
    def from_rows(cls, rows, cols):
        """Builds a matrix from a list of rows, each a sequence of bits;
        cols is needed to size empty matrices."""
        if len(rows) == 0:
            return cls.zeros(0, cols)
        return cls(rows, shape=(len(rows), cols))

    @property
    def rows(self):
        return self._rows

    @property
    def cols(self):
        return self._cols

    @property
    def shape(self):
        return (self._rows, self._cols)

    @property
    def packed(self):
        return self._packed

    def __getitem__(self, index):
        row, col = index
        if not (0 <= row < self._rows and 0 <= col < self._cols):
            raise IndexError('entry ({}, {}) out of a {}x{} matrix'.format(
                row, col, self._rows, self._cols))
        return int((self._packed[row, col >> 3] >> (col & 7)) & 1)

    def to_dense(self):
        return _unpack(self._packed, self._cols)

    def transpose(self):
        return BitMatrix(self.to_dense().T.copy(),
                         shape=(self._cols, self._rows))

    def dot(self, vector):
        """M·v over GF(2), as a uint8 vector"""
        vec = _as_vector(vector, self._cols)
        return ((self.to_dense().astype(np.int64) @ vec) % 2).astype(np.uint8)

    def __eq__(self, other):
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return (self.shape == other.shape and
                np.array_equal(self._packed, other.packed))

    def __hash__(self):
        return hash((self.shape, self._packed.tobytes()))

    def __repr__(self):
        return 'BitMatrix({}x{}, {})'.format(
            self._rows, self._cols, self.to_dense().tolist())


def _row_reduce(packed, cols):
    """Reduced row echelon form of a packed matrix.

    Returns the reduced packed rows (a copy) and the pivot columns.
    """
    mat = packed.copy()
    rows = mat.shape[0]
    pivots = []
    row = 0

    for col in range(cols):
        if row == rows:
            break
        byte, bit = col >> 3, col & 7
        column = (mat[:, byte] >> bit) & 1
        candidates = np.flatnonzero(column[row:])
        if candidates.size == 0:
            continue
        pivot = row + int(candidates[0])
        if pivot != row:
            mat[[row, pivot]] = mat[[pivot, row]]
            column = (mat[:, byte] >> bit) & 1
        mask = column.astype(bool)
        mask[row] = False
        mat[mask] ^= mat[row]
        pivots.append(col)
        row += 1

    return mat, pivots


def rank(matrix):
    """Dimension of the row space of matrix over GF(2)"""
    _, pivots = _row_reduce(matrix.packed, matrix.cols)
    return len(pivots)


def nullspace_basis(matrix):
    """Basis of {v : M·v = 0}.

    Args:
        matrix (BitMatrix): any shape.

    Returns:
        basis (list): cols - rank(matrix) independent uint8 vectors, one
            per free column in increasing order.
    """
    reduced, pivots = _row_reduce(matrix.packed, matrix.cols)
    dense = _unpack(reduced, matrix.cols)
    pivot_set = set(pivots)

    basis = []
    for free in range(matrix.cols):
        if free in pivot_set:
            continue
        vec = np.zeros(matrix.cols, dtype=np.uint8)
        vec[free] = 1
        for row, col in enumerate(pivots):
            if dense[row, free]:
                vec[col] = 1
        basis.append(vec)
    return basis


def solve(matrix, vector):
    """One solution x of M·x = b, or None when b is not in the column
    space. Free variables are set to zero.

    Raises:
        ValueError: len(b) differs from the number of rows.
    """
    b = _as_vector(vector, matrix.rows)
    augmented = np.concatenate(
        [matrix.to_dense(), b.reshape(-1, 1)], axis=1)
    reduced, pivots = _row_reduce(_pack(augmented), matrix.cols + 1)

    if pivots and pivots[-1] == matrix.cols:
        return None

    dense = _unpack(reduced, matrix.cols + 1)
    solution = np.zeros(matrix.cols, dtype=np.uint8)
    for row, col in enumerate(pivots):
        solution[col] = dense[row, matrix.cols]
    return solution


def row_space_contains(matrix, vector):
    """True if vector is a GF(2) combination of the rows of matrix"""
    vec = _as_vector(vector, matrix.cols)
    if matrix.rows == 0:
        return not vec.any()
    stacked = BitMatrix(np.vstack([matrix.to_dense(), vec]),
                        shape=(matrix.rows + 1, matrix.cols))
    return rank(stacked) == rank(matrix)
