"""Linear algebra over F_p on integer matrices, through galois field arrays."""

import galois
import numpy as np

from utils.errors import InvalidParameterError


def to_gf(matrix, p):
    GF = galois.GF(p)
    return GF(np.asarray(matrix, dtype=np.int64) % p)


def rank(matrix, p):
    return int(np.linalg.matrix_rank(to_gf(matrix, p)))


def null_space(matrix, p):
    """Basis of {y : matrix @ y = 0} as rows of an integer array."""
    return to_gf(matrix, p).null_space().view(np.ndarray).astype(np.int64)


def solve(matrix, rhs, p):
    """
    One solution x of matrix @ x = rhs over F_p (free variables set to zero).

    Args:
        matrix: r x t integer matrix
        rhs: length-r integer vector
        p (int): Prime modulus

    Returns:
        numpy.ndarray: x as integers in [0, p)

    Raises:
        InvalidParameterError: If rhs is not in the column space of matrix
    """
    matrix = np.asarray(matrix, dtype=np.int64)
    rhs = np.asarray(rhs, dtype=np.int64).reshape(-1, 1)
    cols = matrix.shape[1]
    reduced = to_gf(np.hstack((matrix, rhs)), p).row_reduce().view(np.ndarray).astype(np.int64)

    x = np.zeros(cols, dtype=np.int64)
    for row in reduced:
        nonzero = np.flatnonzero(row)
        if nonzero.size == 0:
            continue
        pivot = nonzero[0]
        if pivot == cols:
            raise InvalidParameterError("the right-hand side is not in the span of the chosen columns")
        x[pivot] = row[cols]
    return x
