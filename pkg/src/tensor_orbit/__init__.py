"""Exact counting of O(N) tensor invariants and related computations.

Invariants of 2n real rank-d tensors correspond to d-regular edge-coloured
graphs on 2n vertices, i.e. to double cosets of S_n[S_2]^d and diagonal
S_2n in S_2n^d. The package counts them several independent ways, builds
the algebra they span at small sizes, evaluates Gaussian correlators as
polynomials in N, and expands one symplectic invariant.
"""
from ._accel import HAVE_NUMBA, backend, set_threads
from .errors import BudgetExceeded, CrossCheckError
from .npoly import NPolynomial
from .perm import Permutation, compose, cycle_type, inverse, parse_permutation, tilde
from .partitions import dim_sn, dim_un, is_even_partition, partitions_of, sym
from .wreath import wreath_class_size, wreath_class_sizes
from .counting import (connected_sequence, count_connected, count_invariants, count_read,
                       plethystic_exp, plethystic_log, sequence)
from .characters import (character, character_table, count_invariants_kronecker,
                         count_invariants_squares, kronecker, kronecker_convolution, kronecker_k)

__version__ = "0.1.0"

__all__ = [
    "HAVE_NUMBA", "backend", "set_threads", "BudgetExceeded", "CrossCheckError", "NPolynomial",
    "Permutation", "compose", "cycle_type", "inverse", "parse_permutation", "tilde",
    "dim_sn", "dim_un", "is_even_partition", "partitions_of", "sym",
    "wreath_class_size", "wreath_class_sizes",
    "connected_sequence", "count_connected", "count_invariants", "count_read",
    "plethystic_exp", "plethystic_log", "sequence",
    "character", "character_table", "count_invariants_kronecker", "count_invariants_squares",
    "kronecker", "kronecker_convolution", "kronecker_k",
]
