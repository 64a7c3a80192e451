"""Small containers for eigenvalue triples and fully symmetric rank-4 tensors.

Indices are zero-based throughout the Python API; the CLI labels components
one-based (``A1122``) to match the usual tensor notation.
"""

import enum
import itertools
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

MULTI_INDICES = tuple(itertools.combinations_with_replacement(range(3), 4))
_POSITION = {idx: n for n, idx in enumerate(MULTI_INDICES)}


class EigenTriple(NamedTuple):
    """Three eigenvalues of a diagonal tensor, either A (a_i) or B (b_i)."""

    v1: float
    v2: float
    v3: float

    @classmethod
    def of(cls, values):
        v = np.asarray(values, dtype=float).reshape(-1)
        if v.shape != (3,):
            raise ValueError(f"expected three eigenvalues, got {v.shape[0]}")
        return cls(float(v[0]), float(v[1]), float(v[2]))


class ClosureMethod(enum.Enum):
    EXACT = "exact"
    PLANAR = "planar"
    UNIDIRECTIONAL = "unidirectional"
    ASYM1 = "asym1"
    ASYM2 = "asym2"
    ASYM4 = "asym4"
    ASYM5 = "asym5"

    @property
    def is_asymptotic(self):
        return self.name.startswith("ASYM")


@dataclass(frozen=True)
class SymTensor4:
    """Fully symmetric 3D rank-4 tensor stored as its 15 independent components.

    ``values[n]`` belongs to the sorted multi-index ``MULTI_INDICES[n]``;
    indexing with any permutation of a multi-index returns the same entry.
    """

    values: tuple

    def __post_init__(self):
        if len(self.values) != len(MULTI_INDICES):
            raise ValueError(f"need {len(MULTI_INDICES)} components, got {len(self.values)}")

    def __getitem__(self, idx):
        return self.values[_POSITION[tuple(sorted(idx))]]

    @classmethod
    def from_iijj(cls, m):
        """Tensor whose only nonzero entries are the A_iijj given by the symmetric 3x3 ``m``.

        This is the structure of every moment tensor of a distribution that is
        diagonal in the coordinate axes.
        """
        m = np.asarray(m, dtype=float)
        values = []
        for idx in MULTI_INDICES:
            counts = np.bincount(idx, minlength=3)
            if np.any(counts % 2):
                values.append(0.0)
                continue
            pair = [i for i in range(3) if counts[i]]
            values.append(float(m[pair[0], pair[-1]]))
        return cls(tuple(values))

    @classmethod
    def from_array(cls, arr, sym_tol=1e-12):
        """Collect the independent components of a full (3, 3, 3, 3) array."""
        arr = np.asarray(arr, dtype=float)
        if arr.shape != (3, 3, 3, 3):
            raise ValueError(f"expected shape (3, 3, 3, 3), got {arr.shape}")
        scale = max(np.max(np.abs(arr)), 1.0)
        for perm in itertools.permutations(range(4)):
            if np.max(np.abs(arr - arr.transpose(perm))) > sym_tol * scale:
                raise ValueError("array is not fully symmetric")
        return cls(tuple(float(arr[idx]) for idx in MULTI_INDICES))

    def to_array(self):
        arr = np.empty((3, 3, 3, 3))
        for idx in itertools.product(range(3), repeat=4):
            arr[idx] = self[idx]
        return arr

    def iijj(self):
        """3x3 matrix of the components A_iijj."""
        return np.array([[self[(i, i, j, j)] for j in range(3)] for i in range(3)])

    def contraction(self):
        """Vector sum_j A_iijj, which equals the second moment eigenvalues a_i."""
        return self.iijj().sum(axis=1)

    def max_odd_component(self):
        """Largest magnitude among components with some index of odd multiplicity."""
        odd = [
            abs(v)
            for idx, v in zip(MULTI_INDICES, self.values)
            if np.any(np.bincount(idx, minlength=3) % 2)
        ]
        return max(odd)
