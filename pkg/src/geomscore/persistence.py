"""Persistence barcodes of witness filtrations via boundary-matrix reduction.

Simplices are ordered by (appearance, dimension, vertex order) and the
boundary matrix over the two-element field is reduced column by column with
the clearing ("twist") optimization: columns of dimension 2 are reduced
first, and the column of any edge they pair with is cleared outright, since
it is known to reduce to zero. Columns are sparse sorted index lists merged
by symmetric difference; initial columns have at most 3 entries.
"""

import math
from dataclasses import dataclass

from .errors import ParameterError
from .witness import WitnessFiltration


@dataclass(frozen=True)
class PersistenceInterval:
    """Birth-death span of one homology class; death is math.inf when unpaired."""

    dim: int
    birth: float
    death: float


@dataclass(frozen=True, eq=False)
class Barcode:
    intervals: tuple
    alpha_max: float

    def in_dim(self, dim: int) -> list:
        return [iv for iv in self.intervals if iv.dim == dim]


def compute_persistence(filtration: WitnessFiltration, max_hom_dim: int = 1) -> Barcode:
    """Barcode of the filtration in dimensions 0..max_hom_dim (at most 1).

    The filtration's invariants are re-checked up front; a violated input is
    an internal-consistency error, never silently reduced.
    """
    if max_hom_dim not in (0, 1):
        raise ParameterError(f"max_hom_dim must be 0 or 1, got {max_hom_dim}")
    filtration.validate()

    simps = sorted(
        filtration.simplices, key=lambda fs: (fs.appearance, len(fs.vertices), fs.vertices)
    )
    index = {fs.vertices: i for i, fs in enumerate(simps)}

    # columns as integer bitmasks: GF(2) column addition is XOR, the pivot
    # (lowest nonzero row in reduction order) is the highest set bit
    columns: list = []
    by_dim: tuple = ([], [], [])
    for j, fs in enumerate(simps):
        v = fs.vertices
        if len(v) == 1:
            columns.append(0)
        elif len(v) == 2:
            columns.append((1 << index[(v[0],)]) | (1 << index[(v[1],)]))
        else:
            columns.append(
                (1 << index[(v[0], v[1])])
                | (1 << index[(v[0], v[2])])
                | (1 << index[(v[1], v[2])])
            )
        by_dim[len(v) - 1].append(j)

    pivot: dict[int, int] = {}
    killer_of: dict[int, int] = {}
    cleared: set[int] = set()
    for dim in (2, 1):
        for j in by_dim[dim]:
            if j in cleared:
                continue
            col = columns[j]
            while col:
                other = pivot.get(col.bit_length() - 1)
                if other is None:
                    break
                col ^= columns[other]
            columns[j] = col
            if col:
                low = col.bit_length() - 1
                pivot[low] = j
                killer_of[low] = j
                if dim == 2:
                    cleared.add(low)
                    columns[low] = 0

    killers = set(killer_of.values())
    intervals = []
    for i, fs in enumerate(simps):
        dim = len(fs.vertices) - 1
        if dim > max_hom_dim or i in killers:
            continue
        j = killer_of.get(i)
        death = simps[j].appearance if j is not None else math.inf
        intervals.append(PersistenceInterval(dim, fs.appearance, death))
    return Barcode(tuple(intervals), filtration.alpha_max)
