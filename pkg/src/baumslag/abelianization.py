"""Integer Smith normal form and presentation abelianization.

Everything is exact arbitrary-precision integer arithmetic on small
matrices (relator exponent matrices of the presentations built in this
package), so no external linear algebra is used.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .words import Presentation, exponent_sums


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Invariant factors d1 | d2 | ... of an integer matrix.

    Returns the positive diagonal entries of the Smith normal form in
    divisibility order (trailing zero diagonal entries are dropped).
    """
    a = [list(map(int, row)) for row in matrix]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    t = 0
    while t < min(nrows, ncols):
        # Pick the submatrix entry of least nonzero magnitude as pivot.
        pivot = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if a[i][j] != 0 and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        i, j = pivot
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            # Clear the pivot column, improving the pivot on any remainder.
            restart = False
            for i in range(t + 1, nrows):
                if a[i][t] == 0:
                    continue
                q = a[i][t] // a[t][t]
                for j in range(t, ncols):
                    a[i][j] -= q * a[t][j]
                if a[i][t] != 0:
                    a[t], a[i] = a[i], a[t]
                    restart = True
                    break
            if restart:
                continue
            # Clear the pivot row similarly.
            for j in range(t + 1, ncols):
                if a[t][j] == 0:
                    continue
                q = a[t][j] // a[t][t]
                for i in range(t, nrows):
                    a[i][j] -= q * a[i][t]
                if a[t][j] != 0:
                    for row in a:
                        row[t], row[j] = row[j], row[t]
                    restart = True
                    break
            if restart:
                continue
            # Enforce divisibility: the pivot must divide the rest.
            offender = None
            for i in range(t + 1, nrows):
                for j in range(t + 1, ncols):
                    if a[i][j] % a[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            for j in range(t, ncols):
                a[t][j] += a[offender][j]
        t += 1
    factors = []
    for k in range(t):
        d = abs(a[k][k])
        if d != 0:
            factors.append(d)
    return factors


@dataclass(frozen=True)
class Abelianization:
    """Z^free_rank times the product of Z/d for d in torsion (each d > 1,
    in divisibility order)."""

    free_rank: int
    torsion: tuple[int, ...]

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " x ".join(parts) if parts else "1"


def abelianization(pres: Presentation) -> Abelianization:
    """Abelianization of a presented group, via the Smith normal form of
    the relator exponent matrix."""
    ngens = len(pres.generators)
    matrix = [exponent_sums(r, ngens) for r in pres.relators]
    factors = smith_normal_form(matrix) if matrix else []
    return Abelianization(
        free_rank=ngens - len(factors),
        torsion=tuple(d for d in factors if d > 1),
    )
