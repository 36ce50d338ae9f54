"""Exact rational simplex for cone-membership feasibility.

Only what the cone engine needs: decide whether ``target`` is a nonnegative
combination of ``vectors`` and, if so, return the coefficients as a
certificate.  Arithmetic is in :class:`fractions.Fraction` throughout and
Bland's rule guarantees termination on degenerate instances.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .rational import to_vector


def nonnegative_combination(
    vectors: Sequence[Sequence], target: Sequence
) -> Optional[tuple[Fraction, ...]]:
    """Return ``c >= 0`` with ``sum(c[k] * vectors[k]) == target``, or None.

    Solved as phase one of the simplex method on ``A c = b`` where the
    columns of ``A`` are the given vectors.
    """
    b = list(to_vector(target))
    cols = [to_vector(v) for v in vectors]
    m = len(b)
    n = len(cols)
    for v in cols:
        if len(v) != m:
            raise ValueError(f"vector of length {len(v)} does not match target length {m}")
    if n == 0:
        return () if all(x == 0 for x in b) else None

    # tableau rows: [A | I | b], with rows negated so that b >= 0
    tab: list[list[Fraction]] = []
    for i in range(m):
        row = [cols[k][i] for k in range(n)] + [Fraction(int(i == j)) for j in range(m)] + [b[i]]
        if b[i] < 0:
            row = [-x for x in row]
            row[n + i] = Fraction(1)
        tab.append(row)
    basis = [n + i for i in range(m)]

    width = n + m + 1
    # reduced costs of the phase-one objective (sum of artificials)
    cost = [Fraction(0)] * width
    for j in range(n):
        cost[j] = -sum((tab[i][j] for i in range(m)), Fraction(0))
    cost[-1] = -sum((tab[i][-1] for i in range(m)), Fraction(0))

    while True:
        entering = next((j for j in range(n + m) if cost[j] < 0), None)
        if entering is None:
            break
        leave = None
        best = None
        for i in range(m):
            a = tab[i][entering]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            # unbounded direction cannot occur for a bounded-below phase one
            raise ArithmeticError("phase-one simplex reported an unbounded ray")
        _pivot(tab, cost, leave, entering)
        basis[leave] = entering

    if cost[-1] != 0:
        return None
    coeffs = [Fraction(0)] * n
    for i, var in enumerate(basis):
        if var < n:
            coeffs[var] = tab[i][-1]
    return tuple(coeffs)


def _pivot(tab: list[list[Fraction]], cost: list[Fraction], r: int, c: int) -> None:
    piv = tab[r][c]
    tab[r] = [x / piv for x in tab[r]]
    prow = tab[r]
    for i, row in enumerate(tab):
        if i != r and row[c] != 0:
            f = row[c]
            tab[i] = [x - f * y for x, y in zip(row, prow)]
    if cost[c] != 0:
        f = cost[c]
        cost[:] = [x - f * y for x, y in zip(cost, prow)]
