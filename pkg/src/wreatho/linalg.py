"""Exact dense linear algebra over the rationals (small systems only)."""

from __future__ import annotations

from fractions import Fraction


def rref(rows: list[list[Fraction]]):
    """Reduced row echelon form in place; returns the pivot column list."""
    if not rows:
        return []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def nullspace(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of the solution space of rows * x = 0, denominators cleared."""
    work = [list(map(Fraction, row)) for row in rows if any(row)]
    pivots = rref(work)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -work[r][fc]
        lcm = 1
        for x in vec:
            lcm = lcm * x.denominator // _gcd(lcm, x.denominator)
        basis.append([x * lcm for x in vec])
    return basis


def rank(rows: list[list[Fraction]]) -> int:
    work = [list(map(Fraction, row)) for row in rows if any(row)]
    return len(rref(work))


def in_row_space(rows: list[list[Fraction]], vec: list[Fraction]) -> bool:
    base = [list(map(Fraction, r)) for r in rows]
    r0 = rank([list(r) for r in base])
    return rank(base + [list(map(Fraction, vec))]) == r0


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a
