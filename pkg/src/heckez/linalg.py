"""Small exact dense matrices (lists of rows) over Q or Q(v)."""

from __future__ import annotations

from fractions import Fraction

__all__ = ["mat_mul", "mat_inverse", "mat_identity", "mat_transpose"]


def mat_identity(k: int, one=1, zero=0) -> list[list]:
    return [[one if i == j else zero for j in range(k)] for i in range(k)]


def mat_transpose(a: list[list]) -> list[list]:
    return [list(col) for col in zip(*a)]


def mat_mul(a: list[list], b: list[list], zero=0) -> list[list]:
    if a and len(a[0]) != len(b):
        raise ValueError("shape mismatch")
    cols = mat_transpose(b) if b else []
    out = []
    for row in a:
        out_row = []
        for col in cols:
            acc = zero
            for x, y in zip(row, col):
                if x and y:
                    acc = acc + x * y
            out_row.append(acc)
        out.append(out_row)
    return out


def mat_inverse(a: list[list], one=Fraction(1), zero=0) -> list[list]:
    """Gauss-Jordan inverse; raises ZeroDivisionError if `a` is singular."""
    k = len(a)
    m = [list(row) + [one if i == j else zero for j in range(k)]
         for i, row in enumerate(a)]
    for col in range(k):
        pivot = next((r for r in range(col, k) if m[r][col]), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        m[col], m[pivot] = m[pivot], m[col]
        inv = one / m[col][col]
        m[col] = [x * inv if x else zero for x in m[col]]
        for r in range(k):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y if y else x for x, y in zip(m[r], m[col])]
    return [row[k:] for row in m]
