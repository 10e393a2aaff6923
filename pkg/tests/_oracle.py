"""Independent pure-Python reference computations used by the tests.

Nothing here touches numpy or the package's permutation code; planes are
plain lists of row lists.
"""
from fractions import Fraction


def transpose(rows):
    m, n = len(rows), len(rows[0])
    return [[rows[i][j] for i in range(m)] for j in range(n)]


def flatten_column_major(rows):
    m, n = len(rows), len(rows[0])
    return [rows[i][j] for j in range(n) for i in range(m)]


def fill_column_major(values, m, n):
    out = [[None] * n for _ in range(m)]
    k = 0
    for j in range(n):
        for i in range(m):
            out[i][j] = values[k]
            k += 1
    return out


def scramble(rows):
    m, n = len(rows), len(rows[0])
    return fill_column_major(flatten_column_major(transpose(rows)), m, n)


def closed_form_map(m, n):
    dest = [None] * (m * n)
    for i in range(m):
        for j in range(n):
            dest[i + j * m] = j + i * n
    return dest


def pearson(xs, ys):
    """Pearson r from exact rational sums; only the final square root is inexact."""
    k = len(xs)
    mx, my = Fraction(sum(xs), k), Fraction(sum(ys), k)
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    sxx = sum((x - mx) ** 2 for x in xs)
    syy = sum((y - my) ** 2 for y in ys)
    r2 = sxy * sxy / (sxx * syy)
    return (1 if sxy >= 0 else -1) * float(r2) ** 0.5
