"""Exact integer/rational matrix arithmetic.

Matrices are tuples of row tuples holding Python ints (``IntMatrix``) or
``fractions.Fraction`` values (``RationalMatrix``). Nothing here ever touches
floating point.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Sequence

IntMatrix = tuple[tuple[int, ...], ...]
RationalMatrix = tuple[tuple[Fraction, ...], ...]


class SingularMatrixError(ArithmeticError):
    pass


def as_int_matrix(rows: Sequence[Sequence[int]]) -> IntMatrix:
    m = tuple(tuple(int(x) for x in r) for r in rows)
    if any(len(r) != len(m) for r in m):
        raise ValueError("matrix must be square")
    return m


def identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def matmul(a, b):
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def scale(a, s):
    return tuple(tuple(s * x for x in row) for row in a)


def signed_similarity(d: Sequence[int], a, s: int = 1):
    """s * diag(d) @ a @ diag(d)."""
    return tuple(tuple(s * d[i] * d[j] * a[i][j] for j in range(len(a))) for i in range(len(a)))


def is_symmetric(a) -> bool:
    return all(a[i][j] == a[j][i] for i in range(len(a)) for j in range(i))


def determinant(a: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free elimination; every division is exact."""
    m = [list(map(int, r)) for r in a]
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def inverse_exact(a: Sequence[Sequence[int]]) -> RationalMatrix:
    """Gauss-Jordan over the rationals."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            raise SingularMatrixError("matrix is singular")
        m[c], m[p] = m[p], m[c]
        piv = m[c][c]
        m[c] = [x / piv for x in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return tuple(tuple(row[n:]) for row in m)


def is_integral(r: Sequence[Sequence[Fraction]]) -> IntMatrix | None:
    if all(Fraction(x).denominator == 1 for row in r for x in row):
        return tuple(tuple(int(x) for x in row) for row in r)
    return None


def char_poly(a: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Coefficients of det(xI - A), ascending degree, monic.

    Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
    The trace division is exact over the integers.
    """
    n = len(a)
    a = as_int_matrix(a)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = tuple(tuple(0 for _ in range(n)) for _ in range(n))
    for k in range(1, n + 1):
        m = matmul(a, m)
        m = tuple(tuple(x + (coeffs[n - k + 1] if i == j else 0) for j, x in enumerate(row))
                  for i, row in enumerate(m))
        am = matmul(a, m)
        tr = sum(am[i][i] for i in range(n))
        q, rem = divmod(-tr, k)
        assert rem == 0, "Faddeev-LeVerrier trace not divisible"
        coeffs[n - k] = q
    return tuple(coeffs)


def poly_eval(coeffs: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def poly_str(coeffs: Sequence[int], var: str = "x") -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        body = var if k == 1 else f"{var}^{k}" if k > 1 else ""
        coef = "" if (mag == 1 and k > 0) else str(mag)
        sep = "*" if coef and body else ""
        sign = "-" if c < 0 else "+"
        terms.append((sign, f"{coef}{sep}{body}"))
    if not terms:
        return "0"
    head_sign, head = terms[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, t in terms[1:]:
        out += f" {sign} {t}"
    return out


def matrix_to_jsonable(m) -> list[list]:
    """Integers stay integers; non-integral rationals become "p/q" strings."""
    out = []
    for row in m:
        r = []
        for x in row:
            x = Fraction(x)
            r.append(int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}")
        out.append(r)
    return out


def matrix_from_jsonable(rows) -> RationalMatrix:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def matrix_to_json(m) -> str:
    return json.dumps(matrix_to_jsonable(m))
