"""
The tridiagonal matrix M_n and its determinant.

M_n has diagonal 1, ..., 1, 0 and -1 on both off-diagonals. Expanding along
the first row gives |M_n| = |M_{n-1}| - |M_{n-2}| with |M_0| = 1 and
|M_1| = 0, so the sequence has period 6 and takes values in {-1, 0, 1}.
"""

from fractions import Fraction


def det_M(n: int) -> int:
    """|M_n| by the three-term recurrence."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    prev, cur = 1, 0
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, cur - prev
    return cur


def det_M_closed_form(n: int) -> int:
    """
    |M_n| from n mod 6: 0 when n = 1 (mod 3), -1 when n = 2, 3 (mod 6) and
    1 when n = 0, 5 (mod 6).
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n % 3 == 1:
        return 0
    return -1 if n % 6 in (2, 3) else 1


def build_M(n: int) -> list[list[Fraction]]:
    """The explicit n x n matrix M_n over the rationals."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = Fraction(1 if i < n - 1 else 0)
        if i + 1 < n:
            rows[i][i + 1] = Fraction(-1)
            rows[i + 1][i] = Fraction(-1)
    return rows


def exact_determinant(matrix: list[list[Fraction]]) -> Fraction:
    """Determinant by fraction-exact Gaussian elimination with row swaps."""
    a = [[Fraction(x) for x in row] for row in matrix]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != col:
            a[col], a[pivot_row] = a[pivot_row], a[col]
            det = -det
        pivot = a[col][col]
        det *= pivot
        for r in range(col + 1, n):
            factor = a[r][col] / pivot
            if factor:
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return det


def verify_det_M(n_max: int) -> list[str]:
    """
    Compare recurrence and closed form for 1 <= n <= n_max.

    Returns:
        One line per disagreement (empty when everything matches)
    """
    if n_max < 1:
        raise ValueError(f"n_max must be at least 1, got {n_max}")
    mismatches = []
    for n in range(1, n_max + 1):
        recurrence = det_M(n)
        closed = det_M_closed_form(n)
        if recurrence != closed:
            mismatches.append(f"n={n}: recurrence {recurrence} != closed form {closed}")
    return mismatches
