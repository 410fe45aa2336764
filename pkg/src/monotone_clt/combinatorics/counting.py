"""
Closed-form counts for pair partitions, computed exactly with Python integers.
"""

from math import comb, perm, prod

from ..exceptions import InvalidInputError


def double_factorial(n: int) -> int:
    """n!! for n >= -1, with (-1)!! = 0!! = 1."""
    if n < -1:
        raise InvalidInputError(f"Double factorial undefined for {n}")
    return prod(range(n, 0, -2))


def catalan(k: int) -> int:
    """k-th Catalan number: the number of noncrossing pairings of 2k points."""
    if k < 0:
        raise InvalidInputError(f"Catalan number undefined for {k}")
    return comb(2 * k, k) // (k + 1)


def check_pairs_and_colors(m: int, num_colors: int, allow_empty: bool = False) -> None:
    """Validate 1 <= m <= N (or m = 0 when explicitly allowed)."""
    if num_colors < 1:
        raise InvalidInputError(f"Number of colors must be positive, got {num_colors}")
    if m == 0 and allow_empty:
        return
    if m < 1:
        raise InvalidInputError(
            f"Number of pairs must be at least 1, got {m} (pass allow_empty for m = 0)"
        )
    if m > num_colors:
        raise InvalidInputError(f"Need m <= N, got m={m} > N={num_colors}")


def count_pair_maps(m: int, num_colors: int, allow_empty: bool = False) -> int:
    """|Π({1..2m},{1..N})| = C(N,m) · m! · (2m-1)!!."""
    check_pairs_and_colors(m, num_colors, allow_empty)
    return perm(num_colors, m) * double_factorial(2 * m - 1)


def count_peakless(m: int, num_colors: int, allow_empty: bool = False) -> int:
    """|Π₀({1..2m},{1..N})| = C(N,m) · (2m-1)!!.

    Raises:
        InvalidInputError: If m > N, or m = 0 without allow_empty.
    """
    check_pairs_and_colors(m, num_colors, allow_empty)
    return comb(num_colors, m) * double_factorial(2 * m - 1)
