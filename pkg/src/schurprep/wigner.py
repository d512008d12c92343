"""Reduced Wigner coefficients for coupling one extra box, U(s) > U(s-1).

Labels are passed already shifted: ``mt[i] = mu_i + s - i`` for the U(s) row and
``mpt[i] = mu'_i + s - 1 - i`` for the U(s-1) row (1-indexed ``i``). ``j`` is the row of
the U(s) pattern that receives the box; ``j_prime`` the row of the U(s-1) pattern, or
0 when the box does not reach level s-1.
"""
from __future__ import annotations

import math
from typing import Sequence

FORMS = ("standard", "legacy")


class DegenerateLabelError(ZeroDivisionError):
    """Zero denominator for the requested label pair."""


def shifted_row(row: Sequence[int], s: int, lower: bool = False) -> tuple[int, ...]:
    """Shift a GT row of U(s) (``lower=False``) or U(s-1) (``lower=True``)."""
    off = s - 1 if lower else s
    return tuple(int(m) + off - i for i, m in enumerate(row, start=1))


def _prod(xs) -> int:
    return math.prod(xs)


def _ratio(num: int, den: int, what: str) -> float:
    if den == 0:
        raise DegenerateLabelError(f"degenerate label pair ({what})")
    r = num / den
    if r < 0:
        if r > -1e-14:
            return 0.0
        raise ValueError(f"negative radicand {num}/{den} ({what})")
    return math.sqrt(r)


def reduced_wigner(
    s: int,
    mu_row: Sequence[int],
    j: int,
    mu_prime_row: Sequence[int],
    j_prime: int,
    form: str = "standard",
) -> float:
    """Entry ``T[j, j']`` of the rank-s isometry for shifted rows ``mu_row`` and ``mu_prime_row``.

    ``form="standard"`` gives coefficients consistent with the Gelfand-Tsetlin chain
    (positive lowering matrix elements); ``form="legacy"`` evaluates the alternative
    closed form kept for comparison and fails the isometry test.
    """
    mt = [int(x) for x in mu_row]
    mpt = [int(x) for x in mu_prime_row]
    if len(mt) != s or len(mpt) != s - 1:
        raise ValueError(f"row lengths {len(mt)},{len(mpt)} do not match s={s}")
    if not 1 <= j <= s or not 0 <= j_prime <= s - 1:
        raise ValueError(f"indices (j={j}, j'={j_prime}) out of range for s={s}")
    if form not in FORMS:
        raise ValueError(f"unknown form {form!r}")
    a = mt[j - 1]
    what = f"s={s}, j={j}, j'={j_prime}"
    if form == "standard":
        if j_prime == 0:
            num = _prod(a - x for x in mpt)
            den = _prod(a - mt[i] for i in range(s) if i != j - 1)
            return _ratio(num, den, what)
        b = mpt[j_prime - 1]
        sign = 1.0 if j_prime >= j else -1.0
        num = _prod(a - mpt[i] for i in range(s - 1) if i != j_prime - 1) * _prod(
            b - mt[i] + 1 for i in range(s) if i != j - 1
        )
        den = _prod(a - mt[i] for i in range(s) if i != j - 1) * _prod(
            b - mpt[i] + 1 for i in range(s - 1) if i != j_prime - 1
        )
        return sign * _ratio(num, den, what)
    # legacy
    if j_prime == 0:
        sign = 1.0 if j >= s else -1.0
        num = _prod(mt[i] - a for i in range(s) if i != j - 1)
        den = _prod(x - a for x in mpt)
        return sign * _ratio(num, den, what)
    b = mpt[j_prime - 1]
    sign = 1.0 if j >= j_prime else -1.0
    num = _prod(mt[i] - b + 1 for i in range(s) if i != j - 1) * _prod(
        mpt[i] - a + 1 for i in range(s - 1) if i != j_prime - 1
    )
    den = _prod(mt[i] - a + 1 for i in range(s) if i != j - 1) * _prod(
        mpt[i] - b + 1 for i in range(s - 1) if i != j_prime - 1
    )
    return sign * _ratio(num, den, what)


def wigner_matrix(s: int, upper: Sequence[int], lower: Sequence[int], form: str = "standard"):
    """Full ``s x s`` block ``T[j-1, j']`` for unshifted GT rows ``upper`` (U(s)) and ``lower`` (U(s-1)).

    Columns ``j' = 0..s-1``; entries whose target shape is not a partition are left at zero.
    """
    import numpy as np

    mt = shifted_row(upper, s)
    mpt = shifted_row(lower, s, lower=True)
    out = np.zeros((s, s))
    for j in range(1, s + 1):
        if j > 1 and upper[j - 2] == upper[j - 1]:
            continue
        for jp in range(0, s):
            if jp > 1 and lower[jp - 2] == lower[jp - 1]:
                continue
            try:
                out[j - 1, jp] = reduced_wigner(s, mt, j, mpt, jp, form)
            except (DegenerateLabelError, ValueError):
                out[j - 1, jp] = np.nan
    return out
