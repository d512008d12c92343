"""Partitions, weights, Gelfand-Tsetlin patterns and the label-register widths built on them.

Everything here is exact integer arithmetic. Partitions used as U(d) labels are
zero-padded to length ``d``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

ENCODINGS = ("naive", "compressed", "balanced-proxy")

#: above this many partitions the compressed n_mu falls back to the balanced shape
EXHAUSTIVE_PARTITION_LIMIT = 10**6


class GTShapeError(ValueError):
    """A GT pattern whose rows do not form a triangle."""


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be nonincreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, parts: Sequence[int], d: int | None = None) -> "Partition":
        """Build from any sequence, dropping or adding trailing zeros to length ``d``."""
        parts = [int(p) for p in parts]
        if d is not None:
            nonzero = [p for p in parts if p != 0]
            if len(nonzero) > d:
                raise ValueError(f"{tuple(parts)} has more than {d} nonzero rows")
            if len(parts) > d:
                if any(parts[d:]):
                    raise ValueError(f"{tuple(parts)} has more than {d} rows")
                parts = parts[:d]
            parts = parts + [0] * (d - len(parts))
        return cls(tuple(parts))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        """Number of nonzero rows."""
        return sum(1 for p in self.parts if p)

    def padded(self, d: int) -> "Partition":
        return Partition.of(self.parts, d)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def _parts(lam) -> tuple[int, ...]:
    return lam.parts if isinstance(lam, Partition) else tuple(int(x) for x in lam)


def ceil_log2(x: int) -> int:
    """Exact ceil(log2(x)) for a positive integer."""
    if x < 1:
        raise ValueError("ceil_log2 needs x >= 1")
    return (x - 1).bit_length()


# ---------------------------------------------------------------------------
# counting and enumeration


def count_partitions(N: int, d: int) -> int:
    """Number of partitions of ``N`` with at most ``d`` parts (coin-change DP)."""
    if N < 0 or d < 0:
        raise ValueError("N and d must be nonnegative")
    ways = [0] * (N + 1)
    ways[0] = 1
    for i in range(1, d + 1):
        for n in range(i, N + 1):
            ways[n] += ways[n - i]
    return ways[N]


def _partitions_desc(n: int, k: int, cap: int) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` into at most ``k`` nonzero parts, each ``<= cap``, unpadded."""
    if n == 0:
        yield ()
        return
    if k == 0:
        return
    for first in range(min(n, cap), 0, -1):
        # remaining k-1 parts, each <= first, must be able to absorb n-first
        if first * k < n:
            break
        for rest in _partitions_desc(n - first, k - 1, first):
            yield (first,) + rest


def enumerate_partitions(N: int, d: int) -> list[Partition]:
    """All partitions of ``N`` with at most ``d`` rows, padded to ``d``, in decreasing lex order."""
    if N < 0 or d < 1:
        raise ValueError("need N >= 0 and d >= 1")
    return [Partition(p + (0,) * (d - len(p))) for p in _partitions_desc(N, d, N)]


# ---------------------------------------------------------------------------
# dimensions


def weyl_dimension(lam, d: int | None = None) -> int:
    """Dimension of the U(d) irrep with highest weight ``lam``."""
    parts = _parts(lam)
    if d is None:
        d = len(parts)
    parts = Partition.of(parts, d).parts
    # hook-content formula: prod over boxes of (d + content) / hook
    num = den = 1
    for r, row in enumerate(hook_lengths(parts)):
        for c, h in enumerate(row):
            num *= d + c - r
            den *= h
    assert num % den == 0
    return num // den


def hook_lengths(lam) -> list[list[int]]:
    parts = [p for p in _parts(lam) if p]
    conj = [sum(1 for p in parts if p > c) for c in range(parts[0])] if parts else []
    return [[parts[r] - c + conj[c] - r - 1 for c in range(parts[r])] for r in range(len(parts))]


def sym_group_dimension(lam) -> int:
    """Dimension of the S_N irrep labelled by ``lam`` (hook-length formula)."""
    n = sum(_parts(lam))
    denom = math.prod(h for row in hook_lengths(lam) for h in row)
    return math.factorial(n) // denom


def balanced_shape(N: int, d: int) -> Partition:
    """The almost-rectangular diagram: ``r`` rows of ``q+1`` then ``d-r`` rows of ``q``."""
    if N < 0 or d < 1:
        raise ValueError("need N >= 0 and d >= 1")
    q, r = divmod(N, d)
    return Partition((q + 1,) * r + (q,) * (d - r))


def max_weyl_dimension(N: int, d: int) -> int:
    return max(weyl_dimension(lam, d) for lam in enumerate_partitions(N, d))


# ---------------------------------------------------------------------------
# Dynkin labels and weights


def partition_from_dynkin(zeta: Sequence[int]) -> Partition:
    zeta = [int(z) for z in zeta]
    if any(z < 0 for z in zeta):
        raise ValueError(f"highest-weight Dynkin labels must be nonnegative: {zeta}")
    lam = [0]
    for z in reversed(zeta):
        lam.append(lam[-1] + z)
    return Partition(tuple(reversed(lam)))


def dynkin_from_partition(lam) -> tuple[int, ...]:
    parts = _parts(lam)
    return tuple(a - b for a, b in zip(parts, parts[1:]))


def dynkin_from_standard(omega: Sequence[int]) -> tuple[int, ...]:
    return tuple(int(a) - int(b) for a, b in zip(omega, omega[1:]))


def standard_from_dynkin(z: Sequence[int], total: int) -> tuple[int, ...]:
    """Solve ``z_i = w_i - w_{i+1}`` with ``sum(w) = total``; raises if non-integral."""
    z = [int(v) for v in z]
    d = len(z) + 1
    num = total - sum((i + 1) * zi for i, zi in enumerate(z))
    if num % d:
        raise ValueError(
            f"weight {tuple(z)} is not in the lattice for total {total}: "
            f"last component {Fraction(num, d)} is non-integral"
        )
    omega = [num // d]
    for zi in reversed(z):
        omega.append(zi + omega[-1])
    return tuple(reversed(omega))


# ---------------------------------------------------------------------------
# GT patterns


@dataclass(frozen=True)
class GTPattern:
    """Triangular array stored top-down: ``rows[0]`` has length d and equals the irrep label."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)

    @property
    def d(self) -> int:
        return len(self.rows)

    @property
    def top(self) -> Partition:
        return Partition(self.rows[0])

    def row(self, r: int) -> tuple[int, ...]:
        """Row with ``r`` entries (1-indexed, r = 1..d)."""
        return self.rows[self.d - r]

    def compact(self) -> str:
        """``(x,y;k)`` style label: all rows below the top, separated by ``;``."""
        return "(" + ";".join(",".join(map(str, row)) for row in self.rows[1:]) + ")"

    def __str__(self):
        return "/".join("(" + ",".join(map(str, r)) + ")" for r in self.rows)

    @classmethod
    def from_rows(cls, *rows: Sequence[int] | int) -> "GTPattern":
        """``GTPattern.from_rows((3,0,0), (3,0), 2)``; bare ints become one-entry rows."""
        return cls(tuple((r,) if isinstance(r, int) else tuple(r) for r in rows))


@dataclass(frozen=True)
class GTCheck:
    valid: bool
    violation: str | None = None

    def __bool__(self):
        return self.valid


def _check_shape(pattern: GTPattern) -> None:
    d = pattern.d
    if d == 0:
        raise GTShapeError("empty pattern")
    for k, row in enumerate(pattern.rows):
        if len(row) != d - k:
            raise GTShapeError(f"row {k} from the top has {len(row)} entries, expected {d - k}")


def validate_gt(pattern: GTPattern) -> GTCheck:
    """Check interlacing ``x[r+1][j] >= x[r][j] >= x[r+1][j+1]``; raises GTShapeError on bad shape."""
    _check_shape(pattern)
    for row in pattern.rows:
        for x in row:
            if x < 0:
                return GTCheck(False, f"negative entry {x}")
    if any(a < b for a, b in zip(pattern.rows[0], pattern.rows[0][1:])):
        return GTCheck(False, f"top row {pattern.rows[0]} is not nonincreasing")
    d = pattern.d
    for r in range(d - 1, 0, -1):
        upper, lower = pattern.row(r + 1), pattern.row(r)
        for j in range(r):
            if not upper[j] >= lower[j] >= upper[j + 1]:
                return GTCheck(
                    False,
                    f"x[{r},{j + 1}]={lower[j]} not between x[{r + 1},{j + 1}]={upper[j]} "
                    f"and x[{r + 1},{j + 2}]={upper[j + 1]}",
                )
    return GTCheck(True)


def gt_weight(pattern: GTPattern) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Return ``(omega, z)``: standard weight from row-sum differences and its Dynkin form."""
    check = validate_gt(pattern)
    if not check:
        raise ValueError(f"invalid GT pattern {pattern}: {check.violation}")
    sums = [0] + [sum(pattern.row(r)) for r in range(1, pattern.d + 1)]
    omega = tuple(sums[r] - sums[r - 1] for r in range(1, pattern.d + 1))
    return omega, dynkin_from_standard(omega)


def _lower_rows(upper: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    ranges = [range(upper[j + 1], upper[j] + 1) for j in range(len(upper) - 1)]
    yield from itertools.product(*ranges)


def enumerate_gt_patterns(lam, d: int | None = None) -> list[GTPattern]:
    """Every GT pattern with top row ``lam`` (brute force over interlacing ranges)."""
    top = Partition.of(_parts(lam), d).parts if d is not None else _parts(lam)
    out: list[GTPattern] = []

    def extend(rows):
        if len(rows[-1]) == 1:
            out.append(GTPattern(tuple(rows)))
            return
        for row in _lower_rows(rows[-1]):
            extend(rows + [row])

    extend([tuple(top)])
    return out


def highest_weight_pattern(lam, d: int | None = None) -> GTPattern:
    top = Partition.of(_parts(lam), d).parts if d is not None else _parts(lam)
    return GTPattern(tuple(tuple(top[:r]) for r in range(len(top), 0, -1)))


# ---------------------------------------------------------------------------
# register widths


@dataclass(frozen=True)
class RegisterWidths:
    n_lambda: int
    n_mu: int
    n_sigma: int
    n_system: int
    encoding: str

    @property
    def k_lambda_mu(self) -> int:
        return self.n_lambda + self.n_mu


def register_widths(
    d: int, N: int, encoding: str = "compressed", exhaustive_limit: int = EXHAUSTIVE_PARTITION_LIMIT
) -> RegisterWidths:
    if d < 2 or N < 1:
        raise ValueError("register widths need d >= 2 and N >= 1")
    if encoding not in ENCODINGS:
        raise ValueError(f"unknown encoding {encoding!r}; choose from {ENCODINGS}")
    per_entry = ceil_log2(N + 1)
    n_d = ceil_log2(d)
    n_sigma = (N - 1) * n_d
    n_system = N * n_d
    if encoding == "naive":
        return RegisterWidths(d * per_entry, d * (d - 1) // 2 * per_entry, n_sigma, n_system, encoding)
    p = count_partitions(N, d)
    n_lambda = ceil_log2(p)
    if encoding == "compressed" and p <= exhaustive_limit:
        n_mu = ceil_log2(max_weyl_dimension(N, d))
    else:
        n_mu = ceil_log2(weyl_dimension(balanced_shape(N, d), d))
    return RegisterWidths(n_lambda, n_mu, n_sigma, n_system, encoding)
