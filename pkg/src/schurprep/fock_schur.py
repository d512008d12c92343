"""Occupation-number configurations to Schur labels (lambda, mu, sigma).

The occupation vector of a Fock state is the standard weight of the GT pattern it
maps to, so ``z_i = n_i - n_{i+1}``. The irrep ``lambda`` is fixed by the particle
statistics and ``sigma`` is a fixed add-a-box path.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .repr_core import (
    GTPattern,
    Partition,
    dynkin_from_standard,
    enumerate_partitions,
    gt_weight,
    partition_from_dynkin,
    standard_from_dynkin,
    validate_gt,
)

NORM_TOL = 1e-12
STATISTICS = ("boson", "fermion", "paraboson", "parafermion", "explicit")


class MappingError(ValueError):
    """A configuration or weight that cannot be placed in the requested sector."""


class EmptySectorError(MappingError):
    pass


@dataclass(frozen=True)
class FockState:
    occupations: tuple[int, ...]

    def __post_init__(self):
        occ = tuple(int(n) for n in self.occupations)
        if any(n < 0 for n in occ):
            raise ValueError(f"negative occupation in {occ}")
        object.__setattr__(self, "occupations", occ)

    @property
    def d(self) -> int:
        return len(self.occupations)

    @property
    def N(self) -> int:
        return sum(self.occupations)

    def __str__(self):
        return "|" + ",".join(map(str, self.occupations)) + ">"


@dataclass(frozen=True)
class StatisticsSector:
    kind: str
    order: int | None = None
    shape: Partition | None = None

    def __post_init__(self):
        if self.kind not in STATISTICS:
            raise ValueError(f"unknown statistics {self.kind!r}; choose from {STATISTICS}")
        if self.kind in ("paraboson", "parafermion") and (self.order is None or self.order < 1):
            raise ValueError(f"{self.kind} needs an order p >= 1")
        if self.kind == "explicit" and self.shape is None:
            raise ValueError("explicit statistics needs a shape")

    @classmethod
    def explicit(cls, lam: Sequence[int] | Partition) -> "StatisticsSector":
        parts = lam.parts if isinstance(lam, Partition) else tuple(lam)
        return cls("explicit", shape=Partition(parts))


@dataclass(frozen=True)
class SchurLabel:
    lam: Partition
    mu: GTPattern
    sigma: tuple[int, ...]

    def __post_init__(self):
        if self.mu.rows[0] != self.lam.parts:
            raise ValueError(f"GT top row {self.mu.rows[0]} differs from lambda {self.lam}")
        check = validate_gt(self.mu)
        if not check:
            raise ValueError(check.violation)
        if path_shape(self.sigma, len(self.lam)) != self.lam:
            raise ValueError(f"path {self.sigma} does not end at {self.lam}")


@dataclass
class LabeledSuperposition:
    terms: list[tuple[complex, SchurLabel]] = field(default_factory=list)
    configs: list[FockState] = field(default_factory=list)

    @property
    def lam(self) -> Partition:
        return self.terms[0][1].lam

    @property
    def sigma(self) -> tuple[int, ...]:
        return self.terms[0][1].sigma

    @property
    def d(self) -> int:
        return len(self.lam)

    @property
    def N(self) -> int:
        return self.lam.size

    @property
    def l1_norm(self) -> float:
        return sum(abs(c) for c, _ in self.terms)


# ---------------------------------------------------------------------------


def dynkin_from_fock(n: FockState | Sequence[int]) -> tuple[int, ...]:
    occ = n.occupations if isinstance(n, FockState) else tuple(n)
    return dynkin_from_standard(occ)


def fock_from_dynkin(z: Sequence[int], N: int, d: int) -> FockState:
    if len(z) != d - 1:
        raise ValueError(f"Dynkin weight needs {d - 1} entries, got {len(z)}")
    try:
        omega = standard_from_dynkin(z, N)
    except ValueError as exc:
        raise MappingError(f"not a valid occupation for (z={tuple(z)}, N={N}, d={d}): {exc}") from None
    if any(w < 0 for w in omega):
        raise MappingError(f"not a valid occupation for (z={tuple(z)}, N={N}, d={d}): {omega} has a negative entry")
    return FockState(omega)


def dynkin_from_fock_array(occ: np.ndarray) -> np.ndarray:
    """Row-wise ``z_i = n_i - n_{i+1}`` for a stack of occupation vectors ``(M, d)``.

    Keeps the integer dtype of ``occ``; entries lie in ``[-N, N]``.
    """
    occ = np.asarray(occ)
    if not np.issubdtype(occ.dtype, np.integer):
        raise TypeError("occupations must be integers")
    return occ[:, :-1] - occ[:, 1:]


def fock_from_dynkin_array(z: np.ndarray, N: int) -> np.ndarray:
    """Row-wise inverse of :func:`dynkin_from_fock_array`; raises on any invalid row."""
    z = np.asarray(z)
    if not np.issubdtype(z.dtype, np.integer):
        raise TypeError("Dynkin weights must be integers")
    M, d = z.shape[0], z.shape[1] + 1
    # tail sums t_i = sum_{k >= i} z_k = n_i - n_d; their total is sum_i i z_i
    tail = np.flip(np.cumsum(np.flip(z, 1), axis=1, dtype=z.dtype), 1)
    num = N - tail.sum(axis=1, dtype=np.int64)
    if np.any(num % d):
        raise MappingError(f"{int(np.count_nonzero(num % d))} weights are not in the lattice for N={N}")
    last = (num // d).astype(z.dtype)
    occ = np.empty((M, d), dtype=z.dtype)
    occ[:, :-1] = tail
    occ[:, :-1] += last[:, None]
    occ[:, -1] = last
    if np.any(occ < 0):
        raise MappingError("negative occupation in inverse map")
    return occ


def sector_shapes(stat: StatisticsSector, N: int, d: int) -> list[Partition]:
    """Admissible Young diagrams (padded to ``d``) for the statistics, largest first."""
    if N < 1:
        raise ValueError("N must be >= 1")
    if stat.kind == "boson":
        return [Partition((N,) + (0,) * (d - 1))]
    if stat.kind == "fermion":
        if N > d:
            raise EmptySectorError(f"antisymmetric sector empty: N={N} fermions in d={d} modes")
        return [Partition((1,) * N + (0,) * (d - N))]
    if stat.kind == "explicit":
        lam = Partition.of(stat.shape.parts, d)
        if lam.size != N:
            raise MappingError(f"shape {lam} has {lam.size} boxes, expected N={N}")
        return [lam]
    p = stat.order
    if stat.kind == "paraboson":
        shapes = [lam for lam in enumerate_partitions(N, d) if lam.length <= p]
    else:
        shapes = [lam for lam in enumerate_partitions(N, d) if lam[0] <= p]
    if not shapes:
        raise EmptySectorError(f"no {stat.kind} shape of order {p} for N={N}, d={d}")
    return shapes


def dynkin_to_gt(highest, z: Sequence[int], *, dynkin: bool | None = None) -> GTPattern:
    """Greedy construction of one GT pattern of shape ``highest`` with Dynkin weight ``z``.

    ``highest`` is a partition of length d or a highest-weight Dynkin label of
    length d-1; plain sequences are told apart by their length relative to ``z``
    unless ``dynkin`` is given.
    """
    z = [int(v) for v in z]
    d = len(z) + 1
    if isinstance(highest, Partition):
        lam = list(highest.parts)
    else:
        seq = [int(v) for v in highest]
        is_dynkin = dynkin if dynkin is not None else len(seq) == d - 1
        lam = list(partition_from_dynkin(seq).parts) if is_dynkin else seq
    if len(lam) != d:
        raise ValueError(f"highest weight {tuple(lam)} does not match weight length {len(z)}")
    lam.sort(reverse=True)
    total = sum(lam)
    try:
        omega = standard_from_dynkin(z, total)
    except ValueError as exc:
        raise MappingError(f"weight not in lattice: {exc}") from None

    # target row sums, S[r] for the row with r entries
    target = {d: total}
    for r in range(d - 1, 0, -1):
        target[r] = target[r + 1] - omega[r]
    rows = [tuple(lam)]
    for r in range(d - 1, 0, -1):
        upper = rows[-1]
        row = list(upper[1:])
        delta = target[r] - sum(row)
        if delta < 0:
            raise MappingError(f"weight {tuple(z)} not permissible in {tuple(lam)} (row {r} short by {-delta})")
        for j in range(r):
            inc = min(upper[j] - upper[j + 1], delta)
            row[j] += inc
            delta -= inc
            if delta == 0:
                break
        if delta != 0:
            raise MappingError(f"weight {tuple(z)} not permissible in {tuple(lam)} (row {r} left {delta} over)")
        rows.append(tuple(row))
    return GTPattern(tuple(rows))


def is_permissible(lam, z: Sequence[int]) -> bool:
    try:
        dynkin_to_gt(lam if isinstance(lam, Partition) else Partition(tuple(lam)), z)
    except MappingError:
        return False
    return True


# ---------------------------------------------------------------------------
# add-a-box paths


def path_shape(path: Sequence[int], d: int) -> Partition:
    """Shape reached from a single box by adding one box to row ``j`` (1-indexed) per step."""
    rows = [1] + [0] * (d - 1)
    for j in path:
        if not 1 <= j <= d:
            raise ValueError(f"row index {j} outside 1..{d}")
        if j > 1 and rows[j - 2] == rows[j - 1]:
            raise ValueError(f"path {tuple(path)} leaves a Young diagram at row {j}")
        rows[j - 1] += 1
    return Partition(tuple(rows))


def standard_paths(lam) -> list[tuple[int, ...]]:
    """All add-a-box paths ending at ``lam`` (standard Young tableaux), lexicographic."""
    parts = list(lam.parts if isinstance(lam, Partition) else lam)
    d = len(parts)
    n = sum(parts)
    out: list[tuple[int, ...]] = []

    def grow(rows, path):
        if len(path) == n - 1:
            out.append(tuple(path))
            return
        for j in range(d):
            if rows[j] < parts[j] and (j == 0 or rows[j - 1] > rows[j]):
                rows[j] += 1
                grow(rows, path + [j + 1])
                rows[j] -= 1

    if n == 0:
        return []
    if parts[0] < 1:
        return []
    grow([1] + [0] * (d - 1), [])
    return out


def canonical_sigma(lam, N: int | None = None) -> tuple[int, ...]:
    """Lexicographically smallest add-a-box path ending at ``lam``."""
    parts = list(lam.parts if isinstance(lam, Partition) else lam)
    if N is not None and sum(parts) != N:
        raise ValueError(f"{tuple(parts)} is not a partition of {N}")
    paths = standard_paths(parts)
    if not paths:
        raise ValueError(f"no path for {tuple(parts)}")
    # greedy row-1-first fill is the lexicographic minimum; first element of the sorted list
    return paths[0]


# ---------------------------------------------------------------------------


def select_shape(stat: StatisticsSector, N: int, d: int, lam=None) -> Partition:
    shapes = sector_shapes(stat, N, d)
    if lam is None:
        return shapes[0]
    lam = Partition.of(lam.parts if isinstance(lam, Partition) else lam, d)
    if lam not in shapes:
        raise MappingError(f"shape {lam} is not admissible for {stat.kind} (order {stat.order})")
    return lam


def map_superposition(
    configs: Sequence[FockState | Sequence[int]],
    coeffs: Sequence[complex],
    stat: StatisticsSector,
    lam=None,
    sigma: Sequence[int] | None = None,
) -> LabeledSuperposition:
    """Map ``sum_i c_i |n_i>`` to ``sum_i c_i |lambda, mu_i, sigma>``."""
    configs = [c if isinstance(c, FockState) else FockState(tuple(c)) for c in configs]
    if not configs:
        raise MappingError("no configurations given")
    if len(configs) != len(coeffs):
        raise MappingError(f"{len(configs)} configurations but {len(coeffs)} coefficients")
    d, N = configs[0].d, configs[0].N
    for c in configs:
        if c.d != d or c.N != N:
            raise MappingError(f"{c} does not share d={d}, N={N} with {configs[0]}")
    if len(set(configs)) != len(configs):
        seen = set()
        dup = next(c for c in configs if c in seen or seen.add(c))
        raise MappingError(f"duplicate configuration {dup}")
    norm = math.fsum(abs(complex(c)) ** 2 for c in coeffs)
    if abs(norm - 1.0) > NORM_TOL:
        raise MappingError(f"coefficients not normalized: sum |c|^2 = {norm!r}")
    shape = select_shape(stat, N, d, lam)
    path = tuple(sigma) if sigma is not None else canonical_sigma(shape, N)
    terms = []
    for c, n in zip(coeffs, configs):
        try:
            mu = dynkin_to_gt(shape, dynkin_from_fock(n))
        except MappingError as exc:
            raise MappingError(f"configuration {n} is not permissible in {shape}: {exc}") from None
        terms.append((complex(c), SchurLabel(shape, mu, path)))
    mus = [t[1].mu for t in terms]
    assert len(set(mus)) == len(mus)
    return LabeledSuperposition(terms, list(configs))


def label_weight(label: SchurLabel) -> tuple[int, ...]:
    return gt_weight(label.mu)[0]
