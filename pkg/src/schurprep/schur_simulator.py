"""Dense construction of Schur-basis vectors in (C^d)^{\\otimes N}.

Two independent routes are provided:

* :func:`gt_chain_basis` builds every ``|lambda, mu, sigma>`` from the subgroup
  chains alone. The S_N copy is fixed by Jucys-Murphy eigenvalues and the GT
  pattern by descending U(d) > U(d-1) > ... > U(1) through highest-weight vectors.
* :func:`cg_cascade_state` couples one qudit at a time with U(d) Clebsch-Gordan
  coefficients assembled from reduced Wigner coefficients (see :mod:`.wigner`).

Basis index convention: the amplitude at index ``sum_k i_k d^(N-k)`` belongs to
``|i_1 ... i_N>``. The Young-Yamanouchi chain S_1 < S_2 < ... < S_N acts on the
trailing tensor factors, i.e. particle ``t`` of an add-a-box path sits at
position ``N + 1 - t``.
"""
from __future__ import annotations

import functools
import json
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np
import scipy.sparse as sp

from .fock_schur import (
    EmptySectorError,
    LabeledSuperposition,
    SchurLabel,
    path_shape,
    standard_paths,
)
from .wigner import reduced_wigner, shifted_row
from .repr_core import (
    GTPattern,
    Partition,
    enumerate_gt_patterns,
    gt_weight,
    sym_group_dimension,
    weyl_dimension,
)

DEFAULT_CAP = 2**20
CLUSTER_TOL = 1e-8
AMPLITUDE_FLOOR = 1e-12


class CapExceededError(RuntimeError):
    """Requested Hilbert space is larger than the configured dense cap."""


def check_cap(d: int, N: int, cap: int = DEFAULT_CAP) -> int:
    dim = d**N
    if dim > cap:
        raise CapExceededError(f"d^N = {d}^{N} = {dim} exceeds the dense cap {cap}")
    return dim


# ---------------------------------------------------------------------------
# dense states


@dataclass
class DenseState:
    amplitudes: np.ndarray
    d: int
    N: int

    def __post_init__(self):
        self.amplitudes = np.asarray(self.amplitudes, dtype=complex)
        if self.amplitudes.shape != (self.d**self.N,):
            raise ValueError(f"expected {self.d**self.N} amplitudes, got {self.amplitudes.shape}")

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def index_string(self, idx: int) -> str:
        return "".join(map(str, index_digits(idx, self.d, self.N)))

    def nonzero(self, floor: float = AMPLITUDE_FLOOR) -> list[tuple[str, complex]]:
        idx = np.flatnonzero(np.abs(self.amplitudes) > floor)
        return [(self.index_string(int(i)), complex(self.amplitudes[i])) for i in idx]

    def amplitude(self, digits: str | Sequence[int]) -> complex:
        return complex(self.amplitudes[digits_index(digits, self.d)])

    def overlap(self, other: "DenseState") -> complex:
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def to_records(self, floor: float = AMPLITUDE_FLOOR) -> list[dict]:
        return [{"index": s, "re": a.real, "im": a.imag} for s, a in self.nonzero(floor)]

    def to_json(self, floor: float = AMPLITUDE_FLOOR) -> str:
        return json.dumps({"d": self.d, "N": self.N, "amplitudes": self.to_records(floor)}, indent=2)

    def to_csv(self, floor: float = AMPLITUDE_FLOOR) -> str:
        lines = ["index,re,im"]
        lines += [f"{r['index']},{r['re']:.12g},{r['im']:.12g}" for r in self.to_records(floor)]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_terms(cls, terms: dict[str, complex], d: int) -> "DenseState":
        N = len(next(iter(terms)))
        amps = np.zeros(d**N, dtype=complex)
        for s, a in terms.items():
            amps[digits_index(s, d)] += a
        return cls(amps, d, N)


def index_digits(idx: int, d: int, N: int) -> tuple[int, ...]:
    out = []
    for _ in range(N):
        idx, r = divmod(idx, d)
        out.append(r)
    return tuple(reversed(out))


def digits_index(digits: str | Sequence[int], d: int) -> int:
    idx = 0
    for c in digits:
        idx = idx * d + int(c)
    return idx


def fix_phase(vec: np.ndarray, floor: float = 1e-9) -> np.ndarray:
    """Rotate so the first non-negligible amplitude is real and positive."""
    nz = np.flatnonzero(np.abs(vec) > floor)
    if nz.size == 0:
        return vec
    a = vec[nz[0]]
    return vec * (abs(a) / a)


def phase_aligned_distance(a: np.ndarray, b: np.ndarray) -> float:
    """max |a e^{i phi} - b| with phi chosen to align ``a`` onto ``b``."""
    ov = np.vdot(a, b)
    phase = ov / abs(ov) if abs(ov) > 0 else 1.0
    return float(np.max(np.abs(a * phase - b)))


# ---------------------------------------------------------------------------
# weight spaces


class TensorSpace:
    """Index bookkeeping for (C^d)^{\\otimes N} split into weight spaces."""

    def __init__(self, d: int, N: int, cap: int = DEFAULT_CAP):
        self.d, self.N = d, N
        self.dim = check_cap(d, N, cap)
        self.place = d ** np.arange(N - 1, -1, -1, dtype=np.int64)
        self._bases: dict[tuple[int, ...], np.ndarray] = {}
        self._ops: dict[tuple, sp.csr_matrix] = {}

    def basis(self, omega: Sequence[int]) -> np.ndarray:
        """Sorted global indices of strings whose symbol counts equal ``omega``."""
        omega = tuple(int(w) for w in omega)
        if omega not in self._bases:
            if len(omega) != self.d or sum(omega) != self.N or min(omega) < 0:
                self._bases[omega] = np.zeros(0, dtype=np.int64)
            else:
                self._bases[omega] = _multiset_indices(omega, self.d, self.N)
        return self._bases[omega]

    def digits(self, idx: np.ndarray) -> np.ndarray:
        return (idx[:, None] // self.place[None, :]) % self.d

    def embed(self, omega: Sequence[int], coords: np.ndarray) -> np.ndarray:
        out = np.zeros(self.dim, dtype=coords.dtype)
        out[self.basis(omega)] = coords
        return out

    def _target(self, omega, new_idx, omega_new):
        tgt = self.basis(omega_new)
        pos = np.searchsorted(tgt, new_idx)
        assert np.array_equal(tgt[pos], new_idx)
        return pos

    def unit_op(self, a: int, b: int, omega: Sequence[int]) -> sp.csr_matrix:
        """Matrix of ``sum_k |a><b|_k`` from weight space ``omega`` (0-indexed modes)."""
        omega = tuple(omega)
        key = ("E", a, b, omega)
        if key not in self._ops:
            src = self.basis(omega)
            new_omega = list(omega)
            new_omega[a] += 1
            new_omega[b] -= 1
            if a == b:
                self._ops[key] = sp.identity(len(src), format="csr") * omega[a]
            elif omega[b] == 0 or len(src) == 0:
                self._ops[key] = sp.csr_matrix((len(self.basis(new_omega)), len(src)))
            else:
                dig = self.digits(src)
                rows, cols = np.nonzero(dig == b)
                new_idx = src[rows] + (a - b) * self.place[cols]
                pos = self._target(omega, new_idx, tuple(new_omega))
                m = sp.coo_matrix(
                    (np.ones(len(rows)), (pos, rows)), shape=(len(self.basis(new_omega)), len(src))
                )
                self._ops[key] = m.tocsr()
        return self._ops[key]

    def swap_op(self, p: int, q: int, omega: Sequence[int]) -> sp.csr_matrix:
        """Transposition of tensor positions ``p`` and ``q`` (0-indexed) on one weight space."""
        omega = tuple(omega)
        key = ("P", min(p, q), max(p, q), omega)
        if key not in self._ops:
            src = self.basis(omega)
            dig = self.digits(src)
            new_idx = src + (dig[:, q] - dig[:, p]) * self.place[p] + (dig[:, p] - dig[:, q]) * self.place[q]
            pos = self._target(omega, new_idx, omega)
            n = len(src)
            self._ops[key] = sp.csr_matrix((np.ones(n), (pos, np.arange(n))), shape=(n, n))
        return self._ops[key]

    def jucys_murphy(self, t: int, omega: Sequence[int]) -> sp.csr_matrix:
        """JM element for particle ``t`` (2..N) of the chain on trailing positions."""
        pos = lambda s: self.N - s  # particle s -> 0-indexed tensor position
        n = len(self.basis(omega))
        out = sp.csr_matrix((n, n))
        for s in range(1, t):
            out = out + self.swap_op(pos(s), pos(t), omega)
        return out


@functools.lru_cache(maxsize=None)
def _multiset_indices_cached(omega: tuple[int, ...], d: int, N: int) -> np.ndarray:
    place = d ** np.arange(N - 1, -1, -1, dtype=np.int64)
    # build strings by placing symbols one type at a time into remaining slots
    strings = np.zeros((1, N), dtype=np.int64) - 1
    for sym, count in enumerate(omega):
        if count == 0:
            continue
        new = []
        for row in strings:
            free = np.flatnonzero(row < 0)
            for combo in _combinations(len(free), count):
                r = row.copy()
                r[free[list(combo)]] = sym
                new.append(r)
        strings = np.array(new, dtype=np.int64)
    idx = np.sort(strings @ place)
    idx.setflags(write=False)
    return idx


def _combinations(n, k):
    import itertools

    return itertools.combinations(range(n), k)


def _multiset_indices(omega, d, N):
    return _multiset_indices_cached(tuple(omega), d, N)


# ---------------------------------------------------------------------------
# total operators


def total_operator(i: int, j: int, d: int, N: int, cap: int = DEFAULT_CAP) -> sp.csr_matrix:
    """Sparse ``Lambda_{i,j} = sum_k Q_{i,j}^{(k)}`` on the full space (1-indexed modes).

    Off-diagonal ``Q_{i,j} = |i><j|``; diagonal ``Q_{i,i} = H_i = E_{ii} - E_{i+1,i+1}``.
    """
    if not (1 <= i <= d and 1 <= j <= d):
        raise IndexError(f"mode indices ({i},{j}) outside 1..{d}")
    if i == j and i > d - 1:
        raise IndexError(f"Cartan index {i} outside 1..{d - 1}")
    dim = check_cap(d, N, cap)
    idx = np.arange(dim, dtype=np.int64)
    place = d ** np.arange(N - 1, -1, -1, dtype=np.int64)
    dig = (idx[:, None] // place[None, :]) % d
    if i == j:
        diag = (dig == i - 1).sum(axis=1) - (dig == i).sum(axis=1)
        return sp.diags(diag.astype(float), format="csr")
    rows, cols = np.nonzero(dig == j - 1)
    new_idx = idx[rows] + (i - j) * place[cols]
    return sp.csr_matrix((np.ones(len(rows)), (new_idx, idx[rows])), shape=(dim, dim))


def number_operator(i: int, d: int, N: int, cap: int = DEFAULT_CAP) -> sp.csr_matrix:
    """``sum_k E_{ii}^{(k)}`` (1-indexed mode)."""
    dim = check_cap(d, N, cap)
    idx = np.arange(dim, dtype=np.int64)
    place = d ** np.arange(N - 1, -1, -1, dtype=np.int64)
    dig = (idx[:, None] // place[None, :]) % d
    return sp.diags((dig == i - 1).sum(axis=1).astype(float), format="csr")


def transposition_operator(p: int, q: int, d: int, N: int, cap: int = DEFAULT_CAP) -> sp.csr_matrix:
    """Swap of tensor factors ``p`` and ``q`` (1-indexed) on the full space."""
    dim = check_cap(d, N, cap)
    idx = np.arange(dim, dtype=np.int64)
    place = d ** np.arange(N - 1, -1, -1, dtype=np.int64)
    dig = (idx[:, None] // place[None, :]) % d
    a, b = p - 1, q - 1
    new = idx + (dig[:, b] - dig[:, a]) * place[a] + (dig[:, a] - dig[:, b]) * place[b]
    return sp.csr_matrix((np.ones(dim), (new, idx)), shape=(dim, dim))


# ---------------------------------------------------------------------------
# GT-chain construction


def _orth(m: np.ndarray, tol: float = CLUSTER_TOL) -> np.ndarray:
    if m.size == 0 or m.shape[1] == 0:
        return np.zeros((m.shape[0], 0))
    u, s, _ = np.linalg.svd(m, full_matrices=False)
    if s.size == 0:
        return u[:, :0]
    keep = s > tol * max(1.0, s[0])
    return u[:, keep]


def _null(blocks: list, n: int, tol: float = CLUSTER_TOL) -> np.ndarray:
    """Orthonormal basis for the common kernel of the stacked dense blocks (columns = n)."""
    blocks = [b for b in blocks if b.shape[0] > 0]
    if not blocks:
        return np.eye(n)
    m = np.vstack(blocks)
    _, s, vh = np.linalg.svd(m, full_matrices=True)
    rank = int(np.sum(s > tol))
    return vh[rank:].conj().T


class GTChainBuilder:
    """Builds ``|lambda, mu, path>`` vectors for one tensor space, memoising shared work."""

    def __init__(self, d: int, N: int, cap: int = DEFAULT_CAP, tol: float = CLUSTER_TOL):
        self.space = TensorSpace(d, N, cap)
        self.d, self.N, self.tol = d, N, tol
        self._hw: dict[tuple, dict[tuple[int, ...], np.ndarray]] = {}
        self._level: dict[tuple, np.ndarray] = {}
        self._rng = np.random.default_rng(20240613)

    # -- S_N copy ----------------------------------------------------------

    def highest_weight_vectors(self, lam: Partition) -> dict[tuple[int, ...], np.ndarray]:
        """U(d) highest-weight vectors of weight ``lam``, one per add-a-box path."""
        key = lam.parts
        if key in self._hw:
            return self._hw[key]
        d, sp_ = self.d, self.space
        omega = lam.parts
        n = len(sp_.basis(omega))
        raising = [sp_.unit_op(i, i + 1, omega).toarray() for i in range(d - 1)]
        hw = _null(raising, n, self.tol)
        paths = standard_paths(lam)
        assert hw.shape[1] == len(paths), (hw.shape, len(paths))
        if len(paths) == 1:
            self._hw[key] = {paths[0]: hw[:, 0]}
            return self._hw[key]
        jms = [hw.T @ (sp_.jucys_murphy(t, omega) @ hw) for t in range(2, self.N + 1)]
        coeffs = self._rng.uniform(1.0, 2.0, size=len(jms))
        combo = sum(c * m for c, m in zip(coeffs, jms))
        vals, vecs = np.linalg.eigh((combo + combo.T) / 2)
        out = {}
        for path in paths:
            cont = path_contents(path)
            target = float(np.dot(coeffs, cont[1:]))
            k = int(np.argmin(np.abs(vals - target)))
            v = hw @ vecs[:, k]
            for t, m in enumerate(jms, start=2):
                w = vecs[:, k]
                if np.linalg.norm(m @ w - cont[t - 1] * w) > 1e-7:
                    raise RuntimeError(f"Jucys-Murphy identification failed for path {path}")
            out[path] = v
        self._hw[key] = out
        return out

    # -- U(d) descent ------------------------------------------------------

    def _slice(self, h: np.ndarray, omega_h: tuple[int, ...], r: int, omega_t: tuple[int, ...]) -> np.ndarray:
        """Orthonormal basis of the U(r+1)-module of ``h`` restricted to weight ``omega_t``.

        Lowering operators ``|i+1><i|`` for modes i < r (0-indexed) only.
        """
        c_target = []
        acc = 0
        for i in range(r):
            acc += omega_h[i] - omega_t[i]
            c_target.append(acc)
        if any(c < 0 for c in c_target):
            raise ValueError(f"weight {omega_t} is not below {omega_h}")

        def weight_of(c):
            w = list(omega_h)
            for i, ci in enumerate(c):
                w[i] -= ci
                w[i + 1] += ci
            return tuple(w)

        zero = tuple([0] * r)
        slices: dict[tuple[int, ...], np.ndarray] = {zero: h[:, None]}
        layer = {zero}
        for _ in range(sum(c_target)):
            nxt = set()
            for c in layer:
                w = weight_of(c)
                for i in range(r):
                    if c[i] < c_target[i] and w[i] > 0:
                        nxt.add(c[:i] + (c[i] + 1,) + c[i + 1 :])
            for c in nxt:
                w = weight_of(c)
                cols = []
                for i in range(r):
                    prev = c[:i] + (c[i] - 1,) + c[i + 1 :]
                    pb = slices.get(prev)
                    if c[i] == 0 or pb is None or pb.shape[1] == 0:
                        continue
                    cols.append(self.space.unit_op(i + 1, i, weight_of(prev)) @ pb)
                if cols:
                    slices[c] = _orth(np.hstack(cols), self.tol)
            layer = {c for c in nxt if c in slices and slices[c].shape[1] > 0}
        if tuple(c_target) not in slices:
            return np.zeros((len(self.space.basis(omega_t)), 0))
        return slices[tuple(c_target)]

    def level_vector(self, lam: Partition, path: tuple[int, ...], rows: tuple[tuple[int, ...], ...]) -> np.ndarray:
        """U(r)-highest-weight vector fixed by the top GT rows ``rows`` (coordinates in its weight space)."""
        key = (lam.parts, path, rows)
        if key in self._level:
            return self._level[key]
        if len(rows) == 1:
            v = self.highest_weight_vectors(lam)[path]
            self._level[key] = v
            return v
        d = self.d
        upper_rows = rows[:-1]
        h = self.level_vector(lam, path, upper_rows)
        omega_h = _hw_weight(upper_rows, d)
        omega_t = _hw_weight(rows, d)
        r = len(rows[-1])
        basis = self._slice(h, omega_h, r, omega_t)
        if r > 1:
            raising = [(self.space.unit_op(i, i + 1, omega_t) @ basis) for i in range(r - 1)]
            ker = _null([np.asarray(m) for m in raising], basis.shape[1], self.tol)
            vec = basis @ ker
        else:
            vec = basis
        if vec.shape[1] != 1:
            raise RuntimeError(f"branching for rows {rows} is not one-dimensional ({vec.shape[1]})")
        v = vec[:, 0]
        v = v / np.linalg.norm(v)
        self._level[key] = v
        return v

    def vector(self, lam: Partition, mu: GTPattern, path: tuple[int, ...]) -> np.ndarray:
        rows = mu.rows
        coords = self.level_vector(lam, tuple(path), rows)
        omega, _ = gt_weight(mu)
        full = self.space.embed(omega, coords.astype(complex))
        return fix_phase(full)


def _hw_weight(rows: tuple[tuple[int, ...], ...], d: int) -> tuple[int, ...]:
    """Weight of the U(r)-highest-weight vector fixed by the top rows ``rows``.

    Modes below the last row carry its entries; the modes above carry the
    row-sum differences of the upper rows.
    """
    last = rows[-1]
    r = len(last)
    sums = [sum(row) for row in rows]  # sums[k] is the sum of the row with d-k entries
    w = list(last) + [0] * (d - r)
    for k in range(len(rows) - 1):
        size = d - k  # row with `size` entries sits above row with size-1 entries
        w[size - 1] = sums[k] - sums[k + 1]
    return tuple(w)


def path_contents(path: Sequence[int]) -> list[int]:
    """Content (column - row) of each box in add order, first box included."""
    rows: dict[int, int] = {1: 1}
    cont = [0]
    for j in path:
        col = rows.get(j, 0) + 1
        rows[j] = col
        cont.append((col - 1) - (j - 1))
    return cont


_BUILDERS: dict[tuple[int, int, int], GTChainBuilder] = {}


def _builder(d: int, N: int, cap: int = DEFAULT_CAP) -> GTChainBuilder:
    key = (d, N, cap)
    if key not in _BUILDERS:
        _BUILDERS[key] = GTChainBuilder(d, N, cap)
    return _BUILDERS[key]


@dataclass
class SchurBasisSet:
    lam: Partition
    d: int
    N: int
    vectors: dict[SchurLabel, DenseState] = field(default_factory=dict)

    def __len__(self):
        return len(self.vectors)

    def gram(self) -> np.ndarray:
        m = np.array([v.amplitudes for v in self.vectors.values()])
        return m.conj() @ m.T

    def matrix(self) -> np.ndarray:
        """Columns are the basis vectors, in insertion order."""
        return np.array([v.amplitudes for v in self.vectors.values()]).T


def schur_vector(label: SchurLabel, d: int | None = None, cap: int = DEFAULT_CAP) -> DenseState:
    """One GT-chain basis vector."""
    lam = label.lam
    d = d or len(lam)
    N = lam.size
    builder = _builder(d, N, cap)
    return DenseState(builder.vector(lam, label.mu, tuple(label.sigma)), d, N)


def gt_chain_basis(lam, d: int, N: int | None = None, cap: int = DEFAULT_CAP) -> SchurBasisSet:
    """All ``|lambda, mu, sigma>`` for one irrep, sigma running over every add-a-box path."""
    parts = lam.parts if isinstance(lam, Partition) else tuple(lam)
    if N is None:
        N = sum(parts)
    if sum(parts) != N:
        raise ValueError(f"{parts} is not a partition of N={N}")
    if sum(1 for p in parts if p) > d:
        raise EmptySectorError(f"shape {parts} has more than d={d} rows")
    lam = Partition.of(parts, d)
    check_cap(d, N, cap)
    builder = _builder(d, N, cap)
    out = SchurBasisSet(lam, d, N)
    for path in standard_paths(lam):
        for mu in enumerate_gt_patterns(lam):
            label = SchurLabel(lam, mu, path)
            out.vectors[label] = DenseState(builder.vector(lam, mu, path), d, N)
    assert len(out) == weyl_dimension(lam) * sym_group_dimension(lam)
    return out


def prepare_first_quantized(task: LabeledSuperposition, d: int | None = None, cap: int = DEFAULT_CAP) -> DenseState:
    """``sum_i c_i |lambda, mu_i, sigma>_Sch`` as a dense vector."""
    d = d or task.d
    N = task.N
    check_cap(d, N, cap)
    amps = np.zeros(d**N, dtype=complex)
    for c, label in task.terms:
        amps += c * schur_vector(label, d, cap).amplitudes
    state = DenseState(amps, d, N)
    if abs(state.norm - 1.0) > 1e-10:
        raise RuntimeError(f"prepared state has norm {state.norm}")
    return state


def all_labels(d: int, N: int) -> Iterable[SchurLabel]:
    from .repr_core import enumerate_partitions

    for lam in enumerate_partitions(N, d):
        for path in standard_paths(lam):
            for mu in enumerate_gt_patterns(lam):
                yield SchurLabel(lam, mu, path)


# ---------------------------------------------------------------------------
# Clebsch-Gordan cascade


def fundamental_rows(k: int, d: int) -> tuple[tuple[int, ...], ...]:
    """GT rows (top first) of the single-box basis state ``|k>`` (1-indexed mode)."""
    return tuple(tuple(1 if (i == 0 and s >= k) else 0 for i in range(s)) for s in range(d, 0, -1))


def cg_coefficient(old_rows, new_rows, k: int, form: str = "standard") -> float:
    """``<lambda' mu'; e_k | lambda mu>`` for ``lambda = lambda' + box``, or 0 if not coupled.

    Rows are top-first tuples. The coefficient is the product of reduced Wigner
    entries over levels ``s = d .. k``.
    """
    d = len(old_rows[0])
    js = {}
    for s in range(d, 0, -1):
        a, b = old_rows[d - s], new_rows[d - s]
        diff = [y - x for x, y in zip(a, b)]
        if s >= k:
            if sorted(diff) != [0] * (s - 1) + [1]:
                return 0.0
            js[s] = diff.index(1) + 1
        elif any(diff):
            return 0.0
    coef = 1.0
    for s in range(d, k - 1, -1):
        if s == 1:
            continue
        jp = js[s - 1] if s - 1 >= k else 0
        mt = shifted_row(old_rows[d - s], s)
        mpt = shifted_row(old_rows[d - s + 1], s, lower=True)
        coef *= reduced_wigner(s, mt, js[s], mpt, jp, form)
        if coef == 0.0:
            break
    return coef


class CGCascade:
    """Builds ``|lambda, mu, path>`` one qudit at a time from U(d) CG coefficients.

    Each new particle is prepended as the leading tensor factor, so particle ``t`` ends
    at position ``N + 1 - t`` exactly as in :class:`GTChainBuilder`.
    """

    def __init__(self, d: int, form: str = "standard"):
        self.d, self.form = d, form
        self._memo: dict[tuple, np.ndarray] = {}
        self._patterns: dict[tuple[int, ...], list[GTPattern]] = {}

    def _pats(self, lam: tuple[int, ...]) -> list[GTPattern]:
        if lam not in self._patterns:
            self._patterns[lam] = enumerate_gt_patterns(Partition(lam))
        return self._patterns[lam]

    def state(self, path: tuple[int, ...], rows: tuple[tuple[int, ...], ...]) -> np.ndarray:
        key = (path, rows)
        if key in self._memo:
            return self._memo[key]
        d = self.d
        if not path:
            k = next(k for k in range(1, d + 1) if fundamental_rows(k, d) == rows)
            out = np.zeros(d)
            out[k - 1] = 1.0
            self._memo[key] = out
            return out
        j = path[-1]
        old_lam = list(rows[0])
        old_lam[j - 1] -= 1
        old_lam = tuple(old_lam)
        n = sum(old_lam)
        out = np.zeros(d ** (n + 1))
        for pat in self._pats(old_lam):
            for k in range(1, d + 1):
                c = cg_coefficient(pat.rows, rows, k, self.form)
                if c == 0.0:
                    continue
                sub = self.state(path[:-1], pat.rows)
                out[(k - 1) * d**n : k * d**n] += c * sub
        self._memo[key] = out
        return out


def cg_cascade_state(label: SchurLabel, d: int | None = None, cap: int = DEFAULT_CAP, form: str = "standard") -> DenseState:
    """Schur-basis vector assembled by the CG cascade rather than the GT chain."""
    d = d or len(label.lam)
    N = label.lam.size
    check_cap(d, N, cap)
    path = tuple(label.sigma)
    if path_shape(path, d) != label.lam:
        raise ValueError(f"invalid path {path} for {label.lam}")
    vec = CGCascade(d, form).state(path, label.mu.rows)
    return DenseState(fix_phase(vec.astype(complex)), d, N)



# ---------------------------------------------------------------------------
# reference comparison


GOLDEN_TOL = 1e-10


def parse_compact_gt(text: str, lam: Sequence[int]) -> GTPattern:
    """``"(x,y;k)"`` with top row ``lam`` to a full d=3 pattern."""
    body = text.strip().strip("()")
    mid, last = body.split(";")
    x, y = (int(v) for v in mid.split(","))
    return GTPattern((tuple(lam), (x, y), (int(last),)))


@dataclass
class GoldenRow:
    lam: tuple[int, ...]
    sigma: tuple[int, ...]
    gt: str
    deviation: float
    passed: bool

    def to_dict(self) -> dict:
        return {"lambda": list(self.lam), "sigma": list(self.sigma), "gt": self.gt,
                "deviation": self.deviation, "passed": self.passed}


@dataclass
class GoldenReport:
    rows: list[GoldenRow]
    tol: float
    seconds: float

    @property
    def n_passed(self) -> int:
        return sum(r.passed for r in self.rows)

    @property
    def max_deviation(self) -> float:
        return max(r.deviation for r in self.rows)

    @property
    def ok(self) -> bool:
        return self.n_passed == len(self.rows)

    def failures(self) -> list[GoldenRow]:
        return [r for r in self.rows if not r.passed]

    def summary(self) -> str:
        return (f"{self.n_passed}/{len(self.rows)} states match, max deviation "
                f"{self.max_deviation:.3e}, {self.seconds:.2f} s")

    def to_json(self) -> str:
        return json.dumps({"passed": self.n_passed, "total": len(self.rows), "tol": self.tol,
                           "max_deviation": self.max_deviation, "seconds": self.seconds,
                           "rows": [r.to_dict() for r in self.rows]}, indent=2)


def verify_golden_u3(table=None, tol: float = GOLDEN_TOL) -> GoldenReport:
    """Rebuild every d=3, N=3 Schur state and compare with the reference table modulo global phase."""
    import time

    from .golden import U3_TABLE

    t0 = time.perf_counter()
    table = U3_TABLE if table is None else table
    rows = []
    for lam, sigma, gt, _fock, _z, terms in table:
        ref = DenseState.from_terms({k: complex(v) for k, v in terms.items()}, 3)
        ref.amplitudes /= ref.norm
        label = SchurLabel(Partition(tuple(lam)), parse_compact_gt(gt, lam), tuple(sigma))
        got = schur_vector(label, 3)
        dev = phase_aligned_distance(got.amplitudes, ref.amplitudes)
        rows.append(GoldenRow(tuple(lam), tuple(sigma), gt, dev, dev < tol))
    return GoldenReport(rows, tol, time.perf_counter() - t0)
