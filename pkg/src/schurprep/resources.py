"""Closed-form Toffoli-equivalent (TE) and qubit model.

Covers the BCH-style Schur transform, the LCU block encoding (PREP via QROAM with
alias sampling, SEL via mask lookup), its repeat-until-success (RUS) and oblivious
amplitude amplification (OAA) realizations, and end-to-end totals.

Integer components are computed in exact integer (or ``Fraction``) arithmetic. The
rotation-synthesis T counts are the only real-valued terms; they are summed exactly
and rounded up once per category when totals are formed.
"""
from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .repr_core import ENCODINGS, RegisterWidths, ceil_log2, register_widths

MODES = ("RUS", "OAA")


class CostModelError(ValueError):
    pass


@dataclass(frozen=True)
class CostParams:
    epsilon: float = 1e-4
    alpha_dir: float = 1.149
    beta_dir: float = 9.2
    b_r: int = 7
    a_mcx_prov: int = 0
    s_sign: int = 1
    encoding: str = "compressed"
    k1: int | None = None
    k2: int | None = None
    k1_sel: int | None = None
    k2_sel: int | None = None
    epsilon_prep: float | None = None

    def __post_init__(self):
        if not 0 < self.epsilon < 0.5:
            raise CostModelError(f"epsilon must lie in (0, 1/2), got {self.epsilon}")
        if self.b_r < 1:
            raise CostModelError("b_r must be >= 1")
        if self.a_mcx_prov < 0 or self.s_sign < 0:
            raise CostModelError("ancilla bank and sign width must be nonnegative")
        if self.encoding not in ENCODINGS:
            raise CostModelError(f"unknown encoding {self.encoding!r}")
        if self.epsilon_prep is not None and not 0 < self.epsilon_prep < 1:
            raise CostModelError(f"epsilon_prep must lie in (0, 1), got {self.epsilon_prep}")
        for name in ("k1", "k2", "k1_sel", "k2_sel"):
            k = getattr(self, name)
            if k is not None and (k < 1 or k & (k - 1)):
                raise CostModelError(f"{name} must be a power of two, got {k}")

    @property
    def eps_prep(self) -> float:
        return self.epsilon if self.epsilon_prep is None else self.epsilon_prep

    def replace(self, **kw) -> "CostParams":
        return dataclasses.replace(self, **kw)

    @classmethod
    def from_dict(cls, data: dict) -> "CostParams":
        names = {f.name for f in dataclasses.fields(cls)}
        unknown = set(data) - names
        if unknown:
            raise CostModelError(f"unknown cost parameters: {sorted(unknown)}")
        return cls(**data)


# ---------------------------------------------------------------------------
# primitives


@dataclass(frozen=True)
class ArithmeticCosts:
    w: int
    A: int
    M: int
    I_rec: int
    C_recip: int
    I_sqrt: int
    C_sqrt: int


def arithmetic_costs(w: int) -> ArithmeticCosts:
    if w < 1:
        raise CostModelError("word size must be >= 1")
    A = 2 * w - 1
    M = 2 * w * w + w
    I_rec = ceil_log2(w) + 2
    C_recip = I_rec * (2 * M + 3 * A)
    I_sqrt = I_rec
    C_sqrt = I_sqrt * (C_recip + M + 2 * A)
    return ArithmeticCosts(w, A, M, I_rec, C_recip, I_sqrt, C_sqrt)


def cordic_cost(w: int, f: int) -> int:
    if w < 1 or f < 1:
        raise CostModelError("CORDIC needs w, f >= 1")
    return 3 * f * arithmetic_costs(w).A


@dataclass(frozen=True)
class SynthesisCost:
    delta: float
    T_dir: float
    T_cR: float


def rotation_synthesis(delta: float, params: CostParams | None = None) -> SynthesisCost:
    if not 0 < delta < 1:
        raise CostModelError(f"synthesis tolerance must lie in (0, 1), got {delta}")
    p = params or CostParams()
    t_dir = p.alpha_dir * math.log2(1 / delta) + p.beta_dir
    t_cr = 2 * (p.alpha_dir * math.log2(2 / delta) + p.beta_dir)
    return SynthesisCost(delta, t_dir, t_cr)


def two_level_count(s: int) -> int:
    return math.comb(s, 2)


def enables(s: int) -> int:
    return 2 * ceil_log2(s) - 1


@dataclass(frozen=True)
class ErrorBudget:
    epsilon: float
    eps_rot: float
    eps_arith: float
    K_rot: int
    delta_rot: float
    eps_theta: float
    f: int


def error_budget(epsilon: float, d: int, N: int) -> ErrorBudget:
    if not 0 < epsilon < 0.5:
        raise CostModelError(f"epsilon must lie in (0, 1/2), got {epsilon}")
    if d < 2 or N < 2:
        raise CostModelError("error budget needs d >= 2 and N >= 2")
    eps_rot = epsilon / 2
    eps_arith = epsilon - eps_rot
    K_rot = (N - 1) * sum(two_level_count(s) * enables(s) for s in range(2, d + 1))
    eps_theta = eps_arith / K_rot
    f = math.ceil(math.log2(math.pi / eps_theta))
    return ErrorBudget(epsilon, eps_rot, eps_arith, K_rot, eps_rot / K_rot, eps_theta, f)


def word_size(s: int, N: int, f: int) -> int:
    if s < 2:
        raise CostModelError("word size defined for s >= 2")
    integer = ceil_log2(2 * N + 2 * s + 1) + 2
    guards = ceil_log2(s) + 3
    return integer + f + guards


def mcx_toffolis(k: int) -> int:
    """Linear clean-ancilla multi-control, floored at one Toffoli."""
    return max(1, 2 * k - 3)


# ---------------------------------------------------------------------------
# Schur transform


@dataclass(frozen=True)
class RankCost:
    s: int
    M_s: int
    E_s: int
    k_tot: int
    C_tof: int
    w: int
    compile_int: int
    compile_real: float
    C_diff: int
    C_entries: int
    C_angles: Fraction
    a_mcx: int
    a_arith: int
    Q_anc: int

    @property
    def compile_te(self) -> float:
        return self.compile_int + self.compile_real

    @property
    def C_eval(self) -> Fraction:
        return self.C_diff + self.C_entries + self.C_angles

    @property
    def te_exact_int(self) -> Fraction:
        return self.compile_int + self.C_eval

    @property
    def te(self) -> float:
        return float(self.te_exact_int) + self.compile_real


def rank_level_cost(s: int, d: int, N: int, params: CostParams | None = None,
                    budget: ErrorBudget | None = None, widths: RegisterWidths | None = None) -> RankCost:
    p = params or CostParams()
    if not 2 <= s <= d:
        raise CostModelError(f"rank s={s} outside 2..{d}")
    budget = budget or error_budget(p.epsilon, d, N)
    widths = widths or register_widths(d, N, p.encoding)
    n_s = ceil_log2(s)
    M_s, E_s = two_level_count(s), enables(s)
    k_tot = widths.k_lambda_mu + n_s - 1
    c_tof = mcx_toffolis(k_tot)
    t_cr = rotation_synthesis(budget.delta_rot, p).T_cR
    w = word_size(s, N, budget.f)
    ar = arithmetic_costs(w)
    pairs = s * (s - 1)
    c_diff = 2 * pairs * ar.A
    c_entries = pairs * (8 * ar.M + ar.C_recip + ar.C_sqrt + 5 * ar.A)
    c_angles = Fraction(3, 2) * pairs * budget.f * ar.A
    a_mcx = max(p.a_mcx_prov, max(0, widths.k_lambda_mu + n_s - 3))
    a_arith = 12 * w
    return RankCost(
        s=s, M_s=M_s, E_s=E_s, k_tot=k_tot, C_tof=c_tof, w=w,
        compile_int=M_s * E_s * 2 * c_tof, compile_real=M_s * E_s * t_cr / 7,
        C_diff=c_diff, C_entries=c_entries, C_angles=c_angles,
        a_mcx=a_mcx, a_arith=a_arith, Q_anc=n_s + a_mcx + a_arith,
    )


@dataclass(frozen=True)
class SchurCostBreakdown:
    d: int
    N: int
    budget: ErrorBudget
    widths: RegisterWidths
    ranks: tuple[RankCost, ...]

    @property
    def cg_te(self) -> float:
        """TE of one U(d) CG step (unrounded)."""
        return sum(r.te for r in self.ranks)

    @property
    def integer_part(self) -> Fraction:
        return (self.N - 1) * sum((r.te_exact_int for r in self.ranks), Fraction(0))

    @property
    def real_part(self) -> float:
        return (self.N - 1) * math.fsum(r.compile_real for r in self.ranks)

    @property
    def total(self) -> int:
        """(N-1) * sum_s TE_s, each category rounded up once."""
        return math.ceil(self.integer_part) + math.ceil(self.real_part)

    @property
    def inverse_total(self) -> int:
        return self.total

    @property
    def Q_sys(self) -> int:
        w = self.widths
        return w.n_system + w.n_lambda + w.n_mu + w.n_sigma

    @property
    def Q_anc_max(self) -> int:
        return max(r.Q_anc for r in self.ranks)

    @property
    def Q_peak(self) -> int:
        return self.Q_sys + self.Q_anc_max


def schur_transform_te(d: int, N: int, epsilon: float | None = None,
                       params: CostParams | None = None) -> SchurCostBreakdown:
    p = params or CostParams()
    if epsilon is not None and epsilon != p.epsilon:
        p = p.replace(epsilon=epsilon)
    if d < 2 or N < 2:
        raise CostModelError("Schur transform cost needs d >= 2 and N >= 2")
    budget = error_budget(p.epsilon, d, N)
    widths = register_widths(d, N, p.encoding)
    ranks = tuple(rank_level_cost(s, d, N, p, budget, widths) for s in range(2, d + 1))
    return SchurCostBreakdown(d, N, budget, widths, ranks)


@dataclass(frozen=True)
class SchurQubits:
    Q_sys: int
    Q_anc: dict[int, int]
    peak: int


def schur_qubits(d: int, N: int, epsilon: float | None = None, params: CostParams | None = None) -> SchurQubits:
    bd = schur_transform_te(d, N, epsilon, params)
    return SchurQubits(bd.Q_sys, {r.s: r.Q_anc for r in bd.ranks}, bd.Q_peak)


# ---------------------------------------------------------------------------
# block encoding


def v2(n: int) -> int:
    """2-adic valuation."""
    if n < 1:
        raise CostModelError("2-adic valuation needs n >= 1")
    return (n & -n).bit_length() - 1


def _round_half_away(x: float) -> int:
    return int(math.floor(abs(x) + 0.5)) * (1 if x >= 0 else -1)


def optimal_k(size: int, m: int | Fraction) -> int:
    """Power-of-two QROAM blocking ``2^round(log2(size/2m)/2)`` clamped to ``[1, size//2]``."""
    if size < 1 or m <= 0:
        raise CostModelError("optimal_k needs size >= 1 and m > 0")
    e = _round_half_away(0.5 * math.log2(size / (2 * float(m))))
    k = 2 ** max(e, 0)
    return max(1, min(k, max(1, size // 2)))


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class PrepCost:
    L: int
    beta: int
    R: int
    m: int
    k1: int
    k2: int
    b_r: int
    te: int
    ancilla: int


def prep_cost(L: int, params: CostParams | None = None) -> PrepCost:
    p = params or CostParams()
    if L < 2:
        raise CostModelError(f"degenerate LCU: L={L} < 2")
    beta = ceil_log2(L)
    R = math.ceil(math.log2(1 / p.eps_prep))
    m = beta + R + p.s_sign
    k1 = p.k1 or optimal_k(L, m)
    k2 = p.k2 or optimal_k(L, m)
    te = (2 * _ceil_div(L, 2 * k1) + m * (k1 - 1) + _ceil_div(L, 2 * k2) + k2
          + 2 * (3 * (beta + 1) - 3 * v2(L) + 2 * p.b_r - 9) + 2 * R + 2 * beta)
    anc = 6 + 2 * (beta + R) + p.b_r + max(
        m * (k1 - 1) + ceil_log2(_ceil_div(L, 2 * k1)),
        k2 + ceil_log2(_ceil_div(L, 2 * k2)),
    )
    return PrepCost(L, beta, R, m, k1, k2, p.b_r, te, anc)


@dataclass(frozen=True)
class SelCost:
    n_mu: int
    k1: int
    k2: int
    te: Fraction
    ancilla: int


def sel_cost(n_mu: int, k1: int | None = None, k2: int | None = None) -> SelCost:
    if n_mu < 1:
        raise CostModelError("SEL needs n_mu >= 1")
    default = optimal_k(n_mu, Fraction(max(n_mu, 1), 2))
    k1 = k1 or default
    k2 = k2 or default
    te = _ceil_div(n_mu, k1) + Fraction(n_mu, 2) * (k1 - 1) + _ceil_div(n_mu, k2) + k2
    anc = max(n_mu * (k1 - 1) + ceil_log2(_ceil_div(n_mu, k1)), k2 + ceil_log2(_ceil_div(n_mu, k2)))
    return SelCost(n_mu, k1, k2, te, anc)


@dataclass(frozen=True)
class BlockEncodingCost:
    mode: str
    L: int
    l1: float
    prep: PrepCost
    sel: SelCost
    attempts: float
    r_star: int | None
    theta: float | None
    reflection_te: int
    exact_amplification_needed: bool
    total_real: float
    ancilla: int

    @property
    def per_attempt_te(self) -> Fraction:
        return self.prep.te + self.sel.te

    @property
    def total(self) -> int:
        return math.ceil(self.total_real - 1e-9)


def address_width(L: int) -> int:
    return ceil_log2(L)


def rus_cost(L: int, l1: float, n_mu: int, params: CostParams | None = None) -> BlockEncodingCost:
    p = params or CostParams()
    if l1 < 1:
        raise CostModelError(f"l1 norm must be >= 1, got {l1}")
    prep = prep_cost(L, p)
    sel = sel_cost(n_mu, p.k1_sel, p.k2_sel)
    attempts = l1 * l1
    total = attempts * float(prep.te + sel.te)
    return BlockEncodingCost("RUS", L, l1, prep, sel, attempts, None, None, 0, False, total,
                             max(prep.ancilla, sel.ancilla))


def oaa_rounds(l1: float) -> tuple[float, int]:
    if l1 <= 1:
        raise CostModelError("no amplification needed for l1 <= 1")
    theta = math.asin(1 / l1)
    r = math.ceil((math.pi / 2 - theta) / (2 * theta) - 1e-12)
    return theta, r


def oaa_cost(L: int, l1: float, n_mu: int, params: CostParams | None = None,
             tol: float = 1e-9) -> BlockEncodingCost:
    p = params or CostParams()
    theta, r = oaa_rounds(l1)
    prep = prep_cost(L, p)
    sel = sel_cost(n_mu, p.k1_sel, p.k2_sel)
    b = address_width(L)
    refl = max(0, 2 * b - 3)
    total = (2 * r + 1) * float(prep.te + sel.te) + 2 * r * refl
    exact_flag = math.sin((2 * r + 1) * theta) < 1 - tol
    anc = max(prep.ancilla, sel.ancilla, max(0, b - 2))
    return BlockEncodingCost("OAA", L, l1, prep, sel, 2 * r + 1, r, theta, refl, exact_flag, total, anc)


def block_encoding_cost(mode: str, L: int, l1: float, n_mu: int, params: CostParams | None = None):
    mode = mode.upper()
    if mode == "RUS":
        return rus_cost(L, l1, n_mu, params)
    if mode == "OAA":
        return oaa_cost(L, l1, n_mu, params)
    raise CostModelError(f"unknown mode {mode!r}; choose from {MODES}")


# ---------------------------------------------------------------------------
# end to end


@dataclass(frozen=True)
class ResourceReport:
    d: int
    N: int
    L: int
    l1: float
    mode: str
    params: CostParams
    schur: SchurCostBreakdown
    block: BlockEncodingCost
    Q_block: int
    Q_schur: int

    @property
    def te_block(self) -> int:
        return self.block.total

    @property
    def te_schur_inverse(self) -> int:
        return self.schur.inverse_total

    @property
    def te_total(self) -> int:
        return self.te_block + self.te_schur_inverse

    @property
    def Q_sys(self) -> int:
        return self.schur.Q_sys

    @property
    def Q_peak(self) -> int:
        return max(self.Q_block, self.Q_schur)

    def to_dict(self) -> dict:
        w = self.schur.widths
        b = self.block
        bud = self.schur.budget
        out = {
            "d": self.d, "N": self.N, "L": self.L, "l1": self.l1, "mode": self.mode,
            "epsilon": self.params.epsilon, "epsilon_prep": self.params.eps_prep,
            "encoding": w.encoding, "n_lambda": w.n_lambda, "n_mu": w.n_mu, "n_sigma": w.n_sigma,
            "n_system": w.n_system, "K_rot": bud.K_rot, "delta_rot": bud.delta_rot,
            "eps_theta": bud.eps_theta, "f": bud.f,
            "te_cg_step": self.schur.cg_te,
            "te_schur_inverse": self.te_schur_inverse,
            "prep_te": b.prep.te, "prep_ancilla": b.prep.ancilla, "prep_k1": b.prep.k1, "prep_k2": b.prep.k2,
            "prep_R": b.prep.R, "prep_beta": b.prep.beta, "prep_m": b.prep.m,
            "sel_te": float(b.sel.te), "sel_ancilla": b.sel.ancilla, "sel_k1": b.sel.k1, "sel_k2": b.sel.k2,
            "per_attempt_te": float(b.per_attempt_te), "attempts": b.attempts,
            "r_star": b.r_star, "reflection_te": b.reflection_te,
            "exact_amplification_needed": b.exact_amplification_needed,
            "te_block": self.te_block, "te_total": self.te_total,
            "Q_sys": self.Q_sys, "Q_schur": self.Q_schur, "Q_block": self.Q_block, "Q_peak": self.Q_peak,
        }
        out["ranks"] = [
            {"s": r.s, "M_s": r.M_s, "E_s": r.E_s, "k_tot": r.k_tot, "C_tof": r.C_tof, "w": r.w,
             "compile_te": r.compile_te, "C_diff": r.C_diff, "C_entries": r.C_entries,
             "C_angles": float(r.C_angles), "te": r.te, "Q_anc": r.Q_anc}
            for r in self.schur.ranks
        ]
        return out


def end_to_end(d: int, N: int, L: int, epsilon: float | None = None, mode: str = "OAA",
               params: CostParams | None = None, l1: float | None = None) -> ResourceReport:
    """Block encoding over ``L`` configurations followed by the inverse Schur transform.

    ``l1`` defaults to ``sqrt(L)``, the value for an equal-weight superposition.
    """
    p = params or CostParams()
    if epsilon is not None and epsilon != p.epsilon:
        p = p.replace(epsilon=epsilon)
    l1 = math.sqrt(L) if l1 is None else float(l1)
    schur = schur_transform_te(d, N, params=p)
    w = schur.widths
    block = block_encoding_cost(mode, L, l1, w.n_mu, p)
    b = address_width(L)
    q_block = w.n_lambda + w.n_mu + w.n_sigma + b + block.ancilla
    return ResourceReport(d, N, L, l1, block.mode, p, schur, block, q_block, schur.Q_peak)


# ---------------------------------------------------------------------------
# sweeps


@dataclass
class SweepSpec:
    d: list[int]
    N: list[int]
    L: list[int]
    epsilon: list[float]
    modes: list[str] = field(default_factory=lambda: ["RUS", "OAA"])
    encoding: str = "compressed"

    def __post_init__(self):
        for name in ("d", "N", "L", "epsilon"):
            axis = getattr(self, name)
            if not axis:
                raise CostModelError(f"sweep axis {name} is empty")
            if any(b <= a for a, b in zip(axis, axis[1:])):
                raise CostModelError(f"sweep axis {name} must be strictly increasing")
        self.modes = [m.upper() for m in self.modes]
        if "BOTH" in self.modes:
            self.modes = list(MODES)
        bad = set(self.modes) - set(MODES)
        if bad or not self.modes:
            raise CostModelError(f"unknown modes {sorted(bad)}")

    def points(self):
        for d in self.d:
            for N in self.N:
                for L in self.L:
                    for eps in self.epsilon:
                        for mode in self.modes:
                            yield d, N, L, eps, mode


SWEEP_COLUMNS = ("d", "N", "L", "epsilon", "mode", "encoding", "l1", "n_lambda", "n_mu", "n_sigma",
                 "f", "K_rot", "prep_te", "sel_te", "per_attempt_te", "attempts", "r_star",
                 "te_block", "te_schur_inverse", "te_total", "Q_sys", "Q_block", "Q_schur", "Q_peak")


def sweep(spec: SweepSpec, params: CostParams | None = None) -> list[dict]:
    base = (params or CostParams()).replace(encoding=spec.encoding)
    rows = []
    for d, N, L, eps, mode in spec.points():
        rep = end_to_end(d, N, L, mode=mode, params=base.replace(epsilon=eps))
        full = rep.to_dict()
        rows.append({k: full[k] for k in SWEEP_COLUMNS})
    return rows


def _block_upper(mode: str, a: int, b: int, sel_te: Fraction, p: CostParams) -> float | None:
    """Upper bound on the block-encoding TE over ``L in [a, b]`` with ``l1 = sqrt(L)``.

    Valid only while ``ceil(log2 L)`` and the QROAM blocking are constant on the
    interval; returns None otherwise. Dropping the 2-adic term and evaluating every
    nondecreasing piece at ``b`` gives the bound.
    """
    beta = ceil_log2(b)
    if ceil_log2(a) != beta:
        return None
    R = math.ceil(math.log2(1 / p.eps_prep))
    m = beta + R + p.s_sign
    k1 = p.k1 or optimal_k(b, m)
    k2 = p.k2 or optimal_k(b, m)
    if (p.k1 or optimal_k(a, m)) != k1 or (p.k2 or optimal_k(a, m)) != k2:
        return None
    prep = (2 * _ceil_div(b, 2 * k1) + m * (k1 - 1) + _ceil_div(b, 2 * k2) + k2
            + 2 * (3 * (beta + 1) + 2 * p.b_r - 9) + 2 * R + 2 * beta)
    per = float(prep + sel_te)
    if mode == "RUS":
        return b * per
    _, r = oaa_rounds(math.sqrt(b))
    return (2 * r + 1) * per + 2 * r * max(0, 2 * beta - 3)


def crossover_L(d: int, N: int, epsilon: float, params: CostParams | None = None,
                mode: str = "OAA", L_max: int = 10**15, leaf: int = 64) -> int | None:
    """Smallest L at which the block-encoding TE exceeds the inverse-Schur TE.

    The block-encoding curve is not monotone in L (2-adic PREP term, ceiling and
    blocking steps), so after bracketing by doubling the search is a left-first
    branch and bound: intervals whose certified upper bound stays at or below the
    Schur line are skipped, small intervals are scanned exactly.
    """
    mode = mode.upper()
    if mode not in MODES:
        raise CostModelError(f"unknown mode {mode!r}; choose from {MODES}")
    p = (params or CostParams()).replace(epsilon=epsilon)
    schur = schur_transform_te(d, N, params=p)
    n_mu = schur.widths.n_mu
    target = schur.inverse_total
    sel_te = sel_cost(n_mu, p.k1_sel, p.k2_sel).te

    def exceeds(L):
        return block_encoding_cost(mode, L, math.sqrt(L), n_mu, p).total > target

    hi = 2
    while not exceeds(hi):
        hi *= 2
        if hi > L_max:
            return None

    def first(a, b):
        if a > b:
            return None
        if b - a < leaf:
            return next((L for L in range(a, b + 1) if exceeds(L)), None)
        ub = _block_upper(mode, a, b, sel_te, p)
        if ub is not None and math.ceil(ub - 1e-9) <= target:
            return None
        mid = (a + b) // 2
        found = first(a, mid)
        return found if found is not None else first(mid + 1, b)

    return first(2, hi)
