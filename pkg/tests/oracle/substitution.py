"""Independent substitution of the closed-form cost expressions.

Written without importing the package; used once to produce the golden numbers
embedded in test_resources.py. Run: python3 tests/oracle/substitution.py
"""
import math
from itertools import combinations_with_replacement


def clog2(x):
    # ceil(log2 x) for positive integers via float with an exactness guard
    c = math.ceil(math.log2(x))
    while 2 ** c < x:
        c += 1
    while c > 0 and 2 ** (c - 1) >= x:
        c -= 1
    return c


def partitions(N, d):
    out = []

    def rec(rem, maxp, acc):
        if rem == 0:
            out.append(acc + [0] * (d - len(acc)))
            return
        if len(acc) == d:
            return
        for p in range(min(rem, maxp), 0, -1):
            rec(rem - p, p, acc + [p])

    rec(N, N, [])
    return out


def weyl(lam):
    d = len(lam)
    num = den = 1
    for i in range(d):
        for j in range(i + 1, d):
            num *= lam[i] - lam[j] + j - i
            den *= j - i
    return num // den


def widths(d, N):
    parts = partitions(N, d)
    n_lam = clog2(len(parts))
    n_mu = clog2(max(weyl(l) for l in parts))
    n_d = clog2(d)
    return n_lam, n_mu, (N - 1) * n_d, N * n_d


def te_schur(d, N, eps, a_prov=0):
    n_lam, n_mu, n_sig, n_sys = widths(d, N)
    k_lm = n_lam + n_mu
    K = (N - 1) * sum(math.comb(s, 2) * (2 * clog2(s) - 1) for s in range(2, d + 1))
    delta = (eps / 2) / K
    f = math.ceil(math.log2(math.pi / ((eps / 2) / K)))
    tcr = 2 * (1.149 * math.log2(2 / delta) + 9.2)
    int_part = 0.0
    real_part = 0.0
    ranks = {}
    q_anc = []
    for s in range(2, d + 1):
        ns = clog2(s)
        w = clog2(2 * N + 2 * s + 1) + 2 + f + ns + 3
        A = 2 * w - 1
        M = 2 * w * w + w
        I = clog2(w) + 2
        rec = I * (2 * M + 3 * A)
        sq = I * (rec + M + 2 * A)
        ctof = max(1, 2 * (k_lm + ns - 1) - 3)
        Ms, Es = math.comb(s, 2), 2 * ns - 1
        comp_i = Ms * Es * 2 * ctof
        comp_r = Ms * Es * tcr / 7
        ev = 2 * s * (s - 1) * A + s * (s - 1) * (8 * M + rec + sq + 5 * A) + 1.5 * s * (s - 1) * f * A
        ranks[s] = (comp_i + ev, comp_r)
        int_part += comp_i + ev
        real_part += comp_r
        q_anc.append(ns + max(a_prov, max(0, k_lm + ns - 3)) + 12 * w)
    total = math.ceil((N - 1) * int_part) + math.ceil((N - 1) * real_part)
    q_sys = n_sys + n_lam + n_mu + n_sig
    return dict(K=K, f=f, total=total, ranks=ranks, q_sys=q_sys, q_peak=q_sys + max(q_anc))


def v2(n):
    c = 0
    while n % 2 == 0:
        n //= 2
        c += 1
    return c


def kstar(size, m):
    x = 0.5 * math.log2(size / (2 * m))
    e = math.floor(x + 0.5) if x >= 0 else -math.floor(-x + 0.5)
    return max(1, min(2 ** max(e, 0), max(1, size // 2)))


def prep(L, eps_prep, b_r=7):
    beta = clog2(L)
    R = math.ceil(math.log2(1 / eps_prep))
    m = beta + R + 1
    k = kstar(L, m)
    te = 2 * math.ceil(L / (2 * k)) + m * (k - 1) + math.ceil(L / (2 * k)) + k \
        + 2 * (3 * (beta + 1) - 3 * v2(L) + 2 * b_r - 9) + 2 * R + 2 * beta
    anc = 6 + 2 * (beta + R) + b_r + max(m * (k - 1) + clog2(math.ceil(L / (2 * k))),
                                         k + clog2(math.ceil(L / (2 * k))))
    return te, anc, k


def sel(n):
    k = 1
    return math.ceil(n / k) + n / 2 * (k - 1) + math.ceil(n / k) + k, max(n * (k - 1) + clog2(n), k + clog2(n))


def block(d, N, L, eps, mode):
    n_lam, n_mu, n_sig, _ = widths(d, N)
    pte, panc, _ = prep(L, eps)
    ste, sanc = sel(n_mu)
    l1 = math.sqrt(L)
    b = clog2(L)
    if mode == "RUS":
        tot = l1 * l1 * (pte + ste)
        q = n_lam + n_mu + n_sig + b + max(panc, sanc)
    else:
        th = math.asin(1 / l1)
        r = math.ceil((math.pi / 2 - th) / (2 * th))
        tot = (2 * r + 1) * (pte + ste) + 2 * r * max(0, 2 * b - 3)
        q = n_lam + n_mu + n_sig + b + max(panc, sanc, max(0, b - 2))
    return math.ceil(tot - 1e-9), q


if __name__ == "__main__":
    print("K_rot(3,3)", te_schur(3, 3, 1e-4)["K"], "f", te_schur(3, 3, 1e-4)["f"])
    print("TE_s(s=3,d=3,N=3)", te_schur(3, 3, 1e-4)["ranks"][3])
    print("TE_s(s=2,d=3,N=3)", te_schur(3, 3, 1e-4)["ranks"][2])
    for args in [(2, 2, 0.1), (3, 3, 1e-4), (50, 10, 1e-4)]:
        r = te_schur(*args)
        print("schur", args, r["total"], "Qsys", r["q_sys"], "Qpeak", r["q_peak"])
    print("prep(50)", prep(50, 1e-4))
    print("sel(45)", sel(45), "sel(6)", sel(6))
    for mode in ("RUS", "OAA"):
        print("block(50,10,50)", mode, block(50, 10, 50, 1e-4, mode))
