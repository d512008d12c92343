import itertools
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from schurprep.repr_core import (
    GTPattern,
    GTShapeError,
    Partition,
    balanced_shape,
    ceil_log2,
    count_partitions,
    dynkin_from_partition,
    enumerate_gt_patterns,
    enumerate_partitions,
    gt_weight,
    highest_weight_pattern,
    partition_from_dynkin,
    register_widths,
    standard_from_dynkin,
    sym_group_dimension,
    validate_gt,
    weyl_dimension,
)


def brute_partitions(N, d):
    """Oracle: filter all nonincreasing d-tuples."""
    out = set()
    for t in itertools.product(range(N + 1), repeat=d):
        if sum(t) == N and all(a >= b for a, b in zip(t, t[1:])):
            out.add(t)
    return out


def brute_syt(lam):
    """Oracle: count standard Young tableaux by placing 1..n recursively."""
    parts = [p for p in lam if p]
    n = sum(parts)

    def rec(filled):
        if sum(filled) == n:
            return 1
        tot = 0
        for r in range(len(parts)):
            if filled[r] < parts[r] and (r == 0 or filled[r - 1] > filled[r]):
                filled[r] += 1
                tot += rec(filled)
                filled[r] -= 1
        return tot

    return rec([0] * len(parts)) if parts else 1


class TestPartitions:
    def test_rejects_increasing(self):
        with pytest.raises(ValueError):
            Partition((1, 2))

    def test_padding(self):
        assert Partition.of((2, 1), 4).parts == (2, 1, 0, 0)
        assert Partition((2, 1, 0)).length == 2

    @pytest.mark.parametrize("N,d,expected", [(0, 5, 1), (3, 3, 3), (4, 2, 3)])
    def test_count(self, N, d, expected):
        assert count_partitions(N, d) == expected

    def test_enumerate_examples(self):
        assert [p.parts for p in enumerate_partitions(3, 3)] == [(3, 0, 0), (2, 1, 0), (1, 1, 1)]
        assert [p.parts for p in enumerate_partitions(0, 3)] == [(0, 0, 0)]
        assert [p.parts for p in enumerate_partitions(1, 4)] == [(1, 0, 0, 0)]

    def test_count_matches_enumeration(self):
        for N in range(0, 31):
            for d in range(1, 31):
                if N > 18 and d > 8:
                    continue  # keeps the loop short; larger cells covered by the DP identity below
                assert count_partitions(N, d) == len(enumerate_partitions(N, d))

    @pytest.mark.parametrize("N,d", [(5, 3), (6, 4), (4, 4), (7, 2)])
    def test_enumeration_vs_brute(self, N, d):
        got = [p.parts for p in enumerate_partitions(N, d)]
        assert len(got) == len(set(got))
        assert set(got) == brute_partitions(N, d)
        assert got == sorted(got, reverse=True)

    def test_dp_large(self):
        # p(30) with unrestricted parts
        assert count_partitions(30, 30) == 5604


class TestDimensions:
    @pytest.mark.parametrize("lam,d,dim", [((3, 0, 0), 3, 10), ((2, 1, 0), 3, 8), ((1, 1, 1), 3, 1), ((1, 0), 2, 2)])
    def test_weyl(self, lam, d, dim):
        assert weyl_dimension(lam, d) == dim

    @pytest.mark.parametrize("lam,dim", [((3, 0, 0), 1), ((2, 1, 0), 2), ((1, 1, 1), 1)])
    def test_hook(self, lam, dim):
        assert sym_group_dimension(lam) == dim

    def test_hook_vs_tableaux(self):
        for N in range(1, 8):
            for lam in enumerate_partitions(N, N):
                assert sym_group_dimension(lam) == brute_syt(lam.parts)

    def test_weyl_counts_patterns(self):
        for N in range(0, 6):
            for d in range(1, 5):
                for lam in enumerate_partitions(N, d):
                    pats = enumerate_gt_patterns(lam)
                    assert len(pats) == weyl_dimension(lam, d)

    def test_schur_weyl_identity(self):
        for d in range(1, 13):
            for N in range(0, 13):
                if d**N > 4096:
                    continue
                total = sum(weyl_dimension(l, d) * sym_group_dimension(l) for l in enumerate_partitions(N, d))
                assert total == d**N

    def test_u3_instance(self):
        terms = [weyl_dimension(l, 3) * sym_group_dimension(l) for l in enumerate_partitions(3, 3)]
        assert terms == [10, 16, 1]

    @pytest.mark.parametrize("N,d,shape", [(7, 3, (3, 2, 2)), (6, 3, (2, 2, 2)), (3, 3, (1, 1, 1))])
    def test_balanced(self, N, d, shape):
        assert balanced_shape(N, d).parts == shape

    def test_balanced_closed_form(self):
        # dimension depends only on r = N mod d
        for d in range(2, 7):
            for N in range(0, 15):
                r = N % d
                num = den = 1
                for i in range(1, r + 1):
                    for j in range(r + 1, d + 1):
                        num *= j - i + 1
                        den *= j - i
                assert weyl_dimension(balanced_shape(N, d), d) * den == num


class TestDynkin:
    @pytest.mark.parametrize("zeta,lam", [((1, 1), (2, 1, 0)), ((0, 0), (0, 0, 0)), ((3, 0), (3, 0, 0))])
    def test_from_dynkin(self, zeta, lam):
        assert partition_from_dynkin(zeta).parts == lam

    @pytest.mark.parametrize("lam,zeta", [((2, 1, 0), (1, 1)), ((4, 0, 0, 0), (4, 0, 0)), ((1, 1, 1), (0, 0))])
    def test_to_dynkin(self, lam, zeta):
        assert dynkin_from_partition(lam) == zeta

    @given(st.lists(st.integers(0, 6), min_size=1, max_size=6))
    def test_round_trip(self, zeta):
        lam = partition_from_dynkin(zeta)
        assert dynkin_from_partition(lam) == tuple(zeta)

    def test_standard_non_integral(self):
        with pytest.raises(ValueError, match="non-integral"):
            standard_from_dynkin((1, 0), 3)


class TestGT:
    def test_valid_examples(self):
        assert validate_gt(GTPattern.from_rows((3, 0, 0), (3, 0), 2))
        assert validate_gt(GTPattern.from_rows((1, 1, 1), (1, 1), 1))

    def test_violation(self):
        chk = validate_gt(GTPattern.from_rows((2, 1, 0), (3, 0), 1))
        assert not chk
        assert "x[2,1]=3" in chk.violation

    def test_shape_error_distinct(self):
        with pytest.raises(GTShapeError):
            validate_gt(GTPattern(((2, 1, 0), (2,), (1,))))

    def test_weights(self):
        assert gt_weight(GTPattern.from_rows((3, 0, 0), (3, 0), 2)) == ((2, 1, 0), (1, 1))
        assert gt_weight(GTPattern.from_rows((2, 1, 0), (2, 0), 1)) == ((1, 1, 1), (0, 0))

    def test_compact(self):
        assert GTPattern.from_rows((3, 0, 0), (3, 0), 2).compact() == "(3,0;2)"

    @given(st.lists(st.integers(0, 4), min_size=1, max_size=4))
    def test_highest_weight(self, zeta):
        lam = partition_from_dynkin(zeta)
        omega, _ = gt_weight(highest_weight_pattern(lam))
        assert omega == lam.parts

    def test_weight_multiset_size(self):
        for lam in enumerate_partitions(4, 3):
            pats = enumerate_gt_patterns(lam)
            weights = Counter(gt_weight(p)[1] for p in pats)
            assert sum(weights.values()) == weyl_dimension(lam, 3)
            assert all(validate_gt(p) for p in pats)


class TestWidths:
    def test_naive(self):
        w = register_widths(3, 3, "naive")
        assert (w.n_lambda, w.n_mu, w.n_sigma, w.n_system) == (6, 6, 4, 6)

    def test_compressed(self):
        w = register_widths(3, 3, "compressed")
        assert w.n_lambda == 2
        assert w.n_mu == ceil_log2(10)

    def test_balanced_proxy(self):
        assert register_widths(3, 3, "balanced-proxy").n_mu == 0

    @settings(max_examples=60)
    @given(st.integers(2, 12), st.integers(1, 14))
    def test_compressed_not_wider(self, d, N):
        assert register_widths(d, N, "compressed").n_lambda <= register_widths(d, N, "naive").n_lambda

    def test_fallback_threshold(self):
        w = register_widths(5, 12, "compressed", exhaustive_limit=1)
        assert w.n_mu == ceil_log2(weyl_dimension(balanced_shape(12, 5), 5))

    def test_ceil_log2(self):
        assert [ceil_log2(x) for x in (1, 2, 3, 4, 5, 1024, 1025)] == [0, 1, 2, 2, 3, 10, 11]
