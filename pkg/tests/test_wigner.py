import math

import numpy as np
import pytest

from schurprep.repr_core import Partition, enumerate_gt_patterns, enumerate_partitions
from schurprep.wigner import DegenerateLabelError, reduced_wigner, shifted_row, wigner_matrix


def level_pairs(s, n_max):
    for N in range(1, n_max + 1):
        for lam in enumerate_partitions(N, s):
            yield from sorted({(p.rows[0], p.rows[1]) for p in enumerate_gt_patterns(lam)})


def valid_columns(s, lower):
    return [jp for jp in range(s) if not (jp > 1 and lower[jp - 2] == lower[jp - 1])]


def test_shifted_rows():
    assert shifted_row((2, 1, 0), 3) == (4, 2, 0)
    assert shifted_row((1, 0), 3, lower=True) == (2, 0)


def test_two_level_singlet_triplet_split():
    m = wigner_matrix(2, (1, 0), (0,))
    assert m[0, 0] == pytest.approx(1.0)
    assert abs(m[0, 1]) == pytest.approx(1 / math.sqrt(2))
    assert abs(m[1, 1]) == pytest.approx(1 / math.sqrt(2))
    assert np.sign(m[0, 1]) != np.sign(m[1, 1])


def test_forced_box_has_unit_weight():
    # vacuum pattern: the only admissible target row at level 2 is the first
    m = wigner_matrix(2, (0, 0), (0,))
    assert m[0, 0] == pytest.approx(1.0)
    assert m[0, 1] == pytest.approx(1.0)


def test_spin_one_half_values():
    m = wigner_matrix(2, (2, 0), (1,))
    assert m[0, 0] == pytest.approx(math.sqrt(2 / 3))
    assert m[1, 0] == pytest.approx(math.sqrt(1 / 3))
    assert m[1, 1] == pytest.approx(-math.sqrt(1 / 3))


@pytest.mark.parametrize("s", [2, 3, 4, 5])
def test_standard_columns_normalised(s):
    for upper, lower in level_pairs(s, 4):
        m = wigner_matrix(s, upper, lower)
        for jp in valid_columns(s, lower):
            assert np.sum(m[:, jp] ** 2) == pytest.approx(1.0, abs=1e-12), (upper, lower, jp)


def test_legacy_form_is_not_normalised():
    broken = 0
    for s in (2, 3):
        for upper, lower in level_pairs(s, 3):
            m = wigner_matrix(s, upper, lower, form="legacy")
            for jp in valid_columns(s, lower):
                col = m[:, jp]
                if np.any(np.isnan(col)) or abs(np.sum(col**2) - 1) > 1e-9:
                    broken += 1
    assert broken > 0


def test_degenerate_denominator_raises():
    mt = shifted_row((1, 0), 2)
    mpt = shifted_row((0,), 2, lower=True)
    with pytest.raises(DegenerateLabelError, match="degenerate label pair"):
        reduced_wigner(2, mt, 2, mpt, 0, form="legacy")


def test_argument_validation():
    with pytest.raises(ValueError):
        reduced_wigner(2, (1, 0), 3, (0,), 0)
    with pytest.raises(ValueError):
        reduced_wigner(2, (1, 0), 1, (0, 0), 0)
    with pytest.raises(ValueError):
        reduced_wigner(2, (1, 0), 1, (0,), 0, form="other")
