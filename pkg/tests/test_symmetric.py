from fractions import Fraction

import pytest

from knothom.partitions import Partition, balanced_diagrams, partitions_of
from knothom.symmetric import (
    SymFunc,
    chen_remmel,
    mn_character,
    plethysm_pn,
    zee,
)


def test_trivial_and_sign_characters():
    for n in range(1, 7):
        for mu in partitions_of(n):
            assert mn_character((n,), mu) == 1
    assert mn_character((1, 1), (2,)) == -1
    assert mn_character((2, 1), (1, 1, 1)) == 2  # dimension by hook lengths
    assert Partition([2, 1]).sym_dimension() == 2


def test_character_size_mismatch():
    with pytest.raises(ValueError):
        mn_character((2,), (3,))


def test_character_orthogonality():
    cache = {}
    for n in range(1, 7):
        lams = [Partition(p) for p in partitions_of(n)]
        for lam in lams:
            for nu in lams:
                total = sum(
                    Fraction(
                        mn_character(lam, mu, cache) * mn_character(nu, mu, cache),
                        zee(mu),
                    )
                    for mu in partitions_of(n)
                )
                assert total == (1 if lam == nu else 0)


def test_basis_roundtrip():
    f = SymFunc(SymFunc.SCHUR, {Partition([2, 1]): 1, Partition([3]): -2})
    assert f.to_powersum().to_schur() == f


def test_plethysm_examples():
    assert plethysm_pn((1,), 2) == SymFunc(
        SymFunc.SCHUR, {Partition([2]): 1, Partition([1, 1]): -1})
    assert plethysm_pn((2,), 2) == SymFunc(
        SymFunc.SCHUR,
        {Partition([4]): 1, Partition([3, 1]): -1, Partition([2, 2]): 1})
    assert plethysm_pn((1,), 3) == SymFunc(
        SymFunc.SCHUR,
        {Partition([3]): 1, Partition([2, 1]): -1, Partition([1, 1, 1]): 1})


def test_plethysm_cap():
    with pytest.raises(ValueError):
        plethysm_pn((7,), 2)


def test_chen_remmel_matches_plethysm():
    assert chen_remmel(1, 1) == plethysm_pn((1,), 2)
    assert chen_remmel(2, 1) == plethysm_pn((2,), 2)
    for S in range(1, 4):
        for R in range(1, 4):
            if R * S > 6:
                continue
            rect = Partition([S] * R)
            assert chen_remmel(S, R) == plethysm_pn(rect, 2)


def test_balanced_sign_dimension_sum():
    # the signed dimension count forced by the doubled-variable expansion
    for S in range(1, 4):
        for R in range(1, 3):
            if R * S > 6:
                continue
            rect = Partition([S] * R)
            oracle = plethysm_pn(rect, 2)
            signed = sum(sign * mu.sym_dimension()
                         for mu, sign in balanced_diagrams(S, R))
            forced = sum(c * mu.sym_dimension()
                         for mu, c in oracle.coeffs.items())
            assert signed == forced
