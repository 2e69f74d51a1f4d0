"""Test term enumeration and circuit counts."""

import pytest

from poisson_vqls.engine import (
    CostKind,
    TermFamily,
    TermKey,
    count_unique_circuits,
    count_unique_circuits_global,
    enumerate_term_keys,
)


class TestTermKey:
    """Test TermKey."""

    def test_canonical(self) -> None:
        """Test canonical keys order their pair."""
        assert TermKey.canonical(TermFamily.BETA, 3, 1) == TermKey(TermFamily.BETA, 1, 3)

    def test_seed_words_non_negative(self) -> None:
        """Test seed words are usable as seed entropy."""
        assert min(TermKey(TermFamily.GAMMA_GLOBAL, 0, 0).seed_words) >= 0
        assert TermKey(TermFamily.GAMMA_LOCAL, 0, 1, 0).seed_words != TermKey(TermFamily.GAMMA_LOCAL, 0, 1).seed_words


class TestEnumeration:
    """Test enumerate_term_keys."""

    @pytest.mark.parametrize("c", range(1, 7))
    @pytest.mark.parametrize("n", range(1, 10))
    def test_local_count_formula(self, c: int, n: int) -> None:
        """Test the deduplicated local key count matches the closed form."""
        keys = enumerate_term_keys(c, n, CostKind.LOCAL)
        assert len(keys) == count_unique_circuits(c, n)
        assert len(set(keys)) == len(keys)

    @pytest.mark.parametrize("c", range(1, 7))
    def test_global_count_formula(self, c: int) -> None:
        """Test the deduplicated global key count matches the closed form."""
        assert len(enumerate_term_keys(c, 4, CostKind.GLOBAL)) == count_unique_circuits_global(c)

    def test_hed_three_qubits(self) -> None:
        """Test 36 circuits per local evaluation of HED at n=3."""
        assert count_unique_circuits(4, 3) == 36  # noqa: PLR2004

    def test_dedup_shape(self) -> None:
        """Test dedup keeps l <= l' and drops diagonal betas."""
        keys = enumerate_term_keys(3, 2, CostKind.LOCAL)
        assert all(key.l <= key.l_prime for key in keys)
        assert not any(key.family is TermFamily.BETA and key.l == key.l_prime for key in keys)

    def test_without_dedup(self) -> None:
        """Test every ordered pair is listed without dedup."""
        assert len(enumerate_term_keys(3, 2, CostKind.LOCAL, dedup=False)) == 9 + 2 * 9
        assert len(enumerate_term_keys(3, 2, CostKind.GLOBAL, dedup=False)) == 9 + 3

    def test_sorted(self) -> None:
        """Test keys come out in canonical order."""
        keys = enumerate_term_keys(4, 3, CostKind.LOCAL)
        assert keys == sorted(keys, key=lambda key: key.sort_key)
        assert keys[0].family is TermFamily.BETA
