import pytest
from hypothesis import given, strategies as st

from youngwalls import (
    MapStep,
    Partition,
    WallParams,
    count_partitions,
    enumerate_partitions,
    enumerate_proper,
    enumerate_reduced,
    enumerate_strict,
    insert_blocks,
    is_reduced,
    phi,
    phi_inv,
    psi,
    psi_inv,
    weight,
)

P2 = WallParams(2)
P3 = WallParams(3)


class TestInsertBlocks:
    def test_insert_between(self):
        assert insert_blocks(Partition((7, 1)), 2, 1, P2) == (7, 6, 1)

    def test_insert_pair(self):
        assert insert_blocks(Partition((1,)), 1, 2, P2) == (3, 3, 1)

    def test_insert_nothing(self):
        lam = Partition((5, 2))
        assert insert_blocks(lam, 3, 0, P2) == lam

    def test_insert_after_equal_parts(self):
        assert insert_blocks(Partition((6, 6)), 2, 1, P2) == (6, 6, 6)

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            insert_blocks(Partition((3,)), 0, 1, P2)
        with pytest.raises(ValueError):
            insert_blocks(Partition((3,)), 1, -1, P2)


class TestPrefixStripMap:
    def test_single_column(self):
        result = psi(Partition((7,)), P2)
        assert result.reduced_part == (1,)
        assert result.hat_part == (1,)
        assert result.k == 1
        assert result.trace == (MapStep(l=1, i=2, value=1),)

    def test_two_equal_columns(self):
        result = psi(Partition((6, 6)), P2)
        assert result.reduced_part == ()
        assert result.hat_part == (1, 1)
        assert result.k == 2

    def test_double_quantum(self):
        result = psi(Partition((14, 1)), P2)
        assert result.reduced_part == (2, 1)
        assert result.hat_part == (2,)
        assert result.k == 2
        assert result.trace == (MapStep(l=1, i=2, value=2),)

    def test_rejects_improper(self):
        with pytest.raises(ValueError):
            psi(Partition((2, 2)), P2)

    def test_rejects_already_reduced(self):
        with pytest.raises(ValueError):
            psi(Partition((5, 1)), P2)

    @pytest.mark.parametrize(
        "reduced,hat,expected",
        [((1,), (1,), (7,)), ((), (1, 1), (6, 6)), ((2, 1), (2,), (14, 1))],
    )
    def test_inverse_known(self, reduced, hat, expected):
        assert psi_inv(Partition(reduced), Partition(hat), P2) == expected

    def test_inverse_rejects_non_reduced(self):
        with pytest.raises(ValueError):
            psi_inv(Partition((7,)), Partition((1,)), P2)

    def test_inverse_rejects_empty_hat(self):
        with pytest.raises(ValueError):
            psi_inv(Partition((1,)), Partition(), P2)


class TestPairDeleteMap:
    def test_single_pair(self):
        result = phi(Partition((3, 3, 1)), P2)
        assert result.reduced_part == (1,)
        assert result.hat_part == (1,)
        assert result.k == 1
        assert result.trace == (MapStep(l=1, i=2, value=3),)

    def test_smaller_pair_removed_first(self):
        result = phi(Partition((6, 6, 3, 3)), P2)
        assert result.reduced_part == ()
        assert result.hat_part == (2, 1)
        assert result.k == 3
        assert [s.value for s in result.trace] == [3, 6]

    def test_rank_three(self):
        result = phi(Partition((4, 4)), P3)
        assert result.reduced_part == ()
        assert result.hat_part == (1,)
        assert result.k == 1

    def test_rejects_improper(self):
        with pytest.raises(ValueError):
            phi(Partition((1, 1)), P2)

    def test_rejects_already_strict(self):
        with pytest.raises(ValueError):
            phi(Partition((4, 3)), P2)

    @pytest.mark.parametrize(
        "strict_part,hat,expected",
        [
            ((1,), (1,), (3, 3, 1)),
            ((), (2, 1), (6, 6, 3, 3)),
            ((5, 2), (1,), (5, 3, 3, 2)),
        ],
    )
    def test_inverse_known(self, strict_part, hat, expected):
        assert phi_inv(Partition(strict_part), Partition(hat), P2) == expected

    def test_inverse_rejects_non_strict(self):
        with pytest.raises(ValueError):
            phi_inv(Partition((3, 3)), Partition((1,)), P2)

    def test_inverse_rejects_empty_hat(self):
        with pytest.raises(ValueError):
            phi_inv(Partition((1,)), Partition(), P2)

    def test_repeated_pair_values(self):
        result = phi(Partition((3, 3, 3, 3)), P2)
        assert result.reduced_part == ()
        assert result.hat_part == (1, 1)
        assert phi_inv(Partition(), Partition((1, 1)), P2) == (3, 3, 3, 3)


def strip_domain(params, m):
    return [
        lam for lam in enumerate_proper(params, m) if not is_reduced(lam, params)
    ]


def delete_domain(params, m):
    return [lam for lam in enumerate_proper(params, m) if not lam.is_strict()]


@pytest.mark.parametrize("n", [2, 3])
class TestRoundTrips:
    def test_strip_map_bijects(self, n):
        params = WallParams(n)
        for m in range(20):
            images = set()
            for lam in strip_domain(params, m):
                result = psi(lam, params)
                assert is_reduced(result.reduced_part, params)
                assert result.hat_part.size == result.k >= 1
                assert psi_inv(result.reduced_part, result.hat_part, params) == lam
                images.add((result.reduced_part.parts, result.hat_part.parts))
            expected = {
                (red.parts, hat.parts)
                for k in range(1, m // params.period + 1)
                for red in enumerate_reduced(params, m - params.period * k)
                for hat in enumerate_partitions(k)
            }
            assert images == expected, (n, m)

    def test_delete_map_bijects(self, n):
        params = WallParams(n)
        for m in range(20):
            images = set()
            for lam in delete_domain(params, m):
                result = phi(lam, params)
                assert result.reduced_part.is_strict()
                assert result.hat_part.size == result.k >= 1
                assert phi_inv(result.reduced_part, result.hat_part, params) == lam
                images.add((result.reduced_part.parts, result.hat_part.parts))
            expected = {
                (strict.parts, hat.parts)
                for k in range(1, m // params.period + 1)
                for strict in enumerate_strict(m - params.period * k)
                for hat in enumerate_partitions(k)
            }
            assert images == expected, (n, m)

    def test_weight_shift_by_two_k(self, n):
        params = WallParams(n)
        for m in range(16):
            for lam in strip_domain(params, m):
                result = psi(lam, params)
                before = weight(lam, params)
                after = weight(result.reduced_part, params)
                assert all(
                    b - a == 2 * result.k for b, a in zip(before, after)
                ), (n, m, lam)
            for lam in delete_domain(params, m):
                result = phi(lam, params)
                before = weight(lam, params)
                after = weight(result.reduced_part, params)
                assert all(
                    b - a == 2 * result.k for b, a in zip(before, after)
                ), (n, m, lam)

    def test_domain_size_identity(self, n):
        params = WallParams(n)
        for m in range(25):
            proper = len(enumerate_proper(params, m))
            reduced = len(enumerate_reduced(params, m))
            strict = len(enumerate_strict(m))
            tail_reduced = sum(
                len(enumerate_reduced(params, m - params.period * k))
                * count_partitions(k)
                for k in range(1, m // params.period + 1)
            )
            tail_strict = sum(
                len(enumerate_strict(m - params.period * k)) * count_partitions(k)
                for k in range(1, m // params.period + 1)
            )
            assert proper - reduced == tail_reduced
            assert proper - strict == tail_strict


@given(
    n=st.integers(min_value=2, max_value=5),
    m=st.integers(min_value=1, max_value=26),
    seed=st.integers(min_value=0, max_value=10**6),
)
def test_round_trip_property(n, m, seed):
    params = WallParams(n)
    proper = enumerate_proper(params, m)
    lam = proper[seed % len(proper)]
    if not is_reduced(lam, params):
        result = psi(lam, params)
        assert psi_inv(result.reduced_part, result.hat_part, params) == lam
    if not lam.is_strict():
        result = phi(lam, params)
        assert phi_inv(result.reduced_part, result.hat_part, params) == lam
