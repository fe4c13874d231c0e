import pytest

from grothlab.shapes import (
    BoxedPartition,
    SkewShape,
    add_staircase,
    complement,
    conjugate,
    contains,
    dual,
    enumerate_partitions_in_box,
    from_01,
    grassmannian,
    multiplicity,
    parse_partition,
    parse_skew,
    partition,
    staircase,
    sub_staircase,
    subpartitions,
    to_01,
)


class TestPinnedExample:
    """The (5,3,3) in 4x6 example pins the 01-sequence orientation."""

    def test_sequence(self):
        assert to_01((5, 3, 3), 4, 6) == (1, 0, 0, 0, 1, 1, 0, 0, 1, 0)

    def test_dual(self):
        assert dual((5, 3, 3), 4, 6) == (4, 3, 3, 1, 1, 1)

    def test_complement(self):
        assert complement((5, 3, 3), 4, 6) == (6, 3, 3, 1)

    def test_conjugate(self):
        assert conjugate((5, 3, 3)) == (3, 3, 3, 1, 1)

    def test_box_corners(self):
        # orientation: the empty partition reads as all 1s first
        assert to_01((), 2, 2) == (1, 1, 0, 0)
        assert to_01((2, 2), 2, 2) == (0, 0, 1, 1)
        # complement oracle: empty-dagger is the full box
        assert complement((), 3, 2) == (2, 2, 2)


class TestInvolutions:
    def test_involutions_4x4(self):
        for la in enumerate_partitions_in_box(4, 4):
            assert complement(complement(la, 4, 4), 4, 4) == la
            assert dual(dual(la, 4, 4), 4, 4) == la
            assert conjugate(conjugate(la)) == la
            # conjugate = complement then dual (in the transposed box)
            assert conjugate(la) == dual(complement(la, 4, 4), 4, 4)
            assert conjugate(la) == complement(dual(la, 4, 4), 4, 4)

    def test_roundtrip_5x5(self):
        for la in enumerate_partitions_in_box(5, 5):
            b = from_01(to_01(la, 5, 5))
            assert (b.parts, b.n_rows, b.k_cols) == (la, 5, 5)


class TestBasics:
    def test_parse_format(self):
        assert parse_partition("5,3,3") == (5, 3, 3)
        assert parse_partition("") == ()
        assert parse_skew("5,3,3/2,1") == ((5, 3, 3), (2, 1))
        with pytest.raises(ValueError):
            parse_partition("1,3")

    def test_trailing_zeros(self):
        assert partition((3, 2, 0, 0)) == (3, 2)

    def test_multiplicity_sums_to_length(self):
        for la in enumerate_partitions_in_box(3, 4):
            assert sum(multiplicity(la, i) for i in set(la)) == len(la)

    def test_staircases(self):
        assert staircase(3) == (2, 1, 0)
        assert add_staircase((2, 1), 2) == (3, 1)
        assert sub_staircase((8, 6, 2), 3) == (6, 5, 2)

    def test_box_counts(self):
        assert len(enumerate_partitions_in_box(2, 2)) == 6
        assert len(enumerate_partitions_in_box(3, 3)) == 20

    def test_graded_lex_order(self):
        out = enumerate_partitions_in_box(2, 2)
        assert out[0] == ()
        assert [sum(p) for p in out] == sorted(sum(p) for p in out)

    def test_boxed_validation(self):
        with pytest.raises(ValueError):
            BoxedPartition((3,), 2, 2)
        with pytest.raises(ValueError):
            SkewShape((1,), (2,))

    def test_subpartitions(self):
        subs = subpartitions((2, 1))
        assert set(subs) == {(), (1,), (2,), (1, 1), (2, 1)}


class TestGrassmannian:
    def test_identity(self):
        assert grassmannian((), 3, 2) == (1, 2, 3, 4, 5)

    def test_descent_and_parts(self):
        n, k = 3, 2  # la inside a k x n box
        for la in enumerate_partitions_in_box(k, n):
            w = grassmannian(la, n, k)
            descents = [i for i in range(1, len(w)) if w[i - 1] > w[i]]
            if la:
                assert descents == [k]
            for i in range(1, len(la) + 1):
                assert la[i - 1] == w[k - i + 1 - 1] - (k - i + 1)
