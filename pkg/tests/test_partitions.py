import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ospwind.ehrhart import eulerian
from ospwind.partitions import (
    DecoratedOSP,
    FamilySpec,
    InvalidFamily,
    LevelNotDivisible,
    MissingElements,
    ModulusMismatch,
    NonPositiveDecoration,
    NotAdmissible,
    NotCanonical,
    OverlappingBlocks,
    count_admissible,
    enumerate_partitions,
    grading_histogram,
    is_admissible,
    modular_section,
    position_labels,
    unwind,
    validate,
    winding_vector,
)

from oracles import admissible_brute, winding_brute

CLOCK = "{1,5,6}_2|{2,9}_1|{4,10,12}_1|{3,7,8,11}_3"


def osp(*pairs, n=None):
    blocks = [b for b, _ in pairs]
    decs = [l for _, l in pairs]
    if n is None:
        n = sum(len(b) for b in blocks)
    return DecoratedOSP(n, blocks, decs)


class TestValidate:
    def test_single_block(self):
        validate(osp(({1, 2}, 1)))

    def test_not_canonical(self):
        with pytest.raises(NotCanonical):
            validate(osp(({2}, 1), ({1}, 1)))

    def test_overlap(self):
        with pytest.raises(OverlappingBlocks):
            validate(osp(({1, 2}, 1), ({2}, 1), n=2))

    def test_missing(self):
        with pytest.raises(MissingElements):
            validate(osp(({1, 3}, 1), n=3))

    def test_out_of_range(self):
        with pytest.raises(MissingElements):
            validate(osp(({1, 5}, 1), n=2))

    def test_nonpositive(self):
        with pytest.raises(NonPositiveDecoration):
            validate(osp(({1}, 1), ({2}, 0)))


class TestTextEncoding:
    def test_round_trip_clock(self):
        p = DecoratedOSP.parse(CLOCK)
        assert p.n == 12
        assert p.decorations == (2, 1, 1, 3)
        assert p.to_text() == CLOCK

    def test_parse_rejects_noncanonical(self):
        with pytest.raises(NotCanonical):
            DecoratedOSP.parse("{2}_1|{1}_1")

    @settings(max_examples=200)
    @given(st.data())
    def test_round_trip_random(self, data):
        n = data.draw(st.integers(1, 9))
        k = data.draw(st.integers(1, n))
        word = [0] + [data.draw(st.integers(0, k - 1)) for _ in range(n - 1)]
        used = sorted(set(word))
        blocks = [[e for e in range(1, n + 1) if word[e - 1] == b] for b in used]
        decs = [data.draw(st.integers(1, 20)) for _ in blocks]
        p = DecoratedOSP(n, blocks, decs)
        assert DecoratedOSP.parse(p.to_text()) == p


class TestFamilySpec:
    @pytest.mark.parametrize("a,b", [(0, 3), (3, 0), (4, -1), (-1, 2)])
    def test_bad_hypersimplex(self, a, b):
        with pytest.raises(InvalidFamily):
            FamilySpec.hypersimplex(a, b)

    @pytest.mark.parametrize("r,n,s", [(2, 3, 0), (2, 3, 6), (0, 3, 1)])
    def test_bad_slice(self, r, n, s):
        with pytest.raises(InvalidFamily):
            FamilySpec.slice(r, n, s)

    def test_bad_simplex(self):
        with pytest.raises(InvalidFamily):
            FamilySpec.simplex(0, 3)
        with pytest.raises(InvalidFamily):
            FamilySpec.simplex(2, 1)

    def test_derived(self):
        f = FamilySpec.slice(2, 3, 4)
        assert (f.decoration_total, f.winding_modulus, f.n, f.hstar_length) == (4, 4, 3, 3)


class TestAdmissible:
    def test_single_block_hypersimplex(self):
        assert is_admissible(osp(({1, 2, 3, 4}, 2)), FamilySpec.hypersimplex(2, 2))

    def test_single_block_simplex(self):
        assert is_admissible(osp(({1, 2, 3}, 3)), FamilySpec.simplex(3, 3))

    def test_singleton_violates_hypersimplex_bound(self):
        assert not is_admissible(osp(({1}, 1), ({2, 3, 4}, 1)), FamilySpec.hypersimplex(2, 2))

    def test_wrong_total(self):
        assert not is_admissible(osp(({1, 2}, 1), ({3, 4}, 2)), FamilySpec.hypersimplex(2, 2))


FAMILIES = [
    FamilySpec.hypersimplex(2, 2),
    FamilySpec.hypersimplex(2, 3),
    FamilySpec.hypersimplex(3, 2),
    FamilySpec.hypersimplex(1, 4),
    FamilySpec.simplex(3, 3),
    FamilySpec.simplex(2, 4),
    FamilySpec.simplex(4, 3),
    FamilySpec.slice(2, 3, 3),
    FamilySpec.slice(2, 4, 5),
    FamilySpec.slice(3, 3, 4),
]


class TestEnumerate:
    def test_hypersimplex_2_2(self):
        got = [p.to_text() for p in enumerate_partitions(FamilySpec.hypersimplex(2, 2))]
        assert got == ["{1,2,3,4}_2", "{1,2}_1|{3,4}_1", "{1,3}_1|{2,4}_1", "{1,4}_1|{2,3}_1"]

    @pytest.mark.parametrize("family", FAMILIES, ids=FamilySpec.label)
    def test_matches_brute_force(self, family):
        brute = admissible_brute(family.n, family.total, family.upper_bound)
        got = [(p.blocks, p.decorations) for p in enumerate_partitions(family)]
        assert len(got) == len(set(got))
        assert set(got) == set(brute)

    @pytest.mark.parametrize("family", FAMILIES, ids=FamilySpec.label)
    def test_deterministic_and_valid(self, family):
        first = list(enumerate_partitions(family))
        assert first == list(enumerate_partitions(family))
        for p in first:
            validate(p)
            assert is_admissible(p, family)

    @pytest.mark.parametrize("n", range(2, 7))
    def test_single_partition_at_a_equal_1(self, n):
        parts = list(enumerate_partitions(FamilySpec.hypersimplex(1, n - 1)))
        assert [p.to_text() for p in parts] == ["{" + ",".join(map(str, range(1, n + 1))) + "}_1"]

    def test_counts(self):
        assert count_admissible(FamilySpec.hypersimplex(2, 3)) == 11
        assert count_admissible(FamilySpec.simplex(3, 3)) == 9
        assert count_admissible(FamilySpec.simplex(4, 4)) == 64
        assert count_admissible(FamilySpec.slice(2, 3, 3)) == 6

    @pytest.mark.parametrize("n", range(2, 9))
    def test_eulerian_counts(self, n):
        for a in range(1, n):
            assert count_admissible(FamilySpec.hypersimplex(a, n - a)) == eulerian(n - 1, a - 1)

    @pytest.mark.parametrize("r", range(1, 6))
    def test_power_counts(self, r):
        for n in range(2, 6):
            assert count_admissible(FamilySpec.simplex(r, n)) == r ** (n - 1)

    def test_simplex_equals_slice_at_s_r(self):
        for r in range(1, 5):
            for n in range(2, 5):
                a = [p for p in enumerate_partitions(FamilySpec.simplex(r, n))]
                b = [p for p in enumerate_partitions(FamilySpec.slice(r, n, r))]
                assert a == b


class TestWinding:
    def test_clock_positions(self):
        p = DecoratedOSP.parse(CLOCK)
        assert position_labels(p, 7) == (0, 2, 4, 3, 0, 0, 4, 4, 2, 3, 4, 3)

    def test_clock_winding(self):
        wd = winding_vector(DecoratedOSP.parse(CLOCK), FamilySpec.hypersimplex(7, 5))
        assert (wd.level, wd.winding_number) == (35, 5)

    def test_modulus_mismatch(self):
        with pytest.raises(ModulusMismatch):
            position_labels(DecoratedOSP.parse(CLOCK), 6)

    def test_not_admissible(self):
        with pytest.raises(NotAdmissible):
            winding_vector(osp(({1}, 1), ({2, 3, 4}, 1)), FamilySpec.hypersimplex(2, 2))

    def test_small_examples(self):
        assert position_labels(osp(({1, 2}, 1), ({3, 4}, 1)), 2) == (0, 0, 1, 1)
        wd = winding_vector(osp(({1, 3}, 1), ({2, 4}, 1)))
        assert wd.winding_vector == (1, 1, 1, 1)
        assert (wd.level, wd.winding_number) == (4, 2)
        wd = winding_vector(osp(({1, 2, 3, 4, 5}, 3)))
        assert wd.winding_vector == (0,) * 5 and wd.winding_number == 0

    @pytest.mark.parametrize("family", FAMILIES, ids=FamilySpec.label)
    def test_matches_brute_winding(self, family):
        for p in enumerate_partitions(family):
            wd = winding_vector(p, family)
            assert (wd.winding_vector, wd.winding_number) == winding_brute(p.blocks, p.decorations, p.n)
            assert wd.level % family.winding_modulus == 0
            assert 0 <= wd.winding_number <= family.n - 1
            assert all(wd.positions[e - 1] == 0 for e in p.blocks[0])


class TestUnwind:
    def test_examples(self):
        assert unwind((0, 0, 0, 0), 3).to_text() == "{1,2,3,4}_3"
        assert unwind((1, 1, 1, 1), 2).to_text() == "{1,3}_1|{2,4}_1"

    def test_level_not_divisible(self):
        with pytest.raises(LevelNotDivisible):
            unwind((1, 0, 0), 2)

    @pytest.mark.parametrize("family", FAMILIES, ids=FamilySpec.label)
    def test_round_trip(self, family):
        vectors = set()
        for p in enumerate_partitions(family):
            w = winding_vector(p, family).winding_vector
            vectors.add(w)
            assert unwind(w, family.winding_modulus) == p
        assert len(vectors) == count_admissible(family)

    @settings(max_examples=300)
    @given(st.integers(1, 6), st.data())
    def test_any_modular_vector_unwinds(self, a, data):
        n = data.draw(st.integers(1, 8))
        w = data.draw(st.lists(st.integers(0, a - 1), min_size=n, max_size=n))
        w[-1] = (-sum(w[:-1])) % a
        p = unwind(w, a)
        assert sum(p.decorations) == a
        assert winding_vector(p).winding_vector == tuple(w)


class TestHistogram:
    def test_values(self):
        assert grading_histogram(FamilySpec.hypersimplex(2, 2)) == (1, 2, 1, 0)
        assert grading_histogram(FamilySpec.simplex(3, 3)) == (1, 7, 1)
        got = [grading_histogram(FamilySpec.slice(2, 3, s)) for s in range(1, 6)]
        assert got == [(1, 0, 0), (1, 3, 0), (1, 4, 1), (1, 3, 0), (1, 0, 0)]


class TestModularSection:
    def test_3_3(self):
        sec = modular_section(3, 3)
        assert len(sec) == 9
        assert {(0, 0, 0), (2, 2, 2), (1, 1, 1), (0, 1, 2), (2, 1, 0)} <= sec

    def test_small(self):
        assert modular_section(1, 4) == {(0, 0, 0, 0)}
        assert modular_section(2, 2) == {(0, 0), (1, 1)}

    @pytest.mark.parametrize("r,n", [(2, 5), (3, 4), (5, 3)])
    def test_cardinality(self, r, n):
        assert len(modular_section(r, n)) == r ** (n - 1)
