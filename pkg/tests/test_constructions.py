import pytest

from ternlrc.bounds import singleton_like_d
from ternlrc.code import is_near_mds, min_distance
from ternlrc.constructions import (
    CODE_8_2_6,
    CODE_12_5_6,
    EXTENDED_QR_12,
    HAMMING_13,
    MDS_4_2_3,
    NEAR_MDS_PARAMETERS,
    ConstructionError,
    class1,
    class2,
    class3,
    class4,
    class5,
    class6,
    class7,
    class8,
    expected_parameters,
    format_sequences,
    load_class5_sequences,
    parse_sequences,
    search_class5_sequences,
    spec,
    table_specs,
    verify_construction,
)
from ternlrc.locality import build_cover_matrix, check_disjoint_uniform, locality_profile

# shape and row weights, counted by hand from the printed matrices
TRANSCRIPTIONS = [
    (MDS_4_2_3, (2, 4), (3, 3)),
    (HAMMING_13, (3, 13), (9, 9, 9)),
    (CODE_8_2_6, (6, 8), (2, 2, 2, 2, 3, 3)),
    (EXTENDED_QR_12, (6, 12), (6, 6, 6, 6, 6, 6)),
    (CODE_12_5_6, (7, 12), (3, 3, 3, 3, 6, 5, 5)),
]


@pytest.mark.parametrize("m,shape,weights", TRANSCRIPTIONS)
def test_transcription_checksums(m, shape, weights):
    assert m.shape == shape
    assert m.row_weights() == weights


def test_class1_examples():
    assert class1(6, 2).parity_check.tolist() == [
        [1, 1, 1, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 1, 1, 1, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 1, 1, 1],
    ]
    assert class1(7, 3).parity_check.tolist() == [
        [1, 1, 1, 1, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 1, 1, 1, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 1, 1],
    ]
    assert class1(2, 1).parity_check.tolist() == [[1, 1, 0, 0], [0, 0, 1, 1]]
    with pytest.raises(ConstructionError):
        class1(3, 3)


@pytest.mark.parametrize("g,params", [(0, (13, 10, 8)), (2, (11, 8, 6)), (4, (9, 6, 4))])
def test_class2_examples(g, params):
    c = class2(g)
    assert (c.n, c.k, locality_profile(c).code_locality) == params
    assert min_distance(c) == 3
    assert c.parity_check.shape == (3, 13 - g)


def test_class2_range():
    for g in (-1, 5):
        with pytest.raises(ConstructionError):
            class2(g)


def test_class3_examples():
    assert class3(2).parity_check.tolist() == [
        [1, 1, 0, 0, 0, 0],
        [0, 0, 1, 1, 0, 0],
        [0, 0, 0, 0, 1, 1],
        [0, 1, 0, 1, 0, 1],
    ]
    assert min_distance(class3(2)) == 4
    c = class3(3)
    assert (c.n, c.k, min_distance(c)) == (8, 3, 4)
    c = class3(5)
    assert (c.n, c.k, min_distance(c), locality_profile(c).code_locality) == (12, 5, 4, 1)
    with pytest.raises(ConstructionError):
        class3(1)


def test_class4():
    c = class4()
    assert (c.n, c.k, min_distance(c), locality_profile(c).code_locality) == (8, 2, 6, 1)


@pytest.mark.parametrize("n,k,d,r", [(12, 6, 6, 5), (6, 3, 3, 2), (11, 5, 6, 4)])
def test_class5_examples(n, k, d, r):
    c = class5(n, k)
    assert (c.n, c.k, min_distance(c), locality_profile(c).code_locality) == (n, k, d, r)


def test_class5_top_is_verbatim():
    assert class5(12, 6).parity_check == EXTENDED_QR_12
    assert is_near_mds(class5(12, 6))
    with pytest.raises(ConstructionError):
        class5(13, 6)


def test_class6_examples():
    assert class6(3).parity_check.tolist() == [
        [1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1],
        [0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1],
        [0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1],
    ]
    c = class6(4)
    assert (c.n, c.k, min_distance(c, "columns")) == (16, 10, 4)
    assert locality_profile(class6(3)).per_symbol == (3,) * 12
    with pytest.raises(ConstructionError):
        class6(2)


def test_class7_examples():
    assert class7(3).parity_check.tolist() == [
        [1, 1, 1, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 1, 1, 1, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 1, 1, 1],
        [0, 1, 2, 0, 1, 2, 0, 1, 2],
    ]
    c = class7(5)
    assert (c.n, c.k, min_distance(c, "columns")) == (15, 9, 3)
    assert singleton_like_d(9, 5, 2) == 3 == min_distance(class7(3))
    with pytest.raises(ConstructionError):
        class7(2)


def test_class8():
    c = class8()
    assert (c.n, c.k) == (12, 5)
    assert min_distance(c, "enumerate") == min_distance(c, "columns") == 6
    assert locality_profile(c).code_locality == 2


FAMILY = (
    [spec(1, k=k, r=r) for k in range(2, 11) for r in range(1, k)]
    + [spec(2, g=g) for g in range(5)]
    + [spec(3, k=k) for k in range(2, 7)]
    + [spec(4)]
    + [spec(5, n=n, k=k) for n, k in NEAR_MDS_PARAMETERS]
    + [spec(6, l=l) for l in (3, 4)]
    + [spec(7, l=l) for l in (3, 4, 5)]
    + [spec(8)]
)


@pytest.mark.parametrize("s", FAMILY, ids=lambda s: s.label())
def test_construction_meets_bound(s):
    c = s.build()
    n, k, d, r = s.expected
    assert (c.n, c.k) == (n, k)
    dist = min_distance(c)
    assert dist == d == singleton_like_d(n, k, r)
    exact = locality_profile(c).code_locality
    assert exact <= r
    assert dist == singleton_like_d(n, k, exact)
    if s.class_id == 1 and k % r == 0:
        assert check_disjoint_uniform(build_cover_matrix(c, r), r)
    if s.class_id == 5:
        assert 3 <= k <= 6 and 3 <= n - k <= 6 and n <= 12


def test_expected_parameters_unknown_class():
    with pytest.raises(ConstructionError):
        expected_parameters(9)


def test_table_specs_shape():
    specs = table_specs()
    assert len(specs) == 27
    assert [s.class_id for s in specs].count(2) == 5
    assert [s.class_id for s in specs].count(5) == 16


def test_verify_construction_record():
    row = verify_construction(spec(8))
    assert row == {
        "class_id": 8,
        "params": {},
        "n": 12,
        "k": 5,
        "d": 6,
        "r": 2,
        "target_d": 6,
        "matches": True,
        "optimal": True,
    }


def test_sequence_file_round_trip():
    seqs = load_class5_sequences()
    assert set(seqs) == set(NEAR_MDS_PARAMETERS)
    assert seqs[(12, 6)] == []
    assert parse_sequences(format_sequences(seqs)) == seqs
    assert all(len(steps) == 12 - n for (n, k), steps in seqs.items())


def test_sequence_parse_errors():
    with pytest.raises(ValueError, match="line 1"):
        parse_sequences("12 6 puncture(1)\n")
    with pytest.raises(ValueError, match="bad step"):
        parse_sequences("11 6 : trim(1)\n")
    with pytest.raises(ValueError, match="line 2"):
        parse_sequences("# header\n11 x : puncture(1)\n")


def test_sequence_search_reproduces_fixture():
    assert search_class5_sequences() == load_class5_sequences()
