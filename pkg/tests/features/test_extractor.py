import numpy as np
import pytest

from glyphcluster.features import (
    FEATURE_SEGMENTS,
    FeatureVector,
    LineFamily,
    NO_INK,
    antidiagonal_histograms,
    diagonal_histograms,
    extract,
    extract_batch,
    feature_names,
    horizontal_histograms,
    in_out_profiles,
    line_cells,
    line_length,
    oracle_extract,
    out_in_profiles,
    vertical_histograms,
)
from glyphcluster.preprocess import CharMatrix

FAMILIES = list(LineFamily)


def _matrix(*pixels):
    """Matrix with ink at the given one-based (row, column) cells."""
    bits = np.zeros((32, 32), dtype=np.uint8)
    for row, col in pixels:
        bits[row - 1, col - 1] = 1
    return CharMatrix(bits)


def _expected(**nonzero):
    """All-white vector with the given `SEGMENT=[(n, value), ...]` entries replaced."""
    values = np.array([0] * 128 + [NO_INK] * 128)
    for segment, entries in nonzero.items():
        offset = FEATURE_SEGMENTS.index(segment) * 16
        for n, value in entries:
            values[offset + n - 1] = value
    return values


@pytest.fixture
def white():
    return CharMatrix.blank()


@pytest.fixture
def black():
    return CharMatrix(np.ones((32, 32), dtype=np.uint8))


def test_feature_names():
    names = feature_names()
    assert len(names) == 256
    assert names[0] == "H_hl_01"
    assert names[16] == "H_hr_01"
    assert names[-1] == "P_iolad_16"


def test_white_matrix(white):
    vector = extract(white)
    assert vector.values.tolist() == [0] * 128 + [-1] * 128
    assert (horizontal_histograms(white)[0] == 0).all()
    assert (vertical_histograms(white)[1] == 0).all()
    assert all((profile == NO_INK).all() for profile in out_in_profiles(white))
    assert all((profile == NO_INK).all() for profile in in_out_profiles(white))


def test_black_matrix(black):
    vector = extract(black)
    h_hl, h_hr = horizontal_histograms(black)
    h_vu, h_vl = vertical_histograms(black)
    assert (h_hl == 16).all() and (h_hr == 17).all()
    assert (h_vu == 16).all() and (h_vl == 17).all()
    lengths = {family: np.array([line_length(family, n) for n in range(1, 17)]) for family in FAMILIES}
    h_ud, h_ld = diagonal_histograms(black)
    h_uad, h_lad = antidiagonal_histograms(black)
    assert np.array_equal(h_ud, lengths[LineFamily.UPPER_DIAG])
    assert np.array_equal(h_ld, lengths[LineFamily.LOWER_DIAG])
    assert np.array_equal(h_uad, lengths[LineFamily.UPPER_ANTIDIAG])
    assert np.array_equal(h_lad, lengths[LineFamily.LOWER_ANTIDIAG])
    for family, profile in zip(FAMILIES, out_in_profiles(black)):
        assert np.array_equal(profile, lengths[family] - 1)
    for profile in in_out_profiles(black):
        assert (profile == 0).all()
    assert vector == oracle_extract(black)


def test_single_pixel_left_rows():
    assert np.array_equal(extract(_matrix((2, 5))).values, _expected(H_hl=[(1, 1)]))


def test_single_pixel_on_upper_diag_line():
    expected = _expected(H_ud=[(2, 1)], P_oiud=[(2, 2)], P_ioud=[(2, 2)])
    assert np.array_equal(extract(_matrix((1, 5))).values, expected)


def test_single_pixel_shared_by_three_families():
    # (4, 6) is row 2*2 of the left half, column 2*3 of the upper half and offset 1 of upper-diag line 3
    expected = _expected(H_hl=[(2, 1)], H_vu=[(3, 1)], H_ud=[(3, 1)], P_oiud=[(3, 1)], P_ioud=[(3, 1)])
    matrix = _matrix((4, 6))
    assert np.array_equal(extract(matrix).values, expected)
    assert np.array_equal(oracle_extract(matrix).values, expected)


def test_diagonal_only():
    matrix = _matrix(*[(i, i) for i in range(1, 33)])
    h_ud, h_ld = diagonal_histograms(matrix)
    assert (h_ud == 1).all() and (h_ld == 1).all()
    assert extract(matrix) == oracle_extract(matrix)


def test_antidiagonal_only():
    matrix = _matrix(*[(i, 33 - i) for i in range(1, 33)])
    h_uad, h_lad = antidiagonal_histograms(matrix)
    assert (h_uad == 1).all() and (h_lad == 1).all()
    assert extract(matrix) == oracle_extract(matrix)


def test_profiles_of_two_pixels_on_a_line():
    cells = line_cells(LineFamily.UPPER_DIAG, 8).cells
    matrix = _matrix(cells[2], cells[5])
    vector = extract(matrix)
    assert vector.segment("H_ud")[7] == 2
    assert vector.segment("P_ioud")[7] == 2
    assert vector.segment("P_oiud")[7] == 5
    assert vector == oracle_extract(matrix)


def test_per_family_operations_match_extract():
    rng = np.random.default_rng(11)
    matrix = CharMatrix((rng.random((32, 32)) < 0.4).astype(np.uint8))
    vector = extract(matrix)
    pieces = (
        list(horizontal_histograms(matrix))
        + list(vertical_histograms(matrix))
        + list(diagonal_histograms(matrix))
        + list(antidiagonal_histograms(matrix))
        + list(out_in_profiles(matrix))
        + list(in_out_profiles(matrix))
    )
    assert np.array_equal(np.concatenate(pieces), vector.values)


def test_extract_batch_shape():
    table = extract_batch([CharMatrix.blank(), _matrix((1, 1))])
    assert table.shape == (2, 256)
    assert table.dtype == np.int64
    assert extract_batch([]).shape == (0, 256)


def test_vector_rendering():
    vector = extract(_matrix((2, 5)))
    line = vector.to_csv_line()
    assert len(line.split(",")) == 256
    assert line.startswith("1,0,")
    described = vector.describe().splitlines()
    assert len(described) == 16
    assert described[0].startswith("H_hl")


def test_vector_shape():
    with pytest.raises(ValueError):
        FeatureVector(np.zeros(255))
