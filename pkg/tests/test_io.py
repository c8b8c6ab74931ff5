import numpy as np
import pytest

from quatrange.io import (
    MatrixFormatError,
    load_matrix,
    matrix_to_grid,
    matrix_to_json,
    parse_matrix,
    region_descriptor,
    region_from_csv,
    region_to_csv,
    samples_from_csv,
    samples_to_csv,
)
from quatrange.matrix import QMatrix
from quatrange.region import disk_polygon, hull


def test_parse_json_and_grid_agree():
    a = parse_matrix('{"n": 2, "entries": [["1+2j", 0.5], ["-k", "3"]]}')
    b = parse_matrix("1+2j 0.5\n# comment\n-k, 3\n")
    assert a == b
    assert a.field == "H"


def test_matrix_round_trip(rng):
    A = QMatrix(rng.standard_normal((3, 3, 4)))
    assert parse_matrix(matrix_to_json(A)) == A
    assert parse_matrix(matrix_to_grid(A)) == A


@pytest.mark.parametrize(
    "text, line, column",
    [
        ('{"n": 2, "entries": [["1", "2"], ["3", "4q"]]}', 1, 40),
        ('{"n": 2,\n "entries": [["1", "2"],\n ["3" "4"]]}', 3, 7),
        ("1 2\n3 x\n", 2, 3),
        ("1 2\n3\n", 2, 1),
    ],
)
def test_parse_errors_carry_position(text, line, column):
    with pytest.raises(MatrixFormatError) as info:
        parse_matrix(text, "m.txt")
    assert (info.value.line, info.value.column) == (line, column)
    assert f"line {line}" in str(info.value)


@pytest.mark.parametrize(
    "text",
    ['{"n": 3, "entries": [["1"]]}', '{"entries": []}', "[1, 2]", "", "1 2\n3 4\n5 6\n", '{"n": 1, "entries": [[true]]}'],
)
def test_parse_rejects(text):
    with pytest.raises(MatrixFormatError):
        parse_matrix(text)


def test_load_matrix(tmp_path):
    p = tmp_path / "a.json"
    p.write_text('{"n": 1, "entries": [["i"]]}')
    assert load_matrix(p) == QMatrix([[1j]])


def test_region_round_trip():
    for R in (disk_polygon(0.25, 0.5, 64), hull([1j, 2j]), hull([5])):
        back = region_from_csv(region_to_csv(R), region_descriptor(R))
        assert back.kind is R.kind and back.tol == R.tol
        assert np.array_equal(back.vertices, R.vertices)
        assert region_from_csv(region_to_csv(R)).kind is R.kind


def test_csv_uses_shortest_round_trip():
    text = region_to_csv(hull([0.1, 0.1 + 0.2j, 1]))
    assert "0.1,0" in text and "0.30000000000000004" not in text


def test_samples_round_trip(rng):
    pts = rng.standard_normal((10, 4))
    assert np.array_equal(samples_from_csv(samples_to_csv(pts)), pts)
    with pytest.raises(ValueError):
        samples_from_csv("x,y\n")
