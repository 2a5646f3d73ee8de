import pytest
from hypothesis import given, settings

from matcrit.constructions import catalog, fano, uniform
from matcrit.fileformat import ParseError, SemanticError, parse, read, serialize, write
from strategies import matroids

U23_TEXT = "MATROID U_2_3\nELEMENTS 3\nRANK 2\nBASES\n0 1\n0 2\n1 2\nEND\n"


def test_serialize_u23():
    assert serialize(uniform(2, 3), "U_2_3") == U23_TEXT


def test_round_trip_fano():
    parsed = parse(serialize(fano(), "F7"))
    assert parsed.name == "F7"
    assert parsed.matroid == fano()


@pytest.mark.parametrize("entry", catalog(), ids=lambda e: e.name)
def test_canonical_files_round_trip(entry):
    text = serialize(entry.matroid, entry.name)
    assert serialize(parse(text).matroid, entry.name) == text


@settings(max_examples=100, deadline=None)
@given(matroids())
def test_round_trip_random(M):
    text = serialize(M, "X")
    assert parse(text).matroid == M
    assert serialize(parse(text).matroid, "X") == text


def test_exchange_failure_is_semantic():
    text = "MATROID bad\nELEMENTS 4\nRANK 2\nBASES\n0 1\n2 3\nEND\n"
    with pytest.raises(SemanticError, match="basis exchange"):
        parse(text)


def test_comments_and_rank_zero():
    text = "# a comment\nMATROID Z\n# another\nELEMENTS 2\nRANK 0\nBASES\n\nEND\n"
    parsed = parse(text)
    assert (parsed.matroid.n, parsed.matroid.r) == (2, 0)
    assert serialize(parsed.matroid, "Z") == "MATROID Z\nELEMENTS 2\nRANK 0\nBASES\n\nEND\n"


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("ELEMENTS 3\n", 1, 1),
        ("MATROID A\nELEMENTS x\n", 2, 10),
        ("MATROID A\nELEMENTS 3\nRANK 2\nBASIS\n", 4, 1),
        ("MATROID A\nELEMENTS 3\nRANK 2\nBASES\n0 1\n", 6, 1),
        ("MATROID A\nELEMENTS 3\nRANK 2\nBASES\n0 3\nEND\n", 5, 3),
        ("MATROID A\nELEMENTS 3\nRANK 2\nBASES\n1 0\nEND\n", 5, 3),
        ("MATROID A\nELEMENTS 3\nRANK 2\nBASES\n0 1\n0 1\nEND\n", 6, 1),
        ("MATROID A\nELEMENTS 3\nRANK 2\nBASES\n0\nEND\n", 5, 1),
        ("MATROID A\nELEMENTS 3\nRANK 2\nBASES\n0 b\nEND\n", 5, 3),
        ("MATROID A\nELEMENTS 3\nRANK 2\nBASES\n0 1\nEND\nextra\n", 7, 1),
        ("MATROID A\nELEMENTS 3\nRANK 2\nBASES\nEND\n", 5, 1),
        ("MATROID A\nELEMENTS 3\nRANK 2\nBASES\n\nEND\n", 5, 1),
    ],
)
def test_parse_errors_report_position(text, line, column):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert (info.value.line, info.value.column) == (line, column)
    assert f"line {line}, column {column}" in str(info.value)


def test_name_must_be_single_word():
    with pytest.raises(ValueError):
        serialize(uniform(1, 1), "two words")


def test_read_write(tmp_path):
    path = tmp_path / "f7.txt"
    write(path, fano(), "F7")
    assert read(path).matroid == fano()
