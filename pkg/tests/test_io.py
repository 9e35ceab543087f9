import json

import pytest

from conftest import cfg
from hyperboot import HypergraphModel, initial_state, run
from hyperboot.io import (
    ConfigurationFormatError,
    dumps,
    format_configuration,
    parse_configuration,
    read_configuration,
    trace_records,
    write_configuration,
    write_trace,
)


def test_parse_skips_comments_and_blanks():
    text = "# header\n\n1 2\n  3 4  \n# trailing\n"
    C = parse_configuration(text, 5, 2)
    assert list(C) == [(1, 2), (3, 4)]


@pytest.mark.parametrize("text,line,fragment", [
    ("1 2\n1 x\n", 2, "non-integer"),
    ("1 2 3\n", 1, "expected 2"),
    ("2 1\n", 1, "ascending"),
    ("1 2\n\n4 9\n", 3, ""),
])
def test_parse_errors_carry_location(text, line, fragment):
    with pytest.raises(ConfigurationFormatError) as exc:
        parse_configuration(text, 5, 2, source="f.txt")
    assert exc.value.line == line
    assert str(exc.value).startswith(f"f.txt:{line}:")
    assert fragment in str(exc.value)


def test_round_trip(tmp_path):
    C = cfg([(1, 2, 5), (2, 3, 4), (1, 4, 6)], 6)
    path = tmp_path / "c.txt"
    write_configuration(path, C, comment='{"a":1}')
    assert path.read_text().splitlines()[0] == '# {"a":1}'
    assert read_configuration(path, 6, 3) == C


def test_format_is_colex_ordered():
    C = cfg([(3, 4), (1, 2), (1, 3)], 4)
    assert format_configuration(C) == "1 2\n1 3\n3 4\n"


def test_trace_records(tmp_path):
    A0 = cfg([(1, 2)], 4)
    res = run(initial_state(A0, HypergraphModel.complete(4, 3), 1))
    recs = trace_records(A0, res)
    assert [r["t"] for r in recs] == [1, 2, 3]
    assert [r["infected_count"] for r in recs] == [5, 6, 6]
    assert recs[1]["frontier"] == [[3, 4]]
    write_trace(tmp_path / "t.jsonl", A0, res)
    lines = (tmp_path / "t.jsonl").read_text().splitlines()
    assert [json.loads(x) for x in lines] == recs


def test_dumps_is_canonical():
    assert dumps({"b": 1, "a": [1, 2]}) == '{"a":[1,2],"b":1}'
