import json
from fractions import Fraction

import pytest

from toriclogk import InvalidInput, RatVec, builtin_polytope
from toriclogk.serialize import (
    format_rational,
    format_ratvec,
    parse_rational,
    parse_ratvec,
    parse_vector_text,
    polytope_from_json,
    polytope_from_obj,
    polytope_to_obj,
    to_json,
)

F = Fraction


class TestRationalRoundTrip:
    @pytest.mark.parametrize("value", [F(0), F(7), F(-3), F(1, 2), F(-21, 25), F(63, 65)])
    def test_round_trip(self, value):
        assert parse_rational(format_rational(value)) == value

    def test_integers_serialize_bare(self):
        assert format_rational(F(4)) == 4
        assert format_rational(F(8, 2)) == 4
        assert format_rational(F(1, 2)) == "1/2"
        assert format_rational(F(-2, 21)) == "-2/21"

    @pytest.mark.parametrize("text,expected", [("6/7", F(6, 7)), ("-1", F(-1)), ("+3/9", F(1, 3))])
    def test_parse_strings(self, text, expected):
        assert parse_rational(text) == expected

    @pytest.mark.parametrize("bad", ["0.5", "1e3", "1/2/3", "", "a", "1.0", "1/0", True])
    def test_rejects_non_rationals(self, bad):
        with pytest.raises(InvalidInput):
            parse_rational(bad)


class TestVectors:
    def test_ratvec_round_trip(self):
        v = RatVec([F(1, 12), F(-2, 21), 3])
        assert parse_ratvec(format_ratvec(v)) == v

    def test_vector_text(self):
        assert parse_vector_text("-1,2") == RatVec([-1, 2])
        assert parse_vector_text("1/2, -3/4") == RatVec([F(1, 2), F(-3, 4)])
        with pytest.raises(InvalidInput):
            parse_vector_text("1,,2")
        with pytest.raises(InvalidInput):
            parse_vector_text("")


class TestPolytopeJson:
    @pytest.mark.parametrize("name", ["p2", "bl1p2", "bl2p2", "p1xp1"])
    def test_round_trip_exact(self, name):
        poly = builtin_polytope(name)
        text = to_json(polytope_to_obj(poly, name))
        parsed_name, parsed = polytope_from_json(text)
        assert parsed_name == name
        assert parsed == poly

    def test_accepts_rational_strings_that_are_integers(self):
        obj = {"name": "seg", "dim": 1, "vertices": [["0"], ["2/2"]]}
        _, poly = polytope_from_obj(obj)
        assert poly.vertices == (RatVec([0]), RatVec([1]))

    @pytest.mark.parametrize(
        "obj",
        [
            [],
            {"dim": 2},
            {"dim": 0, "vertices": [[0]]},
            {"dim": 2, "vertices": []},
            {"dim": 2, "vertices": [[1, 0], [0, 1], [1]]},
            {"dim": 2, "vertices": [[1, 0], [0, 1], ["1/2", 0]]},
            {"dim": "2", "vertices": [[1, 0], [0, 1], [-1, -1]]},
        ],
    )
    def test_rejects_malformed_objects(self, obj):
        with pytest.raises(InvalidInput):
            polytope_from_obj(obj)

    def test_rejects_invalid_json_text(self):
        with pytest.raises(InvalidInput):
            polytope_from_json("{not json")

    def test_report_numbers_parse_back(self, bl2p2):
        # Every numeric leaf in a serialized polytope parses back to the
        # identical exact rational.
        obj = polytope_to_obj(bl2p2, "bl2p2")
        for row, vertex in zip(obj["vertices"], bl2p2.vertices):
            assert RatVec([parse_rational(c) for c in row]) == vertex

    def test_json_text_is_stable(self, bl1p2):
        a = to_json(polytope_to_obj(bl1p2, "x"))
        b = to_json(polytope_to_obj(builtin_polytope("bl1p2"), "x"))
        assert a == b
        assert json.loads(a) == json.loads(b)
