"""
Тесты для set_coding: коды множеств и пар.
"""

import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

import pytest
from hypothesis import given, settings, strategies as st

from errors import LemmaHypothesis, NotAPair, NotASet
from set_coding import (
    FIRST, INTERMEDIATE, LAST, append_codes, decode_pair, doubleton_code, encode_pair,
    encode_set, envelops, find_frames, format_set, is_member, is_pair, is_set,
    members, min_nonoccurrent_tally, pair_decompositions, parse_set, singleton_code,
)


strings = st.text(alphabet="ab", min_size=1, max_size=8)


class TestPairs:
    """Тесты кода пары taxatayat"""

    def test_encode(self):
        assert encode_pair("a", "a") == "baaabaaab"
        assert encode_pair("b", "a") == "bbababbaaabb"

    def test_decode(self):
        assert decode_pair("baaabaaab") == ("a", "a")
        assert decode_pair("bbababbaaabb") == ("b", "a")

    def test_is_pair(self):
        assert is_pair("a", "a", "baaabaaab")
        assert not is_pair("a", "b", "baaabaaab")

    def test_non_minimal_tally_rejected(self):
        # bb длиннее необходимого для x·a·y = aaa
        z = "bbaaabbaaabb"
        assert not is_pair("a", "a", z)
        with pytest.raises(NotAPair):
            decode_pair(z)

    @pytest.mark.parametrize("z", ["ab", "bab", "baaab", "abaaabaaab"])
    def test_decode_rejects(self, z):
        with pytest.raises(NotAPair):
            decode_pair(z)

    @given(strings, strings)
    def test_roundtrip(self, x, y):
        z = encode_pair(x, y)
        assert decode_pair(z) == (x, y)
        assert pair_decompositions(z) == [(x, y)]

    def test_min_nonoccurrent_tally(self):
        assert min_nonoccurrent_tally("aaa") == "b"
        assert min_nonoccurrent_tally("abba") == "bbb"


class TestSetCodes:
    """Тесты кода множества и условий Env"""

    def test_empty_set(self):
        assert encode_set([]).raw == "aa"
        assert members("aa") == set()
        assert is_set("aa")

    def test_encode_two_elements(self):
        code = encode_set(["b", "a"])
        assert code.raw == "bbaaabbbababbb"
        assert code.members() == {"a", "b"}
        assert code.envelope == "bbb"

    def test_frames(self):
        frames = find_frames("bbaaabbbababbb")
        assert [(f.kind, f.core) for f in frames] == [(FIRST, "a"), (LAST, "b")]

    def test_single_frame(self):
        code = parse_set("baaab")
        assert [f.kind for f in code.frames] == [LAST]
        assert code.members() == {"a"}

    def test_three_elements_have_intermediate(self):
        code = encode_set(["a", "b", "aa"])
        kinds = [f.kind for f in code.frames]
        assert kinds == [FIRST, INTERMEDIATE, LAST]
        assert code.members() == {"a", "b", "aa"}

    @pytest.mark.parametrize("x", ["ab", "aaa", "bab", "babb"])
    def test_not_a_set(self, x):
        assert not is_set(x)
        with pytest.raises(NotASet) as exc:
            parse_set(x)
        assert exc.value.condition in ("a", "b", "c", "d", "e", "frames")

    def test_envelops(self):
        assert envelops("bbb", "bbaaabbbababbb")
        assert not envelops("bb", "bbaaabbbababbb")

    def test_membership(self):
        x = encode_set(["ab", "ba"]).raw
        assert is_member("ab", x)
        assert not is_member("a", x)
        assert not is_member("a", "ab")

    @settings(max_examples=50)
    @given(st.sets(strings, max_size=4))
    def test_roundtrip(self, ws):
        assert members(encode_set(ws).raw) == ws

    def test_format_set(self):
        assert format_set(["ba", "a"]) == "{a, ba}"


class TestCodeLemmas:
    """Тесты одно- и двухэлементных кодов и склейки"""

    @pytest.mark.parametrize("u", ["a", "b", "ab", "bba", "abba"])
    def test_singleton(self, u):
        assert members(singleton_code(u)) == {u}

    @pytest.mark.parametrize("u,v", [("a", "b"), ("b", "a"), ("ab", "bb"), ("bbb", "a")])
    def test_doubleton(self, u, v):
        assert members(doubleton_code(u, v)) == {u, v}

    def test_append(self):
        x = encode_set(["a"]).raw
        y = encode_set(["b"]).raw
        assert x == "baaab"
        assert y == "bbababb"
        joined = append_codes(x, y)
        assert joined == "baaabbababb"
        assert members(joined) == {"a", "b"}

    def test_append_with_empty(self):
        y = encode_set(["b"]).raw
        assert append_codes("aa", y) == y
        assert append_codes(y, "aa") == y

    def test_append_overlap(self):
        with pytest.raises(LemmaHypothesis):
            append_codes(encode_set(["a"]).raw, encode_set(["a", "b"]).raw)

    def test_append_short_marker(self):
        with pytest.raises(LemmaHypothesis):
            append_codes(encode_set(["b"]).raw, encode_set(["a"]).raw)
