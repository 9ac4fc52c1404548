import itertools

import pytest
from hypothesis import given

from crprod.equations import (
    LeviSide,
    ShirvCase1,
    ShirvCase2,
    ShirvCase3,
    WordEquationError,
    align_factorizations,
    levi_split,
    max_cancellation,
    shirv_decompose,
)
from crprod.sweep import words_up_to
from crprod.words import crp, format_word, invert, parse_word, reduce_concat
from oracles import factorizations, shirv_templates
from strategies import reduced_words, words

P = parse_word


class TestLevi:
    def test_examples(self):
        r = levi_split(P("xy"), P("y"), P("x"), P("yy"))
        assert r.side is LeviSide.FIRST_LONGER and format_word(r.p) == "y"
        r = levi_split(P("x"), P("y"), P("x"), P("y"))
        assert r.side is LeviSide.EQUAL and r.p == ()
        r = levi_split(P("x"), P("yy"), P("xy"), P("y"))
        assert r.side is LeviSide.SECOND_LONGER and format_word(r.p) == "y"

    def test_mismatch(self):
        with pytest.raises(WordEquationError):
            levi_split(P("x"), P("y"), P("y"), P("x"))

    @given(words(10))
    def test_every_split_pair_reassembles(self, w):
        for u1, u2 in factorizations(w, 2):
            for v1, v2 in factorizations(w, 2):
                r = levi_split(u1, u2, v1, v2)
                if r.side is LeviSide.FIRST_LONGER:
                    assert u1 == v1 + r.p and v2 == r.p + u2
                elif r.side is LeviSide.SECOND_LONGER:
                    assert v1 == u1 + r.p and u2 == r.p + v2
                else:
                    assert (u1, u2) == (v1, v2) and r.p == ()


class TestAlign:
    def test_single_part(self):
        b = align_factorizations([P("x"), P("y")], [P("xy")])
        assert b.bars_in_u == (0, 0) and b.bars_in_v == (1,)

    def test_empty_parts_skip_bars(self):
        b = align_factorizations([P("1"), P("xy")], [P("x"), P("y")])
        assert b.bars_in_u == (0, 1) and b.bars_in_v == (1, 0)

    def test_weak_composition(self):
        u_parts = [P("x"), P("yx"), P("1"), P("y")]
        v_parts = [P("xy"), P("x"), P("y")]
        b = align_factorizations(u_parts, v_parts)
        assert sum(b.bars_in_u) == 2 and sum(b.bars_in_v) == 3
        assert sum(b.fragments, ()) == P("xyxy")

    @given(words(8))
    def test_bars_sum_and_fragments(self, w):
        for u_parts in factorizations(w, 3):
            for v_parts in itertools.islice(factorizations(w, 2), 5):
                b = align_factorizations(u_parts, v_parts)
                assert sum(b.bars_in_u) == len(v_parts) - 1
                assert sum(b.bars_in_v) == len(u_parts) - 1
                assert sum(b.fragments, ()) == tuple(w)
                assert all(b.fragments)

    def test_spelling_mismatch(self):
        with pytest.raises(WordEquationError):
            align_factorizations([P("x")], [P("y")])


class TestCancellation:
    @pytest.mark.parametrize("u,v,out", [("xy", "Yx", ("x", "y", "x")),
                                         ("xy", "xy", ("xy", "1", "xy")),
                                         ("xy", "YX", ("1", "xy", "1"))])
    def test_examples(self, u, v, out):
        assert tuple(map(format_word, max_cancellation(P(u), P(v)))) == out

    @given(reduced_words(10), reduced_words(10))
    def test_reassembly(self, u, v):
        ul, a, vr = max_cancellation(u, v)
        assert u == ul + a and v == invert(a) + vr
        assert reduce_concat(u, v) == ul + vr


class TestShirv:
    def test_case2_example(self):
        r = shirv_decompose(P("xy"), P("Yx"))
        assert isinstance(r, ShirvCase2)
        assert [format_word(x) for x in (r.c1, r.c2, r.t, r.a)] == ["x", "x", "1", "y"]
        assert format_word(crp(P("Yx"), P("xy"))) == "xx"

    def test_case1_example(self):
        r = shirv_decompose(P("xy"), P("YxyyXX"))
        assert isinstance(r, ShirvCase1)
        assert [format_word(x) for x in (r.u1, r.a, r.s, r.product)] == ["x", "y", "x", "yy"]

    def test_case3_example(self):
        r = shirv_decompose(P("Yxxx"), P("Xy"))
        assert isinstance(r, ShirvCase3)
        assert [format_word(x) for x in (r.v1, r.s, r.a, r.product)] == ["y", "1", "x", "xx"]

    def test_inverse_pair_rejected(self):
        with pytest.raises(WordEquationError):
            shirv_decompose(P("xy"), P("YX"))

    def test_unreduced_rejected(self):
        with pytest.raises(WordEquationError):
            shirv_decompose(P("xX"), P("y"))

    def test_empty_inputs(self):
        assert shirv_decompose((), P("xy")).holds((), P("xy"))
        assert shirv_decompose(P("xy"), ()).holds(P("xy"), ())

    @given(reduced_words(10), reduced_words(10))
    def test_holds(self, u, v):
        if u == invert(v):
            return
        r = shirv_decompose(u, v)
        assert r.holds(u, v)
        if r.case == 2:
            assert crp(v, u) == r.c2 + r.c1

    def test_agrees_with_template_oracle(self):
        ws = words_up_to(2, 4)
        for u in ws:
            for v in ws:
                if u == invert(v):
                    continue
                fits = shirv_templates(u, v)
                r = shirv_decompose(u, v)
                assert r.case in fits
                preferred = next(c for c in (2, 1, 3) if c in fits)
                assert r.case == preferred, (format_word(u), format_word(v), fits)
