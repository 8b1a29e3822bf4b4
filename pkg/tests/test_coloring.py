"""Colorings, set families, the two built-in schemes, and the QRC1 format."""

import random

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import random_coloring
from cuberamsey import (
    Color,
    Coloring,
    ColoringFormatError,
    CubeSpace,
    ElementSet,
    SetFamily,
    c0_color,
    dual_coloring,
    layered_color,
    load_coloring,
    make_c0,
    make_layered,
    parse_coloring,
    render_coloring,
    save_coloring,
)


class TestColor:
    def test_flipped_is_involution(self):
        assert Color.RED.flipped() is Color.BLUE
        assert Color.BLUE.flipped() is Color.RED
        assert Color.RED.flipped().flipped() is Color.RED


class TestSetFamily:
    def test_from_sets_and_contains(self):
        space = CubeSpace(4)
        fam = SetFamily.from_sets(space, [ElementSet(0b11, 4), 5, 5])
        assert fam.size == 2
        assert fam.contains(0b11) and fam.contains(ElementSet(5, 4))
        assert not fam.contains(0)

    def test_member_values_ascending(self):
        space = CubeSpace(3)
        fam = SetFamily.from_sets(space, [6, 1, 3])
        assert list(fam.member_values()) == [1, 3, 6]
        assert [s.bits for s in fam.iter_sets()] == [1, 3, 6]

    def test_full(self):
        fam = SetFamily.full(CubeSpace(3))
        assert fam.size == 8

    def test_with_toggled(self):
        space = CubeSpace(3)
        fam = SetFamily.from_sets(space, [1])
        assert fam.with_toggled(2).contains(2)
        assert not fam.with_toggled(1).contains(1)
        assert fam.contains(1)  # original untouched

    def test_complement_image_literal(self):
        space = CubeSpace(4)
        rng = random.Random(3)
        fam = SetFamily.from_sets(space, [v for v in range(16) if rng.random() < 0.5])
        comp = fam.complement_image()
        for v in range(space.size):
            assert comp.contains(v) == fam.contains(space.full_mask ^ v)

    def test_membership_bytes(self):
        fam = SetFamily.from_sets(CubeSpace(2), [0, 3])
        assert fam.membership_bytes() == bytes([1, 0, 0, 1])

    def test_rejects_bad_mask(self):
        with pytest.raises(ValueError):
            SetFamily(CubeSpace(2), np.zeros(3, dtype=bool))
        with pytest.raises(ValueError):
            SetFamily(CubeSpace(2), np.zeros(4, dtype=np.uint8))


class TestColoringClass:
    def test_color_of_and_classes_partition(self):
        c = make_layered(3)
        red = c.color_class(Color.RED)
        blue = c.color_class(Color.BLUE)
        assert red.size + blue.size == 8
        for v in range(8):
            is_red = c.color_of(v) is Color.RED
            assert red.contains(v) == is_red
            assert blue.contains(v) != is_red

    def test_rejects_newline_scheme(self):
        with pytest.raises(ValueError):
            Coloring(CubeSpace(1), np.zeros(2, dtype=bool), scheme="a\nb")

    def test_equality_includes_scheme(self):
        a = make_layered(2)
        b = Coloring(a.space, a.red.copy(), scheme="other")
        assert a != b
        assert a == make_layered(2)


class TestLayeredScheme:
    def test_red_iff_odd_size(self):
        c = make_layered(5)
        for v in range(32):
            s = ElementSet(v, 5)
            expected = Color.RED if s.size % 2 else Color.BLUE
            assert c.color_of(s) is expected
            assert layered_color(s) is expected

    def test_scheme_label(self):
        assert make_layered(3).scheme == "layered"


class TestC0Scheme:
    def test_band_examples_n4(self):
        c = make_c0(4)
        examples = {
            # below ceil(n/2): always red
            "{1}": Color.RED,
            "{}": Color.RED,
            # ceil(n/2) <= |S| < n: red iff S contains a pair
            "{1,3}": Color.BLUE,
            "{1,2,3}": Color.RED,
            "{1,3,5}": Color.BLUE,
            # |S| = n: red iff the element sum is odd
            "{1,3,5,7}": Color.BLUE,  # sum 16
            "{2,3,5,7}": Color.RED,  # sum 17
            # n < |S| <= n + n//2: red iff S misses no pair
            "{1,2,3,4,5}": Color.BLUE,  # misses {7,8}
            "{1,2,3,4,5,7}": Color.RED,
            # above n + n//2: always blue
            "{1,2,3,4,5,6,7}": Color.BLUE,
        }
        from cuberamsey import parse_set

        for text, expected in examples.items():
            s = parse_set(text, 8)
            assert c.color_of(s) is expected, text
            assert c0_color(s, 4) is expected, text

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_vectorized_matches_scalar_and_literal(self, n):
        c = make_c0(n)
        for v in range(c.space.size):
            s = ElementSet(v, 2 * n)
            scalar = c0_color(s, n)
            assert c.color_of(s) is scalar
            assert scalar.value == oracles.c0_color_literal(v, n)

    def test_red_class_size_n4(self):
        c = make_c0(4)
        assert c.color_class(Color.RED).size == 125

    def test_scheme_label(self):
        assert make_c0(3).scheme == "c0 n=3"

    def test_rejects_wrong_ground_set(self):
        with pytest.raises(ValueError):
            c0_color(ElementSet(1, 6), 4)


class TestDualColoring:
    @pytest.mark.parametrize("m", [1, 3, 6])
    def test_literal_definition(self, m):
        rng = random.Random(m)
        c = random_coloring(m, rng)
        d = dual_coloring(c)
        space = c.space
        for v in range(space.size):
            comp = space.full_mask ^ v
            assert d.color_of(v) is c.color_of(comp).flipped()

    def test_involution_including_scheme(self):
        c = make_c0(3)
        assert dual_coloring(dual_coloring(c)) == c
        assert dual_coloring(c).scheme == "dual(c0 n=3)"


class TestQRC1Format:
    def test_exact_bytes_m1(self):
        assert render_coloring(make_layered(1)) == "QRC1\nm=1\nscheme=layered\nBR\n"

    def test_wrap_at_64(self):
        text = render_coloring(make_c0(4))
        lines = text.splitlines()
        assert lines[:3] == ["QRC1", "m=8", "scheme=c0 n=4"]
        assert [len(ln) for ln in lines[3:]] == [64, 64, 64, 64]
        assert text.endswith("\n")

    def test_payload_follows_index_order(self):
        c = make_layered(2)
        # indices 0..3 have sizes 0,1,1,2
        assert render_coloring(c).splitlines()[3] == "BRRB"

    @pytest.mark.parametrize("m", range(1, 9))
    def test_roundtrip_random(self, m):
        rng = random.Random(100 + m)
        for trial in range(20):
            c = random_coloring(m, rng, scheme=f"trial-{trial}")
            assert parse_coloring(render_coloring(c)) == c

    def test_save_load_byte_exact(self, tmp_path):
        c = make_c0(3)
        path = tmp_path / "c.qrc1"
        save_coloring(c, path)
        assert path.read_bytes().decode() == render_coloring(c)
        assert load_coloring(path) == c

    def test_parse_accepts_missing_final_newline(self):
        assert parse_coloring("QRC1\nm=1\nscheme=x\nBR") == parse_coloring(
            "QRC1\nm=1\nscheme=x\nBR\n"
        )


class TestQRC1Errors:
    CASES = [
        ("QRC2\nm=1\nscheme=x\nBR\n", 1, 1),  # bad magic
        ("QRC1\r\nm=1\r\nscheme=x\r\nBR\r\n", 1, 1),  # CR is not part of the format
        ("QRC1\nm=zz\nscheme=x\nBR\n", 2, 3),  # unparsable size
        ("QRC1\nm=0\nscheme=x\nBR\n", 2, 3),  # size below range
        ("QRC1\nm=33\nscheme=x\nBR\n", 2, 3),  # size above range
        ("QRC1\nschemeville\nBR\n", 2, 1),  # missing m line
        ("QRC1\nm=1\nschemeville\nBR\n", 3, 1),  # missing scheme line
        ("QRC1\nm=1\nscheme=x\nBX\n", 4, 2),  # illegal payload character
        ("QRC1\nm=1\nscheme=x\nB\n", 4, 2),  # short payload line
        ("QRC1\nm=1\nscheme=x\nBRR\n", 4, 3),  # payload overrun
        ("QRC1\nm=3\nscheme=x\nRBRB\nRBRB\n", 4, 5),  # wrapped too early
        ("QRC1\nm=1\nscheme=x\nBR\n\n", 5, 1),  # blank line after payload
        ("QRC1\nm=1\nscheme=x\nBR\nBR\n", 5, 1),  # extra payload line
        ("QRC1\nm=1\nscheme=x\n", 4, 1),  # payload missing entirely
    ]

    @pytest.mark.parametrize("text,line,column", CASES)
    def test_position_of_first_error(self, text, line, column):
        with pytest.raises(ColoringFormatError) as exc:
            parse_coloring(text)
        assert exc.value.line == line
        assert exc.value.column == column
        assert f"line {line}, column {column}:" in str(exc.value)

    def test_error_is_value_error(self):
        assert issubclass(ColoringFormatError, ValueError)


@given(st.integers(1, 6), st.data())
def test_roundtrip_property(m, data):
    bits = data.draw(st.integers(0, (1 << (1 << m)) - 1))
    red = np.array([(bits >> v) & 1 == 1 for v in range(1 << m)], dtype=bool)
    c = Coloring(CubeSpace(m), red, scheme="prop")
    assert parse_coloring(render_coloring(c)) == c
