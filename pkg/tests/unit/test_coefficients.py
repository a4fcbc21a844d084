"""Unit tests for coefficient files and random series generation."""

import os
import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(
    0, os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "..", "src")
)

from chebball.cli import (
    format_coefficients,
    gen_random,
    parse_coefficients,
    parse_float_literal,
    read_coefficients,
)
from chebball.errors import CoefficientParseError
from chebball.evaluate import series_of
from chebball.types import Error, Ok


class TestParseCoefficients:
    """Tests for parse_coefficients."""

    def test_decimal_lines(self) -> None:
        assert parse_coefficients(["1\n", "-2.5\n", "3e-3\n"]).coeffs == (1.0, -2.5, 0.003)

    def test_hex_lines(self) -> None:
        assert parse_coefficients(["0x1.8p+1", "-0x1p-2"]).coeffs == (3.0, -0.25)

    def test_skips_comments_and_blanks(self) -> None:
        lines = ["# degree 1\n", "\n", "  1.0  \n", "   \n", "# tail\n", "2.0\n"]
        assert parse_coefficients(lines).coeffs == (1.0, 2.0)

    def test_bad_literal_names_the_line(self) -> None:
        with pytest.raises(CoefficientParseError) as info:
            parse_coefficients(["1.0", "# note", "one"], source="f.txt")
        assert info.value.line == 3
        assert info.value.text == "one"
        assert info.value.exit_code == 2
        assert "f.txt:3" in str(info.value)

    @pytest.mark.parametrize("text", ["abc", "face", "beef", "1p3"])
    def test_bare_hex_digits_are_not_literals(self, text: str) -> None:
        with pytest.raises(CoefficientParseError) as info:
            parse_coefficients([text])
        assert info.value.line == 1
        assert info.value.text == text

    @pytest.mark.parametrize(
        ("text", "value"), [("0x1p-1", 0.5), ("-0X1.8p1", -3.0), ("+0xap0", 10.0), (" 0x0p0 ", 0.0)]
    )
    def test_prefixed_hex(self, text: str, value: float) -> None:
        assert parse_float_literal(text) == value

    @pytest.mark.parametrize("text", ["inf", "-inf", "nan"])
    def test_rejects_non_finite(self, text: str) -> None:
        with pytest.raises(CoefficientParseError):
            parse_coefficients(["1.0", text])

    def test_empty_input(self) -> None:
        with pytest.raises(CoefficientParseError) as info:
            parse_coefficients(["# only a comment\n"])
        assert info.value.line == 2

    def test_hex_formatting_is_bit_exact(self) -> None:
        p = series_of(0.1, -1.0 / 3.0, 2.0**-1000, 1e300)
        text = format_coefficients(p)
        assert text.startswith("# degree 3\n")
        assert parse_coefficients(text.splitlines()) == p

    def test_decimal_formatting(self) -> None:
        text = format_coefficients(series_of(0.1, 2.0), hex_literals=False)
        assert text == "# degree 1\n0.1\n2.0\n"


class TestReadCoefficients:
    """Tests for read_coefficients on files."""

    def test_reads_file(self, tmp_path: Path) -> None:
        path = tmp_path / "p.txt"
        path.write_text("1\n1\n1\n", encoding="utf-8")
        assert read_coefficients(str(path)) == Ok(series_of(1.0, 1.0, 1.0))

    def test_parse_error_is_error(self, tmp_path: Path) -> None:
        path = tmp_path / "bad.txt"
        path.write_text("1\nx\n", encoding="utf-8")
        result = read_coefficients(str(path))
        assert isinstance(result, Error)
        assert result.error.line == 2
        assert result.error.source == str(path)

    def test_missing_file_raises(self, tmp_path: Path) -> None:
        with pytest.raises(OSError):
            read_coefficients(str(tmp_path / "absent.txt"))


class TestGenRandom:
    """Tests for seeded random series."""

    def test_length(self) -> None:
        assert len(gen_random(10, 0).coeffs) == 11

    def test_deterministic(self) -> None:
        assert gen_random(50, 7) == gen_random(50, 7)

    def test_seed_changes_series(self) -> None:
        assert gen_random(50, 7) != gen_random(50, 8)

    def test_standard_normal_statistics(self) -> None:
        coeffs = np.array(gen_random(10_000, 3).coeffs)
        assert abs(float(coeffs.mean())) < 0.05
        assert abs(float(coeffs.std()) - 1.0) < 0.05

    def test_rejects_degree_zero(self) -> None:
        with pytest.raises(ValueError):
            gen_random(0, 1)
