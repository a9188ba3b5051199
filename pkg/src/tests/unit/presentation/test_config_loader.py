"""Unit tests for the run config file reader."""

import math

import pytest

from src.presentation.cli.config_loader import (
    ConfigFileError,
    evaluate_number,
    load_config_file,
    parse_config_text,
    parse_overrides,
)
from src.tests.utils.factories import RunConfigFactory


@pytest.mark.unit
@pytest.mark.presentation
class TestParseConfigText:
    """Test cases for parse_config_text."""

    def test_reference_config(self):
        """Comments and blank lines are skipped, values stay raw strings."""
        # Arrange
        text = RunConfigFactory.create_config_text(["", "seed = 7  # fixed for the figure"])

        # Act
        values = parse_config_text(text)

        # Assert
        assert values["phi"] == "pi/5"
        assert values["n_steps"] == "4096"
        assert values["seed"] == "7"
        assert list(values)[0] == "experiment"

    def test_last_value_wins(self):
        """A repeated key keeps its last value."""
        assert parse_config_text("tau = 0.1\ntau = 0.11\n") == {"tau": "0.11"}

    def test_empty_value_is_kept(self):
        """``key =`` yields an empty string."""
        assert parse_config_text("chi =") == {"chi": ""}

    @pytest.mark.parametrize("line,message", [
        ("tau 0.1", "expected 'key = value'"),
        ("= 0.1", "expected 'key = value'"),
        ("noise-amplitude = 0.1", "invalid key"),
    ])
    def test_malformed_lines(self, line, message):
        """Malformed lines name the source and line number."""
        with pytest.raises(ConfigFileError, match=f"run.conf:2: {message}"):
            parse_config_text(f"mode = shortcut\n{line}\n", source="run.conf")


@pytest.mark.unit
@pytest.mark.presentation
class TestConfigSources:
    """Test cases for files and ``--set`` overrides."""

    def test_load_config_file(self, tmp_path):
        """A file on disk parses like its text."""
        path = tmp_path / "run.conf"
        path.write_text("gamma0 = 0.15\n", encoding="utf-8")

        assert load_config_file(path) == {"gamma0": "0.15"}

    def test_missing_file(self, tmp_path):
        """An unreadable file is a config error."""
        with pytest.raises(ConfigFileError, match="Cannot read config file"):
            load_config_file(tmp_path / "absent.conf")

    def test_overrides(self):
        """Each ``--set`` item is one line."""
        assert parse_overrides(["n_steps=512", "phi = pi/4"]) == {"n_steps": "512", "phi": "pi/4"}
        assert parse_overrides(None) == {}


@pytest.mark.unit
@pytest.mark.presentation
class TestEvaluateNumber:
    """Test cases for evaluate_number."""

    @pytest.mark.parametrize("text,expected", [
        ("0.115", 0.115),
        ("16", 16.0),
        ("pi/5", math.pi / 5),
        ("2*pi/9", 2 * math.pi / 9),
        ("-pi/4", -math.pi / 4),
        ("(pi + pi) / 8", math.pi / 4),
        ("4.3/171", 4.3 / 171),
        ("1e-3", 1e-3),
    ])
    def test_expressions(self, text, expected):
        """Decimals and arithmetic in pi evaluate to floats."""
        assert evaluate_number(text) == pytest.approx(expected, rel=1e-15)

    @pytest.mark.parametrize("text", [
        "__import__('os')",
        "pi**2",
        "e",
        "True",
        "1/0",
        "pi/",
        "'0.1'",
    ])
    def test_rejected(self, text):
        """Anything but numbers, pi and + - * / is refused."""
        with pytest.raises(ConfigFileError):
            evaluate_number(text)
