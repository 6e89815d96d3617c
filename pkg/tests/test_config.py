"""Tests for run configuration parsing and validation."""

import pytest

from arcscatter.cli.config import (
    Command,
    ConfigError,
    RunConfig,
    SpectrumTarget,
    build_config,
    load_config_file,
    parse_line,
    parse_overrides,
)
from arcscatter.models import ArcFamily, BoundaryCondition, Formulation


class TestParseLine:
    """Tests for key=value lines."""

    def test_key_value(self):
        """Test whitespace is stripped."""
        assert parse_line("  arc.family = flat ") == ("arc.family", "flat")

    @pytest.mark.parametrize("line", ["", "   ", "# comment", "  # indented comment"])
    def test_skipped(self, line):
        """Test blank lines and comments."""
        assert parse_line(line) is None

    def test_value_may_contain_equals(self):
        """Test only the first '=' splits."""
        assert parse_line("out_dir=a=b") == ("out_dir", "a=b")

    def test_missing_equals(self):
        """Test a line without '=' is rejected."""
        with pytest.raises(ConfigError):
            parse_line("k 5")

    def test_missing_key(self):
        """Test an empty key is rejected."""
        with pytest.raises(ConfigError):
            parse_line("=5")


class TestConfigFile:
    """Tests for config files."""

    def test_load(self, tmp_path):
        """Test a file with comments and blank lines."""
        path = tmp_path / "run.cfg"
        path.write_text("# solve a flat arc\narc.family = flat\n\nk = 2.5\nN=32\n", encoding="utf-8")
        assert load_config_file(path) == {"arc.family": "flat", "k": "2.5", "N": "32"}

    def test_line_number_reported(self, tmp_path):
        """Test malformed lines name their position."""
        path = tmp_path / "bad.cfg"
        path.write_text("k = 1\nnot a pair\n", encoding="utf-8")
        with pytest.raises(ConfigError, match=":2:"):
            load_config_file(path)

    def test_missing_file(self, tmp_path):
        """Test an unreadable file."""
        with pytest.raises(ConfigError):
            load_config_file(tmp_path / "missing.cfg")


class TestBuildConfig:
    """Tests for merging and validation."""

    def test_defaults(self):
        """Test the defaults of a bare run."""
        config = build_config(Command.SOLVE)
        assert config.arc_family == ArcFamily.PERTURBED
        assert config.k == 5.0
        assert config.size == 64
        assert config.bc == BoundaryCondition.DIRICHLET
        assert config.formulation == Formulation.SECOND_KIND_NS
        assert config.solver == "gmres"
        assert config.max_iter is None

    def test_dotted_aliases(self):
        """Test dotted file keys map onto fields."""
        config = build_config(
            "solve",
            {"arc.family": "circular", "arc.param1": "1.5", "arc.param2": "2", "incident.angle": "0.3"},
        )
        assert config.arc_family == ArcFamily.CIRCULAR
        assert config.arc_param1 == 1.5
        assert config.arc_param2 == 2.0
        assert config.incident_angle == 0.3

    def test_overrides_win(self):
        """Test command-line overrides replace file values."""
        config = build_config("solve", {"k": "1", "N": "16"}, {"k": "7"})
        assert config.k == 7.0
        assert config.size == 16

    def test_field_names_accepted(self):
        """Test underscored names work alongside aliases."""
        assert build_config("solve", {"size": "24"}).size == 24

    def test_k_values(self):
        """Test comma-separated wavenumbers."""
        config = build_config("sweep", {"k_values": "1, 2.5,4"})
        assert config.k_values == [1.0, 2.5, 4.0]
        assert config.wavenumbers == [1.0, 2.5, 4.0]
        assert build_config("sweep", {"k": "3"}).wavenumbers == [3.0]

    def test_none_strings(self):
        """Test 'none' clears optional values."""
        assert build_config("solve", {"max_iter": "none"}).max_iter is None

    def test_spectrum_target(self):
        """Test operator names."""
        assert build_config("spectrum", {"operator": "J0tau"}).operator == SpectrumTarget.J0_TAU

    @pytest.mark.parametrize(
        "values, key",
        [
            ({"N": "4"}, "N"),
            ({"N": "5000"}, "N"),
            ({"tol": "0.5"}, "tol"),
            ({"tol": "1e-15"}, "tol"),
            ({"k": "-1"}, "k"),
            ({"k_values": "1,-2"}, "k_values"),
            ({"bc": "robin"}, "bc"),
            ({"solver": "qr"}, "solver"),
            ({"max_iter": "0"}, "max_iter"),
            ({"bogus": "1"}, "bogus"),
            ({"bc": "neumann", "formulation": "s"}, "formulation"),
            ({"formulation": "n"}, "formulation"),
        ],
    )
    def test_invalid_key_named(self, values, key):
        """Test validation errors name the offending key."""
        with pytest.raises(ConfigError) as excinfo:
            build_config("solve", values)
        assert excinfo.value.key == key
        assert key in str(excinfo.value)

    @pytest.mark.parametrize(
        "bc, formulation",
        [("dirichlet", "s"), ("neumann", "n"), ("dirichlet", "ns"), ("neumann", "ns")],
    )
    def test_formulation_matches_bc(self, bc, formulation):
        """Test first-kind formulations pair with their own boundary condition."""
        config = build_config("solve", {"bc": bc, "formulation": formulation})
        assert config.formulation == Formulation(formulation)

    def test_adaptive_size(self):
        """Test the wavelength-following resolution switch."""
        assert build_config("sweep").adaptive_size is False
        assert build_config("sweep", {"adaptive_size": "true"}).adaptive_size is True

    def test_frozen(self):
        """Test the validated configuration is immutable."""
        config = build_config("solve")
        with pytest.raises(ValueError):
            config.k = 1.0

    def test_parse_overrides(self):
        """Test repeated KEY=VALUE options."""
        assert parse_overrides(("k=2", "N=16")) == {"k": "2", "N": "16"}
        with pytest.raises(ConfigError):
            parse_overrides(("",))

    def test_model_dump_uses_aliases(self):
        """Test round-tripping through the alias spelling."""
        config = RunConfig(**{"arc.family": "flat", "N": 16})
        dumped = config.model_dump(by_alias=True)
        assert dumped["arc.family"] == ArcFamily.FLAT
        assert dumped["N"] == 16
