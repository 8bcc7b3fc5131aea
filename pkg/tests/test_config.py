"""Tests for configuration module"""
import json

import pytest

from config.settings import Settings, settings
from config.sweep_config import SweepConfig
from src.subalgebras.catalog import FAMILY_IDS


class TestSettings:
    """Tests for Settings class"""

    def test_defaults_are_valid(self):
        settings.validate()
        assert settings.COMAX_BUDGET > 0
        assert settings.COMAX_THREADS >= 1

    @pytest.mark.parametrize(
        "name,value",
        [("COMAX_THREADS", 0), ("COMAX_BUDGET", -1), ("COMAX_LOG_LEVEL", "CHATTY"), ("COMAX_DEFAULT_FIELDS", " ")],
    )
    def test_validate_rejects(self, monkeypatch, name, value):
        monkeypatch.setattr(Settings, name, value)
        with pytest.raises(ValueError):
            Settings.validate()


class TestSweepConfig:
    """Tests for SweepConfig class"""

    def test_full_preset_covers_the_catalog(self):
        assert SweepConfig("full").get_families() == list(FAMILY_IDS)

    def test_quick_preset(self):
        config = SweepConfig("quick")
        assert config.get_fields() == ["2", "3"]
        assert "sl2" not in config.get_families()

    def test_repr(self):
        config = SweepConfig("sl2")
        assert config.get_families() == ["sl2", "su2"]
        assert repr(config) == "SweepConfig(preset='sl2')"

    def test_unknown_preset(self):
        with pytest.raises(ValueError):
            SweepConfig("huge")

    def test_to_json(self):
        data = json.loads(SweepConfig("sl2").to_json())
        assert data == {"preset": "sl2", "families": ["sl2", "su2"], "fields": ["3", "5"]}

    def test_lists_are_copies(self):
        config = SweepConfig("quick")
        config.get_families().append("sl2")
        assert "sl2" not in config.get_families()
