"""Named sweep presets: which families over which fields"""
import json
from typing import Literal

PresetName = Literal["quick", "full", "sl2"]


class SweepConfig:
    """Configuration for `comax sweep` based on a named preset"""

    # Define family/field lists for each preset
    PRESETS = {
        "quick": {
            "families": ["dim1", "abelian2", "nonabelian2", "abelian3", "heisenberg3", "solvable2B"],
            "fields": ["2", "3"],
        },
        "full": {
            "families": [
                "dim1",
                "abelian2",
                "nonabelian2",
                "abelian3",
                "heisenberg3",
                "solvable2B",
                "case3_irreducible",
                "case3_two_eigen",
                "case3_jordan",
                "case3_scalar",
                "sl2",
                "su2",
                "diam3_example",
            ],
            "fields": ["2", "3", "5"],
        },
        "sl2": {
            "families": ["sl2", "su2"],
            "fields": ["3", "5"],
        },
    }

    def __init__(self, preset: PresetName = "full"):
        """Initialize sweep configuration

        Args:
            preset: One of the names in ``PRESETS``
        """
        if preset not in self.PRESETS:
            raise ValueError(f"unknown preset {preset!r}; choose from {sorted(self.PRESETS)}")
        self.preset = preset
        self._config = self.PRESETS[preset]

    def get_families(self) -> list[str]:
        return list(self._config["families"])

    def get_fields(self) -> list[str]:
        return list(self._config["fields"])

    def to_json(self) -> str:
        """Export configuration as JSON for debugging

        Returns:
            JSON string representation of current config
        """
        config_dict = {
            "preset": self.preset,
            "families": self._config["families"],
            "fields": self._config["fields"],
        }
        return json.dumps(config_dict, indent=2)

    def __repr__(self) -> str:
        return f"SweepConfig(preset='{self.preset}')"


# Create global config instance
sweep_config = SweepConfig(preset="full")
