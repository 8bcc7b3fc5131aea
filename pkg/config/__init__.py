"""Configuration module"""

from .settings import Settings, settings
from .sweep_config import SweepConfig, sweep_config

__all__ = ["Settings", "SweepConfig", "settings", "sweep_config"]
