"""
Configuration management for the formsym solvers.
"""

import json
import os
from logging import getLogger
from typing import Any, Dict, List, Optional, Tuple

from src.core.groebner import GroebnerLimits
from src.utils.constants import (CONFIG_ENV_VAR, CONFIG_FILE, DEFAULT_BINARY_PROBES,
                                 DEFAULT_LOG_LEVEL, DEFAULT_MAX_BASIS_SIZE,
                                 DEFAULT_MAX_DEGREE, DEFAULT_MAX_PAIRS,
                                 DEFAULT_PRECISION_BITS, DEFAULT_STABLE_PROBE_COUNT,
                                 DEFAULT_TERNARY_PROBES, LOGGER_NAME,
                                 MIN_PRECISION_BITS)

logger = getLogger(LOGGER_NAME + ".config")


def default_config_path() -> str:
    return os.environ.get(CONFIG_ENV_VAR, CONFIG_FILE)


class SolverConfig:
    """Solver configuration management class"""

    def __init__(self, config_file: Optional[str] = None) -> None:
        """Initialize configuration manager.

        Args:
            config_file: Path to configuration file, by default from the
                FORMSYM_CONFIG environment variable
        """
        self.config_file = config_file or default_config_path()
        self.default_settings = {
            "precision_bits": DEFAULT_PRECISION_BITS,
            "max_basis_size": DEFAULT_MAX_BASIS_SIZE,
            "max_degree": DEFAULT_MAX_DEGREE,
            "max_pairs": DEFAULT_MAX_PAIRS,
            "ternary_probes": [list(p) for p in DEFAULT_TERNARY_PROBES],
            "binary_probes": list(DEFAULT_BINARY_PROBES),
            "stable_probe_count": DEFAULT_STABLE_PROBE_COUNT,
            "log_level": DEFAULT_LOG_LEVEL,
        }
        self.settings = self.load_settings()

    def load_settings(self) -> Dict[str, Any]:
        """Load settings from config file.

        Returns:
            Dictionary containing solver settings with defaults merged
        """
        try:
            if os.path.exists(self.config_file):
                with open(self.config_file, 'r', encoding='utf-8') as f:
                    settings = json.load(f)
                    # Merge default settings to ensure all necessary keys exist
                    merged_settings = self.default_settings.copy()
                    merged_settings.update(settings)
                    return self._clamped(merged_settings)
            else:
                return self.default_settings.copy()
        except (OSError, ValueError) as exc:
            logger.warning("ignoring unreadable settings file %s: %s", self.config_file, exc)
            return self.default_settings.copy()

    @staticmethod
    def _clamped(settings: Dict[str, Any]) -> Dict[str, Any]:
        if int(settings["precision_bits"]) < MIN_PRECISION_BITS:
            logger.info("precision_bits raised to %d", MIN_PRECISION_BITS)
            settings["precision_bits"] = MIN_PRECISION_BITS
        return settings

    def save_settings(self) -> None:
        """Save settings to config file."""
        try:
            with open(self.config_file, 'w', encoding='utf-8') as f:
                json.dump(self.settings, f, indent=2, ensure_ascii=False)
        except OSError as exc:
            logger.warning("could not save settings to %s: %s", self.config_file, exc)

    def get(self, key: str, default: Any = None) -> Any:
        """Get setting value.

        Args:
            key: Setting key
            default: Default value if key doesn't exist

        Returns:
            Setting value or default
        """
        return self.settings.get(key, default)

    def set(self, key: str, value: Any) -> None:
        """Set value and save to file.

        Args:
            key: Setting key
            value: Setting value
        """
        self.settings[key] = value
        self._clamped(self.settings)
        self.save_settings()

    def update_multiple(self, updates: Dict[str, Any]) -> None:
        """Batch update settings.

        Args:
            updates: Dictionary of settings to update
        """
        self.settings.update(updates)
        self._clamped(self.settings)
        self.save_settings()

    def reset_to_defaults(self) -> None:
        """Reset all settings to default values."""
        self.settings = self.default_settings.copy()
        self.save_settings()

    def override(self, **values: Any) -> None:
        """Per-invocation overrides; None values are ignored and nothing is saved."""
        self.settings.update({k: v for k, v in values.items() if v is not None})
        self._clamped(self.settings)

    # Derived records

    def limits(self) -> GroebnerLimits:
        return GroebnerLimits(max_basis_size=int(self.get("max_basis_size")),
                              max_degree=int(self.get("max_degree")),
                              max_pairs=int(self.get("max_pairs")))

    @property
    def precision_bits(self) -> int:
        return int(self.get("precision_bits"))

    def ternary_probes(self) -> List[Tuple[int, ...]]:
        return [tuple(p) for p in self.get("ternary_probes")]

    def binary_probes(self) -> List[str]:
        return [str(p) for p in self.get("binary_probes")]
