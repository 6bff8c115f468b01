"""
Settings models and loader.

This module defines the configuration schema for reports, sweeps and
logging, and loads it from JSON files in the config directory.
"""

import json
import logging
from enum import Enum
from pathlib import Path
from typing import Dict, List, Optional

from pydantic import BaseModel, Field, field_validator

from .registry import parse_model_spec
from .root_system import Family

logger = logging.getLogger(__name__)


class OutputFormat(str, Enum):
    """Report output format."""
    TEXT = "text"
    JSON = "json"


class ReportSettings(BaseModel):
    """How reports are computed and rendered."""
    default_format: OutputFormat = Field(default=OutputFormat.TEXT)
    parallel: bool = Field(default=False, description="Compute per-alpha reports on a thread pool")
    max_workers: int = Field(default=4, ge=1, le=32)
    progress: bool = Field(default=True, description="Show progress bars on long runs")


class SweepSettings(BaseModel):
    """Scope of the exhaustive property sweep."""
    max_rank: int = Field(default=4, ge=1, le=8)
    families: List[Family] = Field(default_factory=lambda: list(Family))
    include_exceptional: bool = Field(default=True)

    @field_validator('families')
    @classmethod
    def validate_families(cls, v: List[Family]) -> List[Family]:
        if not v:
            raise ValueError("Sweep needs at least one family")
        return sorted(set(v), key=lambda f: f.value)

    @property
    def selected_families(self) -> List[Family]:
        if self.include_exceptional:
            return self.families
        return [f for f in self.families if f in (Family.A, Family.B, Family.C, Family.D)]


class LoggingSettings(BaseModel):
    level: str = Field(default="WARNING")

    @field_validator('level')
    @classmethod
    def validate_level(cls, v: str) -> str:
        level = v.upper()
        if level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"Unknown log level: {v}")
        return level


class Settings(BaseModel):
    """All settings, as stored in config/settings.json."""
    report: ReportSettings = Field(default_factory=ReportSettings)
    sweep: SweepSettings = Field(default_factory=SweepSettings)
    logging: LoggingSettings = Field(default_factory=LoggingSettings)
    presets: Dict[str, str] = Field(default_factory=dict, description="Short names for model specs")

    @field_validator('presets')
    @classmethod
    def validate_presets(cls, v: Dict[str, str]) -> Dict[str, str]:
        for name, spec in v.items():
            parse_model_spec(spec)
        return v

    def expand_preset(self, text: str) -> str:
        """Replace a preset name with its model spec; other text passes through."""
        return self.presets.get(text.strip(), text)


class ConfigManager:
    """
    Loads settings from a config directory.

    settings.json provides the base settings; any other *.json file is read
    as a preset map {name: model spec} and merged into `presets`.
    """

    SETTINGS_FILE = "settings.json"

    def __init__(self, config_dir: Optional[str] = None):
        """
        Initialize config manager.

        Args:
            config_dir: Directory containing config files. Defaults to 'config/'
        """
        if config_dir is None:
            config_dir = Path(__file__).parent.parent.parent / "config"
        self.config_dir = Path(config_dir)
        self._settings: Optional[Settings] = None

    def load_all(self) -> Settings:
        """Load settings, falling back to defaults."""
        if not self.config_dir.exists():
            logger.warning(f"Config directory not found: {self.config_dir}")
            self._settings = Settings()
            return self._settings

        settings_file = self.config_dir / self.SETTINGS_FILE
        if settings_file.exists():
            with open(settings_file, 'r') as f:
                settings = Settings(**json.load(f))
        else:
            logger.warning(f"No {self.SETTINGS_FILE} in {self.config_dir}, using defaults")
            settings = Settings()

        presets = dict(settings.presets)
        for json_file in sorted(self.config_dir.glob("*.json")):
            if json_file.name == self.SETTINGS_FILE:
                continue
            presets.update(self._load_presets(json_file))
        self._settings = settings.model_copy(update={"presets": presets})
        logger.info(f"Loaded settings from {self.config_dir} ({len(presets)} presets)")
        return self._settings

    def _load_presets(self, filepath: Path) -> Dict[str, str]:
        """Load one preset file; malformed files are skipped with an error."""
        try:
            with open(filepath, 'r') as f:
                data = json.load(f)
            presets = data.get('presets', data)
            for spec in presets.values():
                parse_model_spec(spec)
            logger.debug(f"Loaded {len(presets)} presets from {filepath.name}")
            return dict(presets)
        except (OSError, ValueError, AttributeError) as e:
            logger.error(f"Error loading {filepath}: {e}")
            return {}

    @property
    def settings(self) -> Settings:
        if self._settings is None:
            self.load_all()
        return self._settings

    def save_settings(self, settings: Settings, filepath: Optional[Path] = None) -> Path:
        """
        Save settings to file.

        Args:
            settings: Settings to save
            filepath: Optional specific path, defaults to config_dir/settings.json

        Returns:
            Path to saved file
        """
        if filepath is None:
            filepath = self.config_dir / self.SETTINGS_FILE

        self.config_dir.mkdir(parents=True, exist_ok=True)

        with open(filepath, 'w') as f:
            json.dump(settings.model_dump(mode='json'), f, indent=2)

        return filepath


# Global config manager instance
_config_manager: Optional[ConfigManager] = None


def get_config_manager(config_dir: Optional[str] = None) -> ConfigManager:
    """Get global config manager instance; a new config_dir replaces it."""
    global _config_manager
    if _config_manager is None or config_dir is not None:
        _config_manager = ConfigManager(config_dir)
    return _config_manager


def get_settings() -> Settings:
    """Settings of the global config manager."""
    return get_config_manager().settings
