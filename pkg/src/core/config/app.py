from pathlib import Path
from typing import Any, Final, Optional, Self

from pydantic import BaseModel, Field, ValidationError

from src.core.constants import BOOTSTRAP_MIN_BLOCKS, LOG_DIRNAME, OUTPUT_DIR
from src.core.enums import Profile
from src.core.exceptions import ConfigurationError

from .base import CONFIG_FILE, BaseConfig
from .data import DataConfig
from .objective import ObjectiveConfig
from .search import SearchConfig
from .simulation import SimulationConfig
from .statistics import StatisticsConfig

DESK_PROFILE: Final[dict[str, dict[str, Any]]] = {
    "simulation": {"steps": 500},
    "objective": {"replications": 3, "block_length": 50, "resamples": 500},
    "search": {
        "nm_iterations": 50,
        "ga_population": 30,
        "ga_generations": 20,
        "surface_points": 100,
    },
}


class AppConfig(BaseConfig, env_prefix="APP_"):
    workers: int = Field(default=1, ge=1)
    output_dir: Path = OUTPUT_DIR
    log_level: str = "INFO"
    profile: Profile = Profile.FULL

    simulation: SimulationConfig = Field(default_factory=SimulationConfig)
    objective: ObjectiveConfig = Field(default_factory=ObjectiveConfig)
    search: SearchConfig = Field(default_factory=SearchConfig)
    data: DataConfig = Field(default_factory=DataConfig)
    statistics: StatisticsConfig = Field(default_factory=StatisticsConfig)

    @property
    def log_dir(self) -> Path:
        return self.output_dir / LOG_DIRNAME

    @classmethod
    def get(cls, config_file: Optional[Path] = None, **overrides: Any) -> Self:
        if config_file is not None and not config_file.is_file():
            raise ConfigurationError(f"Config file '{config_file}' does not exist")

        token = CONFIG_FILE.set(config_file)
        try:
            config = cls(**overrides)
        except ValidationError as exception:
            raise ConfigurationError(str(exception)) from exception
        finally:
            CONFIG_FILE.reset(token)

        if config.profile == Profile.DESK:
            config = config.with_profile(DESK_PROFILE)

        return config

    def with_profile(self, preset: dict[str, dict[str, Any]]) -> Self:
        sections: dict[str, BaseModel] = {}

        for name, values in preset.items():
            section: BaseModel = getattr(self, name)
            unset = {k: v for k, v in values.items() if k not in section.model_fields_set}
            sections[name] = section.model_copy(update=unset)

        return self.model_copy(update=sections)

    def validate_bootstrap(self) -> None:
        required = BOOTSTRAP_MIN_BLOCKS * self.objective.block_length
        if self.simulation.steps < required:
            raise ConfigurationError(
                f"Bootstrap needs at least '{required}' steps for block length "
                f"'{self.objective.block_length}', got '{self.simulation.steps}'"
            )

    def snapshot(self) -> dict[str, Any]:
        return self.model_dump(mode="json")
