import os
import yaml  # type:ignore
from pathlib import Path
from typing import Literal, Optional, Union
from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator

polytope_config_path: Path = Path(__file__).parent.parent / ".env"

ENV_PREFIX = "A4_POLYTOPES_"

OutputFormat = Literal["json", "off", "obj"]


class PolytopeConfig(BaseModel):
    digits: int = Field(default=12, ge=1, le=50)
    exact: bool = False
    output_format: OutputFormat = "json"
    log_level: str = "WARNING"
    log_file: Optional[str] = None

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        level = value.upper()
        if level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"unknown log level {value!r}")
        return level

    @classmethod
    def from_env(cls) -> "PolytopeConfig":
        values: dict[str, object] = {}
        digits = os.getenv(f"{ENV_PREFIX}DIGITS")
        exact = os.getenv(f"{ENV_PREFIX}EXACT")
        output_format = os.getenv(f"{ENV_PREFIX}FORMAT")
        log_level = os.getenv(f"{ENV_PREFIX}LOG_LEVEL")
        log_file = os.getenv(f"{ENV_PREFIX}LOG_FILE")
        if digits is not None:
            values["digits"] = digits
        if exact is not None:
            values["exact"] = exact.strip().lower() in ("1", "true", "yes", "on")
        if output_format is not None:
            values["output_format"] = output_format
        if log_level is not None:
            values["log_level"] = log_level
        if log_file:
            values["log_file"] = log_file
        return cls(**values)

    @classmethod
    def from_env_file(cls, path: Union[str, Path] = polytope_config_path) -> "PolytopeConfig":
        path = Path(path)
        if not path.exists():
            raise FileNotFoundError(
                f"Polytope env file {path} does not exist")
        load_dotenv(path)
        return cls.from_env()

    @classmethod
    def from_config(cls, path: Union[str, Path]) -> "PolytopeConfig":
        path = Path(path)
        if not path.exists():
            raise FileNotFoundError(
                f"Polytope config file {path} does not exist")
        with open(path) as file:
            config = yaml.safe_load(file) or {}
        return cls(**config)
