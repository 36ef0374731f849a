from pydantic import BaseModel, ConfigDict, Field, field_validator

from .validation import validate_environment, validate_log_level


class BaseConfig(BaseModel):
    """Settings shared by every genus-core consumer."""

    model_config = ConfigDict(
        validate_assignment=True,
        extra="forbid"
    )

    service_name: str = Field(
        default="genus-bounds",
        description="Name reported in log lines"
    )

    service_version: str = Field(
        default="0.1.0",
        description="Version of the calculator"
    )

    environment: str = Field(
        default="development",
        description="Environment (development, test, production)"
    )

    log_level: str = Field(
        default="INFO",
        description="Logging level"
    )

    @field_validator("log_level")
    @classmethod
    def _check_log_level(cls, value: str) -> str:
        if not validate_log_level(value):
            raise ValueError(f"invalid log level: {value}")
        return value.upper()

    @field_validator("environment")
    @classmethod
    def _check_environment(cls, value: str) -> str:
        if not validate_environment(value):
            raise ValueError(f"invalid environment: {value}")
        return value.lower()
