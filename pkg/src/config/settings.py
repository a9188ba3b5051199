"""Process-level settings.

Settings shape how a run executes (logging, worker count, default output
root); nothing here changes a number written to a result file.
"""

from pydantic import Field
from pydantic_settings import BaseSettings


class ExecutionSettings(BaseSettings):
    """Worker pool and output location defaults."""

    max_jobs: int = Field(default=8, ge=1, alias="STIRAP_MAX_JOBS")
    output_root: str = Field(default="results", alias="STIRAP_OUTPUT_ROOT")

    class Config:
        env_file = ".env"
        extra = "ignore"


class Settings(BaseSettings):
    """Application settings."""

    environment: str = Field(default="development", alias="ENVIRONMENT")
    debug: bool = Field(default=False, alias="DEBUG")
    log_level: str = Field(default="INFO", alias="LOG_LEVEL")

    execution: ExecutionSettings = Field(default_factory=ExecutionSettings)

    @property
    def effective_log_level(self) -> str:
        """``DEBUG`` when the debug flag is set, otherwise ``log_level``."""
        return "DEBUG" if self.debug else self.log_level

    class Config:
        env_file = ".env"
        env_nested_delimiter = "__"
        extra = "ignore"
