from pathlib import Path
from typing import Final

from pydantic_settings import BaseSettings, SettingsConfigDict

# +--- constant config ---+#
UNICOV_ROOT: Final[Path] = Path(__file__).resolve().parent.parent
SRC_ROOT: Final[Path] = UNICOV_ROOT.parent
PROJECT_ROOT: Final[Path] = SRC_ROOT.parent


class Settings(BaseSettings):
    PROJECT_NAME: str = "unicov"
    TOOL_VERSION: str = "0.1.0"
    LOG_LEVEL: str = "WARNING"

    # +--- groups ---+#
    GROUP_ORDER_CAP: int = 2**20

    # +--- set operations ---+#
    PROFILE_CAP: int = 2**16
    ENUMERATION_CAP: int = 10**6
    PROFILE_BATCH_CELLS: int = 2**24

    # +--- solver ---+#
    NODE_BUDGET: int = 10**8
    EXACT_ORDER_CAP: int = 4096
    PACKING_ORDER_CAP: int = 4096
    ORACLE_WORK_CAP: int = 2 * 10**5
    FLOAT_TOLERANCE: float = 1e-9

    # +--- constructions ---+#
    UNIVERSAL_SUMSET_C: float = 1 / 8
    UNIVERSAL_SUMSET_C_STAR: float = 1 / 16
    UNIVERSAL_SUMSET_C_Q: float = 1 / 512
    CONSTRUCTION_RETRIES: int = 25
    Q_RETRIES: int = 50
    DIRECT_CERTIFY_CAP: int = 1024

    # +--- verify ---+#
    CHECK_NODE_BUDGET: int = 2 * 10**6
    TABLE_NODE_BUDGET: int = 2 * 10**5
    TABLE_PRIME_CAP: int = 101

    model_config = SettingsConfigDict(
        env_prefix="UNICOV_",
        env_file=PROJECT_ROOT / ".env",
        env_ignore_empty=True,
        extra="ignore",
    )


settings = Settings()
