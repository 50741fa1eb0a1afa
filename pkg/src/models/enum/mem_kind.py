from enum import Enum


class MemKind(str, Enum):
    LOAD_UNIT     = "load_unit"
    STORE_UNIT    = "store_unit"
    LOAD_STRIDED  = "load_strided"
    STORE_STRIDED = "store_strided"

    @property
    def is_strided(self) -> bool:
        return self in (MemKind.LOAD_STRIDED, MemKind.STORE_STRIDED)
