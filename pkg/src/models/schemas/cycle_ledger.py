from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field


class CycleLedger(BaseModel):
    model_config = ConfigDict(frozen=True)

    total_cycles: int = Field(default=0, ge=0)
    vector_instructions: int = Field(default=0, ge=0)
    scalar_instructions: int = Field(default=0, ge=0)
    vector_element_ops: int = Field(default=0, ge=0)

    def since(self, earlier: CycleLedger) -> CycleLedger:
        """Counters accrued between `earlier` and this snapshot."""
        return CycleLedger(
            total_cycles=self.total_cycles - earlier.total_cycles,
            vector_instructions=self.vector_instructions - earlier.vector_instructions,
            scalar_instructions=self.scalar_instructions - earlier.scalar_instructions,
            vector_element_ops=self.vector_element_ops - earlier.vector_element_ops,
        )

    def __str__(self) -> str:
        return (
            f"cycles={self.total_cycles} vinstr={self.vector_instructions} "
            f"sinstr={self.scalar_instructions} elems={self.vector_element_ops}"
        )

    def __add__(self, other: CycleLedger) -> CycleLedger:
        return CycleLedger(
            total_cycles=self.total_cycles + other.total_cycles,
            vector_instructions=self.vector_instructions + other.vector_instructions,
            scalar_instructions=self.scalar_instructions + other.scalar_instructions,
            vector_element_ops=self.vector_element_ops + other.vector_element_ops,
        )
