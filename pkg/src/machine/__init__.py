from src.machine.presets import new_context, preset_configs, preset_pairs
from src.machine.strip_mining import strip_mine
from src.machine.vector_context import VectorContext

__all__ = ["VectorContext", "new_context", "preset_configs", "preset_pairs", "strip_mine"]
