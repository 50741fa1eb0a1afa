from src.utils.thread_context import map_with_context, submit_with_context

__all__ = ["map_with_context", "submit_with_context"]
