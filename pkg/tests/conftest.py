from . import ctx, ctx_fast, isolated_env, settings  # noqa: F401

__all__ = ["ctx", "ctx_fast", "isolated_env", "settings"]
