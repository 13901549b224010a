"""Common utilities shared by the math packages, the verifiers, and the CLI."""

__all__ = [
    "config",
]
