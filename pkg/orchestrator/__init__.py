"""Command-line entry point (``python -m orchestrator.cli``)."""
