"""
Utility helpers for BetaNAG.
"""

from .files import (
    ARTIFACT_KINDS,
    atomic_write,
    format_file_size,
    get_directory_size,
    list_artifacts,
)

__all__ = [
    "ARTIFACT_KINDS",
    "atomic_write",
    "format_file_size",
    "get_directory_size",
    "list_artifacts",
]
