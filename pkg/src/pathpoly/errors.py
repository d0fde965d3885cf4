"""Shared exception types."""
from __future__ import annotations


class CapExceeded(RuntimeError):
    """A resource cap (path variables, qubits, root-count variables) was exceeded."""
