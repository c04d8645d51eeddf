"""Tree reconstruction from vertex-deleted cards."""

from .core import Forest, Tree
from .kernels import BACKEND

__all__ = ["BACKEND", "Forest", "Tree"]
__version__ = "0.1.0"
