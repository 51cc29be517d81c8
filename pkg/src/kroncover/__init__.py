"""Normal coverings of finite groups, verified exhaustively at desk scale."""

from .group import CapExceeded, Epimorphism, NotNormalError, NotSubgroupError, PermGroup

__all__ = [
    "CapExceeded",
    "Epimorphism",
    "NotNormalError",
    "NotSubgroupError",
    "PermGroup",
]

__version__ = "0.1.0"
