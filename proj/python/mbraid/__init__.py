"""Braid-group representations built from Majorana operators."""

from ._mbraid import *  # noqa: F401,F403
from ._mbraid import __version__, DimensionError, DomainError  # noqa: F401
