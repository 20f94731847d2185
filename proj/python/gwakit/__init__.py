"""Groups with action, their crossed modules and 1-truncated simplicial counterparts."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
