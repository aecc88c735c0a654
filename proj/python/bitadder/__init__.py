"""Circuit generators for weighted bit addition."""

from ._bitadder import *  # noqa: F401,F403
from ._bitadder import __doc__  # noqa: F401
