from ._core import *  # noqa: F401,F403
from ._core import DomainError, ResourceError  # noqa: F401
