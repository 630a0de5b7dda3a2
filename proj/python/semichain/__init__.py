from ._semichain import *  # noqa: F401,F403
from ._semichain import __doc__  # noqa: F401
