"""Distance labellings of Cayley graphs of finite semigroups.

Thin package wrapper around the compiled extension module. Everything public
lives in the extension; this module just re-exports it.
"""

from ._caylabel import *  # noqa: F401,F403
from ._caylabel import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
__doc__ = _core_doc or __doc__
