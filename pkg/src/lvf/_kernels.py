"""Kernel backend selection.

Imports the compiled kernels when they were built, otherwise the pure
twin.  ``LVF_PURE=1`` in the environment forces the pure backend (the
benchmark and the test suite use this to compare the two).
"""

import os

if os.environ.get("LVF_PURE"):
    from lvf import _kernels_py as _impl
else:
    try:
        from lvf import _kernels_c as _impl  # type: ignore[attr-defined]
    except ImportError:
        from lvf import _kernels_py as _impl

BACKEND = _impl.__name__.rsplit("_", 1)[-1]  # "c" or "py"

pp_add = _impl.pp_add
pp_scale = _impl.pp_scale
pp_mul = _impl.pp_mul
pmono_mul = _impl.pmono_mul
ep_add = _impl.ep_add
ep_scale = _impl.ep_scale
ep_mul = _impl.ep_mul
ep_diff = _impl.ep_diff
rref = _impl.rref
