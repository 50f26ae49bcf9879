"""Backend selection for the polynomial term kernels.

The compiled extension ``birvol.exact._kernels`` is used when it was built;
otherwise, or when the environment variable ``BIRVOL_PURE_PYTHON`` is set to
a non-empty value other than ``0``, the pure-Python module is used.  The
choice is made once, at import.
"""

from __future__ import annotations

import os

if os.environ.get("BIRVOL_PURE_PYTHON", "") not in ("", "0"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND: str = _impl.BACKEND

clean = _impl.clean
mul_terms = _impl.mul_terms
add_terms = _impl.add_terms
scale_terms = _impl.scale_terms
shift_terms = _impl.shift_terms
deriv_terms = _impl.deriv_terms
eval_terms = _impl.eval_terms
divide_exact = _impl.divide_exact
