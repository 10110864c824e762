"""Backend selection for the scalar special-function hot paths.

Prefers the compiled extension (gapspec._core) and falls back to the
pure-Python implementation (gapspec._specfun_py) when the extension is not
built.  The GAPSPEC_BACKEND environment variable forces a choice:

    GAPSPEC_BACKEND=compiled   require the extension (ImportError if absent)
    GAPSPEC_BACKEND=python     force the pure-Python implementation

Both backends implement the same algorithms with identical branch seams, so
results agree to the last bit up to compiler-level reassociation.
"""

import os

_choice = os.environ.get("GAPSPEC_BACKEND", "").strip().lower()

if _choice not in ("", "compiled", "python"):
    raise ImportError(
        f"GAPSPEC_BACKEND must be 'compiled' or 'python', got {_choice!r}"
    )

if _choice == "python":
    from . import _specfun_py as _impl

    BACKEND = "python"
elif _choice == "compiled":
    from . import _core as _impl  # type: ignore[attr-defined]

    BACKEND = "compiled"
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _specfun_py as _impl

        BACKEND = "python"

airy_ai = _impl.airy_ai
airy_ai_prime = _impl.airy_ai_prime
bessel_j = _impl.bessel_j
bessel_j_prime = _impl.bessel_j_prime
bessel_j_pair = _impl.bessel_j_pair
log_gamma_real = _impl.log_gamma_real


def backend_name():
    """Name of the active scalar backend: 'compiled' or 'python'."""
    return BACKEND
