"""Backend selection for the numeric kernels.

numba is used when it imports cleanly and ``TMF_FORMS_DISABLE_NUMBA`` is unset
(or set to 0/false/no).  Otherwise every kernel runs its pure-numpy variant.
"""

import os

_flag = os.environ.get("TMF_FORMS_DISABLE_NUMBA", "").strip().lower()
DISABLED_BY_ENV = _flag not in ("", "0", "false", "no")

try:
    if DISABLED_BY_ENV:
        raise ImportError("disabled by TMF_FORMS_DISABLE_NUMBA")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return lambda fn: fn


def default_backend() -> str:
    return "numba" if HAVE_NUMBA else "numpy"
