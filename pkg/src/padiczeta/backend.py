"""Select the histogram kernel at import: compiled core or pure Python.

The compiled core is an optional extension; when it is missing, or when it
declines an input (int64 headroom), the fallback runs the identical
algorithm over Python integers.
"""

from . import _core_fallback

try:
    from . import _core  # compiled extension, may be absent

    HAVE_COMPILED = True
except ImportError:
    _core = None
    HAVE_COMPILED = False


def backend_name():
    return "compiled" if HAVE_COMPILED else "fallback"


build_shift_matrices = _core_fallback.build_shift_matrices
lattice_exponents = _core_fallback.lattice_exponents


def collect_histogram(p, n, mats, coeffs, depth, force_fallback=False):
    """Dispatch to the compiled kernel, falling back on overflow refusal."""
    if HAVE_COMPILED and not force_fallback:
        try:
            return _core.collect_histogram(p, n, mats, coeffs, depth)
        except OverflowError:
            pass
    return _core_fallback.collect_histogram(p, n, mats, coeffs, depth)
