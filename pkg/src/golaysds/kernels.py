"""Backend selection for the hot kernels.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
numpy fallback in ``_pykernels`` is used. ``set_backend`` switches at run
time (tests and the benchmark use it to compare the two).
"""

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    _BACKENDS["cython"] = _ckernels

_active = _BACKENDS.get("cython", _pykernels)


def available_backends():
    return sorted(_BACKENDS)


def get_backend():
    return "cython" if _active is _ckernels and _ckernels is not None else "python"


def set_backend(name):
    global _active
    try:
        _active = _BACKENDS[name]
    except KeyError:
        raise ValueError(f"backend {name!r} not available; have {available_backends()}") from None


def paf(a):
    return _active.paf(a)


def difference_counts(elements, v):
    return _active.difference_counts(elements, v)


def scan_window(re, im, sizes, base_re, base_im, start, target, count, bound, feasible):
    return _active.scan_window(re, im, sizes, base_re, base_im, start, target, count,
                               bound, feasible)
