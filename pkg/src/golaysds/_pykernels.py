"""Pure-Python/numpy kernels; reference fallback for ``_ckernels``.

Both backends expose the same three functions with identical results:

``paf(a)``
    periodic autocorrelation of an int8 +-1 array, int64 result.
``difference_counts(elements, v)``
    ``out[c]`` = number of ordered pairs (a, b) of ``elements`` with
    a - b = c (mod v); ``out[0]`` is ``len(elements)``.
``scan_window(...)``
    walk a run of consecutive orbit combinations in lexicographic order and
    keep those whose power spectrum stays under the bound.
"""

import numpy as np


def paf(a):
    a = np.asarray(a, dtype=np.int64)
    v = a.size
    out = np.empty(v, dtype=np.int64)
    for s in range(v):
        out[s] = int(np.dot(a, np.roll(a, -s)))
    return out


def difference_counts(elements, v):
    elems = np.asarray(elements, dtype=np.int64)
    out = np.zeros(v, dtype=np.int64)
    if elems.size:
        diffs = (elems[:, None] - elems[None, :]) % v
        np.add.at(out, diffs.ravel(), 1)
    return out


def next_combination(combo, sizes, feasible, target):
    """Advance ``combo`` in place to its lexicographic successor.

    ``combo`` lists increasing orbit indices whose sizes sum to ``target``;
    ``feasible[i][r]`` says whether orbits ``i..`` can sum to exactly ``r``.
    Returns the first depth that changed, or -1 when the space is exhausted.
    """
    n = len(sizes)
    used = [0]
    for c in combo:
        used.append(used[-1] + sizes[c])
    for j in range(len(combo) - 1, -1, -1):
        rem = target - used[j]
        for q in range(combo[j] + 1, n):
            if sizes[q] <= rem and feasible[q + 1][rem - sizes[q]]:
                del combo[j:]
                combo.append(q)
                fill_smallest(combo, q + 1, rem - sizes[q], sizes, feasible)
                return j
    return -1


def fill_smallest(combo, pos, rem, sizes, feasible):
    """Append the lexicographically smallest completion summing to ``rem``."""
    n = len(sizes)
    while rem > 0:
        for p in range(pos, n):
            if sizes[p] <= rem and feasible[p + 1][rem - sizes[p]]:
                combo.append(p)
                rem -= sizes[p]
                pos = p + 1
                break
        else:
            raise AssertionError("infeasible completion")


def scan_window(re, im, sizes, base_re, base_im, start, target, count, bound, feasible):
    """Scan ``count`` combinations starting at ``start``.

    ``re``/``im`` hold, per free orbit, the real and imaginary parts of its
    indicator DFT at the checked frequencies; ``base_*`` the same for the
    forced orbits. A combination passes when ``4 |sum|^2 <= bound`` at every
    frequency. Returns ``(passing, scanned)`` where ``passing`` is a list of
    index tuples.
    """
    re = np.asarray(re, dtype=np.float64)
    im = np.asarray(im, dtype=np.float64)
    sizes = [int(s) for s in sizes]
    combo = [int(c) for c in start]
    n = len(sizes)
    nf = re.shape[1] if re.ndim == 2 else 0
    pre_re = np.zeros((n + 2, nf))
    pre_im = np.zeros((n + 2, nf))
    pre_re[0] = base_re
    pre_im[0] = base_im
    passing = []
    scanned = 0
    changed = 0
    while scanned < count:
        for t in range(changed, len(combo)):
            pre_re[t + 1] = pre_re[t] + re[combo[t]]
            pre_im[t + 1] = pre_im[t] + im[combo[t]]
        d = len(combo)
        scanned += 1
        if np.all(4.0 * (pre_re[d] ** 2 + pre_im[d] ** 2) <= bound):
            passing.append(tuple(combo))
        if scanned >= count:
            break
        changed = next_combination(combo, sizes, feasible, target)
        if changed < 0:
            break
    return passing, scanned
