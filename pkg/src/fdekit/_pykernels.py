"""Pure-Python kernels.

Same contracts as the compiled ``_ckernels`` module; used when the extension
is not built and as the reference the compiled kernels are tested against.
"""

from __future__ import annotations

import time
from typing import Sequence

_PAD = bytes(252)

# below this many classes the direct loop is cheaper than building a table
TABLE_MIN_CLASSES = 256


def map_unary(table: bytes, vec: bytes) -> bytes:
    return vec.translate(table + _PAD)


def map_binary(table: bytes, x: bytes, y: bytes) -> bytes:
    if len(x) != len(y):
        raise ValueError("vectors differ in length")
    return bytes([table[4 * a + b] for a, b in zip(x, y)])


def truth_mask(vec: bytes) -> int:
    """Bit i is set when ``1`` is in the interpretation at valuation i."""
    mask = 0
    for i, code in enumerate(vec):
        if code & 1:
            mask |= 1 << i
    return mask


def _conclusion_counter(lmasks, cmasks, lfull, cfull):
    """Return ``count(gl, gc)``: conclusions k with gl inside lmasks[k] and gc not inside cmasks[k].

    Superset sums over L masks, one packed integer per cell holding a
    w-bit counter for each classical mask.  The count for a key is then a
    mask and a multiply, which folds the selected counters into the top
    field.  None when the masks are too wide for a table.
    """
    lbits, cbits = lfull.bit_length(), cfull.bit_length()
    if lbits > 16 or cbits > 6:
        return None
    fields = 1 << cbits
    w = len(lmasks).bit_length() + 1
    sums = [0] * (1 << lbits)
    for lm, cm in zip(lmasks, cmasks):
        sums[lm] += 1 << (cm * w)
    for b in range(lbits):
        bit = 1 << b
        sums = [v if x & bit else v + sums[x | bit] for x, v in enumerate(sums)]
    field = (1 << w) - 1
    fold = sum(1 << (i * w) for i in range(fields))
    top = (fields - 1) * w
    select = {}

    def count(gl, gc):
        m = select.get(gc)
        if m is None:
            m = select[gc] = sum(field << (c * w) for c in range(fields) if gc & ~c)
        return (((sums[gl] & m) * fold) >> top) & field

    return count


def witness_scan(
    lmasks: Sequence[int],
    cmasks: Sequence[int],
    lfull: int,
    cfull: int,
    max_premises: int,
    limit: int | None = None,
    deadline: float | None = None,
):
    """Scan premise sets of size 0..max_premises against every conclusion.

    A hit ``(premises, k)`` is L-valid (the premises' joint truth mask is
    inside ``lmasks[k]``) yet classically invalid (the joint classical mask
    is not inside ``cmasks[k]``).  Premise sets are visited by size, then
    lexicographically; a set whose joint masks equal an earlier set's is
    skipped.  Returns ``(hits, count, complete)``.
    """
    if max_premises > 2:
        raise ValueError("at most two premises are supported")
    n = len(lmasks)
    hits: list[tuple[tuple[int, ...], int]] = []
    count = 0
    seen: set[tuple[int, int]] = set()
    counter = None
    ticks = 0

    def scan(premises, gl, gc):
        nonlocal count, counter
        if gc == 0:
            return
        if limit is not None and len(hits) >= limit and n >= TABLE_MIN_CLASSES:
            # only the total is still needed
            if counter is None:
                counter = _conclusion_counter(lmasks, cmasks, lfull, cfull) or False
            if counter:
                count += counter(gl, gc)
                return
        for k in range(n):
            if gl & ~lmasks[k] == 0 and gc & ~cmasks[k]:
                count += 1
                if limit is None or len(hits) < limit:
                    hits.append((premises, k))

    seen.add((lfull, cfull))
    scan((), lfull, cfull)
    if max_premises >= 1:
        for i in range(n):
            if deadline is not None and time.monotonic() > deadline:
                return hits, count, False
            key = (lmasks[i], cmasks[i])
            if key not in seen:
                seen.add(key)
                scan((i,), *key)
    if max_premises >= 2:
        for i in range(n):
            li, ci = lmasks[i], cmasks[i]
            for j in range(i + 1, n):
                ticks += 1
                if ticks & 1023 == 0 and deadline is not None and time.monotonic() > deadline:
                    return hits, count, False
                key = (li & lmasks[j], ci & cmasks[j])
                if key not in seen:
                    seen.add(key)
                    scan((i, j), *key)
    return hits, count, True
