"""Pure-Python level kernels: one-step successor expansion for both methods
and the independent brute-force enumerator.

This module is the fallback twin of the compiled ``_speedups`` extension;
the two must stay behaviorally identical (same outputs, same order, same
tags).  It is kept free of package imports so the compiled twin can mirror
it line for line.  Partitions are plain non-increasing tuples of ints here;
wrapping into richer types happens at the boundaries.
"""

from __future__ import annotations

BACKEND_NAME = "python"

# Literals shared with level.py's tag vocabulary.
TAG_ADDED_UNIT = "AddedUnit"
TAG_AUGMENTED = "Augmented"
TAG_COLLECTED = "Collected"


def step_m1(members: list) -> tuple[list, list]:
    """Expand one complete level by the first rule set.

    Every partition contributes itself with an extra unit appended; a
    partition whose last part is strictly smaller than its second-to-last
    (or that has a single part) also contributes a copy with the last part
    incremented.  Returns (parts tuples, parallel tag strings).
    """
    out = []
    tags = []
    for parts in members:
        k = len(parts)
        out.append(parts + (1,))
        tags.append(TAG_ADDED_UNIT)
        if k == 1 or (k > 1 and parts[k - 1] < parts[k - 2]):
            out.append(parts[:k - 1] + (parts[k - 1] + 1,))
            tags.append(TAG_AUGMENTED)
    return out, tags


def step_m2(members: list) -> tuple[list, list]:
    """Expand one complete level by the second rule set.

    Every partition contributes itself with an extra unit appended; a
    partition with u units, 1 <= u < its smallest non-unit part, also
    contributes a copy with all units replaced by the single part u+1.
    The single-part partition of the next weight is NOT produced here;
    the evolution loop adds it separately.
    """
    out = []
    tags = []
    for parts in members:
        k = len(parts)
        out.append(parts + (1,))
        tags.append(TAG_ADDED_UNIT)
        units = 0
        while units < k and parts[k - 1 - units] == 1:
            units += 1
        if 0 < units < k and units < parts[k - 1 - units]:
            out.append(parts[:k - units] + (units + 1,))
            tags.append(TAG_COLLECTED)
    return out, tags


def enumerate_level(n: int) -> list:
    """All partitions of n as part tuples, in canonical order.

    Canonical order (descending-lexicographic within one weight) falls
    out of recursing on the largest part from min(remainder, bound) down
    to 1; no sort is needed.
    """
    if n < 0:
        raise ValueError(f"cannot enumerate partitions of {n}")
    out: list = []
    prefix: list = []

    def descend(remainder: int, bound: int) -> None:
        if remainder == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(remainder, bound), 0, -1):
            prefix.append(part)
            descend(remainder - part, part)
            prefix.pop()

    descend(n, n)
    return out
