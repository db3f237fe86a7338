"""Second successor rule: append a unit, or collect all units into one part.

Every partition of n grows the partition of n+1 with an extra unit
appended; a second-kind partition (u units with 1 <= u < its smallest
non-unit part) additionally grows the one where the u units are replaced
by the single part u+1.  This never produces the single-part partition of
n+1, so evolution adds it explicitly at every weight above 1.
"""

from __future__ import annotations

from types import ModuleType

from .core import Kind, NoPredecessorError, Partition, classify_m2, unit_count
from .engine import ProgressFn, run_evolution
from .level import TAG_ADDED_UNIT, TAG_COLLECTED, TAG_EXPLICIT, Level


def tagged_successors_m2(p: Partition) -> tuple[tuple[Partition, str], ...]:
    """Successors of ``p`` with the rule that produced each one."""
    parts = p.parts
    added = Partition._from_canonical(parts + (1,), p.weight + 1)
    if classify_m2(p) is Kind.FIRST:
        return ((added, TAG_ADDED_UNIT),)
    units = unit_count(p)
    head = parts[:len(parts) - units]
    # u+1 <= smallest non-unit part, so appending keeps canonical order.
    assert not head or head[-1] >= units + 1
    collected = Partition._from_canonical(head + (units + 1,), p.weight + 1)
    return ((added, TAG_ADDED_UNIT), (collected, TAG_COLLECTED))


def successors_m2(p: Partition) -> frozenset[Partition]:
    """The one or two partitions of ``p.weight + 1`` grown from ``p``."""
    return frozenset(successor for successor, _ in tagged_successors_m2(p))


def predecessor_m2(p: Partition) -> Partition:
    """The unique partition the second rule grew ``p`` from.

    Last part 1: drop it.  Last part a > 1 in a multi-part partition:
    replace it by a-1 units.  Single-part partitions of weight 2 or more
    are never generated (they enter by the explicit step), and the empty
    partition has no predecessor; both raise NoPredecessorError.
    """
    if p.weight == 0:
        raise NoPredecessorError("the empty partition has no predecessor")
    parts = p.parts
    if parts[-1] == 1:
        return Partition._from_canonical(parts[:-1], p.weight - 1)
    if len(parts) == 1:
        raise NoPredecessorError(
            f"{p} is the single-part partition of {p.weight}; it is added "
            "explicitly at its weight, not grown from a predecessor")
    last = parts[-1]
    return Partition._from_canonical(
        parts[:-1] + (1,) * (last - 1), p.weight - 1)


def _expand(kernel: ModuleType, members: list) -> tuple[list, list]:
    return kernel.step_m2(members)


def _explicit_member(weight: int) -> list[tuple[tuple[int, ...], str]]:
    # The single-part partition of weight 1 already arises from the empty
    # partition's appended unit, so the explicit add starts at weight 2.
    if weight == 1:
        return []
    return [((weight,), TAG_EXPLICIT)]


def evolve_m2(start: Level, target_n: int, *,
              backend: str | ModuleType | None = None,
              parallel: bool = False, check: bool = False,
              progress: ProgressFn | None = None) -> Level:
    """Evolve a complete level to ``target_n`` under the second rule.

    Appends the single-part partition explicitly at every weight above 1.
    Contract otherwise as for ``evolve_m1``.
    """
    return run_evolution(start, target_n, method_tag="method2",
                         expand=_expand, extra_for_weight=_explicit_member,
                         backend=backend, parallel=parallel, check=check,
                         progress=progress)
