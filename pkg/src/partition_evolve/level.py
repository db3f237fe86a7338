"""Complete one-weight partition sets with provenance, and JSONL snapshots.

A snapshot file holds one JSON object per line::

    {"n": 6, "parts": [3, 2, 1], "tag": "AddedUnit"}

Tags record which rule emitted each partition; a snapshot written after an
evolution run is valid input for resuming it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import IO, Iterable

from .core import Partition

TAG_SEED = "Seed"
TAG_ADDED_UNIT = "AddedUnit"
TAG_AUGMENTED = "Augmented"
TAG_COLLECTED = "Collected"
TAG_EXPLICIT = "Explicit"

# Fixed display/reporting order for tag breakdowns.
TAG_ORDER = (TAG_SEED, TAG_ADDED_UNIT, TAG_AUGMENTED, TAG_COLLECTED, TAG_EXPLICIT)
SNAPSHOT_TAGS = frozenset(TAG_ORDER)

METHOD_TAGS = ("method1", "method2", "oracle")


class SnapshotError(ValueError):
    """Raised for malformed snapshot input; messages name the offending line."""


@dataclass(frozen=True)
class Level:
    """All partitions of one weight, unique and in canonical order.

    ``tags`` is parallel to ``partitions`` and records provenance;
    ``method_tag`` records which pipeline produced the level.
    """

    n: int
    partitions: tuple[Partition, ...]
    tags: tuple[str, ...]
    method_tag: str

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"level weight must be nonnegative, got {self.n}")
        if self.method_tag not in METHOD_TAGS:
            raise ValueError(f"unknown method tag {self.method_tag!r}")
        if len(self.tags) != len(self.partitions):
            raise ValueError("tags and partitions must be parallel")
        previous = None
        for p in self.partitions:
            if p.weight != self.n:
                raise ValueError(
                    f"member {p} has weight {p.weight}, level holds weight {self.n}")
            # Strict canonical order implies both sortedness and uniqueness.
            if previous is not None and not previous < p:
                raise ValueError(
                    f"members out of canonical order or duplicated near {p}")
            previous = p

    def __len__(self) -> int:
        return len(self.partitions)

    @classmethod
    def seed(cls, method_tag: str) -> "Level":
        """The weight-0 level: just the empty partition."""
        return cls(0, (Partition(),), (TAG_SEED,), method_tag)

    @classmethod
    def from_raw(cls, n: int, members: Iterable[tuple[int, ...]],
                 tags: Iterable[str], method_tag: str) -> "Level":
        """Sort raw kernel output (part tuples plus tags) into a Level."""
        pairs = sorted(zip(members, tags), key=lambda pair: pair[0], reverse=True)
        partitions = tuple(Partition._from_canonical(parts) for parts, _ in pairs)
        return cls(n, partitions, tuple(tag for _, tag in pairs), method_tag)

    def raw_members(self) -> list[tuple[int, ...]]:
        """Part tuples in level order, the kernels' working representation."""
        return [p.parts for p in self.partitions]

    def tag_counts(self) -> dict[str, int]:
        """Provenance breakdown in fixed TAG_ORDER, zero counts omitted."""
        counts = {tag: 0 for tag in TAG_ORDER}
        for tag in self.tags:
            counts[tag] += 1
        return {tag: count for tag, count in counts.items() if count}


def write_snapshot(level: Level, stream: IO[str]) -> None:
    """Write one JSONL line per member, in level order."""
    for partition, tag in zip(level.partitions, level.tags):
        record = {"n": level.n, "parts": list(partition.parts), "tag": tag}
        stream.write(json.dumps(record) + "\n")


def read_snapshot(stream: IO[str], *, method_tag: str,
                  expected_n: int | None = None) -> Level:
    """Read and validate a snapshot, returning the Level it describes.

    Every line must carry the same weight (and match ``expected_n`` when
    given), canonical non-increasing positive parts, a known tag, and no
    partition may repeat.  Violations raise SnapshotError naming the line.
    """
    members: list[tuple[int, ...]] = []
    tags: list[str] = []
    seen: set[tuple[int, ...]] = set()
    level_n = expected_n

    for lineno, line in enumerate(stream, start=1):
        text = line.strip()
        if not text:
            continue
        try:
            record = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SnapshotError(f"line {lineno}: not valid JSON ({exc})") from None
        if not isinstance(record, dict):
            raise SnapshotError(f"line {lineno}: expected a JSON object")
        missing = {"n", "parts", "tag"} - record.keys()
        if missing:
            raise SnapshotError(
                f"line {lineno}: missing field(s) {sorted(missing)}")

        n = record["n"]
        parts = record["parts"]
        tag = record["tag"]
        if not isinstance(n, int) or n < 0:
            raise SnapshotError(f"line {lineno}: bad weight {n!r}")
        if tag not in SNAPSHOT_TAGS:
            raise SnapshotError(f"line {lineno}: unknown tag {tag!r}")
        if not isinstance(parts, list) or any(
                not isinstance(x, int) or x < 1 for x in parts):
            raise SnapshotError(
                f"line {lineno}: parts must be a list of positive integers")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise SnapshotError(
                f"line {lineno}: parts {parts} are not non-increasing")
        if sum(parts) != n:
            raise SnapshotError(
                f"line {lineno}: parts {parts} sum to {sum(parts)}, not {n}")
        if level_n is None:
            level_n = n
        elif n != level_n:
            raise SnapshotError(
                f"line {lineno}: weight {n} differs from expected {level_n}")

        key = tuple(parts)
        if key in seen:
            raise SnapshotError(f"line {lineno}: duplicate partition {parts}")
        seen.add(key)
        members.append(key)
        tags.append(tag)

    if not members:
        raise SnapshotError("snapshot is empty")
    assert level_n is not None
    return Level.from_raw(level_n, members, tags, method_tag)
