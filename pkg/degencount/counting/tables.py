"""Associative tables keyed by tuples of host vertices.

The ordered table keeps sorted keys and answers lookups by binary search,
so every access costs O(log n). The hashed table is a plain dict.
"""

from __future__ import annotations

from bisect import bisect_left
from collections.abc import Iterable
from typing import Protocol

Key = tuple[int, ...]


class CountTable(Protocol):
    def get(self, key: Key) -> int: ...

    def __len__(self) -> int: ...


class OrderedTable:
    """Sorted-key table built once from ``(key, count)`` pairs; duplicates are summed."""

    def __init__(self, entries: Iterable[tuple[Key, int]]) -> None:
        keys: list[Key] = []
        values: list[int] = []
        for key, value in sorted(entries):
            if keys and keys[-1] == key:
                values[-1] += value
            else:
                keys.append(key)
                values.append(value)
        self._keys = keys
        self._values = values

    def get(self, key: Key) -> int:
        i = bisect_left(self._keys, key)
        if i < len(self._keys) and self._keys[i] == key:
            return self._values[i]
        return 0

    def __len__(self) -> int:
        return len(self._keys)


class HashedTable:
    def __init__(self, entries: Iterable[tuple[Key, int]]) -> None:
        self._data: dict[Key, int] = {}
        for key, value in entries:
            self._data[key] = self._data.get(key, 0) + value

    def get(self, key: Key) -> int:
        return self._data.get(key, 0)

    def __len__(self) -> int:
        return len(self._data)


def make_table(kind: str, entries: Iterable[tuple[Key, int]]) -> CountTable:
    """Build the table type named by the ``dictionary`` setting."""
    if kind == "hashed":
        return HashedTable(entries)
    return OrderedTable(entries)
