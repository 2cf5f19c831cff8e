"""Simple games on multisets of players.

A game is played by ``m`` levels of interchangeable players, with ``n[i]``
players available at level ``i``.  A coalition is a count vector
``c`` with ``0 <= c[i] <= n[i]``.  The winning family is monotone under
the componentwise order and is stored through its minimal elements.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from math import prod
from typing import Callable, Iterable

from .errors import (
    CapacityError,
    InvalidCoalitionError,
    InvalidGameError,
    InvalidShiftError,
    NotCompleteError,
)

Coalition = tuple[int, ...]
PlayerMultiset = tuple[int, ...]

DEFAULT_CAPACITY = 2**24
CAPACITY_ENV = "HIERGAMES_CAPACITY"
SET_GAME_PLAYER_LIMIT = 16


def enumeration_capacity() -> int:
    """Largest number of coalitions an exhaustive pass may visit.

    Defaults to ``DEFAULT_CAPACITY`` and can be overridden through the
    ``HIERGAMES_CAPACITY`` environment variable.  Values that do not
    parse as a positive integer fall back to the default.
    """
    raw = os.environ.get(CAPACITY_ENV)
    if raw is None:
        return DEFAULT_CAPACITY
    try:
        value = int(raw)
    except ValueError:
        return DEFAULT_CAPACITY
    return value if value > 0 else DEFAULT_CAPACITY


class Comparison(Enum):
    """Outcome of comparing two levels by desirability."""

    MORE = "more"
    EQUIVALENT = "equivalent"
    LESS = "less"
    INCOMPARABLE = "incomparable"


def _leq(a: Coalition, b: Coalition) -> bool:
    return all(x <= y for x, y in zip(a, b))


def minimal_antichain(vectors: Iterable[Coalition]) -> frozenset[Coalition]:
    """Keep only the componentwise-minimal vectors of a collection."""
    pool = set(vectors)
    return frozenset(
        v for v in pool if not any(u != v and _leq(u, v) for u in pool)
    )


@dataclass(frozen=True)
class MultisetGame:
    """A monotone simple game given by its minimal winning count vectors."""

    sizes: PlayerMultiset
    min_winning: frozenset[Coalition]

    def __post_init__(self) -> None:
        sizes = tuple(int(s) for s in self.sizes)
        if any(s < 1 for s in sizes):
            raise InvalidGameError("every level needs at least one player")
        object.__setattr__(self, "sizes", sizes)

        box = prod(s + 1 for s in sizes)
        if box > enumeration_capacity():
            raise CapacityError(
                f"game has {box} coalitions, over the capacity of "
                f"{enumeration_capacity()}"
            )

        winning = frozenset(tuple(int(x) for x in w) for w in self.min_winning)
        if not winning:
            raise InvalidGameError("a game needs at least one winning coalition")
        for w in winning:
            if len(w) != len(sizes):
                raise InvalidGameError(
                    f"winning coalition {w} does not have {len(sizes)} levels"
                )
            if any(x < 0 or x > s for x, s in zip(w, sizes)):
                raise InvalidGameError(f"winning coalition {w} does not fit {sizes}")
        for w in winning:
            for v in winning:
                if v != w and _leq(v, w):
                    raise InvalidGameError(
                        f"{w} and {v} are comparable, minimal coalitions must "
                        "form an antichain"
                    )
        object.__setattr__(self, "min_winning", winning)

    @property
    def num_levels(self) -> int:
        return len(self.sizes)

    @property
    def total_players(self) -> int:
        return sum(self.sizes)

    @cached_property
    def _table_strides(self) -> tuple[int, ...]:
        # Mixed-radix strides matching itertools.product order, where the
        # last coordinate varies fastest.
        sizes = self.sizes
        return tuple(
            prod(s + 1 for s in sizes[i + 1 :]) for i in range(len(sizes))
        )

    @cached_property
    def _winning_table(self) -> bytearray:
        """Winning status of every coalition in the box, densely indexed."""
        sizes = self.sizes
        m = len(sizes)
        box = prod(s + 1 for s in sizes)
        if box > enumeration_capacity():
            raise CapacityError(
                f"winning table would hold {box} entries, over the capacity "
                f"of {enumeration_capacity()}"
            )
        strides = self._table_strides
        minset = self.min_winning
        table = bytearray(box)
        for idx, c in enumerate(
            itertools.product(*(range(s + 1) for s in sizes))
        ):
            if c in minset or any(
                c[i] and table[idx - strides[i]] for i in range(m)
            ):
                table[idx] = 1
        return table

    @cached_property
    def _geq_matrix(self) -> tuple[int, ...]:
        """Row ``i`` is a bitmask of the levels that ``i`` is at least as
        desirable as.

        Level ``i`` is at least as desirable as level ``j`` when replacing
        one player of level ``j`` by one of level ``i`` never turns a
        winning coalition into a losing one.
        """
        sizes = self.sizes
        m = len(sizes)
        strides = self._table_strides
        table = self._winning_table
        full = (1 << m) - 1
        geq = [full] * m
        for idx, c in enumerate(
            itertools.product(*(range(s + 1) for s in sizes))
        ):
            gain = [
                c[i] < sizes[i] and table[idx + strides[i]] for i in range(m)
            ]
            room = [c[i] < sizes[i] for i in range(m)]
            for j in range(m):
                if not gain[j]:
                    continue
                for i in range(m):
                    if room[i] and not gain[i]:
                        geq[i] &= ~(1 << j)
        return tuple(geq)


@dataclass(frozen=True)
class SetGame:
    """A simple game on individually named players ``0 .. player_count-1``."""

    player_count: int
    min_winning_sets: frozenset[frozenset[int]]

    def __post_init__(self) -> None:
        n = int(self.player_count)
        if n < 0:
            raise InvalidGameError("player count cannot be negative")
        if n > SET_GAME_PLAYER_LIMIT:
            raise CapacityError(
                f"set games support at most {SET_GAME_PLAYER_LIMIT} players, "
                f"got {n}"
            )
        object.__setattr__(self, "player_count", n)

        winning = frozenset(
            frozenset(int(p) for p in w) for w in self.min_winning_sets
        )
        if not winning:
            raise InvalidGameError("a game needs at least one winning coalition")
        for w in winning:
            if any(p < 0 or p >= n for p in w):
                raise InvalidGameError(
                    f"coalition {sorted(w)} mentions players outside 0..{n - 1}"
                )
        for w in winning:
            for v in winning:
                if v != w and v <= w:
                    raise InvalidGameError(
                        "minimal winning sets must form an antichain"
                    )
        object.__setattr__(self, "min_winning_sets", winning)

    @cached_property
    def _min_masks(self) -> frozenset[int]:
        return frozenset(
            sum(1 << p for p in w) for w in self.min_winning_sets
        )

    @cached_property
    def _winning_table(self) -> bytearray:
        n = self.player_count
        minmasks = self._min_masks
        table = bytearray(1 << n)
        for mask in range(1 << n):
            if mask in minmasks:
                table[mask] = 1
                continue
            rest = mask
            while rest:
                bit = rest & -rest
                if table[mask ^ bit]:
                    table[mask] = 1
                    break
                rest ^= bit
        return table

    @cached_property
    def _geq_matrix(self) -> tuple[int, ...]:
        n = self.player_count
        table = self._winning_table
        full = (1 << n) - 1
        geq = [full] * n
        for mask in range(1 << n):
            absent = [i for i in range(n) if not mask >> i & 1]
            gainers = [j for j in absent if table[mask | 1 << j]]
            if not gainers:
                continue
            for i in absent:
                if not table[mask | 1 << i]:
                    for j in gainers:
                        geq[i] &= ~(1 << j)
        return tuple(geq)


def _check_coalition(game: MultisetGame, coalition: Iterable[int]) -> Coalition:
    c = tuple(coalition)
    if len(c) != len(game.sizes):
        raise InvalidCoalitionError(
            f"coalition {c} does not have {len(game.sizes)} levels"
        )
    for x, s in zip(c, game.sizes):
        if not isinstance(x, int):
            raise InvalidCoalitionError(f"coalition entries must be ints, got {x!r}")
        if x < 0 or x > s:
            raise InvalidCoalitionError(f"coalition {c} does not fit {game.sizes}")
    return c


def _coalition_index(game: MultisetGame, c: Coalition) -> int:
    return sum(x * s for x, s in zip(c, game._table_strides))


def is_winning(game: MultisetGame, coalition: Iterable[int]) -> bool:
    """Test one coalition directly against the minimal winning family."""
    c = _check_coalition(game, coalition)
    return any(_leq(w, c) for w in game.min_winning)


def winning_predicate(game: MultisetGame) -> Callable[[Coalition], bool]:
    """Return a constant-time winning test backed by a precomputed table."""
    table = game._winning_table
    strides = game._table_strides
    sizes = game.sizes
    m = len(sizes)

    def wins(coalition: Coalition) -> bool:
        if len(coalition) != m or any(
            x < 0 or x > s for x, s in zip(coalition, sizes)
        ):
            raise InvalidCoalitionError(
                f"coalition {tuple(coalition)} does not fit {sizes}"
            )
        return bool(table[sum(x * s for x, s in zip(coalition, strides))])

    return wins


def _box(sizes: PlayerMultiset) -> Iterable[Coalition]:
    return itertools.product(*(range(s + 1) for s in sizes))


def maximal_losing(game: MultisetGame) -> frozenset[Coalition]:
    """All losing coalitions that win as soon as any one player joins.

    Empty exactly when the empty coalition already wins.
    """
    sizes = game.sizes
    m = len(sizes)
    table = game._winning_table
    strides = game._table_strides
    found = []
    for idx, c in enumerate(_box(sizes)):
        if table[idx]:
            continue
        if all(
            c[i] == sizes[i] or table[idx + strides[i]] for i in range(m)
        ):
            found.append(c)
    return frozenset(found)


def is_winning_set(game: SetGame, players: Iterable[int]) -> bool:
    s = frozenset(int(p) for p in players)
    if any(p < 0 or p >= game.player_count for p in s):
        raise InvalidCoalitionError(
            f"coalition {sorted(s)} mentions players outside "
            f"0..{game.player_count - 1}"
        )
    return any(w <= s for w in game.min_winning_sets)


def _mutually_geq(geq: tuple[int, ...], a: int, b: int) -> bool:
    return bool(geq[a] >> b & 1 and geq[b] >> a & 1)


def _strictly_above(geq: tuple[int, ...], a: int, b: int) -> bool:
    return bool(geq[a] >> b & 1 and not geq[b] >> a & 1)


def _partition_by_equivalence(
    geq: tuple[int, ...], count: int
) -> tuple[tuple[int, ...], ...]:
    """Group indices into classes of mutual desirability, then order the
    classes so that no later class is strictly more desirable than an
    earlier one.  Ties between incomparable classes go to the smallest
    member index, which keeps the order deterministic.
    """
    classes: list[list[int]] = []
    for item in range(count):
        for cls in classes:
            if _mutually_geq(geq, cls[0], item):
                cls.append(item)
                break
        else:
            classes.append([item])

    # Mutual desirability is used here as if it were transitive; the
    # greedy grouping above would silently misfile members otherwise.
    for cls in classes:
        for a in cls:
            for b in cls:
                if not geq[a] >> b & 1:
                    raise InvalidGameError(
                        "desirability ties between levels do not form "
                        "consistent classes"
                    )

    ordered: list[int] = []
    remaining = list(range(len(classes)))
    while remaining:
        top = [
            ci
            for ci in remaining
            if not any(
                _strictly_above(geq, classes[cj][0], classes[ci][0])
                for cj in remaining
                if cj != ci
            )
        ]
        pick = min(top, key=lambda ci: classes[ci][0])
        ordered.append(pick)
        remaining.remove(pick)
    return tuple(tuple(classes[ci]) for ci in ordered)


def equivalence_classes(game: MultisetGame) -> tuple[tuple[int, ...], ...]:
    """Levels grouped by equal desirability, most desirable class first."""
    return _partition_by_equivalence(game._geq_matrix, game.num_levels)


def set_game_equivalence_classes(game: SetGame) -> tuple[tuple[int, ...], ...]:
    """Players grouped by equal desirability, most desirable class first."""
    return _partition_by_equivalence(game._geq_matrix, game.player_count)


def canonicalize_set_game(game: SetGame) -> MultisetGame:
    """Collapse a set game into its multiset form on desirability classes."""
    classes = set_game_equivalence_classes(game)
    class_of = {
        p: idx for idx, cls in enumerate(classes) for p in cls
    }
    sizes = tuple(len(cls) for cls in classes)
    images = set()
    for w in game.min_winning_sets:
        counts = [0] * len(classes)
        for p in w:
            counts[class_of[p]] += 1
        images.add(tuple(counts))
    return MultisetGame(sizes, minimal_antichain(images))


def isbell_compare(game: MultisetGame, i: int, j: int) -> Comparison:
    """Compare two levels by desirability."""
    m = game.num_levels
    if not (0 <= i < m and 0 <= j < m):
        raise IndexError(f"level indices {i}, {j} outside 0..{m - 1}")
    geq = game._geq_matrix
    fwd = bool(geq[i] >> j & 1)
    back = bool(geq[j] >> i & 1)
    if fwd and back:
        return Comparison.EQUIVALENT
    if fwd:
        return Comparison.MORE
    if back:
        return Comparison.LESS
    return Comparison.INCOMPARABLE


def is_complete(game: MultisetGame) -> bool:
    """Whether every pair of levels is comparable by desirability."""
    geq = game._geq_matrix
    m = game.num_levels
    return all(
        geq[i] >> j & 1 or geq[j] >> i & 1
        for i in range(m)
        for j in range(i + 1, m)
    )


def _require_strict_order(game: MultisetGame) -> None:
    geq = game._geq_matrix
    for i in range(game.num_levels - 1):
        if not _strictly_above(geq, i, i + 1):
            raise NotCompleteError(
                "levels must be strictly decreasing in desirability, "
                f"levels {i} and {i + 1} are not"
            )


def apply_shift(
    game: MultisetGame, coalition: Iterable[int], i: int, j: int
) -> Coalition:
    """Replace one player of level ``i`` by one of the less desirable
    level ``j`` in a coalition.

    The game's levels must be strictly ordered by desirability, ``i < j``,
    the coalition must hold a player at level ``i`` and have room at
    level ``j``.
    """
    c = _check_coalition(game, coalition)
    _require_strict_order(game)
    if not (0 <= i < game.num_levels and 0 <= j < game.num_levels):
        raise InvalidShiftError(
            f"level indices {i}, {j} outside 0..{game.num_levels - 1}"
        )
    if i >= j:
        raise InvalidShiftError("shifts only move players to a later level")
    if c[i] < 1:
        raise InvalidShiftError(f"coalition {c} has nobody at level {i}")
    if c[j] >= game.sizes[j]:
        raise InvalidShiftError(f"coalition {c} has no room at level {j}")
    out = list(c)
    out[i] -= 1
    out[j] += 1
    return tuple(out)


def _shift_pairs(
    sizes: PlayerMultiset, c: Coalition
) -> Iterable[tuple[int, int]]:
    m = len(sizes)
    for i in range(m):
        if c[i] < 1:
            continue
        for j in range(i + 1, m):
            if c[j] < sizes[j]:
                yield i, j


def shift_minimal_winning(game: MultisetGame) -> frozenset[Coalition]:
    """Minimal winning coalitions that lose under every single shift."""
    _require_strict_order(game)
    table = game._winning_table
    strides = game._table_strides
    found = []
    for c in game.min_winning:
        idx = _coalition_index(game, c)
        if all(
            not table[idx - strides[i] + strides[j]]
            for i, j in _shift_pairs(game.sizes, c)
        ):
            found.append(c)
    return frozenset(found)


def shift_maximal_losing(game: MultisetGame) -> frozenset[Coalition]:
    """Maximal losing coalitions that win under every single reverse shift.

    A reverse shift moves one player from a level ``j`` back to a more
    desirable level ``i`` with spare room.
    """
    _require_strict_order(game)
    sizes = game.sizes
    m = len(sizes)
    table = game._winning_table
    strides = game._table_strides
    found = []
    for c in maximal_losing(game):
        idx = _coalition_index(game, c)
        ok = True
        for i in range(m):
            if c[i] == sizes[i]:
                continue
            for j in range(i + 1, m):
                if c[j] >= 1 and not table[idx + strides[i] - strides[j]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.append(c)
    return frozenset(found)


def dummy_levels(game: MultisetGame) -> tuple[int, ...]:
    """Levels whose players never change the outcome of any coalition."""
    sizes = game.sizes
    table = game._winning_table
    strides = game._table_strides
    dummies = []
    for i in range(len(sizes)):
        if all(
            table[idx] == table[idx + strides[i]]
            for idx, c in enumerate(_box(sizes))
            if c[i] < sizes[i]
        ):
            dummies.append(i)
    return tuple(dummies)


def subgame(game: MultisetGame, removed: Iterable[int]) -> MultisetGame:
    """The game left after removing some players entirely.

    Keeps the minimal winning coalitions that fit in the remaining
    multiset and drops levels with nobody left.  Raises
    ``InvalidGameError`` when no winning coalition survives.
    """
    a = _check_coalition(game, removed)
    left = tuple(s - x for s, x in zip(game.sizes, a))
    fitting = [w for w in game.min_winning if _leq(w, left)]
    if not fitting:
        raise InvalidGameError(
            f"removing {a} leaves no winning coalition"
        )
    keep = [i for i, s in enumerate(left) if s > 0]
    sizes = tuple(left[i] for i in keep)
    winning = frozenset(tuple(w[i] for i in keep) for w in fitting)
    return MultisetGame(sizes, winning)


def reduced_game(game: MultisetGame, present: Iterable[int]) -> MultisetGame:
    """The game for the remaining players once ``present`` already sit at
    the table.

    A remaining coalition wins exactly when it wins in the original game
    together with ``present``.
    """
    a = _check_coalition(game, present)
    left = tuple(s - x for s, x in zip(game.sizes, a))
    clipped = {
        tuple(max(0, w_i - a_i) for w_i, a_i in zip(w, a))
        for w in game.min_winning
    }
    keep = [i for i, s in enumerate(left) if s > 0]
    sizes = tuple(left[i] for i in keep)
    winning = minimal_antichain(
        tuple(w[i] for i in keep) for w in clipped
    )
    return MultisetGame(sizes, winning)


def dual(game: MultisetGame) -> MultisetGame:
    """The game where a coalition wins iff its complement loses.

    The minimal winning coalitions of the dual are the complements of the
    maximal losing coalitions of the original game.
    """
    losers = maximal_losing(game)
    if not losers:
        raise InvalidGameError(
            "the dual of an always-winning game has no winning coalitions"
        )
    sizes = game.sizes
    winning = frozenset(
        tuple(s - y_i for s, y_i in zip(sizes, y)) for y in losers
    )
    return MultisetGame(sizes, winning)
