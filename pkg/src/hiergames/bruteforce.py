"""Expansion of multiset games to named players, and small exhaustive
searches used to cross-check the analytic routines.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

from .errors import CapacityError, InvalidComparisonError
from .games import (
    SET_GAME_PLAYER_LIMIT,
    Coalition,
    MultisetGame,
    PlayerMultiset,
    SetGame,
)


@dataclass(frozen=True)
class ExpandedGame:
    """A multiset game rewritten on individually named players.

    Players are numbered level by level, so ``level_of[p]`` recovers the
    level a player came from.
    """

    set_game: SetGame
    level_of: tuple[int, ...]


def expand(game: MultisetGame) -> ExpandedGame:
    """Instantiate every minimal winning count vector as concrete sets."""
    total = game.total_players
    if total > SET_GAME_PLAYER_LIMIT:
        raise CapacityError(
            f"expansion needs {total} named players, over the limit of "
            f"{SET_GAME_PLAYER_LIMIT}"
        )
    levels = []
    start = 0
    for size in game.sizes:
        levels.append(tuple(range(start, start + size)))
        start += size
    level_of = tuple(
        i for i, size in enumerate(game.sizes) for _ in range(size)
    )
    sets = set()
    for w in game.min_winning:
        for parts in itertools.product(
            *(
                itertools.combinations(members, count)
                for members, count in zip(levels, w)
            )
        ):
            sets.add(frozenset(itertools.chain.from_iterable(parts)))
    return ExpandedGame(SetGame(total, frozenset(sets)), level_of)


def games_equal(a: MultisetGame, b: MultisetGame) -> bool:
    """Equality of games sharing one level structure."""
    if a.sizes != b.sizes:
        raise InvalidComparisonError(
            f"cannot compare games on levels {a.sizes} and {b.sizes}"
        )
    return a.min_winning == b.min_winning


def expanded_equal(a: MultisetGame, b: MultisetGame) -> bool:
    """Equality of games after forgetting the level structure.

    Both games are expanded to named players in level order, so this
    tolerates levels having been merged or split as long as the players
    keep their positions.
    """
    if a.total_players != b.total_players:
        raise InvalidComparisonError(
            f"cannot compare games on {a.total_players} and "
            f"{b.total_players} players"
        )
    return (
        expand(a).set_game.min_winning_sets
        == expand(b).set_game.min_winning_sets
    )


def find_repartition(
    sizes: PlayerMultiset,
    pool: Coalition,
    count: int,
    losing_test: Callable[[Coalition], bool],
) -> tuple[Coalition, ...] | None:
    """Split ``pool`` into ``count`` losing coalitions, if possible.

    The pool is a componentwise sum of coalitions; each returned part
    fits inside the level sizes and satisfies ``losing_test``.  Failure
    states are memoized, so the search runs once per distinct remaining
    pool and slot count.
    """
    pool = tuple(int(x) for x in pool)
    if len(pool) != len(sizes) or any(x < 0 for x in pool):
        raise ValueError(f"pool {pool} does not fit level sizes {sizes}")
    cap = tuple(min(p, s) for p, s in zip(pool, sizes))
    candidates = [
        c
        for c in itertools.product(*(range(x + 1) for x in cap))
        if losing_test(c)
    ]
    candidates.sort(key=lambda c: (sum(c), c), reverse=True)
    failed: set[tuple[Coalition, int]] = set()

    def search(left: Coalition, slots: int) -> list[Coalition] | None:
        if slots == 0:
            return [] if not any(left) else None
        if any(x > slots * s for x, s in zip(left, sizes)):
            return None
        key = (left, slots)
        if key in failed:
            return None
        for c in candidates:
            if all(x <= p for x, p in zip(c, left)):
                rest = search(
                    tuple(p - x for p, x in zip(left, c)), slots - 1
                )
                if rest is not None:
                    return [c, *rest]
        failed.add(key)
        return None

    parts = search(pool, count)
    return tuple(parts) if parts is not None else None
