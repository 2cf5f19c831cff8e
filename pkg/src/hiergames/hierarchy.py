"""Two parametric families of games on ordered levels.

Fix level sizes ``n`` and thresholds ``k``.  Writing ``P_i(c)`` for the
number of players a coalition ``c`` holds at levels ``1 .. i``:

* the disjunctive game is won by meeting any prefix threshold,
  ``P_i(c) >= k[i]`` for some ``i``;
* the conjunctive game is won by meeting all of them.

Disjunctive thresholds increase strictly.  Conjunctive thresholds
increase strictly except that the last two may be equal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from itertools import accumulate
from math import prod
from typing import Iterator

from .errors import (
    CapacityError,
    InvalidParamsError,
    NotCompleteError,
)
from .games import (
    Coalition,
    MultisetGame,
    PlayerMultiset,
    enumeration_capacity,
    shift_maximal_losing,
    shift_minimal_winning,
)

DISJUNCTIVE = "disjunctive"
CONJUNCTIVE = "conjunctive"


@dataclass(frozen=True)
class HierarchyParams:
    """Sizes and thresholds for one of the two families."""

    kind: str
    n: PlayerMultiset
    k: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.kind not in (DISJUNCTIVE, CONJUNCTIVE):
            raise InvalidParamsError(f"unknown kind {self.kind!r}")
        n = tuple(int(x) for x in self.n)
        k = tuple(int(x) for x in self.k)
        if not n:
            raise InvalidParamsError("at least one level is required")
        if len(n) != len(k):
            raise InvalidParamsError(
                f"{len(n)} level sizes but {len(k)} thresholds"
            )
        if any(x < 1 for x in n):
            raise InvalidParamsError("every level needs at least one player")
        if any(x < 1 for x in k):
            raise InvalidParamsError("thresholds must be positive")
        for i in range(len(k) - 1):
            strict = self.kind == DISJUNCTIVE or i < len(k) - 2
            if strict and k[i] >= k[i + 1]:
                raise InvalidParamsError(
                    f"thresholds must increase strictly, got {k}"
                )
            if not strict and k[i] > k[i + 1]:
                raise InvalidParamsError(
                    f"the last threshold cannot drop, got {k}"
                )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "k", k)

    @property
    def num_levels(self) -> int:
        return len(self.n)

    @property
    def total_players(self) -> int:
        return sum(self.n)

    @property
    def prefix_totals(self) -> tuple[int, ...]:
        return tuple(accumulate(self.n))

    @property
    def is_canonical(self) -> bool:
        """Whether no merging or clamping rule applies to these parameters."""
        n, k, m = self.n, self.k, len(self.n)
        if k[0] > n[0]:
            return False
        last_strict = self.kind == CONJUNCTIVE
        for i in range(1, m):
            bound = k[i - 1] + n[i]
            if i < m - 1 or last_strict:
                if k[i] >= bound:
                    return False
            elif k[i] > bound:
                return False
        return True


def _predicate(params: HierarchyParams):
    k = params.k
    m = len(k)
    if params.kind == DISJUNCTIVE:

        def wins(c: Coalition) -> bool:
            total = 0
            for i in range(m):
                total += c[i]
                if total >= k[i]:
                    return True
            return False

    else:

        def wins(c: Coalition) -> bool:
            total = 0
            for i in range(m):
                total += c[i]
                if total < k[i]:
                    return False
            return True

    return wins


def build(params: HierarchyParams) -> MultisetGame:
    """Materialize the game as its minimal winning count vectors."""
    n, k = params.n, params.k
    totals = params.prefix_totals
    if params.kind == DISJUNCTIVE:
        reachable = any(t >= x for t, x in zip(totals, k))
    else:
        reachable = all(t >= x for t, x in zip(totals, k))
    if not reachable:
        raise InvalidParamsError(
            f"thresholds {k} are out of reach for level sizes {n}"
        )

    box = prod(s + 1 for s in n)
    if box > enumeration_capacity():
        raise CapacityError(
            f"building this game would enumerate {box} coalitions, over "
            f"the capacity of {enumeration_capacity()}"
        )
    wins = _predicate(params)
    m = len(n)
    strides = tuple(prod(s + 1 for s in n[i + 1 :]) for i in range(m))
    table = bytearray(box)
    minimal = []
    for idx, c in enumerate(itertools.product(*(range(s + 1) for s in n))):
        if not wins(c):
            continue
        table[idx] = 1
        if all(c[i] == 0 or not table[idx - strides[i]] for i in range(m)):
            minimal.append(c)
    return MultisetGame(n, frozenset(minimal))


def build_disjunctive(n: PlayerMultiset, k: tuple[int, ...]) -> MultisetGame:
    return build(HierarchyParams(DISJUNCTIVE, tuple(n), tuple(k)))


def build_conjunctive(n: PlayerMultiset, k: tuple[int, ...]) -> MultisetGame:
    return build(HierarchyParams(CONJUNCTIVE, tuple(n), tuple(k)))


def canonical_params(params: HierarchyParams) -> HierarchyParams:
    """Rewrite parameters to the unique canonical form of the same game.

    Levels are merged while some threshold is redundant or unreachable,
    and an oversized final disjunctive threshold is clamped to the value
    that marks the last level as powerless.  Parameters describing a game
    with no winning coalitions are rejected.
    """
    n = list(params.n)
    k = list(params.k)

    if params.kind == DISJUNCTIVE:
        changed = True
        while changed:
            changed = False
            if len(n) >= 2 and k[0] > n[0]:
                n[0:2] = [n[0] + n[1]]
                del k[0]
                changed = True
                continue
            for t in range(1, len(n) - 1):
                if k[t] >= k[t - 1] + n[t]:
                    n[t : t + 2] = [n[t] + n[t + 1]]
                    del k[t]
                    changed = True
                    break
        if k[0] > n[0]:
            raise InvalidParamsError(
                f"thresholds {params.k} are out of reach for level sizes "
                f"{params.n}"
            )
        if len(k) >= 2 and k[-1] > k[-2] + n[-1]:
            k[-1] = k[-2] + n[-1]
    else:
        changed = True
        while changed:
            changed = False
            for t in range(1, len(n)):
                if k[t] >= k[t - 1] + n[t]:
                    n[t - 1 : t + 1] = [n[t - 1] + n[t]]
                    del k[t - 1]
                    changed = True
                    break
        if k[0] > n[0]:
            raise InvalidParamsError(
                f"thresholds {params.k} are out of reach for level sizes "
                f"{params.n}"
            )

    result = HierarchyParams(params.kind, tuple(n), tuple(k))
    assert result.is_canonical
    return result


def dual_params(params: HierarchyParams) -> HierarchyParams:
    """Parameters of the dual game, which swaps the two families.

    The dual of the disjunctive game on ``(n, k)`` is the conjunctive
    game on ``(n, k*)`` with ``k*[i] = P_i(n) - k[i] + 1``, and the map
    is an involution.  It is only meaningful for canonical parameters;
    others may produce thresholds outside the allowed shape.
    """
    totals = params.prefix_totals
    star = tuple(t - x + 1 for t, x in zip(totals, params.k))
    if any(x < 1 for x in star):
        raise InvalidParamsError(
            f"dual thresholds of {params.k} are not positive, canonicalize "
            "the parameters first"
        )
    kind = CONJUNCTIVE if params.kind == DISJUNCTIVE else DISJUNCTIVE
    try:
        return HierarchyParams(kind, params.n, star)
    except InvalidParamsError as exc:
        raise InvalidParamsError(
            f"dual thresholds {star} are malformed, canonicalize the "
            "parameters first"
        ) from exc


def has_dummy_level(params: HierarchyParams) -> bool:
    """Whether the last level never influences the outcome."""
    n, k = params.n, params.k
    if len(n) < 2:
        return False
    if params.kind == DISJUNCTIVE:
        return k[-1] >= k[-2] + n[-1]
    return k[-2] == k[-1]


def recognize_disjunctive(game: MultisetGame) -> HierarchyParams | None:
    """Disjunctive parameters matching the game exactly, if any.

    A game whose levels are strictly ordered by desirability is
    disjunctive over its own level structure exactly when it has a
    single shift-maximal losing count vector, and that vector determines
    the thresholds: each is one more than the corresponding prefix sum.
    The fit is verified by rebuilding before the parameters are
    returned, so a hit always round-trips.

    A game built from mergeable parameters has interchangeable adjacent
    levels, which the extremal enumeration refuses to order; such a game
    is reported as a miss here because it is hierarchical only after its
    levels are fused, which ``canonical_params`` does at the parameter
    stage.
    """
    if game.num_levels == 0:
        return None
    try:
        extremal = shift_maximal_losing(game)
    except NotCompleteError:
        return None
    if len(extremal) != 1:
        return None
    (losing,) = extremal
    k = tuple(x + 1 for x in accumulate(losing))
    return _verified_params(game, DISJUNCTIVE, k)


def recognize_conjunctive(game: MultisetGame) -> HierarchyParams | None:
    """Conjunctive parameters matching the game exactly, if any.

    Mirror image of ``recognize_disjunctive``: here the witness is a
    single shift-minimal winning count vector, whose prefix sums are the
    thresholds directly.  Single-level games are recognized by both
    functions, since the two families agree there.
    """
    if game.num_levels == 0:
        return None
    try:
        extremal = shift_minimal_winning(game)
    except NotCompleteError:
        return None
    if len(extremal) != 1:
        return None
    (winning,) = extremal
    k = tuple(accumulate(winning))
    return _verified_params(game, CONJUNCTIVE, k)


def _verified_params(
    game: MultisetGame, kind: str, k: tuple[int, ...]
) -> HierarchyParams | None:
    """Return the parameter set only when it rebuilds the game exactly.

    On complete games outside the two families the threshold formulas
    can produce an invalid or mismatching parameter set, and the rebuild
    check turns both cases into a miss.
    """
    try:
        params = HierarchyParams(kind, game.sizes, k)
        candidate = build(params)
    except (InvalidParamsError, CapacityError):
        return None
    if candidate.min_winning != game.min_winning:
        return None
    return params


def canonical_parameter_grid(
    kind: str, max_players: int, max_levels: int | None = None
) -> Iterator[HierarchyParams]:
    """Every canonical parameter set with at most ``max_players`` players.

    Games are enumerated by total size, then by the split of that total
    into levels, then by thresholds.
    """
    if kind not in (DISJUNCTIVE, CONJUNCTIVE):
        raise InvalidParamsError(f"unknown kind {kind!r}")
    for total in range(1, max_players + 1):
        top = total if max_levels is None else min(max_levels, total)
        for m in range(1, top + 1):
            for cuts in itertools.combinations(range(1, total), m - 1):
                bounds = (0,) + cuts + (total,)
                n = tuple(bounds[i + 1] - bounds[i] for i in range(m))
                yield from _canonical_thresholds(kind, n)


def _canonical_thresholds(
    kind: str, n: PlayerMultiset
) -> Iterator[HierarchyParams]:
    m = len(n)
    if m == 1:
        for k1 in range(1, n[0] + 1):
            yield HierarchyParams(kind, n, (k1,))
        return
    middles = [range(1, n[i]) for i in range(1, m - 1)]
    last = range(1, n[-1] + 1) if kind == DISJUNCTIVE else range(n[-1])
    for k1 in range(1, n[0] + 1):
        for deltas in itertools.product(*middles, last):
            k = [k1]
            for d in deltas:
                k.append(k[-1] + d)
            yield HierarchyParams(kind, n, tuple(k))
