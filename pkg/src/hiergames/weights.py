"""Weightedness of games: closed-form decisions for the two hierarchical
families, trading transforms that certify the negative answers, and
exact weight synthesis for arbitrary multiset games.

A game is weighted when some nonnegative level weights and a quota make
exactly the winning coalitions reach the quota.  A trading transform
refutes this: a list of winning coalitions whose players can be
repartitioned into equally many losing coalitions, which no single
weighting can allow.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .bruteforce import find_repartition
from .errors import (
    InvalidParamsError,
    NoCertificateError,
    NotCompleteError,
)
from .feasibility import feasible_point
from .games import (
    Coalition,
    MultisetGame,
    _box,
    is_complete,
    is_winning,
    maximal_losing,
    shift_minimal_winning,
)
from .hierarchy import (
    CONJUNCTIVE,
    DISJUNCTIVE,
    HierarchyParams,
    dual_params,
)


@dataclass(frozen=True)
class TradingTransform:
    """Paired lists of coalitions, one side winning and one losing.

    Construction does not enforce any of that; ``is_balanced`` and
    ``verify_trading_transform`` check the properties separately so that
    broken transforms can be represented and reported.
    """

    x_side: tuple[Coalition, ...]
    y_side: tuple[Coalition, ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self,
            "x_side",
            tuple(tuple(int(v) for v in c) for c in self.x_side),
        )
        object.__setattr__(
            self,
            "y_side",
            tuple(tuple(int(v) for v in c) for c in self.y_side),
        )

    @property
    def length(self) -> int:
        return len(self.x_side)

    @property
    def is_balanced(self) -> bool:
        """Both sides list equally many coalitions of one width, with the
        same total player counts level by level."""
        xs, ys = self.x_side, self.y_side
        if not xs or len(xs) != len(ys):
            return False
        widths = {len(c) for c in xs} | {len(c) for c in ys}
        if len(widths) != 1:
            return False
        return tuple(map(sum, zip(*xs))) == tuple(map(sum, zip(*ys)))


@dataclass(frozen=True)
class WeightedRepresentation:
    weights: tuple[Fraction, ...]
    quota: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "weights", tuple(Fraction(w) for w in self.weights)
        )
        object.__setattr__(self, "quota", Fraction(self.quota))


@dataclass(frozen=True)
class WeightednessDecision:
    """Answer of the closed-form test, with the first matching case."""

    weighted: bool
    case: int | None


def _disj_case_2(n: tuple[int, ...], k: tuple[int, ...]) -> bool:
    return len(n) == 2 and k[1] == k[0] + 1


def _disj_case_3(n: tuple[int, ...], k: tuple[int, ...]) -> bool:
    return len(n) == 2 and n[1] == k[1] - k[0] + 1


def _disj_case_4(n: tuple[int, ...], k: tuple[int, ...]) -> bool:
    m = len(n)
    if m not in (2, 3) or k[0] != 1:
        return False
    if m == 2:
        return True
    return _disj_case_2(n[1:], k[1:]) or _disj_case_3(n[1:], k[1:])


def _disj_case_5(n: tuple[int, ...], k: tuple[int, ...]) -> bool:
    m = len(n)
    if m not in (2, 3, 4) or k[-1] < k[-2] + n[-1]:
        return False
    nn, kk = n[:-1], k[:-1]
    return (
        len(nn) == 1
        or _disj_case_2(nn, kk)
        or _disj_case_3(nn, kk)
        or _disj_case_4(nn, kk)
    )


def is_weighted_disjunctive(params: HierarchyParams) -> WeightednessDecision:
    """Closed-form weightedness test for canonical disjunctive parameters.

    The weighted parameter sets fall into five families, checked in
    order: a single level; two levels with consecutive thresholds; two
    levels where the bottom level is exactly large enough to matter; a
    top threshold of one over at most three levels whose tail is again
    of the two-level weighted shapes; and a powerless last level on top
    of a weighted truncation.  Everything else, in particular anything
    with five or more levels, is not weighted.
    """
    if params.kind != DISJUNCTIVE:
        raise InvalidParamsError("disjunctive parameters expected")
    if not params.is_canonical:
        raise InvalidParamsError(
            "parameters must be canonical, apply canonical_params first"
        )
    n, k = params.n, params.k
    if len(n) == 1:
        return WeightednessDecision(True, 1)
    for case, test in (
        (2, _disj_case_2),
        (3, _disj_case_3),
        (4, _disj_case_4),
        (5, _disj_case_5),
    ):
        if test(n, k):
            return WeightednessDecision(True, case)
    return WeightednessDecision(False, None)


def _conj_case_2(n: tuple[int, ...], k: tuple[int, ...]) -> bool:
    return len(n) == 2 and k[1] == k[0] + 1


def _conj_case_3(n: tuple[int, ...], k: tuple[int, ...]) -> bool:
    return len(n) == 2 and n[1] == k[1] - k[0] + 1


def _conj_case_4(n: tuple[int, ...], k: tuple[int, ...]) -> bool:
    m = len(n)
    if m not in (2, 3) or k[0] != n[0]:
        return False
    if m == 2:
        return True
    return k[2] == k[1] + 1 or n[2] == k[2] - k[1] + 1


def _conj_case_5(n: tuple[int, ...], k: tuple[int, ...]) -> bool:
    m = len(n)
    if m not in (2, 3, 4) or k[-1] != k[-2]:
        return False
    nn, kk = n[:-1], k[:-1]
    return (
        len(nn) == 1
        or _conj_case_2(nn, kk)
        or _conj_case_3(nn, kk)
        or _conj_case_4(nn, kk)
    )


def is_weighted_conjunctive(params: HierarchyParams) -> WeightednessDecision:
    """Closed-form weightedness test for canonical conjunctive parameters.

    Mirrors the disjunctive test through duality; the case families
    correspond under the threshold complement, though not by number.
    """
    if params.kind != CONJUNCTIVE:
        raise InvalidParamsError("conjunctive parameters expected")
    if not params.is_canonical:
        raise InvalidParamsError(
            "parameters must be canonical, apply canonical_params first"
        )
    n, k = params.n, params.k
    if len(n) == 1:
        return WeightednessDecision(True, 1)
    for case, test in (
        (2, _conj_case_2),
        (3, _conj_case_3),
        (4, _conj_case_4),
        (5, _conj_case_5),
    ):
        if test(n, k):
            return WeightednessDecision(True, case)
    return WeightednessDecision(False, None)


def is_weighted(params: HierarchyParams) -> WeightednessDecision:
    if params.kind == DISJUNCTIVE:
        return is_weighted_disjunctive(params)
    return is_weighted_conjunctive(params)


def _disjunctive_certificate(
    n: tuple[int, ...], k: tuple[int, ...]
) -> tuple[list[Coalition], list[Coalition]]:
    m = len(n)
    if m >= 2 and k[-1] >= k[-2] + n[-1]:
        # The last level is powerless, certify the truncation and park
        # zero players there.
        xs, ys = _disjunctive_certificate(n[:-1], k[:-1])
        return [c + (0,) for c in xs], [c + (0,) for c in ys]
    if k[0] == 1:
        # A top threshold of one makes the top level act alone, the
        # obstruction lives in the tail.
        xs, ys = _disjunctive_certificate(n[1:], k[1:])
        return [(0, *c) for c in xs], [(0, *c) for c in ys]
    if m == 2:
        d = k[1] - k[0] + 2
        xs = [(k[0], 0), (k[0] - 2, d)]
        ys = [(k[0] - 1, d // 2), (k[0] - 1, d - d // 2)]
        return xs, ys
    # Three or more levels, top threshold at least two, no powerless
    # tail: two winning coalitions built from the first three levels can
    # always be repartitioned into two losing ones.  Which shape works
    # depends on how far down the third threshold reaches.
    k1, k3 = k[0], k[2]
    n2, n3 = n[1], n[2]
    if k3 <= n3:
        xs = [(k1, 0, 0), (0, 0, k3)]
        ys = [(k1 - 1, 0, 2), (1, 0, k3 - 2)]
    elif k3 <= n2 + n3:
        xs = [(k1, 0, 0), (0, k3 - n3, n3)]
        ys = [(k1 - 1, 1, 1), (1, k3 - n3 - 1, n3 - 1)]
    else:
        xs = [(k1, 0, 0), (k3 - n2 - n3, n2, n3)]
        ys = [(k1 - 1, 1, 1), (k3 - n2 - n3 + 1, n2 - 1, n3 - 1)]
    pad = (0,) * (m - 3)
    return [c + pad for c in xs], [c + pad for c in ys]


def certificate_of_nonweightedness(params: HierarchyParams) -> TradingTransform:
    """A two-by-two trading transform witnessing that the game is not
    weighted.

    Raises ``NoCertificateError`` for weighted parameters.  Conjunctive
    parameters are certified through their dual: complements swap the
    winning and losing sides.
    """
    decision = is_weighted(params)
    if decision.weighted:
        raise NoCertificateError(
            "the game is weighted, no trading transform exists"
        )
    if params.kind == DISJUNCTIVE:
        xs, ys = _disjunctive_certificate(params.n, params.k)
        return TradingTransform(tuple(xs), tuple(ys))
    mirrored = certificate_of_nonweightedness(dual_params(params))
    n = params.n
    xs = tuple(
        tuple(s - v for s, v in zip(n, c)) for c in mirrored.y_side
    )
    ys = tuple(
        tuple(s - v for s, v in zip(n, c)) for c in mirrored.x_side
    )
    return TradingTransform(xs, ys)


def verify_trading_transform(
    game: MultisetGame, transform: TradingTransform
) -> bool:
    """Check a transform against a game: balanced, all of ``x_side``
    winning, all of ``y_side`` losing.

    Coalitions that do not fit the game raise, everything else just
    makes the answer False.
    """
    x_wins = [is_winning(game, c) for c in transform.x_side]
    y_wins = [is_winning(game, c) for c in transform.y_side]
    if not transform.is_balanced:
        return False
    return all(x_wins) and not any(y_wins)


def synthesize_weights(game: MultisetGame) -> WeightedRepresentation | None:
    """Exact nonnegative weights and quota separating winning from
    losing, or None when the game is not weighted.

    Requires each minimal winning coalition to outweigh each maximal
    losing one by at least one, which a weighted game can always be
    scaled to satisfy.  The quota is the smallest winning weight.
    """
    m = game.num_levels
    wins = sorted(game.min_winning)
    losses = sorted(maximal_losing(game))
    diffs = {
        tuple(x - y for x, y in zip(w, lose)) for w in wins for lose in losses
    }
    # A difference vector dominating another adds nothing, weights being
    # nonnegative.
    pruned = [
        d
        for d in diffs
        if not any(
            e != d and all(a <= b for a, b in zip(e, d)) for e in diffs
        )
    ]
    constraints = [(d, 1) for d in sorted(pruned)]
    for i in range(m):
        constraints.append(
            (tuple(1 if j == i else 0 for j in range(m)), 0)
        )
    point = feasible_point(constraints, m)
    if point is None:
        return None
    quota = min(
        sum(Fraction(x) * w for x, w in zip(point, win)) for win in wins
    )
    return WeightedRepresentation(point, Fraction(quota))


def separates(game: MultisetGame, rep: WeightedRepresentation) -> bool:
    """Whether the representation classifies every coalition correctly."""
    if len(rep.weights) != game.num_levels:
        raise ValueError(
            f"representation has {len(rep.weights)} weights for a game "
            f"with {game.num_levels} levels"
        )
    table = game._winning_table
    for idx, c in enumerate(_box(game.sizes)):
        total = sum(w * x for w, x in zip(rep.weights, c))
        if table[idx]:
            if total < rep.quota:
                return False
        elif total >= rep.quota:
            return False
    return True


def search_trading_transform(
    game: MultisetGame, max_len: int = 4
) -> TradingTransform | None:
    """Exhaustive search for a trading transform of length up to
    ``max_len``.

    The winning side ranges over multisets of shift-minimal winning
    coalitions, which is enough for games whose levels are strictly
    ordered by desirability; other complete games fall back to all
    minimal winning coalitions.  Incomplete games are rejected.
    """
    if max_len < 2:
        raise ValueError("max_len must be at least 2")
    if not is_complete(game):
        raise NotCompleteError(
            "trading transform search needs a complete game"
        )
    try:
        picks = sorted(shift_minimal_winning(game))
    except NotCompleteError:
        picks = sorted(game.min_winning)
    table = game._winning_table
    strides = game._table_strides

    def losing_test(c: Coalition) -> bool:
        return not table[sum(x * s for x, s in zip(c, strides))]

    for j in range(2, max_len + 1):
        for combo in itertools.combinations_with_replacement(picks, j):
            pool = tuple(map(sum, zip(*combo)))
            parts = find_repartition(game.sizes, pool, j, losing_test)
            if parts is not None:
                return TradingTransform(combo, parts)
    return None
