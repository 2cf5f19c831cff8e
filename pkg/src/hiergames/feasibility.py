"""Feasibility of systems of linear inequalities over the rationals.

Constraints are pairs ``(a, b)`` of integer data meaning ``a . w >= b``.
Variables are eliminated one at a time by pairing lower with upper
bounds, so everything stays in exact integer arithmetic until a witness
point is read back.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import CapacityError

Constraint = tuple[tuple[int, ...], int]

CONSTRAINT_LIMIT = 200_000


def _reduce(a: tuple[int, ...], b: int) -> Constraint:
    g = 0
    for x in a:
        g = gcd(g, x)
    g = gcd(g, b)
    if g > 1:
        return tuple(x // g for x in a), b // g
    return a, b


def feasible_point(
    constraints: list[Constraint], num_vars: int
) -> tuple[Fraction, ...] | None:
    """A rational point satisfying every constraint, or None.

    Raises ``CapacityError`` if elimination grows the system past
    ``CONSTRAINT_LIMIT`` rows.
    """
    original: list[Constraint] = []
    for a, b in constraints:
        row = tuple(int(x) for x in a)
        if len(row) != num_vars:
            raise ValueError(
                f"constraint {row} does not have {num_vars} coefficients"
            )
        original.append(_reduce(row, int(b)))

    rows = sorted(set(original))
    recorded: list[tuple[int, list[Constraint], list[Constraint]]] = []
    for v in range(num_vars - 1, -1, -1):
        lows: list[Constraint] = []
        highs: list[Constraint] = []
        rest: list[Constraint] = []
        for a, b in rows:
            if a[v] > 0:
                lows.append((a, b))
            elif a[v] < 0:
                highs.append((a, b))
            else:
                rest.append((a, b))
        recorded.append((v, lows, highs))

        combined = set()
        for pa, pb in lows:
            for qa, qb in highs:
                mp = -qa[v]
                mq = pa[v]
                na = tuple(mp * x + mq * y for x, y in zip(pa, qa))
                nb = mp * pb + mq * qb
                combined.add(_reduce(na, nb))

        rows = []
        for a, b in sorted(set(rest) | combined):
            if any(a):
                rows.append((a, b))
            elif b > 0:
                return None
        if len(rows) > CONSTRAINT_LIMIT:
            raise CapacityError(
                f"variable elimination produced {len(rows)} constraints, "
                f"over the limit of {CONSTRAINT_LIMIT}"
            )

    for a, b in rows:
        if b > 0:
            return None

    point = [Fraction(0)] * num_vars
    for v, lows, highs in reversed(recorded):
        best_low: Fraction | None = None
        for a, b in lows:
            partial = sum(
                Fraction(a[u]) * point[u] for u in range(v) if a[u]
            )
            bound = (Fraction(b) - partial) / a[v]
            if best_low is None or bound > best_low:
                best_low = bound
        if best_low is not None:
            point[v] = best_low
            continue
        best_high: Fraction | None = None
        for a, b in highs:
            partial = sum(
                Fraction(a[u]) * point[u] for u in range(v) if a[u]
            )
            bound = (Fraction(b) - partial) / a[v]
            if best_high is None or bound < best_high:
                best_high = bound
        if best_high is None:
            point[v] = Fraction(0)
        else:
            point[v] = Fraction(0) if 0 <= best_high else best_high

    for a, b in original:
        value = sum(Fraction(x) * point[u] for u, x in enumerate(a) if x)
        assert value >= b, "elimination produced an invalid witness"
    return tuple(point)
