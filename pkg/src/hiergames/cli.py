"""Command line interface and the game document format.

A document is a short line-based description of a game.  Hierarchical
games give the kind, level sizes and thresholds:

    kind: disjunctive
    n: 2 3
    k: 2 3

Explicit games list the minimal winning count vectors instead:

    kind: explicit
    n: 3 5
    min_winning:
    0 4
    1 3
    2 0

Blank lines are ignored.  Reports are deterministic: coalition lists
are printed in ascending lexicographic order and all numbers are exact.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from typing import Sequence

from .bruteforce import expand
from .errors import (
    CapacityError,
    DocumentSyntaxError,
    DocumentValidationError,
    HierGamesError,
    NotCompleteError,
)
from .games import (
    Coalition,
    MultisetGame,
    PlayerMultiset,
    canonicalize_set_game,
    dual,
    dummy_levels,
    equivalence_classes,
    is_complete,
    shift_maximal_losing,
    shift_minimal_winning,
)
from .hierarchy import (
    CONJUNCTIVE,
    DISJUNCTIVE,
    HierarchyParams,
    build,
    canonical_params,
    dual_params,
    recognize_conjunctive,
    recognize_disjunctive,
)
from .weights import (
    certificate_of_nonweightedness,
    is_weighted,
    search_trading_transform,
    synthesize_weights,
    verify_trading_transform,
)

EXPLICIT = "explicit"

COMMANDS = (
    "build",
    "canonical",
    "dual",
    "analyze",
    "weighted",
    "certificate",
    "recognize",
)


@dataclass(frozen=True)
class GameDocument:
    """Parsed form of a game document.

    Hierarchical documents carry thresholds, explicit ones carry the
    minimal winning rows, sorted so that round-trips are exact.
    """

    kind: str
    n: PlayerMultiset
    k: tuple[int, ...] | None = None
    min_winning: tuple[Coalition, ...] | None = None

    def __post_init__(self) -> None:
        if self.kind not in (DISJUNCTIVE, CONJUNCTIVE, EXPLICIT):
            raise ValueError(f"unknown document kind {self.kind!r}")
        object.__setattr__(self, "n", tuple(int(x) for x in self.n))
        if self.kind == EXPLICIT:
            if self.k is not None or self.min_winning is None:
                raise ValueError(
                    "explicit documents carry min_winning, not thresholds"
                )
            rows = tuple(
                sorted(tuple(int(x) for x in row) for row in self.min_winning)
            )
            object.__setattr__(self, "min_winning", rows)
        else:
            if self.k is None or self.min_winning is not None:
                raise ValueError(
                    "hierarchical documents carry thresholds, not min_winning"
                )
            object.__setattr__(self, "k", tuple(int(x) for x in self.k))


def _parse_int_row(
    line_no: int, raw: str, content: str, what: str
) -> tuple[int, ...]:
    parts = content.split()
    if not parts:
        raise DocumentSyntaxError(
            f"expected at least one integer for {what}", line_no
        )
    values = []
    for token in parts:
        try:
            values.append(int(token))
        except ValueError:
            column = raw.find(token) + 1
            raise DocumentSyntaxError(
                f"{what} entry {token!r} is not an integer",
                line_no,
                column if column > 0 else 1,
            ) from None
    return tuple(values)


def parse_document(text: str) -> GameDocument:
    """Parse a document, raising ``DocumentSyntaxError`` for malformed
    text and ``DocumentValidationError`` for well-formed text that
    describes an invalid game.
    """
    entries = [
        (i + 1, line)
        for i, line in enumerate(text.splitlines())
        if line.strip()
    ]
    if not entries:
        raise DocumentSyntaxError("empty document, expected 'kind:'", 1)

    def field_of(line_no: int, raw: str, expected: str) -> str:
        name, sep, rest = raw.partition(":")
        if not sep or name.strip() != expected:
            raise DocumentSyntaxError(
                f"expected '{expected}:', got {raw.strip()!r}", line_no
            )
        return rest.strip()

    pos = 0
    kind_line, kind_raw = entries[pos]
    kind = field_of(kind_line, kind_raw, "kind")
    if kind not in (DISJUNCTIVE, CONJUNCTIVE, EXPLICIT):
        raise DocumentSyntaxError(
            f"unknown kind {kind!r}, expected disjunctive, conjunctive "
            "or explicit",
            kind_line,
        )
    pos += 1

    if pos >= len(entries):
        raise DocumentSyntaxError("expected 'n:' line", kind_line + 1)
    n_line, n_raw = entries[pos]
    n = _parse_int_row(n_line, n_raw, field_of(n_line, n_raw, "n"), "n")
    pos += 1

    if kind == EXPLICIT:
        if pos >= len(entries):
            raise DocumentSyntaxError(
                "expected 'min_winning:' line", n_line + 1
            )
        header_line, header_raw = entries[pos]
        rest = field_of(header_line, header_raw, "min_winning")
        if rest:
            raise DocumentSyntaxError(
                "coalitions go on the lines after 'min_winning:'",
                header_line,
            )
        pos += 1
        rows = []
        for line_no, raw in entries[pos:]:
            rows.append(_parse_int_row(line_no, raw, raw, "coalition"))
        try:
            MultisetGame(n, frozenset(rows))
        except HierGamesError as exc:
            if isinstance(exc, CapacityError):
                raise
            raise DocumentValidationError(str(exc), header_line) from exc
        return GameDocument(EXPLICIT, n, None, tuple(rows))

    if pos >= len(entries):
        raise DocumentSyntaxError("expected 'k:' line", n_line + 1)
    k_line, k_raw = entries[pos]
    k = _parse_int_row(k_line, k_raw, field_of(k_line, k_raw, "k"), "k")
    pos += 1
    if pos < len(entries):
        extra_line, extra_raw = entries[pos]
        raise DocumentSyntaxError(
            f"unexpected line {extra_raw.strip()!r} after thresholds",
            extra_line,
        )
    try:
        HierarchyParams(kind, n, k)
    except HierGamesError as exc:
        raise DocumentValidationError(str(exc), k_line) from exc
    return GameDocument(kind, n, k, None)


def serialize_document(doc: GameDocument) -> str:
    lines = [f"kind: {doc.kind}", "n: " + _row(doc.n)]
    if doc.kind == EXPLICIT:
        lines.append("min_winning:")
        lines.extend(_row(c) for c in doc.min_winning)
    else:
        lines.append("k: " + _row(doc.k))
    return "\n".join(lines) + "\n"


def document_game(doc: GameDocument) -> MultisetGame:
    """Materialize the game a document describes."""
    if doc.kind == EXPLICIT:
        return MultisetGame(doc.n, frozenset(doc.min_winning))
    return build(HierarchyParams(doc.kind, doc.n, doc.k))


def _row(values: Sequence[int]) -> str:
    return " ".join(str(v) for v in values)


def _rows(coalitions) -> list[str]:
    return [_row(c) for c in sorted(coalitions)]


def _explicit_doc(game: MultisetGame) -> GameDocument:
    return GameDocument(
        EXPLICIT, game.sizes, None, tuple(sorted(game.min_winning))
    )


def _params_header(params: HierarchyParams) -> list[str]:
    return [
        f"kind: {params.kind}",
        "n: " + _row(params.n),
        "k: " + _row(params.k),
    ]


def _params_doc(params: HierarchyParams) -> GameDocument:
    return GameDocument(params.kind, params.n, params.k, None)


def _cmd_build(doc: GameDocument, explicit_output: bool) -> str:
    game = document_game(doc)
    if explicit_output:
        return serialize_document(_explicit_doc(game))
    lines = [f"players: {game.total_players}", "min_winning:"]
    lines.extend(_rows(game.min_winning))
    return "\n".join(lines) + "\n"


def _cmd_canonical(doc: GameDocument, explicit_output: bool) -> str:
    if doc.kind == EXPLICIT:
        collapsed = canonicalize_set_game(expand(document_game(doc)).set_game)
        return serialize_document(_explicit_doc(collapsed))
    fixed = canonical_params(HierarchyParams(doc.kind, doc.n, doc.k))
    if explicit_output:
        return serialize_document(_explicit_doc(build(fixed)))
    return serialize_document(_params_doc(fixed))


def _cmd_dual(doc: GameDocument, explicit_output: bool) -> str:
    if doc.kind == EXPLICIT:
        return serialize_document(_explicit_doc(dual(document_game(doc))))
    fixed = canonical_params(HierarchyParams(doc.kind, doc.n, doc.k))
    mirrored = dual_params(fixed)
    if explicit_output:
        return serialize_document(_explicit_doc(build(mirrored)))
    return serialize_document(_params_doc(mirrored))


def _cmd_analyze(doc: GameDocument) -> str:
    game = document_game(doc)
    classes = equivalence_classes(game)
    dummies = dummy_levels(game)
    lines = [
        f"players: {game.total_players}",
        f"complete: {'true' if is_complete(game) else 'false'}",
        "equivalence_classes: "
        + " ".join("[" + _row(cls) + "]" for cls in classes),
        "dummy_levels: " + (_row(dummies) if dummies else "none"),
    ]
    try:
        smw = shift_minimal_winning(game)
        sml = shift_maximal_losing(game)
    except NotCompleteError:
        lines.append("shift_minimal_winning: undefined")
        lines.append("shift_maximal_losing: undefined")
    else:
        lines.append("shift_minimal_winning:")
        lines.extend(_rows(smw))
        lines.append("shift_maximal_losing:")
        lines.extend(_rows(sml))
    return "\n".join(lines) + "\n"


def _cmd_weighted(doc: GameDocument) -> str:
    if doc.kind == EXPLICIT:
        game = document_game(doc)
        rep = synthesize_weights(game)
        lines = [f"players: {game.total_players}"]
        if rep is None:
            lines.append("decision: non-weighted")
        else:
            lines.append("decision: weighted")
            lines.append("weights: " + " ".join(str(w) for w in rep.weights))
            lines.append(f"quota: {rep.quota}")
        return "\n".join(lines) + "\n"
    fixed = canonical_params(HierarchyParams(doc.kind, doc.n, doc.k))
    decision = is_weighted(fixed)
    lines = _params_header(fixed)
    if not decision.weighted:
        lines.append("decision: non-weighted")
        return "\n".join(lines) + "\n"
    rep = synthesize_weights(build(fixed))
    assert rep is not None, "closed form and synthesis disagree"
    lines.append("decision: weighted")
    lines.append(f"case: {decision.case}")
    lines.append("weights: " + " ".join(str(w) for w in rep.weights))
    lines.append(f"quota: {rep.quota}")
    return "\n".join(lines) + "\n"


def _transform_lines(transform) -> list[str]:
    lines = ["x_side:"]
    lines.extend(_row(c) for c in transform.x_side)
    lines.append("y_side:")
    lines.extend(_row(c) for c in transform.y_side)
    return lines


def _cmd_certificate(doc: GameDocument, max_len: int) -> str:
    if doc.kind == EXPLICIT:
        game = document_game(doc)
        lines = [f"players: {game.total_players}"]
        found = search_trading_transform(game, max_len)
        if found is None:
            lines.append("certificate: none")
            lines.append(f"searched_max_length: {max_len}")
        else:
            lines.append("certificate: found")
            lines.extend(_transform_lines(found))
            good = verify_trading_transform(game, found)
            lines.append(f"verified: {'true' if good else 'false'}")
        return "\n".join(lines) + "\n"
    fixed = canonical_params(HierarchyParams(doc.kind, doc.n, doc.k))
    decision = is_weighted(fixed)
    lines = _params_header(fixed)
    if decision.weighted:
        lines.append("decision: weighted")
        lines.append("certificate: none")
        return "\n".join(lines) + "\n"
    transform = certificate_of_nonweightedness(fixed)
    lines.append("decision: non-weighted")
    lines.append("certificate: found")
    lines.extend(_transform_lines(transform))
    good = verify_trading_transform(build(fixed), transform)
    lines.append(f"verified: {'true' if good else 'false'}")
    return "\n".join(lines) + "\n"


def _cmd_recognize(doc: GameDocument) -> str:
    game = document_game(doc)
    found = recognize_disjunctive(game)
    if found is None:
        found = recognize_conjunctive(game)
    if found is None:
        return "hierarchical: false\n"
    lines = ["hierarchical: true"]
    lines.extend(_params_header(found))
    return "\n".join(lines) + "\n"


def run(
    command: str,
    text: str,
    *,
    max_len: int = 4,
    explicit_output: bool = False,
) -> str:
    """Execute one CLI command over a document and return the report."""
    if command not in COMMANDS:
        raise ValueError(f"unknown command {command!r}")
    doc = parse_document(text)
    if command == "build":
        return _cmd_build(doc, explicit_output)
    if command == "canonical":
        return _cmd_canonical(doc, explicit_output)
    if command == "dual":
        return _cmd_dual(doc, explicit_output)
    if command == "analyze":
        return _cmd_analyze(doc)
    if command == "weighted":
        return _cmd_weighted(doc)
    if command == "certificate":
        return _cmd_certificate(doc, max_len)
    return _cmd_recognize(doc)


def main(argv: Sequence[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="hiergames",
        description="Analyze hierarchical simple games on multisets.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument(
        "file",
        nargs="?",
        help="game document to read, stdin when omitted or '-'",
    )
    parser.add_argument(
        "--max-len",
        type=int,
        default=4,
        help="longest trading transform the certificate search tries",
    )
    parser.add_argument(
        "--explicit-output",
        action="store_true",
        help="print full explicit documents instead of parameter summaries",
    )
    args = parser.parse_args(argv)

    try:
        if args.file is None or args.file == "-":
            text = sys.stdin.read()
        else:
            with open(args.file, encoding="utf-8") as handle:
                text = handle.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    try:
        report = run(
            args.command,
            text,
            max_len=args.max_len,
            explicit_output=args.explicit_output,
        )
    except DocumentSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (HierGamesError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    sys.stdout.write(report)
    return 0
