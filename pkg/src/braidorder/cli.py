"""Command line front end."""

from __future__ import annotations

import json

import click

from .canonical import canonical_form
from .cutseq import (
    InvalidSequenceError,
    format_sequence,
    parse_sequence,
    word_to_cutseq,
)
from .geometry import validate
from .oracle import braid_equal
from .order import Ordering, compare, sign
from .words import WordError, format_word, parse_word


def _infer_strands(*texts: str) -> int:
    best = 2
    for text in texts:
        for tok in text.split():
            try:
                best = max(best, abs(int(tok)) + 1)
            except ValueError as exc:
                raise click.ClickException(f"bad generator {tok!r}") from exc
    return best


def _parse(text: str, n: int | None, *context: str):
    if n is None:
        n = _infer_strands(text, *context)
    try:
        return parse_word(text, n)
    except WordError as exc:
        raise click.ClickException(str(exc)) from exc


strands_option = click.option(
    "-n", "--strands", type=int, default=None, help="number of strands (default: inferred)"
)
json_option = click.option("--json", "as_json", is_flag=True, help="emit JSON")

# words like "-2 1" start with a dash; don't let them parse as options
word_args = {"ignore_unknown_options": True}


@click.group()
def main():
    """Decide and exhibit the left-invariant order on braid words.

    Words are space-separated nonzero integers: "1 -2" means the first
    generator followed by the inverse of the second.
    """


@main.command("sign", context_settings=word_args)
@click.argument("word")
@strands_option
@json_option
def sign_cmd(word, strands, as_json):
    """Whether WORD is a positive, negative, or trivial braid."""
    res = sign(_parse(word, strands))
    if as_json:
        click.echo(json.dumps({"kind": res.kind, "index": res.index}))
    else:
        click.echo(str(res))


@main.command("compare", context_settings=word_args)
@click.argument("left")
@click.argument("right")
@strands_option
@json_option
def compare_cmd(left, right, strands, as_json):
    """Order LEFT against RIGHT: prints <, =, or >."""
    if strands is None:
        strands = _infer_strands(left, right)
    a = _parse(left, strands)
    b = _parse(right, strands)
    out = {Ordering.LESS: "<", Ordering.EQUAL: "=", Ordering.GREATER: ">"}[compare(a, b)]
    if as_json:
        click.echo(json.dumps({"order": out}))
    else:
        click.echo(out)


@main.command("canonical", context_settings=word_args)
@click.argument("word")
@strands_option
@json_option
def canonical_cmd(word, strands, as_json):
    """The canonical form of WORD."""
    res = canonical_form(_parse(word, strands))
    if as_json:
        click.echo(
            json.dumps(
                {
                    "word": format_word(res.word),
                    "kind": res.sign.kind,
                    "index": res.sign.index,
                    "iterations": res.iterations,
                }
            )
        )
    else:
        click.echo(format_word(res.word))


@main.command("cutseq", context_settings=word_args)
@click.argument("word")
@strands_option
@json_option
def cutseq_cmd(word, strands, as_json):
    """The reduced cutting sequence of WORD's curve diagram."""
    seq = word_to_cutseq(_parse(word, strands))
    if as_json:
        click.echo(json.dumps({"sequence": format_sequence(seq), "strands": seq.n}))
    else:
        click.echo(format_sequence(seq))


@main.command("validate")
@click.argument("sequence")
@json_option
def validate_cmd(sequence, as_json):
    """Whether SEQUENCE is realized by an actual curve diagram."""
    try:
        seq = parse_sequence(sequence)
    except InvalidSequenceError as exc:
        raise click.ClickException(str(exc)) from exc
    res = validate(seq)
    if as_json:
        click.echo(json.dumps({"valid": res.ok, "reason": res.reason}))
    elif res.ok:
        click.echo("valid")
    else:
        click.echo(f"invalid: {res.reason}")


@main.command("equal", context_settings=word_args)
@click.argument("left")
@click.argument("right")
@strands_option
@json_option
def equal_cmd(left, right, strands, as_json):
    """Whether LEFT and RIGHT are the same braid (by free-group action)."""
    if strands is None:
        strands = _infer_strands(left, right)
    a = _parse(left, strands)
    b = _parse(right, strands)
    res = braid_equal(a, b)
    if as_json:
        click.echo(json.dumps({"equal": res}))
    else:
        click.echo("true" if res else "false")
