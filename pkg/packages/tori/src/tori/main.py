import logging
import sys
from collections.abc import Sequence
from pathlib import Path

import click
from cohomology import h1_profile, tate_minus1_profile
from glattice import GLattice, LatticeError

from .catalog import catalog_get, catalog_names
from .classify import Mode, coflabby_verdict, flabby_verdict, is_invertible, is_permutation, is_stably_permutation
from .errors import ParseError, UnknownName, ValidationError
from .lattice_file import lattice_to_file, read_lattice_file
from .rationality import rationality_verdict
from .report import (
    dump_json,
    lattice_json,
    lattice_text,
    profile_json,
    profile_text,
    report_json,
    report_text,
    resolution_json,
    verdict_json,
    verdict_text,
)
from .resolution import flabby_resolution, verify_resolution
from .verdict import SearchBounds

logger = logging.getLogger(__name__)

CATALOG_PREFIX = "catalog:"

CONTEXT_SETTINGS = dict(
    help_option_names=["-h", "--help"],
    max_content_width=120,
)

input_option = click.option(
    "-i",
    "--input",
    "source",
    required=True,
    help=f"Lattice file (JSON), or {CATALOG_PREFIX}NAME for a catalog entry",
)

format_option = click.option(
    "--format",
    "output_format",
    type=click.Choice(["json", "text"]),
    default="text",
    show_default=True,
    help="Report format",
)

output_option = click.option(
    "-o",
    "--output",
    type=click.Path(writable=True, dir_okay=False, path_type=Path),
    default=None,
    help="Write the report here instead of standard output",
)


def _load(source: str) -> tuple[str, GLattice]:
    if source.startswith(CATALOG_PREFIX):
        descriptor = catalog_get(source.removeprefix(CATALOG_PREFIX))
        return descriptor.name, descriptor.character_lattice
    path = Path(source)
    try:
        data = path.read_bytes()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from e
    file = read_lattice_file(data)
    return file.name or path.stem, file.to_lattice()


def _load_or_exit(source: str) -> tuple[str, GLattice]:
    try:
        return _load(source)
    except (ParseError, ValidationError, UnknownName, LatticeError) as e:
        click.echo(f"error: {source}: {e}", err=True)
        click.get_current_context().exit(2)


def _emit(lines: Sequence[str] | str, output: Path | None) -> None:
    text = lines if isinstance(lines, str) else "\n".join(lines) + "\n"
    if output is None:
        click.echo(text, nl=False)
    else:
        output.write_text(text)
        logger.info("report written to %s", output)


@click.group(context_settings=CONTEXT_SETTINGS)
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    default="WARNING",
    show_default=True,
    envvar="TORI_LOG_LEVEL",
    help="Logging threshold for diagnostics on standard error",
)
def main(log_level: str) -> None:
    """Rationality of algebraic tori through the cohomology of their character lattices."""
    logging.basicConfig(level=log_level.upper(), stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


@main.command(context_settings=CONTEXT_SETTINGS)
@input_option
@format_option
@output_option
def cohomology(source: str, output_format: str, output: Path | None) -> None:
    """Print the H^1 and H^-1 profiles over conjugacy classes of subgroups."""
    name, M = _load_or_exit(source)
    h1, tate = h1_profile(M), tate_minus1_profile(M)
    match output_format:
        case "json":
            document = {
                "input": lattice_json(name, M),
                "profiles": {"h1": profile_json(h1), "tate_minus1": profile_json(tate)},
            }
            _emit(dump_json(document), output)
        case "text":
            _emit(lattice_text(name, M) + profile_text("h1", h1) + profile_text("tate_minus1", tate), output)
        case _:
            raise TypeError(f"Unhandled format: {output_format}")


@main.command(context_settings=CONTEXT_SETTINGS)
@input_option
@click.option(
    "--mode",
    type=click.Choice(["strict", "paper-literal"]),
    default="strict",
    show_default=True,
    envvar="TORI_MODE",
    help="Flabby and coflabby over every subgroup (strict) or over the whole group only",
)
@click.option(
    "--rank-bound",
    type=click.IntRange(min=0),
    default=None,
    envvar="TORI_RANK_BOUND",
    help="Largest permutation lattice rank searched  [default: rank + 2|G|]",
)
@click.option(
    "--coeff-bound",
    type=click.IntRange(min=0),
    default=3,
    show_default=True,
    envvar="TORI_COEFF_BOUND",
    help="Largest absolute coefficient in candidate homomorphisms",
)
@click.option(
    "--search-limit",
    type=click.IntRange(min=0),
    default=20000,
    show_default=True,
    envvar="TORI_SEARCH_LIMIT",
    help="Candidates tried per question before answering Unknown",
)
@click.option(
    "--strict-exit/--no-strict-exit",
    default=False,
    show_default=True,
    help="Exit with status 1 when the rationality level is Undetermined",
)
@format_option
@output_option
def classify(
    source: str,
    mode: Mode,
    rank_bound: int | None,
    coeff_bound: int,
    search_limit: int,
    strict_exit: bool,
    output_format: str,
    output: Path | None,
) -> None:
    """Classify the lattice and decide the rationality level of its torus."""
    name, M = _load_or_exit(source)
    bounds = SearchBounds(rank_bound=rank_bound, coeff_bound=coeff_bound, search_limit=search_limit)

    h1, tate = h1_profile(M), tate_minus1_profile(M)
    verdicts = {
        "permutation": is_permutation(M, bounds),
        "stably_permutation": is_stably_permutation(M, bounds),
        "invertible": is_invertible(M, bounds),
        "flabby": flabby_verdict(M, mode),
        "coflabby": coflabby_verdict(M, mode),
    }
    report = rationality_verdict(M, bounds)

    match output_format:
        case "json":
            document = {
                "input": lattice_json(name, M),
                "profiles": {"h1": profile_json(h1), "tate_minus1": profile_json(tate)},
                "verdicts": {question: verdict_json(verdict) for question, verdict in verdicts.items()},
                "report": report_json(report),
            }
            _emit(dump_json(document), output)
        case "text":
            _emit(
                lattice_text(name, M)
                + profile_text("h1", h1)
                + profile_text("tate_minus1", tate)
                + [f"{question}: {verdict_text(verdict)}" for question, verdict in verdicts.items()]
                + report_text(report),
                output,
            )
        case _:
            raise TypeError(f"Unhandled format: {output_format}")

    if strict_exit and report.level == "Undetermined":
        click.get_current_context().exit(1)


@main.command(context_settings=CONTEXT_SETTINGS)
@input_option
@format_option
@output_option
def resolve(source: str, output_format: str, output: Path | None) -> None:
    """Build a flabby resolution 0 -> M -> P -> F -> 0 and re-check it."""
    name, M = _load_or_exit(source)
    r = flabby_resolution(M)
    verified = verify_resolution(r)
    match output_format:
        case "json":
            _emit(dump_json({"input": lattice_json(name, M), "resolution": resolution_json(r, verified)}), output)
        case "text":
            middle = " + ".join(f"{count} x Z[G/{H}]" for H, count in r.middle_description) or "0"
            _emit(
                lattice_text(name, M)
                + [
                    f"middle: {middle} (rank {r.middle.rank})",
                    f"quotient rank: {r.quotient.rank}",
                    f"embedding: {r.embedding.to_rows()}",
                    f"projection: {r.projection.to_rows()}",
                    f"verified: {verified}",
                ],
                output,
            )
        case _:
            raise TypeError(f"Unhandled format: {output_format}")


@main.group(context_settings=CONTEXT_SETTINGS)
def catalog() -> None:
    """Built-in tori."""


@catalog.command("list", context_settings=CONTEXT_SETTINGS)
@format_option
def catalog_list(output_format: str) -> None:
    match output_format:
        case "json":
            _emit(dump_json({"names": list(catalog_names())}), None)
        case "text":
            _emit(list(catalog_names()), None)
        case _:
            raise TypeError(f"Unhandled format: {output_format}")


@catalog.command("show", context_settings=CONTEXT_SETTINGS)
@click.argument("name")
@format_option
@output_option
def catalog_show(name: str, output_format: str, output: Path | None) -> None:
    try:
        descriptor = catalog_get(name)
    except UnknownName as e:
        click.echo(f"error: {e}", err=True)
        click.get_current_context().exit(2)

    M = descriptor.character_lattice
    match output_format:
        case "json":
            document = {
                "name": descriptor.name,
                "narrative": descriptor.narrative,
                "expected_level": descriptor.expected_level,
                "expected_witnesses": [list(H.member_indices) for H in descriptor.expected_witnesses],
                "lattice": lattice_to_file(M, descriptor.name).model_dump(mode="json", exclude_none=True),
            }
            _emit(dump_json(document), output)
        case "text":
            _emit(
                lattice_text(descriptor.name, M)
                + [f"expected level: {descriptor.expected_level}", descriptor.narrative],
                output,
            )
        case _:
            raise TypeError(f"Unhandled format: {output_format}")


@main.command(context_settings=CONTEXT_SETTINGS)
@input_option
def validate(source: str) -> None:
    name, M = _load_or_exit(source)
    click.echo(f"{name}: valid lattice of rank {M.rank} over a group of order {M.group.order}")


def run_command(argv: Sequence[str]) -> int:
    try:
        status = main.main(args=list(argv), prog_name="tori", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    return status if isinstance(status, int) else 0
