# Copyright 2026 The genmom Team. All rights reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Command-line interface."""
import logging
from typing import Optional, Tuple

import click

from .config import AVAILABLE_FORMATS, AVAILABLE_SUITES, CURVE_QUANTITIES, INTEGER_PARAMS, SUITE_ALL
from .core_objects import CurveConfig, RunConfig
from .runner import Runner, get_threads
from .utils import _parse_assignments


@click.group()
@click.version_option()
@click.option("-v", "--verbose", is_flag=True, help="Log suite progress.")
def main(verbose: bool) -> None:
    """Generalized momentum and position operators: verification suites."""
    if verbose:
        logging.basicConfig(level=logging.INFO)


@click.command()
@click.option(
    "--suite",
    required=True,
    type=click.Choice(AVAILABLE_SUITES + [SUITE_ALL]),
    help="Suite to run.",
)
@click.option(
    "--set", "assignments", multiple=True, metavar="KEY=VALUE", help="Override a parameter."
)
@click.option("--out", "output_path", default=None, help="Write the report to this path.")
@click.option(
    "--format", "fmt", type=click.Choice(AVAILABLE_FORMATS), default="json", help="Report format."
)
@click.pass_context
def run(
    ctx: click.Context,
    suite: str,
    assignments: Tuple[str, ...],
    output_path: Optional[str],
    fmt: str,
) -> None:
    """Run a verification suite and write its report."""
    try:
        params = _parse_assignments(assignments, INTEGER_PARAMS)
        config = RunConfig(suite=suite, params=params, output_path=output_path, format=fmt)
        threads = get_threads()
    except ValueError as e:
        raise click.UsageError(str(e)) from e

    with Runner(threads=threads) as runner:
        try:
            report = runner.run(config)
        except ValueError as e:
            raise click.UsageError(str(e)) from e
    if not output_path:
        click.echo(report.render(fmt), nl=False)
    click.echo(
        f"{len(report.records)} checks, {len(report.failed)} failed, {len(report.flagged)} flagged",
        err=True,
    )
    ctx.exit(report.exit_code)


@click.command()
@click.option(
    "--quantity", required=True, type=click.Choice(CURVE_QUANTITIES), help="Quantity to tabulate."
)
@click.option(
    "--set", "assignments", multiple=True, metavar="KEY=VALUE", help="Override a parameter."
)
@click.option("--out", "output_path", default=None, help="Write the CSV to this path.")
def curve(quantity: str, assignments: Tuple[str, ...], output_path: Optional[str]) -> None:
    """Write a plot-ready curve as CSV."""
    try:
        params = _parse_assignments(assignments, INTEGER_PARAMS)
        config = CurveConfig(quantity=quantity, params=params, output_path=output_path)
        threads = get_threads()
    except ValueError as e:
        raise click.UsageError(str(e)) from e

    with Runner(threads=threads) as runner:
        try:
            text = runner.emit_curve(config)
        except ValueError as e:
            raise click.UsageError(str(e)) from e
    if not output_path:
        click.echo(text, nl=False)


main.add_command(run)
main.add_command(curve)


if __name__ == "__main__":
    main(prog_name="genmom")  # pragma: no cover
