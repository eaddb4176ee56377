#!/usr/bin/env python
# ./prolim/src/main.py

import json
import logging
import sys
from pathlib import Path

import click

from prolim.src.errors import ConfigError
from prolim.src.loggers import configure_logging
from prolim.src.loggers.setup_loggers import LOG_LEVELS
from prolim.src.suites.config import FORMATS, SuiteConfig
from prolim.src.suites.formatter import emit_report
from prolim.src.suites.runner import SuiteRunner
from prolim.src.version import __version__

logger = logging.getLogger("prolim.main")

EXIT_OK, EXIT_FAILED, EXIT_CONFIG = 0, 1, 2


def load_config(path: Path | None) -> SuiteConfig:
    """
    Read a JSON config, or fall back to the default towers and suites.

    Raises:
        ConfigError: if the file is unreadable or invalid
    """
    if path is None:
        return SuiteConfig.default()
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, UnicodeDecodeError) as e:
        raise ConfigError(f"Cannot read config {path}: {e}")
    except json.JSONDecodeError as e:
        raise ConfigError(f"Config {path} is not valid JSON: {e}")
    return SuiteConfig.from_dict(data)


@click.command(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("--config", "config_path", type=click.Path(dir_okay=False, path_type=Path),
              help="JSON suite configuration (default: every suite on the default towers).")
@click.option("--suite", "suites", multiple=True,
              help="Suite to run; repeatable, overrides the config (prop21, xa, nakayama, kappa, torpm, fsscan, all).")
@click.option("--out", "out", type=click.Path(dir_okay=False, path_type=Path),
              help="Write the report here instead of stdout.")
@click.option("--format", "fmt", type=click.Choice(FORMATS), default=None,
              help="Report format (default json).")
@click.option("--max-group-order", type=int, envvar="PROLIM_MAX_ORDER", default=None,
              help="Cap on the order of the top group (default 128).")
@click.option("--seed", type=int, default=None, help="Seed for the randomised suites.")
@click.option("--parallel/--no-parallel", default=None, help="Process towers in a process pool.")
@click.option("--log-level", type=click.Choice(LOG_LEVELS, case_sensitive=False), default="WARNING",
              show_default=True)
@click.option("--log-file", type=click.Path(dir_okay=False, path_type=Path), default=None)
@click.version_option(__version__, prog_name="prolim")
def cli(config_path, suites, out, fmt, max_group_order, seed, parallel, log_level, log_file):
    """Verify finite-level identities of towers of p-group rings."""
    configure_logging(log_level, log_file)
    try:
        config = load_config(config_path)
        overrides = {
            key: value for key, value in {
                "suites": list(suites) or None,
                "output": out,
                "format": fmt,
                "max_group_order": max_group_order,
                "seed": seed,
                "parallel": parallel,
            }.items() if value is not None
        }
        if overrides:
            config.update(**overrides)
        logger.debug(f"Configuration: {config}")
        report = SuiteRunner(config).run()
    except ConfigError as e:
        logger.error(f"Configuration error: {e}")
        click.echo(f"Configuration error: {e}", err=True)
        sys.exit(EXIT_CONFIG)

    payload = emit_report(report, config.format)
    if config.output is not None:
        config.output.parent.mkdir(parents=True, exist_ok=True)
        config.output.write_bytes(payload)
        logger.info(f"Report written to {config.output}")
    else:
        stream = click.get_binary_stream("stdout")
        stream.write(payload)
        stream.flush()
    sys.exit(report.exit_code)


if __name__ == "__main__":
    cli()
