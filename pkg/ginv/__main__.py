import logging

import click

from ginv import config

logging.basicConfig(level=config.LOG_LEVEL)

from ginv.commands import Settings, get_commands


@click.group()
@click.option("--aut-bound", type=int, envvar="GI_AUT_BOUND", default=config.AUT_BOUND, show_default=True,
              help="Largest finite group whose automorphisms are enumerated.")
@click.option("--tuple-bound", type=int, envvar="GI_TUPLE_BOUND", default=config.TUPLE_BOUND, show_default=True,
              help="Largest number of candidate tuples in one search.")
@click.option("--index-bound", type=int, envvar="GI_INDEX_BOUND", default=config.INDEX_BOUND, show_default=True,
              help="Largest leading index of instantiated relations.")
@click.option("--log-level", envvar="GI_LOG_LEVEL", default=config.LOG_LEVEL, show_default=True)
@click.option("--format", "output_format", type=click.Choice(["text", "json"]), default="text", show_default=True)
@click.pass_context
def cli(ctx: click.Context, aut_bound, tuple_bound, index_bound, log_level, output_format):
    """Invariants and classification of products of SFT groupoids."""
    logging.getLogger().setLevel(log_level.upper())
    ctx.obj = Settings(
        aut_bound=aut_bound,
        tuple_bound=tuple_bound,
        index_bound=index_bound,
        output_format=output_format,
    )


for command in get_commands():
    cli.add_command(command)


def main():
    cli()


if __name__ == '__main__':
    main()
