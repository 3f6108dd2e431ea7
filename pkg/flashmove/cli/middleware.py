"""
CLI Middleware for flashmove
"""
import logging
import time
from functools import wraps

import click

from ..config.settings import Settings
from ..errors import BudgetError, ConfigurationError, FlashMoveError, ParseError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def initialize_middleware(ctx: click.Context, settings: Settings) -> None:
    """Attach a run id and start time to the command context; log the duration on close"""
    ctx.ensure_object(dict)
    ctx.obj['start_time'] = time.time()
    ctx.obj['run_id'] = str(ctx.obj['start_time'])
    ctx.obj['settings'] = settings

    def after_command():
        duration = time.time() - ctx.obj['start_time']
        logger.info("run %s: %s finished in %.3fs", ctx.obj['run_id'], ctx.invoked_subcommand, duration)

    ctx.call_on_close(after_command)


def exit_code_for(error: FlashMoveError) -> int:
    if isinstance(error, BudgetError):
        return EXIT_BUDGET
    if isinstance(error, (ParseError, ConfigurationError)):
        return EXIT_USAGE
    return EXIT_VERIFICATION


def handle_errors(f):
    """Report flashmove errors on stderr and exit with the matching code"""
    @wraps(f)
    def decorated(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except FlashMoveError as e:
            ctx = click.get_current_context()
            run_id = (ctx.find_root().obj or {}).get('run_id', '-')
            logger.error(f"Error in run {run_id}: {str(e)}")
            click.echo(f"error: {e}", err=True)
            ctx.exit(exit_code_for(e))

    return decorated
