"""
Command-line interface for flashmove
"""
import json
from dataclasses import replace

import click

from ..config.settings import configure_logging, load_settings
from ..coordinator.coordinator import MovementCoordinator, parse_sizes
from ..decompose.tools import block_permutation_sets, semi_cycles
from ..flash_sim.tools import read_trace, write_trace
from ..instance_model.tools import all_pairs_instance, parse, random_instance, serialize, validate
from ..labelling.reduction import parse_graph, reduce_independent_set
from ..oracle.tools import WIDE_FIELD_ASSUMPTION
from ..planners.models import Algorithm, LabellingStrategy
from ..planners.tools import plan_summary
from .middleware import EXIT_VERIFICATION, handle_errors, initialize_middleware

ALGORITHMS = [algorithm.value for algorithm in Algorithm]
STRATEGIES = [strategy.value for strategy in LabellingStrategy]


def _coordinator(ctx: click.Context) -> MovementCoordinator:
    return ctx.find_root().obj['coordinator']


def _seed(ctx: click.Context, seed: int) -> int:
    """FLASHMOVE_SEED wins over --seed"""
    override = ctx.find_root().obj['settings'].seed_override
    return seed if override is None else override


@click.group()
@click.option('--log-level', default=None, help='Overrides FLASHMOVE_LOG_LEVEL.')
@click.pass_context
@handle_errors
def cli(ctx, log_level):
    """Plan, replay and analyse flash data-movement instances."""
    settings = load_settings()
    if log_level:
        settings = replace(settings, log_level=log_level.upper())
    configure_logging(settings.log_level)
    initialize_middleware(ctx, settings)
    ctx.obj['coordinator'] = MovementCoordinator(settings)


@cli.command()
@click.option('-n', 'n', type=int, required=True, help='Number of data blocks.')
@click.option('-m', 'm', type=int, required=True, help='Pages per block.')
@click.option('--seed', type=int, default=0, show_default=True)
@click.option('--all-pairs', is_flag=True, help='Every block exchanges data with every other block (needs m >= n).')
@click.option('-o', '--output', type=click.File('w'), default='-')
@click.pass_context
@handle_errors
def gen(ctx, n, m, seed, all_pairs, output):
    """Generate a random instance."""
    spec = all_pairs_instance(n, m) if all_pairs else random_instance(n, m, _seed(ctx, seed))
    output.write(serialize(spec))


@cli.command('validate')
@click.argument('instance', type=click.File('r'))
@handle_errors
def validate_command(instance):
    """Check that an instance is a valid movement."""
    report = validate(parse(instance.read(), check=False))
    if not report.ok:
        click.echo(f"invalid: {report.message}")
        click.get_current_context().exit(EXIT_VERIFICATION)
    click.echo("ok")


@cli.command()
@click.argument('instance', type=click.File('r'))
@handle_errors
def decompose(instance):
    """Print the block-permutation sets and their semi-cycles as JSON."""
    spec = parse(instance.read())
    sets = []
    for k, bps in enumerate(block_permutation_sets(spec), start=1):
        cycles = [
            {"blocks": list(cycle.blocks), "pages": list(cycle.pages), "tail": cycle.tail}
            for cycle in semi_cycles(bps, spec)
        ]
        sets.append({"set": k, "pages": list(bps.pages), "cycles": cycles})
    click.echo(json.dumps(sets))


@cli.command()
@click.option('--alg', 'algorithm', type=click.Choice(ALGORITHMS), required=True)
@click.option('--labelling', 'strategy', type=click.Choice(STRATEGIES), default='exact', show_default=True)
@click.option('--y', 'y', type=int, default=None, help='Run the linear planner at this parameter.')
@click.argument('instance', type=click.File('r'))
@click.option('-o', '--output', type=click.File('w'), default='-')
@click.pass_context
@handle_errors
def plan(ctx, algorithm, strategy, y, instance, output):
    """Write a movement plan as a JSON-lines trace."""
    coordinator = _coordinator(ctx)
    spec = parse(instance.read())
    movement = coordinator.plan(spec, Algorithm(algorithm), LabellingStrategy(strategy), y=y)
    output.write(write_trace(movement, w=coordinator.settings.field_width))
    summary = plan_summary(movement)
    profile = " ".join(str(count) for count in summary["erase_profile"])
    click.echo(
        f"{summary['algorithm']}: {summary['erasures']} erasures, {summary['writes']} writes, per block {profile}",
        err=True,
    )


@cli.command()
@click.argument('instance', type=click.File('r'))
@click.argument('plan_file', metavar='PLAN', type=click.File('r'))
@click.option('--payload-seed', type=int, default=0, show_default=True)
@click.option('-o', '--trace-out', type=click.File('w'), default=None,
              help='Write the replayed trace with its verdict.')
@click.pass_context
@handle_errors
def verify(ctx, instance, plan_file, payload_seed, trace_out):
    """Replay a plan; print erase counts per block and the verdict."""
    coordinator = _coordinator(ctx)
    spec = parse(instance.read())
    movement = read_trace(plan_file.read(), spec)
    result = coordinator.verify(spec, movement, payload_seed=payload_seed)
    for name, count in coordinator.erase_report(movement, result).items():
        click.echo(f"{name}\t{count}")
    click.echo(f"total\t{result.total_erasures}")
    click.echo(f"verdict\t{result.verdict.describe()}")
    if trace_out is not None:
        trace_out.write(write_trace(movement, result, w=coordinator.settings.field_width))
    if not result.verdict.success:
        ctx.exit(EXIT_VERIFICATION)


@cli.command()
@click.option('--exact/--greedy', default=True, show_default=True)
@click.argument('instance', type=click.File('r'))
@click.pass_context
@handle_errors
def label(ctx, exact, instance):
    """Find a canonical labelling with small y."""
    spec = parse(instance.read())
    strategy = LabellingStrategy.EXACT if exact else LabellingStrategy.GREEDY
    labelling = _coordinator(ctx).label(spec, strategy)
    click.echo(f"ordering\t{' '.join(str(b) for b in labelling.ordering)}")
    click.echo(f"y\t{labelling.y}")
    click.echo(f"erasures\t{labelling.erasures}")
    if exact:
        click.echo(f"minimum\t{labelling.erasures}\t(assumes {WIDE_FIELD_ASSUMPTION})")


@cli.command()
@click.argument('graph', type=click.File('r'))
@click.option('-o', '--output', type=click.File('w'), default='-')
@handle_errors
def reduce(graph, output):
    """Build the movement instance encoding an independent-set problem."""
    output.write(serialize(reduce_independent_set(parse_graph(graph.read()))))


@cli.command()
@click.option('--sizes', required=True, help='Comma-separated NxM list, e.g. 4x2,8x1.')
@click.option('--seeds', type=int, default=1, show_default=True, help='Instances per size.')
@click.option('--seed', type=int, default=0, show_default=True, help='First seed.')
@click.option('--alg', 'algorithms', type=click.Choice(ALGORITHMS), multiple=True)
@click.option('--timing/--no-timing', default=True, show_default=True)
@click.option('--workers', type=int, default=1, show_default=True)
@click.option('-o', '--output', type=click.File('w'), default='-')
@click.pass_context
@handle_errors
def bench(ctx, sizes, seeds, seed, algorithms, timing, workers, output):
    """Erasure-count table per algorithm over random instances."""
    coordinator = _coordinator(ctx)
    selected = [Algorithm(a) for a in algorithms] or list(Algorithm)
    rows = coordinator.bench(
        parse_sizes(sizes),
        seeds,
        algorithms=selected,
        base_seed=_seed(ctx, seed),
        timing=timing,
        workers=workers,
    )
    output.write(coordinator.bench_table(rows))
