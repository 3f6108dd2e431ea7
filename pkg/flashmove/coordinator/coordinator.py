"""
Movement Coordinator
Routes planning, verification, labelling and benchmarking requests to the
specialist modules
"""
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..config.settings import Settings
from ..errors import ParseError
from ..flash_sim.models import ExecutionResult, Plan
from ..flash_sim.tools import execute
from ..gf_arith.field import FieldContext, get_field
from ..instance_model.models import MoveSpec
from ..instance_model.tools import random_instance
from ..labelling.models import Labelling
from ..planners.models import Algorithm, LabellingStrategy, PlannerConfig
from ..planners.tools import build_plan, resolve_labelling

logger = logging.getLogger(__name__)

BENCH_COLUMNS = ("algorithm", "n", "m", "seed", "total_erasures", "max_per_block", "wall_ms")


@dataclass(frozen=True)
class BenchRow:
    algorithm: str
    n: int
    m: int
    seed: int
    total_erasures: int
    max_per_block: int
    wall_ms: int

    def as_tsv(self) -> str:
        return "\t".join(str(getattr(self, column)) for column in BENCH_COLUMNS)


def parse_sizes(text: str) -> List[Tuple[int, int]]:
    """'4x2,8x1' -> [(4, 2), (8, 1)]"""
    sizes = []
    for token in text.split(","):
        token = token.strip().lower()
        if not token:
            continue
        try:
            n, m = (int(part) for part in token.split("x"))
        except ValueError:
            raise ParseError(f"size {token!r} is not of the form NxM", field="sizes")
        sizes.append((n, m))
    if not sizes:
        raise ParseError("no sizes given", field="sizes")
    return sizes


def _bench_case(job: Tuple[Settings, str, int, int, int, bool]) -> BenchRow:
    settings, algorithm, n, m, seed, timing = job
    coordinator = MovementCoordinator(settings)
    spec = random_instance(n, m, seed)
    started = time.perf_counter()
    _, result = coordinator.run(spec, Algorithm(algorithm), strategy=coordinator.linear_strategy(n))
    elapsed = int(round((time.perf_counter() - started) * 1000)) if timing else 0
    if not result.verdict.success:
        logger.warning("bench %s n=%d m=%d seed=%d: %s", algorithm, n, m, seed, result.verdict.describe())
    return BenchRow(algorithm, n, m, seed, result.total_erasures, result.max_per_block, elapsed)


class MovementCoordinator:
    """Single entry point for the CLI: one Settings, one field, every operation"""

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or Settings()
        self.field: FieldContext = get_field(self.settings.field_width, self.settings.reduction_poly)

    def linear_strategy(self, n: int) -> LabellingStrategy:
        """Exact labelling while the subset search fits the budget, greedy beyond"""
        return LabellingStrategy.EXACT if n <= self.settings.exact_limit else LabellingStrategy.GREEDY

    def label(self, spec: MoveSpec, strategy: LabellingStrategy = LabellingStrategy.EXACT) -> Labelling:
        return resolve_labelling(spec, strategy, self.settings)

    def plan(
        self,
        spec: MoveSpec,
        algorithm: Algorithm,
        strategy: LabellingStrategy = LabellingStrategy.EXACT,
        labelling: Optional[Labelling] = None,
        y: Optional[int] = None,
    ) -> Plan:
        config = PlannerConfig(algorithm=algorithm, strategy=strategy, labelling=labelling, y=y, field=self.field)
        return build_plan(spec, config, self.settings)

    def verify(self, spec: MoveSpec, plan: Plan, payload_seed: int = 0) -> ExecutionResult:
        return execute(spec, plan, self.settings, field=self.field, payload_seed=payload_seed)

    def run(
        self,
        spec: MoveSpec,
        algorithm: Algorithm,
        strategy: LabellingStrategy = LabellingStrategy.EXACT,
    ) -> Tuple[Plan, ExecutionResult]:
        plan = self.plan(spec, algorithm, strategy)
        return plan, self.verify(spec, plan)

    def bench(
        self,
        sizes: Sequence[Tuple[int, int]],
        seeds: int,
        algorithms: Iterable[Algorithm] = tuple(Algorithm),
        base_seed: int = 0,
        timing: bool = True,
        workers: int = 1,
    ) -> List[BenchRow]:
        """
        Plan and replay every (algorithm, size, seed) combination.

        Rows come back in input order whatever the worker count.
        """
        jobs = [
            (self.settings, algorithm.value, n, m, base_seed + offset, timing)
            for algorithm in algorithms
            for n, m in sizes
            for offset in range(seeds)
        ]
        logger.info("bench: %d cases on %d worker(s)", len(jobs), workers)
        if workers <= 1:
            return [_bench_case(job) for job in jobs]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_bench_case, jobs))

    @staticmethod
    def bench_table(rows: Iterable[BenchRow]) -> str:
        lines = ["\t".join(BENCH_COLUMNS)] + [row.as_tsv() for row in rows]
        return "\n".join(lines) + "\n"

    @staticmethod
    def erase_report(plan: Plan, result: ExecutionResult) -> Dict[str, int]:
        """Erase counts keyed by block name, B_0 .. B_n then B_0'"""
        names = [f"B_{b}" for b in range(plan.n + 1)]
        if plan.aux_blocks == 2:
            names.append("B_0'")
        return dict(zip(names, result.erase_counts))
