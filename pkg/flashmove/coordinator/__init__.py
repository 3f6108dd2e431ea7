from .coordinator import BENCH_COLUMNS, BenchRow, MovementCoordinator, parse_sizes

__all__ = ["MovementCoordinator", "BenchRow", "BENCH_COLUMNS", "parse_sizes"]
