# flashmove/instance_model/tools.py
import json
import logging
import os
from typing import Any, Dict, List, Tuple

import numpy as np

from ..errors import InstanceError, ParseError
from .models import MoveSpec, Page, TransitionGraph, ValidationReport

logger = logging.getLogger(__name__)

EXAMPLES = ("example1", "example2", "example3")

# Generous ceiling on resampling; the success probability per draw is at least 1/2.
_MAX_DRAWS = 10_000


def validate(spec: MoveSpec) -> ValidationReport:
    """
    Check that (alpha, beta) is a permutation of the nm pages and that every
    block sends at least one page to another block.

    Args:
        spec: instance to check

    Returns:
        ValidationReport naming the first offending page, scanning pages in
        (block, page) order
    """
    if spec.n < 1 or spec.m < 1:
        return ValidationReport(False, f"n and m must be positive (n={spec.n}, m={spec.m})")
    if len(spec.targets) != spec.n or any(len(row) != spec.m for row in spec.targets):
        return ValidationReport(False, f"target table is not {spec.n} x {spec.m}")

    seen: Dict[Page, Page] = {}
    for i, j in spec.pages():
        a, b = spec.target(i, j)
        if not (1 <= a <= spec.n and 1 <= b <= spec.m):
            return ValidationReport(False, f"p_{i},{j} targets ({a}, {b}) outside the device", (i, j))
        if (a, b) in seen:
            first = seen[(a, b)]
            return ValidationReport(
                False,
                f"p_{i},{j} and p_{first[0]},{first[1]} both target p_{a},{b}; moves are not injective",
                (i, j),
            )
        seen[(a, b)] = (i, j)

    for i in range(1, spec.n + 1):
        if all(spec.alpha(i, j) == i for j in range(1, spec.m + 1)):
            return ValidationReport(False, f"block B_{i} keeps all its pages; no data leave it", (i, 1))

    return ValidationReport(True)


def random_instance(n: int, m: int, seed: int) -> MoveSpec:
    """
    Draw a uniformly random permutation of the nm pages, resampling until every
    block has at least one page leaving it. Deterministic in seed.
    """
    if n < 2:
        raise InstanceError(f"An instance needs at least two blocks, got n={n}")
    if m < 1:
        raise InstanceError(f"Blocks need at least one page, got m={m}")

    rng = np.random.default_rng(seed)
    for draw in range(_MAX_DRAWS):
        permutation = rng.permutation(n * m)
        moves = {}
        for index, destination in enumerate(permutation.tolist()):
            a, b = divmod(destination, m)
            moves[(index // m + 1, index % m + 1)] = (a + 1, b + 1)
        spec = MoveSpec.from_moves(n, m, moves)
        if validate(spec).ok:
            logger.debug("random_instance(n=%d, m=%d, seed=%d) accepted draw %d", n, m, seed, draw)
            return spec
    raise InstanceError(f"No valid instance drawn for n={n}, m={m} after {_MAX_DRAWS} draws")


def all_pairs_instance(n: int, m: int = None) -> MoveSpec:
    """
    Worst-case instance: every block sends one page to every other block.

    Page j <= n of block i moves to page i of block j (a transpose); pages
    beyond n stay where they are.
    """
    m = n if m is None else m
    if n < 2:
        raise InstanceError(f"An instance needs at least two blocks, got n={n}")
    if m < n:
        raise InstanceError(f"Every block must reach every other block, which needs m >= n (m={m}, n={n})")
    moves = {}
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            moves[(i, j)] = (j, i) if j <= n else (i, j)
    return MoveSpec.from_moves(n, m, moves)


def transition_graph(spec: MoveSpec) -> TransitionGraph:
    """Count pages moving between every ordered pair of blocks (loops included)"""
    counts = [[0] * spec.n for _ in range(spec.n)]
    for i, j in spec.pages():
        counts[i - 1][spec.alpha(i, j) - 1] += 1
    return TransitionGraph(spec.n, tuple(tuple(row) for row in counts))


def serialize(spec: MoveSpec) -> str:
    """Instance file text: one move [i, j, alpha, beta] per line, 1-based"""
    moves = spec.moves()
    lines = [f'{{"n": {spec.n}, "m": {spec.m}, "moves": [']
    for index, (i, j, a, b) in enumerate(moves):
        separator = "," if index < len(moves) - 1 else ""
        lines.append(f"  [{i}, {j}, {a}, {b}]{separator}")
    lines.append("]}")
    return "\n".join(lines) + "\n"


def _require_int(value: Any, field: str, low: int, high: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"expected an integer, got {value!r}", field=field)
    if not low <= value <= high:
        raise ParseError(f"value {value} out of range [{low}, {high}]", field=field)
    return value


def parse(text: str, check: bool = True) -> MoveSpec:
    """
    Decode an instance document.

    Args:
        text: JSON object {"n": int, "m": int, "moves": [[i, j, a, b], ...]}
        check: run validate() and reject invalid instances

    Returns:
        The MoveSpec described by the document
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"malformed JSON: {e.msg}", line=e.lineno) from e

    if not isinstance(document, dict):
        raise ParseError("instance document must be a JSON object")
    for key in ("n", "m", "moves"):
        if key not in document:
            raise ParseError("missing key", field=key)

    n = _require_int(document["n"], "n", 1, 1 << 20)
    m = _require_int(document["m"], "m", 1, 1 << 20)
    entries = document["moves"]
    if not isinstance(entries, list):
        raise ParseError("expected a list of moves", field="moves")
    if len(entries) != n * m:
        raise ParseError(f"expected {n * m} moves, got {len(entries)}", field="moves")

    moves: Dict[Page, Page] = {}
    for index, entry in enumerate(entries):
        field = f"moves[{index}]"
        if not isinstance(entry, list) or len(entry) != 4:
            raise ParseError("each move must be [i, j, alpha, beta]", field=field)
        i = _require_int(entry[0], field, 1, n)
        j = _require_int(entry[1], field, 1, m)
        a = _require_int(entry[2], field, 1, n)
        b = _require_int(entry[3], field, 1, m)
        if (i, j) in moves:
            raise ParseError(f"page p_{i},{j} listed twice", field=field)
        moves[(i, j)] = (a, b)

    spec = MoveSpec.from_moves(n, m, moves)
    if check:
        report = validate(spec)
        if not report.ok:
            raise ParseError(report.message, field="moves")
    return spec


def load_example(name: str) -> MoveSpec:
    """Load one of the packaged instances: example1 (n=6, m=3), example2 (n=m=2), example3 (n=8, m=1)"""
    if name not in EXAMPLES:
        raise InstanceError(f"Unknown example {name!r}; choose from {', '.join(EXAMPLES)}")
    file_path = os.path.join(os.path.dirname(__file__), "data", f"{name}.json")
    with open(file_path, 'r', encoding='utf-8') as f:
        return parse(f.read())


def block_edges(spec: MoveSpec) -> List[Tuple[int, int]]:
    """Distinct (source, destination) block pairs with source != destination"""
    pairs = {(i, spec.alpha(i, j)) for i, j in spec.pages() if spec.alpha(i, j) != i}
    return sorted(pairs)
