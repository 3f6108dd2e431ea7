# flashmove/flash_sim/models.py
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple, Union

import numpy as np


class EventOp(Enum):
    ERASE = "erase"
    WRITE = "write"


@dataclass(frozen=True)
class Erase:
    """Erase every page of one block"""
    block: int

    @property
    def op(self) -> EventOp:
        return EventOp.ERASE


@dataclass(frozen=True)
class Write:
    """Program one empty page with the combination coeffs of the original data"""
    block: int
    page: int
    coeffs: Tuple[int, ...]

    @property
    def op(self) -> EventOp:
        return EventOp.WRITE


TraceEvent = Union[Erase, Write]


@dataclass
class Plan:
    """
    Ordered erase/write events for an instance with n blocks of m pages.

    Block 0 is the auxiliary block B_0; block n + 1 is the second auxiliary
    block B_0' when aux_blocks == 2.
    """
    n: int
    m: int
    aux_blocks: int = 1
    events: List[TraceEvent] = field(default_factory=list)
    algorithm: str = ""

    @property
    def erasures(self) -> int:
        return sum(1 for event in self.events if isinstance(event, Erase))

    @property
    def writes(self) -> int:
        return sum(1 for event in self.events if isinstance(event, Write))

    def erase(self, block: int) -> None:
        self.events.append(Erase(block))

    def write(self, block: int, page: int, coeffs) -> None:
        self.events.append(Write(block, page, tuple(int(c) for c in coeffs)))

    def erase_profile(self) -> List[int]:
        """Erasures per block id, B_0..B_n (then B_0' if present)"""
        counts = [0] * (self.n + 1 + (1 if self.aux_blocks == 2 else 0))
        for event in self.events:
            if isinstance(event, Erase):
                counts[event.block] += 1
        return counts


@dataclass
class PageState:
    """Empty when coeffs is None; otherwise the stored combination and its payload symbols"""
    coeffs: Optional[np.ndarray] = None
    payload: Optional[np.ndarray] = None

    @property
    def empty(self) -> bool:
        return self.coeffs is None


@dataclass(frozen=True)
class Verdict:
    success: bool
    event_index: Optional[int] = None
    reason: str = ""

    def describe(self) -> str:
        if self.success:
            return "success"
        return f"failure at event {self.event_index}: {self.reason}"


@dataclass
class ExecutionResult:
    """Replay outcome: the events applied, erasures per block and the verdict"""
    trace: List[TraceEvent]
    erase_counts: List[int]
    verdict: Verdict

    @property
    def total_erasures(self) -> int:
        return sum(self.erase_counts)

    @property
    def max_per_block(self) -> int:
        return max(self.erase_counts) if self.erase_counts else 0
