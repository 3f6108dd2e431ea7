from .device import FlashDevice
from .models import EventOp, Erase, ExecutionResult, PageState, Plan, TraceEvent, Verdict, Write
from .tools import execute, read_trace, write_trace

__all__ = [
    "FlashDevice",
    "EventOp",
    "Erase",
    "Write",
    "TraceEvent",
    "Plan",
    "PageState",
    "Verdict",
    "ExecutionResult",
    "execute",
    "read_trace",
    "write_trace",
]
