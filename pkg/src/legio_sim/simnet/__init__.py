"""Deterministic simulated world of crash-stop processes."""

from .backend import BACKEND, COMPILED
from .schedule import EMPTY_SCHEDULE, FaultSchedule, format_schedule, load_schedule, parse_schedule_text
from .world import ALIVE, FaultStatus, RunResult, World, run_deterministic, spawn_world
from . import effects, trace

__all__ = [
    "ALIVE",
    "BACKEND",
    "COMPILED",
    "EMPTY_SCHEDULE",
    "FaultSchedule",
    "FaultStatus",
    "RunResult",
    "World",
    "effects",
    "format_schedule",
    "load_schedule",
    "parse_schedule_text",
    "run_deterministic",
    "spawn_world",
    "trace",
]
