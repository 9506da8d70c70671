"""Public simulated-world API over the engine kernel.

A world is a fixed set of crash-stop processes with reliable FIFO
point-to-point channels, a perfect (one-round-lagged) failure detector,
and a fault schedule. Process programs are generator functions taking the
process id and yielding :mod:`legio_sim.simnet.effects`.
"""

from dataclasses import dataclass

from ..errors import ConfigError, DeadlockError
from .backend import EngineWorld
from .schedule import EMPTY_SCHEDULE


@dataclass(frozen=True)
class FaultStatus:
    """Alive, or crashed at a known step (crash-stop: absorbing)."""

    crashed_at: int | None = None

    @property
    def alive(self):
        return self.crashed_at is None


ALIVE = FaultStatus()


@dataclass
class RunResult:
    outcome: str  # completed | halted | trapped
    trace: list
    steps: int
    sent: int
    delivered: int
    halt_reason: str = ""
    trap_detail: str = ""


class World:
    """Handle on one simulated world (spec WorldHandle)."""

    def __init__(self, n, seed, schedule):
        if n < 1:
            raise ConfigError(f"world needs at least 1 process, got {n}")
        schedule = schedule or EMPTY_SCHEDULE
        schedule.validate_for(n)
        self.size = n
        self.seed = seed
        self.schedule = schedule
        self._eng = EngineWorld(n, seed, schedule.entries)

    # spec fields -------------------------------------------------------

    @property
    def step(self):
        return self._eng.step

    @property
    def alive(self):
        return frozenset(self._eng.alive_pids())

    @property
    def trace(self):
        return self._eng.trace

    @property
    def sent(self):
        return self._eng.sent

    @property
    def delivered(self):
        return self._eng.delivered

    # operations ---------------------------------------------------------

    def probe_failure(self, observer, target):
        """Detector query as seen by ``observer`` (must be alive)."""
        if not (0 <= observer < self.size and 0 <= target < self.size):
            raise ConfigError(f"probe out of range: {observer}->{target}")
        if self._eng.crash_step_of(observer) is not None:
            raise ConfigError(f"unreachable caller: process {observer} crashed")
        c = self._eng.visible_crash(target)
        return ALIVE if c is None else FaultStatus(c)

    def run(self, programs, max_steps=1_000_000):
        """Execute programs to completion; deterministic for a fixed seed.

        ``programs`` maps pid -> generator function (called with the pid).
        Raises DeadlockError naming the blocked processes when nothing can
        make progress.
        """
        gens = {pid: fn(pid) for pid, fn in programs.items()}
        self._eng.attach(gens)
        outcome = self._eng.run(max_steps)
        if outcome == "deadlock":
            raise DeadlockError(self._eng.blocked_at_end, trace=self._eng.trace)
        return RunResult(
            outcome=outcome,
            trace=self._eng.trace,
            steps=self._eng.step,
            sent=self._eng.sent,
            delivered=self._eng.delivered,
            halt_reason=self._eng.halt_reason,
            trap_detail=self._eng.trap_detail,
        )


def spawn_world(n, seed=0, schedule=None):
    """Create a world of ``n`` processes with an armed fault schedule."""
    return World(n, seed, schedule)


def run_deterministic(world, programs, max_steps=1_000_000):
    """Run one program per process and return the event trace."""
    missing = set(range(world.size)) - set(programs)
    if missing:
        raise ConfigError(f"no program for processes {sorted(missing)}")
    return world.run(programs, max_steps=max_steps)
