"""Exception types shared across the simulator and protocol layers."""


class ConfigError(ValueError):
    """Invalid world, schedule, or benchmark configuration."""


class DeadlockError(RuntimeError):
    """No runnable process and nothing left that could wake one."""

    def __init__(self, blocked, trace=None):
        self.blocked = tuple(sorted(blocked))
        self.trace = trace
        super().__init__(f"deadlock: processes {list(self.blocked)} blocked forever")


class SimTrap(RuntimeError):
    """Unrecoverable runtime trap (file/window access on a faulty communicator)."""


class HangError(RuntimeError):
    """Simulation exceeded its step budget; almost certainly a protocol bug."""
