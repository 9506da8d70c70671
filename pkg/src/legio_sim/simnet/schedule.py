"""Fault schedules: which process crashes at which simulation step.

File format, one entry per line::

    victim_rank,at_step

Decimal integers, comma separated; blank lines and ``#`` comments allowed.
"""

from dataclasses import dataclass, field

from ..errors import ConfigError


@dataclass(frozen=True)
class FaultSchedule:
    """Declarative crash plan: at most one entry per victim."""

    entries: tuple = field(default_factory=tuple)

    def __post_init__(self):
        seen = set()
        norm = []
        for victim, at_step in self.entries:
            victim = int(victim)
            at_step = int(at_step)
            if victim < 0:
                raise ConfigError(f"negative victim rank {victim}")
            if at_step < 0:
                raise ConfigError(f"negative crash step {at_step}")
            if victim in seen:
                raise ConfigError(f"duplicate schedule entry for victim {victim}")
            seen.add(victim)
            norm.append((victim, at_step))
        object.__setattr__(self, "entries", tuple(norm))

    def validate_for(self, n):
        for victim, _ in self.entries:
            if victim >= n:
                raise ConfigError(f"schedule victim {victim} out of range for {n} processes")

    def victims(self):
        return frozenset(v for v, _ in self.entries)

    def last_crash_step(self):
        return max((s for _, s in self.entries), default=-1)

    def __len__(self):
        return len(self.entries)


EMPTY_SCHEDULE = FaultSchedule()


def parse_schedule_text(text):
    """Parse the line format; raises ConfigError naming the bad line."""
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = [p.strip() for p in line.split(",")]
        if len(parts) != 2:
            raise ConfigError(f"line {lineno}: expected 'victim_rank,at_step', got {raw!r}")
        try:
            victim, at_step = int(parts[0]), int(parts[1])
        except ValueError:
            raise ConfigError(f"line {lineno}: non-integer field in {raw!r}") from None
        entries.append((victim, at_step))
    try:
        return FaultSchedule(tuple(entries))
    except ConfigError as exc:
        raise ConfigError(f"schedule invalid: {exc}") from None


def load_schedule(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_schedule_text(fh.read())


def format_schedule(schedule):
    return "".join(f"{v},{s}\n" for v, s in schedule.entries)
