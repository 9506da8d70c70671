"""Event trace export and queries.

Events are ``(step, kind, src, dst, tag, detail)`` tuples; the exported
line format is ``step,kind,src,dst,tag,detail``.
"""

DELIVERED = "Delivered"
DROPPED_DEAD_SENDER = "DroppedDeadSender"
DROPPED_DEAD_RECEIVER = "DroppedDeadReceiver"

_OUTCOME_KINDS = {
    "DELIVER": DELIVERED,
    "DROP_DEAD_SENDER": DROPPED_DEAD_SENDER,
    "DROP_DEAD_RECEIVER": DROPPED_DEAD_RECEIVER,
}


def to_lines(trace):
    """Render a trace as export lines (no trailing newline per item)."""
    return [
        f"{step},{kind},{src},{dst},{tag},{detail}"
        for step, kind, src, dst, tag, detail in trace
    ]


def write_trace(trace, path):
    with open(path, "w", encoding="utf-8") as fh:
        for line in to_lines(trace):
            fh.write(line)
            fh.write("\n")


def events_of_kind(trace, *kinds):
    want = set(kinds)
    return [ev for ev in trace if ev[1] in want]


def delivery_outcomes(trace):
    """Per-message transport resolutions as (step, outcome, src, dst, tag)."""
    out = []
    for step, kind, src, dst, tag, _detail in trace:
        outcome = _OUTCOME_KINDS.get(kind)
        if outcome is not None:
            out.append((step, outcome, src, dst, tag))
    return out


def first_difference(trace_a, trace_b):
    """Index of the first differing event, or -1 if traces are identical."""
    for i, (a, b) in enumerate(zip(trace_a, trace_b)):
        if a != b:
            return i
    if len(trace_a) != len(trace_b):
        return min(len(trace_a), len(trace_b))
    return -1
