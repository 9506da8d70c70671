"""Effect objects yielded by process programs to the simulation engine.

A program is a generator; each ``yield`` hands the engine one effect.
``Trace`` and ``GetStep`` are serviced instantly (the program keeps its
turn); every other effect consumes the process's one activation for the
current round. The value the engine sends back when resuming is the
effect's result.

Both engine backends (pure and compiled) share these classes, so effect
identity never depends on the backend in use.
"""


class Send:
    """Enqueue one message. Result: None."""

    __slots__ = ("dst", "tag", "payload")

    def __init__(self, dst, tag, payload):
        self.dst = dst
        self.tag = tag
        self.payload = payload


class SendMulti:
    """Enqueue several messages in one activation. Result: None.

    ``msgs`` is a sequence of (dst, tag, payload) triples, enqueued in order.
    """

    __slots__ = ("msgs",)

    def __init__(self, msgs):
        self.msgs = tuple(msgs)


class Recv:
    """Take the next inbox message, or block until one is deliverable.

    ``watch`` lists process ids whose (detector-visible) crash should wake
    the caller when the inbox is empty. Result: ``('msg', (src, tag,
    payload))`` or ``('dead', pid)``.
    """

    __slots__ = ("watch",)

    def __init__(self, watch=()):
        self.watch = tuple(watch)


class Probe:
    """Ask the failure detector about one process. Result: crash step or None."""

    __slots__ = ("target",)

    def __init__(self, target):
        self.target = target


class ProbeMulti:
    """Batched detector query. Result: tuple of (crash step or None)."""

    __slots__ = ("targets",)

    def __init__(self, targets):
        self.targets = tuple(targets)


class Trace:
    """Append a protocol-level trace event. Instant; result: None."""

    __slots__ = ("kind", "src", "dst", "tag", "detail")

    def __init__(self, kind, src=-1, dst=-1, tag="", detail=""):
        self.kind = kind
        self.src = src
        self.dst = dst
        self.tag = tag
        self.detail = detail


class GetStep:
    """Read the current simulation step. Instant; result: int."""

    __slots__ = ()


class Yield:
    """Give up the rest of this round. Result: None."""

    __slots__ = ()


class Halt:
    """Stop the whole world deterministically (abort policy). Never resumes."""

    __slots__ = ("reason",)

    def __init__(self, reason):
        self.reason = reason


class Trap:
    """Unrecoverable runtime trap (P.4 semantics). Never resumes."""

    __slots__ = ("detail",)

    def __init__(self, detail):
        self.detail = detail


class Done:
    """Program finished; linger and service stray protocol messages.

    A lingering process counts as terminated for world completion but is
    woken with ``('msg', (src, tag, payload))`` if mail arrives.
    """

    __slots__ = ()
