"""Deterministic crash-stop simulation engine (pure-Python kernel).

Reference semantics for both backends:

* Time advances in integer rounds (``step``). Each round, every live
  process gets at most one activation, in a per-round order drawn from the
  world's seeded RNG.
* One yielded effect consumes one activation, except ``Trace``/``GetStep``
  which are instant.
* Messages enqueued in round ``t`` become deliverable in round ``t+1``, so
  a message hop always costs exactly one round.
* Scheduled crashes fire at the start of their round. A crashed process
  never acts again; its undelivered messages (inbound and in-flight
  outbound) are dropped. Crashes become visible to probes and death-wakes
  one round after they fire.

``legio_sim.simnet._engine_cy`` is the compiled twin of this module; any
behavioral change here must be mirrored there (tests/test_backend_equiv.py
guards the pairing).
"""

import random

from ..errors import HangError
from . import effects as fx

R_RUNNING = 0
R_BLOCKED = 1
R_LINGER = 2
R_TERM = 3
R_CRASHED = 4


class Proc:
    __slots__ = ("pid", "gen", "state", "inbox", "watch", "pending", "crashed_at", "lingered")

    def __init__(self, pid):
        self.pid = pid
        self.gen = None
        self.state = R_TERM
        self.inbox = []
        self.watch = ()
        self.pending = None
        self.crashed_at = -1  # -1 = alive
        self.lingered = False


class EngineWorld:
    """One simulated world: processes, channels, schedule, trace."""

    def __init__(self, n, seed, schedule):
        self.n = n
        self.seed = seed
        self.rng = random.Random(seed)
        self.step = 0
        self.trace = []
        self.sent = 0
        self.delivered = 0
        self.dropped_dead_sender = 0
        self.dropped_dead_receiver = 0
        self.outcome = None
        self.halt_reason = ""
        self.trap_detail = ""
        self.blocked_at_end = ()
        self.procs = [Proc(pid) for pid in range(n)]
        self._crash_rounds = {}
        for victim, at_step in schedule:
            self._crash_rounds.setdefault(at_step, []).append(victim)
        for victims in self._crash_rounds.values():
            victims.sort()
        self._pending_crash_steps = sorted(self._crash_rounds)
        self._tagstr = {}

    # -- public queries ------------------------------------------------

    def alive_pids(self):
        return [p.pid for p in self.procs if p.crashed_at < 0]

    def crash_step_of(self, pid):
        c = self.procs[pid].crashed_at
        return None if c < 0 else c

    def visible_crash(self, pid):
        """Detector view: the crash step, or None while alive/invisible."""
        c = self.procs[pid].crashed_at
        if 0 <= c < self.step:
            return c
        return None

    # -- setup ----------------------------------------------------------

    def attach(self, generators):
        """Install one generator per pid and mark them runnable."""
        for pid, gen in generators.items():
            p = self.procs[pid]
            p.gen = gen
            p.state = R_RUNNING
            p.pending = None

    # -- trace helpers ---------------------------------------------------

    def _tag_str(self, tag):
        s = self._tagstr.get(tag)
        if s is None:
            if isinstance(tag, tuple):
                s = "/".join(self._tag_str(t) if isinstance(t, tuple) else str(t) for t in tag)
            else:
                s = str(tag)
            self._tagstr[tag] = s
        return s

    def _emit(self, kind, src=-1, dst=-1, tag="", detail=""):
        self.trace.append((self.step, kind, src, dst, tag, detail))

    # -- transport -------------------------------------------------------

    def _send(self, src, dst, tag, payload):
        self.sent += 1
        tags = self._tag_str(tag)
        if isinstance(payload, (bytes, bytearray)):
            detail = str(len(payload))
        else:
            detail = ""
        self._emit("SEND", src, dst, tags, detail)
        if self.procs[dst].crashed_at >= 0:
            self.dropped_dead_receiver += 1
            self._emit("DROP_DEAD_RECEIVER", src, dst, tags, "")
            return
        self.procs[dst].inbox.append((src, tag, payload, self.step))

    def _pop_deliverable(self, p):
        inbox = p.inbox
        if inbox and inbox[0][3] < self.step:
            src, tag, payload, _ = inbox.pop(0)
            self.delivered += 1
            self._emit("DELIVER", src, p.pid, self._tag_str(tag), "")
            return (src, tag, payload)
        return None

    def _first_dead_watch(self, p):
        for w in p.watch:
            c = self.procs[w].crashed_at
            if 0 <= c < self.step:
                return w
        return -1

    # -- crash handling ---------------------------------------------------

    def _fire_crashes(self):
        victims = self._crash_rounds.pop(self.step, None)
        if victims is None:
            return
        self._pending_crash_steps = sorted(self._crash_rounds)
        for victim in victims:
            v = self.procs[victim]
            if v.crashed_at >= 0:
                continue
            v.crashed_at = self.step
            v.state = R_CRASHED
            v.gen = None
            self._emit("CRASH", victim, -1, "", "")
            if v.inbox:
                for src, tag, _payload, _enq in v.inbox:
                    self.dropped_dead_receiver += 1
                    self._emit("DROP_DEAD_RECEIVER", src, victim, self._tag_str(tag), "")
                v.inbox = []
            for q in self.procs:
                if q.pid == victim or not q.inbox:
                    continue
                kept = []
                for m in q.inbox:
                    if m[0] == victim:
                        self.dropped_dead_sender += 1
                        self._emit("DROP_DEAD_SENDER", victim, q.pid, self._tag_str(m[1]), "")
                    else:
                        kept.append(m)
                if len(kept) != len(q.inbox):
                    q.inbox = kept

    # -- activation --------------------------------------------------------

    def _activate(self, p, result):
        gen = p.gen
        while True:
            try:
                eff = gen.send(result)
            except StopIteration:
                p.state = R_TERM
                p.gen = None
                self._emit("TERM", p.pid, -1, "", "")
                return
            cls = eff.__class__
            if cls is fx.Trace:
                self.trace.append((self.step, eff.kind, eff.src, eff.dst, eff.tag, eff.detail))
                result = None
                continue
            if cls is fx.GetStep:
                result = self.step
                continue
            if cls is fx.Send:
                self._send(p.pid, eff.dst, eff.tag, eff.payload)
                p.state = R_RUNNING
                p.pending = None
                return
            if cls is fx.SendMulti:
                for dst, tag, payload in eff.msgs:
                    self._send(p.pid, dst, tag, payload)
                p.state = R_RUNNING
                p.pending = None
                return
            if cls is fx.Recv:
                p.watch = eff.watch
                m = self._pop_deliverable(p)
                if m is not None:
                    p.state = R_RUNNING
                    p.pending = ("msg", m)
                    return
                w = self._first_dead_watch(p)
                if w >= 0:
                    p.state = R_RUNNING
                    p.pending = ("dead", w)
                    return
                p.state = R_BLOCKED
                return
            if cls is fx.Probe:
                p.state = R_RUNNING
                p.pending = self.visible_crash(eff.target)
                return
            if cls is fx.ProbeMulti:
                p.state = R_RUNNING
                p.pending = tuple(self.visible_crash(t) for t in eff.targets)
                return
            if cls is fx.Yield:
                p.state = R_RUNNING
                p.pending = None
                return
            if cls is fx.Done:
                if not p.lingered:
                    p.lingered = True
                    self._emit("TERM", p.pid, -1, "", "")
                p.state = R_LINGER
                return
            if cls is fx.Halt:
                self.outcome = "halted"
                self.halt_reason = eff.reason
                self._emit("HALT", p.pid, -1, "", eff.reason)
                p.state = R_TERM
                p.gen = None
                return
            if cls is fx.Trap:
                self.outcome = "trapped"
                self.trap_detail = eff.detail
                self._emit("TRAP", p.pid, -1, "", eff.detail)
                p.state = R_TERM
                p.gen = None
                return
            raise TypeError(f"unknown effect {eff!r}")

    # -- main loop -----------------------------------------------------------

    def run(self, max_steps=1_000_000):
        order = []
        while self.outcome is None:
            if self.step > max_steps:
                raise HangError(f"exceeded {max_steps} steps; blocked={self.blocked_pids()}")
            self._fire_crashes()
            order.clear()
            for p in self.procs:
                if p.state == R_RUNNING or p.state == R_BLOCKED or p.state == R_LINGER:
                    order.append(p.pid)
            self.rng.shuffle(order)
            progressed = False
            for pid in order:
                p = self.procs[pid]
                st = p.state
                if st == R_RUNNING:
                    result = p.pending
                    p.pending = None
                    self._activate(p, result)
                    progressed = True
                elif st == R_BLOCKED:
                    m = self._pop_deliverable(p)
                    if m is not None:
                        self._activate(p, ("msg", m))
                        progressed = True
                    else:
                        w = self._first_dead_watch(p)
                        if w >= 0:
                            self._activate(p, ("dead", w))
                            progressed = True
                elif st == R_LINGER:
                    m = self._pop_deliverable(p)
                    if m is not None:
                        self._activate(p, ("msg", m))
                        progressed = True
                if self.outcome is not None:
                    break
            if self.outcome is not None:
                break
            if progressed:
                self.step += 1
                continue
            blocked = self.blocked_pids()
            if not blocked:
                self.outcome = "completed"
                break
            if self._wake_possible():
                self.step += 1
                continue
            ff = self._next_crash_step()
            if ff >= 0:
                self.step = ff
                continue
            self.outcome = "deadlock"
            self.blocked_at_end = tuple(blocked)
            break
        return self.outcome

    def blocked_pids(self):
        return [p.pid for p in self.procs if p.state == R_BLOCKED]

    def _wake_possible(self):
        for p in self.procs:
            if p.state == R_BLOCKED:
                if p.inbox:
                    return True
                for w in p.watch:
                    if self.procs[w].crashed_at >= 0:
                        return True
            elif p.state == R_LINGER and p.inbox:
                return True
        return False

    def _next_crash_step(self):
        for at_step in self._pending_crash_steps:
            if at_step > self.step:
                return at_step
        return -1
