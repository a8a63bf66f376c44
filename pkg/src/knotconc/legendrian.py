"""Legendrian front diagrams as event words, with tb/rot and tau bounds.

A front is a word of events read left to right, acting on a stack of
strands numbered from 1 at the bottom:

    L<i>   left cusp: a new pair of strands born at heights i, i+1
    R<i>   right cusp: the strands at heights i, i+1 die together
    X<i>   crossing of the strands at heights i and i+1

Line comments start with '#'.  A closed front must end with no strands
and trace a single component to be a knot.

The classical invariants come from the sweep: tb = writhe - (#cusps)/2
and rot = (#down cusps - #up cusps)/2, where a cusp is "down" when the
traversal enters it on the upper strand, and the sign of a front crossing
is the product of the two horizontal directions (front crossings between
strands moving the same way are positive -- the over-strand is always the
one of smaller slope, so no extra over/under data exists).  The overall
convention is calibrated so the standard right-handed trefoil word has
writhe +3 and tb = 1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

Event = tuple[str, int]


class FrontError(ValueError):
    pass


@dataclass(frozen=True)
class LegInvariants:
    """Thurston-Bennequin and rotation numbers."""
    tb: int
    rot: int


@dataclass(frozen=True)
class FrontWord:
    events: tuple[Event, ...]
    closed: bool
    endpoints: int = 0  # open operator fronts keep 2n loose strands

    def __str__(self):
        return " ".join(f"{k}{i}" for k, i in self.events)


_TOKEN = re.compile(r"^([LRX])([0-9]+)$")


def parse_front(text: str, allow_open: bool = False) -> FrontWord:
    """Parse and validate an event word; see the module docstring for the
    grammar.  Closed fronts must be knots (single component)."""
    events: list[Event] = []
    for lineno, line in enumerate(text.splitlines() or [text], start=1):
        line = line.split("#", 1)[0]
        for col, tok in enumerate(line.split(), start=1):
            m = _TOKEN.match(tok)
            if not m:
                raise FrontError(f"malformed token {tok!r} at line {lineno}, item {col}")
            events.append((m.group(1), int(m.group(2))))
    return front_from_events(events, allow_open=allow_open)


def front_from_events(events: list[Event], allow_open: bool = False) -> FrontWord:
    trace = _sweep(events)  # validates heights
    if trace.open_strands:
        if not allow_open:
            raise FrontError("open strands at end")
        return FrontWord(tuple(events), closed=False, endpoints=trace.open_strands)
    if trace.components != 1:
        raise FrontError(f"not a knot: {trace.components} components")
    return FrontWord(tuple(events), closed=True)


class _Trace:
    __slots__ = ("open_strands", "components", "writhe", "down", "up", "cusps")


def _sweep(events: list[Event]) -> _Trace:
    """Validate the word, trace components, resolve orientations, and
    count writhe and oriented cusps."""
    strands: list[int] = []       # segment ids, bottom first
    next_id = 0
    left_cusp: dict[int, tuple[int, int]] = {}   # event idx -> (lower, upper)
    right_cusp: dict[int, tuple[int, int]] = {}
    crossings: list[tuple[int, int]] = []        # (lower seg, upper seg)
    seg_left_end: dict[int, int] = {}            # seg -> event idx of left cusp
    seg_right_end: dict[int, int] = {}

    for idx, (kind, i) in enumerate(events):
        n = len(strands)
        if kind == "L":
            if not 1 <= i <= n + 1:
                raise FrontError(f"event {idx}: left cusp height {i} out of range 1..{n + 1}")
            a, b = next_id, next_id + 1
            next_id += 2
            strands[i - 1:i - 1] = [a, b]
            left_cusp[idx] = (a, b)
            seg_left_end[a] = idx
            seg_left_end[b] = idx
        elif kind == "R":
            if not 1 <= i <= n - 1:
                raise FrontError(f"event {idx}: right cusp height {i} needs two strands")
            a, b = strands[i - 1], strands[i]
            del strands[i - 1:i + 1]
            right_cusp[idx] = (a, b)
            seg_right_end[a] = idx
            seg_right_end[b] = idx
        elif kind == "X":
            if not 1 <= i <= n - 1:
                raise FrontError(f"event {idx}: crossing at height {i} needs {i + 1} strands")
            a, b = strands[i - 1], strands[i]
            crossings.append((a, b))
            strands[i - 1], strands[i] = b, a
        else:  # pragma: no cover
            raise FrontError(f"unknown event kind {kind}")

    out = _Trace()
    out.open_strands = len(strands)
    out.cusps = len(left_cusp) + len(right_cusp)
    if strands:
        out.components = -1
        out.writhe = out.down = out.up = 0
        return out

    # component count via union-find over cusp joins
    parent = list(range(next_id))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in list(left_cusp.values()) + list(right_cusp.values()):
        parent[find(a)] = find(b)
    out.components = len({find(s) for s in range(next_id)}) if next_id else 0
    if out.components != 1:
        out.writhe = out.down = out.up = 0
        return out

    # orientation by traversal from the first left cusp, leaving on the
    # upper strand rightward; direction flips exactly at cusps
    direction: dict[int, int] = {}
    first = min(left_cusp)
    seg = left_cusp[first][1]
    d = 1
    while seg not in direction:
        direction[seg] = d
        end_event = seg_right_end[seg] if d == 1 else seg_left_end[seg]
        pair = right_cusp[end_event] if d == 1 else left_cusp[end_event]
        seg = pair[0] if pair[1] == seg else pair[1]
        d = -d
    assert len(direction) == next_id, "traversal must cover a knot"

    down = up = 0
    for table, cusp_dirs in ((left_cusp, -1), (right_cusp, 1)):
        for a, b in table.values():
            # arriving segment: moving left into a left cusp, right into a right cusp
            arriving_upper = direction[b] == cusp_dirs
            if arriving_upper:
                down += 1
            else:
                up += 1
    out.down, out.up = down, up
    out.writhe = sum(direction[a] * direction[b] for a, b in crossings)
    return out


def classical_invariants(front: FrontWord) -> LegInvariants:
    """tb = writhe - (1/2)#cusps, rot = (1/2)(#down - #up cusps)."""
    if not front.closed:
        raise FrontError("operator fronts have no absolute invariants; use satellite")
    tr = _sweep(list(front.events))
    assert (tr.down + tr.up) % 2 == 0
    tb2 = 2 * tr.writhe - tr.cusps
    rot2 = tr.down - tr.up
    assert tb2 % 2 == 0 and rot2 % 2 == 0
    return LegInvariants(tb2 // 2, rot2 // 2)


# ----------------------------------------------------------------------
# stabilization

def stabilize(obj, sign: int):
    """Positive stabilization: (tb, rot) -> (tb - 1, rot + 1); negative:
    (tb - 1, rot - 1).  Works on invariants directly or on a front word
    by inserting a zig-zag (validated by recomputing the invariants)."""
    if sign not in (1, -1):
        raise FrontError("stabilization sign must be +1 or -1")
    if isinstance(obj, LegInvariants):
        return LegInvariants(obj.tb - 1, obj.rot + sign)
    if not isinstance(obj, FrontWord):
        raise FrontError("can only stabilize a front word or invariants")
    want = stabilize(classical_invariants(obj), sign)
    events = list(obj.events)
    # insert a zig-zag on some strand right after an event; both zig-zag
    # variants are tried since the strand direction decides the rot sign
    for pos in range(1, len(events) + 1):
        n = _strands_after(events, pos)
        for h in range(1, n + 1):
            for block in ([("L", h), ("R", h + 1)], [("L", h + 1), ("R", h)]):
                cand = events[:pos] + block + events[pos:]
                try:
                    fw = front_from_events(cand)
                except FrontError:
                    continue
                if classical_invariants(fw) == want:
                    return fw
    raise FrontError("no zig-zag insertion realized the stabilization")


def _strands_after(events: list[Event], pos: int) -> int:
    n = 0
    for kind, _ in events[:pos]:
        n += 2 if kind == "L" else -2 if kind == "R" else 0
    return n


# ----------------------------------------------------------------------
# word moves (planar isotopy fragments, used by the property tests)

def try_commute(events: list[Event], idx: int) -> list[Event] | None:
    """Swap events idx and idx+1 when their strand supports are disjoint,
    reindexing heights across insertions/removals.  Returns the new word
    or None when the events do not commute.  Only pairs involving a
    crossing are implemented; cusp-cusp pairs are left alone."""
    if idx < 0 or idx + 1 >= len(events):
        return None
    (k1, i), (k2, j) = events[idx], events[idx + 1]
    out = None
    if k1 == "X" and k2 == "X":
        if abs(i - j) >= 2:
            out = [(k2, j), (k1, i)]
    elif k1 == "X" and k2 == "L":
        if j <= i:
            out = [("L", j), ("X", i + 2)]
        elif j >= i + 2:
            out = [("L", j), ("X", i)]
    elif k1 == "L" and k2 == "X":
        if j >= i + 2:
            out = [("X", j - 2), ("L", i)]
        elif j <= i - 2:
            out = [("X", j), ("L", i)]
    elif k1 == "X" and k2 == "R":
        if i >= j + 2:
            out = [("R", j), ("X", i - 2)]
        elif i <= j - 2:
            out = [("R", j), ("X", i)]
    elif k1 == "R" and k2 == "X":
        if j >= i:
            out = [("X", j + 2), ("R", i)]
        elif j <= i - 2:
            out = [("X", j), ("R", i)]
    if out is None:
        return None
    cand = events[:idx] + out + events[idx + 2:]
    try:
        _sweep(cand)
    except FrontError:
        return None
    return cand


# ----------------------------------------------------------------------
# satellites and tau bounds

def legendrian_satellite(op: LegInvariants, companion: LegInvariants) -> LegInvariants:
    """The satellite of a Legendrian operator front along a tb = 0
    companion keeps the operator's classical invariants."""
    if companion.tb != 0:
        raise FrontError("stabilize companion to tb = 0 first")
    return LegInvariants(op.tb, op.rot)


@dataclass(frozen=True)
class TauBounds:
    lower: int
    upper: int

    @property
    def exact(self) -> int | None:
        return self.lower if self.lower == self.upper else None


def tau_bounds(inv: LegInvariants, genus_upper: int) -> TauBounds:
    """Slice-torus sandwich: (tb + |rot| + 1)/2 <= tau <= genus."""
    if genus_upper < 0:
        raise FrontError("genus bound must be nonnegative")
    lower = -((-(inv.tb + abs(inv.rot) + 1)) // 2)  # ceil division
    if lower > genus_upper:
        raise FrontError("inconsistent certificate inputs: lower bound exceeds genus")
    return TauBounds(lower, genus_upper)


# ----------------------------------------------------------------------
# built-in fronts (self-validating: tests pin their tb/rot values)

def twist_front(j: int) -> FrontWord:
    """A front for the twist knot with positive clasp and j full twists:
    the trefoil-style plat with j - 1 extra full twists, each drawn as two
    crossings with cancelling zig-zags so tb = 1, rot = 0 for every j."""
    if j < 1:
        raise FrontError("twist parameter must be >= 1")
    events: list[Event] = [("L", 1), ("L", 3), ("X", 2), ("X", 2), ("X", 2)]
    for _ in range(j - 1):
        events += _FULL_TWIST_BLOCK
    events += [("R", 3), ("R", 1)]
    return front_from_events(events)


# one full twist of the two middle strands, drawn with cancelling
# zig-zags so the contribution to (tb, rot) is zero
_FULL_TWIST_BLOCK: list[Event] = [
    ("X", 2), ("L", 2), ("R", 3), ("X", 2), ("L", 3), ("R", 2),
]


def q_operator_front(k: int) -> FrontWord:
    """The closed (companion-unknot) form of the k-th doubling-operator
    front, with tb = 0 and rot = 1 for every k.  The k-dependent band
    twists sit inside the middle crossing run."""
    if k < 1:
        raise FrontError("operator parameter must be >= 1")
    events: list[Event] = [("L", 1), ("L", 3)]
    for _ in range(k - 1):
        events += _FULL_TWIST_BLOCK
    events += [("X", 2), ("X", 2), ("X", 2), ("X", 3), ("R", 3), ("R", 1)]
    return front_from_events(events)


def unknot_front() -> FrontWord:
    return front_from_events([("L", 1), ("R", 1)])


def builtin_front(name: str, param: int = 1) -> FrontWord:
    table = {"twist-front": twist_front, "q-front": q_operator_front}
    if name == "unknot-front":
        return unknot_front()
    if name not in table:
        raise FrontError(f"unknown builtin front {name!r}")
    return table[name](param)
