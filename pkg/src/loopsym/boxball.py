"""Box-ball system on unit-capacity boxes: leftmost-ball and carrier
evolutions, soliton runs, and min-plus conserved quantities.

States are 0/1 box sequences indexed from 0, implicitly all-empty to the
right; the container keeps an explicit empty margin of (number of balls)
boxes past the rightmost ball, which is exactly the room one evolution step
can consume.  The two evolution rules are independent implementations and
agree box for box; the carrier rule is the min-plus shadow of the two-column
birational swap, which is what ties the dynamics to the loop elementary
functions: encoding site i as x_i^(j) = balls when j = i mod 2 and free
space otherwise makes trop(e_m^(1)) the total ball count and trop(e_m^(2))
the total free space, and the e_k up to the ball count are integrals of
motion in the paired sense that the color-1 reading of a state equals the
color-2 reading of its successor (the carrier enters on the left, shifting
every site index and hence every color by one).
"""

from __future__ import annotations

from .ring import canon_color

# free capacity standing in for "infinite" in min-plus arithmetic; any value
# strictly larger than every achievable finite alternative works
INF_CAPACITY = 10 ** 6


class CarrierNotEmptied(RuntimeError):
    """The carrier still held balls when its sweep window ended."""


class BoxBallState:
    """0/1 boxes from position 0, padded with (ball count) empty boxes."""

    __slots__ = ("boxes",)

    def __init__(self, boxes):
        boxes = [int(b) for b in boxes]
        if any(b not in (0, 1) for b in boxes):
            raise ValueError("boxes hold at most one ball")
        while boxes and boxes[-1] == 0:
            boxes.pop()
        boxes.extend([0] * sum(boxes))
        self.boxes = tuple(boxes)

    @classmethod
    def from_positions(cls, positions):
        positions = sorted(set(int(p) for p in positions))
        if positions and positions[0] < 0:
            raise ValueError("ball positions start at 0")
        boxes = [0] * (positions[-1] + 1 if positions else 0)
        for p in positions:
            boxes[p] = 1
        return cls(boxes)

    def positions(self):
        return tuple(p for p, b in enumerate(self.boxes) if b)

    @property
    def ball_count(self):
        return sum(self.boxes)

    def __len__(self):
        return len(self.boxes)

    def __eq__(self, other):
        if not isinstance(other, BoxBallState):
            return NotImplemented
        return self.boxes == other.boxes

    def __hash__(self):
        return hash(self.boxes)

    def render(self):
        """One ASCII frame, '.' empty and 'o' ball."""
        return "".join("o" if b else "." for b in self.boxes)

    def __repr__(self):
        return "BoxBallState.from_positions(%r)" % (list(self.positions()),)


def evolve_leftmost(state):
    """Move each ball once, leftmost first, to the nearest empty box on its
    right; vacated boxes count as empty for the balls that follow."""
    occupied = set(state.positions())
    for p in sorted(occupied):
        q = p + 1
        while q in occupied:
            q += 1
        occupied.remove(p)
        occupied.add(q)
    return BoxBallState.from_positions(occupied)


def evolve_carrier(state, capacity=None):
    """Sweep a carrier once, left to right: pick up from every occupied box
    while below capacity, drop into every empty box while loaded.  The
    default capacity (ball count + 1) never saturates and reproduces the
    leftmost-ball rule exactly."""
    if capacity is None:
        capacity = state.ball_count + 1
    if capacity < 1:
        raise ValueError("carrier capacity must be positive")
    load = 0
    out = []
    for ball in state.boxes:
        if ball and load < capacity:
            out.append(0)
            load += 1
        elif not ball and load:
            out.append(1)
            load -= 1
        else:
            out.append(ball)
    if load:
        raise CarrierNotEmptied("sweep window too short by %d balls" % load)
    return BoxBallState(out)


def carrier_site_update(a, b, d):
    """One carrier-site interaction on a box with a free slots and b balls
    while the carrier holds d: ((a, b), d) -> ((a', b'), d').  This is the
    min-plus image of the two-column swap with the carrier capacity pushed
    to infinity."""
    t = min(a, d)
    return (a - t + b, t), d - t + b


def solitons(state):
    """Maximal runs of consecutive balls, left to right."""
    runs = []
    run = 0
    for b in state.boxes:
        if b:
            run += 1
        elif run:
            runs.append(run)
            run = 0
    if run:
        runs.append(run)
    return tuple(runs)


def encode_sites(state, carrier_slots=0, window=None):
    """Site tuples (a_i, b_i): the boxes, then spent carriers (inf, 0)."""
    boxes = state.boxes
    if window is not None:
        if any(boxes[window:]):
            raise ValueError("window must contain every ball")
        boxes = boxes[:window] + (0,) * (window - len(boxes))
    sites = [(1 - b, b) for b in boxes]
    sites.extend([(INF_CAPACITY, 0)] * carrier_slots)
    return sites


def site_value(site_index, color, a, b):
    # x_i^(j) = balls when j = i mod 2, free space otherwise
    return b if (color - site_index) % 2 == 0 else a


def tropical_invariant(state, k, r, carrier_slots=0, window=None):
    """Min-plus loop elementary e_k^(r) over the encoded sites.

    Computed by dynamic programming over site-increasing chains with
    cyclically advancing color, which agrees with tropicalizing the
    polynomial loop_e but scales to long windows.  With k = number of sites
    and no carrier slots, r = 1 gives the total ball count and r = 2 the
    total free space.
    """
    sites = encode_sites(state, carrier_slots, window)
    m = len(sites)
    if not 0 <= k <= m:
        raise ValueError("need 0 <= k <= number of sites")
    big = None
    dp = [0] + [big] * k
    for i, (a, b) in enumerate(sites, 1):
        for c in range(min(i, k), 0, -1):
            if dp[c - 1] is None:
                continue
            color = canon_color(r + c - 1, 2)
            cand = dp[c - 1] + site_value(i, color, a, b)
            if dp[c] is None or cand < dp[c]:
                dp[c] = cand
    if dp[k] is None:
        raise ValueError("no chain of length %d" % k)
    return dp[k]


def trajectory_window(state, steps):
    """A window wide enough to hold every state of a trajectory.

    Each step moves the rightmost ball by at most the ball count (the
    largest soliton is no longer than that), so the padded window grows by
    at most ball_count boxes per step.
    """
    return len(state.boxes) + steps * state.ball_count


def conserved_profile(state, color=1, max_k=None, window=None):
    """Tuple (trop e_1, ..., trop e_max_k) at one color.

    Conservation law: the color-1 profile of a state equals the color-2
    profile of its successor, for every k up to the ball count.  Iterated
    along a trajectory this pairs each state with the next; the color
    swap per step is forced by the carrier entering on the left, which
    shifts every site index by one.
    """
    if max_k is None:
        max_k = state.ball_count
    return tuple(
        tropical_invariant(state, k, color, window=window)
        for k in range(1, max_k + 1)
    )


def trajectory(state, steps, rule="carrier", capacity=None):
    """The list [s_0, s_1, ..., s_steps] under the chosen evolution."""
    if rule not in ("carrier", "leftmost"):
        raise ValueError("rule must be 'carrier' or 'leftmost'")
    out = [state]
    for _ in range(steps):
        if rule == "carrier":
            state = evolve_carrier(state, capacity)
        else:
            state = evolve_leftmost(state)
        out.append(state)
    return out
