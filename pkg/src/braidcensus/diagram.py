"""Rebuild the arc structure of a diagram from its coordinates.

The points where the diagram meets line L_i are numbered bottom to top as
c(i, 1) .. c(i, 2*s_i + 1); the endpoint markers are c(0, 1) and c(n, 1).
Inside zone i (between L_{i-1} and L_i), with b_i := a_i + |s_{i-1} - s_i|,
the diagram consists of exactly these non-crossing arcs:

  straight   c(i-1, j) -- c(i, j)            for j <= a_i
  left-box   c(i-1, j) -- c(i-1, 2b_i+1-j)   for a_i < j <= b_i,  if s_{i-1} > s_i
  right-box  c(i, j)   -- c(i, 2b_i+1-j)     for a_i < j <= b_i,  if s_i > s_{i-1}
  cross      c(i-1, j) -- c(i, j')           with j - j' = 2(s_{i-1} - s_i)
                                             and min(j, j') > a_i

and the zone's puncture sits on the arc c(i-1,b)--c(i-1,b+1) if s_{i-1}
falls, on c(i,b)--c(i,b+1) if it rises, and on the straight-through arc at
height a_i + 1 if s_{i-1} = s_i.

Counting connected components of this graph counts the curves of the
diagram; the tuple belongs to a braid exactly when there is one component.
"Closing by above" joins c(0,1) to c(n,1) by a path over the top of the
picture, which makes every node degree 2 without changing the component
count.

Graph construction and queries are pure per input; a Partition instance is
single-owner mutable state and must not be shared across threads.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import NamedTuple

from .coords import VirtualCoordinates

STRAIGHT = "straight"
LEFT_BOX = "left-box"
RIGHT_BOX = "right-box"
CROSS = "cross"
CLOSURE = "closure"


class Arc(NamedTuple):
    u: int
    v: int
    zone: int
    kind: str


class Partition:
    """Union-find over a fixed index range, tracking the class count.

    Uses path halving and union by size.  reset() restores the discrete
    partition without reallocating, so one arena can serve many graphs.
    """

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.size = [1] * size
        self.count = size

    def reset(self) -> None:
        parent = self.parent
        size = self.size
        for i in range(len(parent)):
            parent[i] = i
            size[i] = 1
        self.count = len(parent)

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        rx = self.find(x)
        ry = self.find(y)
        if rx == ry:
            return False
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]
        self.count -= 1
        return True


@dataclass
class ArcGraph:
    """The reconstructed arc structure of one coordinate tuple.

    Node indices are flat: node (i, j) maps to bases[i] + j - 1, and the
    closure nodes (one per interior line, present only when closed) come
    after all line nodes, starting at top_start.
    """

    n: int
    s: tuple[int, ...]
    a: tuple[int, ...]
    bases: tuple[int, ...]
    node_count: int
    arcs: tuple[Arc, ...]
    puncture_arcs: tuple[int, ...]
    closed: bool
    top_start: int

    def node(self, i: int, j: int) -> int:
        return self.bases[i] + j - 1

    def line_of(self, v: int) -> tuple[int, int]:
        """Inverse of node(): (line index, 1-based position from the bottom).

        Closure nodes report their line with position 2*s_i + 2 (above all
        regular points).
        """
        if self.closed and v >= self.top_start:
            i = v - self.top_start + 1
            return i, 2 * self.s[i] + 2
        i = bisect_right(self.bases, v) - 1
        return i, v - self.bases[i] + 1

    def degrees(self) -> list[int]:
        deg = [0] * self.node_count
        for arc in self.arcs:
            deg[arc.u] += 1
            deg[arc.v] += 1
        return deg


def build_arc_graph(
    c: VirtualCoordinates, closed_by_above: bool = False
) -> ArcGraph:
    """Apply the four arc rules and three puncture rules to a tuple."""
    n, s, a = c.n, c.s, c.a
    bases = [0]
    for i in range(n + 1):
        bases.append(bases[-1] + 2 * s[i] + 1)
    line_nodes = bases[n + 1]
    top_start = line_nodes
    node_count = line_nodes + (n - 1 if closed_by_above else 0)

    def node(i: int, j: int) -> int:
        return bases[i] + j - 1

    arcs: list[Arc] = []
    puncture_arcs: list[int] = []
    for i in range(1, n + 1):
        sl, sr = s[i - 1], s[i]
        ai = a[i - 1]
        b = ai + abs(sl - sr)
        for j in range(1, ai + 1):
            arcs.append(Arc(node(i - 1, j), node(i, j), i, STRAIGHT))
        if sl > sr:
            for j in range(ai + 1, b + 1):
                arcs.append(Arc(node(i - 1, j), node(i - 1, 2 * b + 1 - j), i, LEFT_BOX))
            shift = 2 * (sl - sr)
            for j in range(ai + 1, 2 * sr + 2):
                arcs.append(Arc(node(i - 1, j + shift), node(i, j), i, CROSS))
            # the puncture sits on the innermost box arc c(i-1,b)--c(i-1,b+1)
            puncture_arcs.append(_arc_index_of(arcs, node(i - 1, b), node(i - 1, b + 1)))
        elif sr > sl:
            for j in range(ai + 1, b + 1):
                arcs.append(Arc(node(i, j), node(i, 2 * b + 1 - j), i, RIGHT_BOX))
            shift = 2 * (sr - sl)
            for j in range(ai + 1, 2 * sl + 2):
                arcs.append(Arc(node(i - 1, j), node(i, j + shift), i, CROSS))
            puncture_arcs.append(_arc_index_of(arcs, node(i, b), node(i, b + 1)))
        else:
            for j in range(ai + 1, 2 * sl + 2):
                arcs.append(Arc(node(i - 1, j), node(i, j), i, CROSS))
            puncture_arcs.append(_arc_index_of(arcs, node(i - 1, ai + 1), node(i, ai + 1)))
    if closed_by_above:
        if n == 1:
            arcs.append(Arc(node(0, 1), node(1, 1), 1, CLOSURE))
        else:
            tops = [top_start + i for i in range(n - 1)]
            arcs.append(Arc(node(0, 1), tops[0], 1, CLOSURE))
            for i in range(1, n - 1):
                arcs.append(Arc(tops[i - 1], tops[i], i + 1, CLOSURE))
            arcs.append(Arc(tops[n - 2], node(n, 1), n, CLOSURE))
    return ArcGraph(
        n=n,
        s=s,
        a=a,
        bases=tuple(bases[: n + 1]),
        node_count=node_count,
        arcs=tuple(arcs),
        puncture_arcs=tuple(puncture_arcs),
        closed=closed_by_above,
        top_start=top_start if closed_by_above else -1,
    )


def _arc_index_of(arcs: list[Arc], u: int, v: int) -> int:
    # the wanted arc is always among the ones just appended for this zone
    for idx in range(len(arcs) - 1, -1, -1):
        arc = arcs[idx]
        if (arc.u == u and arc.v == v) or (arc.u == v and arc.v == u):
            return idx
    raise AssertionError(f"no arc between nodes {u} and {v}")


def component_count(g: ArcGraph) -> int:
    """Number of curves of the diagram (connected components of the graph)."""
    part = Partition(g.node_count)
    for arc in g.arcs:
        part.union(arc.u, arc.v)
    return part.count


def is_actual(c: VirtualCoordinates) -> bool:
    """True when the tuple is the coordinate tuple of a braid.

    Equivalent to the reconstructed diagram having a single curve.
    """
    return component_count(build_arc_graph(c)) == 1


def tightness_check(g: ArcGraph) -> bool:
    """Self-check of the construction: minimal same-line arcs carry punctures.

    Every arc joining two vertically consecutive points of one line must
    carry exactly one puncture.  build_arc_graph guarantees this (the only
    such arcs are the innermost box arcs, which receive the zone puncture),
    so a False here means the construction is broken.
    """
    if g.closed:
        raise ValueError("tightness is checked on open graphs")
    punctures_on = {}
    for idx in g.puncture_arcs:
        punctures_on[idx] = punctures_on.get(idx, 0) + 1
    for idx, arc in enumerate(g.arcs):
        li, ju = g.line_of(arc.u)
        lj, jv = g.line_of(arc.v)
        if li == lj and abs(ju - jv) == 1:
            if punctures_on.get(idx, 0) != 1:
                return False
    return True


def zone_noninterleaving(g: ArcGraph) -> bool:
    """True when no two arcs of one zone interleave along the zone boundary.

    Walking up the left line and back down the right line visits each arc's
    endpoints; in that circular order the arcs must nest like balanced
    parentheses.  Holds for every graph the construction produces.
    """
    n, s = g.n, g.s
    first = g.node(0, 1)
    last = g.node(n, 1)
    for i in range(1, n + 1):
        left_count = 2 * s[i - 1] + 1 + (1 if g.closed and 1 <= i - 1 <= n - 1 else 0)
        right_count = 2 * s[i] + 1 + (1 if g.closed and 1 <= i <= n - 1 else 0)

        def seq_pos(v: int, is_closure: bool) -> float:
            # in the closed graph the endpoint markers carry two arcs; the
            # closure one leaves/arrives above the regular one, so it gets
            # its own boundary slot half a step toward the top
            line, j = g.line_of(v)
            if line == i - 1:
                return j + (0.5 if is_closure and v == first else 0.0)
            pos = left_count + (right_count - j + 1)
            return pos - (0.5 if is_closure and v == last else 0.0)

        endpoints: list[tuple[float, int]] = []
        for idx, arc in enumerate(g.arcs):
            if arc.zone == i:
                closure = arc.kind == CLOSURE
                endpoints.append((seq_pos(arc.u, closure), idx))
                endpoints.append((seq_pos(arc.v, closure), idx))
        endpoints.sort()
        stack: list[int] = []
        open_set: set[int] = set()
        for _, idx in endpoints:
            if idx in open_set:
                if not stack or stack[-1] != idx:
                    return False
                stack.pop()
                open_set.discard(idx)
            else:
                stack.append(idx)
                open_set.add(idx)
        if stack:
            return False
    return True
