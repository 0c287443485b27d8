"""Communication time of agent orderings and the orderings that extremise it.

The communication time of an ordering is the sum, over consecutive labels
``i -> i+1``, of the BFS hop distance between the two vertices. Every
ordering producer here returns a report whose time is recomputed through
:func:`comm_time`, so a construction can never disagree with the functional.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

import numpy as np

from greedyorder._search import extreme_ordering
from greedyorder.errors import BudgetError, DomainError
from greedyorder.graphs import RngLike, Graph, Walk, diameter, is_connected, is_tree

MAX_EXACT_N = 9
MAX_WALK_N = 12


@dataclass(frozen=True)
class Ordering:
    """Bijection vertex -> label; ``labels[v]`` is the 1-based label of vertex ``v``."""

    labels: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.labels) != list(range(1, len(self.labels) + 1)):
            raise ValueError(f"labels {self.labels} are not a bijection onto 1..{len(self.labels)}")

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def sequence(self) -> tuple[int, ...]:
        """Vertices in label order (the inverse map)."""
        seq = [0] * self.n
        for v, lab in enumerate(self.labels):
            seq[lab - 1] = v
        return tuple(seq)

    def vertex_at(self, label: int) -> int:
        return self.sequence[label - 1]

    @classmethod
    def from_sequence(cls, vertices) -> "Ordering":
        labels = [0] * len(vertices)
        for i, v in enumerate(vertices):
            labels[v] = i + 1
        return cls(tuple(labels))

    @classmethod
    def identity(cls, n: int) -> "Ordering":
        return cls(tuple(range(1, n + 1)))

    def to_line(self) -> str:
        return " ".join(map(str, self.labels))

    @classmethod
    def from_line(cls, text: str) -> "Ordering":
        return cls(tuple(int(tok) for tok in text.split()))


@dataclass(frozen=True)
class TimeBreakdown:
    per_step: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.per_step)

    def to_csv_row(self) -> str:
        return ",".join(map(str, (self.total, *self.per_step)))


@dataclass(frozen=True)
class OrderingReport:
    ordering: Ordering
    time: TimeBreakdown
    method: str
    walk: Optional[Walk] = None

    @property
    def total(self) -> int:
        return self.time.total


def comm_time(g: Graph, pi: Ordering) -> TimeBreakdown:
    """Hop counts between consecutively labeled vertices."""
    if pi.n != g.n:
        raise ValueError(f"ordering covers {pi.n} vertices but graph has {g.n}")
    if not is_connected(g):
        raise DomainError("communication time needs a (strongly) connected graph")
    seq = pi.sequence
    dist = g.distances
    return TimeBreakdown(tuple(int(dist[a, b]) for a, b in zip(seq, seq[1:])))


def _report(g: Graph, pi: Ordering, method: str, walk: Optional[Walk] = None) -> OrderingReport:
    return OrderingReport(pi, comm_time(g, pi), method, walk)


def _exact(g: Graph, maximize: bool) -> OrderingReport:
    if g.n > MAX_EXACT_N:
        raise BudgetError(f"exact ordering search is capped at n={MAX_EXACT_N}, got n={g.n}")
    if not is_connected(g):
        raise DomainError("communication time needs a (strongly) connected graph")
    total, labels = extreme_ordering(g.distances, maximize)
    rep = _report(g, Ordering(tuple(int(x) + 1 for x in labels)), "exact-max" if maximize else "exact-min")
    assert rep.total == total
    return rep


def best_ordering_exact(g: Graph) -> OrderingReport:
    """Minimum communication time over all n! orderings.

    Ties go to the lexicographically smallest label vector ``(label(v0), ..., label(v_{n-1}))``.
    """
    return _exact(g, maximize=False)


def worst_ordering_exact(g: Graph) -> OrderingReport:
    """Maximum communication time over all n! orderings; same tie-break as the minimum."""
    return _exact(g, maximize=True)


def minimum_spanning_walk(g: Graph) -> Walk:
    """Fewest-hop walk visiting every vertex.

    BFS over ``(vertex, visited-set)`` states started from every single-vertex
    state at once; the first state whose visited set is full ends an optimal walk.
    """
    if g.directed:
        raise ValueError("spanning-walk search is defined for undirected graphs")
    if g.n > MAX_WALK_N:
        raise BudgetError(f"spanning-walk search is capped at n={MAX_WALK_N}, got n={g.n}")
    if not is_connected(g):
        raise DomainError("a disconnected graph has no spanning walk")
    n = g.n
    full = (1 << n) - 1
    adj = g.adjacency
    parent: dict[tuple[int, int], Optional[tuple[int, int]]] = {}
    queue: deque[tuple[int, int]] = deque()
    for v in range(n):
        state = (v, 1 << v)
        parent[state] = None
        queue.append(state)
    goal = None
    while queue:
        state = queue.popleft()
        v, mask = state
        if mask == full:
            goal = state
            break
        for w in adj[v]:
            nxt = (w, mask | 1 << w)
            if nxt not in parent:
                parent[nxt] = state
                queue.append(nxt)
    vertices = []
    while goal is not None:
        vertices.append(goal[0])
        goal = parent[goal]
    return Walk(tuple(reversed(vertices)))


def best_ordering_spanning_walk(g: Graph) -> OrderingReport:
    """Label vertices by first appearance along a minimum spanning walk."""
    walk = minimum_spanning_walk(g)
    first_seen = list(dict.fromkeys(walk.vertices))
    return _report(g, Ordering.from_sequence(first_seen), "spanning-walk", walk)


def tree_tmin_closed_form(g: Graph) -> int:
    """``2(n-1) - diameter`` for a tree."""
    if not is_tree(g):
        raise ValueError("closed form applies to connected undirected trees only")
    return 2 * (g.n - 1) - diameter(g)


def worst_line_ordering(n: int) -> Ordering:
    """Alternating labeling of the line ``0 - 1 - ... - n-1`` that maximises communication time.

    Label 1 sits at the middle position ``n // 2``; the following labels swing
    between the lowest and highest unused positions, so label n lands next to
    the middle as well. Total hops: ``n*n // 2 - 1``.
    """
    if n < 2:
        raise ValueError("worst line ordering needs n >= 2")
    start = n // 2
    low = [x for x in range(n) if x != start]
    seq = [start]
    lo, hi = 0, len(low) - 1
    take_low = True
    while lo <= hi:
        if take_low:
            seq.append(low[lo])
            lo += 1
        else:
            seq.append(low[hi])
            hi -= 1
        take_low = not take_low
    return Ordering.from_sequence(seq)


def worst_directed_cycle_ordering(n: int) -> Ordering:
    """Labels run against the arcs ``i -> i+1``, so every step walks n-1 arcs."""
    if n < 3:
        raise ValueError("worst directed-cycle ordering needs n >= 3")
    return Ordering.from_sequence([(-k) % n for k in range(n)])


def dn_best_ordering(n: int) -> Ordering:
    # v_n first, then v_1..v_{n-1}
    if n < 3:
        raise ValueError("D_n ordering needs n >= 3")
    return Ordering.from_sequence([n - 1, *range(n - 1)])


def random_ordering(n: int, rng_seed: RngLike = None) -> Ordering:
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = np.random.default_rng(rng_seed)
    return Ordering(tuple(int(x) + 1 for x in rng.permutation(n)))


def constructed_report(g: Graph, pi: Ordering, method: str) -> OrderingReport:
    """Wrap a hand-built ordering (line worst, cycle worst, D_n best, random) into a report."""
    return _report(g, pi, method)
