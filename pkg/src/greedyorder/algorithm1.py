"""Token-passing simulation of the distributed DFS ordering with greedy execution.

A single token carries the list of greedy actions chosen so far. A vertex
receiving the token for the first time takes the next label, computes its
greedy action and appends it. The holder then forwards the token to an
unvisited neighbour if it has one, otherwise back to its DFS parent. Each
forward or backtrack hop is one time step. The standard run stops when the
seed holds the token with nothing left to visit; the ``order-n`` variant
stops as soon as label n has been assigned.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from greedyorder.errors import DomainError
from greedyorder.graphs import Graph, is_connected
from greedyorder.ordering import Ordering
from greedyorder.submodular import SubmodularProblem, greedy_choice

VARIANTS = ("standard", "order-n")

NeighborPolicy = Callable[[Sequence[int]], int]


@dataclass
class AgentState:
    neighborhood: frozenset
    actions: tuple = ()
    order: Optional[int] = None
    parent: Optional[int] = None
    done: bool = False


@dataclass(frozen=True)
class Event:
    time: int
    src: int
    dst: int
    kind: str  # "init-forward" | "backtrack"


@dataclass
class RunTrace:
    t: int
    n: int
    seed: int
    variant: str
    ordering: Ordering
    events: list = field(default_factory=list)
    greedy_actions: list = field(default_factory=list)
    states: dict = field(default_factory=dict, repr=False)

    @property
    def forward_count(self) -> int:
        return sum(e.kind == "init-forward" for e in self.events)

    @property
    def backtrack_count(self) -> int:
        return sum(e.kind == "backtrack" for e in self.events)

    def events_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["time", "from", "to", "kind"])
        for e in self.events:
            w.writerow([e.time, e.src, e.dst, e.kind])
        return buf.getvalue()

    def summary_json(self) -> str:
        return json.dumps(
            {"t": self.t, "n": self.n, "seed": self.seed, "ordering": list(self.ordering.labels), "variant": self.variant}
        )


def run_algorithm1(
    g: Graph,
    seed: int,
    problem: Optional[SubmodularProblem] = None,
    variant: str = "standard",
    pick: NeighborPolicy = min,
) -> RunTrace:
    """Run the distributed ordering from ``seed`` and return the full trace.

    Without a ``problem`` only labels and hop counts are tracked and every
    action slot holds ``None``. ``pick`` chooses among unvisited neighbours
    (smallest id by default).
    """
    if g.directed:
        raise ValueError("the distributed ordering is defined on undirected graphs")
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; choose from {VARIANTS}")
    g._check_vertex(seed)
    if not is_connected(g):
        raise DomainError("the distributed ordering needs a connected graph")
    if problem is not None and problem.n_agents != g.n:
        raise ValueError(f"problem has {problem.n_agents} agents but graph has {g.n} vertices")

    states = {v: AgentState(frozenset(g.adjacency[v])) for v in range(g.n)}
    t = 0
    events: list[Event] = []
    covered = frozenset()

    # explicit loop in place of the init/message recursion (long lines overflow the stack)
    v, parent, alpha, label = seed, None, (), 1
    fresh = True
    while True:
        st = states[v]
        if fresh:
            st.done = True
            st.order = label
            st.parent = parent
            if problem is None:
                action = None
            else:
                action = greedy_choice(problem, v, covered)
                covered = covered | action
            alpha = alpha + (action,)
            st.actions = alpha
            if variant == "order-n" and label == g.n:
                break
        st.actions = alpha
        unvisited = [w for w in g.adjacency[v] if not states[w].done]
        if unvisited:
            w = pick(unvisited)
            t += 1
            events.append(Event(t, v, w, "init-forward"))
            v, parent, label, fresh = w, v, len(alpha) + 1, True
        elif st.parent is not None:
            t += 1
            events.append(Event(t, v, st.parent, "backtrack"))
            v, fresh = st.parent, False
        else:
            break

    ordering = Ordering(tuple(states[u].order for u in range(g.n)))
    greedy = list(alpha) if problem is not None else [None] * g.n
    return RunTrace(t, g.n, seed, variant, ordering, events, greedy, states)


def verify_prop1_bound(g: Graph, seed: int) -> bool:
    """True when the standard run finishes within ``2n - 2`` hops."""
    return run_algorithm1(g, seed).t <= 2 * g.n - 2
