"""Multiagent set-function objectives and the ordered greedy.

Each agent owns a list of actions, every action a subset of a shared ground
set, and the empty set is always present as the opt-out. A joint action is
scored by applying the objective to the union of the chosen subsets.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from greedyorder.errors import BudgetError
from greedyorder.graphs import RngLike
from greedyorder.ordering import Ordering

TOL = 1e-9
MAX_PROFILES = 10**6
MAX_CHECK_GROUND = 12

SetFunction = Callable[[frozenset], float]


@dataclass(frozen=True)
class CoverageObjective:
    """Weighted coverage: sum of the weights of the covered elements."""

    weights: tuple[float, ...]

    def __post_init__(self):
        if any(w < 0 for w in self.weights):
            raise ValueError("coverage weights must be nonnegative")

    def __call__(self, covered: frozenset) -> float:
        return float(sum(self.weights[e] for e in covered))


@dataclass(frozen=True)
class SubmodularProblem:
    ground_size: int
    agents: tuple[tuple[frozenset, ...], ...]
    objective: SetFunction = field(compare=False)

    def __post_init__(self):
        for i, actions in enumerate(self.agents):
            if frozenset() not in actions:
                raise ValueError(f"agent {i} has no opt-out (empty) action")
            for a in actions:
                if any(not 0 <= e < self.ground_size for e in a):
                    raise ValueError(f"agent {i} action {sorted(a)} leaves the ground set")

    @property
    def n_agents(self) -> int:
        return len(self.agents)

    @classmethod
    def coverage(cls, weights: Sequence[float], agents: Sequence[Sequence[Sequence[int]]]) -> "SubmodularProblem":
        acts = tuple(tuple(frozenset(a) for a in agent) for agent in agents)
        return cls(len(weights), acts, CoverageObjective(tuple(float(w) for w in weights)))

    def to_json(self) -> str:
        if not isinstance(self.objective, CoverageObjective):
            raise TypeError("only coverage problems have a JSON form")
        return json.dumps(
            {
                "ground_size": self.ground_size,
                "weights": list(self.objective.weights),
                "agents": [[sorted(a) for a in agent] for agent in self.agents],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "SubmodularProblem":
        data = json.loads(text)
        weights = data["weights"]
        if len(weights) != data["ground_size"]:
            raise ValueError("weights length does not match ground_size")
        return cls.coverage(weights, data["agents"])


@dataclass(frozen=True)
class JointAction:
    choices: tuple[frozenset, ...]

    @property
    def union(self) -> frozenset:
        return frozenset().union(*self.choices)


def evaluate_w(problem: SubmodularProblem, joint: JointAction) -> float:
    if len(joint.choices) != problem.n_agents:
        raise ValueError("joint action has the wrong number of agents")
    for i, a in enumerate(joint.choices):
        if a not in problem.agents[i]:
            raise ValueError(f"action {sorted(a)} is not available to agent {i}")
    return problem.objective(joint.union)


def greedy_choice(problem: SubmodularProblem, agent: int, prior: frozenset) -> frozenset:
    """Best action for ``agent`` given what earlier agents already cover.

    Later agents are opted out, so only ``prior`` and the candidate count. The
    first action in list order wins ties.
    """
    f = problem.objective
    best, best_val = None, -math.inf
    for a in problem.agents[agent]:
        val = f(prior | a)
        if val > best_val + TOL:
            best, best_val = a, val
    return best


def greedy_execute(problem: SubmodularProblem, pi: Ordering) -> tuple[JointAction, float]:
    if pi.n != problem.n_agents:
        raise ValueError(f"ordering covers {pi.n} agents but problem has {problem.n_agents}")
    choices: list[Optional[frozenset]] = [None] * problem.n_agents
    covered = frozenset()
    for agent in pi.sequence:
        a = greedy_choice(problem, agent, covered)
        choices[agent] = a
        covered = covered | a
    joint = JointAction(tuple(choices))
    return joint, evaluate_w(problem, joint)


def brute_force_opt(problem: SubmodularProblem) -> tuple[JointAction, float]:
    sizes = [len(a) for a in problem.agents]
    if math.prod(sizes) > MAX_PROFILES:
        raise BudgetError(f"{math.prod(sizes)} joint profiles exceeds the {MAX_PROFILES} budget")
    best, best_val = None, -math.inf
    for idx in itertools.product(*(range(s) for s in sizes)):
        joint = JointAction(tuple(problem.agents[i][k] for i, k in enumerate(idx)))
        val = problem.objective(joint.union)
        if val > best_val + TOL:
            best, best_val = joint, val
    return best, best_val


def check_submodular_monotone(f: SetFunction, ground_set: Sequence[int]) -> bool:
    """Exhaustively check normalization, monotonicity and submodularity.

    Uses the local forms, which are equivalent to the global definitions:
    ``f(A+x) >= f(A)`` and ``f(A+x) + f(A+y) >= f(A+x+y) + f(A)`` for all
    ``A`` and distinct ``x, y`` outside ``A``.
    """
    ground = list(ground_set)
    if len(ground) > MAX_CHECK_GROUND:
        raise BudgetError(f"checker enumerates 2^|E|; capped at |E|={MAX_CHECK_GROUND}")
    m = len(ground)
    value = {}
    for mask in range(1 << m):
        value[mask] = f(frozenset(ground[k] for k in range(m) if mask >> k & 1))
    if abs(value[0]) > TOL:
        return False
    for mask in range(1 << m):
        base = value[mask]
        outside = [k for k in range(m) if not mask >> k & 1]
        for x in outside:
            if value[mask | 1 << x] < base - TOL:
                return False
        for x, y in itertools.combinations(outside, 2):
            if value[mask | 1 << x] + value[mask | 1 << y] < value[mask | 1 << x | 1 << y] + base - TOL:
                return False
    return True


def gen_random_coverage_problem(
    n_agents: int, ground_size: int, actions_per_agent: int, rng_seed: RngLike = None
) -> SubmodularProblem:
    """Random weighted-coverage instance; each agent gets the opt-out plus ``actions_per_agent`` nonempty subsets."""
    if min(n_agents, ground_size, actions_per_agent) < 1:
        raise ValueError("all size parameters must be >= 1")
    rng = np.random.default_rng(rng_seed)
    weights = rng.random(ground_size).tolist()
    agents = []
    for _ in range(n_agents):
        actions = [[]]
        for _ in range(actions_per_agent):
            size = int(rng.integers(1, ground_size + 1))
            actions.append(sorted(rng.choice(ground_size, size=size, replace=False).tolist()))
        agents.append(actions)
    return SubmodularProblem.coverage(weights, agents)
