import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from greedyorder.errors import BudgetError
from greedyorder.ordering import Ordering
from greedyorder.submodular import (
    CoverageObjective,
    JointAction,
    SubmodularProblem,
    brute_force_opt,
    check_submodular_monotone,
    evaluate_w,
    gen_random_coverage_problem,
    greedy_execute,
)

EMPTY = frozenset()


def two_agent_instance():
    return SubmodularProblem.coverage([1, 1, 1], [[[], [0, 1]], [[], [1], [2]]])


def test_problem_requires_opt_out():
    with pytest.raises(ValueError):
        SubmodularProblem.coverage([1, 1], [[[0]]])
    with pytest.raises(ValueError):
        SubmodularProblem.coverage([1, 1], [[[], [5]]])


def test_coverage_weights_nonnegative():
    with pytest.raises(ValueError):
        CoverageObjective((1.0, -0.5))


def test_evaluate_w_examples():
    p = SubmodularProblem.coverage([1] * 4, [[[], [0, 1]], [[], [2, 3], [0, 1]]])
    assert evaluate_w(p, JointAction((EMPTY, EMPTY))) == 0
    assert evaluate_w(p, JointAction((frozenset({0, 1}), frozenset({2, 3})))) == 4
    assert evaluate_w(p, JointAction((frozenset({0, 1}), frozenset({0, 1})))) == 2


def test_evaluate_w_rejects_foreign_action():
    with pytest.raises(ValueError):
        evaluate_w(two_agent_instance(), JointAction((frozenset({2}), EMPTY)))
    with pytest.raises(ValueError):
        evaluate_w(two_agent_instance(), JointAction((EMPTY,)))


def test_greedy_two_agent_example():
    # all 6 joint profiles enumerated by hand: values 0,1,1,2,2,3
    joint, value = greedy_execute(two_agent_instance(), Ordering.identity(2))
    assert joint.choices == (frozenset({0, 1}), frozenset({2}))
    assert value == 3


def test_brute_force_two_agent_example():
    _, value = brute_force_opt(two_agent_instance())
    assert value == 3


def test_single_agent_greedy_is_optimal():
    p = SubmodularProblem.coverage([0.2, 0.5, 0.9], [[[], [0], [1, 2], [0, 1]]])
    joint, value = greedy_execute(p, Ordering((1,)))
    assert joint.choices == (frozenset({1, 2}),)
    assert value == pytest.approx(brute_force_opt(p)[1], abs=1e-9)


def test_all_opt_out_problem():
    p = SubmodularProblem.coverage([1.0, 2.0], [[[]], [[]]])
    assert brute_force_opt(p)[1] == 0
    assert greedy_execute(p, Ordering.identity(2))[1] == 0


def test_tie_break_prefers_earlier_action():
    p = SubmodularProblem.coverage([1, 1], [[[], [0], [1]]])
    assert greedy_execute(p, Ordering((1,)))[0].choices == (frozenset({0}),)
    zero = SubmodularProblem.coverage([0, 0], [[[], [0]]])
    assert greedy_execute(zero, Ordering((1,)))[0].choices == (EMPTY,)


def test_brute_force_budget():
    agents = [[[]] + [[k] for k in range(9)] for _ in range(7)]
    with pytest.raises(BudgetError):
        brute_force_opt(SubmodularProblem.coverage([1] * 9, agents))


def test_checker_examples():
    assert check_submodular_monotone(CoverageObjective((0.3, 0.0, 2.5, 1.0)), range(4))
    assert check_submodular_monotone(lambda s: 0.0, range(5))
    # A = {}, B = {0}, x = 1: f({1}) - f({}) = 1 < f({0,1}) - f({0}) = 3
    assert not check_submodular_monotone(lambda s: len(s) ** 2, range(3))


def test_checker_rejects_non_monotone_and_unnormalized():
    assert not check_submodular_monotone(lambda s: 1.0 + len(s), range(3))
    assert not check_submodular_monotone(lambda s: -float(len(s)), range(3))


def test_checker_accepts_concave_of_cardinality():
    assert check_submodular_monotone(lambda s: min(len(s), 2), range(5))


def test_checker_budget():
    with pytest.raises(BudgetError):
        check_submodular_monotone(lambda s: 0.0, range(13))


def test_generator_contract():
    p = gen_random_coverage_problem(4, 6, 3, 17)
    assert all(EMPTY in a for a in p.agents)
    assert all(len(a) == 4 for a in p.agents)
    assert check_submodular_monotone(p.objective, range(p.ground_size))
    assert gen_random_coverage_problem(4, 6, 3, 17) == p
    assert gen_random_coverage_problem(4, 6, 3, 17).objective == p.objective


def test_json_roundtrip():
    p = gen_random_coverage_problem(3, 5, 2, 1)
    q = SubmodularProblem.from_json(p.to_json())
    assert q == p and q.objective == p.objective
    data = json.loads(p.to_json())
    assert set(data) == {"ground_size", "weights", "agents"}
    assert all([] in agent for agent in data["agents"])


def test_json_requires_opt_out():
    with pytest.raises(ValueError):
        SubmodularProblem.from_json(json.dumps({"ground_size": 1, "weights": [1], "agents": [[[0]]]}))


problems = st.builds(
    gen_random_coverage_problem,
    st.integers(1, 5),
    st.integers(1, 8),
    st.integers(1, 3),
    st.integers(0, 2**31),
)


@settings(max_examples=80)
@given(problems, st.data())
def test_half_guarantee_any_ordering(p, data):
    pi = Ordering(tuple(data.draw(st.permutations(range(1, p.n_agents + 1)))))
    _, opt = brute_force_opt(p)
    _, value = greedy_execute(p, pi)
    assert value >= 0.5 * opt - 1e-9


@settings(max_examples=80)
@given(problems, st.data())
def test_greedy_marginals_nonnegative(p, data):
    pi = Ordering(tuple(data.draw(st.permutations(range(1, p.n_agents + 1)))))
    joint, _ = greedy_execute(p, pi)
    covered = EMPTY
    for agent in pi.sequence:
        a = joint.choices[agent]
        assert p.objective(covered | a) >= p.objective(covered) - 1e-12
        covered |= a


@settings(max_examples=60)
@given(problems, st.data())
def test_w_ignores_agent_order(p, data):
    joint = JointAction(tuple(data.draw(st.sampled_from(a)) for a in p.agents))
    perm = data.draw(st.permutations(range(p.n_agents)))
    union = frozenset().union(*(joint.choices[i] for i in perm))
    assert evaluate_w(p, joint) == pytest.approx(p.objective(union), abs=1e-12)


@settings(max_examples=60)
@given(st.integers(1, 4), st.integers(1, 3), st.integers(0, 2**31), st.data())
def test_disjoint_modular_greedy_is_optimal(n_agents, per_agent, seed, data):
    # every agent owns a private block of elements, so marginal gains never interact
    size = n_agents * per_agent
    weights = data.draw(st.lists(st.floats(0, 1), min_size=size, max_size=size))
    agents = []
    for i in range(n_agents):
        block = list(range(i * per_agent, (i + 1) * per_agent))
        subsets = [list(c) for r in range(1, per_agent + 1) for c in itertools.combinations(block, r)]
        agents.append([[]] + subsets[:3])
    p = SubmodularProblem.coverage(weights, agents)
    pi = Ordering(tuple(data.draw(st.permutations(range(1, n_agents + 1)))))
    assert greedy_execute(p, pi)[1] == pytest.approx(brute_force_opt(p)[1], abs=1e-9)
