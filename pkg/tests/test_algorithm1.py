import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from greedyorder.algorithm1 import run_algorithm1, verify_prop1_bound
from greedyorder.errors import DomainError
from greedyorder.graphs import Graph, gen_complete, gen_connected_erdos_renyi, gen_directed_cycle, gen_line, gen_star
from greedyorder.ordering import Ordering, comm_time
from greedyorder.submodular import gen_random_coverage_problem, greedy_execute

from conftest import connected_graphs


@pytest.mark.parametrize("n", range(3, 12))
def test_star_every_seed_hits_bound(n):
    g = gen_star(n)
    for s in range(n):
        assert run_algorithm1(g, s).t == 2 * n - 2


def test_star_center_seed_ten():
    trace = run_algorithm1(gen_star(10), 0)
    assert trace.t == 18
    assert verify_prop1_bound(gen_star(10), 0)


def test_line_order_n_variant_from_endpoint():
    # hand trace: 0->1->2->3->4->5, label 6 assigned before any backtrack
    trace = run_algorithm1(gen_line(6), 0, variant="order-n")
    assert trace.t == 5
    assert trace.ordering == Ordering.identity(6)
    assert [e.kind for e in trace.events] == ["init-forward"] * 5


def test_line_standard_variant_walks_back():
    trace = run_algorithm1(gen_line(6), 0)
    assert trace.t == 10
    assert [e.kind for e in trace.events] == ["init-forward"] * 5 + ["backtrack"] * 5


def test_single_vertex():
    trace = run_algorithm1(Graph(1, frozenset()), 0)
    assert trace.t == 0
    assert trace.ordering == Ordering((1,))
    assert trace.events == []


def test_single_edge():
    # forward init plus one backtrack
    trace = run_algorithm1(gen_line(2), 0)
    assert trace.t == 2 == 2 * 2 - 2
    assert [(e.src, e.dst, e.kind) for e in trace.events] == [(0, 1, "init-forward"), (1, 0, "backtrack")]


def test_complete_graph_bound():
    for s in range(5):
        assert run_algorithm1(gen_complete(5), s).t <= 8


def test_errors():
    with pytest.raises(DomainError):
        run_algorithm1(Graph(3, frozenset({(0, 1)})), 0)
    with pytest.raises(ValueError):
        run_algorithm1(gen_directed_cycle(4), 0)
    with pytest.raises(ValueError):
        run_algorithm1(gen_line(4), 9)
    with pytest.raises(ValueError):
        run_algorithm1(gen_line(4), 0, variant="fast")
    with pytest.raises(ValueError):
        run_algorithm1(gen_line(4), 0, problem=gen_random_coverage_problem(3, 4, 2, 0))


def test_neighbor_policy_is_injectable():
    g = gen_star(5)
    assert run_algorithm1(g, 0).ordering.sequence == (0, 1, 2, 3, 4)
    assert run_algorithm1(g, 0, pick=max).ordering.sequence == (0, 4, 3, 2, 1)


def test_agent_states_after_run():
    trace = run_algorithm1(gen_line(4), 1)
    st_ = trace.states
    assert st_[1].parent is None and st_[1].order == 1
    assert all(s.done and s.order is not None for s in st_.values())
    assert all(len(s.actions) >= s.order for s in st_.values())
    assert st_[0].parent == 1


def test_trace_exports():
    trace = run_algorithm1(gen_line(3), 0)
    lines = trace.events_csv().splitlines()
    assert lines[0] == "time,from,to,kind"
    assert lines[1] == "1,0,1,init-forward"
    summary = json.loads(trace.summary_json())
    assert summary == {"t": 4, "n": 3, "seed": 0, "ordering": [1, 2, 3], "variant": "standard"}


@settings(max_examples=100)
@given(connected_graphs(min_n=1, max_n=12), st.data())
def test_run_structure(g, data):
    seed = data.draw(st.integers(0, g.n - 1))
    trace = run_algorithm1(g, seed)
    assert trace.forward_count == g.n - 1
    assert trace.backtrack_count <= g.n - 1
    assert trace.t == trace.forward_count + trace.backtrack_count <= 2 * g.n - 2
    assert sorted(trace.ordering.labels) == list(range(1, g.n + 1))
    assert trace.ordering.labels[seed] == 1
    # labels follow first-visit order
    firsts = [seed] + [e.dst for e in trace.events if e.kind == "init-forward"]
    assert trace.ordering.sequence == tuple(firsts)
    assert comm_time(g, trace.ordering).total <= trace.t


@settings(max_examples=100)
@given(connected_graphs(min_n=1, max_n=12), st.data())
def test_order_n_variant_never_slower(g, data):
    seed = data.draw(st.integers(0, g.n - 1))
    full = run_algorithm1(g, seed)
    short = run_algorithm1(g, seed, variant="order-n")
    assert short.ordering == full.ordering
    assert comm_time(g, short.ordering).total <= short.t <= full.t


@settings(max_examples=50)
@given(connected_graphs(min_n=1, max_n=10), st.data())
def test_deterministic(g, data):
    seed = data.draw(st.integers(0, g.n - 1))
    a, b = run_algorithm1(g, seed), run_algorithm1(g, seed)
    assert (a.t, a.ordering, a.events) == (b.t, b.ordering, b.events)


@settings(max_examples=60)
@given(connected_graphs(min_n=1, max_n=6), st.integers(0, 2**31), st.data())
def test_greedy_actions_match_centralized(g, pseed, data):
    problem = gen_random_coverage_problem(g.n, 6, 3, pseed)
    seed = data.draw(st.integers(0, g.n - 1))
    trace = run_algorithm1(g, seed, problem=problem)
    joint, _ = greedy_execute(problem, trace.ordering)
    by_label = [joint.choices[v] for v in trace.ordering.sequence]
    assert trace.greedy_actions == by_label


def test_random_er_graphs_within_bound():
    for k in range(200):
        g = gen_connected_erdos_renyi(20, 0.2, k)
        assert verify_prop1_bound(g, k % 20)
