"""Graph representation, BFS primitives and the generators used throughout the package.

Vertices are the integers ``0..n-1``. Undirected edges are stored as ``(u, v)``
with ``u < v``; directed arcs keep their orientation.
"""

from __future__ import annotations

import heapq
import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional, Union

import numpy as np

from greedyorder.errors import BudgetError, DomainError, SamplingError

RngLike = Union[int, np.random.Generator, np.random.SeedSequence, None]

UNREACHABLE = -1

# enumeration caps: 2^15 undirected graphs at n=6, 2^12 digraphs at n=4
MAX_ENUM_UNDIRECTED = 6
MAX_ENUM_DIRECTED = 4


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset
    directed: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"graph needs at least one vertex, got n={self.n}")
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not self.directed and u > v:
                raise ValueError(f"undirected edge ({u}, {v}) not stored canonically")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], directed: bool = False) -> "Graph":
        """Build a graph, canonicalising undirected pairs and dropping repeats."""
        canon = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if not directed and u > v:
                u, v = v, u
            canon.add((u, v))
        return cls(n, frozenset(canon), directed)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Out-neighbours of every vertex in ascending id order."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            if not self.directed:
                adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def distances(self) -> np.ndarray:
        """All-pairs BFS hop counts; ``UNREACHABLE`` (-1) where no path exists."""
        dist = np.full((self.n, self.n), UNREACHABLE, dtype=np.int64)
        adj = self.adjacency
        for s in range(self.n):
            row = dist[s]
            row[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                du = row[u] + 1
                for w in adj[u]:
                    if row[w] == UNREACHABLE:
                        row[w] = du
                        queue.append(w)
        dist.setflags(write=False)
        return dist

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        if not self.directed and u > v:
            u, v = v, u
        return (u, v) in self.edges

    def with_edge(self, u: int, v: int) -> "Graph":
        return Graph.from_edges(self.n, itertools.chain(self.edges, [(u, v)]), self.directed)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def _check_vertex(self, v: int) -> None:
        if not (isinstance(v, (int, np.integer)) and 0 <= v < self.n):
            raise ValueError(f"invalid vertex id {v!r} for n={self.n}")

    # edge-list text format
    def to_edgelist(self) -> str:
        kind = "directed" if self.directed else "undirected"
        lines = [f"n {self.n} {kind}"]
        lines.extend(f"{u} {v}" for u, v in self.sorted_edges())
        return "\n".join(lines) + "\n"

    @classmethod
    def from_edgelist(cls, text: str) -> "Graph":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty graph file")
        header = lines[0].split()
        if len(header) != 3 or header[0] != "n" or header[2] not in ("directed", "undirected"):
            raise ValueError(f"bad header line {lines[0]!r}; expected 'n <count> <directed|undirected>'")
        n = int(header[1])
        directed = header[2] == "directed"
        edges = []
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != 2:
                raise ValueError(f"bad edge line {ln!r}")
            edges.append((int(parts[0]), int(parts[1])))
        g = cls.from_edges(n, edges, directed)
        if len(g.edges) != len(edges):
            raise ValueError("duplicate edges in edge list")
        return g


@dataclass(frozen=True)
class Walk:
    vertices: tuple[int, ...]

    @property
    def hop_count(self) -> int:
        return len(self.vertices) - 1

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def is_valid_in(self, g: Graph) -> bool:
        return all(g.has_edge(a, b) for a, b in zip(self.vertices, self.vertices[1:]))

    def is_spanning(self, g: Graph) -> bool:
        return set(self.vertices) == set(range(g.n))


@dataclass(frozen=True)
class Path(Walk):
    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("path vertices must be distinct")


def shortest_path_hops(g: Graph, src: int, dst: int) -> Optional[int]:
    """Minimum number of edges on a ``src -> dst`` path, or ``None`` if unreachable."""
    g._check_vertex(src)
    g._check_vertex(dst)
    d = int(g.distances[src, dst])
    return None if d == UNREACHABLE else d


def shortest_path(g: Graph, src: int, dst: int) -> Optional[Path]:
    g._check_vertex(src)
    g._check_vertex(dst)
    parent = {src: None}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        if u == dst:
            break
        for w in g.adjacency[u]:
            if w not in parent:
                parent[w] = u
                queue.append(w)
    if dst not in parent:
        return None
    out = [dst]
    while parent[out[-1]] is not None:
        out.append(parent[out[-1]])
    return Path(tuple(reversed(out)))


def _reaches_all(adj, n: int) -> bool:
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == n


def is_connected(g: Graph) -> bool:
    """Connectivity for undirected graphs, strong connectivity for directed ones."""
    if "distances" in g.__dict__:
        return bool((g.distances != UNREACHABLE).all())
    if not _reaches_all(g.adjacency, g.n):
        return False
    if not g.directed:
        return True
    reverse: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in g.edges:
        reverse[v].append(u)
    return _reaches_all(reverse, g.n)


def diameter(g: Graph) -> int:
    if not is_connected(g):
        raise DomainError("diameter is undefined on a disconnected graph")
    return int(g.distances.max())


def is_tree(g: Graph) -> bool:
    return not g.directed and len(g.edges) == g.n - 1 and is_connected(g)


def gen_line(n: int) -> Graph:
    if n < 2:
        raise ValueError("line graph needs n >= 2")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def gen_star(n: int) -> Graph:
    """Star with vertex 0 at the center."""
    if n < 3:
        raise ValueError("star graph needs n >= 3")
    return Graph.from_edges(n, ((0, i) for i in range(1, n)))


def gen_complete(n: int) -> Graph:
    if n < 2:
        raise ValueError("complete graph needs n >= 2")
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def gen_directed_cycle(n: int) -> Graph:
    if n < 2:
        raise ValueError("directed cycle needs n >= 2")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)), directed=True)


def gen_dn(n: int) -> Graph:
    """Directed graph whose best ordering is as slow as possible.

    With 1-based names ``v_1..v_n`` and ``h = ceil(n/2)``: a chain
    ``v_1 -> ... -> v_{h-1}``, then every ``v_j`` with ``j >= h`` gets an arc in
    from ``v_{h-1}`` and an arc out to ``v_1``. Vertex ``v_j`` has id ``j - 1``.
    """
    if n < 3:
        raise ValueError("D_n needs n >= 3")
    h = -(-n // 2)
    arcs = [(j - 1, j) for j in range(1, h - 1)]
    hub = h - 2
    for j in range(h, n + 1):
        arcs.append((hub, j - 1))
        arcs.append((j - 1, 0))
    return Graph.from_edges(n, arcs, directed=True)


def gen_erdos_renyi(n: int, p: float, rng_seed: RngLike = None) -> Graph:
    """G(n, p): every unordered pair is an edge independently with probability ``p``."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    rows, cols = _er_pairs(n, p, np.random.default_rng(rng_seed))
    return Graph(n, frozenset(zip(rows.tolist(), cols.tolist())), False)


def _er_pairs(n: int, p: float, rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    rows, cols = np.triu_indices(n, 1)
    keep = rng.random(rows.size) < p
    return rows[keep], cols[keep]


def sample_connected_erdos_renyi(
    n: int, p: float, rng: np.random.Generator, max_attempts: int = 100_000
) -> tuple[Graph, int]:
    """Rejection-sample a connected G(n, p); returns the graph and the number of rejected draws."""
    if not 0.0 < p <= 1.0:
        raise ValueError(f"connected sampling needs 0 < p <= 1, got {p}")
    for attempt in range(max_attempts):
        rows, cols = _er_pairs(n, p, rng)
        # cheap rejection: an isolated vertex already rules out connectivity
        if n > 1 and np.count_nonzero(np.bincount(np.concatenate([rows, cols]), minlength=n)) < n:
            continue
        g = Graph(n, frozenset(zip(rows.tolist(), cols.tolist())), False)
        if is_connected(g):
            return g, attempt
    raise SamplingError(f"no connected G({n}, {p}) sample in {max_attempts} attempts")


def gen_connected_erdos_renyi(n: int, p: float, rng_seed: RngLike = None, max_attempts: int = 100_000) -> Graph:
    return sample_connected_erdos_renyi(n, p, np.random.default_rng(rng_seed), max_attempts)[0]


def enumerate_connected_graphs(n: int, directed: bool = False) -> Iterator[Graph]:
    """Every labeled (strongly) connected graph on ``n`` vertices, each exactly once."""
    cap = MAX_ENUM_DIRECTED if directed else MAX_ENUM_UNDIRECTED
    if n > cap:
        raise BudgetError(f"enumeration capped at n={cap} for {'directed' if directed else 'undirected'} graphs")
    if n < 1:
        raise ValueError("n must be >= 1")
    if directed:
        slots = list(itertools.permutations(range(n), 2))
    else:
        slots = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(slots)):
        edges = frozenset(e for k, e in enumerate(slots) if mask >> k & 1)
        g = Graph(n, edges, directed)
        if is_connected(g):
            yield g


def enumerate_labeled_trees(n: int) -> Iterator[Graph]:
    """All ``n^(n-2)`` labeled trees, decoded from Pruefer sequences."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        yield Graph(1, frozenset())
        return
    if n == 2:
        yield Graph(2, frozenset({(0, 1)}))
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        degree = [1] * n
        for x in seq:
            degree[x] += 1
        leaves = [v for v in range(n) if degree[v] == 1]
        heapq.heapify(leaves)
        edges = set()
        for x in seq:
            leaf = heapq.heappop(leaves)
            edges.add((leaf, x) if leaf < x else (x, leaf))
            degree[x] -= 1
            if degree[x] == 1:
                heapq.heappush(leaves, x)
        u, v = heapq.heappop(leaves), heapq.heappop(leaves)
        edges.add((u, v) if u < v else (v, u))
        yield Graph(n, frozenset(edges))
