"""Independent reference computations, deliberately naive and free of package internals."""

import itertools

INF = float("inf")


def floyd_warshall(n, edges, directed):
    d = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for u, v in edges:
        d[u][v] = 1
        if not directed:
            d[v][u] = 1
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


def all_simple_path_lengths(n, edges, src, dst):
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    out = []

    def dfs(v, seen):
        if v == dst:
            out.append(len(seen) - 1)
            return
        for w in adj[v]:
            if w not in seen:
                dfs(w, seen + [w])

    dfs(src, [src])
    return out


def order_time(d, seq):
    return sum(d[a][b] for a, b in zip(seq, seq[1:]))


def extreme_times(n, edges, directed):
    """(min, max) communication time over all n! visiting sequences."""
    d = floyd_warshall(n, edges, directed)
    totals = [order_time(d, seq) for seq in itertools.permutations(range(n))]
    return min(totals), max(totals)


def strongly_connected(n, edges):
    d = floyd_warshall(n, edges, True)
    return all(d[i][j] < INF for i in range(n) for j in range(n))


def connected_by_union_find(n, edges):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for u, v in edges:
        parent[find(u)] = find(v)
    return len({find(v) for v in range(n)}) == 1
