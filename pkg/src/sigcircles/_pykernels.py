"""Pure-Python versions of the hot kernels.

Same signatures and outputs as the compiled ``_ckernels`` module; used when the
extension is unavailable or ``SIGCIRCLES_PURE=1`` is set.
"""
from __future__ import annotations

from .errors import BudgetExceeded


def simple_cycles(n, adj, length_max, budget):
    """All circles as canonical vertex tuples (smallest vertex first, smaller neighbour second).

    ``adj[v]`` is the sorted neighbour list of ``v``; ``length_max <= 0`` means no cap.
    """
    out = []
    blocked = [False] * n
    for s in range(n):
        path = [s]
        blocked[s] = True
        stack = [iter(adj[s])]
        while stack:
            for w in stack[-1]:
                if w == s:
                    if len(path) >= 3 and path[1] < path[-1]:
                        out.append(tuple(path))
                        if len(out) > budget:
                            raise BudgetExceeded(f"more than {budget} circles")
                    continue
                if w < s or blocked[w] or (length_max > 0 and len(path) >= length_max):
                    continue
                path.append(w)
                blocked[w] = True
                stack.append(iter(adj[w]))
                break
            else:
                stack.pop()
                blocked[path.pop()] = False
    return out


def hamiltonian_cycles(n, adj, budget):
    """Hamiltonian circles as canonical vertex tuples, by DFS from vertex 0 with degree pruning."""
    if n < 3:
        return []
    out = []
    visited = [False] * n
    visited[0] = True
    path = [0]
    adjsets = [set(a) for a in adj]

    def viable(end):
        for u in range(n):
            if visited[u]:
                continue
            free = 0
            for w in adj[u]:
                if not visited[w] or w == end or w == 0:
                    free += 1
                    if free >= 2:
                        break
            if free < 2:
                return False
        return True

    def extend(v):
        if len(path) == n:
            if 0 in adjsets[v] and path[1] < path[-1]:
                out.append(tuple(path))
                if len(out) > budget:
                    raise BudgetExceeded(f"more than {budget} Hamiltonian circles")
            return
        for w in adj[v]:
            if visited[w]:
                continue
            visited[w] = True
            path.append(w)
            if viable(w):
                extend(w)
            path.pop()
            visited[w] = False

    extend(0)
    return out


def min_switching(n, eu, ev, es):
    """Minimum negative-edge count over switchings that keep vertex 0 fixed.

    Walks the switching sets in Gray-code order. Returns ``(count, flags, mask)``
    where ``flags[e]`` marks the negative edges of the optimum whose negative-edge
    set is lexicographically least, and ``mask`` has bit ``v`` set for each
    switched vertex.
    """
    m = len(eu)
    inc = [[] for _ in range(n)]
    for e in range(m):
        inc[eu[e]].append(e)
        inc[ev[e]].append(e)
    cur = list(es)
    count = sum(1 for s in cur if s < 0)
    best = count
    best_flags = [s < 0 for s in cur]
    best_mask = mask = 0
    for i in range(1, 1 << max(n - 1, 0)):
        v = (i & -i).bit_length()
        mask ^= 1 << v
        for e in inc[v]:
            cur[e] = -cur[e]
            count += 1 if cur[e] < 0 else -1
        if count > best:
            continue
        if count == best:
            for e in range(m):
                neg = cur[e] < 0
                if neg != best_flags[e]:
                    break
            else:
                continue
            if not neg:
                continue
        best = count
        best_flags = [s < 0 for s in cur]
        best_mask = mask
    return best, tuple(best_flags), best_mask
