# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels; see ``_pykernels`` for the contracts."""
from libc.stdlib cimport malloc, free

from .errors import BudgetExceeded


cdef int* _csr(int n, list adj, int** offsets_out):
    cdef int total = 0, v, k
    cdef int* offs = <int*> malloc((n + 1) * sizeof(int))
    for v in range(n):
        offs[v] = total
        total += len(adj[v])
    offs[n] = total
    cdef int* flat = <int*> malloc((total + 1) * sizeof(int))
    k = 0
    for v in range(n):
        for w in adj[v]:
            flat[k] = w
            k += 1
    offsets_out[0] = offs
    return flat


def simple_cycles(int n, adj, int length_max, long long budget):
    cdef list out = []
    if n == 0:
        return out
    cdef int* offs
    cdef int* flat = _csr(n, [list(a) for a in adj], &offs)
    cdef int* path = <int*> malloc(n * sizeof(int))
    cdef int* pos = <int*> malloc(n * sizeof(int))
    cdef char* blocked = <char*> malloc(n * sizeof(char))
    cdef int s, depth, v, w, i, cap
    cdef long long found = 0
    cap = length_max if length_max > 0 else n
    try:
        for i in range(n):
            blocked[i] = 0
        for s in range(n):
            path[0] = s
            pos[0] = offs[s]
            blocked[s] = 1
            depth = 0
            while depth >= 0:
                v = path[depth]
                if pos[depth] < offs[v + 1]:
                    w = flat[pos[depth]]
                    pos[depth] += 1
                    if w == s:
                        if depth >= 2 and path[1] < path[depth]:
                            out.append(tuple([path[i] for i in range(depth + 1)]))
                            found += 1
                            if found > budget:
                                raise BudgetExceeded(f"more than {budget} circles")
                        continue
                    if w < s or blocked[w] or depth + 1 >= cap:
                        continue
                    depth += 1
                    path[depth] = w
                    pos[depth] = offs[w]
                    blocked[w] = 1
                else:
                    blocked[v] = 0
                    depth -= 1
    finally:
        free(offs)
        free(flat)
        free(path)
        free(pos)
        free(blocked)
    return out


def hamiltonian_cycles(int n, adj, long long budget):
    cdef list out = []
    if n < 3:
        return out
    cdef int* offs
    cdef int* flat = _csr(n, [list(a) for a in adj], &offs)
    cdef int* path = <int*> malloc(n * sizeof(int))
    cdef int* pos = <int*> malloc(n * sizeof(int))
    cdef char* visited = <char*> malloc(n * sizeof(char))
    cdef char* adj0 = <char*> malloc(n * sizeof(char))
    cdef int depth, v, w, u, k, free_, i
    cdef bint ok
    cdef long long found = 0
    try:
        for i in range(n):
            visited[i] = 0
            adj0[i] = 0
        for k in range(offs[0], offs[1]):
            adj0[flat[k]] = 1
        visited[0] = 1
        path[0] = 0
        pos[0] = offs[0]
        depth = 0
        while depth >= 0:
            v = path[depth]
            if depth == n - 1:
                if adj0[v] and path[1] < path[depth]:
                    out.append(tuple([path[i] for i in range(n)]))
                    found += 1
                    if found > budget:
                        raise BudgetExceeded(f"more than {budget} Hamiltonian circles")
                visited[v] = 0
                depth -= 1
                continue
            if pos[depth] < offs[v + 1]:
                w = flat[pos[depth]]
                pos[depth] += 1
                if visited[w]:
                    continue
                visited[w] = 1
                ok = True
                for u in range(n):
                    if visited[u]:
                        continue
                    free_ = 0
                    for k in range(offs[u], offs[u + 1]):
                        if not visited[flat[k]] or flat[k] == w or flat[k] == 0:
                            free_ += 1
                            if free_ >= 2:
                                break
                    if free_ < 2:
                        ok = False
                        break
                if not ok:
                    visited[w] = 0
                    continue
                depth += 1
                path[depth] = w
                pos[depth] = offs[w]
            else:
                if depth > 0:
                    visited[v] = 0
                depth -= 1
    finally:
        free(offs)
        free(flat)
        free(path)
        free(pos)
        free(visited)
        free(adj0)
    return out


def min_switching(int n, eu, ev, es):
    cdef int m = len(eu)
    cdef int e, v, k, count, best, i_
    cdef long long i, limit
    cdef unsigned long long mask = 0, best_mask = 0
    cdef int* cur = <int*> malloc((m + 1) * sizeof(int))
    cdef char* best_flags = <char*> malloc((m + 1) * sizeof(char))
    cdef int* offs = <int*> malloc((n + 1) * sizeof(int))
    cdef int* inc = <int*> malloc((2 * m + 1) * sizeof(int))
    cdef int* fill = <int*> malloc((n + 1) * sizeof(int))
    cdef bint neg, take
    try:
        for v in range(n + 1):
            offs[v] = 0
        for e in range(m):
            offs[<int> eu[e] + 1] += 1
            offs[<int> ev[e] + 1] += 1
        for v in range(n):
            offs[v + 1] += offs[v]
            fill[v] = offs[v]
        count = 0
        for e in range(m):
            cur[e] = es[e]
            inc[fill[<int> eu[e]]] = e
            fill[<int> eu[e]] += 1
            inc[fill[<int> ev[e]]] = e
            fill[<int> ev[e]] += 1
            if cur[e] < 0:
                count += 1
            best_flags[e] = cur[e] < 0
        best = count
        limit = (<long long> 1) << (n - 1) if n >= 1 else 1
        i = 1
        while i < limit:
            v = 1
            while not ((i >> (v - 1)) & 1):
                v += 1
            mask ^= (<unsigned long long> 1) << v
            for k in range(offs[v], offs[v + 1]):
                e = inc[k]
                cur[e] = -cur[e]
                if cur[e] < 0:
                    count += 1
                else:
                    count -= 1
            i += 1
            if count > best:
                continue
            take = count < best
            if not take:
                for e in range(m):
                    neg = cur[e] < 0
                    if neg != best_flags[e]:
                        take = neg
                        break
            if take:
                best = count
                best_mask = mask
                for e in range(m):
                    best_flags[e] = cur[e] < 0
        flags = tuple([bool(best_flags[e]) for e in range(m)])
    finally:
        free(cur)
        free(best_flags)
        free(offs)
        free(inc)
        free(fill)
    return best, flags, int(best_mask)
