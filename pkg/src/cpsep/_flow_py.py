"""Pure-Python blocking-flow (Dinic) kernel.

Same contract as the compiled ``_flow_ext.dinic``: arcs are given as parallel
sequences; the function returns the max-flow value together with two byte
strings marking the residual source side and the residual sink side.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence


def dinic(
    n_nodes: int,
    tails: Sequence[int],
    heads: Sequence[int],
    caps: Sequence[int],
    source: int,
    sink: int,
) -> tuple[int, bytes, bytes]:
    m = len(tails)
    to = [0] * (2 * m)
    res = [0] * (2 * m)
    out: list[list[int]] = [[] for _ in range(n_nodes)]
    for i in range(m):
        u, v = tails[i], heads[i]
        to[2 * i] = v
        res[2 * i] = caps[i]
        to[2 * i + 1] = u
        out[u].append(2 * i)
        out[v].append(2 * i + 1)

    flow = 0
    while True:
        level = [-1] * n_nodes
        level[source] = 0
        q = deque([source])
        while q:
            x = q.popleft()
            for a in out[x]:
                if res[a] > 0 and level[to[a]] < 0:
                    level[to[a]] = level[x] + 1
                    q.append(to[a])
        if level[sink] < 0:
            break
        ptr = [0] * n_nodes
        while True:
            pushed = _augment(out, to, res, level, ptr, source, sink)
            if not pushed:
                break
            flow += pushed

    src_side = bytearray(n_nodes)
    src_side[source] = 1
    q = deque([source])
    while q:
        x = q.popleft()
        for a in out[x]:
            y = to[a]
            if res[a] > 0 and not src_side[y]:
                src_side[y] = 1
                q.append(y)

    # x reaches the sink iff some arc x->y with residual capacity has y reaching it
    snk_side = bytearray(n_nodes)
    snk_side[sink] = 1
    q = deque([sink])
    while q:
        y = q.popleft()
        for a in out[y]:
            x = to[a]
            if res[a ^ 1] > 0 and not snk_side[x]:
                snk_side[x] = 1
                q.append(x)
    return flow, bytes(src_side), bytes(snk_side)


def _augment(out, to, res, level, ptr, source, sink) -> int:
    """Find one augmenting path in the level graph and push its bottleneck."""
    path: list[int] = []
    x = source
    while True:
        if x == sink:
            push = min(res[a] for a in path)
            for a in path:
                res[a] -= push
                res[a ^ 1] += push
            return push
        arcs = out[x]
        advanced = False
        while ptr[x] < len(arcs):
            a = arcs[ptr[x]]
            y = to[a]
            if res[a] > 0 and level[y] == level[x] + 1:
                path.append(a)
                x = y
                advanced = True
                break
            ptr[x] += 1
        if not advanced:
            if not path:
                return 0
            # dead end: retreat and skip the arc that led here
            level[x] = -1
            a = path.pop()
            x = to[a ^ 1]
            ptr[x] += 1
