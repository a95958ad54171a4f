# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled blocking-flow kernel; mirrors ``_flow_py.dinic`` exactly."""

from libc.stdlib cimport malloc, free


def dinic(int n_nodes, tails, heads, caps, int source, int sink):
    cdef Py_ssize_t m = len(tails)
    cdef Py_ssize_t i, a
    cdef int x, y, u, v, head, tail_q, top
    cdef long long flow = 0, push
    cdef int *to = <int *>malloc(2 * m * sizeof(int) + 1)
    cdef long long *res = <long long *>malloc(2 * m * sizeof(long long) + 1)
    cdef int *start = <int *>malloc((n_nodes + 1) * sizeof(int))
    cdef int *arcs = <int *>malloc(2 * m * sizeof(int) + 1)
    cdef int *fill = <int *>malloc((n_nodes + 1) * sizeof(int))
    cdef int *level = <int *>malloc(n_nodes * sizeof(int))
    cdef int *ptr = <int *>malloc(n_nodes * sizeof(int))
    cdef int *queue = <int *>malloc(n_nodes * sizeof(int))
    cdef int *path = <int *>malloc((n_nodes + 1) * sizeof(int))
    cdef unsigned char *mark
    if not (to and res and start and arcs and fill and level and ptr and queue and path):
        raise MemoryError()
    try:
        for x in range(n_nodes + 1):
            start[x] = 0
        for i in range(m):
            u = tails[i]
            v = heads[i]
            to[2 * i] = v
            res[2 * i] = caps[i]
            to[2 * i + 1] = u
            res[2 * i + 1] = 0
            start[u + 1] += 1
            start[v + 1] += 1
        for x in range(n_nodes):
            start[x + 1] += start[x]
            fill[x] = start[x]
        for a in range(2 * m):
            # tail of arc a is the head of its partner
            u = to[a ^ 1]
            arcs[fill[u]] = <int>a
            fill[u] += 1

        while True:
            for x in range(n_nodes):
                level[x] = -1
            level[source] = 0
            head = 0
            tail_q = 0
            queue[tail_q] = source
            tail_q += 1
            while head < tail_q:
                x = queue[head]
                head += 1
                for i in range(start[x], start[x + 1]):
                    a = arcs[i]
                    y = to[a]
                    if res[a] > 0 and level[y] < 0:
                        level[y] = level[x] + 1
                        queue[tail_q] = y
                        tail_q += 1
            if level[sink] < 0:
                break
            for x in range(n_nodes):
                ptr[x] = start[x]
            while True:
                top = 0
                x = source
                push = 0
                while True:
                    if x == sink:
                        push = res[path[0]]
                        for i in range(1, top):
                            if res[path[i]] < push:
                                push = res[path[i]]
                        for i in range(top):
                            res[path[i]] -= push
                            res[path[i] ^ 1] += push
                        break
                    while ptr[x] < start[x + 1]:
                        a = arcs[ptr[x]]
                        y = to[a]
                        if res[a] > 0 and level[y] == level[x] + 1:
                            break
                        ptr[x] += 1
                    if ptr[x] < start[x + 1]:
                        path[top] = <int>arcs[ptr[x]]
                        top += 1
                        x = to[arcs[ptr[x]]]
                    else:
                        if top == 0:
                            break
                        level[x] = -1
                        top -= 1
                        x = to[path[top] ^ 1]
                        ptr[x] += 1
                if push == 0:
                    break
                flow += push

        src_side = bytearray(n_nodes)
        mark = src_side
        mark[source] = 1
        head = 0
        tail_q = 0
        queue[tail_q] = source
        tail_q += 1
        while head < tail_q:
            x = queue[head]
            head += 1
            for i in range(start[x], start[x + 1]):
                a = arcs[i]
                y = to[a]
                if res[a] > 0 and not mark[y]:
                    mark[y] = 1
                    queue[tail_q] = y
                    tail_q += 1

        snk_side = bytearray(n_nodes)
        mark = snk_side
        mark[sink] = 1
        head = 0
        tail_q = 0
        queue[tail_q] = sink
        tail_q += 1
        while head < tail_q:
            y = queue[head]
            head += 1
            for i in range(start[y], start[y + 1]):
                a = arcs[i]
                x = to[a]
                if res[a ^ 1] > 0 and not mark[x]:
                    mark[x] = 1
                    queue[tail_q] = x
                    tail_q += 1
        return int(flow), bytes(src_side), bytes(snk_side)
    finally:
        free(to)
        free(res)
        free(start)
        free(arcs)
        free(fill)
        free(level)
        free(ptr)
        free(queue)
        free(path)
