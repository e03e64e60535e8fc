# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels; same contract as ``_kernels_py``."""


cpdef list reduce_codes(seq):
    cdef list stack = []
    cdef Py_ssize_t n = 0
    cdef long c
    for c in seq:
        if n and <long>stack[n - 1] == (c ^ 1):
            stack.pop()
            n -= 1
        else:
            stack.append(c)
            n += 1
    return stack


cpdef list trace_codes(seq):
    cdef set seen = set()
    cdef list out = []
    for c in seq:
        if c not in seen:
            seen.add(c)
            out.append(c)
    return out


cdef list _out_lists(long n_vertices, list src, list codes):
    cdef list out = [[] for _ in range(n_vertices)]
    for c in codes:
        (<list>out[<long>src[c]]).append(c)
    return out


def walks(long n_vertices, list src, list dst, list codes, long max_len):
    cdef list out = _out_lists(n_vertices, src, codes)
    cdef list result = []
    cdef list layer = [(c,) for c in codes]
    cdef list nxt
    cdef tuple w
    cdef long length = 1
    while layer and length <= max_len:
        result.extend(layer)
        if length == max_len:
            break
        nxt = []
        for w in layer:
            for c in <list>out[<long>dst[w[len(w) - 1]]]:
                nxt.append(w + (c,))
        layer = nxt
        length += 1
    return result


def closure(long n_vertices, list src, list dst, list codes, bint reduced, long limit):
    cdef list out = _out_lists(n_vertices, src, codes)
    cdef set seen = set()
    cdef list stack = []
    cdef long c, s, cur, last, nlast
    cdef object mask, nmask, bit
    cdef tuple tr, nt, state
    for c in codes:
        state = (<long>src[c], <long>dst[c], (c,), c if reduced else -1, 1 << c)
        key = state[:4]
        if key not in seen:
            seen.add(key)
            stack.append(state)
    while stack:
        s, cur, tr, last, mask = stack.pop()
        for c in <list>out[cur]:
            if reduced and c == (last ^ 1):
                continue
            bit = 1 << c
            if mask & bit:
                nt = tr
                nmask = mask
            else:
                nt = tr + (c,)
                nmask = mask | bit
            nlast = c if reduced else -1
            key = (s, <long>dst[c], nt, nlast)
            if key not in seen:
                seen.add(key)
                if 0 <= limit < len(seen):
                    return None
                stack.append((s, <long>dst[c], nt, nlast, nmask))
    return list({(k[0], k[1], k[2]) for k in seen})


def find_trace(long n_vertices, list src, list dst, list codes,
               long source, long target, tuple trace, bint reduced):
    cdef long k_max = len(trace)
    cdef long cur, k, last, nk, c
    cdef object i
    if k_max == 0:
        return None
    present = set(codes)
    for c in trace:
        if c not in present:
            return None
    if len(set(trace)) != k_max:
        return None
    if <long>src[trace[0]] != source:
        return None
    cdef list out = _out_lists(n_vertices, src, codes)
    cdef dict pos = {c: idx for idx, c in enumerate(trace)}
    cdef tuple start = (<long>dst[trace[0]], 1, <long>trace[0])
    cdef dict parent = {start: None}
    cdef list queue = [start]
    cdef Py_ssize_t head = 0
    cdef list word
    while head < len(queue):
        state = queue[head]
        head += 1
        cur, k, last = state
        if k == k_max and cur == target:
            word = []
            while state is not None:
                word.append(state[2])
                state = parent[state]
            word.reverse()
            return word
        for c in <list>out[cur]:
            if reduced and c == (last ^ 1):
                continue
            i = pos.get(c)
            if i is None or <long>i > k:
                continue
            nk = k + 1 if <long>i == k else k
            nxt = (<long>dst[c], nk, c)
            if nxt not in parent:
                parent[nxt] = state
                queue.append(nxt)
    return None


cdef class _StratumWalker:
    cdef list out, dst, strata, word
    cdef set starts, ends
    cdef long max_len
    cdef bint reduced_only

    cdef void record(self, long s):
        cdef list red = reduce_codes(self.word)
        cdef dict bucket = self.strata[len(self.word) - 1]
        if red:
            key = (s, self.dst[red[len(red) - 1]], tuple(trace_codes(red)))
        else:
            key = (s, s, ())
        bucket[key] = bucket.get(key, 0) + 1

    cdef void extend(self, long s, long cur):
        cdef long last = self.word[len(self.word) - 1]
        cdef long c
        if s in self.starts or self.dst[last] in self.ends:
            self.record(s)
        if len(self.word) == self.max_len:
            return
        for c in <list>self.out[cur]:
            if self.reduced_only and c == (last ^ 1):
                continue
            self.word.append(c)
            self.extend(s, self.dst[c])
            self.word.pop()


def stratum_counts(long n_vertices, list src, list dst, list codes, long max_len,
                   starts, ends, bint reduced_only):
    cdef _StratumWalker w = _StratumWalker()
    cdef long c
    w.out = _out_lists(n_vertices, src, codes)
    w.dst = dst
    w.strata = [dict() for _ in range(max_len)]
    w.word = []
    w.starts = set(starts)
    w.ends = set(ends)
    w.max_len = max_len
    w.reduced_only = reduced_only
    if max_len >= 1:
        for c in codes:
            w.word.append(c)
            w.extend(src[c], dst[c])
            w.word.pop()
    return w.strata
