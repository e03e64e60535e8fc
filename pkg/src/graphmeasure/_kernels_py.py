"""Pure-Python reference kernels.

Every function here works on integer-coded signed edges: the edge with
declaration index ``i`` is coded ``2*i`` and its inverse ``2*i + 1``, so
``c ^ 1`` is always the inverse code.  ``src`` and ``dst`` are lists indexed
by code (entries for absent codes are ignored), ``codes`` is the sorted list
of codes present in the graph.  ``_kernels.pyx`` mirrors this module exactly.
"""


def reduce_codes(seq):
    stack = []
    for c in seq:
        if stack and stack[-1] == (c ^ 1):
            stack.pop()
        else:
            stack.append(c)
    return stack


def trace_codes(seq):
    seen = set()
    out = []
    for c in seq:
        if c not in seen:
            seen.add(c)
            out.append(c)
    return out


def _out_lists(n_vertices, src, codes):
    out = [[] for _ in range(n_vertices)]
    for c in codes:
        out[src[c]].append(c)
    return out


def walks(n_vertices, src, dst, codes, max_len):
    """All admissible code sequences of length 1..max_len, by length then lex."""
    out = _out_lists(n_vertices, src, codes)
    result = []
    layer = [(c,) for c in codes]
    length = 1
    while layer and length <= max_len:
        result.extend(layer)
        if length == max_len:
            break
        nxt = []
        for w in layer:
            for c in out[dst[w[-1]]]:
                nxt.append(w + (c,))
        layer = nxt
        length += 1
    return result


def closure(n_vertices, src, dst, codes, reduced, limit):
    """Exact image of the (reduced) trace map over all words of positive length.

    Returns a list of ``(source, range, trace)`` triples, or ``None`` when more
    than ``limit`` search states are visited (``limit < 0`` means unbounded).
    """
    out = _out_lists(n_vertices, src, codes)
    seen = set()
    stack = []
    for c in codes:
        state = (src[c], dst[c], (c,), c if reduced else -1)
        if state not in seen:
            seen.add(state)
            stack.append(state)
    while stack:
        s, cur, tr, last = stack.pop()
        for c in out[cur]:
            if reduced and c == (last ^ 1):
                continue
            nt = tr if c in tr else tr + (c,)
            state = (s, dst[c], nt, c if reduced else -1)
            if state not in seen:
                seen.add(state)
                if 0 <= limit < len(seen):
                    return None
                stack.append(state)
    return list({(s, r, t) for s, r, t, _ in seen})


def find_trace(n_vertices, src, dst, codes, source, target, trace, reduced):
    """Shortest word whose (reduced) first-traversal trace is ``trace``.

    The search state is (current vertex, edges discovered so far, last code);
    the next step either reuses a discovered edge or discovers the next one.
    Returns the witness code list or ``None``.
    """
    k_max = len(trace)
    if k_max == 0:
        return None
    present = set(codes)
    if any(c not in present for c in trace) or len(set(trace)) != k_max:
        return None
    if src[trace[0]] != source:
        return None
    out = _out_lists(n_vertices, src, codes)
    pos = {c: i for i, c in enumerate(trace)}
    start = (dst[trace[0]], 1, trace[0])
    parent = {start: None}
    queue = [start]
    head = 0
    while head < len(queue):
        state = queue[head]
        head += 1
        cur, k, last = state
        if k == k_max and cur == target:
            word = []
            while state is not None:
                word.append(state[2])
                state = parent[state]
            return word[::-1]
        for c in out[cur]:
            if reduced and c == (last ^ 1):
                continue
            i = pos.get(c)
            if i is None or i > k:
                continue
            nk = k + 1 if i == k else k
            nxt = (dst[c], nk, c)
            if nxt not in parent:
                parent[nxt] = state
                queue.append(nxt)
    return None


def stratum_counts(n_vertices, src, dst, codes, max_len, starts, ends, reduced_only):
    """Reduced-diagram counts of qualifying words, one dict per length.

    A word qualifies when its source is in ``starts`` or its range is in
    ``ends``.  With ``reduced_only`` only cancellation-free words are walked.
    Keys are ``(source, range, trace)`` of the reduced word; a word that
    cancels to a vertex is keyed with an empty trace.
    """
    out = _out_lists(n_vertices, src, codes)
    starts = set(starts)
    ends = set(ends)
    strata = [dict() for _ in range(max_len)]
    word = []

    def record(s):
        red = reduce_codes(word)
        if red:
            key = (s, dst[red[-1]], tuple(trace_codes(red)))
        else:
            key = (s, s, ())
        bucket = strata[len(word) - 1]
        bucket[key] = bucket.get(key, 0) + 1

    def extend(s, cur):
        if dst[word[-1]] in ends or s in starts:
            record(s)
        if len(word) == max_len:
            return
        for c in out[cur]:
            if reduced_only and c == (word[-1] ^ 1):
                continue
            word.append(c)
            extend(s, dst[c])
            word.pop()

    if max_len >= 1:
        for c in codes:
            word.append(c)
            extend(src[c], dst[c])
            word.pop()
    return strata
