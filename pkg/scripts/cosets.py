"""Felsch-strategy coset enumeration (Todd-Coxeter), used to build the
permutation data shipped in src/codegree/data.

Words are lists of column indices: generator g is column 2g, its inverse
2g + 1. ``word("aBc")`` writes them with letters, uppercase for inverses.
"""


def word(s: str) -> list:
    return [2 * (ord(ch.lower()) - 97) + ch.isupper() for ch in s]


def invw(w):
    return [x ^ 1 for x in reversed(w)]


def enumerate_felsch(ngens, relators, subgens, max_cosets=2_000_000):
    """Permutation action on the cosets of the subgroup generated by
    ``subgens``; returns (index, perms, cosets defined). Raises
    RuntimeError past ``max_cosets``."""
    ncol = 2 * ngens
    # all cyclic conjugates of relators and their inverses, bucketed by first letter
    rots = [[] for _ in range(ncol)]
    seen = set()
    for r in relators:
        for rr in (r, invw(r)):
            for i in range(len(rr)):
                w = tuple(rr[i:] + rr[:i])
                if w not in seen:
                    seen.add(w)
                    rots[w[0]].append(w)
    table = [[-1] * ncol]
    parent = [0]
    deductions = []

    def find(c):
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    def merge(a, b, queue):
        a, b = find(a), find(b)
        if a == b:
            return
        if a > b:
            a, b = b, a
        parent[b] = a
        queue.append(b)

    def coincidence(a, b):
        queue = []
        merge(a, b, queue)
        while queue:
            e = queue.pop(0)
            row = table[e]
            for x in range(ncol):
                t = row[x]
                if t < 0:
                    continue
                if table[t][x ^ 1] == e:
                    table[t][x ^ 1] = -1
                e1, t1 = find(e), find(t)
                if table[e1][x] >= 0:
                    merge(t1, table[e1][x], queue)
                elif table[t1][x ^ 1] >= 0:
                    merge(e1, table[t1][x ^ 1], queue)
                else:
                    table[e1][x] = t1
                    table[t1][x ^ 1] = e1
                    deductions.append((e1, x))

    def scan(c, w, define=False):
        f, i, n = c, 0, len(w)
        j = n - 1
        b = c
        while True:
            while i <= j and table[f][w[i]] >= 0:
                f = table[f][w[i]]
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            while j >= i and table[b][w[j] ^ 1] >= 0:
                b = table[b][w[j] ^ 1]
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if i == j:
                table[f][w[i]] = b
                table[b][w[i] ^ 1] = f
                deductions.append((f, w[i]))
                return
            if not define:
                return
            new(f, w[i])

    def new(c, x):
        if len(table) >= max_cosets:
            raise RuntimeError("coset limit")
        d = len(table)
        table.append([-1] * ncol)
        parent.append(d)
        table[c][x] = d
        table[d][x ^ 1] = c
        deductions.append((c, x))
        return d

    def process():
        while deductions:
            c, x = deductions.pop()
            if find(c) != c:
                continue
            for w in rots[x]:
                if find(c) != c:
                    break
                scan(c, w)
            d = table[c][x]
            if d >= 0:
                d = find(d)
                for w in rots[x ^ 1]:
                    if find(d) != d:
                        break
                    scan(d, w)
            for w in subgens:
                scan(0, w)

    for w in subgens:
        scan(0, w, define=True)
        process()
    c = 0
    while c < len(table):
        if find(c) == c:
            for x in range(ncol):
                if find(c) != c:
                    break
                if table[c][x] < 0:
                    new(c, x)
                    process()
        c += 1
    live = [i for i in range(len(table)) if find(i) == i]
    pos = {cc: k for k, cc in enumerate(live)}
    perms = [[pos[find(table[cc][2 * g])] for cc in live] for g in range(ngens)]
    return len(live), perms, len(table)
