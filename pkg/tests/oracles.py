"""
Brute-force reference computations.  Nothing here imports the code paths it
is used to check; only the `Permutation` value type is shared.
"""

import itertools

from relquasimap.weyl import Permutation


def inversions(images):
    return sum(1 for i, j in itertools.combinations(range(len(images)), 2)
               if images[i] > images[j])


def compose(x, y):
    """(x*y)(i) = x(y(i)) on raw tuples."""
    return tuple(x[j - 1] for j in y)


def simple(n, i):
    images = list(range(1, n + 1))
    images[i - 1], images[i] = images[i], images[i - 1]
    return tuple(images)


def reduced_word(images):
    """Indices i_1..i_l with w = s_{i_1} ... s_{i_l}, via left descents."""
    word = []
    current = tuple(images)
    n = len(current)
    while inversions(current):
        pos = {v: k for k, v in enumerate(current)}
        i = next(i for i in range(1, n) if pos[i] > pos[i + 1])
        word.append(i)
        current = compose(simple(n, i), current)
    return word


def bruhat_leq_subword(u, w):
    """u <= w iff u is the product of some subword of a reduced word of w."""
    n = u.n
    word = reduced_word(w.images)
    reachable = set()
    for mask in itertools.product((0, 1), repeat=len(word)):
        x = tuple(range(1, n + 1))
        for keep, i in zip(mask, word):
            if keep:
                x = compose(x, simple(n, i))
        reachable.add(x)
    return u.images in reachable


def bruhat_graph(n, simple_only=False):
    """Adjacency by swapping values a<b; kept iff the inversion count grows."""
    graph = {}
    for p in itertools.permutations(range(1, n + 1)):
        out = []
        for a, b in itertools.combinations(range(1, n + 1), 2):
            if simple_only and b != a + 1:
                continue
            q = tuple(b if v == a else a if v == b else v for v in p)
            if inversions(q) > inversions(p):
                out.append(q)
        graph[p] = out
    return graph


def count_paths_dfs(graph, start, end):
    stack = [start]
    count = 0
    while stack:
        node = stack.pop()
        if node == end:
            count += 1
        stack.extend(graph[node])
    return count


def laumon_arrays_brute(n, d):
    """Every triangular array with entries in 0..max(d), filtered by the constraints."""
    if any(x < 0 for x in d):
        return []
    cells = [(k, i) for k in range(1, n) for i in range(1, k + 1)]
    top = max(d, default=0)
    found = []
    for values in itertools.product(range(top + 1), repeat=len(cells)):
        arr = dict(zip(cells, values))
        if any(sum(arr[k, i] for i in range(1, k + 1)) != d[k - 1] for k in range(1, n)):
            continue
        if any(arr[k, i] < arr[k + 1, i] for k in range(1, n - 1) for i in range(1, k + 1)):
            continue
        found.append(tuple(tuple(arr[k, i] for i in range(1, k + 1)) for k in range(1, n)))
    return sorted(found)


def h0_minus_h1(e):
    """Euler characteristic of O(e) on P^1 from h^0 and h^1 separately."""
    h0 = max(e + 1, 0)
    h1 = max(-e - 1, 0)
    return h0 - h1


def perm(text):
    return Permutation.parse(text)
