"""Independent brute-force oracles.

Everything here is written from the definitions, without reusing the
library's pruned generators or patience-based scans, so that agreement
tests really compare two routes.
"""

from __future__ import annotations

import itertools


def brute_dyck_words(n: int) -> list[str]:
    out = []
    for combo in itertools.product("UD", repeat=2 * n):
        h = 0
        for s in combo:
            h += 1 if s == "U" else -1
            if h < 0:
                break
        else:
            if h == 0:
                out.append("".join(combo))
    return out


def brute_heights(steps: str) -> list[int]:
    h = [0]
    for s in steps:
        h.append(h[-1] + (1 if s == "U" else -1))
    return h


def brute_weighting_ok(steps: str, w: tuple[int, ...]) -> bool:
    """The five weight conditions, checked literally and globally."""
    h = brute_heights(steps)
    m = len(steps)
    for u in range(1, m + 1):
        if not 0 <= w[u - 1] <= min(h[u - 1], h[u]):
            return False
    for u in range(1, m):
        a, b = steps[u - 1], steps[u]
        if a == "U" and b == "U" and not w[u - 1] <= w[u]:
            return False
        if a == "D" and b == "D" and not w[u - 1] >= w[u]:
            return False
        if a == "U" and b == "D" and not w[u - 1] + w[u] <= h[u]:
            return False
        if a == "D" and b == "U" and not w[u - 1] + w[u] >= h[u]:
            return False
    return True


def brute_weighted_set(n: int) -> set[tuple[str, tuple[int, ...]]]:
    """All valid (steps, weights) pairs of semilength n by raw filtering."""
    out = set()
    for steps in brute_dyck_words(n):
        h = brute_heights(steps)
        ranges = [range(0, min(h[u - 1], h[u]) + 1) for u in range(1, len(steps) + 1)]
        for w in itertools.product(*ranges):
            if brute_weighting_ok(steps, w):
                out.add((steps, w))
    if n == 0:
        out.add(("", ()))
    return out


def naive_lis(seq) -> int:
    """Quadratic dynamic program for the longest increasing subsequence."""
    seq = list(seq)
    if not seq:
        return 0
    best = [1] * len(seq)
    for i in range(len(seq)):
        for j in range(i):
            if seq[j] < seq[i] and best[j] + 1 > best[i]:
                best[i] = best[j] + 1
    return max(best)


def contains_123_triple(word) -> bool:
    word = list(word)
    return any(a < b < c for a, b, c in itertools.combinations(word, 3))


def brute_descents(p) -> set[int]:
    return {i for i in range(1, len(p)) if p[i - 1] > p[i]}


def brute_updown_avoiders(n: int) -> set[tuple[int, ...]]:
    """Filter all permutations of size 2n by the definition."""
    want = set(range(2, 2 * n, 2))
    out = set()
    for p in itertools.permutations(range(1, 2 * n + 1)):
        if brute_descents(p) != want:
            continue
        if any(a < b < c < d for a, b, c, d in itertools.combinations(p, 4)):
            continue
        out.add(p)
    return out
