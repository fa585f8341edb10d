"""Slow, obviously-correct reference implementations used only by the tests.

None of these touch the package: factorization is plain trial division,
lcm/gcd come from ``math``, graphs are built from the edge rule directly.
"""

import math
from collections import deque


def trial_factor(n):
    out = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def omega(n):
    return sum(trial_factor(n).values())


def distinct_omega(n):
    return len(trial_factor(n))


def is_prime(n):
    return n >= 2 and trial_factor(n) == {n: 1}


def dist_lcm_gcd(a, b):
    return omega(math.lcm(a, b)) - omega(math.gcd(a, b))


def covering_edges(n):
    """All (a, b), a < b <= n, with b / a prime, by checking every pair."""
    return sorted(
        (a, b) for b in range(2, n + 1) for a in range(1, b) if b % a == 0 and is_prime(b // a)
    )


def bfs_all(n, edges):
    adj = {v: [] for v in range(1, n + 1)}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    dists = {}
    for s in adj:
        seen = {s: 0}
        q = deque([s])
        while q:
            v = q.popleft()
            for w in adj[v]:
                if w not in seen:
                    seen[w] = seen[v] + 1
                    q.append(w)
        dists[s] = seen
    return dists


def brute_ball(x, r, n):
    return [y for y in range(1, n + 1) if dist_lcm_gcd(x, y) <= r]


def brute_diameter(n):
    best, pair = 0, (1, 1)
    for x in range(1, n + 1):
        for y in range(x + 1, n + 1):
            d = dist_lcm_gcd(x, y)
            if d > best:
                best, pair = d, (x, y)
    return best, pair
