"""
Searching a corpus
==================

A BK-tree stores values under integer distance buckets and prunes with the
triangle inequality.  Count how many nodes each query actually touches.
"""

import numpy as np

import arithmetic_metric as am

rng = np.random.Generator(np.random.PCG64(0))
corpus = rng.integers(1, 10**9, size=5000).tolist()
idx = am.BkIndex(corpus)
print(len(idx), "values, root", idx.root)

x = 720720
hits, visited = idx.range(x, 4, return_visited=True)
print(len(hits), "within 4, visited", visited)

nn, visited = idx.nearest(x, 5, return_visited=True)
print(nn, "visited", visited)

# Same answer from a linear scan
scan = sorted((am.dist(x, v), v) for v in set(corpus))[:5]
print([(v, d) for d, v in scan] == nn)
