"""
The covering graph of 1..12
===========================

Vertices are 1..n; a and b are joined when b = a * p for a prime p.
Shortest paths in this graph reproduce the arithmetic distance.
Pipe the DOT text into ``dot -Tpng`` to draw it.
"""

import arithmetic_metric as am

g = am.build_hasse(12)
print(g.num_vertices, "vertices,", g.num_edges, "edges")
print("graph distance 11 -> 12:", am.graph_distance(g, 11, 12))

# BFS from 1 lands every vertex on its Omega level
print(am.bfs_distances(g, 1)[1:])

print(am.export_dot(g))
