# coding: utf-8

# # Paths that only exist after completing a neighbourhood
#
# Completing the neighbourhood of x can create (a,b)-paths on vertex sets that
# had none before. The checker compares that event against a list of
# structural properties measured relative to a minimum cut of N(x).

# In[1]:

from tutteclosure.graph import Graph, bits, parse_graph6
from tutteclosure.theorem import abc_partition, check_cmaximal, cover_from_partition, vx_profile


# A 5-wheel with two ears. Completing the rim lets a path from 1 to 3 pick up
# every vertex, which no path in the graph itself can do.

# In[2]:

edges = [(0, i) for i in range(1, 6)] + [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1),
                                         (6, 1), (6, 5), (7, 3), (7, 4)]
g = Graph.from_edges(8, edges)
rep = check_cmaximal(g, 1, 3, 0, all_cuts=True)
print(rep.ok, rep.cut, [c for c in rep.cases if c["lhs"]])
print(rep.cut_sensitivity)


# The profile of the path splits N(0) by how many path-neighbours sit in N[0].

# In[3]:

p = (1, 6, 5, 0, 4, 7, 3)
print(vx_profile(g, 0, p).to_json())
part = abc_partition(g, 0, 1, 3, p, strict=False)
print(part.to_json())
cover, _ = cover_from_partition(g, part)
print([sorted(bits(m)) for m in cover])


# Which minimum cut is used matters. On this 8-vertex graph the
# lexicographically first cut breaks the equivalence while two others keep it.

# In[4]:

rep = check_cmaximal(parse_graph6("GCqrT["), 5, 6, 7, all_cuts=True)
print(rep.ok, rep.cut, rep.cut_sensitivity)
