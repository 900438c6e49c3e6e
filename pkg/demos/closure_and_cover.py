# coding: utf-8

# # Closures and rank-3 covers
#
# Take a claw-free graph, close it, and cover the closure with cliques so that
# every vertex lies in at most three of them. The cliques are exactly the
# hyperedges of a rank-3 hypergraph whose line graph is the closure.

# In[1]:

from tutteclosure import graph as gr
from tutteclosure.closure import k_closure, tutte_closure
from tutteclosure.krausz import hypergraph_from_cover, line_graph_of_hypergraph, verify_cover
from tutteclosure.paths import is_tutte_connected
from tutteclosure.theorem import cover_tutte_closure_with_audit


# The 6-cycle is Tutte-connected, so its Tutte-closure is K_6.

# In[2]:

c6 = gr.cycle(6)
gt, trace = tutte_closure(c6)
print(gr.write_graph6(gt), trace.terminal)


# Gluing two K_4's at a vertex still leaves a Hamilton path between any two
# vertices. Connected claw-free graphs on few vertices are all Tutte-connected,
# so a closure that is not complete needs a disconnected input.

# In[3]:

bowtie = gr.Graph.from_edges(7, [(u, v) for block in ([0, 1, 2, 3], [3, 4, 5, 6])
                                for i, u in enumerate(block) for v in block[i + 1:]])
print(is_tutte_connected(bowtie))
g = gr.disjoint_union(gr.cycle(5), gr.path_graph(3))
print(is_tutte_connected(g))
gt, trace = tutte_closure(g)
print(gr.write_graph6(gt), trace.terminal)


# Cover the closure. The audit says which construction was used.

# In[4]:

cover, audit = cover_tutte_closure_with_audit(gt)
print(audit["mode"], cover.to_json())
print(bool(verify_cover(gt, cover, 3)))


# The cover is a hypergraph in disguise, and its line graph gives the closure back.

# In[5]:

h = hypergraph_from_cover(cover)
print(h.to_json())
print(line_graph_of_hypergraph(h) == gt)


# The 2-closure, by contrast, only completes neighbourhoods that are
# 2-connected; the squared 7-cycle is already 2-closed.

# In[6]:

sq = gr.square_of_cycle(7)
print(k_closure(sq, 2)[0] == sq)
