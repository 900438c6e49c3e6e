# coding: utf-8

# # Line graphs of multigraphs, by forbidden subgraphs
#
# A graph is the line graph of a multigraph exactly when it has a clique cover
# with every vertex in at most two cliques. Scanning small graphs for minimal
# non-members recovers a finite forbidden family.

# In[1]:

from tutteclosure.enumeration import graphs_on
from tutteclosure.krausz import find_krausz_cover
from tutteclosure.recognition import derive_forbidden_family, forbidden_members_present


# In[2]:

family = derive_forbidden_family(7)
for h in family:
    print(h.n, h.num_edges(), h)
print(family.provenance["per_order"]["7"])


# Every graph on six vertices agrees: no rank-2 cover exactly when some member
# appears as an induced subgraph.

# In[3]:

agree = all((find_krausz_cover(g, 2) is None) == bool(forbidden_members_present(g, family))
            for g in graphs_on(6))
print(agree)
