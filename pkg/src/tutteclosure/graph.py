"""Simple undirected graphs on vertices ``0..n-1`` stored as adjacency bitsets.

Vertex sets are plain ``int`` bitmasks inside the hot loops; the public
helpers that hand sets back to callers return ``frozenset`` objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import InputError

MAX_VERTICES = 64


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph. ``adj[v]`` is the bitmask of neighbours of ``v``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise InputError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise InputError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise InputError(f"vertex {v} has a neighbour out of range")
            if row >> v & 1:
                raise InputError(f"loop at vertex {v}")
            for w in bits(row):
                if not self.adj[w] >> v & 1:
                    raise InputError(f"adjacency not symmetric at {v},{w}")

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        # skips validation; callers guarantee a symmetric irreflexive relation
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge {(u, v)} out of range for n={n}")
            if u == v:
                raise InputError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(popcount(r) for r in self.adj) // 2

    def is_complete(self) -> bool:
        full = self.full
        return all(row | (1 << v) == full for v, row in enumerate(self.adj))

    def is_clique(self, mask: int) -> bool:
        """True when the vertices of ``mask`` are pairwise adjacent."""
        for v in bits(mask):
            if (mask & ~(1 << v)) & ~self.adj[v]:
                return False
        return True

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = list(self.adj)
        for u, v in edges:
            if u != v:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        return Graph._trusted(self.n, tuple(adj))

    def remove_vertices(self, mask: int) -> tuple["Graph", list[int]]:
        """Induced subgraph on the complement of ``mask`` (see ``induced_subgraph``)."""
        return induced_subgraph(self, self.full & ~mask)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _check_vertex(g: Graph, x: int) -> None:
    if not 0 <= x < g.n:
        raise InputError(f"vertex {x} out of range for n={g.n}")


def neighborhood(g: Graph, x: int, closed: bool = False) -> frozenset[int]:
    _check_vertex(g, x)
    m = g.adj[x] | (1 << x if closed else 0)
    return frozenset(bits(m))


def induced_subgraph(g: Graph, s: int | Iterable[int]) -> tuple[Graph, list[int]]:
    """Return ``<s>`` relabelled to ``0..|s|-1`` and the map new index -> old vertex."""
    mask = s if isinstance(s, int) else to_mask(s)
    if mask & ~g.full:
        raise InputError("vertex set out of range")
    index = list(bits(mask))
    pos = {v: i for i, v in enumerate(index)}
    adj = []
    for v in index:
        row = 0
        for w in bits(g.adj[v] & mask):
            row |= 1 << pos[w]
        adj.append(row)
    return Graph._trusted(len(index), tuple(adj)), index


def local_completion(g: Graph, x: int) -> Graph:
    """Add every missing edge among the neighbours of ``x``."""
    _check_vertex(g, x)
    nx_ = g.adj[x]
    if not nx_:
        return g
    adj = list(g.adj)
    for v in bits(nx_):
        adj[v] |= nx_ & ~(1 << v)
    return Graph._trusted(g.n, tuple(adj))


def reach(g: Graph, start: int, within: int) -> int:
    """Vertices of ``within`` reachable from ``start`` inside ``<within>``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    """Components of ``<within>`` as bitmasks, ordered by smallest vertex."""
    rest = g.full if within is None else within
    out = []
    while rest:
        comp = reach(g, lowest(rest), rest)
        out.append(comp)
        rest &= ~comp
    return out


def components(g: Graph) -> list[frozenset[int]]:
    return [frozenset(bits(c)) for c in component_masks(g)]


def is_connected(g: Graph, within: int | None = None) -> bool:
    mask = g.full if within is None else within
    if not mask:
        return True
    return reach(g, lowest(mask), mask) == mask


def _separates(g: Graph, cut: int, within: int | None = None) -> bool:
    rest = (g.full if within is None else within) & ~cut
    return bool(rest) and not is_connected(g, rest)


def connectivity_within(g: Graph, mask: int) -> int:
    """Vertex connectivity of the induced subgraph ``<mask>``, with the ``K_m -> m-1`` convention."""
    size = popcount(mask)
    if size <= 1:
        return 0
    if g.is_clique(mask):
        return size - 1
    if not is_connected(g, mask):
        return 0
    members = list(bits(mask))
    for k in range(1, size - 1):
        for cut in combinations(members, k):
            if _separates(g, to_mask(cut), mask):
                return k
    raise AssertionError("non-complete graph without a cut")


def vertex_connectivity(g: Graph) -> int:
    """Smallest number of vertices whose removal disconnects ``g``.

    ``K_m`` has connectivity ``m - 1`` and a disconnected graph has 0. Cuts
    are found by direct subset enumeration, which is the intended scale.
    """
    return connectivity_within(g, g.full)


def is_k_connected_within(g: Graph, mask: int, k: int) -> bool:
    """``connectivity_within(g, mask) >= k`` without computing the exact value."""
    if k <= 0:
        return True
    size = popcount(mask)
    if g.is_clique(mask):
        return size - 1 >= k
    if not is_connected(g, mask):
        return False
    members = list(bits(mask))
    for j in range(1, k):
        for cut in combinations(members, j):
            if _separates(g, to_mask(cut), mask):
                return False
    return True


def is_k_connected(g: Graph, k: int) -> bool:
    return is_k_connected_within(g, g.full, k)


def minimum_vertex_cuts(g: Graph, size: int) -> list[frozenset[int]]:
    """All vertex sets of ``size`` whose removal disconnects ``g``, in lexicographic order."""
    if g.is_complete():
        raise InputError("a complete graph has no vertex cut")
    return [
        frozenset(cut)
        for cut in combinations(range(g.n), size)
        if _separates(g, to_mask(cut))
    ]


# ---------------------------------------------------------------------------
# graph6

GRAPH6_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise InputError("graph too large for this encoder")


def write_graph6(g: Graph, header: bool = False) -> str:
    """Encode ``g`` in graph6 (upper triangle, column-major, 6-bit big-endian groups)."""
    out = [GRAPH6_HEADER] if header else []
    out.append(_encode_n(g.n))
    acc = nbits = 0
    chars = []
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                chars.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        chars.append(chr((acc << (6 - nbits)) + 63))
    out.extend(chars)
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line. Errors name the offending byte offset."""
    s = text.strip()
    offset = 0
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
        offset = len(GRAPH6_HEADER)
    if not s:
        raise InputError(f"empty graph6 string at offset {offset}")
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise InputError(f"invalid graph6 byte {ch!r} at offset {offset + i}")
    if ord(s[0]) < 126:
        n, pos = ord(s[0]) - 63, 1
    elif len(s) >= 4 and ord(s[1]) < 126:
        n = ((ord(s[1]) - 63) << 12) | ((ord(s[2]) - 63) << 6) | (ord(s[3]) - 63)
        pos = 4
    else:
        raise InputError(f"unsupported graph6 size header at offset {offset}")
    if n > MAX_VERTICES:
        raise InputError(f"graph6 vertex count {n} exceeds cap {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = s[pos:]
    if len(body) != need:
        raise InputError(
            f"graph6 body has {len(body)} bytes, expected {need} (offset {offset + pos})"
        )
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if nbits % 6:
        tail = ord(body[-1]) - 63
        if tail & ((1 << (6 - nbits % 6)) - 1):
            raise InputError(f"nonzero graph6 padding at offset {offset + pos + need - 1}")
    return Graph(n, tuple(adj))


# ---------------------------------------------------------------------------
# small named graphs used throughout the tests and demos


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph._trusted(n, tuple(full & ~(1 << v) for v in range(n)))


def empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(k: int) -> Graph:
    """``K_{1,k}`` with centre 0."""
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def wheel(k: int) -> Graph:
    """Hub 0 joined to a rim cycle ``1..k``."""
    rim = [(i, i % k + 1) for i in range(1, k + 1)]
    return Graph.from_edges(k + 1, rim + [(0, i) for i in range(1, k + 1)])


def complete_bipartite(p: int, q: int) -> Graph:
    return Graph.from_edges(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def square_of_cycle(n: int) -> Graph:
    return Graph.from_edges(n, {tuple(sorted((i, (i + d) % n))) for i in range(n) for d in (1, 2) if (i + d) % n != i})


def square_of_path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + d) for i in range(n) for d in (1, 2) if i + d < n])


def disjoint_union(*graphs: Graph) -> Graph:
    adj: list[int] = []
    shift = 0
    for h in graphs:
        adj.extend(row << shift for row in h.adj)
        shift += h.n
    return Graph(shift, tuple(adj))
