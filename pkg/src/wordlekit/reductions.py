"""Instance generators tying covering problems to guessing games.

Three constructions: doubling a set-cover universe so that covering all
elements and covering all-but-one coincide; turning an almost-set-cover
instance into a dictionary of element-words and set-words whose game
value is the cover budget plus one; and turning a 4-regular graph into a
two-words-per-vertex dictionary whose game value tracks the graph's
domination number within an additive 4.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import NotFourRegular
from .model import Alphabet, Dictionary


@dataclass(frozen=True)
class SetFamily:
    """Sets over universe 1..universe whose union is the whole universe."""

    universe: int
    sets: tuple  # tuple[frozenset, ...], input order preserved

    def __post_init__(self):
        if self.universe < 1:
            raise ValueError("universe must have at least one element")
        object.__setattr__(
            self, "sets", tuple(frozenset(s) for s in self.sets)
        )
        if not self.sets:
            raise ValueError("family needs at least one set")
        covered: set = set()
        for s in self.sets:
            for u in s:
                if not (isinstance(u, int) and 1 <= u <= self.universe):
                    raise ValueError(f"element {u!r} outside universe 1..{self.universe}")
            covered |= s
        if covered != set(range(1, self.universe + 1)):
            missing = sorted(set(range(1, self.universe + 1)) - covered)
            raise ValueError(f"universe elements {missing} not in any set")

    def __len__(self) -> int:
        return len(self.sets)


def set_family_from_json(text: str) -> SetFamily:
    obj = json.loads(text)
    return SetFamily(universe=obj["universe"], sets=[set(s) for s in obj["sets"]])


def set_family_to_json(f: SetFamily) -> str:
    return json.dumps(
        {"universe": f.universe, "sets": [sorted(s) for s in f.sets]}
    )


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 1..n with sorted adjacency."""

    n: int
    adj: tuple  # adj[v-1] = tuple of neighbors of v, ascending

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        neigh = [set() for _ in range(n)]
        seen = set()
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u},{v}) outside vertex range 1..{n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge ({u},{v})")
            seen.add(key)
            neigh[u - 1].add(v)
            neigh[v - 1].add(u)
        return cls(n=n, adj=tuple(tuple(sorted(s)) for s in neigh))

    def degree(self, v: int) -> int:
        return len(self.adj[v - 1])

    def neighbors(self, v: int) -> tuple:
        return self.adj[v - 1]

    def edges(self) -> list:
        return [
            (u, v) for u in range(1, self.n + 1) for v in self.adj[u - 1] if u < v
        ]


def parse_graph(text: str) -> Graph:
    """First line "n m", then m lines "u v" (1-based, undirected)."""
    lines = [ln for ln in text.split("\n") if ln.strip()]
    if not lines:
        raise ValueError("empty graph file")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"expected 'n m' header, got {lines[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise ValueError(f"header says {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"expected 'u v' edge line, got {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph.from_edges(n, edges)


def serialize_graph(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(
        n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    )


def circulant_graph(n: int, offsets) -> Graph:
    """Vertices 1..n; v adjacent to v±d (mod n) for each offset d."""
    edges = set()
    for v in range(n):
        for d in offsets:
            u = (v + d) % n
            edges.add((min(v, u) + 1, max(v, u) + 1))
    return Graph.from_edges(n, sorted(edges))


def setcover_to_asc(f: SetFamily) -> SetFamily:
    """Double every element into a pair so "all but one" implies "all".

    Element u becomes {2u-1, 2u}; a sub-family missing any element of the
    output misses its twin too, so it can only be an almost-cover by
    being a full cover of the original universe.
    """
    return SetFamily(
        universe=2 * f.universe,
        sets=[frozenset(x for u in s for x in (2 * u - 1, 2 * u)) for s in f.sets],
    )


def asc_to_wordle(f: SetFamily, c: int):
    """Dictionary whose game is winnable in c+1 guesses iff (f, c) almost-covers.

    Word length n = universe size.  Element-word for u: the symbol "1" at
    position u and "s<u>" everywhere else.  Set-word for S: "1" at member
    positions, "_" elsewhere.  Returns (dictionary, c + 1).  Degenerate
    inputs whose words collide (for instance n = 1) are rejected.
    """
    if c < 1:
        raise ValueError("cover budget must be at least 1")
    n = f.universe
    symbols = ["_", "1"] + [f"s{i}" for i in range(1, n + 1)]
    alphabet = Alphabet(symbols)
    one = 1
    bottom = 0

    def s_id(i: int) -> int:
        return 1 + i

    words = []
    for u in range(1, n + 1):
        words.append(
            tuple(one if pos == u else s_id(u) for pos in range(1, n + 1))
        )
    for s in f.sets:
        words.append(
            tuple(one if pos in s else bottom for pos in range(1, n + 1))
        )
    return Dictionary(alphabet, words), c + 1


def graph_to_wordle(g: Graph) -> Dictionary:
    """Two length-5 words per vertex: (v, neighbors ascending) and (v,)*5."""
    for v in range(1, g.n + 1):
        deg = g.degree(v)
        if deg != 4:
            raise NotFourRegular(v, deg)
    alphabet = Alphabet([str(v) for v in range(1, g.n + 1)])
    words = []
    for v in range(1, g.n + 1):
        words.append((v - 1,) + tuple(u - 1 for u in g.neighbors(v)))
    for v in range(1, g.n + 1):
        words.append((v - 1,) * 5)
    return Dictionary(alphabet, words)
