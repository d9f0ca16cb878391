"""Graph representation, graph6/edge-list codecs and named-family generators.

Vertices are the integers 0..n-1.  Adjacency is kept as one bitmask per
vertex (bit u of ``adj[v]`` set iff u~v), which makes neighbourhood
intersections single integer operations for every solver in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

#: Default cap on graph order: one machine word per adjacency row.  Callers
#: may override it per operation; solvers impose far smaller limits.
MAX_VERTICES = 64

_GRAPH6_LONG_MAX = 258047  # largest order of the 4-byte graph6 header


class ParseError(ValueError):
    """Malformed graph6 or edge-list input."""


class GuardError(ValueError):
    """Input exceeds a configured size guard."""


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    Instances are constructed once and never mutated afterwards; they are
    safe to share between concurrent readers.
    """

    __slots__ = ("n", "adj", "label")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (),
                 label: str | None = None):
        if n < 1:
            raise ValueError(f"graph order must be >= 1, got {n}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.n = n
        self.adj = tuple(rows)
        self.label = label

    @classmethod
    def from_rows(cls, rows: Iterable[int], label: str | None = None) -> "Graph":
        """Build a graph directly from adjacency bitmask rows (trusted input)."""
        g = object.__new__(cls)
        g.adj = tuple(rows)
        g.n = len(g.adj)
        g.label = label
        return g

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        row = self.adj[v]
        return [u for u in range(self.n) if row >> u & 1]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def min_degree(self) -> int:
        return min(self.degrees())

    def max_degree(self) -> int:
        return max(self.degrees())

    def is_regular(self) -> bool:
        d = self.degrees()
        return min(d) == max(d)

    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            row = self.adj[v] >> (v + 1) << (v + 1)
            for u in range(v + 1, self.n):
                if row >> u & 1:
                    yield (v, u)

    def is_complete(self) -> bool:
        return self.edge_count() == self.n * (self.n - 1) // 2

    def is_empty(self) -> bool:
        return self.edge_count() == 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        name = self.label or "graph"
        return f"Graph({name}, n={self.n}, m={self.edge_count()})"


def complement(g: Graph) -> Graph:
    """Complement graph: u~v in the result iff u != v and not u~v in g."""
    full = (1 << g.n) - 1
    rows = [(full ^ g.adj[v]) & ~(1 << v) for v in range(g.n)]
    return Graph.from_rows(rows)


def degree_stats(g: Graph) -> tuple[int, int, bool]:
    """Return (min degree, max degree, regular?) of a graph."""
    degs = g.degrees()
    lo, hi = min(degs), max(degs)
    return lo, hi, lo == hi


def complete_bipartite_parts(g: Graph) -> tuple[int, int] | None:
    """Detect whether g is a complete bipartite graph K_{p,q}.

    Returns (p, q) with p <= q, or None.  A graph is complete bipartite
    exactly when its complement is the disjoint union of two cliques.
    """
    co = complement(g)
    seen = 0
    comps: list[int] = []
    for start in range(g.n):
        if seen >> start & 1:
            continue
        mask = 1 << start
        frontier = mask
        while frontier:
            grow = 0
            v = frontier
            while v:
                low = v & -v
                grow |= co.adj[low.bit_length() - 1]
                v ^= low
            frontier = grow & ~mask
            mask |= grow
        comps.append(mask)
        seen |= mask
    if len(comps) != 2:
        return None
    for mask in comps:
        v = mask
        while v:
            low = v & -v
            u = low.bit_length() - 1
            if co.adj[u] & mask != mask & ~low:
                return None
            v ^= low
    p, q = sorted(m.bit_count() for m in comps)
    return p, q


# ---------------------------------------------------------------------------
# Named families
# ---------------------------------------------------------------------------

FAMILY_KINDS = ("complete", "cycle", "empty", "complete-bipartite",
                "random-gnp", "kdelta-sharpness")


@dataclass(frozen=True)
class FamilySpec:
    """Parameters for one named graph family.

    kind / parameters:
      complete, cycle, empty   -> n
      complete-bipartite       -> p, q
      random-gnp               -> n, prob, seed
      kdelta-sharpness         -> k
    """

    kind: str
    n: int | None = None
    p: int | None = None
    q: int | None = None
    prob: float | None = None
    seed: int | None = None
    k: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.kind in ("complete", "cycle", "empty"):
            if self.n is None or self.n < 1:
                raise ValueError(f"{self.kind} needs n >= 1")
        elif self.kind == "complete-bipartite":
            if self.p is None or self.q is None or self.p < 1 or self.q < 1:
                raise ValueError("complete-bipartite needs p, q >= 1")
        elif self.kind == "random-gnp":
            if self.n is None or self.n < 1:
                raise ValueError("random-gnp needs n >= 1")
            if self.prob is None or not 0.0 <= self.prob <= 1.0:
                raise ValueError("random-gnp needs 0 <= prob <= 1")
            if self.seed is None:
                raise ValueError("random-gnp needs a seed")
        elif self.kind == "kdelta-sharpness":
            if self.k is None or self.k < 1:
                raise ValueError("kdelta-sharpness needs k >= 1")

    def order(self) -> int:
        """Number of vertices of the generated graph."""
        if self.kind in ("complete", "cycle", "empty", "random-gnp"):
            return self.n  # type: ignore[return-value]
        if self.kind == "complete-bipartite":
            return self.p + self.q  # type: ignore[operator]
        return kdelta_order(self.k)  # type: ignore[arg-type]

    def name(self) -> str:
        if self.kind == "complete":
            return f"K_{self.n}"
        if self.kind == "cycle":
            return f"C_{self.n}"
        if self.kind == "empty":
            return f"E_{self.n}"
        if self.kind == "complete-bipartite":
            return f"K_{{{self.p},{self.q}}}"
        if self.kind == "random-gnp":
            return f"G({self.n},{self.prob},seed={self.seed})"
        return f"kdelta-sharpness(k={self.k})"


def kdelta_copy_order(k: int) -> int:
    """Order of one clique copy in the minimum-degree sharpness graph."""
    return k ** 3 + (2 * k + 1) * k


def kdelta_order(k: int) -> int:
    """Total order of the minimum-degree sharpness graph for parameter k."""
    return k * kdelta_copy_order(k) + 1


# SplitMix64: the fixed counter-based generator behind random-gnp.  Pair
# t (column-major order: (0,1),(0,2),(1,2),(0,3),...) maps to the 64-bit
# word mix64(seed + (t+1)*GAMMA); the edge is present iff that word is
# below floor(prob * 2^64).  Bit-exact across platforms.
_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def _mix64(z: int) -> int:
    z &= _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def gnp_word(seed: int, t: int) -> int:
    """t-th word of the SplitMix64 stream for the given seed."""
    return _mix64((seed + (t + 1) * _GAMMA) & _MASK64)


def generate(spec: FamilySpec, max_n: int = MAX_VERTICES) -> Graph:
    """Materialize a named family member as a Graph.

    Raises GuardError if the order exceeds max_n, ValueError for
    parameter combinations the family does not admit (e.g. cycles with
    n < 3).
    """
    n = spec.order()
    if n > max_n:
        raise GuardError(f"{spec.name()} has {n} vertices, guard is {max_n}")

    if spec.kind == "complete":
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
        return Graph(n, edges, label=spec.name())

    if spec.kind == "empty":
        return Graph(n, (), label=spec.name())

    if spec.kind == "cycle":
        if n < 3:
            raise ValueError(f"cycle needs n >= 3, got {n}")
        return Graph(n, [(i, (i + 1) % n) for i in range(n)], label=spec.name())

    if spec.kind == "complete-bipartite":
        p, q = spec.p, spec.q
        edges = [(u, p + v) for u in range(p) for v in range(q)]
        return Graph(n, edges, label=spec.name())

    if spec.kind == "random-gnp":
        threshold = int(spec.prob * 2 ** 64)
        edges = []
        t = 0
        for v in range(1, n):
            for u in range(v):
                if gnp_word(spec.seed, t) < threshold:
                    edges.append((u, v))
                t += 1
        return Graph(n, edges, label=spec.name())

    # kdelta-sharpness: k disjoint copies of a clique on k^3+(2k+1)k
    # vertices plus one apex joined to the first k vertices of every copy.
    k = spec.k
    if k < 1:
        raise ValueError("kdelta-sharpness needs k >= 1")
    m = kdelta_copy_order(k)
    apex = k * m
    edges = []
    for i in range(k):
        base = i * m
        edges.extend((base + a, base + b) for a in range(m) for b in range(a + 1, m))
        edges.extend((apex, base + j) for j in range(k))
    return Graph(n, edges, label=spec.name())


# ---------------------------------------------------------------------------
# graph6 codec
# ---------------------------------------------------------------------------

def encode_graph6(g: Graph) -> str:
    """Encode a graph in the standard graph6 ASCII format."""
    n = g.n
    if n > _GRAPH6_LONG_MAX:
        raise ValueError(f"graph6 header supports n <= {_GRAPH6_LONG_MAX}")
    if n <= 62:
        out = [chr(n + 63)]
    else:
        out = [chr(126), chr((n >> 12 & 63) + 63), chr((n >> 6 & 63) + 63),
               chr((n & 63) + 63)]
    group = 0
    nbits = 0
    for v in range(1, n):
        for u in range(v):
            group = group << 1 | (g.adj[u] >> v & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(group + 63))
                group = nbits = 0
    if nbits:
        out.append(chr((group << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str, max_n: int = MAX_VERTICES) -> Graph:
    """Parse one graph6 line into a Graph.

    Accepts the optional ">>graph6<<" prefix.  Raises ParseError (with the
    byte offset into the stripped payload) on malformed input and
    GuardError when the encoded order exceeds max_n.
    """
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):].strip()
    if not s:
        raise ParseError("empty graph6 input")

    data = [ord(c) for c in s]
    for off, b in enumerate(data):
        if not 63 <= b <= 126:
            raise ParseError(f"byte {off}: value {b} outside graph6 range 63..126")

    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise ParseError("byte 1: graph6 orders above 258047 not supported")
        if len(data) < 4:
            raise ParseError(f"byte {len(data)}: truncated long-form order")
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        pos = 4
    else:
        n = data[0] - 63
        pos = 1
    if n < 1:
        raise ParseError("byte 0: graphs of order 0 are not supported")
    if n > max_n:
        raise GuardError(f"graph6 order {n} exceeds guard {max_n}")

    nbits = n * (n - 1) // 2
    ngroups = (nbits + 5) // 6
    if len(data) - pos < ngroups:
        raise ParseError(f"byte {len(data)}: truncated bit vector "
                         f"(need {ngroups} data bytes, got {len(data) - pos})")
    if len(data) - pos > ngroups:
        raise ParseError(f"byte {pos + ngroups}: trailing garbage after bit vector")

    rows = [0] * n
    bit = 0
    for i in range(ngroups):
        group = data[pos + i] - 63
        for j in range(5, -1, -1):
            if bit >= nbits:
                if group >> j & 1:
                    raise ParseError(f"byte {pos + i}: nonzero padding bit")
                continue
            if group >> j & 1:
                u, v = _pair_from_index(bit)
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            bit += 1
    return Graph.from_rows(rows)


def _pair_from_index(t: int) -> tuple[int, int]:
    """Inverse of column-major upper-triangle enumeration (0,1),(0,2),(1,2),..."""
    v = 1
    while v * (v + 1) // 2 <= t:
        v += 1
    u = t - v * (v - 1) // 2
    return u, v


# ---------------------------------------------------------------------------
# Edge-list codec
# ---------------------------------------------------------------------------

def parse_edge_list(text: str, max_n: int = MAX_VERTICES) -> Graph:
    """Parse the plain edge-list format.

    First nonempty line is ``n <count>``; each following nonempty line is
    one edge ``u v`` with 0-based endpoints.  Duplicate edges collapse.
    Raises ParseError with the offending 1-based line number.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2 or tokens[0] != "n":
                raise ParseError(f"line {lineno}: expected header 'n <count>'")
            try:
                n = int(tokens[1])
            except ValueError:
                raise ParseError(f"line {lineno}: non-integer vertex count "
                                 f"{tokens[1]!r}") from None
            if n < 1:
                raise ParseError(f"line {lineno}: vertex count must be >= 1")
            if n > max_n:
                raise GuardError(f"edge-list order {n} exceeds guard {max_n}")
            continue
        if len(tokens) != 2:
            raise ParseError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer endpoint") from None
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"line {lineno}: endpoint out of range 0..{n - 1}")
        edges.append((u, v))
    if n is None:
        raise ParseError("line 1: missing 'n <count>' header")
    return Graph(n, edges)
