"""Finite simple graphs on vertices ``0..n-1``, named families, and classical
threshold-graph utilities."""

from dataclasses import dataclass, field
from itertools import combinations


class GraphParameterError(ValueError):
    """Invalid family parameters or malformed graph data."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise GraphParameterError("vertex count must be nonnegative")
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphParameterError(f"self-loop at {u}")
            if u > v:
                u, v = v, u
            if u < 0 or v >= self.n:
                raise GraphParameterError(f"edge {e} out of range for n={self.n}")
            norm.add((u, v))
        object.__setattr__(self, "edges", frozenset(norm))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={sorted(self.edges)})"

    @property
    def m(self):
        return len(self.edges)

    def has_edge(self, u, v):
        if u > v:
            u, v = v, u
        return (u, v) in self.edges

    def pairs(self):
        """All unordered vertex pairs in lexicographic order."""
        return list(combinations(range(self.n), 2))

    def neighbors(self, v):
        return {b if a == v else a for a, b in self.edges if v in (a, b)}

    def adjacency(self):
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def sorted_edges(self):
        return sorted(self.edges)

    def induced(self, vertices):
        """Induced subgraph, relabelled to ``0..len(vertices)-1`` in the given order."""
        pos = {v: i for i, v in enumerate(vertices)}
        return Graph(len(vertices), frozenset(
            (pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos))

    def relabel(self, perm):
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, frozenset((perm[u], perm[v]) for u, v in self.edges))

    def components(self):
        """Connected components as sorted vertex lists, ordered by least vertex."""
        adj = self.adjacency()
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            stack, comp = [s], []
            seen[s] = True
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps


def complete_graph(n):
    return Graph(n, frozenset(combinations(range(n), 2)))


def empty_graph(n):
    return Graph(n)


def complement(g):
    return Graph(g.n, frozenset(p for p in combinations(range(g.n), 2) if p not in g.edges))


def disjoint_union(graphs):
    edges, offset = [], 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges)
        offset += h.n
    return Graph(offset, frozenset(edges))


def complete_multipartite(parts):
    """Complete multipartite graph; parts are laid out in ascending size order."""
    parts = sorted(parts)
    if not parts or any(m < 1 for m in parts):
        raise GraphParameterError(f"part sizes must be positive, got {parts}")
    label, offset = [], 0
    for i, m in enumerate(parts):
        label.extend([i] * m)
        offset += m
    return Graph(offset, frozenset(
        (u, v) for u, v in combinations(range(offset), 2) if label[u] != label[v]))


# -- families ---------------------------------------------------------------

@dataclass(frozen=True)
class FamilySpec:
    """A named graph family with parameters.

    ``kind`` is one of ``pK2``, ``pK3``, ``CompleteMultipartite``,
    ``Complement`` or ``DisjointUnion``; ``params`` holds the integers (or, for
    the last two, nested specs).
    """

    kind: str
    params: tuple

    def __str__(self):
        if self.kind == "pK2":
            return f"pk2:{self.params[0]}"
        if self.kind == "pK3":
            return f"pk3:{self.params[0]}"
        if self.kind == "CompleteMultipartite":
            return "kpartite:" + ",".join(map(str, self.params))
        if self.kind == "Complement":
            return f"comp({self.params[0]})"
        return "+".join(str(s) for s in self.params)


def pK2(p):
    return FamilySpec("pK2", (p,))


def pK3(p):
    return FamilySpec("pK3", (p,))


def CompleteMultipartite(*parts):
    return FamilySpec("CompleteMultipartite", tuple(parts))


def Complement(inner):
    return FamilySpec("Complement", (inner,))


def DisjointUnion(*specs):
    return FamilySpec("DisjointUnion", tuple(specs))


def build_family(spec):
    """Build the graph for ``spec`` with the canonical vertex layout.

    Components are laid out consecutively (edge ``i`` of ``pK2`` is
    ``{2i, 2i+1}``, triangle ``i`` of ``pK3`` is ``{3i, 3i+1, 3i+2}``);
    multipartite parts are sorted ascending and laid out part by part.
    """
    kind, params = spec.kind, spec.params
    if kind in ("pK2", "pK3"):
        (p,) = params
        if not isinstance(p, int) or p < 1:
            raise GraphParameterError(f"{kind} needs p >= 1, got {p!r}")
        size = 2 if kind == "pK2" else 3
        return disjoint_union([complete_graph(size)] * p)
    if kind == "CompleteMultipartite":
        if any(not isinstance(m, int) for m in params):
            raise GraphParameterError(f"part sizes must be integers, got {params}")
        return complete_multipartite(params)
    if kind == "Complement":
        return complement(build_family(params[0]))
    if kind == "DisjointUnion":
        if not params:
            raise GraphParameterError("empty disjoint union")
        return disjoint_union([build_family(s) for s in params])
    raise GraphParameterError(f"unknown family kind {kind!r}")


def parse_family(text):
    """Parse the family DSL: ``pk2:4``, ``pk3:3``, ``kpartite:3,3``,
    ``comp(pk3:2)`` and ``+``-joined disjoint unions such as ``pk2:1+pk3:1``."""
    s = text.strip().lower()
    parts = _split_top(s, "+")
    if len(parts) > 1:
        return DisjointUnion(*(parse_family(p) for p in parts))
    if s.startswith("comp(") and s.endswith(")"):
        return Complement(parse_family(s[5:-1]))
    name, sep, arg = s.partition(":")
    if not sep:
        raise GraphParameterError(f"bad family string {text!r}")
    try:
        nums = tuple(int(x) for x in arg.split(","))
    except ValueError:
        raise GraphParameterError(f"bad family parameters in {text!r}") from None
    if name == "pk2" and len(nums) == 1:
        return pK2(nums[0])
    if name == "pk3" and len(nums) == 1:
        return pK3(nums[0])
    if name == "kpartite":
        return CompleteMultipartite(*nums)
    raise GraphParameterError(f"unknown family {text!r}")


def _split_top(s, sep):
    out, depth, cur = [], 0, []
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return out


# -- edge-list text format --------------------------------------------------

def format_edge_list(g):
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text):
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``; blank lines and
    ``#`` comments are ignored."""
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows or len(rows[0]) != 2:
        raise GraphParameterError("edge list must start with a line 'n m'")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError:
        raise GraphParameterError("edge list entries must be integers") from None
    if len(edges) != m:
        raise GraphParameterError(f"header promises {m} edges, found {len(edges)}")
    if len({tuple(sorted(e)) for e in edges}) != m:
        raise GraphParameterError("duplicate edge in edge list")
    return Graph(n, frozenset(edges))


# -- threshold graphs -------------------------------------------------------

def threshold_peel(g):
    """Peel isolated/dominating vertices; return the removal sequence or None.

    The sequence lists ``(vertex, "isolated" | "dominating")`` in removal
    order; reversed, it is a creation sequence for ``g``.
    """
    adj = g.adjacency()
    alive = set(range(g.n))
    seq = []
    while alive:
        for v in sorted(alive):
            deg = len(adj[v] & alive)
            if deg == 0:
                seq.append((v, "isolated"))
                break
            if deg == len(alive) - 1:
                seq.append((v, "dominating"))
                break
        else:
            return None
        alive.discard(v)
    return seq


def is_threshold(g, witness=False):
    seq = threshold_peel(g)
    if witness:
        return seq is not None, seq
    return seq is not None


def _induced_count(g, quad):
    return sum(1 for u, v in combinations(quad, 2) if g.has_edge(u, v))


def contains_induced_2k2(g):
    """True iff some 4 vertices induce exactly two disjoint edges."""
    for quad in combinations(range(g.n), 4):
        if _induced_count(g, quad) != 2:
            continue
        degs = [sum(g.has_edge(v, w) for w in quad if w != v) for v in quad]
        if all(d == 1 for d in degs):
            return True
    return False


# -- symmetry helpers used by the solver ------------------------------------

def twin_classes(g):
    """Classes of interchangeable vertices (true twins or false twins).

    Transposing two twins is an automorphism, so ranks may be sorted inside
    each class.  Only classes with at least two vertices are returned.
    """
    adj = g.adjacency()
    closed, open_ = {}, {}
    for v in range(g.n):
        closed.setdefault(frozenset(adj[v] | {v}), []).append(v)
        open_.setdefault(frozenset(adj[v]), []).append(v)
    classes = [c for c in closed.values() if len(c) > 1]
    classes += [c for c in open_.values() if len(c) > 1]
    return sorted(classes)


def clique_components(g):
    """Group components that are cliques by size: ``{size: [component, ...]}``."""
    groups = {}
    for comp in g.components():
        k = len(comp)
        if all(g.has_edge(u, v) for u, v in combinations(comp, 2)):
            groups.setdefault(k, []).append(comp)
    return groups
