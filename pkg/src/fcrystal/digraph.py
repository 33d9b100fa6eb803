"""The level digraph of a circular sequence, built literally and classified.

The level-m digraph of a circular sequence (eps_1..eps_s) has vertices x_{i,t}
for digits 0 <= i < m and positions 1 <= t <= s.  Each cyclically adjacent pair
(eps_t, eps_{t+1}) contributes weighted arcs from column t to column t+1 and
marks some vertices of the two columns as zero.  The rule comes from reading
the congruence p^a * y^(p^(a-b+1)) = p^b * z digit by digit modulo p^m with
a = max(eps_t, 0) and b = max(0, -eps_{t+1}):

* digits of column t below min(b, m) - a are forced to zero,
* digits of column t+1 below min(a, m) - b are forced to zero,
* digit level l of the congruence, for max(a, b) <= l <= m - 1, matches source
  digit l - a with target digit l - b along an arc of weight a - b.

Zero marks spread along arcs in both directions.  Every vertex has in- and
out-degree at most one, so the graph is a disjoint union of simple paths and
cycles; marked vertices always sit on paths.  Components are counted as

* circular: a cycle (a one-vertex loop counts),
* zero linear: a path containing a marked vertex,
* free linear: a path with no marked vertex.

This module is the oracle half of the library: deliberately literal, used to
cross-check the closed-form counts in circseq.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .circseq import CircularSeq, _check_seq

Vertex = tuple[int, int]
Arc = tuple[Vertex, Vertex, int]


@dataclass(frozen=True)
class LevelDigraph:
    """Level-m digraph of a circular sequence of length s.

    Vertices are (digit, position) pairs with 0 <= digit < m and 1 <= position <= s.
    zero_marks lists vertices forced to zero; edges are (source, target, weight) arcs.
    """

    s: int
    m: int
    zero_marks: frozenset[Vertex]
    edges: tuple[Arc, ...]

    def vertices(self) -> Iterator[Vertex]:
        for t in range(1, self.s + 1):
            for i in range(self.m):
                yield (i, t)

    @property
    def vertex_count(self) -> int:
        return self.m * self.s


@dataclass(frozen=True)
class ComponentStats:
    """Component census of a level digraph."""

    free_linear: int
    circular: int
    circular_edges: int
    zero_linear: int


@lru_cache(maxsize=None)
def pair_edges(eps_t: int, eps_next: int, m: int) -> tuple[tuple[int, ...], tuple[int, ...], tuple[tuple[int, int, int], ...]]:
    """Marks and arcs contributed by one adjacent pair, from the digit-matching rule.

    Returns (left_zeros, right_zeros, arcs): digits of column t forced to zero,
    digits of column t+1 forced to zero, and (source_digit, target_digit, weight)
    triples.  Pure and cached; pair_edges_case_table is the case-by-case oracle.
    """
    if m < 1:
        raise ValueError("level must be at least 1")
    a = max(eps_t, 0)
    b = max(0, -eps_next)
    left = tuple(range(max(0, min(b, m) - a)))
    right = tuple(range(max(0, min(a, m) - b)))
    arcs = tuple((l - a, l - b, a - b) for l in range(max(a, b), m))
    return left, right, arcs


def pair_edges_case_table(eps_t: int, eps_next: int, m: int) -> tuple[tuple[int, ...], tuple[int, ...], tuple[tuple[int, int, int], ...]]:
    """Literal eleven-case transcription of the pair rule, kept as an independent oracle.

    The eleven sign/size regions partition the (eps_t, eps_next) plane; each
    branch writes out its zero digits and arcs explicitly.
    """
    if m < 1:
        raise ValueError("level must be at least 1")
    x, y = eps_t, eps_next
    none: tuple[int, ...] = ()

    # (1) opposite entries of equal size below m: weight-0 arcs on the low digits
    if 0 < x == -y < m:
        return none, none, tuple((i, i, 0) for i in range(m - x))
    # (2) nonpositive left, nonnegative right: full column of weight-0 arcs
    if x <= 0 <= y:
        return none, none, tuple((i, i, 0) for i in range(m))
    # (3) small nonnegative left, deeper negative right (gap below m)
    if 0 <= x < -y < m:
        left = tuple(range(-y - x))
        arcs = tuple((-y - x + u, u, x + y) for u in range(m + y))
        return left, none, arcs
    # (4) nonnegative left below m, right at depth m or more: left column dies to digit m - x
    if 0 <= x < m <= -y:
        return tuple(range(m - x)), none, ()
    # (5) positive left dominating a shallower negative right
    if 0 <= -y < x < m:
        right = tuple(range(x + y))
        arcs = tuple((u, x + y + u, x + y) for u in range(m - x))
        return none, right, arcs
    # (6) left at m or more, shallow negative right: right column dies to digit m + y
    if 0 <= -y < m <= x:
        return none, tuple(range(m + y)), ()
    # (7) both saturated: nothing survives, nothing connects
    if x >= m and y <= -m:
        return none, none, ()
    # (8) negative left, negative right below depth m
    if x < 0 < -y < m:
        left = tuple(range(-y))
        arcs = tuple((-y + u, u, y) for u in range(m + y))
        return left, none, arcs
    # (9) negative left, right at depth m or more: whole left column dies
    if x < 0 and -y >= m:
        return tuple(range(m)), none, ()
    # (10) positive left below m, positive right
    if 0 < x < m and y > 0:
        right = tuple(range(x))
        arcs = tuple((u, x + u, x) for u in range(m - x))
        return none, right, arcs
    # (11) left at m or more, positive right: whole right column dies
    if x >= m and y > 0:
        return none, tuple(range(m)), ()

    raise AssertionError(f"unreachable: ({x}, {y}) escaped the case split")


def build_level_digraph(seq: CircularSeq, m: int) -> LevelDigraph:
    """Assemble the level-m digraph of a circular sequence.

    A single entry is its own cyclic successor: a lone zero gives m one-vertex
    loops, a lone nonzero entry kills its whole column.
    """
    _check_seq(seq)
    if m < 1:
        raise ValueError("level must be at least 1")
    s = len(seq)

    if s == 1:
        if seq[0] == 0:
            loops = tuple(((i, 1), (i, 1), 0) for i in range(m))
            return LevelDigraph(1, m, frozenset(), loops)
        return LevelDigraph(1, m, frozenset((i, 1) for i in range(m)), ())

    marks: set[Vertex] = set()
    arcs: list[Arc] = []
    for t in range(1, s + 1):
        t_next = t % s + 1
        left, right, pair_arcs = pair_edges(seq[t - 1], seq[t % s], m)
        marks.update((i, t) for i in left)
        marks.update((j, t_next) for j in right)
        arcs.extend(((i, t), (j, t_next), w) for i, j, w in pair_arcs)
    return LevelDigraph(s, m, frozenset(marks), tuple(arcs))


def propagate_zeros(g: LevelDigraph) -> LevelDigraph:
    """Spread zero marks along arcs in both directions.

    A vertex marked during construction never has two neighbours, so marks can
    only spread along paths; a mark with degree two would mean a marked cycle,
    which the construction rules out, and is reported as a hard error.
    """
    adjacency: dict[Vertex, list[Vertex]] = {}
    for src, dst, _w in g.edges:
        adjacency.setdefault(src, []).append(dst)
        adjacency.setdefault(dst, []).append(src)

    for v in g.zero_marks:
        if len(adjacency.get(v, ())) > 1:
            raise RuntimeError(f"zero mark at {v} has degree 2; it would lie on a cycle")

    marked = set(g.zero_marks)
    stack = list(marked)
    while stack:
        v = stack.pop()
        for u in adjacency.get(v, ()):
            if u not in marked:
                marked.add(u)
                stack.append(u)
    return LevelDigraph(g.s, g.m, frozenset(marked), g.edges)


def classify_components(g: LevelDigraph) -> ComponentStats:
    """Count components by kind.  Marks are read as component properties, so the
    counts do not depend on whether propagate_zeros already ran."""
    n = g.m * g.s
    parent = list(range(n))

    def find(v: int) -> int:
        root = v
        while parent[root] != root:
            root = parent[root]
        while parent[v] != root:
            parent[v], v = root, parent[v]
        return root

    def key(vertex: Vertex) -> int:
        digit, pos = vertex
        return (pos - 1) * g.m + digit

    for src, dst, _w in g.edges:
        a, b = find(key(src)), find(key(dst))
        if a != b:
            parent[a] = b

    edge_count = [0] * n
    for src, _dst, _w in g.edges:
        edge_count[find(key(src))] += 1
    mark_count = [0] * n
    for v in g.zero_marks:
        mark_count[find(key(v))] += 1
    vertex_count = [0] * n
    for v in range(n):
        vertex_count[find(v)] += 1

    free_linear = circular = circular_edges = zero_linear = 0
    for root in range(n):
        if vertex_count[root] == 0:
            continue
        vertices, edges, marks = vertex_count[root], edge_count[root], mark_count[root]
        if edges == vertices:
            if marks:
                raise RuntimeError("circular component contains a zero mark")
            circular += 1
            circular_edges += edges
        elif edges == vertices - 1:
            if marks:
                zero_linear += 1
            else:
                free_linear += 1
        else:
            raise RuntimeError("component is neither a path nor a single cycle")
    return ComponentStats(free_linear, circular, circular_edges, zero_linear)


def oracle_counts(seq: CircularSeq, m: int) -> ComponentStats:
    """Build, propagate, classify: the literal component census of the level-m digraph."""
    return classify_components(propagate_zeros(build_level_digraph(seq, m)))


def to_dot(g: LevelDigraph) -> str:
    """Dump in DOT format: vertices named "digit:position", arcs labelled by weight,
    zero-marked vertices flagged with a zero attribute."""
    lines = ["digraph level {"]
    for i, t in g.vertices():
        attrs = ' [zero="1"]' if (i, t) in g.zero_marks else ""
        lines.append(f'  "{i}:{t}"{attrs};')
    for (i, t), (j, u), w in g.edges:
        lines.append(f'  "{i}:{t}" -> "{j}:{u}" [weight="{w}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
