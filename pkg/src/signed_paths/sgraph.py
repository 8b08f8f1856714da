"""Signed graphs, switching, and exact switching-isomorphism."""
from __future__ import annotations

import enum
import struct
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for malformed signed-graph input."""


@dataclass(frozen=True)
class SignedGraph:
    """Simple graph on vertices ``0..n-1`` with edges ``(u, v, sign)``, ``u < v``.

    Build instances with :func:`from_edge_list`; the edge tuple is kept
    sorted so equality is structural.
    """

    n: int
    edges: tuple[tuple[int, int, int], ...] = ()

    def adjacency(self) -> list[dict[int, int]]:
        """``adj[u][v] = sign``."""
        adj: list[dict[int, int]] = [{} for _ in range(self.n)]
        for u, v, s in self.edges:
            adj[u][v] = s
            adj[v][u] = s
        return adj

    def matrix(self) -> list[list[int]]:
        a = [[0] * self.n for _ in range(self.n)]
        for u, v, s in self.edges:
            a[u][v] = a[v][u] = s
        return a

    def degrees(self) -> list[int]:
        d = [0] * self.n
        for u, v, _ in self.edges:
            d[u] += 1
            d[v] += 1
        return d

    @property
    def m(self) -> int:
        return len(self.edges)

    def underlying(self) -> frozenset[tuple[int, int]]:
        return frozenset((u, v) for u, v, _ in self.edges)

    def relabel(self, perm: Sequence[int]) -> SignedGraph:
        """Vertex ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling is not a permutation of the vertices")
        return from_edge_list(self.n, [(perm[u], perm[v], s) for u, v, s in self.edges])

    def __str__(self) -> str:
        return dumps_sg(self).strip().replace("\n", "; ")


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> SignedGraph:
    if n < 0:
        raise GraphError("vertex count must be nonnegative")
    seen: dict[tuple[int, int], int] = {}
    for e in edges:
        u, v, s = e
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"vertex index out of range in edge {tuple(e)}")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        if s not in (1, -1):
            raise GraphError(f"edge sign must be +1 or -1, got {s!r}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphError(f"duplicate edge {key}")
        seen[key] = int(s)
    return SignedGraph(n, tuple(sorted((u, v, s) for (u, v), s in seen.items())))


def switch(g: SignedGraph, subset: Iterable[int]) -> SignedGraph:
    xs = set(subset)
    for x in xs:
        if not 0 <= x < g.n:
            raise GraphError(f"vertex {x} out of range")
    return SignedGraph(
        g.n, tuple((u, v, -s if (u in xs) != (v in xs) else s) for u, v, s in g.edges)
    )


def disjoint_union(gs: Sequence[SignedGraph]) -> SignedGraph:
    edges = []
    offset = 0
    for g in gs:
        edges.extend((u + offset, v + offset, s) for u, v, s in g.edges)
        offset += g.n
    return SignedGraph(offset, tuple(edges))


def induced_subgraph(g: SignedGraph, vertices: Sequence[int]) -> SignedGraph:
    """Subgraph on ``vertices``, relabeled in the given order."""
    index = {v: i for i, v in enumerate(vertices)}
    return from_edge_list(
        len(vertices),
        [(index[u], index[v], s) for u, v, s in g.edges if u in index and v in index],
    )


def delete_vertex(g: SignedGraph, v: int) -> SignedGraph:
    return induced_subgraph(g, [u for u in range(g.n) if u != v])


def component_vertex_sets(g: SignedGraph) -> list[list[int]]:
    adj = g.adjacency()
    seen = [False] * g.n
    out = []
    for r in range(g.n):
        if seen[r]:
            continue
        seen[r] = True
        comp = [r]
        queue = deque([r])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g: SignedGraph) -> bool:
    return g.n <= 1 or len(component_vertex_sets(g)) == 1


def components(g: SignedGraph) -> list[SignedGraph]:
    parts = [induced_subgraph(g, vs) for vs in component_vertex_sets(g)]
    parts.sort(key=lambda h: (h.n, canonical_key(h)))
    return parts


# -- spanning forest and normalization ------------------------------------

def _bfs_forest(g: SignedGraph) -> tuple[list[int], list[int]]:
    """Lexicographic BFS forest: ``(parent, potential)``.

    ``potential[v]`` is the product of edge signs on the tree path from the
    root of ``v``'s tree; roots are visited in increasing index order.
    """
    adj = g.adjacency()
    parent = [-1] * g.n
    pot = [0] * g.n
    for r in range(g.n):
        if pot[r]:
            continue
        pot[r] = 1
        queue = deque([r])
        while queue:
            u = queue.popleft()
            for w in sorted(adj[u]):
                if not pot[w]:
                    pot[w] = pot[u] * adj[u][w]
                    parent[w] = u
                    queue.append(w)
    return parent, pot


def fundamental_cycle_signs(g: SignedGraph) -> list[tuple[tuple[int, int], int]]:
    parent, pot = _bfs_forest(g)
    out = []
    for u, v, s in g.edges:
        if parent[v] == u or parent[u] == v:
            continue
        out.append(((u, v), s * pot[u] * pot[v]))
    return out


def forest_normalize(g: SignedGraph) -> SignedGraph:
    _, pot = _bfs_forest(g)
    return SignedGraph(g.n, tuple((u, v, s * pot[u] * pot[v]) for u, v, s in g.edges))


def is_balanced(g: SignedGraph) -> bool:
    return all(s == 1 for _, s in fundamental_cycle_signs(g))


# -- invariant colorings ---------------------------------------------------

def _closed_walk_profile(g: SignedGraph, adj: list[dict[int, int]], lengths=(4, 6)) -> list[tuple]:
    """Per-vertex signed closed-walk counts, invariant under switching."""
    top = max(lengths)
    out = []
    for v in range(g.n):
        vec = {v: 1}
        prof = []
        for k in range(1, top + 1):
            nxt: dict[int, int] = {}
            for u, c in vec.items():
                for w, s in adj[u].items():
                    nxt[w] = nxt.get(w, 0) + c * s
            vec = nxt
            if k in lengths:
                prof.append(vec.get(v, 0))
        out.append(tuple(prof))
    return out


def _refine(adj: list[dict[int, int]], colors: list[int]) -> list[int]:
    """1-dimensional Weisfeiler-Leman refinement to a stable partition.

    Colors are renumbered by sorting their signatures, so the result is
    independent of vertex numbering.
    """
    n = len(colors)
    ncolors = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(n)]
        table = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [table[s] for s in sigs]
        if len(table) == ncolors:
            return colors
        ncolors = len(table)


def _initial_colors(graphs: Sequence[SignedGraph]) -> list[list[int]]:
    """Switching-invariant starting colors, numbered consistently across graphs."""
    raw = []
    for g in graphs:
        adj = g.adjacency()
        prof = _closed_walk_profile(g, adj)
        raw.append([(len(adj[v]), prof[v]) for v in range(g.n)])
    table = {s: i for i, s in enumerate(sorted({s for r in raw for s in r}))}
    return [[table[s] for s in r] for r in raw]


# -- switching isomorphism -------------------------------------------------

@dataclass(frozen=True)
class SwitchWitness:
    """``switch(g, switch_set).relabel(permutation) == h``."""

    permutation: tuple[int, ...]
    switch_set: frozenset[int]

    def check(self, g: SignedGraph, h: SignedGraph) -> bool:
        return switch(g, self.switch_set).relabel(self.permutation) == h


def are_switching_isomorphic(g: SignedGraph, h: SignedGraph) -> SwitchWitness | None:
    if g.n != h.n or g.m != h.m:
        return None
    if g.n == 0:
        return SwitchWitness((), frozenset())
    adj_g, adj_h = g.adjacency(), h.adjacency()
    union = disjoint_union([g, h])
    adj_u = union.adjacency()
    init = _initial_colors([union])[0]
    colors = _refine(adj_u, init)
    cg, ch = colors[: g.n], colors[g.n :]
    if sorted(cg) != sorted(ch):
        return None

    # BFS order inside each component, components started at a rarest color.
    freq: dict[int, int] = {}
    for c in cg:
        freq[c] = freq.get(c, 0) + 1
    order: list[int] = []
    placed = [False] * g.n
    while len(order) < g.n:
        root = min((v for v in range(g.n) if not placed[v]), key=lambda v: (freq[cg[v]], cg[v], v))
        placed[root] = True
        queue = deque([root])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in sorted(adj_g[u], key=lambda w: (freq[cg[w]], w)):
                if not placed[w]:
                    placed[w] = True
                    queue.append(w)

    by_color: dict[int, list[int]] = {}
    for v, c in enumerate(ch):
        by_color.setdefault(c, []).append(v)

    perm = [-1] * g.n
    used = [False] * h.n
    spin = [0] * g.n

    def extend(i: int) -> bool:
        if i == g.n:
            return True
        v = order[i]
        mapped_nbrs = [w for w in adj_g[v] if perm[w] >= 0]
        if mapped_nbrs:
            anchor = perm[mapped_nbrs[0]]
            candidates = [x for x in adj_h[anchor] if not used[x] and ch[x] == cg[v]]
        else:
            candidates = [x for x in by_color[cg[v]] if not used[x]]
        for x in candidates:
            if len(adj_h[x]) != len(adj_g[v]):
                continue
            sv = 0
            ok = True
            for w in mapped_nbrs:
                sh = adj_h[x].get(perm[w])
                if sh is None:
                    ok = False
                    break
                need = sh * adj_g[v][w] * spin[w]
                if sv == 0:
                    sv = need
                elif sv != need:
                    ok = False
                    break
            if not ok:
                continue
            # images of already-mapped non-neighbors must be non-neighbors of x
            n_mapped_h = sum(1 for y in adj_h[x] if used[y])
            if n_mapped_h != len(mapped_nbrs):
                continue
            perm[v] = x
            used[x] = True
            spin[v] = sv or 1
            if extend(i + 1):
                return True
            perm[v] = -1
            used[x] = False
            spin[v] = 0
        return False

    if not extend(0):
        return None
    witness = SwitchWitness(tuple(perm), frozenset(v for v in range(g.n) if spin[v] < 0))
    assert witness.check(g, h)
    return witness


# -- canonical form --------------------------------------------------------

def _leaf_labelings(g: SignedGraph, adj: list[dict[int, int]], colors: list[int]) -> Iterable[list[int]]:
    """All discrete colorings reachable by individualization-refinement.

    No automorphism pruning: the leaf set depends only on the isomorphism
    class, which is what makes the minimum over it canonical.
    """
    colors = _refine(adj, colors)
    if len(set(colors)) == len(colors):
        yield colors
        return
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    target = min((c for c in cells if len(cells[c]) > 1), key=lambda c: (len(cells[c]), c))
    for v in cells[target]:
        # split v off its cell; every other color shifts up to stay distinct
        child = [2 * c + (1 if c >= target else 0) for c in colors]
        child[v] = 2 * target
        yield from _leaf_labelings(g, adj, child)


def _pack(g: SignedGraph) -> bytes:
    out = [struct.pack(">HH", g.n, g.m)]
    out.extend(struct.pack(">HHb", u, v, s) for u, v, s in g.edges)
    return b"".join(out)


def canonical_form(g: SignedGraph) -> tuple[bytes, SignedGraph]:
    """Canonical key of a connected graph and the labeled representative achieving it."""
    if g.n == 0:
        return _pack(g), g
    adj = g.adjacency()
    init = _initial_colors([g])[0]
    best: tuple[bytes, SignedGraph] | None = None
    for labeling in _leaf_labelings(g, adj, init):
        h = forest_normalize(g.relabel(labeling))
        key = _pack(h)
        if best is None or key < best[0]:
            best = (key, h)
    assert best is not None
    return best


def canonical_key(g: SignedGraph) -> bytes:
    """Byte string equal for two graphs exactly when they are switching isomorphic."""
    parts = component_vertex_sets(g)
    if len(parts) <= 1:
        return canonical_form(g)[0]
    keys = sorted(canonical_form(induced_subgraph(g, vs))[0] for vs in parts)
    return b"U" + struct.pack(">H", len(keys)) + b"".join(keys)


# -- structural pruning ----------------------------------------------------

class FilterReason(enum.Enum):
    ODD_CYCLE = "odd-cycle"
    BALANCED_CYCLE = "balanced-cycle"
    DEGREE = "degree>3"
    PROPER_THETA = "proper-theta"
    LONG_UNBALANCED_CYCLE = "long-induced-unbalanced-cycle"
    NON_SIMPLE = "non-simple-spectrum"
    OUTSIDE_INTERVAL = "root-outside-interval"
    NONE = "none"


@dataclass(frozen=True)
class FilterVerdict:
    passed: bool
    reason: FilterReason

    @classmethod
    def ok(cls) -> FilterVerdict:
        return cls(True, FilterReason.NONE)

    @classmethod
    def fail(cls, reason: FilterReason) -> FilterVerdict:
        return cls(False, reason)


def is_bipartite(g: SignedGraph) -> bool:
    adj = g.adjacency()
    side = [-1] * g.n
    for r in range(g.n):
        if side[r] >= 0:
            continue
        side[r] = 0
        queue = deque([r])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return False
    return True


def _disjoint_path_count(adj: list[dict[int, int]], s: int, t: int, cap: int) -> int:
    """Number of internally disjoint s-t paths of length >= 2, capped at ``cap``.

    Unit vertex capacities via the in/out split: vertex x becomes ``2x`` (in)
    and ``2x+1`` (out).  The edge st itself is ignored.
    """
    capacity: dict[tuple[int, int], int] = {}
    out: dict[int, list[int]] = {}

    def arc(a: int, b: int) -> None:
        capacity[(a, b)] = capacity.get((a, b), 0) + 1
        capacity.setdefault((b, a), 0)
        out.setdefault(a, []).append(b)
        out.setdefault(b, []).append(a)

    for x in range(len(adj)):
        if x not in (s, t):
            arc(2 * x, 2 * x + 1)
        for y in adj[x]:
            if {x, y} != {s, t}:
                arc(2 * x + 1, 2 * y)
    src, dst = 2 * s + 1, 2 * t
    total = 0
    while total < cap:
        prev = {src: src}
        queue = deque([src])
        while queue and dst not in prev:
            a = queue.popleft()
            for b in out.get(a, ()):
                if b not in prev and capacity[(a, b)] > 0:
                    prev[b] = a
                    queue.append(b)
        if dst not in prev:
            break
        b = dst
        while b != src:
            a = prev[b]
            capacity[(a, b)] -= 1
            capacity[(b, a)] += 1
            b = a
        total += 1
    return total


def _has_proper_theta(g: SignedGraph, adj: list[dict[int, int]]) -> bool:
    """Two degree-3 hubs joined by three internally disjoint paths of length >= 2."""
    hubs = [v for v in range(g.n) if len(adj[v]) == 3]
    return any(_disjoint_path_count(adj, s, t, 3) >= 3 for s, t in combinations(hubs, 2))


def chordless_cycles(g: SignedGraph, max_len: int | None = None) -> list[list[int]]:
    """Every induced cycle as a vertex list, each listed once.

    Depth-first growth of chordless paths whose smallest vertex is the
    start; ``max_len`` bounds the search depth.
    """
    adj = g.adjacency()
    limit = g.n if max_len is None else max_len
    out = []

    def grow(path: list[int], on_path: set[int]) -> None:
        s, v = path[0], path[-1]
        for w in adj[v]:
            if w <= s or w in on_path:
                continue
            # w may touch only v and (to close the cycle) s
            touches = [x for x in adj[w] if x in on_path and x != v]
            if any(x != s for x in touches):
                continue
            if touches:
                if len(path) >= 2 and path[1] < w:
                    out.append(path + [w])
                continue
            if len(path) + 1 < limit:
                path.append(w)
                on_path.add(w)
                grow(path, on_path)
                on_path.discard(w)
                path.pop()

    for s in range(g.n):
        for v in adj[s]:
            if v > s:
                grow([s, v], {s, v})
    return out


def _cycle_sign(adj: list[dict[int, int]], cyc: list[int]) -> int:
    sign = 1
    for i, u in enumerate(cyc):
        sign *= adj[u][cyc[i - 1]]
    return sign


def structural_filter(g: SignedGraph) -> FilterVerdict:
    """Cheap necessary conditions for a connected signed graph to be a catalog member.

    Each rejected property is inherited by induced supergraphs, so the check
    is safe as a pruning rule during vertex-by-vertex growth.  Cycle rules
    concern induced cycles only: two unbalanced 4-cycles sharing an edge
    enclose a balanced 6-cycle with a chord, and such graphs do occur.
    """
    adj = g.adjacency()
    if any(len(a) > 3 for a in adj):
        return FilterVerdict.fail(FilterReason.DEGREE)
    if not is_bipartite(g):
        return FilterVerdict.fail(FilterReason.ODD_CYCLE)
    cycles = chordless_cycles(g)
    if any(_cycle_sign(adj, c) == 1 for c in cycles):
        return FilterVerdict.fail(FilterReason.BALANCED_CYCLE)
    if _has_proper_theta(g, adj):
        return FilterVerdict.fail(FilterReason.PROPER_THETA)
    if any(len(c) >= 8 for c in cycles):
        return FilterVerdict.fail(FilterReason.LONG_UNBALANCED_CYCLE)
    return FilterVerdict.ok()


# -- .sg text format -------------------------------------------------------

def dumps_sg(g: SignedGraph) -> str:
    lines = [f"sg {g.n}"]
    lines.extend(f"{u} {v} {'+' if s > 0 else '-'}" for u, v, s in g.edges)
    return "\n".join(lines) + "\n"


def loads_sg(text: str) -> SignedGraph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "sg":
                raise GraphError(f"line {lineno}: expected header 'sg <n>'")
            try:
                n = int(parts[1])
            except ValueError:
                raise GraphError(f"line {lineno}: bad vertex count {parts[1]!r}") from None
            continue
        if len(parts) != 3 or parts[2] not in ("+", "-"):
            raise GraphError(f"line {lineno}: expected 'u v +' or 'u v -'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: bad vertex index") from None
        edges.append((u, v, 1 if parts[2] == "+" else -1))
    if n is None:
        raise GraphError("missing 'sg <n>' header")
    return from_edge_list(n, edges)


def read_sg(path: str | Path) -> SignedGraph:
    return loads_sg(Path(path).read_text())


def write_sg(g: SignedGraph, path: str | Path) -> None:
    Path(path).write_text(dumps_sg(g))
