"""Edge colorings of complete graphs with locally few colors.

Carries the machinery tying integer colorings to graph colorings: the
difference coloring (edge {u, v} inherits the color of |u - v|), exact
distance neighborhoods inside one color, the vertex weight functional
1/(chi^d * (d!)^(1/ell)), charge covers of color balls by signed-step
reachability, and an exact chromatic number for graphs up to 16 vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from math import factorial
from typing import Iterable

from .eqcore import Coloring, ResourceLimitError

MAX_EXACT_VERTICES = 16
_WEIGHT_PREC = 65
WEIGHT_MARGIN = Decimal("1e-30")


class LocalEdgeColoring:
    """Edge coloring of the complete graph on vertices 1..n.

    Every unordered pair must receive exactly one color; per-vertex incident
    color sets and per-color adjacency are precomputed.  q-locality means no
    vertex sees more than q distinct colors.
    """

    def __init__(self, n: int, edge_colors: dict):
        if n < 1:
            raise ValueError("n must be positive")
        colors: dict[tuple[int, int], int] = {}
        for (u, v), c in dict(edge_colors).items():
            if u == v or not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"bad edge ({u}, {v})")
            key = (u, v) if u < v else (v, u)
            if key in colors and colors[key] != c:
                raise ValueError(f"edge {key} colored twice")
            colors[key] = c
        if len(colors) != n * (n - 1) // 2:
            raise ValueError("every pair needs exactly one color")
        self.n = n
        self._colors = colors
        self._incident: dict[int, set[int]] = {v: set() for v in range(1, n + 1)}
        self._adj: dict[int, dict[int, set[int]]] = {}
        for (u, v), c in colors.items():
            self._incident[u].add(c)
            self._incident[v].add(c)
            per = self._adj.setdefault(c, {})
            per.setdefault(u, set()).add(v)
            per.setdefault(v, set()).add(u)

    @classmethod
    def from_triples(cls, n: int, triples: Iterable[tuple[int, int, int]]) -> "LocalEdgeColoring":
        return cls(n, {(u, v): c for u, v, c in triples})

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def color_of(self, u: int, v: int) -> int:
        return self._colors[(u, v) if u < v else (v, u)]

    def colors_at(self, v: int) -> set[int]:
        return set(self._incident[v])

    def color_degree(self, v: int) -> int:
        return len(self._incident[v])

    def locality(self) -> int:
        """Max color degree over all vertices; 0 for the single-vertex graph."""
        return max((len(s) for s in self._incident.values()), default=0)

    def color_edges_within(self, color: int, vertices: Iterable[int]) -> list[tuple[int, int]]:
        vs = set(vertices)
        return [e for e, c in sorted(self._colors.items())
                if c == color and e[0] in vs and e[1] in vs]

    def to_json_dict(self) -> dict:
        return {"n": self.n,
                "edges": [[u, v, c] for (u, v), c in sorted(self._colors.items())]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "LocalEdgeColoring":
        return cls.from_triples(data["n"], [tuple(e) for e in data["edges"]])


def difference_coloring(coloring: Coloring) -> LocalEdgeColoring:
    """Complete graph on [1..n] where edge {u, v} takes the color of |u - v|.

    An r-coloring of the integers yields an r-local edge coloring outright,
    since only r colors exist at all.
    """
    n = coloring.n
    return LocalEdgeColoring(
        n, {(u, v): coloring.color_of(v - u)
            for u in range(1, n + 1) for v in range(u + 1, n + 1)})


def _bfs_layers(ec: LocalEdgeColoring, start: int, color: int, max_dist: int) -> list[set[int]]:
    adj = ec._adj.get(color, {})
    layers = [{start}]
    seen = {start}
    frontier = {start}
    for _ in range(max_dist):
        nxt = {w for v in frontier for w in adj.get(v, ()) if w not in seen}
        if not nxt:
            break
        seen |= nxt
        layers.append(nxt)
        frontier = nxt
    return layers


def neighborhood(ec: LocalEdgeColoring, v: int, color: int, dist: int) -> set[int]:
    """Vertices at distance exactly `dist` from v in the color's subgraph."""
    if not 1 <= v <= ec.n or dist < 0:
        raise ValueError("vertex out of range or negative distance")
    layers = _bfs_layers(ec, v, color, dist)
    return set(layers[dist]) if dist < len(layers) else set()


def neighborhood_within(ec: LocalEdgeColoring, v: int, color: int, dist: int) -> set[int]:
    """Union of the distance layers 0..dist."""
    if not 1 <= v <= ec.n or dist < 0:
        raise ValueError("vertex out of range or negative distance")
    return set().union(*_bfs_layers(ec, v, color, dist))


def vertex_weight(chi: int, ell: int, d: int) -> Decimal:
    """1 / (chi^d * (d!)^(1/ell)) at 50 significant digits (1 when d = 0)."""
    if chi < 2 or ell < 1 or d < 0:
        raise ValueError("need chi >= 2, ell >= 1, d >= 0")
    with localcontext() as ctx:
        ctx.prec = _WEIGHT_PREC
        root = Decimal(factorial(d)) ** (Decimal(1) / ell)
        value = 1 / (Decimal(chi) ** d * root)
    with localcontext() as ctx:
        ctx.prec = 50
        return +value


def total_weight(ec: LocalEdgeColoring, chi: int, ell: int) -> Decimal:
    """Sum of vertex weights taken at each vertex's color degree."""
    cache: dict[int, Decimal] = {}
    with localcontext() as ctx:
        ctx.prec = _WEIGHT_PREC
        total = Decimal(0)
        for v in ec.vertices():
            d = ec.color_degree(v)
            if d not in cache:
                cache[d] = vertex_weight(chi, ell, d)
            total += cache[d]
    return total


def chromatic_number(vertices: Iterable[int], edges: Iterable[tuple[int, int]]) -> int:
    """Exact chromatic number by branch and bound.

    A greedy clique seeds the lower bound and pins its vertices to distinct
    classes; largest-first greedy supplies the ceiling.  Capped at 16
    vertices, past which the call refuses rather than approximates.
    """
    vs = sorted(set(vertices))
    if len(vs) > MAX_EXACT_VERTICES:
        raise ResourceLimitError(f"exact chromatic number capped at {MAX_EXACT_VERTICES} vertices")
    adj: dict[int, set[int]] = {v: set() for v in vs}
    for u, w in edges:
        if u == w or u not in adj or w not in adj:
            raise ValueError(f"bad edge ({u}, {w})")
        adj[u].add(w)
        adj[w].add(u)
    if not vs:
        return 0
    by_degree = sorted(vs, key=lambda v: (-len(adj[v]), v))
    clique: list[int] = []
    for v in by_degree:
        if all(u in adj[v] for u in clique):
            clique.append(v)
    greedy: dict[int, int] = {}
    for v in by_degree:
        taken = {greedy[u] for u in adj[v] if u in greedy}
        c = 1
        while c in taken:
            c += 1
        greedy[v] = c
    best = max(greedy.values())
    if len(clique) == best:
        return best
    order = clique + [v for v in by_degree if v not in clique]
    classes: list[set[int]] = [{v} for v in clique]

    def extend(i: int) -> None:
        nonlocal best
        if len(classes) >= best:
            return
        if i == len(order):
            best = len(classes)
            return
        v = order[i]
        for cls in classes:
            if adj[v].isdisjoint(cls):
                cls.add(v)
                extend(i + 1)
                cls.discard(v)
        if len(classes) + 1 < best:
            classes.append({v})
            extend(i + 1)
            classes.pop()

    extend(len(clique))
    return best


@dataclass(frozen=True)
class HypothesisReport:
    """Per-(vertex, color) exact chromatic numbers of the color balls."""

    holds: bool
    chi: int
    ell: int
    chromatic: dict = field(compare=False)

    def worst(self) -> int:
        return max(self.chromatic.values(), default=1)


def local_chromatic_hypothesis(ec: LocalEdgeColoring, chi: int, ell: int) -> HypothesisReport:
    """Check that for every vertex v and incident color c, the color-c
    subgraph induced by the ball N_c^{<=ell}(v) is chi-colorable, exactly."""
    if ec.n > MAX_EXACT_VERTICES:
        raise ResourceLimitError(f"exact hypothesis check capped at {MAX_EXACT_VERTICES} vertices")
    if chi < 2 or ell < 1:
        raise ValueError("need chi >= 2 and ell >= 1")
    table: dict[tuple[int, int], int] = {}
    holds = True
    for v in ec.vertices():
        for c in sorted(ec.colors_at(v)):
            ball = neighborhood_within(ec, v, c, ell)
            k = chromatic_number(ball, ec.color_edges_within(c, ball))
            table[(v, c)] = k
            holds = holds and k <= chi
    return HypothesisReport(holds, chi, ell, table)


@dataclass(frozen=True)
class ConclusionReport:
    holds: bool              # exact vertex-count predicate
    locality: int
    total_weight: Decimal
    weight_bounded: bool     # total weight <= 1 + 1e-30


def vertex_count_predicate(n: int, chi: int, q: int, ell: int) -> bool:
    """Exact truth of n <= chi^q * (q!)^(1/ell), tested as n^ell <= chi^(q*ell) * q!."""
    if n < 1 or chi < 1 or q < 0 or ell < 1:
        raise ValueError("bad parameters")
    return n ** ell <= chi ** (q * ell) * factorial(q)


def vertex_count_conclusion(ec: LocalEdgeColoring, chi: int, ell: int) -> ConclusionReport:
    """Evaluate the vertex-count cap for a q-local coloring (q = actual
    locality), plus the underlying total-weight check w(V) <= 1."""
    q = ec.locality()
    total = total_weight(ec, chi, ell)
    return ConclusionReport(
        holds=vertex_count_predicate(ec.n, chi, q, ell),
        locality=q,
        total_weight=total,
        weight_bounded=total <= Decimal(1) + WEIGHT_MARGIN,
    )


class ChargeCoverError(RuntimeError):
    """A charge cover failed its cover or independence check."""


@dataclass(frozen=True)
class ChargeCover:
    """Signed-step reachability sets around a base vertex.

    sets[t] holds the integers in [1..n] expressible as base plus at most
    `radius` signed class elements with net sign count t; `ball` is the
    color ball they must cover.
    """

    base: int
    color: int
    radius: int
    sets: dict = field(compare=False)
    ball: frozenset = field(compare=False)

    def proper_coloring(self) -> dict[int, int]:
        """Map each ball vertex to the first charge whose set holds it; a
        proper coloring of the color ball with at most 2*radius + 1 classes."""
        out: dict[int, int] = {}
        for x in sorted(self.ball):
            for t in range(-self.radius, self.radius + 1):
                if x in self.sets[t]:
                    out[x] = t
                    break
        return out


def charge_cover(coloring: Coloring, base: int, color: int, radius: int,
                 clip: bool = True) -> ChargeCover:
    """Cover the color ball around `base` by charge sets and verify it.

    Walks up to `radius` steps, each adding or subtracting a class element;
    the running sign count is the charge.  With clip=True every intermediate
    value must stay inside [1..n] (steps move through actual vertices); with
    clip=False only endpoints are restricted, which can only enlarge the
    sets.  Requires the coloring to avoid the balanced equations up to
    `radius`; when it does, the sets cover the ball and each spans no edge
    of the class's difference graph.  Violations raise ChargeCoverError with
    a concrete witness.
    """
    if not 1 <= base <= coloring.n:
        raise ValueError("base vertex out of range")
    if not 1 <= color <= coloring.colors:
        raise ValueError("color out of range")
    if radius < 1:
        raise ValueError("radius must be >= 1")
    cls = sorted(coloring.class_of(color))
    n = coloring.n
    reached = {(base, 0)}
    frontier = {(base, 0)}
    for _ in range(radius):
        nxt = set()
        for x, t in frontier:
            for u in cls:
                for state in ((x + u, t + 1), (x - u, t - 1)):
                    if clip and not 1 <= state[0] <= n:
                        continue
                    if state not in reached:
                        reached.add(state)
                        nxt.add(state)
        frontier = nxt
    sets = {t: frozenset(x for x, tt in reached if tt == t and 1 <= x <= n)
            for t in range(-radius, radius + 1)}
    ball = frozenset(neighborhood_within(difference_coloring(coloring), base, color, radius))
    missing = ball.difference(*sets.values()) if sets else ball
    if missing:
        raise ChargeCoverError(
            f"charge sets around {base} miss ball vertices {sorted(missing)}")
    class_set = set(cls)
    for t in range(-radius, radius + 1):
        members = sorted(sets[t])
        for i, x in enumerate(members):
            for y in members[i + 1:]:
                if y - x in class_set:
                    raise ChargeCoverError(
                        f"charge {t} spans a color-{color} edge {{{x}, {y}}}")
    return ChargeCover(base, color, radius, sets, ball)
