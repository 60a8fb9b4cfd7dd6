"""Build the orbit cyclic graph of a group under an automorphism action,
plus connectivity / diameter / universal / isolated analysis and exports.

Vertices are the action's orbits on nonidentity elements; two distinct
orbits are adjacent when some pair of representatives generates a cyclic
subgroup.  The action with one orbit per element gives the enhanced power
graph; the inner action gives the cyclic conjugacy class graph.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from xml.sax.saxutils import escape

from .actions import AutAction, element_orbits, inner_generators, trivial_action
from .perm import FiniteGroup


@dataclass(frozen=True)
class Vertex:
    vid: int
    rep: int
    order: int
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)


class DeltaGraph:
    """Simple graph on orbit vertices with a fixed deterministic order."""

    def __init__(
        self,
        group: FiniteGroup,
        action_kind: str,
        vertices: tuple[Vertex, ...],
        adj: tuple[frozenset[int], ...],
        vertex_of_element: tuple[int, ...],
    ) -> None:
        self.group = group
        self.action_kind = action_kind
        self.vertices = vertices
        self.adj = adj
        self._vertex_of = vertex_of_element

    @property
    def n(self) -> int:
        return len(self.vertices)

    def adjacent(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def edges(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    def edge_count(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def vertex_of_element(self, i: int) -> int:
        """Vertex id containing element index ``i`` (identity has none)."""
        vid = self._vertex_of[i]
        if vid < 0:
            raise ValueError("the identity is not a vertex")
        return vid

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DeltaGraph):
            return NotImplemented
        return (
            [(v.rep, v.order, v.members) for v in self.vertices]
            == [(v.rep, v.order, v.members) for v in other.vertices]
            and self.adj == other.adj
        )

    def __repr__(self) -> str:
        return (
            f"DeltaGraph({self.group.name}, {self.action_kind}, "
            f"{self.n} vertices, {self.edge_count()} edges)"
        )


@dataclass(frozen=True)
class AnalysisReport:
    components: tuple[tuple[int, ...], ...]
    diameters: tuple[int, ...]
    universal: tuple[int, ...]
    isolated: tuple[int, ...]
    is_complete: bool
    is_empty: bool
    clique_components: tuple[bool, ...]

    def as_dict(self) -> dict:
        return {
            "components": [list(c) for c in self.components],
            "diameters": list(self.diameters),
            "universal_vertices": list(self.universal),
            "isolated_vertices": list(self.isolated),
            "is_complete": self.is_complete,
            "is_empty": self.is_empty,
            "clique_components": list(self.clique_components),
        }


def build_delta(group: FiniteGroup, action: AutAction) -> DeltaGraph:
    """Construct the orbit cyclic graph for (G, A).

    The edge test fixes the representative of one orbit and scans only the
    other orbit: automorphisms preserve cyclicity of generated subgroups,
    so adjacency never depends on which member represents an orbit.
    """
    if action._delta is not None:
        return action._delta
    part = element_orbits(group, action)
    order_key = sorted(
        range(part.count),
        key=lambda oid: (group.element_order(part.representatives[oid]), part.representatives[oid]),
    )
    vertices = tuple(
        Vertex(
            vid=vid,
            rep=part.representatives[oid],
            order=group.element_order(part.representatives[oid]),
            members=part.members[oid],
        )
        for vid, oid in enumerate(order_key)
    )
    vertex_of = [-1] * group.order
    for v in vertices:
        for e in v.members:
            vertex_of[e] = v.vid

    n = len(vertices)
    adj: list[set[int]] = [set() for _ in range(n)]
    for u in range(n):
        rep = vertices[u].rep
        for v in range(u + 1, n):
            if any(group.is_cyclic_pair(rep, y) for y in vertices[v].members):
                adj[u].add(v)
                adj[v].add(u)
    graph = DeltaGraph(
        group=group,
        action_kind=action.kind,
        vertices=vertices,
        adj=tuple(frozenset(s) for s in adj),
        vertex_of_element=tuple(vertex_of),
    )
    action._delta = graph
    return graph


def build_enhanced_power(group: FiniteGroup) -> DeltaGraph:
    """The graph under the trivial action: one vertex per element."""
    cached = getattr(group, "_enhanced_graph", None)
    if cached is None:
        cached = build_delta(group, trivial_action(group))
        group._enhanced_graph = cached
    return cached


def build_ccc_cyclic(group: FiniteGroup) -> DeltaGraph:
    """The graph under the inner action: one vertex per conjugacy class."""
    return build_delta(group, inner_generators(group))


def quotient_of_enhanced(group: FiniteGroup, action: AutAction) -> DeltaGraph:
    """Independent oracle: quotient the enhanced power graph by A-orbits.

    Two merged vertices are adjacent iff any cross pair was adjacent in the
    element-level graph.  Must equal build_delta(G, A).
    """
    enhanced = build_enhanced_power(group)
    part = element_orbits(group, action)
    order_key = sorted(
        range(part.count),
        key=lambda oid: (group.element_order(part.representatives[oid]), part.representatives[oid]),
    )
    vertices = tuple(
        Vertex(
            vid=vid,
            rep=part.representatives[oid],
            order=group.element_order(part.representatives[oid]),
            members=part.members[oid],
        )
        for vid, oid in enumerate(order_key)
    )
    vertex_of = [-1] * group.order
    for v in vertices:
        for e in v.members:
            vertex_of[e] = v.vid

    n = len(vertices)
    adj: list[set[int]] = [set() for _ in range(n)]
    for eu, ev in enhanced.edges():
        x = enhanced.vertices[eu].rep
        y = enhanced.vertices[ev].rep
        u, v = vertex_of[x], vertex_of[y]
        if u != v:
            adj[u].add(v)
            adj[v].add(u)
    return DeltaGraph(
        group=group,
        action_kind=action.kind,
        vertices=vertices,
        adj=tuple(frozenset(s) for s in adj),
        vertex_of_element=tuple(vertex_of),
    )


def _bfs_distances(graph: DeltaGraph, start: int) -> list[int]:
    dist = [-1] * graph.n
    dist[start] = 0
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in graph.adj[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def distance(graph: DeltaGraph, u: int, v: int) -> int | None:
    """Shortest hop count, or None across components."""
    if not 0 <= u < graph.n or not 0 <= v < graph.n:
        raise ValueError("vertex id out of range")
    if u == v:
        return 0
    d = _bfs_distances(graph, u)[v]
    return None if d < 0 else d


def analyze(graph: DeltaGraph) -> AnalysisReport:
    """Components, per-component diameters, universal/isolated vertices.

    The empty graph on zero vertices reports both is_empty and is_complete
    (vacuous); a single isolated vertex likewise carries both flags.
    """
    n = graph.n
    comp_of = [-1] * n
    components: list[list[int]] = []
    for s in range(n):
        if comp_of[s] != -1:
            continue
        cid = len(components)
        comp = []
        queue = deque([s])
        comp_of[s] = cid
        while queue:
            u = queue.popleft()
            comp.append(u)
            for v in graph.adj[u]:
                if comp_of[v] == -1:
                    comp_of[v] = cid
                    queue.append(v)
        components.append(sorted(comp))

    diameters = []
    cliques = []
    for comp in components:
        ecc = 0
        for u in comp:
            dist = _bfs_distances(graph, u)
            ecc = max(ecc, max(dist[v] for v in comp))
        diameters.append(ecc)
        cliques.append(ecc <= 1)

    universal = tuple(u for u in range(n) if graph.degree(u) == n - 1)
    isolated = tuple(u for u in range(n) if graph.degree(u) == 0)
    is_empty = graph.edge_count() == 0
    is_complete = n == 0 or (len(components) == 1 and diameters[0] <= 1)
    return AnalysisReport(
        components=tuple(tuple(c) for c in components),
        diameters=tuple(diameters),
        universal=universal,
        isolated=isolated,
        is_complete=is_complete,
        is_empty=is_empty,
        clique_components=tuple(cliques),
    )


# -- exports -----------------------------------------------------------------


def _vertex_label(graph: DeltaGraph, v: Vertex) -> str:
    return f"{graph.group.word_name(v.rep)} (ord {v.order}, size {v.size})"


def graph_to_json(graph: DeltaGraph, report: AnalysisReport | None = None) -> dict:
    obj = {
        "group": graph.group.name,
        "action": graph.action_kind,
        "vertices": [
            {
                "id": v.vid,
                "rep": v.rep,
                "word": graph.group.word_name(v.rep),
                "order": v.order,
                "size": v.size,
                "members": list(v.members),
            }
            for v in graph.vertices
        ],
        "edges": [list(e) for e in graph.edges()],
    }
    if report is not None:
        obj["analysis"] = report.as_dict()
    return obj


def to_dot(graph: DeltaGraph) -> str:
    lines = [f'graph "{graph.group.name}_{graph.action_kind}" {{']
    for v in graph.vertices:
        lines.append(f'  v{v.vid} [label="{_vertex_label(graph, v)}"];')
    for u, v in graph.edges():
        lines.append(f"  v{u} -- v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_graphml(graph: DeltaGraph) -> str:
    head = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        '<graphml xmlns="http://graphml.graphdrawing.org/xmlns">\n'
        '  <key id="label" for="node" attr.name="label" attr.type="string"/>\n'
        '  <key id="order" for="node" attr.name="element_order" attr.type="int"/>\n'
        '  <key id="size" for="node" attr.name="orbit_size" attr.type="int"/>\n'
        f'  <graph id="{escape(graph.group.name)}_{graph.action_kind}" edgedefault="undirected">\n'
    )
    body = []
    for v in graph.vertices:
        body.append(
            f'    <node id="v{v.vid}">'
            f'<data key="label">{escape(_vertex_label(graph, v))}</data>'
            f'<data key="order">{v.order}</data>'
            f'<data key="size">{v.size}</data></node>'
        )
    for k, (u, v) in enumerate(graph.edges()):
        body.append(f'    <edge id="e{k}" source="v{u}" target="v{v}"/>')
    return head + "\n".join(body) + "\n  </graph>\n</graphml>\n"


def render(graph: DeltaGraph, fmt: str, report: AnalysisReport | None = None) -> str:
    if fmt == "json":
        return json.dumps(graph_to_json(graph, report), indent=2, sort_keys=True) + "\n"
    if fmt == "dot":
        return to_dot(graph)
    if fmt == "graphml":
        return to_graphml(graph)
    raise ValueError(f"unknown format {fmt!r}")
