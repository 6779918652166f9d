"""Graph-of-groups data model, structural validation, collapse moves.

Oriented edges are written "e" (stored orientation) and "~e" (reverse).
For the oriented edge e the monomorphism alpha_e lands in the group of
o(e); the pair (alpha_e, alpha_~e) shares one edge group.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import groups
from .groups import GroupError, transversal


class GraphError(ValueError):
    pass


def bar(oedge):
    return oedge[1:] if oedge.startswith("~") else "~" + oedge


def edge_id(oedge):
    return oedge[1:] if oedge.startswith("~") else oedge


def is_forward(oedge):
    return not oedge.startswith("~")


@dataclass(frozen=True)
class EdgeRec:
    origin: str
    terminus: str
    group: object
    fwd: object  # mono into the origin group
    rev: object  # mono into the terminus group


@dataclass(frozen=True)
class EdgeFlags:
    is_loop: bool
    index_fwd: object  # int or None for infinite
    index_rev: object
    is_ascending_loop: bool
    is_non_degenerate: bool
    is_collapsible: bool


@dataclass(frozen=True)
class Classification:
    edge_flags: dict
    locally_finite: bool
    non_singular: bool
    reduced: bool
    is_line: bool


class GraphOfGroups:
    """Immutable after construction; all structural checks run eagerly."""

    def __init__(self, vertices, edges):
        self.vertices = dict(vertices)
        self.edges = dict(edges)
        if not self.vertices:
            raise GraphError("graph needs at least one vertex")
        for v, desc in self.vertices.items():
            groups.check_desc(desc)
        for eid, rec in self.edges.items():
            if eid.startswith("~"):
                raise GraphError("edge ids must not start with '~': %r" % eid)
            if rec.origin not in self.vertices or rec.terminus not in self.vertices:
                raise GraphError("edge %s references unknown vertex" % eid)
            for mono, end in ((rec.fwd, rec.origin), (rec.rev, rec.terminus)):
                try:
                    groups.validate_mono(mono)
                except GroupError as exc:
                    raise GraphError("edge %s: %s" % (eid, exc)) from exc
                if mono.domain != rec.group:
                    raise GraphError("edge %s: mono domain %s is not the edge group %s"
                                     % (eid, mono.domain, rec.group))
                if mono.codomain != self.vertices[end]:
                    raise GraphError("edge %s: mono lands in %s, vertex group is %s"
                                     % (eid, mono.codomain, self.vertices[end]))
        self._check_connected()
        self.base = next(iter(self.vertices))
        self._transversals = {}

    def _check_connected(self):
        seen = {next(iter(self.vertices))}
        frontier = list(seen)
        adj = {}
        for rec in self.edges.values():
            adj.setdefault(rec.origin, set()).add(rec.terminus)
            adj.setdefault(rec.terminus, set()).add(rec.origin)
        while frontier:
            v = frontier.pop()
            for w in adj.get(v, ()):
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
        missing = set(self.vertices) - seen
        if missing:
            raise GraphError("graph is not connected; unreachable: %s"
                             % ", ".join(sorted(missing)))

    # -- oriented edge helpers ------------------------------------------------

    def oriented_edges(self):
        for eid in self.edges:
            yield eid
            yield "~" + eid

    def origin(self, oedge):
        rec = self.edges[edge_id(oedge)]
        return rec.origin if is_forward(oedge) else rec.terminus

    def terminus(self, oedge):
        rec = self.edges[edge_id(oedge)]
        return rec.terminus if is_forward(oedge) else rec.origin

    def mono(self, oedge):
        """alpha_oedge, landing in the origin group of oedge."""
        rec = self.edges[edge_id(oedge)]
        return rec.fwd if is_forward(oedge) else rec.rev

    def edge_group(self, oedge):
        return self.edges[edge_id(oedge)].group

    def vertex_group(self, v):
        return self.vertices[v]

    def transversal(self, oedge):
        if oedge not in self._transversals:
            self._transversals[oedge] = transversal(self.mono(oedge))
        return self._transversals[oedge]

    def index(self, oedge):
        """[G_o(e) : alpha_e(G_e)], None when infinite."""
        return groups.mono_index(self.mono(oedge))

    def edges_at(self, v):
        """Oriented edges with origin v, in deterministic order."""
        out = []
        for eid in self.edges:
            if self.edges[eid].origin == v:
                out.append(eid)
            if self.edges[eid].terminus == v:
                out.append("~" + eid)
        return out

    def valence(self, v):
        return len(self.edges_at(v))

    # -- classification --------------------------------------------------------

    def edge_flags(self, eid):
        rec = self.edges[eid]
        loop = rec.origin == rec.terminus
        ifwd = self.index(eid)
        irev = self.index("~" + eid)
        ascending = loop and (ifwd == 1 or irev == 1)
        nondeg = (not loop) and (ifwd is None or ifwd >= 3) and (irev is None or irev >= 2)
        collapsible = (not loop) and irev == 1
        return EdgeFlags(loop, ifwd, irev, ascending, nondeg, collapsible)

    def classify(self):
        flags = {eid: self.edge_flags(eid) for eid in self.edges}
        locally_finite = all(f.index_fwd is not None and f.index_rev is not None
                             for f in flags.values())
        non_singular = True
        for oe in self.oriented_edges():
            if self.valence(self.origin(oe)) == 1 and self.index(oe) == 1:
                non_singular = False
        reduced = not any(f.is_collapsible or ((not f.is_loop) and f.index_fwd == 1)
                          for f in flags.values())
        if reduced:
            red = self
        else:
            red, _ = collapse_reduce(self)
        is_line = _is_line_shape(red)
        return Classification(flags, locally_finite, non_singular, reduced, is_line)


def _is_line_shape(g):
    """The two reduced shapes whose Bass-Serre tree is a line: a single
    edge with both indices 2, or a single loop with both monos surjective."""
    if len(g.edges) != 1:
        return False
    eid = next(iter(g.edges))
    rec = g.edges[eid]
    ifwd, irev = g.index(eid), g.index("~" + eid)
    if rec.origin == rec.terminus:
        return ifwd == 1 and irev == 1
    return ifwd == 2 and irev == 2


def validate_and_classify(g: GraphOfGroups) -> Classification:
    return g.classify()


@dataclass(frozen=True)
class CollapseMove:
    oedge: str       # the collapsed oriented edge; its reverse mono was surjective
    survivor: str    # o(oedge)
    removed: str     # t(oedge)


def collapse_edge(g: GraphOfGroups, oedge):
    """One collapse move: t(oedge) is absorbed into o(oedge).

    Requires alpha_{bar(oedge)} surjective.  Monos into the removed vertex
    group are rerouted through alpha_oedge o alpha_{bar(oedge)}^-1.
    """
    survivor = g.origin(oedge)
    removed = g.terminus(oedge)
    if survivor == removed:
        raise GraphError("cannot collapse a loop")
    if g.index(bar(oedge)) != 1:
        raise GraphError("edge %s is not collapsible" % oedge)
    outer = g.mono(oedge)
    surj = g.mono(bar(oedge))
    dead_id = edge_id(oedge)

    def reroute(mono):
        return groups.compose_monos(outer, surj, mono)

    vertices = {v: desc for v, desc in g.vertices.items() if v != removed}
    edges = {}
    for eid, rec in g.edges.items():
        if eid == dead_id:
            continue
        origin, terminus, fwd, rev = rec.origin, rec.terminus, rec.fwd, rec.rev
        if origin == removed:
            origin, fwd = survivor, reroute(fwd)
        if terminus == removed:
            terminus, rev = survivor, reroute(rev)
        edges[eid] = EdgeRec(origin, terminus, rec.group, fwd, rev)
    return GraphOfGroups(vertices, edges), CollapseMove(oedge, survivor, removed)


def collapse_reduce(g: GraphOfGroups):
    """Collapse until no collapsible edge remains; smallest edge id first."""
    log = []
    while True:
        candidates = []
        for eid in sorted(g.edges):
            rec = g.edges[eid]
            if rec.origin == rec.terminus:
                continue
            if g.index("~" + eid) == 1:
                candidates.append(eid)
            elif g.index(eid) == 1:
                candidates.append("~" + eid)
        if not candidates:
            return g, log
        g, move = collapse_edge(g, candidates[0])
        log.append(move)


def gbs_labeling(g: GraphOfGroups):
    """lambda(e) for GBS graphs (all groups Z, all monos scalar)."""
    lam = {}
    for v, desc in g.vertices.items():
        if desc != groups.FreeAbelian(1):
            raise GraphError("not a GBS graph: vertex %s has group %s" % (v, desc))
    for oe in g.oriented_edges():
        mono = g.mono(oe)
        if isinstance(mono, groups.ScalarMono):
            lam[oe] = mono.factor
        elif (isinstance(mono, groups.ImagesMono)
              and mono.domain == groups.FreeAbelian(1)
              and mono.codomain == groups.FreeAbelian(1)):
            lam[oe] = mono.images[0][0]
        else:
            raise GraphError("not a GBS graph: edge %s has mono %s" % (oe, mono))
    return lam
