"""Serre graphs, graphs of groups, fundamental-group presentations, and
the collapse-to-one-edge move.

A Serre graph carries oriented half-edges: every half-edge e has an
inverse ``inv(e) != e`` and an origin vertex; the terminus of e is the
origin of inv(e).  A graph of groups attaches a finite presentation to
each vertex, an abstract generator list to each edge pair, and for each
half-edge e a boundary map sending every edge generator to a word in the
generators of the origin vertex of e.

``fundamental_presentation`` realises the group of the whole diagram
relative to a maximal subtree: generators are all vertex generators
(disjointly renamed where names collide) plus one letter per half-edge;
relators are the vertex relators, one e*inv(e) relator per edge pair,
one killing relator per tree pair, and the conjugation relator
e^-1 * alpha_e(g) * e * alpha_inv(e)(g)^-1 for every half-edge e and
edge generator g.  A Tietze-simplified companion eliminates the inverse
letters (inv(e) = e^-1) and the tree letters.

Injectivity of the boundary maps is an *assumption*, not checked
(undecidable in general), as is infinite index of edge groups except in
the decidable case of a rank-1 free vertex group; see
``essential_check``.

File format: a JSON document with a ``vertices`` object (id ->
{generators, relators}) and an ``edges`` list ({id, from, to,
edge_generators, alpha, alpha_bar, index_meta}); loops are allowed.
The reverse half-edge of edge ``id`` is named ``id_bar``.  Schema
violations raise GogFileError with the JSON path of the offending field.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Mapping

from .errors import DomainError
from .words import (
    IDENT_RE,
    Presentation,
    Word,
    WordParseError,
    exponent_sums,
    format_word,
    parse_word,
    substitute,
)

BOUNDARY_INJECTIVITY_ASSUMPTION = (
    "boundary maps are assumed injective; injectivity is not checked"
)


class GogFileError(ValueError):
    """Schema violation in a graph-of-groups document; ``path`` locates
    the offending field (JSON path, or line/column for syntax errors)."""

    def __init__(self, message: str, path: str):
        super().__init__(f"{path}: {message}")
        self.path = path


class GogValidationError(ValueError):
    """Raised when an operation requires a structurally valid graph of
    groups; carries the violation list."""

    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = list(violations)


class SerreGraph:
    """Vertices plus involutive oriented half-edges."""

    def __init__(self, vertices: Iterable[str], inv: Mapping[str, str], origin: Mapping[str, str]):
        self.vertices = tuple(sorted(vertices))
        self.inv = dict(inv)
        self.origin = dict(origin)

    @classmethod
    def from_edges(
        cls, vertices: Iterable[str], edges: Iterable[tuple[str, str, str]]
    ) -> "SerreGraph":
        """Build from (edge id, origin, terminus) triples; the reverse
        half-edge of ``e`` is named ``e_bar``."""
        inv: dict[str, str] = {}
        origin: dict[str, str] = {}
        for eid, frm, to in edges:
            bar = eid + "_bar"
            inv[eid] = bar
            inv[bar] = eid
            origin[eid] = frm
            origin[bar] = to
        return cls(vertices, inv, origin)

    @property
    def half_edges(self) -> tuple[str, ...]:
        return tuple(sorted(self.inv))

    def terminus(self, e: str) -> str:
        return self.origin[self.inv[e]]

    def pair_key(self, e: str) -> str:
        """Canonical representative of the pair {e, inv(e)}."""
        return min(e, self.inv[e])

    def edge_pairs(self) -> tuple[str, ...]:
        return tuple(sorted({self.pair_key(e) for e in self.inv}))

    def incident(self, v: str) -> tuple[str, ...]:
        return tuple(sorted(e for e, o in self.origin.items() if o == v))

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        seen = {self.vertices[0]}
        queue = [self.vertices[0]]
        while queue:
            v = queue.pop(0)
            for e in self.incident(v):
                w = self.terminus(e)
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == len(self.vertices)


def spanning_tree(graph: SerreGraph) -> frozenset[str]:
    """Deterministic maximal subtree, as a set of edge-pair keys:
    breadth-first from the smallest vertex id, exploring half-edges in
    ascending id order."""
    if not graph.is_connected():
        raise DomainError("graph is not connected")
    root = graph.vertices[0]
    seen = {root}
    queue = [root]
    tree: set[str] = set()
    while queue:
        v = queue.pop(0)
        for e in graph.incident(v):
            w = graph.terminus(e)
            if w not in seen:
                seen.add(w)
                tree.add(graph.pair_key(e))
                queue.append(w)
    return frozenset(tree)


class GraphOfGroups:
    """A Serre graph with vertex presentations, edge generator lists
    (shared by the two half-edges of a pair), boundary words, and
    optional declared edge-group index metadata."""

    def __init__(
        self,
        graph: SerreGraph,
        vertex_groups: Mapping[str, Presentation],
        edge_generators: Mapping[str, tuple[str, ...]],
        boundary: Mapping[str, tuple[Word, ...]],
        index_meta: Mapping[str, object] | None = None,
    ):
        self.graph = graph
        self.vertex_groups = dict(vertex_groups)
        self.edge_generators = {k: tuple(v) for k, v in edge_generators.items()}
        self.boundary = {k: tuple(v) for k, v in boundary.items()}
        self.index_meta = dict(index_meta or {})


def validate(gog: GraphOfGroups) -> list[str]:
    """Structural invariant check; returns human-readable violations
    (empty iff the graph of groups is well formed).  Injectivity of the
    boundary maps is assumed, never checked."""
    out: list[str] = []
    g = gog.graph
    if not g.vertices:
        out.append("graph has no vertices")
    for v in g.vertices:
        if not IDENT_RE.fullmatch(v):
            out.append(f"vertex id {v!r} is not an identifier")
    structurally_ok = True
    for e, ebar in sorted(g.inv.items()):
        if not IDENT_RE.fullmatch(e):
            out.append(f"half-edge id {e!r} is not an identifier")
        if ebar == e:
            out.append(f"edge {e!r} equals its inverse")
            structurally_ok = False
            continue
        if g.inv.get(ebar) != e:
            out.append(f"inverse of {e!r} is not an involution")
            structurally_ok = False
        if e not in g.origin:
            out.append(f"half-edge {e!r} has no origin")
            structurally_ok = False
        elif g.origin[e] not in g.vertices:
            out.append(f"origin of {e!r} is not a declared vertex")
            structurally_ok = False
    if structurally_ok and g.vertices and not g.is_connected():
        out.append("graph is not connected")
    for v in g.vertices:
        if v not in gog.vertex_groups:
            out.append(f"vertex {v!r} has no group")
    if structurally_ok:
        pairs = set(g.edge_pairs())
        declared = set(gog.edge_generators)
        for missing in sorted(pairs - declared):
            out.append(f"edge pair {missing!r} has no edge generators entry")
        for extra in sorted(declared - pairs):
            out.append(f"edge generators declared for unknown pair {extra!r}")
        for e in g.half_edges:
            key = g.pair_key(e)
            if key not in gog.edge_generators or e not in g.origin:
                continue
            words = gog.boundary.get(e)
            if words is None:
                out.append(f"half-edge {e!r} has no boundary images")
                continue
            if len(words) != len(gog.edge_generators[key]):
                out.append(
                    f"half-edge {e!r} has {len(words)} boundary images for "
                    f"{len(gog.edge_generators[key])} edge generators"
                )
                continue
            pres = gog.vertex_groups.get(g.origin[e])
            if pres is None:
                continue
            for i, w in enumerate(words):
                for gen, _ in w.letters:
                    if not 0 <= gen < len(pres.generators):
                        out.append(
                            f"boundary image {i} of half-edge {e!r} uses a "
                            f"generator outside the origin vertex group"
                        )
                        break
    return out


def _require_valid(gog: GraphOfGroups) -> None:
    violations = validate(gog)
    if violations:
        raise GogValidationError(violations)


def _check_tree(gog: GraphOfGroups, tree: frozenset[str]) -> frozenset[str]:
    g = gog.graph
    pairs = set(g.edge_pairs())
    if not tree <= pairs:
        raise DomainError("tree contains unknown edge pairs")
    if len(tree) != len(g.vertices) - 1:
        raise DomainError("tree does not have |vertices| - 1 edge pairs")
    # Connected with |V| - 1 pairs is a spanning tree.
    seen = {g.vertices[0]}
    queue = [g.vertices[0]]
    while queue:
        v = queue.pop(0)
        for e in g.incident(v):
            if g.pair_key(e) in tree and g.terminus(e) not in seen:
                seen.add(g.terminus(e))
                queue.append(g.terminus(e))
    if len(seen) != len(g.vertices):
        raise DomainError("tree does not span the graph")
    return frozenset(tree)


def _assign_names(gog: GraphOfGroups) -> dict[str, tuple[str, ...]]:
    """Final generator names per vertex: original names kept when they
    are globally unambiguous, otherwise qualified with the vertex id."""
    g = gog.graph
    usage: dict[str, int] = {}
    for e in g.half_edges:
        usage[e] = usage.get(e, 0) + 1
    for v in g.vertices:
        for name in gog.vertex_groups[v].generators:
            usage[name] = usage.get(name, 0) + 1
    assigned = set(g.half_edges)
    names: dict[str, tuple[str, ...]] = {}
    for v in g.vertices:
        final = []
        for name in gog.vertex_groups[v].generators:
            candidate = name if usage[name] == 1 else f"{v}_{name}"
            suffix = 2
            while candidate in assigned:
                candidate = f"{v}_{name}_{suffix}"
                suffix += 1
            assigned.add(candidate)
            final.append(candidate)
        names[v] = tuple(final)
    return names


def _remap(w: Word, index_of_local: list[int]) -> Word:
    return Word((index_of_local[gen], exp) for gen, exp in w.letters)


def _cyclic_key(w: Word) -> tuple:
    atoms: list[tuple[int, int]] = []
    for gen, exp in w.letters:
        atoms.extend([(gen, 1 if exp > 0 else -1)] * abs(exp))
    if not atoms:
        return ()
    candidates = []
    inverse = [(g, -s) for g, s in reversed(atoms)]
    for seq in (atoms, inverse):
        for shift in range(len(seq)):
            candidates.append(tuple(seq[shift:] + seq[:shift]))
    return min(candidates)


@dataclass(frozen=True)
class PiOnePresentation:
    """Raw and Tietze-simplified presentations of the fundamental group
    relative to a maximal subtree, plus the renaming data needed to map
    vertex generators into either presentation."""

    raw: Presentation
    simplified: Presentation
    tree: frozenset[str]
    vertex_gen_names: Mapping[str, tuple[str, ...]]
    edge_letters: tuple[str, ...]


def fundamental_presentation(
    gog: GraphOfGroups, tree: frozenset[str] | None = None
) -> PiOnePresentation:
    """Present the fundamental group of the graph of groups.

    The raw presentation follows the defining formula letter by letter;
    the simplified one substitutes inv(e) = e^-1, kills tree letters,
    freely reduces, and drops empty and repeated (up to rotation and
    inversion) relators.
    """
    _require_valid(gog)
    g = gog.graph
    tree = spanning_tree(g) if tree is None else _check_tree(gog, tree)
    names = _assign_names(gog)

    raw_gens: list[str] = []
    local_index: dict[str, list[int]] = {}
    for v in g.vertices:
        local_index[v] = []
        for final in names[v]:
            local_index[v].append(len(raw_gens))
            raw_gens.append(final)
    edge_index: dict[str, int] = {}
    for e in g.half_edges:
        edge_index[e] = len(raw_gens)
        raw_gens.append(e)

    relators: list[Word] = []
    for v in g.vertices:
        for rel in gog.vertex_groups[v].relators:
            relators.append(_remap(rel, local_index[v]))
    pairs = g.edge_pairs()
    for pair in pairs:
        relators.append(Word([(edge_index[pair], 1), (edge_index[g.inv[pair]], 1)]))
    for pair in pairs:
        if pair in tree:
            relators.append(Word([(edge_index[pair], 1)]))
    for e in g.half_edges:
        key = g.pair_key(e)
        for i in range(len(gog.edge_generators[key])):
            alpha = _remap(gog.boundary[e][i], local_index[g.origin[e]])
            alpha_bar = _remap(gog.boundary[g.inv[e]][i], local_index[g.origin[g.inv[e]]])
            relators.append(
                Word([(edge_index[e], -1)]) * alpha * Word([(edge_index[e], 1)]) * ~alpha_bar
            )
    raw = Presentation(tuple(raw_gens), tuple(relators))

    # Tietze cleanup: inv(e) -> e^-1, tree letters -> 1.
    images: list[Word] = [Word([(i, 1)]) for i in range(len(raw_gens))]
    for pair in pairs:
        bar = g.inv[pair]
        if pair in tree:
            images[edge_index[pair]] = Word()
            images[edge_index[bar]] = Word()
        else:
            images[edge_index[bar]] = Word([(edge_index[pair], -1)])
    kept = [
        i
        for i, name in enumerate(raw_gens)
        if name not in g.inv  # vertex generator
        or (g.pair_key(name) == name and name not in tree)
    ]
    new_of_old = {old: new for new, old in enumerate(kept)}
    simp_gens = tuple(raw_gens[i] for i in kept)
    simp_relators: list[Word] = []
    seen_keys: set[tuple] = set()
    for rel in relators:
        image = substitute(rel, images)
        if not image:
            continue
        renumbered = Word((new_of_old[gen], exp) for gen, exp in image.letters)
        key = _cyclic_key(renumbered)
        if key in seen_keys:
            continue
        seen_keys.add(key)
        simp_relators.append(renumbered)
    simplified = Presentation(simp_gens, tuple(simp_relators))

    return PiOnePresentation(
        raw=raw,
        simplified=simplified,
        tree=tree,
        vertex_gen_names=names,
        edge_letters=tuple(g.half_edges),
    )


@dataclass(frozen=True)
class CollapsedSplitting:
    """Result of collapsing every edge but one: a one-edge graph of
    groups, an amalgam when the kept edge joins two collapsed components
    and an HNN extension when it joins one component to itself."""

    kind: str  # "amalgam" or "hnn"
    kept_edge: str
    gog: GraphOfGroups

    @property
    def vertex_presentations(self) -> dict[str, Presentation]:
        return dict(self.gog.vertex_groups)


def collapse_all_but_one(gog: GraphOfGroups, keep: str) -> CollapsedSplitting:
    """Collapse each connected component of the graph minus the kept edge
    pair to a single vertex carrying the component's fundamental group,
    keeping the edge pair and rewriting its boundary words."""
    _require_valid(gog)
    g = gog.graph
    if keep in g.inv:
        keep = g.pair_key(keep)
    if keep not in g.edge_pairs():
        raise DomainError(f"{keep!r} is not an edge pair of the graph")
    keep_bar = g.inv[keep]

    remaining = [p for p in g.edge_pairs() if p != keep]
    component: dict[str, str] = {}
    for v in g.vertices:
        if v in component:
            continue
        members = {v}
        queue = [v]
        while queue:
            u = queue.pop(0)
            for e in g.incident(u):
                if g.pair_key(e) == keep:
                    continue
                w = g.terminus(e)
                if w not in members:
                    members.add(w)
                    queue.append(w)
        root = min(members)
        for u in members:
            component[u] = root

    def collapse_component(root: str) -> tuple[Presentation, Mapping[str, tuple[str, ...]]]:
        vertices = sorted(v for v, r in component.items() if r == root)
        half_edges = {
            e
            for e in g.inv
            if g.origin[e] in vertices and g.pair_key(e) != keep
        }
        sub_graph = SerreGraph(
            vertices,
            {e: g.inv[e] for e in half_edges},
            {e: g.origin[e] for e in half_edges},
        )
        sub = GraphOfGroups(
            sub_graph,
            {v: gog.vertex_groups[v] for v in vertices},
            {
                p: gog.edge_generators[p]
                for p in {g.pair_key(e) for e in half_edges}
            },
            {e: gog.boundary[e] for e in half_edges},
        )
        pi1 = fundamental_presentation(sub)
        return pi1.simplified, pi1.vertex_gen_names

    root_a = component[g.origin[keep]]
    root_b = component[g.origin[keep_bar]]
    kind = "amalgam" if root_a != root_b else "hnn"

    presentations: dict[str, Presentation] = {}
    gen_names: dict[str, Mapping[str, tuple[str, ...]]] = {}
    for root in sorted({root_a, root_b}):
        pres, names = collapse_component(root)
        presentations[root] = pres
        gen_names[root] = names

    def rewrite(e: str) -> tuple[Word, ...]:
        v = g.origin[e]
        root = component[v]
        pres = presentations[root]
        names = gen_names[root][v]
        position = {name: i for i, name in enumerate(pres.generators)}
        local_to_new = [position[name] for name in names]
        return tuple(_remap(w, local_to_new) for w in gog.boundary[e])

    new_graph = SerreGraph(
        sorted({root_a, root_b}),
        {keep: keep_bar, keep_bar: keep},
        {keep: root_a, keep_bar: root_b},
    )
    new_gog = GraphOfGroups(
        new_graph,
        presentations,
        {keep: gog.edge_generators[keep]},
        {keep: rewrite(keep), keep_bar: rewrite(keep_bar)},
        {
            e: gog.index_meta[e]
            for e in (keep, keep_bar)
            if e in gog.index_meta
        },
    )
    return CollapsedSplitting(kind=kind, kept_edge=keep, gog=new_gog)


@dataclass(frozen=True)
class EdgeEndVerdict:
    half_edge: str
    kind: str  # "finite", "infinite", or "unknown"
    index: int | None
    source: str  # "computed" or "declared"


@dataclass(frozen=True)
class EssentialReport:
    """Per-half-edge index verdicts; the splitting counts as essential
    only when every edge end has infinite index (computed or declared)."""

    entries: tuple[EdgeEndVerdict, ...]
    essential: bool


def _parse_meta(value: object) -> tuple[str, int | None]:
    if value == "infinite":
        return "infinite", None
    if value == "unknown" or value is None:
        return "unknown", None
    if isinstance(value, int) and not isinstance(value, bool) and value >= 1:
        return "finite", value
    raise ValueError(f"invalid index declaration {value!r}")


def essential_check(
    gog: GraphOfGroups, meta: Mapping[str, object] | None = None
) -> EssentialReport:
    """Decide the index of each boundary image where possible.

    When the origin vertex group is free of rank 1 (one generator, no
    relators) the image subgroup of Z is generated by the gcd of the
    boundary exponent sums, so its index is computed exactly; for every
    other vertex group the declared metadata is echoed.
    """
    _require_valid(gog)
    g = gog.graph
    declared = dict(gog.index_meta)
    if meta is not None:
        declared.update(meta)
    entries = []
    for e in g.half_edges:
        pres = gog.vertex_groups[g.origin[e]]
        if len(pres.generators) == 1 and not pres.relators:
            sums = [exponent_sums(w, 1)[0] for w in gog.boundary[e]]
            d = 0
            for s in sums:
                d = gcd(d, s)
            if d == 0:
                entries.append(EdgeEndVerdict(e, "infinite", None, "computed"))
            else:
                entries.append(EdgeEndVerdict(e, "finite", d, "computed"))
        else:
            kind, index = _parse_meta(declared.get(e))
            entries.append(EdgeEndVerdict(e, kind, index, "declared"))
    essential = all(v.kind == "infinite" for v in entries)
    return EssentialReport(entries=tuple(entries), essential=essential)


# ---------------------------------------------------------------------------
# File format


def _expect(condition: bool, message: str, path: str) -> None:
    if not condition:
        raise GogFileError(message, path)


_META_KEYS = ("alpha", "alpha_bar")


def loads(text: str) -> GraphOfGroups:
    """Parse a graph-of-groups JSON document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise GogFileError(
            f"invalid JSON: {err.msg}", f"line {err.lineno}, column {err.colno}"
        ) from None
    _expect(isinstance(doc, dict), "document must be an object", "$")
    _expect("vertices" in doc, "missing 'vertices'", "$")
    _expect("edges" in doc, "missing 'edges'", "$")
    _expect(isinstance(doc["vertices"], dict), "'vertices' must be an object", "vertices")
    _expect(isinstance(doc["edges"], list), "'edges' must be a list", "edges")

    vertex_groups: dict[str, Presentation] = {}
    for vid, body in doc["vertices"].items():
        path = f"vertices.{vid}"
        _expect(bool(IDENT_RE.fullmatch(vid)), "vertex id is not an identifier", path)
        _expect(isinstance(body, dict), "vertex body must be an object", path)
        gens = body.get("generators", [])
        rels = body.get("relators", [])
        _expect(
            isinstance(gens, list) and all(isinstance(s, str) for s in gens),
            "'generators' must be a list of strings",
            f"{path}.generators",
        )
        _expect(
            isinstance(rels, list) and all(isinstance(s, str) for s in rels),
            "'relators' must be a list of strings",
            f"{path}.relators",
        )
        relators = []
        for i, rel in enumerate(rels):
            try:
                relators.append(parse_word(rel, gens))
            except WordParseError as err:
                raise GogFileError(str(err), f"{path}.relators[{i}]") from None
        try:
            vertex_groups[vid] = Presentation(tuple(gens), tuple(relators))
        except ValueError as err:
            raise GogFileError(str(err), f"{path}.generators") from None

    edge_triples: list[tuple[str, str, str]] = []
    edge_generators: dict[str, tuple[str, ...]] = {}
    boundary: dict[str, tuple[Word, ...]] = {}
    index_meta: dict[str, object] = {}
    seen_ids: set[str] = set()
    for idx, entry in enumerate(doc["edges"]):
        path = f"edges[{idx}]"
        _expect(isinstance(entry, dict), "edge entry must be an object", path)
        for field_name in ("id", "from", "to"):
            _expect(field_name in entry, f"missing '{field_name}'", path)
            _expect(
                isinstance(entry[field_name], str),
                f"'{field_name}' must be a string",
                f"{path}.{field_name}",
            )
        eid = entry["id"]
        _expect(bool(IDENT_RE.fullmatch(eid)), "edge id is not an identifier", f"{path}.id")
        bar = eid + "_bar"
        _expect(eid not in seen_ids and bar not in seen_ids, "duplicate edge id", f"{path}.id")
        seen_ids.update({eid, bar})
        for field_name in ("from", "to"):
            _expect(
                entry[field_name] in vertex_groups,
                f"unknown vertex {entry[field_name]!r}",
                f"{path}.{field_name}",
            )
        gens = entry.get("edge_generators", [])
        _expect(
            isinstance(gens, list) and all(isinstance(s, str) for s in gens),
            "'edge_generators' must be a list of strings",
            f"{path}.edge_generators",
        )
        words: dict[str, list[Word]] = {}
        for side, vertex_field in (("alpha", "from"), ("alpha_bar", "to")):
            texts = entry.get(side, [])
            _expect(
                isinstance(texts, list) and all(isinstance(s, str) for s in texts),
                f"'{side}' must be a list of strings",
                f"{path}.{side}",
            )
            _expect(
                len(texts) == len(gens),
                f"'{side}' must list one image per edge generator",
                f"{path}.{side}",
            )
            alphabet = vertex_groups[entry[vertex_field]].generators
            parsed = []
            for i, txt in enumerate(texts):
                try:
                    parsed.append(parse_word(txt, alphabet))
                except WordParseError as err:
                    raise GogFileError(str(err), f"{path}.{side}[{i}]") from None
            words[side] = parsed
        meta = entry.get("index_meta", {})
        _expect(isinstance(meta, dict), "'index_meta' must be an object", f"{path}.index_meta")
        for key, value in meta.items():
            _expect(key in _META_KEYS, f"unknown index_meta key {key!r}", f"{path}.index_meta")
            try:
                _parse_meta(value)
            except ValueError as err:
                raise GogFileError(str(err), f"{path}.index_meta.{key}") from None
            index_meta[eid if key == "alpha" else bar] = value
        edge_triples.append((eid, entry["from"], entry["to"]))
        edge_generators[min(eid, bar)] = tuple(gens)
        boundary[eid] = tuple(words["alpha"])
        boundary[bar] = tuple(words["alpha_bar"])

    graph = SerreGraph.from_edges(list(doc["vertices"]), edge_triples)
    return GraphOfGroups(graph, vertex_groups, edge_generators, boundary, index_meta)


def load(path: str) -> GraphOfGroups:
    with open(path, "r", encoding="utf-8") as handle:
        return loads(handle.read())


def dumps(gog: GraphOfGroups) -> str:
    """Serialise back to the JSON document form (deterministic bytes)."""
    g = gog.graph
    vertices = {}
    for v in g.vertices:
        pres = gog.vertex_groups[v]
        vertices[v] = {
            "generators": list(pres.generators),
            "relators": [format_word(r, pres.generators) for r in pres.relators],
        }
    edges = []
    for pair in g.edge_pairs():
        bar = g.inv[pair]
        frm, to = g.origin[pair], g.origin[bar]
        entry: dict[str, object] = {
            "id": pair,
            "from": frm,
            "to": to,
            "edge_generators": list(gog.edge_generators[pair]),
            "alpha": [
                format_word(w, gog.vertex_groups[frm].generators)
                for w in gog.boundary[pair]
            ],
            "alpha_bar": [
                format_word(w, gog.vertex_groups[to].generators)
                for w in gog.boundary[bar]
            ],
        }
        meta = {}
        if pair in gog.index_meta:
            meta["alpha"] = gog.index_meta[pair]
        if bar in gog.index_meta:
            meta["alpha_bar"] = gog.index_meta[bar]
        if meta:
            entry["index_meta"] = meta
        edges.append(entry)
    return json.dumps({"vertices": vertices, "edges": edges}, indent=2, sort_keys=True) + "\n"


def dump(gog: GraphOfGroups, path: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(dumps(gog))
