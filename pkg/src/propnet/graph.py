"""Hierarchical proposition graphs: construction, merging, export.

Four node families: evolutionary nodes are the fixed schema (#action,
#subject, ...); developmental nodes carry lemmas (prefix "_"); instance
nodes bind a schema slot to exactly one developmental node; stamp nodes
group the instances belonging to one action or one described entity so the
sub-networks of a merged multi-proposition graph stay distinguishable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .parsing import DimensionFrame, NounSlot, SLOT_NAMES, parse_dimensions
from .splitting import (
    Proposition,
    RelativeSubtype,
    SplitResult,
    SplitStep,
    SplitTree,
    TimeRelation,
)
from .tokens import VERB_TAGS

EVOLUTIONARY_NAMES = (
    "#action",
    "#subject",
    "#object",
    "#where",
    "#aux_obj",
    "#goal",
    "#source",
    "#reason",
    "#attr",
    "#part_of",
    "#time_before",
    "#time_same",
)

EVOLUTIONARY = "evolutionary"
DEVELOPMENTAL = "developmental"
INSTANCE = "instance"
STAMP = "stamp"

ENTITY = "entity"
CONCEPT = "concept"
ACTION = "action"

UNKNOWN_LEMMA = "unknown"

DOT_COLORS = {
    EVOLUTIONARY: "red",
    DEVELOPMENTAL: "orange",
    INSTANCE: "green",
    STAMP: "grey",
}


class InvalidGraph(ValueError):
    pass


@dataclass(frozen=True)
class HypernymLexicon:
    """Lemma -> physical-entity flag, snapshotted from a lexical database."""

    flags: dict[str, bool]
    default: bool = False

    def is_physical(self, lemma: str) -> bool:
        return self.flags.get(lemma.lower(), self.default)

    @classmethod
    def load(cls, path: str, default: bool = False) -> "HypernymLexicon":
        flags: dict[str, bool] = {}
        with open(path, encoding="utf-8") as f:
            for raw in f:
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                lemma, _, flag = line.partition("\t")
                flags[lemma.strip().lower()] = flag.strip() == "1"
        return cls(flags=flags, default=default)

    @classmethod
    def empty(cls, default: bool = False) -> "HypernymLexicon":
        return cls(flags={}, default=default)


def classify_instance_kind(lemma: str, upos: str, lex: HypernymLexicon) -> str:
    if upos in VERB_TAGS:
        return ACTION
    if upos in ("NOUN", "PROPN") and lex.is_physical(lemma):
        return ENTITY
    return CONCEPT


@dataclass
class Node:
    id: int
    kind: str
    name: str
    subkind: str | None = None
    token_uid: int | None = None


@dataclass
class PropInfo:
    """Per-proposition bookkeeping over the shared node store."""

    root: int
    anchor: int
    token_uids: frozenset[int]
    slots: dict[str, list[int]]
    action_stamp: int
    uid_to_instance: dict[int, int]
    prop: object


class PropGraph:
    def __init__(self) -> None:
        self.nodes: dict[int, Node] = {}
        self.edges: list[tuple[int, int]] = []
        self._edge_set: set[tuple[int, int]] = set()
        self._alias: dict[int, int] = {}
        self._counter = 0
        self.evo: dict[str, int] = {}
        self.dev: dict[str, int] = {}
        self.props: list[PropInfo] = []
        # instance id -> {"attr": [...], "part_of": [...], "where": [...]}
        self.describers: dict[int, dict[str, list[int]]] = {}
        self.entity_stamp: dict[int, int] = {}
        for name in EVOLUTIONARY_NAMES:
            self.evo[name] = self._new_node(EVOLUTIONARY, name).id
        self.dev[UNKNOWN_LEMMA] = self._new_node(
            DEVELOPMENTAL, "_" + UNKNOWN_LEMMA
        ).id

    # -- plumbing ----------------------------------------------------------

    def _new_node(self, kind, name, subkind=None, token_uid=None) -> Node:
        self._counter += 1
        node = Node(id=self._counter, kind=kind, name=name, subkind=subkind, token_uid=token_uid)
        self.nodes[node.id] = node
        return node

    def resolve(self, node_id: int) -> int:
        while node_id in self._alias:
            node_id = self._alias[node_id]
        return node_id

    def add_edge(self, src: int, dst: int) -> None:
        pair = (self.resolve(src), self.resolve(dst))
        if pair not in self._edge_set:
            self._edge_set.add(pair)
            self.edges.append(pair)

    def has_edge(self, src: int, dst: int) -> bool:
        return (self.resolve(src), self.resolve(dst)) in self._edge_set

    def dev_node(self, lemma: str) -> int:
        lemma = lemma.lower()
        if lemma not in self.dev:
            self.dev[lemma] = self._new_node(DEVELOPMENTAL, "_" + lemma).id
        return self.dev[lemma]

    def new_instance(self, subkind: str, token_uid: int | None = None) -> int:
        self._counter += 1
        node = Node(
            id=self._counter,
            kind=INSTANCE,
            name=f"ins_{subkind}_{self._counter}",
            subkind=subkind,
            token_uid=token_uid,
        )
        self.nodes[node.id] = node
        return node.id

    def new_stamp(self, subkind: str) -> int:
        self._counter += 1
        node = Node(
            id=self._counter,
            kind=STAMP,
            name=f"stamp_{subkind}_{self._counter}",
            subkind=subkind,
        )
        self.nodes[node.id] = node
        return node.id

    def dev_lemma_of(self, instance_id: int) -> str | None:
        instance_id = self.resolve(instance_id)
        for src, dst in self.edges:
            if src == instance_id and self.nodes[dst].kind == DEVELOPMENTAL:
                return self.nodes[dst].name[1:]
        return None

    @property
    def proposition_roots(self) -> list[int]:
        return [p.root for p in sorted(self.props, key=lambda p: p.anchor)]

    def info_for_root(self, root: int) -> PropInfo:
        return next(p for p in self.props if p.root == root)

    def info_for_prop(self, prop: object) -> PropInfo:
        return next(p for p in self.props if p.prop is prop)

    # -- node merging --------------------------------------------------------

    def _merge_nodes(self, dead: int, live: int) -> None:
        dead, live = self.resolve(dead), self.resolve(live)
        if dead == live:
            return
        self._alias[dead] = live
        del self.nodes[dead]
        remapped: list[tuple[int, int]] = []
        seen: set[tuple[int, int]] = set()
        for src, dst in self.edges:
            src = live if src == dead else src
            dst = live if dst == dead else dst
            if src != dst and (src, dst) not in seen:
                seen.add((src, dst))
                remapped.append((src, dst))
        self.edges = remapped
        self._edge_set = seen

    def unify_instances(self, dead: int, live: int) -> None:
        """Collapse two instance nodes into one, the second survives."""
        dead, live = self.resolve(dead), self.resolve(live)
        if dead == live:
            return
        dead_stamp = self.entity_stamp.get(dead)
        live_stamp = self.entity_stamp.get(live)
        self._merge_nodes(dead, live)
        if dead_stamp is not None:
            if live_stamp is not None:
                self._merge_nodes(dead_stamp, live_stamp)
            else:
                self.entity_stamp[live] = dead_stamp
            self.entity_stamp.pop(dead, None)
        if dead in self.describers:
            mine = self.describers.setdefault(live, {"attr": [], "part_of": [], "where": []})
            for key, ids in self.describers.pop(dead).items():
                mine[key].extend(ids)

    # -- copy / absorb -------------------------------------------------------

    def copy(self) -> "PropGraph":
        g = PropGraph.__new__(PropGraph)
        g.nodes = {i: Node(n.id, n.kind, n.name, n.subkind, n.token_uid) for i, n in self.nodes.items()}
        g.edges = list(self.edges)
        g._edge_set = set(self._edge_set)
        g._alias = dict(self._alias)
        g._counter = self._counter
        g.evo = dict(self.evo)
        g.dev = dict(self.dev)
        g.describers = {k: {s: list(v) for s, v in d.items()} for k, d in self.describers.items()}
        g.entity_stamp = dict(self.entity_stamp)
        g.props = [
            PropInfo(
                root=p.root,
                anchor=p.anchor,
                token_uids=p.token_uids,
                slots={k: list(v) for k, v in p.slots.items()},
                action_stamp=p.action_stamp,
                uid_to_instance=dict(p.uid_to_instance),
                prop=p.prop,
            )
            for p in self.props
        ]
        return g

    def absorb(self, other: "PropGraph") -> dict[int, int]:
        """Copy another graph's nodes into this one; returns the id mapping."""
        mapping: dict[int, int] = {}
        for node_id in sorted(other.nodes):
            node = other.nodes[node_id]
            if node.kind == EVOLUTIONARY:
                mapping[node_id] = self.evo[node.name]
            elif node.kind == DEVELOPMENTAL:
                mapping[node_id] = self.dev_node(node.name[1:])
            elif node.kind == INSTANCE:
                mapping[node_id] = self.new_instance(node.subkind, node.token_uid)
            else:
                mapping[node_id] = self.new_stamp(node.subkind)

        def m(i: int) -> int:
            return mapping[other.resolve(i)]

        for src, dst in other.edges:
            self.add_edge(m(src), m(dst))
        for ins, stamp in other.entity_stamp.items():
            self.entity_stamp[m(ins)] = m(stamp)
        for ins, desc in other.describers.items():
            self.describers[m(ins)] = {k: [m(i) for i in v] for k, v in desc.items()}
        for p in other.props:
            self.props.append(
                PropInfo(
                    root=m(p.root),
                    anchor=p.anchor,
                    token_uids=p.token_uids,
                    slots={k: [m(i) for i in v] for k, v in p.slots.items()},
                    action_stamp=m(p.action_stamp),
                    uid_to_instance={u: m(i) for u, i in p.uid_to_instance.items()},
                    prop=p.prop,
                )
            )
        return mapping


# ---------------------------------------------------------------------------
# Construction


def represent_into(
    graph: PropGraph,
    frame: DimensionFrame,
    lex: HypernymLexicon,
    prop: object = None,
) -> int:
    """Add one proposition's six-level network to a graph; returns its root."""
    uid_to_instance: dict[int, int] = {}

    action_tok = frame.action
    action_lemma = action_tok.lemma.lower() if action_tok is not None else UNKNOWN_LEMMA
    action_dev = graph.dev_node(action_lemma)
    root = graph.new_instance(ACTION, token_uid=action_tok.uid if action_tok else None)
    if action_tok is not None:
        uid_to_instance[action_tok.uid] = root
    graph.add_edge(root, graph.evo["#action"])
    graph.add_edge(root, action_dev)
    for name in SLOT_NAMES:
        graph.add_edge(graph.evo["#action"], graph.evo["#" + name])

    lex_kind = lambda t: classify_instance_kind(t.lemma, t.upos, lex)

    slot_instances: dict[str, list[int]] = {}
    noun_slots: list[tuple[int, NounSlot]] = []
    for name in SLOT_NAMES:
        ids: list[int] = []
        for ns in frame.slots[name]:
            dev = graph.dev_node(ns.head.lemma)
            ins = graph.new_instance(lex_kind(ns.head), token_uid=ns.head.uid)
            uid_to_instance[ns.head.uid] = ins
            graph.add_edge(graph.evo["#" + name], ins)
            graph.add_edge(ins, dev)
            ids.append(ins)
            noun_slots.append((ins, ns))
        if not ids:
            # Keep the network complete: an empty slot still invokes an
            # instance, pointed at the shared default developmental node.
            ins = graph.new_instance(CONCEPT)
            graph.add_edge(graph.evo["#" + name], ins)
            graph.add_edge(ins, graph.dev[UNKNOWN_LEMMA])
            ids.append(ins)
        slot_instances[name] = ids

    for parent_ins, ns in noun_slots:
        desc = {"attr": [], "part_of": [], "where": []}
        for key, evo_name, tokens in (
            ("attr", "#attr", ns.attributes),
            ("part_of", "#part_of", ns.parts_of),
            ("where", "#where", ns.where),
        ):
            for tok in tokens:
                dev = graph.dev_node(tok.lemma)
                ins = graph.new_instance(lex_kind(tok), token_uid=tok.uid)
                uid_to_instance[tok.uid] = ins
                graph.add_edge(parent_ins, graph.evo[evo_name])
                graph.add_edge(graph.evo[evo_name], ins)
                graph.add_edge(ins, dev)
                desc[key].append(ins)
        if any(desc.values()):
            graph.describers[parent_ins] = desc

    action_stamp = graph.new_stamp(ACTION)
    graph.add_edge(root, action_stamp)
    for name in SLOT_NAMES:
        for ins in slot_instances[name]:
            graph.add_edge(action_stamp, ins)

    for parent_ins, _ in noun_slots:
        desc = graph.describers.get(parent_ins)
        if desc:
            stamp = graph.new_stamp(ENTITY)
            graph.add_edge(parent_ins, stamp)
            for ids in desc.values():
                for ins in ids:
                    graph.add_edge(stamp, ins)
            graph.entity_stamp[parent_ins] = stamp

    if isinstance(prop, Proposition):
        uids = frozenset(t.uid for t in prop.tokens)
        anchor = prop.anchor
    else:
        uids = frozenset(uid_to_instance)
        anchor = min(uids) if uids else 0
    graph.props.append(
        PropInfo(
            root=root,
            anchor=anchor,
            token_uids=uids,
            slots=slot_instances,
            action_stamp=action_stamp,
            uid_to_instance=uid_to_instance,
            prop=prop if prop is not None else object(),
        )
    )
    return root


def represent(frame: DimensionFrame, lex: HypernymLexicon, prop: object = None) -> PropGraph:
    graph = PropGraph()
    represent_into(graph, frame, lex, prop)
    return graph


# ---------------------------------------------------------------------------
# Merging


def _apply_strategies(
    graph: PropGraph,
    host: PropInfo,
    sub: PropInfo,
    *,
    relative_subtype: RelativeSubtype | None,
    identifier_uid: int | None,
    time_relation: TimeRelation | None,
    antecedent_uid: int | None,
) -> None:
    # 1. Shared subjects collapse into a single instance node.
    for mi in list(host.slots["subject"]):
        for si in list(sub.slots["subject"]):
            mi_r, si_r = graph.resolve(mi), graph.resolve(si)
            if mi_r == si_r:
                continue
            lemma_m = graph.dev_lemma_of(mi_r)
            lemma_s = graph.dev_lemma_of(si_r)
            if lemma_m is not None and lemma_m == lemma_s and lemma_m != UNKNOWN_LEMMA:
                graph.unify_instances(si_r, mi_r)

    sub_asn = graph.resolve(sub.action_stamp)
    host_asn = graph.resolve(host.action_stamp)

    # 2. A clause identifier in the main proposition points at the
    #    subordinate action stamp node.
    if identifier_uid is not None:
        ins = host.uid_to_instance.get(identifier_uid)
        if ins is None:
            for info in graph.props:
                if identifier_uid in info.uid_to_instance:
                    ins = info.uid_to_instance[identifier_uid]
                    break
        if ins is not None:
            graph.add_edge(graph.resolve(ins), sub_asn)

    # 3. Temporal ordering between the two action stamp nodes.
    if time_relation is TimeRelation.MAIN_BEFORE_SUB:
        graph.add_edge(host_asn, graph.evo["#time_before"])
        graph.add_edge(graph.evo["#time_before"], sub_asn)
    elif time_relation is TimeRelation.MAIN_AFTER_SUB:
        graph.add_edge(sub_asn, graph.evo["#time_before"])
        graph.add_edge(graph.evo["#time_before"], host_asn)
    elif time_relation is TimeRelation.SIMULTANEOUS:
        graph.add_edge(graph.evo["#time_same"], host_asn)
        graph.add_edge(graph.evo["#time_same"], sub_asn)

    # 4. Relative clauses: either the antecedent's two instances merge, or
    #    the antecedent instance is linked to the subordinate action stamp.
    if antecedent_uid is not None and relative_subtype is not None:
        main_ins = host.uid_to_instance.get(antecedent_uid)
        if relative_subtype is RelativeSubtype.PRONOUN:
            sub_ins = sub.uid_to_instance.get(antecedent_uid)
            if main_ins is not None and sub_ins is not None:
                graph.unify_instances(sub_ins, main_ins)
        else:
            if main_ins is not None:
                graph.add_edge(graph.resolve(main_ins), sub_asn)


def merge(main: PropGraph, sub: PropGraph, result: SplitResult) -> PropGraph:
    """Combine the graphs of a main and a subordinate proposition."""
    graph = main.copy()
    mapping = graph.absorb(sub)
    host_info = graph.props[0]
    if result.host_uid:
        for info in graph.props[: len(main.props)]:
            if result.host_uid in info.token_uids:
                host_info = info
                break
    sub_info = next(
        p for p in graph.props if p.root == mapping[sub.resolve(sub.props[0].root)]
    )
    _apply_strategies(
        graph,
        host_info,
        sub_info,
        relative_subtype=result.relative_subtype,
        identifier_uid=result.identifier_uid,
        time_relation=result.time_relation,
        antecedent_uid=result.antecedent_uid,
    )
    return graph


def _host_info(graph: PropGraph, step: SplitStep, sub_info: PropInfo) -> PropInfo:
    for info in sorted(graph.props, key=lambda p: p.anchor):
        if info is sub_info:
            continue
        if step.host_uid in info.token_uids:
            return info
    return graph.props[0]


def merge_tree(tree: SplitTree, lex: HypernymLexicon) -> PropGraph:
    """Represent every leaf and fold the split steps back up, bottom first."""
    graph = PropGraph()
    for leaf in tree.leaves:
        frame = parse_dimensions(leaf)
        represent_into(graph, frame, lex, prop=leaf)
    for step in reversed(tree.steps):
        sub_info = graph.info_for_prop(step.sub)
        host = _host_info(graph, step, sub_info)
        _apply_strategies(
            graph,
            host,
            sub_info,
            relative_subtype=step.relative_subtype,
            identifier_uid=step.identifier_uid,
            time_relation=step.time_relation,
            antecedent_uid=step.antecedent_uid,
        )
    return graph


# ---------------------------------------------------------------------------
# Validation and export


def validate(graph: PropGraph) -> list[str]:
    """Structural invariant check; returns human-readable violations."""
    problems = []
    live = set(graph.nodes)
    for src, dst in graph.edges:
        if src not in live or dst not in live:
            problems.append(f"edge ({src}, {dst}) references a dead node")
    out_edges: dict[int, list[int]] = {}
    for src, dst in graph.edges:
        out_edges.setdefault(src, []).append(dst)

    for src, dst in graph.edges:
        if graph.nodes[src].kind == EVOLUTIONARY and graph.nodes[dst].kind == DEVELOPMENTAL:
            problems.append(
                f"evolutionary {graph.nodes[src].name} points straight at "
                f"developmental {graph.nodes[dst].name}"
            )

    action_instances = set()
    for node in graph.nodes.values():
        if node.kind == INSTANCE:
            dev_targets = [
                d for d in out_edges.get(node.id, ()) if graph.nodes[d].kind == DEVELOPMENTAL
            ]
            if len(dev_targets) != 1:
                problems.append(
                    f"instance {node.name} has {len(dev_targets)} developmental targets"
                )
            if node.subkind == ACTION:
                action_instances.add(node.id)

    roots = set(graph.proposition_roots)
    if roots != action_instances:
        problems.append(
            f"action instances {sorted(action_instances)} != proposition roots {sorted(roots)}"
        )

    for info in graph.props:
        for name in SLOT_NAMES:
            ids = [graph.resolve(i) for i in info.slots[name]]
            if not ids:
                problems.append(f"root {info.root}: slot {name} is empty")
            for ins in ids:
                if not graph.has_edge(graph.evo["#" + name], ins):
                    problems.append(
                        f"root {info.root}: #{name} does not point at instance {ins}"
                    )
        if not graph.has_edge(info.root, graph.evo["#action"]):
            problems.append(f"root {info.root} does not trigger #action")
    return problems


def assert_valid(graph: PropGraph) -> None:
    problems = validate(graph)
    if problems:
        raise InvalidGraph("; ".join(problems))


def export_dot(graph: PropGraph) -> str:
    lines = ["digraph propnet {"]
    for node_id in sorted(graph.nodes):
        node = graph.nodes[node_id]
        lines.append(
            f'  "{node.name}" [style=filled, fillcolor={DOT_COLORS[node.kind]}];'
        )
    for src, dst in sorted(graph.edges):
        lines.append(f'  "{graph.nodes[src].name}" -> "{graph.nodes[dst].name}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json_dict(graph: PropGraph) -> dict:
    return {
        "nodes": [
            {
                "id": n.id,
                "kind": n.kind,
                "name": n.name,
                "subkind": n.subkind,
            }
            for _, n in sorted(graph.nodes.items())
        ],
        "edges": sorted([list(e) for e in graph.edges]),
        "proposition_roots": graph.proposition_roots,
    }
