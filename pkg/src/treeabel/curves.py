"""Genus-weighted trees modelling stable curves of compact type.

A curve of compact type has only separating nodes, so its dual graph is a
tree: vertices carry component genera, edges are the nodes.  Everything
downstream (semistability inequalities, canonical Abel-map multidegrees)
is computed from this combinatorial model, so construction is strict: a
``CurveTree`` violating treeness or stability cannot be built.

Subcurves are bitsets over the canonical (lexicographic) component order,
which keeps complements and containment tests cheap and every enumeration
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of checking a tree description against all invariants."""

    violations: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations


class InvalidTreeError(ValueError):
    """Raised when a curve tree violates a structural invariant."""

    def __init__(self, report: ValidationReport):
        super().__init__("; ".join(report.violations))
        self.report = report


@dataclass(frozen=True)
class Component:
    id: str
    genus: int


@dataclass(frozen=True)
class Node:
    id: str
    ends: tuple[str, str]


@dataclass(frozen=True)
class Subcurve:
    """Set of components, encoded as a bitmask in canonical order."""

    mask: int


@dataclass(frozen=True)
class Tail:
    """One side of a separating node (the side meets its complement once)."""

    node: str
    side: Subcurve


@dataclass(frozen=True)
class Multidegree:
    """Integer degree per component, in canonical component order."""

    degrees: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.degrees)

    def on(self, sub: Subcurve) -> int:
        """Sum of the degrees over the components of ``sub``."""
        mask = sub.mask
        value = 0
        while mask:
            low = mask & -mask
            value += self.degrees[low.bit_length() - 1]
            mask ^= low
        return value

    def __add__(self, other: "Multidegree") -> "Multidegree":
        return Multidegree(tuple(a + b for a, b in zip(self.degrees, other.degrees, strict=True)))

    def __sub__(self, other: "Multidegree") -> "Multidegree":
        return Multidegree(tuple(a - b for a, b in zip(self.degrees, other.degrees, strict=True)))

    def scaled(self, factor: int) -> "Multidegree":
        return Multidegree(tuple(factor * a for a in self.degrees))


def _structural_violations(components: Sequence[Component], nodes: Sequence[Node]) -> list[str]:
    violations: list[str] = []

    seen_components: set[str] = set()
    for comp in components:
        if comp.id in seen_components:
            violations.append(f"duplicate component id '{comp.id}'")
        seen_components.add(comp.id)
        if comp.genus < 0:
            violations.append(f"component '{comp.id}' has negative genus")
    if not components:
        violations.append("tree has no components")

    seen_nodes: set[str] = set()
    referential_ok = not violations
    for node in nodes:
        if node.id in seen_nodes:
            violations.append(f"duplicate node id '{node.id}'")
        seen_nodes.add(node.id)
        a, b = node.ends
        for end in (a, b):
            if end not in seen_components:
                violations.append(f"node '{node.id}' references unknown component '{end}'")
                referential_ok = False
        if a == b:
            violations.append(f"node '{node.id}' is a self-loop on component '{a}'")
            referential_ok = False

    if referential_ok and components:
        if len(nodes) != len(components) - 1:
            violations.append(
                f"not a tree: {len(nodes)} nodes on {len(components)} components"
            )
        else:
            adjacency: dict[str, set[str]] = {c.id: set() for c in components}
            for node in nodes:
                a, b = node.ends
                adjacency[a].add(b)
                adjacency[b].add(a)
            stack = [components[0].id]
            reached = {components[0].id}
            while stack:
                for other in adjacency[stack.pop()]:
                    if other not in reached:
                        reached.add(other)
                        stack.append(other)
            if len(reached) != len(components):
                violations.append("not a tree: graph is disconnected")

        degree = {c.id: 0 for c in components}
        for node in nodes:
            degree[node.ends[0]] += 1
            degree[node.ends[1]] += 1
        for comp in components:
            if comp.genus == 0 and degree[comp.id] < 3:
                violations.append(
                    f"stability: genus-0 component '{comp.id}' needs >=3 nodes, has {degree[comp.id]}"
                )

        total = sum(c.genus for c in components)
        if total < 2:
            violations.append(f"total genus {total} is less than 2")

    return violations


def _shape_violations(data: object) -> tuple[list[str], list[Component], list[Node]]:
    violations: list[str] = []
    components: list[Component] = []
    nodes: list[Node] = []

    if not isinstance(data, Mapping):
        return ["tree data must be a JSON object"], [], []
    for key in data:
        if key not in ("components", "nodes"):
            violations.append(f"unknown key '{key}'")
    for key in ("components", "nodes"):
        if key not in data:
            violations.append(f"missing key '{key}'")
    if violations:
        return violations, [], []

    raw_components = data["components"]
    if not isinstance(raw_components, Sequence) or isinstance(raw_components, (str, bytes)):
        return ["'components' must be a list"], [], []
    for i, entry in enumerate(raw_components):
        if not isinstance(entry, Mapping) or set(entry) != {"id", "genus"}:
            violations.append(f"component entry {i} must be an object with keys id, genus")
            continue
        cid, genus = entry["id"], entry["genus"]
        if not isinstance(cid, str) or not cid:
            violations.append(f"component entry {i} has a non-string id")
            continue
        if isinstance(genus, bool) or not isinstance(genus, int) or genus < 0:
            violations.append(f"component '{cid}' genus must be a non-negative integer")
            continue
        components.append(Component(cid, genus))

    raw_nodes = data["nodes"]
    if not isinstance(raw_nodes, Sequence) or isinstance(raw_nodes, (str, bytes)):
        return violations + ["'nodes' must be a list"], [], []
    for i, entry in enumerate(raw_nodes):
        if not isinstance(entry, Mapping) or set(entry) != {"id", "ends"}:
            violations.append(f"node entry {i} must be an object with keys id, ends")
            continue
        nid, ends = entry["id"], entry["ends"]
        if not isinstance(nid, str) or not nid:
            violations.append(f"node entry {i} has a non-string id")
            continue
        if (
            not isinstance(ends, Sequence)
            or isinstance(ends, (str, bytes))
            or len(ends) != 2
            or not all(isinstance(e, str) for e in ends)
        ):
            violations.append(f"node '{nid}' ends must be a pair of component ids")
            continue
        nodes.append(Node(nid, (ends[0], ends[1])))

    return violations, components, nodes


def validate(data: object) -> ValidationReport:
    """Check a raw tree description (parsed JSON) against every invariant.

    Nothing is repaired: each violated invariant is reported with the
    offending component or node id.
    """
    violations, components, nodes = _shape_violations(data)
    if violations:
        return ValidationReport(tuple(violations))
    return ValidationReport(tuple(_structural_violations(components, nodes)))


@dataclass(frozen=True)
class CurveTree:
    """Stable curve of compact type: a genus-weighted tree.

    Instances are immutable and always valid; construction raises
    :class:`InvalidTreeError` otherwise.
    """

    components: tuple[Component, ...]
    nodes: tuple[Node, ...]

    def __post_init__(self) -> None:
        violations = _structural_violations(self.components, self.nodes)
        if violations:
            raise InvalidTreeError(ValidationReport(tuple(violations)))

    @classmethod
    def build(
        cls,
        components: Iterable[tuple[str, int]],
        nodes: Iterable[tuple[str, str, str]] = (),
    ) -> "CurveTree":
        return cls(
            tuple(Component(cid, genus) for cid, genus in components),
            tuple(Node(nid, (a, b)) for nid, a, b in nodes),
        )

    @classmethod
    def from_data(cls, data: object) -> "CurveTree":
        report = validate(data)
        if not report.ok:
            raise InvalidTreeError(report)
        _, components, nodes = _shape_violations(data)
        return cls(tuple(components), tuple(nodes))

    def to_data(self) -> dict:
        return {
            "components": [{"id": cid, "genus": self.genus_of(cid)} for cid in self.ids],
            "nodes": [
                {"id": node.id, "ends": list(node.ends)}
                for node in sorted(self.nodes, key=lambda n: n.id)
            ],
        }

    # -- canonical order and lookups ------------------------------------

    @cached_property
    def ids(self) -> tuple[str, ...]:
        """Component ids in canonical (lexicographic) order."""
        return tuple(sorted(c.id for c in self.components))

    @cached_property
    def _index(self) -> dict[str, int]:
        return {cid: i for i, cid in enumerate(self.ids)}

    @cached_property
    def _genera(self) -> tuple[int, ...]:
        by_id = {c.id: c.genus for c in self.components}
        return tuple(by_id[cid] for cid in self.ids)

    @cached_property
    def _edges(self) -> tuple[tuple[str, int, int], ...]:
        """(node id, end index, end index), sorted by node id."""
        return tuple(
            (node.id, self._index[node.ends[0]], self._index[node.ends[1]])
            for node in sorted(self.nodes, key=lambda n: n.id)
        )

    @cached_property
    def _neighbor_masks(self) -> tuple[int, ...]:
        masks = [0] * len(self.ids)
        for _, a, b in self._edges:
            masks[a] |= 1 << b
            masks[b] |= 1 << a
        return tuple(masks)

    @cached_property
    def full(self) -> Subcurve:
        return Subcurve((1 << len(self.ids)) - 1)

    def genus_of(self, component_id: str) -> int:
        return self._genera[self._index[component_id]]

    def node_ends(self, node_id: str) -> tuple[str, str]:
        for node in self.nodes:
            if node.id == node_id:
                return node.ends
        raise KeyError(f"unknown node '{node_id}'")

    # -- subcurve combinatorics ------------------------------------------

    @cached_property
    def genus(self) -> int:
        """Total genus: the sum over components (separating nodes add none)."""
        return sum(self._genera)

    def subcurve(self, members: Iterable[str]) -> Subcurve:
        mask = 0
        for cid in members:
            if cid not in self._index:
                raise KeyError(f"unknown component '{cid}'")
            mask |= 1 << self._index[cid]
        if not mask:
            raise ValueError("subcurve must be non-empty")
        return Subcurve(mask)

    def members(self, sub: Subcurve) -> tuple[str, ...]:
        return tuple(cid for i, cid in enumerate(self.ids) if sub.mask >> i & 1)

    def complement(self, sub: Subcurve) -> Subcurve:
        return Subcurve(self.full.mask ^ sub.mask)

    def contains(self, sub: Subcurve, component_id: str) -> bool:
        return bool(sub.mask >> self._index[component_id] & 1)

    def k(self, sub: Subcurve) -> int:
        """Number of nodes joining ``sub`` to its complement (crossing edges)."""
        return sum(
            1
            for _, a, b in self._edges
            if (sub.mask >> a & 1) != (sub.mask >> b & 1)
        )

    def subcurve_genus(self, sub: Subcurve) -> int:
        """Genus of a subcurve: the sum of its component genera."""
        mask = sub.mask
        value = 0
        while mask:
            low = mask & -mask
            value += self._genera[low.bit_length() - 1]
            mask ^= low
        return value

    def connected_parts(self, sub: Subcurve) -> tuple[Subcurve, ...]:
        """Connected components of the induced subgraph, canonically ordered."""
        remaining = sub.mask
        parts = []
        while remaining:
            seed = remaining & -remaining
            part = seed
            frontier = seed
            while frontier:
                grown = part
                mask = frontier
                while mask:
                    low = mask & -mask
                    grown |= self._neighbor_masks[low.bit_length() - 1] & sub.mask
                    mask ^= low
                frontier = grown & ~part
                part = grown
            parts.append(Subcurve(part))
            remaining &= ~part
        return tuple(parts)

    def is_connected(self, sub: Subcurve) -> bool:
        return len(self.connected_parts(sub)) == 1

    def omega_degree(self, sub: Subcurve) -> int:
        """Degree of the dualizing sheaf restricted to the subcurve.

        Each connected part W contributes 2*g_W - 2 + k_W; a tail therefore
        gives 2*g_Z - 1 and the whole curve gives 2*g - 2.
        """
        return sum(
            2 * self.subcurve_genus(part) - 2 + self.k(part)
            for part in self.connected_parts(sub)
        )

    @cached_property
    def tails(self) -> tuple[Tail, ...]:
        """All 2 * #nodes tails, grouped per node, smaller side first."""
        out: list[Tail] = []
        for node_id, a, b in self._edges:
            side_a = self._side_of(a, node_id)
            side_b = Subcurve(self.full.mask ^ side_a.mask)
            pair = sorted(
                (Tail(node_id, side_a), Tail(node_id, side_b)),
                key=lambda t: (t.side.mask.bit_count(), self.members(t.side)),
            )
            out.extend(pair)
        return tuple(out)

    def _side_of(self, start: int, cut_node: str) -> Subcurve:
        mask = 1 << start
        stack = [start]
        while stack:
            i = stack.pop()
            for node_id, a, b in self._edges:
                if node_id == cut_node:
                    continue
                if a == i or b == i:
                    j = b if a == i else a
                    if not mask >> j & 1:
                        mask |= 1 << j
                        stack.append(j)
        return Subcurve(mask)

    def tails_at(self, node_id: str) -> tuple[Tail, Tail]:
        pair = tuple(t for t in self.tails if t.node == node_id)
        if not pair:
            raise KeyError(f"unknown node '{node_id}'")
        return pair  # type: ignore[return-value]

    @cached_property
    def connected_subcurves(self) -> tuple[Subcurve, ...]:
        """Every non-empty proper connected subcurve, each exactly once.

        Canonical order: by size, then lexicographically by members.
        """
        n = len(self.ids)
        seen: set[int] = set()
        stack = [1 << i for i in range(n)]
        seen.update(stack)
        while stack:
            mask = stack.pop()
            grow = 0
            rest = mask
            while rest:
                low = rest & -rest
                grow |= self._neighbor_masks[low.bit_length() - 1]
                rest ^= low
            grow &= ~mask
            while grow:
                low = grow & -grow
                bigger = mask | low
                if bigger not in seen:
                    seen.add(bigger)
                    stack.append(bigger)
                grow ^= low
        proper = [m for m in seen if m != self.full.mask]
        proper.sort(key=lambda m: (m.bit_count(), self.members(Subcurve(m))))
        return tuple(Subcurve(m) for m in proper)

    # -- multidegrees ------------------------------------------------------

    def multidegree(self, spec: Mapping[str, int] | Sequence[int]) -> Multidegree:
        """Build a multidegree from an id->degree mapping or a canonical tuple."""
        if isinstance(spec, Mapping):
            for cid in spec:
                if cid not in self._index:
                    raise KeyError(f"unknown component '{cid}'")
            return Multidegree(tuple(spec.get(cid, 0) for cid in self.ids))
        degrees = tuple(spec)
        if len(degrees) != len(self.ids):
            raise ValueError(
                f"expected {len(self.ids)} degrees, got {len(degrees)}"
            )
        return Multidegree(degrees)

    def zero_multidegree(self) -> Multidegree:
        return Multidegree((0,) * len(self.ids))

    def unit_multidegree(self, component_id: str) -> Multidegree:
        return Multidegree(
            tuple(1 if i == self._index[component_id] else 0 for i in range(len(self.ids)))
        )

    def multidegree_as_dict(self, md: Multidegree) -> dict[str, int]:
        return dict(zip(self.ids, md.degrees, strict=True))
