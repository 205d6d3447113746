"""Composition instances and their JSON form.

JSON layout::

    {"kind": "glue", "components": ["g1.txt", {"edge_list": "n 3\\n0 1\\n1 2\\n"}],
     "clique1": [0, 1], "clique2": [1, 2], "r": 2}

``kind`` is one of :data:`KINDS`.  Components are edge-list files (relative to
the JSON file) or inline ``{"edge_list": ...}`` objects.  Per kind:

* ``union``: two components.
* ``vertex-sum``: ``attachments`` is ``[u_1, ..., u_k]``.
* ``glue``: ``r``, ``clique1``, ``clique2``.
* ``chain`` / ``link``: ``attachments`` is ``[[x_1, y_1], ...]``.
* ``circuit``: ``attachments`` is ``[x_1, ..., x_n]``.
* ``edge-delete`` / ``bridge``: one component and ``edge: [u, v]``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .compose import (ComposedGraph, CompositionSpec, GluingSpec, chain, circuit, disjoint_union,
                      link, r_glue, vertex_sum)
from .graph import Graph, GraphError, emit_edge_list, parse_edge_list

__all__ = ["Instance", "KINDS", "load_instance"]

KINDS = ("union", "vertex-sum", "glue", "chain", "link", "circuit", "edge-delete", "bridge")


@dataclass
class Instance:
    kind: str
    components: list[Graph]
    attachments: list | None = None
    clique1: tuple[int, ...] | None = None
    clique2: tuple[int, ...] | None = None
    r: int | None = None
    edge: tuple[int, int] | None = None
    name: str | None = None
    expected: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise GraphError(f"unknown instance kind {self.kind!r}; expected one of {', '.join(KINDS)}")
        if self.clique1 is not None:
            self.clique1 = tuple(self.clique1)
        if self.clique2 is not None:
            self.clique2 = tuple(self.clique2)
        if self.edge is not None:
            self.edge = tuple(self.edge)
            if len(self.edge) != 2:
                raise GraphError(f"edge must have two endpoints, got {list(self.edge)}")
        want = {"union": 2, "edge-delete": 1, "bridge": 1}.get(self.kind)
        if want is not None and len(self.components) != want:
            raise GraphError(f"{self.kind} instance needs {want} component(s), got {len(self.components)}")
        if self.kind in ("edge-delete", "bridge") and self.edge is None:
            raise GraphError(f"{self.kind} instance needs an 'edge'")
        if self.kind in ("vertex-sum", "chain", "link", "circuit") and self.attachments is None:
            raise GraphError(f"{self.kind} instance needs 'attachments'")

    def gluing_spec(self) -> GluingSpec:
        if self.kind != "glue":
            raise GraphError(f"{self.kind} instance has no gluing spec")
        if self.clique1 is None or self.clique2 is None:
            raise GraphError("glue instance needs 'clique1' and 'clique2'")
        r = len(self.clique1) if self.r is None else self.r
        if len(self.components) != 2:
            raise GraphError(f"glue instance needs 2 components, got {len(self.components)}")
        return GluingSpec(r, self.clique1, self.clique2)

    def composition_spec(self) -> CompositionSpec:
        if self.kind not in ("chain", "link", "circuit"):
            raise GraphError(f"{self.kind} instance has no composition spec")
        return CompositionSpec(self.kind, self.attachments)

    def compose(self) -> ComposedGraph:
        """The graph whose strong domination number the instance is about."""
        comps = self.components
        if self.kind == "union":
            return disjoint_union(*comps)
        if self.kind == "vertex-sum":
            return vertex_sum(comps, self.attachments)
        if self.kind == "glue":
            return r_glue(comps[0], comps[1], self.gluing_spec())
        if self.kind == "chain":
            return chain(comps, self.composition_spec())
        if self.kind == "link":
            return link(comps, self.composition_spec())
        if self.kind == "circuit":
            return circuit(comps, self.composition_spec())
        g = comps[0]
        vmap = {(0, v): v for v in range(g.n)}
        if self.kind == "edge-delete":
            return ComposedGraph(g.remove_edge(*self.edge), vmap, {"edge": self.edge})
        if not g.has_edge(*self.edge):
            raise GraphError(f"{list(self.edge)} is not an edge")
        return ComposedGraph(g, vmap, {"edge": self.edge})

    def to_json(self, component_paths: list[str] | None = None) -> dict:
        if component_paths is None:
            comps = [{"edge_list": emit_edge_list(g)} for g in self.components]
        else:
            comps = list(component_paths)
        out: dict = {"kind": self.kind, "components": comps}
        if self.attachments is not None:
            out["attachments"] = [list(a) if isinstance(a, (tuple, list)) else a for a in self.attachments]
        if self.clique1 is not None:
            out["clique1"] = list(self.clique1)
            out["clique2"] = list(self.clique2)
            out["r"] = len(self.clique1) if self.r is None else self.r
        if self.edge is not None:
            out["edge"] = list(self.edge)
        if self.name:
            out["name"] = self.name
        if self.expected:
            out["expected"] = self.expected
        return out

    @classmethod
    def from_json(cls, obj: dict, base_dir: str | Path = ".") -> "Instance":
        if not isinstance(obj, dict):
            raise GraphError("instance JSON must be an object")
        try:
            kind = obj["kind"]
            raw_comps = obj["components"]
        except KeyError as exc:
            raise GraphError(f"instance JSON is missing {exc.args[0]!r}") from None
        comps = []
        for c in raw_comps:
            if isinstance(c, dict) and "edge_list" in c:
                comps.append(parse_edge_list(c["edge_list"]))
            elif isinstance(c, str):
                comps.append(parse_edge_list((Path(base_dir) / c).read_text()))
            else:
                raise GraphError(f"component entry must be a path or {{'edge_list': ...}}, got {c!r}")
        att = obj.get("attachments")
        if att is not None and kind in ("chain", "link"):
            att = [tuple(a) for a in att]
        return cls(kind, comps, att, obj.get("clique1"), obj.get("clique2"), obj.get("r"),
                   obj.get("edge"), obj.get("name"), obj.get("expected") or {})

    def write_bundle(self, directory: str | Path) -> Path:
        """Write ``spec.json`` plus one edge-list file per component."""
        directory = Path(directory)
        directory.mkdir(parents=True, exist_ok=True)
        paths = []
        for i, g in enumerate(self.components):
            name = f"component{i}.txt"
            (directory / name).write_text(emit_edge_list(g))
            paths.append(name)
        spec_path = directory / "spec.json"
        spec_path.write_text(json.dumps(self.to_json(paths), indent=2) + "\n")
        return spec_path


def load_instance(path: str | Path) -> Instance:
    path = Path(path)
    try:
        obj = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise GraphError(f"{path}: invalid JSON: {exc}") from None
    return Instance.from_json(obj, path.parent)
