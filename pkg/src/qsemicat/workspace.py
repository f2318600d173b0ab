"""Loading a workspace of named objects from one JSON document.

The document holds named quantaloids, semicategories, semidistributors and
semifunctors (plus optional posets and Omega-sets); every cross-reference
must resolve and every object passes its validator before any command runs.

Formats:

* quantaloid: ``"2"``, ``"3"``, ``"frame:<lattice>"`` or
  ``{"objects": [...], "homs": {"X>Y": {"size": n, "leq": [[i, j], ...]}},
  "compose": {"X>Y>Z": [[k, ...], ...]}, "id": {"X": i}}`` where the
  composition table entry ``[g][f]`` is the composite of arrow ``g`` of
  hom(Y, Z) after arrow ``f`` of hom(X, Y).
* semicategory: ``{"base": "Q", "objects": [{"name": "a", "type": "X"},
  ...], "hom": [["a1", "a0", elem], ...]}``; omitted entries are bottom.
* semidistributor: ``{"dom": "A", "cod": "B", "mat": [["b", "a", elem], ...]}``.
* semifunctor: ``{"dom": "A", "cod": "B", "map": {"a": "b", ...}}``.
* poset: ``{"elements": [...], "pairs": [[x, y], ...]}``.
* omega_set: ``{"frame": <lattice name or spec>, "elements": [...],
  "eq": [[a, b, elem], ...]}``.
"""

from __future__ import annotations

import json

from .errors import ParseError, QsError
from .instances import validate_omega_set, validate_poset
from .lattice import named_lattice, validate_sup_lattice
from .quantaloid import Quantaloid, builtin_quantaloid, from_frame
from .semicat import (
    validate_semicategory,
    validate_semidistributor,
    validate_semifunctor,
)


def _need(doc, key, where):
    if key not in doc:
        raise ParseError(f"{where}: missing key {key!r}", witness=key)
    return doc[key]


def parse_lattice(spec, where="lattice"):
    if isinstance(spec, str):
        try:
            return named_lattice(spec)
        except KeyError as exc:
            raise ParseError(f"{where}: {exc}", witness=spec) from None
    if not isinstance(spec, dict):
        raise ParseError(f"{where}: expected a name or an object", witness=spec)
    size = _need(spec, "size", where)
    leq = _need(spec, "leq", where)
    return validate_sup_lattice(size, [tuple(p) for p in leq])


def parse_quantaloid(spec, where="quantaloid") -> Quantaloid:
    if isinstance(spec, str):
        try:
            return builtin_quantaloid(spec)
        except KeyError as exc:
            raise ParseError(f"{where}: {exc}", witness=spec) from None
    if not isinstance(spec, dict):
        raise ParseError(f"{where}: expected a name or an object", witness=spec)
    objects = [str(x) for x in _need(spec, "objects", where)]
    homs = {}
    for key, lat_spec in _need(spec, "homs", where).items():
        parts = key.split(">")
        if len(parts) != 2:
            raise ParseError(f"{where}: bad hom key {key!r}", witness=key)
        homs[(parts[0], parts[1])] = parse_lattice(lat_spec, f"{where}.homs[{key}]")
    compose = {}
    for key, table in _need(spec, "compose", where).items():
        parts = key.split(">")
        if len(parts) != 3:
            raise ParseError(f"{where}: bad compose key {key!r}", witness=key)
        compose[(parts[0], parts[1], parts[2])] = table
    identities = {str(x): e for x, e in _need(spec, "id", where).items()}
    from .quantaloid import validate_quantaloid

    return validate_quantaloid(objects, homs, compose, identities)


class Workspace:
    """Named, validated objects loaded from one document."""

    def __init__(self):
        self.quantaloids = {}
        self.semicategories = {}
        self.semidistributors = {}
        self.semifunctors = {}
        self.posets = {}
        self.omega_sets = {}

    def quantaloid(self, name):
        if name in self.quantaloids:
            return self.quantaloids[name]
        try:
            return builtin_quantaloid(name)
        except KeyError:
            raise ParseError(f"unknown quantaloid {name!r}", witness=name) from None

    def semicategory(self, name):
        if name not in self.semicategories:
            raise ParseError(f"unknown semicategory {name!r}", witness=name)
        return self.semicategories[name]


def _iter_entries(doc, section):
    entries = doc.get(section, {})
    if not isinstance(entries, dict):
        raise ParseError(f"section {section!r} must map names to objects", witness=section)
    return entries.items()


def load_workspace(doc) -> Workspace:
    """Validate a whole document; raises on the first invalid object."""
    ws = Workspace()
    for kind, name, build in plan_workspace(doc):
        build(ws)
    return ws


def plan_workspace(doc):
    """The validation plan: (kind, name, build) triples in dependency order.

    ``build`` validates one object and stores it into the workspace it is
    given; callers wanting per-object verdicts run the plan themselves and
    catch the errors.
    """
    if not isinstance(doc, dict):
        raise ParseError("workspace document must be an object", witness=type(doc).__name__)
    plan = []

    for name, spec in _iter_entries(doc, "quantaloids"):
        def build_q(ws, name=name, spec=spec):
            ws.quantaloids[name] = parse_quantaloid(spec, f"quantaloids.{name}")
        plan.append(("quantaloid", name, build_q))

    for name, spec in _iter_entries(doc, "semicategories"):
        def build_sc(ws, name=name, spec=spec):
            where = f"semicategories.{name}"
            base = ws.quantaloid(str(_need(spec, "base", where)))
            objects = []
            for entry in _need(spec, "objects", where):
                objects.append((str(_need(entry, "name", where)), str(_need(entry, "type", where))))
            for obj_name, obj_type in objects:
                if obj_type not in base.objects:
                    raise ParseError(
                        f"{where}: dangling type name {obj_type!r}", witness=obj_type
                    )
            hom = {}
            for triple in spec.get("hom", []):
                if len(triple) != 3:
                    raise ParseError(f"{where}: bad hom triple {triple!r}", witness=triple)
                a1, a0, elem = triple
                hom[(str(a1), str(a0))] = int(elem)
            ws.semicategories[name] = validate_semicategory(base, objects, hom)
        plan.append(("semicategory", name, build_sc))

    for name, spec in _iter_entries(doc, "semidistributors"):
        def build_sd(ws, name=name, spec=spec):
            where = f"semidistributors.{name}"
            dom = ws.semicategory(str(_need(spec, "dom", where)))
            cod = ws.semicategory(str(_need(spec, "cod", where)))
            mat = {}
            for triple in spec.get("mat", []):
                if len(triple) != 3:
                    raise ParseError(f"{where}: bad mat triple {triple!r}", witness=triple)
                b, a, elem = triple
                mat[(str(b), str(a))] = int(elem)
            ws.semidistributors[name] = validate_semidistributor(dom, cod, mat)
        plan.append(("semidistributor", name, build_sd))

    for name, spec in _iter_entries(doc, "semifunctors"):
        def build_sf(ws, name=name, spec=spec):
            where = f"semifunctors.{name}"
            dom = ws.semicategory(str(_need(spec, "dom", where)))
            cod = ws.semicategory(str(_need(spec, "cod", where)))
            mapping = {str(k): str(v) for k, v in _need(spec, "map", where).items()}
            ws.semifunctors[name] = validate_semifunctor(dom, cod, mapping)
        plan.append(("semifunctor", name, build_sf))

    for name, spec in _iter_entries(doc, "posets"):
        def build_p(ws, name=name, spec=spec):
            where = f"posets.{name}"
            elements = [str(x) for x in _need(spec, "elements", where)]
            pairs = [(str(x), str(y)) for x, y in _need(spec, "pairs", where)]
            ws.posets[name] = validate_poset(elements, pairs)
        plan.append(("poset", name, build_p))

    for name, spec in _iter_entries(doc, "omega_sets"):
        def build_o(ws, name=name, spec=spec):
            where = f"omega_sets.{name}"
            frame = from_frame(parse_lattice(_need(spec, "frame", where), f"{where}.frame"))
            elements = [str(x) for x in _need(spec, "elements", where)]
            eq = {}
            for triple in spec.get("eq", []):
                if len(triple) != 3:
                    raise ParseError(f"{where}: bad eq triple {triple!r}", witness=triple)
                a, b, elem = triple
                eq[(str(a), str(b))] = int(elem)
            ws.omega_sets[name] = validate_omega_set(frame, elements, eq)
        plan.append(("omega_set", name, build_o))

    return plan


def validate_report(doc):
    """Run the plan leniently, returning one verdict per object.

    Objects whose dependencies failed report the dependency error.
    """
    ws = Workspace()
    verdicts = []
    for kind, name, build in plan_workspace(doc):
        try:
            build(ws)
            verdicts.append(
                {"kind": kind, "name": name, "valid": True, "error": None, "witness": None}
            )
        except QsError as exc:
            verdicts.append(
                {
                    "kind": kind,
                    "name": name,
                    "valid": False,
                    "error": f"{type(exc).__name__}: {exc}",
                    "witness": repr(exc.witness) if exc.witness is not None else None,
                }
            )
    return ws, verdicts


def load_path(path) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc}") from None
