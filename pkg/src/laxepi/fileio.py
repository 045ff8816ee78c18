"""Instance file format: one JSON document with categories, functors, modules,
and ideals.  Rationals are "p/q" strings, composition tensors are sparse
[g_index, f_index, coeff_vector] triples.  Every serialization round-trips, so
command output can be fed back in as fixture input.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .category import LinearCategory, Morphism
from .errors import ParseError
from .functors import LinearFunctor
from .linalg import RationalMatrix
from .modules import Module


def rat_to_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def str_to_rat(s, where: str) -> Fraction:
    try:
        if isinstance(s, int):
            return Fraction(s)
        return Fraction(str(s))
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(f"{where}: bad rational {s!r} ({e})")


def _vec_out(v) -> list[str]:
    return [rat_to_str(x) for x in v]


def _vec_in(v, where: str) -> list[Fraction]:
    if not isinstance(v, list):
        raise ParseError(f"{where}: expected a list of rationals")
    return [str_to_rat(x, where) for x in v]


def _matrix_out(m: RationalMatrix) -> list[list[str]]:
    return [[rat_to_str(x) for x in row] for row in m.data]


def _matrix_in(rows, rows_n: int, cols_n: int, where: str) -> RationalMatrix:
    if not isinstance(rows, list) or len(rows) != rows_n:
        raise ParseError(f"{where}: expected {rows_n} matrix rows")
    data = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != cols_n:
            raise ParseError(f"{where}: row {i} must have {cols_n} entries")
        data.append([str_to_rat(x, f"{where}[{i}]") for x in row])
    return RationalMatrix(data, rows_n, cols_n)


# ---------------------------------------------------------------------------
# categories
# ---------------------------------------------------------------------------

def serialize_category(c: LinearCategory) -> dict:
    hom: dict[str, dict] = {}
    for (v, u), d in sorted(c._hom.items()):
        hom.setdefault(v, {})[u] = {"dim": d, "labels": list(c.basis_labels[(v, u)])}
    comp: dict[str, dict] = {}
    for (w, v, u), tab in sorted(c.comp.items()):
        triples = []
        for gi, row in enumerate(tab):
            for fi, cell in enumerate(row):
                if any(cell):
                    triples.append([gi, fi, _vec_out(cell)])
        if triples:
            comp.setdefault(w, {}).setdefault(v, {})[u] = triples
    return {
        "objects": list(c.objects),
        "hom": hom,
        "comp": comp,
        "id": {u: _vec_out(c.identities[u]) for u in c.objects},
    }


def parse_category(doc, where: str) -> LinearCategory:
    if not isinstance(doc, dict):
        raise ParseError(f"{where}: category must be an object")
    objects = doc.get("objects")
    if not isinstance(objects, list) or not objects:
        raise ParseError(f"{where}.objects: need a nonempty list")
    hom_dims: dict[tuple[str, str], int] = {}
    labels: dict[tuple[str, str], list[str]] = {}
    for v, row in (doc.get("hom") or {}).items():
        for u, spec in row.items():
            if v not in objects or u not in objects:
                raise ParseError(f"{where}.hom: unknown object in pair ({v},{u})")
            d = spec.get("dim")
            if not isinstance(d, int) or d < 0:
                raise ParseError(f"{where}.hom[{v}][{u}].dim: need a nonnegative int")
            hom_dims[(v, u)] = d
            if "labels" in spec:
                labels[(v, u)] = list(spec["labels"])
    comp: dict[tuple[str, str, str], Any] = {}
    for w, lvl1 in (doc.get("comp") or {}).items():
        for v, lvl2 in lvl1.items():
            for u, triples in lvl2.items():
                dg = hom_dims.get((v, u), 0)
                df = hom_dims.get((w, v), 0)
                dr = hom_dims.get((w, u), 0)
                tab = [[[Fraction(0)] * dr for _ in range(df)] for _ in range(dg)]
                if not isinstance(triples, list):
                    raise ParseError(f"{where}.comp[{w}][{v}][{u}]: need a triple list")
                for k, trip in enumerate(triples):
                    loc = f"{where}.comp[{w}][{v}][{u}][{k}]"
                    if not (isinstance(trip, list) and len(trip) == 3):
                        raise ParseError(f"{loc}: need [g_index, f_index, coeffs]")
                    gi, fi, coeffs = trip
                    if not (isinstance(gi, int) and 0 <= gi < dg):
                        raise ParseError(f"{loc}: g_index out of range")
                    if not (isinstance(fi, int) and 0 <= fi < df):
                        raise ParseError(f"{loc}: f_index out of range")
                    cv = _vec_in(coeffs, loc)
                    if len(cv) != dr:
                        raise ParseError(f"{loc}: coefficient vector must have length {dr}")
                    tab[gi][fi] = cv
                comp[(w, v, u)] = tab
    ids = {}
    for u, coords in (doc.get("id") or {}).items():
        ids[u] = _vec_in(coords, f"{where}.id[{u}]")
    try:
        return LinearCategory(objects, hom_dims, comp, ids, labels or None)
    except ValueError as e:
        raise ParseError(f"{where}: {e}")


# ---------------------------------------------------------------------------
# functors, modules, ideals
# ---------------------------------------------------------------------------

def serialize_functor(f: LinearFunctor, src_name: str, tgt_name: str) -> dict:
    return {
        "source": src_name,
        "target": tgt_name,
        "objects": dict(f.object_map),
        "hom": {
            v: {u: _matrix_out(f.hom_maps[(v, u)]) for (vv, u) in f.hom_maps if vv == v}
            for (v, _) in f.hom_maps
        },
    }


def parse_functor(doc, cats: dict[str, LinearCategory], where: str) -> tuple[LinearFunctor, str, str]:
    for key in ("source", "target"):
        if doc.get(key) not in cats:
            raise ParseError(f"{where}.{key}: unknown category {doc.get(key)!r}")
    src, tgt = cats[doc["source"]], cats[doc["target"]]
    omap = doc.get("objects")
    if not isinstance(omap, dict):
        raise ParseError(f"{where}.objects: need an object map")
    hom_maps = {}
    for v, row in (doc.get("hom") or {}).items():
        for u, rows in row.items():
            sv, su = omap.get(v), omap.get(u)
            if sv is None or su is None:
                raise ParseError(f"{where}.hom[{v}][{u}]: objects missing from map")
            hom_maps[(v, u)] = _matrix_in(
                rows, tgt.hom_dim(sv, su), src.hom_dim(v, u), f"{where}.hom[{v}][{u}]"
            )
    try:
        return LinearFunctor(src, tgt, omap, hom_maps), doc["source"], doc["target"]
    except ValueError as e:
        raise ParseError(f"{where}: {e}")


def serialize_module(m: Module, over_name: str) -> dict:
    action: dict[str, dict] = {}
    for v, u in m.over.hom_pairs():
        mats = [_matrix_out(m.action[(v, u, i)]) for i in range(m.over.hom_dim(v, u))]
        action.setdefault(v, {})[u] = mats
    return {"over": over_name, "dims": dict(m.dims), "action": action}


def parse_module(doc, cats: dict[str, LinearCategory], where: str) -> tuple[Module, str]:
    if doc.get("over") not in cats:
        raise ParseError(f"{where}.over: unknown category {doc.get('over')!r}")
    c = cats[doc["over"]]
    dims = doc.get("dims")
    if not isinstance(dims, dict):
        raise ParseError(f"{where}.dims: need an object->dimension map")
    for u, d in dims.items():
        if u not in c.objects or not isinstance(d, int) or d < 0:
            raise ParseError(f"{where}.dims[{u}]: bad dimension")
    action = {}
    for v, row in (doc.get("action") or {}).items():
        for u, mats in row.items():
            d = c.hom_dim(v, u)
            if not isinstance(mats, list) or len(mats) != d:
                raise ParseError(f"{where}.action[{v}][{u}]: need {d} matrices")
            for i, rows in enumerate(mats):
                action[(v, u, i)] = _matrix_in(
                    rows, dims.get(v, 0), dims.get(u, 0), f"{where}.action[{v}][{u}][{i}]"
                )
    try:
        return Module(c, dims, action), doc["over"]
    except ValueError as e:
        raise ParseError(f"{where}: {e}")


def serialize_ideal(cat_name: str, generators) -> dict:
    return {
        "cat": cat_name,
        "generators": [
            {"source": g.source, "target": g.target, "coords": _vec_out(g.coords)}
            for g in generators
        ],
    }


def parse_ideal(doc, cats: dict[str, LinearCategory], where: str):
    if doc.get("cat") not in cats:
        raise ParseError(f"{where}.cat: unknown category {doc.get('cat')!r}")
    c = cats[doc["cat"]]
    gens = []
    for k, g in enumerate(doc.get("generators") or []):
        loc = f"{where}.generators[{k}]"
        v, u = g.get("source"), g.get("target")
        if v not in c.objects or u not in c.objects:
            raise ParseError(f"{loc}: unknown endpoint")
        coords = _vec_in(g.get("coords"), loc)
        if len(coords) != c.hom_dim(v, u):
            raise ParseError(f"{loc}: coords must have length {c.hom_dim(v, u)}")
        gens.append(Morphism(v, u, tuple(coords)))
    return doc["cat"], gens


# ---------------------------------------------------------------------------
# whole instances
# ---------------------------------------------------------------------------

@dataclass
class Instance:
    categories: dict[str, LinearCategory] = field(default_factory=dict)
    functors: dict[str, tuple[LinearFunctor, str, str]] = field(default_factory=dict)
    modules: dict[str, tuple[Module, str]] = field(default_factory=dict)
    ideals: dict[str, tuple[str, list[Morphism]]] = field(default_factory=dict)


def parse_instance(doc) -> Instance:
    if not isinstance(doc, dict):
        raise ParseError("top level: expected a JSON object")
    inst = Instance()
    cats = doc.get("categories")
    if not isinstance(cats, dict) or not cats:
        raise ParseError("categories: need at least one category")
    for name, cdoc in cats.items():
        inst.categories[name] = parse_category(cdoc, f"categories.{name}")
    for name, fdoc in (doc.get("functors") or {}).items():
        inst.functors[name] = parse_functor(fdoc, inst.categories, f"functors.{name}")
    for name, mdoc in (doc.get("modules") or {}).items():
        inst.modules[name] = parse_module(mdoc, inst.categories, f"modules.{name}")
    for name, idoc in (doc.get("ideals") or {}).items():
        inst.ideals[name] = parse_ideal(idoc, inst.categories, f"ideals.{name}")
    return inst


def load_instance(path: str) -> Instance:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}")
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: invalid JSON at line {e.lineno} column {e.colno}")
    return parse_instance(doc)


def serialize_instance(inst: Instance) -> dict:
    return {
        "categories": {n: serialize_category(c) for n, c in inst.categories.items()},
        "functors": {
            n: serialize_functor(f, sn, tn) for n, (f, sn, tn) in inst.functors.items()
        },
        "modules": {n: serialize_module(m, cn) for n, (m, cn) in inst.modules.items()},
        "ideals": {n: serialize_ideal(cn, gens) for n, (cn, gens) in inst.ideals.items()},
    }


def bundle_to_instance(bundle) -> Instance:
    """Builtin bundles in instance form (categories addressed by bundle names)."""
    inst = Instance()
    inst.categories = dict(bundle.categories)
    name_of = {}
    for n, c in bundle.categories.items():
        name_of[id(c)] = n
    for n, f in bundle.functors.items():
        inst.functors[n] = (f, name_of[id(f.source)], name_of[id(f.target)])
    for n, m in bundle.modules.items():
        inst.modules[n] = (m, name_of[id(m.over)])
    for n, gens in bundle.ideal_generators.items():
        t = bundle.ideals.get(n)
        cat = t.cat if t is not None else next(iter(bundle.categories.values()))
        inst.ideals[n] = (name_of[id(cat)], list(gens))
    for n, t in bundle.ideals.items():
        if n not in inst.ideals:
            gens = list(t.generators)
            if not gens and t.is_trivial:
                gens = [t.cat.identity(u) for u in t.cat.objects]
            inst.ideals[n] = (name_of[id(t.cat)], gens)
    return inst
