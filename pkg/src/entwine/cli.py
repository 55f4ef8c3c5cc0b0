"""Batch interface: workspaces of structure constants, checkers, reports.

A workspace is one UTF-8 JSON document holding named algebras,
coalgebras, entwinings, 1-cells and 2-cells (plus derived corings and
coring cells) over a single field.  Scalars are strings ("3", "-1/2",
or decimal residues mod p), matrices are arrays of row arrays under the
row-major Kronecker convention of :mod:`entwine.exactlin`.  Output is
canonical JSON (sorted keys, two-space indent, trailing newline), so
serialization round-trips byte for byte and files diff cleanly.

Verbs: check | compose | comc | laws | gallery.  Exit codes: 0 all
checks pass, 1 semantic failure (axiom violation, non-composable cells,
failed factorization), 2 input error (unreadable file, malformed field,
unresolved name).
"""

from __future__ import annotations

import argparse
import json
import sys

from .algstruct import (Algebra, Bimodule, Coalgebra, CheckReport,
                        check_algebra, check_coalgebra, cyclic_group_bialgebra,
                        group_algebra, grouplike_coalgebra, matrix_algebra,
                        matrix_coalgebra)
from .comc import (comc_obj, comc_one_cell, comc_two_cell, compositor,
                   hom_dimension_report, unitor_comparison)
from .corcat import (Coring, CorOneCell, CorTwoCell, check_cor_one_cell,
                     check_cor_two_cell, check_coring, cor_associator,
                     cor_right_unitor, cor_left_unitor, hcomp_cor,
                     identity_cor_two_cell, vcomp_cor)
from .entwcat import (EntwObj, EntwOneCell, EntwTwoCell, bialgebra_entwining,
                      check_obj, check_one_cell, check_two_cell,
                      compose_one_cells, flip_entwining, hcomp,
                      identity_one_cell, identity_two_cell, scalar_two_cell,
                      morphism_one_cell, vcomp)
from .errors import EntwineError
from .exactlin import FieldSpec, Matrix
from .qtensor import tensor_over


# -- workspace -------------------------------------------------------------


class Workspace:
    """Named entries over one field, with the references between them."""

    def __init__(self, field: FieldSpec):
        self.field = field
        self.algebras = {}
        self.coalgebras = {}
        self.entwinings = {}
        self.entw_refs = {}     # entwining name -> (algebra, coalgebra)
        self.one_cells = {}
        self.one_refs = {}      # 1-cell name -> (dom, cod) entwining names
        self.two_cells = {}
        self.two_refs = {}      # 2-cell name -> (dom, cod) 1-cell names
        self.corings = {}
        self.cor_refs = {}      # coring name -> base algebra name
        self.cor_one_cells = {}
        self.cor_one_refs = {}  # name -> (dom, cod) coring names
        self.cor_two_cells = {}
        self.cor_two_refs = {}  # name -> (dom, cod) coring 1-cell names
        self.provenance = {}    # any name -> free-form string

    # construction helpers keep both the object and its reference names

    def add_algebra(self, name: str, a: Algebra):
        self.algebras[name] = a

    def add_coalgebra(self, name: str, c: Coalgebra):
        self.coalgebras[name] = c

    def add_entwining(self, name: str, alg_name: str, coalg_name: str,
                      e: EntwObj):
        self.entwinings[name] = e
        self.entw_refs[name] = (alg_name, coalg_name)

    def add_one_cell(self, name: str, dom: str, cod: str, f: EntwOneCell):
        self.one_cells[name] = f
        self.one_refs[name] = (dom, cod)

    def add_two_cell(self, name: str, dom: str, cod: str, t: EntwTwoCell):
        self.two_cells[name] = t
        self.two_refs[name] = (dom, cod)

    def add_coring(self, name: str, base: str, c: Coring, origin=None):
        self.corings[name] = c
        self.cor_refs[name] = base
        if origin:
            self.provenance[name] = origin

    def add_cor_one_cell(self, name: str, dom: str, cod: str, f: CorOneCell,
                         origin=None):
        self.cor_one_cells[name] = f
        self.cor_one_refs[name] = (dom, cod)
        if origin:
            self.provenance[name] = origin

    def add_cor_two_cell(self, name: str, dom: str, cod: str, t: CorTwoCell,
                         origin=None):
        self.cor_two_cells[name] = t
        self.cor_two_refs[name] = (dom, cod)
        if origin:
            self.provenance[name] = origin


def _mat_to_json(m: Matrix):
    return [[m.field.fmt(x) for x in row] for row in m.entries]


def _mat_from_json(field: FieldSpec, data, rows: int, cols: int) -> Matrix:
    if not isinstance(data, list) or len(data) != rows:
        raise EntwineError(f"matrix has {len(data)} rows, expected {rows}")
    return Matrix(field, data, cols=cols)


def field_to_json(field: FieldSpec):
    if field.kind == "rational":
        return {"kind": "rational"}
    return {"kind": "prime", "p": field.p}


def field_from_json(data) -> FieldSpec:
    if not isinstance(data, dict) or "kind" not in data:
        raise EntwineError("malformed field spec")
    if data["kind"] == "rational":
        return FieldSpec("rational")
    if data["kind"] == "prime":
        return FieldSpec("prime", data.get("p"))
    raise EntwineError(f"unknown field kind {data['kind']!r}")


def parse_field_flag(text: str) -> FieldSpec:
    """--field values: 'rational' or 'prime:<p>'."""
    if text == "rational":
        return FieldSpec("rational")
    if text.startswith("prime:"):
        try:
            p = int(text.split(":", 1)[1])
        except ValueError:
            raise EntwineError(f"malformed field flag {text!r}")
        return FieldSpec("prime", p)
    raise EntwineError(f"malformed field flag {text!r}")


def serialize(ws: Workspace) -> str:
    doc = {"field": field_to_json(ws.field)}
    if ws.algebras:
        doc["algebras"] = {
            name: {"dim": a.dim, "mult": _mat_to_json(a.mult),
                   "unit": _mat_to_json(a.unit)}
            for name, a in ws.algebras.items()}
    if ws.coalgebras:
        doc["coalgebras"] = {
            name: {"dim": c.dim, "comult": _mat_to_json(c.comult),
                   "counit": _mat_to_json(c.counit)}
            for name, c in ws.coalgebras.items()}
    if ws.entwinings:
        doc["entwinings"] = {
            name: {"algebra": ws.entw_refs[name][0],
                   "coalgebra": ws.entw_refs[name][1],
                   "psi": _mat_to_json(e.psi)}
            for name, e in ws.entwinings.items()}
    if ws.one_cells:
        doc["one_cells"] = {
            name: {"dom": ws.one_refs[name][0], "cod": ws.one_refs[name][1],
                   "dimM": f.dimM, "alpha": _mat_to_json(f.alpha),
                   "gamma": _mat_to_json(f.gamma)}
            for name, f in ws.one_cells.items()}
    if ws.two_cells:
        doc["two_cells"] = {
            name: {"dom": ws.two_refs[name][0], "cod": ws.two_refs[name][1],
                   "theta": _mat_to_json(t.theta)}
            for name, t in ws.two_cells.items()}
    if ws.corings:
        doc["corings"] = {
            name: {"base": ws.cor_refs[name], "dim": c.carrier.dim,
                   "lact": _mat_to_json(c.carrier.lact),
                   "ract": _mat_to_json(c.carrier.ract),
                   "comult": _mat_to_json(c.comult),
                   "counit": _mat_to_json(c.counit)}
            for name, c in ws.corings.items()}
    if ws.cor_one_cells:
        doc["cor_one_cells"] = {
            name: {"dom": ws.cor_one_refs[name][0],
                   "cod": ws.cor_one_refs[name][1],
                   "dim": f.carrier.dim,
                   "lact": _mat_to_json(f.carrier.lact),
                   "ract": _mat_to_json(f.carrier.ract),
                   "zeta": _mat_to_json(f.zeta)}
            for name, f in ws.cor_one_cells.items()}
    if ws.cor_two_cells:
        doc["cor_two_cells"] = {
            name: {"dom": ws.cor_two_refs[name][0],
                   "cod": ws.cor_two_refs[name][1],
                   "map": _mat_to_json(t.map)}
            for name, t in ws.cor_two_cells.items()}
    if ws.provenance:
        doc["provenance"] = dict(ws.provenance)
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def deserialize(text: str) -> Workspace:
    doc = json.loads(text)
    if not isinstance(doc, dict):
        raise EntwineError("workspace document must be a JSON object")
    field = field_from_json(doc.get("field"))
    ws = Workspace(field)
    for name, d in sorted(doc.get("algebras", {}).items()):
        n = d["dim"]
        ws.add_algebra(name, Algebra(
            n, _mat_from_json(field, d["mult"], n, n * n),
            _mat_from_json(field, d["unit"], n, 1)))
    for name, d in sorted(doc.get("coalgebras", {}).items()):
        n = d["dim"]
        ws.add_coalgebra(name, Coalgebra(
            n, _mat_from_json(field, d["comult"], n * n, n),
            _mat_from_json(field, d["counit"], 1, n)))
    for name, d in sorted(doc.get("entwinings", {}).items()):
        a = ws.algebras[d["algebra"]]
        c = ws.coalgebras[d["coalgebra"]]
        psi = _mat_from_json(field, d["psi"], a.dim * c.dim, c.dim * a.dim)
        ws.add_entwining(name, d["algebra"], d["coalgebra"],
                         EntwObj(a, c, psi))
    for name, d in sorted(doc.get("one_cells", {}).items()):
        dom = ws.entwinings[d["dom"]]
        cod = ws.entwinings[d["cod"]]
        m = d["dimM"]
        a, c = dom.algebra.dim, dom.coalgebra.dim
        b, dd = cod.algebra.dim, cod.coalgebra.dim
        ws.add_one_cell(name, d["dom"], d["cod"], EntwOneCell(
            dom, cod, m,
            _mat_from_json(field, d["alpha"], m * a, b * m),
            _mat_from_json(field, d["gamma"], m * c, dd * m)))
    for name, d in sorted(doc.get("two_cells", {}).items()):
        dom = ws.one_cells[d["dom"]]
        cod = ws.one_cells[d["cod"]]
        ws.add_two_cell(name, d["dom"], d["cod"], EntwTwoCell(
            dom, cod,
            _mat_from_json(field, d["theta"], cod.dimM, dom.dimM)))
    for name, d in sorted(doc.get("corings", {}).items()):
        base = ws.algebras[d["base"]]
        n = d["dim"]
        carrier = Bimodule(
            base, base, n,
            _mat_from_json(field, d["lact"], n, base.dim * n),
            _mat_from_json(field, d["ract"], n, n * base.dim))
        w2 = tensor_over(carrier.ract, carrier.lact, n, base.dim, n)
        comult = _mat_from_json(field, d["comult"], w2.quotient_dim, n)
        counit = _mat_from_json(field, d["counit"], base.dim, n)
        ws.add_coring(name, d["base"], Coring(base, carrier, comult, counit))
    for name, d in sorted(doc.get("cor_one_cells", {}).items()):
        dom = ws.corings[d["dom"]]
        cod = ws.corings[d["cod"]]
        n = d["dim"]
        carrier = Bimodule(
            cod.base, dom.base, n,
            _mat_from_json(field, d["lact"], n, cod.base.dim * n),
            _mat_from_json(field, d["ract"], n, n * dom.base.dim))
        src = tensor_over(cod.carrier.ract, carrier.lact,
                          cod.carrier.dim, cod.base.dim, n)
        tgt = tensor_over(carrier.ract, dom.carrier.lact,
                          n, dom.base.dim, dom.carrier.dim)
        zeta = _mat_from_json(field, d["zeta"],
                              tgt.quotient_dim, src.quotient_dim)
        ws.add_cor_one_cell(name, d["dom"], d["cod"],
                            CorOneCell(dom, cod, carrier, zeta))
    for name, d in sorted(doc.get("cor_two_cells", {}).items()):
        dom = ws.cor_one_cells[d["dom"]]
        cod = ws.cor_one_cells[d["cod"]]
        ws.add_cor_two_cell(name, d["dom"], d["cod"], CorTwoCell(
            dom, cod, _mat_from_json(field, d["map"],
                                     cod.carrier.dim, dom.carrier.dim)))
    ws.provenance = dict(doc.get("provenance", {}))
    return ws


def load_workspace(path: str) -> Workspace:
    with open(path, "r", encoding="utf-8") as fh:
        return deserialize(fh.read())


def save_workspace(ws: Workspace, path: str):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(ws))


# -- the gallery -----------------------------------------------------------


def build_gallery(field: FieldSpec) -> Workspace:
    """The built-in example workspace exercising every checker."""
    ws = Workspace(field)
    kc1 = group_algebra(field, 1)
    kc2 = group_algebra(field, 2)
    kc3 = group_algebra(field, 3)
    m2 = matrix_algebra(field, 2)
    gl1 = grouplike_coalgebra(field, 1)
    gl2 = grouplike_coalgebra(field, 2)
    gl3 = grouplike_coalgebra(field, 3)
    mc2 = matrix_coalgebra(field, 2)
    for name, a in [("kC1", kc1), ("kC2", kc2), ("kC3", kc3), ("M2", m2)]:
        ws.add_algebra(name, a)
    for name, c in [("gl1", gl1), ("gl2", gl2), ("gl3", gl3), ("mc2", mc2)]:
        ws.add_coalgebra(name, c)

    ws.add_entwining("flip_kC2_mc2", "kC2", "mc2", flip_entwining(kc2, mc2))
    ws.add_entwining("flip_M2_gl3", "M2", "gl3", flip_entwining(m2, gl3))
    ws.add_entwining("flip_kC1_gl2", "kC1", "gl2", flip_entwining(kc1, gl2))
    ws.add_entwining("flip_kC2_gl2", "kC2", "gl2", flip_entwining(kc2, gl2))
    ws.add_entwining("bialg_C1", "kC1", "gl1",
                     bialgebra_entwining(cyclic_group_bialgebra(field, 1)))
    ws.add_entwining("bialg_C2", "kC2", "gl2",
                     bialgebra_entwining(cyclic_group_bialgebra(field, 2)))
    ws.add_entwining("bialg_C3", "kC3", "gl3",
                     bialgebra_entwining(cyclic_group_bialgebra(field, 3)))

    for name, e in list(ws.entwinings.items()):
        ws.add_one_cell(f"id_{name}", name, name, identity_one_cell(e))

    # algebra map: augmentation k[C2] -> k; coalgebra maps: identity and
    # the swap of the two grouplikes of gl2
    one = field.one
    aug = Matrix.build(field, 1, 2, lambda i, j: one)
    swap = Matrix.build(field, 2, 2,
                        lambda i, j: one if i != j else field.zero)
    i2 = Matrix.identity(field, 2)
    ws.add_one_cell(
        "m_aug", "flip_kC1_gl2", "flip_kC2_gl2",
        morphism_one_cell(ws.entwinings["flip_kC1_gl2"],
                          ws.entwinings["flip_kC2_gl2"], aug, i2))
    ws.add_one_cell(
        "m_swap", "flip_kC2_gl2", "flip_kC2_gl2",
        morphism_one_cell(ws.entwinings["flip_kC2_gl2"],
                          ws.entwinings["flip_kC2_gl2"], i2, swap))

    ws.add_two_cell("t_id_swap", "m_swap", "m_swap",
                    identity_two_cell(ws.one_cells["m_swap"]))
    ws.add_two_cell("t_two_swap", "m_swap", "m_swap",
                    scalar_two_cell(2, ws.one_cells["m_swap"]))
    ws.add_two_cell("t_two_aug", "m_aug", "m_aug",
                    scalar_two_cell(2, ws.one_cells["m_aug"]))
    ws.add_two_cell("t_three_id2", "id_bialg_C2", "id_bialg_C2",
                    scalar_two_cell(3, ws.one_cells["id_bialg_C2"]))
    return ws


# -- reporting -------------------------------------------------------------


class Report:
    """Accumulates "KIND name axiom PASS|FAIL" lines and the verdict."""

    def __init__(self, out=None):
        self.out = out if out is not None else sys.stdout
        self.ok = True

    def add(self, kind: str, name: str, rep: CheckReport):
        failed = {str(f).split(" at ")[0]: f for f in rep.failures}
        axioms = rep.axioms or tuple(failed)
        for axiom in axioms:
            if axiom in failed:
                f = failed[axiom]
                where = f" {f.coord}" if f.coord is not None else ""
                self.line(f"{kind} {name} {axiom} FAIL{where}")
                self.ok = False
            else:
                self.line(f"{kind} {name} {axiom} PASS")

    def law(self, name: str, holds: bool, detail: str = ""):
        tail = f" {detail}" if detail and not holds else ""
        self.line(f"LAW - {name} {'PASS' if holds else 'FAIL'}{tail}")
        self.ok = self.ok and holds

    def line(self, text: str):
        print(text, file=self.out)

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1


def _selected(entries: dict, selector: str, kind: str, matched=None):
    if selector == "all":
        return list(entries.items())
    wanted = []
    for token in selector.split(","):
        token = token.strip()
        if ":" in token:
            tkind, tname = token.split(":", 1)
            if tkind != kind:
                continue
            if tname not in entries:
                raise EntwineError(f"no {kind} named {tname!r}")
            wanted.append(tname)
            if matched is not None:
                matched.add(token)
        elif token in entries:
            wanted.append(token)
            if matched is not None:
                matched.add(token)
    return [(name, entries[name]) for name in wanted]


_CHECKERS = [
    ("algebras", "ALGEBRA", check_algebra),
    ("coalgebras", "COALGEBRA", check_coalgebra),
    ("entwinings", "ENTWINING", check_obj),
    ("one_cells", "ONECELL", check_one_cell),
    ("two_cells", "TWOCELL", check_two_cell),
    ("corings", "CORING", check_coring),
    ("cor_one_cells", "CORONECELL", check_cor_one_cell),
    ("cor_two_cells", "CORTWOCELL", check_cor_two_cell),
]


def run_checks(ws: Workspace, selector: str, report: Report):
    matched = set()
    for attr, kind, checker in _CHECKERS:
        for name, obj in _selected(getattr(ws, attr), selector, kind,
                                   matched):
            report.add(kind, name, checker(obj))
    if selector != "all":
        missing = {t.strip() for t in selector.split(",")} - matched
        if missing:
            raise EntwineError(
                f"selector matched nothing: {', '.join(sorted(missing))}")


# -- law suites ------------------------------------------------------------


def _composable_pairs(ws: Workspace):
    for pn, p in ws.one_cells.items():
        for mn, m in ws.one_cells.items():
            if m.cod == p.dom:
                yield pn, p, mn, m


def _composable_triples(ws: Workspace):
    for qn, q, pn, p in _composable_pairs(ws):
        for mn, m in ws.one_cells.items():
            if m.cod == p.dom:
                yield qn, q, pn, p, mn, m


def laws_cells(ws: Workspace, report: Report):
    """Every entry and every comc image passes its checker."""
    run_checks(ws, "all", report)
    for name, e in ws.entwinings.items():
        report.add("CORING", f"comc({name})", check_coring(comc_obj(e)))
    for name, f in ws.one_cells.items():
        report.add("CORONECELL", f"comc({name})",
                   check_cor_one_cell(comc_one_cell(f)))
    for name, t in ws.two_cells.items():
        report.add("CORTWOCELL", f"comc({name})",
                   check_cor_two_cell(comc_two_cell(t)))


def laws_bicategory(ws: Workspace, report: Report):
    """Closure, strict unit laws, associativity, interchange."""
    for pn, p, mn, m in _composable_pairs(ws):
        comp = compose_one_cells(p, m)
        report.add("ONECELL", f"{pn}*{mn}", check_one_cell(comp))
    for name, f in ws.one_cells.items():
        lid = compose_one_cells(identity_one_cell(f.cod), f)
        rid = compose_one_cells(f, identity_one_cell(f.dom))
        report.law(f"unit-laws({name})", lid == f and rid == f)
    for qn, q, pn, p, mn, m in _composable_triples(ws):
        left = compose_one_cells(compose_one_cells(q, p), m)
        right = compose_one_cells(q, compose_one_cells(p, m))
        report.law(f"associativity({qn},{pn},{mn})", left == right)
    # interchange on every 2x2 grid of vertically composable 2-cell pairs
    pairs = [(n1, t1, n2, t2)
             for n1, t1 in ws.two_cells.items()
             for n2, t2 in ws.two_cells.items() if t1.cod == t2.dom]
    for n1, t1, n2, t2 in pairs:
        for n3, t3, n4, t4 in pairs:
            if t1.dom.cod != t3.dom.dom:
                continue
            lhs = vcomp(hcomp(t4, t2), hcomp(t3, t1))
            rhs = hcomp(vcomp(t4, t3), vcomp(t2, t1))
            report.law(f"interchange({n4},{n3};{n2},{n1})",
                       lhs.theta == rhs.theta)


def laws_pseudofunctor(ws: Workspace, report: Report):
    """Compositors, unitors, coherence, 2-cell functoriality."""
    images = {name: comc_one_cell(f) for name, f in ws.one_cells.items()}
    for pn, p, mn, m in _composable_pairs(ws):
        c2 = compositor(p, m)
        report.add("CORTWOCELL", f"compositor({pn},{mn})",
                   check_cor_two_cell(c2))
    for qn, q, pn, p, mn, m in _composable_triples(ws):
        cq, cp, cm = images[qn], images[pn], images[mn]
        lhs = vcomp_cor(hcomp_cor(compositor(q, p),
                                  identity_cor_two_cell(cm)),
                        compositor(compose_one_cells(q, p), m))
        rhs = vcomp_cor(cor_associator(cq, cp, cm),
                        vcomp_cor(hcomp_cor(identity_cor_two_cell(cq),
                                            compositor(p, m)),
                                  compositor(q, compose_one_cells(p, m))))
        report.law(f"compositor-coherence({qn},{pn},{mn})",
                   lhs.map == rhs.map)
    for name, e in ws.entwinings.items():
        u = unitor_comparison(e)
        report.add("CORTWOCELL", f"unitor({name})", check_cor_two_cell(u))
    for name, f in ws.one_cells.items():
        cf = images[name]
        dom_name = ws.one_refs[name][0]
        cod_name = ws.one_refs[name][1]
        right = vcomp_cor(
            cor_right_unitor(cf),
            vcomp_cor(hcomp_cor(identity_cor_two_cell(cf),
                                unitor_comparison(ws.entwinings[dom_name])),
                      compositor(f, identity_one_cell(f.dom))))
        left = vcomp_cor(
            cor_left_unitor(cf),
            vcomp_cor(hcomp_cor(unitor_comparison(ws.entwinings[cod_name]),
                                identity_cor_two_cell(cf)),
                      compositor(identity_one_cell(f.cod), f)))
        ident = Matrix.identity(ws.field, cf.carrier.dim)
        report.law(f"unitor-triangles({name})",
                   right.map == ident and left.map == ident)
    for n1, t1 in ws.two_cells.items():
        for n2, t2 in ws.two_cells.items():
            if t1.cod == t2.dom:
                lhs = comc_two_cell(vcomp(t2, t1)).map
                rhs = vcomp_cor(comc_two_cell(t2), comc_two_cell(t1)).map
                report.law(f"comc-vcomp({n2},{n1})", lhs == rhs)
            if t1.dom.cod == t2.dom.dom:
                ch = comc_two_cell(hcomp(t2, t1))
                lhs = vcomp_cor(compositor(t2.cod, t1.cod), ch).map
                rhs = vcomp_cor(hcomp_cor(comc_two_cell(t2),
                                          comc_two_cell(t1)),
                                compositor(t2.dom, t1.dom)).map
                report.law(f"comc-hcomp({n2},{n1})", lhs == rhs)
    seen = set()
    for n1, f1 in ws.one_cells.items():
        for n2, f2 in ws.one_cells.items():
            if (f1.dom, f1.cod) != (f2.dom, f2.cod):
                continue
            key = tuple(sorted((n1, n2)))
            if key in seen:
                continue
            seen.add(key)
            de, dc, inj, _ = hom_dimension_report(f1, f2)
            report.law(f"comc-injective({n1},{n2})", inj,
                       f"dims {de}->{dc}")


_LEVELS = {"cells": (laws_cells,),
           "bicategory": (laws_cells, laws_bicategory),
           "pseudofunctor": (laws_cells, laws_bicategory,
                             laws_pseudofunctor)}


# -- commands --------------------------------------------------------------


def cmd_check(path: str, selector: str = "all", out=None) -> int:
    try:
        ws = load_workspace(path)
    except (OSError, ValueError, KeyError, EntwineError) as exc:
        print(f"input error: {exc}", file=out or sys.stderr)
        return 2
    report = Report(out)
    try:
        run_checks(ws, selector, report)
    except EntwineError as exc:
        print(f"input error: {exc}", file=out or sys.stderr)
        return 2
    return report.exit_code


def cmd_compose(path: str, selector: str, out_path: str, out=None) -> int:
    try:
        ws = load_workspace(path)
        names = [t.strip() for t in selector.split(",")]
        if len(names) != 2:
            raise EntwineError("compose needs --selector outer,inner")
        pn, mn = names
        p, m = ws.one_cells[pn], ws.one_cells[mn]
    except (OSError, ValueError, KeyError, EntwineError) as exc:
        print(f"input error: {exc}", file=out or sys.stderr)
        return 2
    report = Report(out)
    try:
        comp = compose_one_cells(p, m)
    except EntwineError as exc:
        print(f"semantic error: {exc}", file=out or sys.stderr)
        return 1
    report.add("ONECELL", "composite", check_one_cell(comp))
    if not report.ok:
        return 1
    sub = Workspace(ws.field)
    dom_name, cod_name = ws.one_refs[mn][0], ws.one_refs[pn][1]
    for en in {dom_name, cod_name}:
        an, cn = ws.entw_refs[en]
        sub.add_algebra(an, ws.algebras[an])
        sub.add_coalgebra(cn, ws.coalgebras[cn])
        sub.add_entwining(en, an, cn, ws.entwinings[en])
    sub.add_one_cell("composite", dom_name, cod_name, comp)
    sub.provenance["composite"] = f"compose({pn},{mn})"
    save_workspace(sub, out_path)
    return 0


def cmd_comc(path: str, selector: str, out_path: str, out=None) -> int:
    try:
        ws = load_workspace(path)
        name = selector.strip()
        if name not in (ws.entwinings.keys() | ws.one_cells.keys()
                        | ws.two_cells.keys()):
            raise EntwineError(f"no entwining entry named {name!r}")
    except (OSError, ValueError, KeyError, EntwineError) as exc:
        print(f"input error: {exc}", file=out or sys.stderr)
        return 2
    report = Report(out)
    sub = Workspace(ws.field)

    def emit_coring(ename):
        cor = comc_obj(ws.entwinings[ename])
        base = ws.entw_refs[ename][0]
        sub.add_algebra(base, ws.algebras[base])
        sub.add_coring(f"comc_{ename}", base, cor, f"comc({ename})")
        report.add("CORING", f"comc_{ename}", check_coring(cor))
        return f"comc_{ename}"

    def emit_cell(cname):
        f = ws.one_cells[cname]
        cell = comc_one_cell(f)
        dn = emit_coring(ws.one_refs[cname][0])
        cn = emit_coring(ws.one_refs[cname][1])
        sub.add_cor_one_cell(f"comc_{cname}", dn, cn, cell,
                             f"comc({cname})")
        report.add("CORONECELL", f"comc_{cname}",
                   check_cor_one_cell(cell))
        return f"comc_{cname}"

    try:
        if name in ws.entwinings:
            emit_coring(name)
        elif name in ws.one_cells:
            emit_cell(name)
        else:
            t = ws.two_cells[name]
            ct = comc_two_cell(t)
            dn = emit_cell(ws.two_refs[name][0])
            cn = emit_cell(ws.two_refs[name][1])
            sub.add_cor_two_cell(f"comc_{name}", dn, cn, ct,
                                 f"comc({name})")
            report.add("CORTWOCELL", f"comc_{name}",
                       check_cor_two_cell(ct))
    except EntwineError as exc:
        print(f"semantic error: {exc}", file=out or sys.stderr)
        return 1
    if not report.ok:
        return 1
    save_workspace(sub, out_path)
    return 0


def cmd_laws(path: str, level: str = "pseudofunctor", out=None) -> int:
    if level not in _LEVELS:
        print(f"input error: unknown level {level!r}", file=out or sys.stderr)
        return 2
    try:
        ws = load_workspace(path)
    except (OSError, ValueError, KeyError, EntwineError) as exc:
        print(f"input error: {exc}", file=out or sys.stderr)
        return 2
    report = Report(out)
    try:
        for suite in _LEVELS[level]:
            suite(ws, report)
    except EntwineError as exc:
        print(f"semantic error: {exc}", file=out or sys.stderr)
        return 1
    return report.exit_code


def cmd_gallery(field_flag: str, out_path: str, out=None) -> int:
    try:
        field = parse_field_flag(field_flag)
    except EntwineError as exc:
        print(f"input error: {exc}", file=out or sys.stderr)
        return 2
    save_workspace(build_gallery(field), out_path)
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="entwine",
        description="exact checkers for entwining structures and corings")
    sub = parser.add_subparsers(dest="verb", required=True)

    p_check = sub.add_parser("check", help="run every applicable checker")
    p_check.add_argument("file")
    p_check.add_argument("--selector", default="all")

    p_comp = sub.add_parser("compose", help="compose two named 1-cells")
    p_comp.add_argument("file")
    p_comp.add_argument("--selector", required=True,
                        help="outer,inner 1-cell names")
    p_comp.add_argument("--out", required=True)

    p_comc = sub.add_parser("comc",
                            help="coring image of a named entry")
    p_comc.add_argument("file")
    p_comc.add_argument("--selector", required=True)
    p_comc.add_argument("--out", required=True)

    p_laws = sub.add_parser("laws", help="run the law suites")
    p_laws.add_argument("file")
    p_laws.add_argument("--level", default="pseudofunctor",
                        choices=sorted(_LEVELS))

    p_gal = sub.add_parser("gallery", help="emit the example workspace")
    p_gal.add_argument("--field", default="rational")
    p_gal.add_argument("--out", required=True)

    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    if args.verb == "check":
        return cmd_check(args.file, args.selector)
    if args.verb == "compose":
        return cmd_compose(args.file, args.selector, args.out)
    if args.verb == "comc":
        return cmd_comc(args.file, args.selector, args.out)
    if args.verb == "laws":
        return cmd_laws(args.file, args.level)
    return cmd_gallery(args.field, args.out)


if __name__ == "__main__":
    sys.exit(main())
