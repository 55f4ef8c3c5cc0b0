"""The bicategory of entwinings: cells, compositions, exact checkers.

0-cells are entwinings (A, C, psi) over the session field, 1-cells are
triples (M, alpha, gamma), 2-cells are equivariant maps theta.  All
ground rings coincide with the field k, so unitors and associators of
the underlying bimodule bicategory are strict and every coherence check
reduces to an exact matrix equality.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algstruct import (Algebra, Coalgebra, CheckReport, _Checker,
                        bialgebra_compatibility, check_algebra,
                        check_coalgebra)
from .errors import (DimensionMismatch, NotABialgebra, NotAMorphism,
                     NotComposable, NotParallel)
from .exactlin import FieldSpec, Matrix, compose, flip, kron


@dataclass(frozen=True)
class EntwObj:
    """An entwining psi : C (x) A -> A (x) C."""

    algebra: Algebra
    coalgebra: Coalgebra
    psi: Matrix

    def __post_init__(self):
        a, c = self.algebra.dim, self.coalgebra.dim
        if self.psi.shape != (a * c, c * a):
            raise DimensionMismatch(
                f"psi {self.psi.shape}, expected {(a * c, c * a)}")
        if self.algebra.field != self.coalgebra.field:
            raise DimensionMismatch("algebra and coalgebra fields differ")

    @property
    def field(self) -> FieldSpec:
        return self.psi.field


@dataclass(frozen=True)
class EntwOneCell:
    """A triple (M, alpha, gamma) : dom -> cod.

    With dom = (A, C, psi) and cod = (B, D, chi):
    alpha : B (x) M -> M (x) A and gamma : D (x) M -> M (x) C.
    """

    dom: EntwObj
    cod: EntwObj
    dimM: int
    alpha: Matrix
    gamma: Matrix

    def __post_init__(self):
        a, c = self.dom.algebra.dim, self.dom.coalgebra.dim
        b, d = self.cod.algebra.dim, self.cod.coalgebra.dim
        m = self.dimM
        if self.alpha.shape != (m * a, b * m):
            raise DimensionMismatch(
                f"alpha {self.alpha.shape}, expected {(m * a, b * m)}")
        if self.gamma.shape != (m * c, d * m):
            raise DimensionMismatch(
                f"gamma {self.gamma.shape}, expected {(m * c, d * m)}")

    @property
    def field(self) -> FieldSpec:
        return self.alpha.field


@dataclass(frozen=True)
class EntwTwoCell:
    """theta : dom => cod between parallel 1-cells, as a map M -> N."""

    dom: EntwOneCell
    cod: EntwOneCell
    theta: Matrix

    def __post_init__(self):
        if self.dom.dom != self.cod.dom or self.dom.cod != self.cod.cod:
            raise NotParallel("2-cell endpoints are not parallel")
        if self.theta.shape != (self.cod.dimM, self.dom.dimM):
            raise DimensionMismatch(
                f"theta {self.theta.shape}, expected "
                f"{(self.cod.dimM, self.dom.dimM)}")


# -- checkers -------------------------------------------------------------


def check_obj(e: EntwObj) -> CheckReport:
    a = e.algebra
    c = e.coalgebra
    ia = Matrix.identity(e.field, a.dim)
    ic = Matrix.identity(e.field, c.dim)
    chk = _Checker()
    chk.equal(
        "E1-mult-pentagon",
        compose(e.psi, kron(ic, a.mult)),
        compose(kron(a.mult, ic),
                compose(kron(ia, e.psi), kron(e.psi, ia))),
    )
    chk.equal(
        "E2-comult-pentagon",
        compose(kron(ia, c.comult), e.psi),
        compose(kron(e.psi, ic),
                compose(kron(ic, e.psi), kron(c.comult, ia))),
    )
    chk.equal("E3-unit-triangle",
              compose(e.psi, kron(ic, a.unit)), kron(a.unit, ic))
    chk.equal("E4-counit-triangle",
              compose(kron(ia, c.counit), e.psi), kron(c.counit, ia))
    return chk.report()


def check_one_cell(f: EntwOneCell) -> CheckReport:
    dom, cod = f.dom, f.cod
    a, c = dom.algebra, dom.coalgebra
    b, d = cod.algebra, cod.coalgebra
    field = f.field
    im = Matrix.identity(field, f.dimM)
    ia = Matrix.identity(field, a.dim)
    ic = Matrix.identity(field, c.dim)
    ib = Matrix.identity(field, b.dim)
    id_ = Matrix.identity(field, d.dim)
    chk = _Checker()
    chk.equal(
        "hexagon",
        compose(kron(im, dom.psi),
                compose(kron(f.gamma, ia), kron(id_, f.alpha))),
        compose(kron(f.alpha, ic),
                compose(kron(ib, f.gamma), kron(cod.psi, im))),
    )
    chk.equal(
        "alpha-pentagon",
        compose(f.alpha, kron(b.mult, im)),
        compose(kron(im, a.mult),
                compose(kron(f.alpha, ia), kron(ib, f.alpha))),
    )
    chk.equal(
        "gamma-pentagon",
        compose(kron(im, c.comult), f.gamma),
        compose(kron(f.gamma, ic),
                compose(kron(id_, f.gamma), kron(d.comult, im))),
    )
    chk.equal("unit-triangle",
              compose(f.alpha, kron(b.unit, im)), kron(im, a.unit))
    chk.equal("counit-triangle",
              compose(kron(im, c.counit), f.gamma), kron(d.counit, im))
    return chk.report()


def check_two_cell(t: EntwTwoCell) -> CheckReport:
    dom, cod = t.dom, t.cod
    field = t.theta.field
    ia = Matrix.identity(field, dom.dom.algebra.dim)
    ic = Matrix.identity(field, dom.dom.coalgebra.dim)
    ib = Matrix.identity(field, dom.cod.algebra.dim)
    id_ = Matrix.identity(field, dom.cod.coalgebra.dim)
    chk = _Checker()
    chk.equal(
        "alpha-square",
        compose(kron(t.theta, ia), dom.alpha),
        compose(cod.alpha, kron(ib, t.theta)),
    )
    chk.equal(
        "gamma-square",
        compose(kron(t.theta, ic), dom.gamma),
        compose(cod.gamma, kron(id_, t.theta)),
    )
    return chk.report()


# -- identities and compositions ------------------------------------------


def identity_one_cell(e: EntwObj) -> EntwOneCell:
    """The 1-dimensional carrier k with strict-unitor alpha and gamma."""
    return EntwOneCell(
        dom=e, cod=e, dimM=1,
        alpha=Matrix.identity(e.field, e.algebra.dim),
        gamma=Matrix.identity(e.field, e.coalgebra.dim),
    )


def identity_two_cell(f: EntwOneCell) -> EntwTwoCell:
    return EntwTwoCell(f, f, Matrix.identity(f.field, f.dimM))


def compose_one_cells(p: EntwOneCell, m: EntwOneCell) -> EntwOneCell:
    """The composite p after m, carrier P (x) M."""
    if m.cod != p.dom:
        raise NotComposable("cod of inner cell differs from dom of outer")
    field = m.field
    ip = Matrix.identity(field, p.dimM)
    im = Matrix.identity(field, m.dimM)
    alpha = compose(kron(ip, m.alpha), kron(p.alpha, im))
    gamma = compose(kron(ip, m.gamma), kron(p.gamma, im))
    return EntwOneCell(dom=m.dom, cod=p.cod, dimM=p.dimM * m.dimM,
                       alpha=alpha, gamma=gamma)


def vcomp(t2: EntwTwoCell, t1: EntwTwoCell) -> EntwTwoCell:
    if t1.cod != t2.dom:
        raise NotComposable("vertical composition endpoints differ")
    return EntwTwoCell(t1.dom, t2.cod, compose(t2.theta, t1.theta))


def hcomp(t2: EntwTwoCell, t1: EntwTwoCell) -> EntwTwoCell:
    """Horizontal composite; t2 lives over the outer 1-cells."""
    if t1.dom.cod != t2.dom.dom:
        raise NotComposable("horizontal composition boundaries differ")
    return EntwTwoCell(
        compose_one_cells(t2.dom, t1.dom),
        compose_one_cells(t2.cod, t1.cod),
        kron(t2.theta, t1.theta),
    )


def associator(q: EntwOneCell, p: EntwOneCell,
               m: EntwOneCell) -> EntwTwoCell:
    """The coherence 2-cell q.(p.m) => (q.p).m; strict over a field."""
    inner = compose_one_cells(q, compose_one_cells(p, m))
    outer = compose_one_cells(compose_one_cells(q, p), m)
    return EntwTwoCell(inner, outer,
                       Matrix.identity(m.field, q.dimM * p.dimM * m.dimM))


# -- gallery builders ------------------------------------------------------


def flip_entwining(a: Algebra, c: Coalgebra) -> EntwObj:
    """psi = the tensor symmetry; entwines any pair over a field."""
    if a.field != c.field:
        raise DimensionMismatch("fields differ")
    return EntwObj(a, c, flip(a.field, c.dim, a.dim))


def bialgebra_entwining(h) -> EntwObj:
    """The canonical entwining psi(c (x) a) = a_(1) (x) c.a_(2).

    ``h`` is an (Algebra, Coalgebra) pair on one carrier satisfying
    bialgebra compatibility.
    """
    alg, coalg = h
    rep = bialgebra_compatibility(alg, coalg)
    if not rep.passed:
        raise NotABialgebra(str(rep))
    n = alg.dim
    field = alg.field
    ih = Matrix.identity(field, n)
    tau = flip(field, n, n)
    psi = compose(kron(ih, alg.mult),
                  compose(kron(tau, ih), kron(ih, coalg.comult)))
    return EntwObj(alg, coalg, psi)


def morphism_one_cell(dom: EntwObj, cod: EntwObj, f: Matrix, g: Matrix,
                      strict: bool = True) -> EntwOneCell:
    """1-cell with trivial carrier from an algebra map f and coalgebra map g.

    f maps cod's algebra to dom's algebra and g maps cod's coalgebra to
    dom's coalgebra (the variance forced by the 1-cell shape).  With
    ``strict`` the morphism axioms are verified up front; pass False to
    build deliberately broken cells for negative tests.
    """
    a, c = dom.algebra, dom.coalgebra
    b, d = cod.algebra, cod.coalgebra
    if f.shape != (a.dim, b.dim) or g.shape != (c.dim, d.dim):
        raise DimensionMismatch(
            f"morphism maps {f.shape}, {g.shape}")
    if strict:
        if compose(f, b.mult) != compose(a.mult, kron(f, f)):
            raise NotAMorphism("f is not multiplicative")
        if compose(f, b.unit) != a.unit:
            raise NotAMorphism("f is not unital")
        if compose(c.comult, g) != compose(kron(g, g), d.comult):
            raise NotAMorphism("g is not comultiplicative")
        if compose(c.counit, g) != d.counit:
            raise NotAMorphism("g is not counital")
    return EntwOneCell(dom=dom, cod=cod, dimM=1, alpha=f, gamma=g)


def scalar_two_cell(c, f: EntwOneCell) -> EntwTwoCell:
    """The endo-2-cell c . id on a 1-cell."""
    return EntwTwoCell(f, f, Matrix.identity(f.field, f.dimM).scale(c))
