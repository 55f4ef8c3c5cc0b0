"""Street's bicategory of corings: cells, compositions, exact checkers.

A coring is a comonoid in A-A-bimodules; its comultiplication lands in
the quotient tensor 𝒞 (x)_A 𝒞, so every diagram here is chased through
deterministic quotient presentations.  The ``TensorWord`` helper tracks
a parenthesized tensor of bimodules together with its presentation over
the flat k-ambient, which is what lets different bracketings be compared
by an exact coherence isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

from .algstruct import (Algebra, Bimodule, CheckReport, Failure, _Checker,
                        regular_bimodule)
from .errors import (DimensionMismatch, DoesNotFactor, NotComposable,
                     NotInvertible, NotParallel)
from .exactlin import Matrix, compose, inverse, kron
from .qtensor import (QuotientPresentation, descend, pres_compose,
                      pres_kron, tensor_over, trivial_presentation,
                      unit_coherence)


# -- tensor words ---------------------------------------------------------


@dataclass(frozen=True)
class TensorWord:
    """A bracketed tensor of bimodules, presented over the flat ambient.

    ``module`` is the resulting subquotient bimodule in its own
    coordinates; ``outer`` presents it over the product of the two
    top-level factor coordinate spaces; ``full`` presents it over the
    product of all leaf dimensions.
    """

    module: Bimodule
    flat_dims: Tuple[int, ...]
    full: QuotientPresentation
    outer: QuotientPresentation


@lru_cache(maxsize=None)
def leaf(b: Bimodule) -> TensorWord:
    triv = trivial_presentation(b.field, b.dim)
    return TensorWord(b, (b.dim,), triv, triv)


@lru_cache(maxsize=None)
def wtensor(x: TensorWord, y: TensorWord) -> TensorWord:
    """Tensor over the shared middle algebra x.module.right = y.module.left."""
    xm, ym = x.module, y.module
    if xm.right != ym.left:
        raise NotComposable("middle algebras differ")
    field = xm.field
    q = tensor_over(xm.ract, ym.lact, xm.dim, xm.right.dim, ym.dim)
    p, s = q.projection, q.section
    ib = Matrix.identity(field, xm.left.dim)
    ia = Matrix.identity(field, ym.right.dim)
    ix = Matrix.identity(field, xm.dim)
    iy = Matrix.identity(field, ym.dim)
    lact = compose(p, compose(kron(xm.lact, iy), kron(ib, s)))
    ract = compose(p, compose(kron(ix, ym.ract), kron(s, ia)))
    module = Bimodule(xm.left, ym.right, q.quotient_dim, lact, ract)
    full = pres_compose(pres_kron(x.full, y.full), q)
    return TensorWord(module, x.flat_dims + y.flat_dims, full, q)


def word_iso(src: TensorWord, dst: TensorWord) -> Matrix:
    """Coherence iso between two bracketings of the same flat tensor."""
    if src.flat_dims != dst.flat_dims:
        raise DimensionMismatch(
            f"flat shapes differ: {src.flat_dims} vs {dst.flat_dims}")
    iso = descend(Matrix.identity(src.full.projection.field,
                                  src.full.ambient_dim),
                  src.full, dst.full)
    if iso.rows != iso.cols or inverse(iso) is None:
        raise NotInvertible("bracketings do not present the same module")
    return iso


# -- cells ----------------------------------------------------------------


@dataclass(frozen=True)
class Coring:
    """(carrier, comult, counit) over the base algebra.

    ``comult`` maps carrier coordinates into the quotient coordinates of
    carrier (x)_A carrier (the presentation is recomputed on demand and
    is deterministic); ``counit`` maps the carrier to the base algebra.
    """

    base: Algebra
    carrier: Bimodule
    comult: Matrix
    counit: Matrix

    def __post_init__(self):
        if self.carrier.left != self.base or self.carrier.right != self.base:
            raise DimensionMismatch("carrier is not an A-A-bimodule")
        q2 = self.square_word()
        if self.comult.shape != (q2.module.dim, self.carrier.dim):
            raise DimensionMismatch(
                f"comult {self.comult.shape}, expected "
                f"{(q2.module.dim, self.carrier.dim)}")
        if self.counit.shape != (self.base.dim, self.carrier.dim):
            raise DimensionMismatch(
                f"counit {self.counit.shape}, expected "
                f"{(self.base.dim, self.carrier.dim)}")

    @property
    def field(self):
        return self.comult.field

    def square_word(self) -> TensorWord:
        """carrier (x)_A carrier with its presentation."""
        c = leaf(self.carrier)
        return wtensor(c, c)


@dataclass(frozen=True)
class CorOneCell:
    """(carrier, zeta) : dom -> cod with carrier a cod.base-dom.base bimodule.

    zeta maps the quotient coordinates of cod.carrier (x)_B carrier to
    those of carrier (x)_A dom.carrier.
    """

    dom: Coring
    cod: Coring
    carrier: Bimodule
    zeta: Matrix

    def __post_init__(self):
        if (self.carrier.left != self.cod.base
                or self.carrier.right != self.dom.base):
            raise DimensionMismatch("carrier sides do not match the corings")
        src = wtensor(leaf(self.cod.carrier), leaf(self.carrier))
        tgt = wtensor(leaf(self.carrier), leaf(self.dom.carrier))
        if self.zeta.shape != (tgt.module.dim, src.module.dim):
            raise DimensionMismatch(
                f"zeta {self.zeta.shape}, expected "
                f"{(tgt.module.dim, src.module.dim)}")


@dataclass(frozen=True)
class CorTwoCell:
    """A bimodule map between the carriers of parallel 1-cells."""

    dom: CorOneCell
    cod: CorOneCell
    map: Matrix

    def __post_init__(self):
        if self.dom.dom != self.cod.dom or self.dom.cod != self.cod.cod:
            raise NotParallel("2-cell endpoints are not parallel")
        if self.map.shape != (self.cod.carrier.dim, self.dom.carrier.dim):
            raise DimensionMismatch(
                f"map {self.map.shape}, expected "
                f"{(self.cod.carrier.dim, self.dom.carrier.dim)}")


# -- checkers -------------------------------------------------------------


def check_coring(c: Coring) -> CheckReport:
    car = c.carrier
    base = c.base
    field = c.field
    n = car.dim
    ia = Matrix.identity(field, base.dim)
    in_ = Matrix.identity(field, n)
    chk = _Checker()

    chk.equal("comult left module map",
              compose(c.comult, car.lact),
              compose(c.square_word().module.lact, kron(ia, c.comult)))
    chk.equal("comult right module map",
              compose(c.comult, car.ract),
              compose(c.square_word().module.ract, kron(c.comult, ia)))
    chk.equal("counit left module map",
              compose(c.counit, car.lact),
              compose(base.mult, kron(ia, c.counit)))
    chk.equal("counit right module map",
              compose(c.counit, car.ract),
              compose(base.mult, kron(c.counit, ia)))

    w2 = c.square_word()
    lc = leaf(car)
    try:
        w3_left = wtensor(w2, lc)
        w3_right = wtensor(lc, w2)
        route_left = compose(
            descend(kron(c.comult, in_), w2.outer, w3_left.outer), c.comult)
        route_right = compose(
            descend(kron(in_, c.comult), w2.outer, w3_right.outer), c.comult)
        iso = word_iso(w3_left, w3_right)
        chk.equal("coassociativity", compose(iso, route_left), route_right)
    except (DoesNotFactor, NotInvertible) as exc:
        chk.fail(f"coassociativity ({exc})")

    reg = leaf(regular_bimodule(base))
    try:
        w_ac = wtensor(reg, lc)
        u_left = unit_coherence(w_ac.outer, car.lact)
        chk.equal(
            "left counit law",
            compose(u_left,
                    compose(descend(kron(c.counit, in_), w2.outer,
                                    w_ac.outer), c.comult)),
            in_)
    except (DoesNotFactor, NotInvertible) as exc:
        chk.fail(f"left counit law ({exc})")
    try:
        w_ca = wtensor(lc, reg)
        u_right = unit_coherence(w_ca.outer, car.ract)
        chk.equal(
            "right counit law",
            compose(u_right,
                    compose(descend(kron(in_, c.counit), w2.outer,
                                    w_ca.outer), c.comult)),
            in_)
    except (DoesNotFactor, NotInvertible) as exc:
        chk.fail(f"right counit law ({exc})")
    return chk.report()


def check_cor_one_cell(f: CorOneCell) -> CheckReport:
    """Bimodule property of zeta, the Street pentagon, counit compatibility."""
    field = f.zeta.field
    cC, cD = f.dom, f.cod
    M = f.carrier
    Cc, Dc = cC.carrier, cD.carrier
    b, a = cD.base.dim, cC.base.dim
    lM, lC, lD = leaf(M), leaf(Cc), leaf(Dc)
    w_dm = wtensor(lD, lM)
    w_mc = wtensor(lM, lC)
    ib = Matrix.identity(field, b)
    ia = Matrix.identity(field, a)
    im = Matrix.identity(field, M.dim)
    ic = Matrix.identity(field, Cc.dim)
    id_ = Matrix.identity(field, Dc.dim)
    chk = _Checker()

    chk.equal("zeta left module map",
              compose(f.zeta, w_dm.module.lact),
              compose(w_mc.module.lact, kron(ib, f.zeta)))
    chk.equal("zeta right module map",
              compose(f.zeta, w_dm.module.ract),
              compose(w_mc.module.ract, kron(f.zeta, ia)))

    # pentagon: (M (x) Delta_C) . zeta = (zeta (x) C).(D (x) zeta).(Delta_D (x) M)
    try:
        w2c = cC.square_word()
        w2d = cD.square_word()
        w_m_cc = wtensor(lM, w2c)
        lhs = compose(descend(kron(im, cC.comult), w_mc.outer, w_m_cc.outer),
                      f.zeta)

        w_dd_m = wtensor(w2d, lM)
        step1 = descend(kron(cD.comult, im), w_dm.outer, w_dd_m.outer)
        w_d_dm = wtensor(lD, w_dm)
        step2 = word_iso(w_dd_m, w_d_dm)
        w_d_mc = wtensor(lD, w_mc)
        step3 = descend(kron(id_, f.zeta), w_d_dm.outer, w_d_mc.outer)
        w_dm_c = wtensor(w_dm, lC)
        step4 = word_iso(w_d_mc, w_dm_c)
        w_mc_c = wtensor(w_mc, lC)
        step5 = descend(kron(f.zeta, ic), w_dm_c.outer, w_mc_c.outer)
        step6 = word_iso(w_mc_c, w_m_cc)
        rhs = compose(step6, compose(step5, compose(
            step4, compose(step3, compose(step2, step1)))))
        chk.equal("street pentagon", lhs, rhs)
    except (DoesNotFactor, NotInvertible) as exc:
        chk.fail(f"street pentagon ({exc})")

    # counit compatibility through the unit coherences
    try:
        reg_b = leaf(regular_bimodule(cD.base))
        w_bm = wtensor(reg_b, lM)
        u_bm = unit_coherence(w_bm.outer, M.lact)
        lhs = compose(u_bm, descend(kron(cD.counit, im), w_dm.outer,
                                    w_bm.outer))
        reg_a = leaf(regular_bimodule(cC.base))
        w_ma = wtensor(lM, reg_a)
        u_ma = unit_coherence(w_ma.outer, M.ract)
        rhs = compose(u_ma,
                      compose(descend(kron(im, cC.counit), w_mc.outer,
                                      w_ma.outer), f.zeta))
        chk.equal("counit compatibility", lhs, rhs)
    except (DoesNotFactor, NotInvertible) as exc:
        chk.fail(f"counit compatibility ({exc})")
    return chk.report()


def check_cor_two_cell(t: CorTwoCell) -> CheckReport:
    field = t.map.field
    m1, m2 = t.dom.carrier, t.cod.carrier
    cC, cD = t.dom.dom, t.dom.cod
    ib = Matrix.identity(field, cD.base.dim)
    ia = Matrix.identity(field, cC.base.dim)
    ic = Matrix.identity(field, cC.carrier.dim)
    id_ = Matrix.identity(field, cD.carrier.dim)
    chk = _Checker()
    chk.equal("left module map",
              compose(t.map, m1.lact),
              compose(m2.lact, kron(ib, t.map)))
    chk.equal("right module map",
              compose(t.map, m1.ract),
              compose(m2.ract, kron(t.map, ia)))
    try:
        ld, lc = leaf(cD.carrier), leaf(cC.carrier)
        w_dm1 = wtensor(ld, leaf(m1))
        w_dm2 = wtensor(ld, leaf(m2))
        dy = descend(kron(id_, t.map), w_dm1.outer, w_dm2.outer)
        w_m1c = wtensor(leaf(m1), lc)
        w_m2c = wtensor(leaf(m2), lc)
        yc = descend(kron(t.map, ic), w_m1c.outer, w_m2c.outer)
        chk.equal("zeta square",
                  compose(yc, t.dom.zeta), compose(t.cod.zeta, dy))
    except DoesNotFactor as exc:
        chk.fail(f"zeta square ({exc})")
    return chk.report()


# -- identities, compositions, coherences ---------------------------------


def trivial_coring(a: Algebra) -> Coring:
    """A itself: comult the inverse unit coherence, counit the identity."""
    car = regular_bimodule(a)
    w2 = wtensor(leaf(car), leaf(car))
    u = unit_coherence(w2.outer, a.mult)
    inv = inverse(u)
    assert inv is not None
    return Coring(a, car, inv, Matrix.identity(a.field, a.dim))


def identity_cor_one_cell(c: Coring) -> CorOneCell:
    """Carrier = the base algebra; zeta the composite of unit coherences."""
    car = regular_bimodule(c.base)
    w_ca = wtensor(leaf(c.carrier), leaf(car))
    w_ac = wtensor(leaf(car), leaf(c.carrier))
    u_right = unit_coherence(w_ca.outer, c.carrier.ract)
    u_left = unit_coherence(w_ac.outer, c.carrier.lact)
    inv = inverse(u_left)
    assert inv is not None
    return CorOneCell(dom=c, cod=c, carrier=car,
                      zeta=compose(inv, u_right))


def identity_cor_two_cell(f: CorOneCell) -> CorTwoCell:
    return CorTwoCell(f, f, Matrix.identity(f.zeta.field, f.carrier.dim))


def compose_cor_one_cells(p: CorOneCell, m: CorOneCell) -> CorOneCell:
    """Carrier P (x)_B M; zeta chases through both zetas and coherences."""
    if m.cod != p.dom:
        raise NotComposable("cod of inner cell differs from dom of outer")
    field = m.zeta.field
    lE = leaf(p.cod.carrier)
    lP = leaf(p.carrier)
    lD = leaf(p.dom.carrier)
    lM = leaf(m.carrier)
    lC = leaf(m.dom.carrier)
    im = Matrix.identity(field, m.carrier.dim)
    ip = Matrix.identity(field, p.carrier.dim)

    w_pm = wtensor(lP, lM)
    w_e_pm = wtensor(lE, w_pm)
    w_ep_m = wtensor(wtensor(lE, lP), lM)
    step1 = word_iso(w_e_pm, w_ep_m)
    w_pd_m = wtensor(wtensor(lP, lD), lM)
    step2 = descend(kron(p.zeta, im), w_ep_m.outer, w_pd_m.outer)
    w_p_dm = wtensor(lP, wtensor(lD, lM))
    step3 = word_iso(w_pd_m, w_p_dm)
    w_p_mc = wtensor(lP, wtensor(lM, lC))
    step4 = descend(kron(ip, m.zeta), w_p_dm.outer, w_p_mc.outer)
    w_pm_c = wtensor(w_pm, lC)
    step5 = word_iso(w_p_mc, w_pm_c)
    zeta = compose(step5, compose(step4, compose(
        step3, compose(step2, step1))))
    return CorOneCell(dom=m.dom, cod=p.cod, carrier=w_pm.module, zeta=zeta)


def vcomp_cor(t2: CorTwoCell, t1: CorTwoCell) -> CorTwoCell:
    if t1.cod != t2.dom:
        raise NotComposable("vertical composition endpoints differ")
    return CorTwoCell(t1.dom, t2.cod, compose(t2.map, t1.map))


def hcomp_cor(t2: CorTwoCell, t1: CorTwoCell) -> CorTwoCell:
    """Horizontal composite; t2 lives over the outer 1-cells."""
    if t1.dom.cod != t2.dom.dom:
        raise NotComposable("horizontal composition boundaries differ")
    dom = compose_cor_one_cells(t2.dom, t1.dom)
    cod = compose_cor_one_cells(t2.cod, t1.cod)
    w1 = wtensor(leaf(t2.dom.carrier), leaf(t1.dom.carrier))
    w2 = wtensor(leaf(t2.cod.carrier), leaf(t1.cod.carrier))
    return CorTwoCell(dom, cod,
                      descend(kron(t2.map, t1.map), w1.outer, w2.outer))


def cor_associator(x: CorOneCell, y: CorOneCell,
                   z: CorOneCell) -> CorTwoCell:
    """Coherence 2-cell x.(y.z) => (x.y).z, induced on presentations."""
    inner = compose_cor_one_cells(x, compose_cor_one_cells(y, z))
    outer = compose_cor_one_cells(compose_cor_one_cells(x, y), z)
    lx, ly, lz = leaf(x.carrier), leaf(y.carrier), leaf(z.carrier)
    iso = word_iso(wtensor(lx, wtensor(ly, lz)),
                   wtensor(wtensor(lx, ly), lz))
    return CorTwoCell(inner, outer, iso)


def cor_left_unitor(x: CorOneCell) -> CorTwoCell:
    """id_cor(cod) . x => x via the unit coherence."""
    composite = compose_cor_one_cells(identity_cor_one_cell(x.cod), x)
    w = wtensor(leaf(regular_bimodule(x.cod.base)), leaf(x.carrier))
    return CorTwoCell(composite, x, unit_coherence(w.outer, x.carrier.lact))


def cor_right_unitor(x: CorOneCell) -> CorTwoCell:
    """x . id_cor(dom) => x via the unit coherence."""
    composite = compose_cor_one_cells(x, identity_cor_one_cell(x.dom))
    w = wtensor(leaf(x.carrier), leaf(regular_bimodule(x.dom.base)))
    return CorTwoCell(composite, x, unit_coherence(w.outer, x.carrier.ract))
