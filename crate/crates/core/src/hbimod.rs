//! 2-term bimodules up to homotopy over an algebra and over a difference
//! algebra, and their semidirect products.

use crate::ainf2::{check_ainf2, expect_lin, expect_multi, AInf2, TwoTermComplex};
use crate::diffainf2::{DiffOp2, TwoTermDiffAInf};
use crate::diffalg::{AssocAlgebra, DifferenceAlgebra};
use crate::exactlin::{compose_lin, DirectSum, Lin, MultiMap, Space};
use crate::report::Report;
use crate::twoalg::{DiffAss2, TwoVec};
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HBimod2 {
    pub m0: Space,
    pub m1: Space,
    /// `M1 → M0`
    pub delta: Lin,
    /// `A × M0 → M0`
    pub left0: MultiMap,
    /// `M0 × A → M0`
    pub right0: MultiMap,
    /// `A × M1 → M1`
    pub left1: MultiMap,
    /// `M1 × A → M1`
    pub right1: MultiMap,
    /// `A × A × M0 → M1`
    pub nu_aav: MultiMap,
    /// `A × M0 × A → M1`
    pub nu_ava: MultiMap,
    /// `M0 × A × A → M1`
    pub nu_vaa: MultiMap,
}

impl HBimod2 {
    /// Honest bimodules `M0`, `M1` with an equivariant `δ` and `ν = 0`.
    pub fn strict(m0: Space, m1: Space, delta: Lin, left0: MultiMap, right0: MultiMap, left1: MultiMap, right1: MultiMap) -> Self {
        let a = left0.src(0).clone();
        let nu = |srcs: Vec<Space>| MultiMap::zeros(srcs, m1.clone());
        HBimod2 {
            nu_aav: nu(vec![a.clone(), a.clone(), m0.clone()]),
            nu_ava: nu(vec![a.clone(), m0.clone(), a.clone()]),
            nu_vaa: nu(vec![m0.clone(), a.clone(), a]),
            m0,
            m1,
            delta,
            left0,
            right0,
            left1,
            right1,
        }
    }

    fn check_shape(&self, alg: &AssocAlgebra) -> Result<()> {
        let (a, v, h) = (alg.dim(), self.m0.dim, self.m1.dim);
        expect_lin(&self.delta, h, v, "δ")?;
        expect_multi(&self.left0, &[a, v], v, "A×M0 action")?;
        expect_multi(&self.right0, &[v, a], v, "M0×A action")?;
        expect_multi(&self.left1, &[a, h], h, "A×M1 action")?;
        expect_multi(&self.right1, &[h, a], h, "M1×A action")?;
        expect_multi(&self.nu_aav, &[a, a, v], h, "ν(a, b, v)")?;
        expect_multi(&self.nu_ava, &[a, v, a], h, "ν(a, v, b)")?;
        expect_multi(&self.nu_vaa, &[v, a, a], h, "ν(v, a, b)")
    }
}

/// Equivariance of `δ`, the six homotopy families and (id-nu1)–(id-nu4).
pub fn check_hbimod(alg: &AssocAlgebra, hb: &HBimod2) -> Result<Report> {
    hb.check_shape(alg)?;
    let mult = &alg.mult;
    let (delta, l0, r0, l1, r1) = (&hb.delta, &hb.left0, &hb.right0, &hb.left1, &hb.right1);
    let (aav, ava, vaa) = (&hb.nu_aav, &hb.nu_ava, &hb.nu_vaa);
    let mut r = Report::new("bimodule up to homotopy");
    r.expect_equal("δ(aξ) = aδ(ξ)", &l1.postcompose(delta)?, &l0.precompose(1, delta)?)?;
    r.expect_equal("δ(ξa) = δ(ξ)a", &r1.postcompose(delta)?, &r0.precompose(0, delta)?)?;
    r.expect_equal("a(bv) − (ab)v", &l0.insert(1, l0)?.sub(&l0.insert(0, mult)?)?, &aav.postcompose(delta)?)?;
    r.expect_equal("a(vb) − (av)b", &l0.insert(1, r0)?.sub(&r0.insert(0, l0)?)?, &ava.postcompose(delta)?)?;
    r.expect_equal("v(ab) − (va)b", &r0.insert(1, mult)?.sub(&r0.insert(0, r0)?)?, &vaa.postcompose(delta)?)?;
    r.expect_equal("a(bξ) − (ab)ξ", &l1.insert(1, l1)?.sub(&l1.insert(0, mult)?)?, &aav.precompose(2, delta)?)?;
    r.expect_equal("a(ξb) − (aξ)b", &l1.insert(1, r1)?.sub(&r1.insert(0, l1)?)?, &ava.precompose(1, delta)?)?;
    r.expect_equal("ξ(ab) − (ξa)b", &r1.insert(1, mult)?.sub(&r1.insert(0, r1)?)?, &vaa.precompose(0, delta)?)?;
    let nu1 = MultiMap::sum(&[
        l1.insert(1, aav)?,
        aav.insert(0, mult)?.neg(),
        aav.insert(1, mult)?,
        aav.insert(2, l0)?.neg(),
    ])?;
    r.expect_zero("(id-nu1)", &nu1)?;
    let nu2 = MultiMap::sum(&[
        l1.insert(1, ava)?,
        ava.insert(0, mult)?.neg(),
        ava.insert(1, l0)?,
        aav.insert(2, r0)?.neg(),
        r1.insert(0, aav)?,
    ])?;
    r.expect_zero("(id-nu2)", &nu2)?;
    let nu3 = MultiMap::sum(&[
        l1.insert(1, vaa)?,
        vaa.insert(0, l0)?.neg(),
        ava.insert(1, r0)?,
        ava.insert(2, mult)?.neg(),
        r1.insert(0, ava)?,
    ])?;
    r.expect_zero("(id-nu3)", &nu3)?;
    let nu4 = MultiMap::sum(&[
        vaa.insert(0, r0)?,
        vaa.insert(1, mult)?.neg(),
        vaa.insert(2, mult)?,
        r1.insert(0, vaa)?.neg(),
    ])?;
    r.expect_zero("(id-nu4)", &nu4)?;
    Ok(r)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffHBimod2 {
    pub base: HBimod2,
    pub delta0: Lin,
    pub delta1: Lin,
    /// `A × M0 → M1`
    pub theta_am: MultiMap,
    /// `M0 × A → M1`
    pub theta_ma: MultiMap,
}

impl DiffHBimod2 {
    /// `θ = 0` on top of `hb`.
    pub fn strict(hb: HBimod2, delta0: Lin, delta1: Lin) -> Self {
        let a = hb.left0.src(0).clone();
        DiffHBimod2 {
            theta_am: MultiMap::zeros(vec![a.clone(), hb.m0.clone()], hb.m1.clone()),
            theta_ma: MultiMap::zeros(vec![hb.m0.clone(), a], hb.m1.clone()),
            base: hb,
            delta0,
            delta1,
        }
    }
}

/// Everything in [`check_hbimod`], then `Δ0δ = δΔ1` and (condi1)–(condi7).
pub fn check_diff_hbimod(da: &DifferenceAlgebra, dhb: &DiffHBimod2) -> Result<Report> {
    let hb = &dhb.base;
    let mut r = check_hbimod(&da.alg, hb)?;
    r.subject = "difference bimodule up to homotopy".into();
    let (a, v, h) = (da.space().dim, hb.m0.dim, hb.m1.dim);
    expect_lin(&da.d, a, a, "d")?;
    expect_lin(&dhb.delta0, v, v, "Δ0")?;
    expect_lin(&dhb.delta1, h, h, "Δ1")?;
    expect_multi(&dhb.theta_am, &[a, v], h, "θ(a, v)")?;
    expect_multi(&dhb.theta_ma, &[v, a], h, "θ(v, a)")?;
    let mult = da.mult();
    let (d, d0, d1) = (&da.d, &dhb.delta0, &dhb.delta1);
    let (delta, l0, r0, l1, r1) = (&hb.delta, &hb.left0, &hb.right0, &hb.left1, &hb.right1);
    let (t_am, t_ma) = (&dhb.theta_am, &dhb.theta_ma);
    let shift = da.shifted()?;
    r.expect_equal_lin("Δ0δ = δΔ1", &compose_lin(d0, delta)?, &compose_lin(delta, d1)?)?;
    r.expect_equal("(condi1)", &l0.subset_insertions(&[d, d0])?.sub(&l0.postcompose(d0)?)?, &t_am.postcompose(delta)?)?;
    r.expect_equal("(condi2)", &r0.subset_insertions(&[d0, d])?.sub(&r0.postcompose(d0)?)?, &t_ma.postcompose(delta)?)?;
    r.expect_equal("(condi3)", &l1.subset_insertions(&[d, d1])?.sub(&l1.postcompose(d1)?)?, &t_am.precompose(1, delta)?)?;
    r.expect_equal("(condi4)", &r1.subset_insertions(&[d1, d])?.sub(&r1.postcompose(d1)?)?, &t_ma.precompose(0, delta)?)?;
    let nu_side = |nu: &MultiMap, ds: [&Lin; 3]| -> Result<MultiMap> { nu.subset_insertions(&ds)?.sub(&nu.postcompose(d1)?) };
    let c5 = MultiMap::sum(&[
        l1.precompose(0, &shift)?.insert(1, t_am)?,
        t_am.insert(0, mult)?.neg(),
        t_am.insert(1, l0)?,
    ])?;
    r.expect_equal("(condi5)", &c5, &nu_side(&hb.nu_aav, [d, d, d0])?)?;
    let c6 = MultiMap::sum(&[
        l1.precompose(0, &shift)?.insert(1, t_ma)?,
        t_ma.insert(0, l0)?.neg(),
        t_am.insert(1, r0)?,
        r1.precompose(1, &shift)?.insert(0, t_am)?.neg(),
    ])?;
    r.expect_equal("(condi6)", &c6, &nu_side(&hb.nu_ava, [d, d0, d])?)?;
    let c7 = MultiMap::sum(&[
        t_ma.insert(0, r0)?.neg(),
        t_ma.insert(1, mult)?,
        r1.precompose(1, &shift)?.insert(0, t_ma)?.neg(),
    ])?;
    r.expect_equal("(condi7)", &c7, &nu_side(&hb.nu_vaa, [d0, d, d])?)?;
    Ok(r)
}

/// Projections and injections of `A0 = A ⊕ M0`.
pub struct SemidirectCarrier {
    pub sum: DirectSum,
    pub pa: Lin,
    pub pm: Lin,
    pub ia: Lin,
    pub im: Lin,
}

impl SemidirectCarrier {
    pub fn new(a: &Space, m0: &Space) -> Self {
        let sum = DirectSum::new(format!("{}+{}", a.label, m0.label), vec![a.clone(), m0.clone()]);
        SemidirectCarrier {
            pa: sum.proj(0),
            pm: sum.proj(1),
            ia: sum.inj(0),
            im: sum.inj(1),
            sum,
        }
    }
}

fn semidirect_unchecked(alg: &AssocAlgebra, hb: &HBimod2) -> Result<AInf2> {
    let c = SemidirectCarrier::new(&alg.space, &hb.m0);
    let (pa, pm) = (&c.pa, &c.pm);
    let module_part = hb.left0.precompose_all(&[pa, pm])?.add(&hb.right0.precompose_all(&[pm, pa])?)?;
    let m00 = alg
        .mult
        .precompose_all(&[pa, pa])?
        .postcompose(&c.ia)?
        .add(&module_part.postcompose(&c.im)?)?;
    let mu = MultiMap::sum(&[
        hb.nu_aav.precompose_all(&[pa, pa, pm])?,
        hb.nu_ava.precompose_all(&[pa, pm, pa])?,
        hb.nu_vaa.precompose_all(&[pm, pa, pa])?,
    ])?;
    Ok(AInf2 {
        cx: TwoTermComplex::new(c.sum.total.clone(), hb.m1.clone(), compose_lin(&c.im, &hb.delta)?)?,
        m00,
        m01: hb.left1.precompose(0, pa)?,
        m10: hb.right1.precompose(1, pa)?,
        mu,
    })
}

/// The 2-term A∞-algebra on `A ⊕ M0 ← M1`.
pub fn semidirect_ainf2(alg: &AssocAlgebra, hb: &HBimod2) -> Result<AInf2> {
    alg.check_associative()?.into_result()?;
    check_hbimod(alg, hb)?.into_result()?;
    let out = semidirect_unchecked(alg, hb)?;
    debug_assert!(check_ainf2(&out).map(|r| r.passed()).unwrap_or(false));
    Ok(out)
}

/// The semidirect product with `d0 = d ⊕ Δ0`, `d1 = Δ1` and
/// `d2((a, u), (b, v)) = θ(a, v) + θ(u, b)`.
pub fn semidirect_diff(da: &DifferenceAlgebra, dhb: &DiffHBimod2) -> Result<TwoTermDiffAInf> {
    da.check()?.into_result()?;
    check_diff_hbimod(da, dhb)?.into_result()?;
    let ainf = semidirect_unchecked(&da.alg, &dhb.base)?;
    let c = SemidirectCarrier::new(da.space(), &dhb.base.m0);
    let (pa, pm) = (&c.pa, &c.pm);
    let d0 = compose_lin(&compose_lin(&c.ia, &da.d)?, pa)?.add(&compose_lin(&compose_lin(&c.im, &dhb.delta0)?, pm)?)?;
    let d2 = dhb.theta_am.precompose_all(&[pa, pm])?.add(&dhb.theta_ma.precompose_all(&[pm, pa])?)?;
    Ok(TwoTermDiffAInf {
        ainf,
        dop: DiffOp2 { d0, d1: dhb.delta1.clone(), d2 },
    })
}

/// The difference associative 2-algebra with objects `A ⊕ M0`, morphisms
/// `A ⊕ M0 ⊕ M1`, `(a, u, ξ): (a, u) → (a, u + δξ)` and `D = (d, Δ0, Δ1)`.
pub fn semidirect_2alg(da: &DifferenceAlgebra, dhb: &DiffHBimod2) -> Result<DiffAss2> {
    da.check()?.into_result()?;
    check_diff_hbimod(da, dhb)?.into_result()?;
    let hb = &dhb.base;
    let c = SemidirectCarrier::new(da.space(), &hb.m0);
    let ainf = semidirect_unchecked(&da.alg, hb)?;
    let c1 = DirectSum::new("C1", vec![da.space().clone(), hb.m0.clone(), hb.m1.clone()]);
    let (qa, qm, qh) = (c1.proj(0), c1.proj(1), c1.proj(2));
    let (ja, jm, jh) = (c1.inj(0), c1.inj(1), c1.inj(2));
    let s = compose_lin(&c.ia, &qa)?.add(&compose_lin(&c.im, &qm)?)?;
    let t = s.add(&compose_lin(&c.im, &compose_lin(&hb.delta, &qh)?)?)?;
    let i = compose_lin(&ja, &c.pa)?.add(&compose_lin(&jm, &c.pm)?)?;
    let objects = ainf.m00.precompose_all(&[&s, &s])?.postcompose(&i)?;
    let arrows = hb.left1.precompose_all(&[&qa, &qh])?.add(&hb.right1.precompose_all(&[&qh, &qa])?)?;
    let bullet1 = objects.add(&arrows.postcompose(&jh)?)?;
    let assoc = ainf.m00.insert(0, &ainf.m00)?.postcompose(&i)?.add(&ainf.mu.postcompose(&jh)?)?;
    let d0 = compose_lin(&compose_lin(&c.ia, &da.d)?, &c.pa)?.add(&compose_lin(&compose_lin(&c.im, &dhb.delta0)?, &c.pm)?)?;
    let d1 = MultiMap::sum(&[
        compose_lin(&compose_lin(&ja, &da.d)?, &qa)?.into_multi(),
        compose_lin(&compose_lin(&jm, &dhb.delta0)?, &qm)?.into_multi(),
        compose_lin(&compose_lin(&jh, &dhb.delta1)?, &qh)?.into_multi(),
    ])?
    .into_lin()?;
    let theta = dhb
        .theta_am
        .precompose_all(&[&c.pa, &c.pm])?
        .add(&dhb.theta_ma.precompose_all(&[&c.pm, &c.pa])?)?;
    let dnat = ainf.m00.postcompose(&d0)?.postcompose(&i)?.add(&theta.postcompose(&jh)?)?;
    Ok(DiffAss2 {
        tv: TwoVec { c0: c.sum.total.clone(), c1: c1.total.clone(), s, t, i },
        bullet0: ainf.m00,
        bullet1,
        assoc,
        d0,
        d1,
        dnat,
    })
}

/// Reads the components of a structure on `A ⊕ M0 ← M1` back into a
/// difference bimodule up to homotopy; inverse to [`semidirect_diff`] on its image.
pub fn split_semidirect(a: &Space, m0: &Space, x: &TwoTermDiffAInf) -> Result<(DifferenceAlgebra, DiffHBimod2)> {
    let c = SemidirectCarrier::new(a, m0);
    let (pa, pm, ia, im) = (&c.pa, &c.pm, &c.ia, &c.im);
    let s = &x.ainf;
    expect_lin(s.delta(), s.a1().dim, c.sum.total.dim, "δ")?;
    let m1 = s.a1().clone();
    let alg = AssocAlgebra {
        space: a.clone(),
        mult: s.m00.precompose_all(&[ia, ia])?.postcompose(pa)?,
    };
    let hb = HBimod2 {
        delta: compose_lin(pm, s.delta())?,
        left0: s.m00.precompose_all(&[ia, im])?.postcompose(pm)?,
        right0: s.m00.precompose_all(&[im, ia])?.postcompose(pm)?,
        left1: s.m01.precompose(0, ia)?,
        right1: s.m10.precompose(1, ia)?,
        nu_aav: s.mu.precompose_all(&[ia, ia, im])?,
        nu_ava: s.mu.precompose_all(&[ia, im, ia])?,
        nu_vaa: s.mu.precompose_all(&[im, ia, ia])?,
        m0: m0.clone(),
        m1,
    };
    let dhb = DiffHBimod2 {
        base: hb,
        delta0: compose_lin(&compose_lin(pm, &x.dop.d0)?, im)?,
        delta1: x.dop.d1.clone(),
        theta_am: x.dop.d2.precompose_all(&[ia, im])?,
        theta_ma: x.dop.d2.precompose_all(&[im, ia])?,
    };
    let da = DifferenceAlgebra {
        d: compose_lin(&compose_lin(pa, &x.dop.d0)?, ia)?,
        alg,
    };
    Ok((da, dhb))
}
