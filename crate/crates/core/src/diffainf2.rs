//! Difference operators `(d0, d1, d2)` on 2-term A∞-algebras, difference
//! A∞-homomorphisms and their composition.

use crate::ainf2::{check_ainf2, check_ainf2_morphism, compose_ainf2_morphism, expect_lin, expect_multi, AInf2, AInf2Morphism};
use crate::exactlin::{compose_lin, Lin, MultiMap};
use crate::report::Report;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffOp2 {
    pub d0: Lin,
    pub d1: Lin,
    /// `A0 × A0 → A1`
    pub d2: MultiMap,
}

impl DiffOp2 {
    pub fn zero(a: &AInf2) -> Self {
        DiffOp2 {
            d0: Lin::zero(a.a0().clone(), a.a0().clone()),
            d1: Lin::zero(a.a1().clone(), a.a1().clone()),
            d2: MultiMap::zeros(vec![a.a0().clone(), a.a0().clone()], a.a1().clone()),
        }
    }

    fn check_shape(&self, a: &AInf2) -> Result<()> {
        let (n0, n1) = (a.a0().dim, a.a1().dim);
        expect_lin(&self.d0, n0, n0, "d0")?;
        expect_lin(&self.d1, n1, n1, "d1")?;
        expect_multi(&self.d2, &[n0, n0], n1, "d2")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoTermDiffAInf {
    pub ainf: AInf2,
    pub dop: DiffOp2,
}

impl TwoTermDiffAInf {
    /// All of (A1)–(A8), the chain condition and (D1)–(D4).
    pub fn check(&self) -> Result<Report> {
        let mut r = check_ainf2(&self.ainf)?;
        r.subject = "2-term difference A∞-algebra".into();
        r.absorb("", check_diffop2(&self.ainf, &self.dop)?);
        Ok(r)
    }

    /// `x ↦ x + d0(x)`.
    pub fn shift0(&self) -> Result<Lin> {
        Lin::identity(self.ainf.a0().clone()).add(&self.dop.d0)
    }
}

/// Evaluates `d0δ = δd1` and (D1)–(D4) on every basis tuple.
pub fn check_diffop2(a: &AInf2, dop: &DiffOp2) -> Result<Report> {
    a.check_shape()?;
    dop.check_shape(a)?;
    let delta = a.delta();
    let (m00, m01, m10, mu) = (&a.m00, &a.m01, &a.m10, &a.mu);
    let (d0, d1, d2) = (&dop.d0, &dop.d1, &dop.d2);
    let shift = Lin::identity(a.a0().clone()).add(d0)?;
    let mut r = Report::new("difference operator on a 2-term A∞-algebra");
    r.expect_equal_lin("d0δ = δd1", &compose_lin(d0, delta)?, &compose_lin(delta, d1)?)?;
    r.expect_equal(
        "(D1)",
        &m00.subset_insertions(&[d0, d0])?.sub(&m00.postcompose(d0)?)?,
        &d2.postcompose(delta)?,
    )?;
    r.expect_equal(
        "(D2)",
        &m01.subset_insertions(&[d0, d1])?.sub(&m01.postcompose(d1)?)?,
        &d2.precompose(1, delta)?,
    )?;
    r.expect_equal(
        "(D3)",
        &m10.subset_insertions(&[d1, d0])?.sub(&m10.postcompose(d1)?)?,
        &d2.precompose(0, delta)?,
    )?;
    let lhs = m01
        .precompose(0, &shift)?
        .insert(1, d2)?
        .sub(&d2.insert(0, m00)?)?
        .add(&d2.insert(1, m00)?)?
        .sub(&m10.precompose(1, &shift)?.insert(0, d2)?)?;
    let rhs = mu.subset_insertions(&[d0, d0, d0])?.sub(&mu.postcompose(d1)?)?;
    r.expect_equal("(D4)", &lhs, &rhs)?;
    Ok(r)
}

pub fn is_skeletal(x: &TwoTermDiffAInf) -> bool {
    x.ainf.delta().is_zero()
}

pub fn is_strict(x: &TwoTermDiffAInf) -> bool {
    x.ainf.mu.is_zero() && x.dop.d2.is_zero()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffAInf2Morphism {
    pub base: AInf2Morphism,
    /// `A0 → A1'`
    pub phi3: Lin,
}

impl DiffAInf2Morphism {
    pub fn identity(x: &TwoTermDiffAInf) -> Self {
        DiffAInf2Morphism {
            base: AInf2Morphism::identity(&x.ainf),
            phi3: Lin::zero(x.ainf.a0().clone(), x.ainf.a1().clone()),
        }
    }

    pub fn zero(src: &TwoTermDiffAInf, dst: &TwoTermDiffAInf) -> Self {
        DiffAInf2Morphism {
            base: AInf2Morphism::zero(&src.ainf, &dst.ainf),
            phi3: Lin::zero(src.ainf.a0().clone(), dst.ainf.a1().clone()),
        }
    }
}

/// The terms that the twisted products contribute to `hd-eq3`:
/// `d0'φ0(x) ⊙' φ3(y) + φ3(x) ⊙' d0'φ0(y) + δ'φ3(x) ⊙' φ3(y)`.
pub fn hd_eq3_twist_terms(dst: &TwoTermDiffAInf, m: &DiffAInf2Morphism) -> Result<MultiMap> {
    let (phi0, phi3) = (&m.base.phi0, &m.phi3);
    let (d0p, delta_p) = (&dst.dop.d0, dst.ainf.delta());
    let d0p_phi0 = compose_lin(d0p, phi0)?;
    let delta_phi3 = compose_lin(delta_p, phi3)?;
    let (m01p, m10p) = (&dst.ainf.m01, &dst.ainf.m10);
    MultiMap::sum(&[
        m01p.precompose_all(&[&d0p_phi0, phi3])?,
        m10p.precompose_all(&[phi3, &d0p_phi0])?,
        m01p.precompose_all(&[&delta_phi3, phi3])?,
    ])
}

/// Right side of `hd-eq3` minus `φ1 d2`, i.e. the value `d2'(φ0 x, φ0 y)`
/// is forced to take.
fn hd_eq3_rhs(src: &TwoTermDiffAInf, dst: &TwoTermDiffAInf, m: &DiffAInf2Morphism) -> Result<MultiMap> {
    let (phi0, phi2, phi3) = (&m.base.phi0, &m.base.phi2, &m.phi3);
    let d0 = &src.dop.d0;
    let (m01p, m10p) = (&dst.ainf.m01, &dst.ainf.m10);
    MultiMap::sum(&[
        phi2.subset_insertions(&[d0, d0])?,
        src.ainf.m00.postcompose(phi3)?.neg(),
        m10p.precompose_all(&[phi3, phi0])?,
        m01p.precompose_all(&[phi0, phi3])?,
        hd_eq3_twist_terms(dst, m)?,
        phi2.postcompose(&dst.dop.d1)?.neg(),
    ])
}

/// Checks the underlying A∞-homomorphism and (hd-eq1)–(hd-eq3).
pub fn check_diff_morphism(src: &TwoTermDiffAInf, dst: &TwoTermDiffAInf, m: &DiffAInf2Morphism) -> Result<Report> {
    let mut r = check_ainf2_morphism(&src.ainf, &dst.ainf, &m.base)?;
    r.subject = "difference A∞-homomorphism".into();
    src.dop.check_shape(&src.ainf)?;
    dst.dop.check_shape(&dst.ainf)?;
    expect_lin(&m.phi3, src.ainf.a0().dim, dst.ainf.a1().dim, "φ3")?;
    let (phi0, phi1, phi3) = (&m.base.phi0, &m.base.phi1, &m.phi3);
    r.expect_equal_lin(
        "(hd-eq1)",
        &compose_lin(phi0, &src.dop.d0)?.sub(&compose_lin(&dst.dop.d0, phi0)?)?,
        &compose_lin(dst.ainf.delta(), phi3)?,
    )?;
    r.expect_equal_lin(
        "(hd-eq2)",
        &compose_lin(phi1, &src.dop.d1)?.sub(&compose_lin(&dst.dop.d1, phi1)?)?,
        &compose_lin(phi3, src.ainf.delta())?,
    )?;
    let lhs = src
        .dop
        .d2
        .postcompose(phi1)?
        .sub(&dst.dop.d2.precompose_all(&[phi0, phi0])?)?;
    r.expect_equal("(hd-eq3)", &lhs, &hd_eq3_rhs(src, dst, m)?)?;
    Ok(r)
}

/// `(g∘f)3(x) = g3(f0 x) + g1(f3 x)`, other components as for A∞-morphisms.
pub fn compose_diff_morphism(g: &DiffAInf2Morphism, f: &DiffAInf2Morphism) -> Result<DiffAInf2Morphism> {
    let base = compose_ainf2_morphism(&g.base, &f.base)?;
    if f.phi3.dst().dim != g.base.phi1.src().dim {
        return Err(Error::shape("compose: φ3 of f does not land in the source of g1"));
    }
    Ok(DiffAInf2Morphism {
        phi3: compose_lin(&g.phi3, &f.base.phi0)?.add(&compose_lin(&g.base.phi1, &f.phi3)?)?,
        base,
    })
}

/// Transports `x` along `(Id, Id, φ2, φ3)`: returns the unique structure
/// `x'` on the same spaces for which `(Id, Id, φ2, φ3): x → x'` satisfies
/// every homomorphism identity.
pub fn gauge_transform(x: &TwoTermDiffAInf, phi2: &MultiMap, phi3: &Lin) -> Result<(TwoTermDiffAInf, DiffAInf2Morphism)> {
    let a = &x.ainf;
    let delta = a.delta();
    expect_multi(phi2, &[a.a0().dim, a.a0().dim], a.a1().dim, "φ2")?;
    expect_lin(phi3, a.a0().dim, a.a1().dim, "φ3")?;
    let m00 = a.m00.sub(&phi2.postcompose(delta)?)?;
    let m01 = a.m01.sub(&phi2.precompose(1, delta)?)?;
    let m10 = a.m10.sub(&phi2.precompose(0, delta)?)?;
    let hom_mu = phi2
        .insert(1, &a.m00)?
        .sub(&phi2.insert(0, &a.m00)?)?
        .add(&m01.insert(1, phi2)?)?
        .sub(&m10.insert(0, phi2)?)?;
    let mu = a.mu.sub(&hom_mu)?;
    let d0 = x.dop.d0.sub(&compose_lin(delta, phi3)?)?;
    let d1 = x.dop.d1.sub(&compose_lin(phi3, delta)?)?;
    let ainf = AInf2 { cx: a.cx.clone(), m00, m01, m10, mu };
    let mut target = TwoTermDiffAInf {
        dop: DiffOp2 {
            d0,
            d1,
            d2: x.dop.d2.clone(),
        },
        ainf,
    };
    let m = DiffAInf2Morphism {
        base: AInf2Morphism {
            phi0: Lin::identity(a.a0().clone()),
            phi1: Lin::identity(a.a1().clone()),
            phi2: phi2.clone(),
        },
        phi3: phi3.clone(),
    };
    target.dop.d2 = x.dop.d2.sub(&hd_eq3_rhs(x, &target, &m)?)?;
    Ok((target, m))
}

/// Transports `x` along linear isomorphisms `p: A0 → A0`, `q: A1 → A1`, so
/// that `(p, q, 0, 0)` is an isomorphism onto the result.
pub fn base_change(x: &TwoTermDiffAInf, p: &Lin, q: &Lin) -> Result<(TwoTermDiffAInf, DiffAInf2Morphism)> {
    let (pi, qi) = (p.inverse()?, q.inverse()?);
    let a = &x.ainf;
    let ainf = AInf2 {
        cx: crate::ainf2::TwoTermComplex::new(
            a.a0().clone(),
            a.a1().clone(),
            compose_lin(&compose_lin(p, a.delta())?, &qi)?,
        )?,
        m00: a.m00.precompose_all(&[&pi, &pi])?.postcompose(p)?,
        m01: a.m01.precompose_all(&[&pi, &qi])?.postcompose(q)?,
        m10: a.m10.precompose_all(&[&qi, &pi])?.postcompose(q)?,
        mu: a.mu.precompose_all(&[&pi, &pi, &pi])?.postcompose(q)?,
    };
    let dop = DiffOp2 {
        d0: compose_lin(&compose_lin(p, &x.dop.d0)?, &pi)?,
        d1: compose_lin(&compose_lin(q, &x.dop.d1)?, &qi)?,
        d2: x.dop.d2.precompose_all(&[&pi, &pi])?.postcompose(q)?,
    };
    let m = DiffAInf2Morphism {
        base: AInf2Morphism {
            phi0: p.clone(),
            phi1: q.clone(),
            phi2: MultiMap::zeros(vec![a.a0().clone(), a.a0().clone()], a.a1().clone()),
        },
        phi3: Lin::zero(a.a0().clone(), a.a1().clone()),
    };
    Ok((TwoTermDiffAInf { ainf, dop }, m))
}
