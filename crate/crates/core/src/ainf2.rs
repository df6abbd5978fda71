//! 2-term A∞-algebras `A1 → A0` with products `⊙` and homotopy `μ`, their
//! homomorphisms and composition.

use crate::exactlin::{compose_lin, Lin, MultiMap, Space};
use crate::report::Report;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoTermComplex {
    pub a0: Space,
    pub a1: Space,
    /// `A1 → A0`
    pub delta: Lin,
}

impl TwoTermComplex {
    pub fn new(a0: Space, a1: Space, delta: Lin) -> Result<Self> {
        let cx = TwoTermComplex { a0, a1, delta };
        cx.check_shape()?;
        Ok(cx)
    }

    fn check_shape(&self) -> Result<()> {
        if self.delta.src().dim != self.a1.dim || self.delta.dst().dim != self.a0.dim {
            return Err(Error::shape("δ must map A1 to A0"));
        }
        Ok(())
    }
}

/// Raw structure maps; validity is established by [`check_ainf2`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AInf2 {
    pub cx: TwoTermComplex,
    /// `A0 × A0 → A0`
    pub m00: MultiMap,
    /// `A0 × A1 → A1`
    pub m01: MultiMap,
    /// `A1 × A0 → A1`
    pub m10: MultiMap,
    /// `A0 × A0 × A0 → A1`
    pub mu: MultiMap,
}

pub(crate) fn expect_multi(m: &MultiMap, srcs: &[usize], dst: usize, name: &str) -> Result<()> {
    if m.src_dims() != srcs || m.dst().dim != dst {
        return Err(Error::shape(format!(
            "{name} has shape {:?}->{}, expected {:?}->{}",
            m.src_dims(),
            m.dst().dim,
            srcs,
            dst
        )));
    }
    Ok(())
}

pub(crate) fn expect_lin(f: &Lin, src: usize, dst: usize, name: &str) -> Result<()> {
    expect_multi(f.as_multi(), &[src], dst, name)
}

impl AInf2 {
    pub fn a0(&self) -> &Space {
        &self.cx.a0
    }

    pub fn a1(&self) -> &Space {
        &self.cx.a1
    }

    pub fn delta(&self) -> &Lin {
        &self.cx.delta
    }

    pub fn check_shape(&self) -> Result<()> {
        self.cx.check_shape()?;
        let (n0, n1) = (self.a0().dim, self.a1().dim);
        expect_multi(&self.m00, &[n0, n0], n0, "x⊙y")?;
        expect_multi(&self.m01, &[n0, n1], n1, "x⊙h")?;
        expect_multi(&self.m10, &[n1, n0], n1, "h⊙x")?;
        expect_multi(&self.mu, &[n0, n0, n0], n1, "μ")
    }

    /// The product `h⊙₁k := δ(h)⊙k` on `A1`.
    pub fn induced_top_product(&self) -> Result<MultiMap> {
        self.m01.precompose(0, self.delta())
    }
}

/// Evaluates (A1)–(A8) on every basis tuple.
pub fn check_ainf2(a: &AInf2) -> Result<Report> {
    a.check_shape()?;
    let delta = a.delta();
    let (m00, m01, m10, mu) = (&a.m00, &a.m01, &a.m10, &a.mu);
    let mut r = Report::new("2-term A∞-algebra");
    r.expect_equal("(A1)", &m01.postcompose(delta)?, &m00.precompose(1, delta)?)?;
    r.expect_equal("(A2)", &m10.postcompose(delta)?, &m00.precompose(0, delta)?)?;
    r.expect_equal("(A3)", &m01.precompose(0, delta)?, &m10.precompose(1, delta)?)?;
    r.expect_equal(
        "(A4)",
        &m00.insert(1, m00)?.sub(&m00.insert(0, m00)?)?,
        &mu.postcompose(delta)?,
    )?;
    r.expect_equal(
        "(A5)",
        &m01.insert(1, m01)?.sub(&m01.insert(0, m00)?)?,
        &mu.precompose(2, delta)?,
    )?;
    r.expect_equal(
        "(A6)",
        &m01.insert(1, m10)?.sub(&m10.insert(0, m01)?)?,
        &mu.precompose(1, delta)?,
    )?;
    r.expect_equal(
        "(A7)",
        &m10.insert(1, m00)?.sub(&m10.insert(0, m10)?)?,
        &mu.precompose(0, delta)?,
    )?;
    let a8 = m01
        .insert(1, mu)?
        .sub(&mu.insert(0, m00)?)?
        .add(&mu.insert(1, m00)?)?
        .sub(&mu.insert(2, m00)?)?
        .add(&m10.insert(0, mu)?)?;
    r.expect_zero("(A8)", &a8)?;
    Ok(r)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AInf2Morphism {
    pub phi0: Lin,
    pub phi1: Lin,
    /// `A0 × A0 → A1'`
    pub phi2: MultiMap,
}

impl AInf2Morphism {
    pub fn identity(a: &AInf2) -> Self {
        AInf2Morphism {
            phi0: Lin::identity(a.a0().clone()),
            phi1: Lin::identity(a.a1().clone()),
            phi2: MultiMap::zeros(vec![a.a0().clone(), a.a0().clone()], a.a1().clone()),
        }
    }

    /// The morphism `(0, 0, 0)` between any two structures.
    pub fn zero(src: &AInf2, dst: &AInf2) -> Self {
        AInf2Morphism {
            phi0: Lin::zero(src.a0().clone(), dst.a0().clone()),
            phi1: Lin::zero(src.a1().clone(), dst.a1().clone()),
            phi2: MultiMap::zeros(vec![src.a0().clone(), src.a0().clone()], dst.a1().clone()),
        }
    }

    pub(crate) fn check_shape(&self, src: &AInf2, dst: &AInf2) -> Result<()> {
        let (n0, n1) = (src.a0().dim, src.a1().dim);
        let (p0, p1) = (dst.a0().dim, dst.a1().dim);
        expect_lin(&self.phi0, n0, p0, "φ0")?;
        expect_lin(&self.phi1, n1, p1, "φ1")?;
        expect_multi(&self.phi2, &[n0, n0], p1, "φ2")
    }
}

/// Checks the chain condition and the four homomorphism identities.
pub fn check_ainf2_morphism(src: &AInf2, dst: &AInf2, m: &AInf2Morphism) -> Result<Report> {
    src.check_shape()?;
    dst.check_shape()?;
    m.check_shape(src, dst)?;
    let (phi0, phi1, phi2) = (&m.phi0, &m.phi1, &m.phi2);
    let (delta, delta_p) = (src.delta(), dst.delta());
    let mut r = Report::new("A∞-homomorphism");
    r.expect_equal_lin("φ0δ = δ'φ1", &compose_lin(phi0, delta)?, &compose_lin(delta_p, phi1)?)?;
    r.expect_equal(
        "hom-x⊙y",
        &src.m00.postcompose(phi0)?.sub(&dst.m00.precompose_all(&[phi0, phi0])?)?,
        &phi2.postcompose(delta_p)?,
    )?;
    r.expect_equal(
        "hom-x⊙h",
        &src.m01.postcompose(phi1)?.sub(&dst.m01.precompose_all(&[phi0, phi1])?)?,
        &phi2.precompose(1, delta)?,
    )?;
    r.expect_equal(
        "hom-h⊙x",
        &src.m10.postcompose(phi1)?.sub(&dst.m10.precompose_all(&[phi1, phi0])?)?,
        &phi2.precompose(0, delta)?,
    )?;
    let lhs = src
        .mu
        .postcompose(phi1)?
        .sub(&dst.mu.precompose_all(&[phi0, phi0, phi0])?)?;
    let rhs = phi2
        .insert(1, &src.m00)?
        .sub(&phi2.insert(0, &src.m00)?)?
        .add(&dst.m01.precompose(0, phi0)?.insert(1, phi2)?)?
        .sub(&dst.m10.insert(0, phi2)?.precompose(2, phi0)?)?;
    r.expect_equal("hom-μ", &lhs, &rhs)?;
    Ok(r)
}

/// `g ∘ f` with `(g∘f)2(x, y) = g2(f0 x, f0 y) + g1(f2(x, y))`.
pub fn compose_ainf2_morphism(g: &AInf2Morphism, f: &AInf2Morphism) -> Result<AInf2Morphism> {
    if f.phi0.dst().dim != g.phi0.src().dim || f.phi1.dst().dim != g.phi1.src().dim {
        return Err(Error::shape("compose: target of f is not the source of g"));
    }
    Ok(AInf2Morphism {
        phi0: compose_lin(&g.phi0, &f.phi0)?,
        phi1: compose_lin(&g.phi1, &f.phi1)?,
        phi2: g
            .phi2
            .precompose_all(&[&f.phi0, &f.phi0])?
            .add(&f.phi2.postcompose(&g.phi1)?)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::int;
    use crate::genkit::catalog;

    /// `δ = 0`, `μ = 0`, `A1 = A0` as the regular bimodule.
    fn skeletal_regular(alg: &crate::diffalg::AssocAlgebra) -> AInf2 {
        let a0 = alg.space.clone();
        let a1 = a0.relabel("A1");
        AInf2 {
            cx: TwoTermComplex::new(a0.clone(), a1.clone(), Lin::zero(a1.clone(), a0.clone())).unwrap(),
            m00: alg.mult.clone(),
            m01: alg.mult.clone().relabeled(vec![a0.clone(), a1.clone()], a1.clone()).unwrap(),
            m10: alg.mult.clone().relabeled(vec![a1.clone(), a0.clone()], a1.clone()).unwrap(),
            mu: MultiMap::zeros(vec![a0.clone(), a0.clone(), a0], a1),
        }
    }

    #[test]
    fn skeletal_with_zero_mu_passes() {
        for e in catalog::catalog_algebras() {
            let a = skeletal_regular(&e.alg);
            assert!(check_ainf2(&a).unwrap().passed(), "{}", e.name);
        }
    }

    #[test]
    fn non_cocycle_mu_fails_only_a8() {
        let mut a = skeletal_regular(&catalog::matrix_algebra());
        a.mu.set(0, &[0, 0, 0], int(1));
        let r = check_ainf2(&a).unwrap();
        assert_eq!(r.failed_tags(), vec!["(A8)".to_string()]);
    }

    #[test]
    fn identity_and_zero_morphisms_are_valid() {
        let a = skeletal_regular(&catalog::upper_triangular());
        assert!(check_ainf2_morphism(&a, &a, &AInf2Morphism::identity(&a)).unwrap().passed());
        let z = skeletal_regular(&catalog::zero_algebra(0));
        assert!(check_ainf2_morphism(&a, &z, &AInf2Morphism::zero(&a, &z)).unwrap().passed());
    }

    #[test]
    fn composition_with_identity_is_neutral() {
        let a = skeletal_regular(&catalog::dual_numbers());
        let mut f = AInf2Morphism::identity(&a);
        f.phi2.set(1, &[1, 0], int(3));
        let id = AInf2Morphism::identity(&a);
        assert_eq!(compose_ainf2_morphism(&id, &f).unwrap(), f);
        assert_eq!(compose_ainf2_morphism(&f, &id).unwrap(), f);
    }

    #[test]
    fn shape_errors_are_reported() {
        let mut a = skeletal_regular(&catalog::dual_numbers());
        a.mu = MultiMap::zeros(vec![a.a0().clone(), a.a0().clone()], a.a1().clone());
        assert!(matches!(check_ainf2(&a), Err(Error::Shape(_))));
    }
}
