//! Skeletal structures versus 3-cocycles, strict structures versus crossed
//! modules of difference algebras.

use crate::ainf2::{expect_lin, expect_multi, AInf2, TwoTermComplex};
use crate::cohom::CochainComplex;
use crate::diffainf2::{is_skeletal, is_strict, DiffOp2, TwoTermDiffAInf};
use crate::diffalg::{check_diff_bimodule, AssocAlgebra, Bimodule, DiffBimodule, DifferenceAlgebra};
use crate::exactlin::{compose_lin, Lin, MultiMap};
use crate::report::Report;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedModule {
    pub base: DifferenceAlgebra,
    pub top: DifferenceAlgebra,
    /// `A × A′ → A′`
    pub left: MultiMap,
    /// `A′ × A → A′`
    pub right: MultiMap,
    /// `∂: A′ → A`
    pub partial: Lin,
}

impl CrossedModule {
    /// `∂ = Id_A` with `A` acting on itself.
    pub fn identity(da: &DifferenceAlgebra) -> Self {
        let top_space = da.space().relabel("A'");
        let relabel = |m: &MultiMap, srcs: Vec<_>| m.clone().relabeled(srcs, top_space.clone()).unwrap();
        let a = da.space().clone();
        CrossedModule {
            top: DifferenceAlgebra {
                alg: AssocAlgebra {
                    space: top_space.clone(),
                    mult: relabel(da.mult(), vec![top_space.clone(), top_space.clone()]),
                },
                d: da.d.clone().relabeled(top_space.clone(), top_space.clone()).unwrap(),
            },
            left: relabel(da.mult(), vec![a.clone(), top_space.clone()]),
            right: relabel(da.mult(), vec![top_space.clone(), a.clone()]),
            partial: Lin::identity(a.clone()).relabeled(top_space.clone(), a).unwrap(),
            base: da.clone(),
        }
    }

    /// `∂ = 0` into `A` from a difference bimodule given the zero product.
    pub fn zero_partial(da: &DifferenceAlgebra, bm: &DiffBimodule) -> Self {
        let m = bm.space().clone();
        CrossedModule {
            top: DifferenceAlgebra {
                alg: AssocAlgebra {
                    space: m.clone(),
                    mult: MultiMap::zeros(vec![m.clone(), m.clone()], m.clone()),
                },
                d: bm.delta.clone(),
            },
            left: bm.module.left.clone(),
            right: bm.module.right.clone(),
            partial: Lin::zero(m, da.space().clone()),
            base: da.clone(),
        }
    }

    /// A crossed module of associative algebras with `d = −Id` on both sides.
    pub fn with_minus_identity(base: AssocAlgebra, top: AssocAlgebra, left: MultiMap, right: MultiMap, partial: Lin) -> Self {
        let minus = |a: &AssocAlgebra| a.identity().neg();
        CrossedModule {
            base: DifferenceAlgebra { d: minus(&base), alg: base },
            top: DifferenceAlgebra { d: minus(&top), alg: top },
            left,
            right,
            partial,
        }
    }

    pub fn top_bimodule(&self) -> DiffBimodule {
        DiffBimodule {
            module: Bimodule {
                m: self.top.space().clone(),
                left: self.left.clone(),
                right: self.right.clone(),
            },
            delta: self.top.d.clone(),
        }
    }

    fn check_shape(&self) -> Result<()> {
        let (a, h) = (self.base.space().dim, self.top.space().dim);
        expect_multi(self.base.mult(), &[a, a], a, "base product")?;
        expect_multi(self.top.mult(), &[h, h], h, "top product")?;
        expect_lin(&self.base.d, a, a, "d")?;
        expect_lin(&self.top.d, h, h, "d'")?;
        expect_multi(&self.left, &[a, h], h, "left action")?;
        expect_multi(&self.right, &[h, a], h, "right action")?;
        expect_lin(&self.partial, h, a, "∂")
    }
}

/// Both difference algebras, the bimodule, `∂` as a difference-algebra
/// homomorphism, (crm1) and (crm2).
pub fn check_crossed_module(cm: &CrossedModule) -> Result<Report> {
    cm.check_shape()?;
    let mut r = Report::new("crossed module of difference algebras");
    r.absorb("base ", cm.base.check()?);
    r.absorb("top ", cm.top.check()?);
    r.absorb("", check_diff_bimodule(&cm.base, &cm.top_bimodule())?);
    let (mult, top) = (cm.base.mult(), cm.top.mult());
    let (left, right, p) = (&cm.left, &cm.right, &cm.partial);
    r.expect_equal("∂(hk) = ∂(h)∂(k)", &top.postcompose(p)?, &mult.precompose_all(&[p, p])?)?;
    r.expect_equal_lin("d∂ = ∂d'", &compose_lin(&cm.base.d, p)?, &compose_lin(p, &cm.top.d)?)?;
    r.expect_equal("(crm1) a(hk) = (ah)k", &left.insert(1, top)?, &top.insert(0, left)?)?;
    r.expect_equal("(crm1) h(ak) = (ha)k", &top.insert(1, left)?, &top.insert(0, right)?)?;
    r.expect_equal("(crm1) h(ka) = (hk)a", &top.insert(1, right)?, &right.insert(0, top)?)?;
    r.expect_equal("(crm2) ∂(ah) = a∂(h)", &left.postcompose(p)?, &mult.precompose(1, p)?)?;
    r.expect_equal("(crm2) ∂(ha) = ∂(h)a", &right.postcompose(p)?, &mult.precompose(0, p)?)?;
    r.expect_equal("(crm2) ∂(h)k = hk", &left.precompose(0, p)?, top)?;
    r.expect_equal("(crm2) h∂(k) = hk", &right.precompose(1, p)?, top)?;
    Ok(r)
}

/// `δ = ∂`, `⊙` from the products and actions, `μ = 0`, `(d, d′, 0)`.
pub fn crossed_to_strict(cm: &CrossedModule) -> Result<TwoTermDiffAInf> {
    check_crossed_module(cm)?.into_result()?;
    let (a0, a1) = (cm.base.space().clone(), cm.top.space().clone());
    Ok(TwoTermDiffAInf {
        ainf: AInf2 {
            cx: TwoTermComplex::new(a0.clone(), a1.clone(), cm.partial.clone())?,
            m00: cm.base.mult().clone(),
            m01: cm.left.clone(),
            m10: cm.right.clone(),
            mu: MultiMap::zeros(vec![a0.clone(), a0.clone(), a0.clone()], a1.clone()),
        },
        dop: DiffOp2 {
            d0: cm.base.d.clone(),
            d1: cm.top.d.clone(),
            d2: MultiMap::zeros(vec![a0.clone(), a0], a1),
        },
    })
}

/// Reads off the crossed module with top product `h ⊙₁ k = δ(h) ⊙ k`.
pub fn strict_to_crossed(x: &TwoTermDiffAInf) -> Result<CrossedModule> {
    if !is_strict(x) {
        return Err(Error::Precondition("strict_to_crossed needs μ = 0 and d2 = 0".into()));
    }
    x.check()?.into_result()?;
    let a = &x.ainf;
    let top = a.induced_top_product()?;
    let mut sym = Report::new("induced product on A1");
    sym.expect_equal("δ(h)⊙k = h⊙δ(k)", &top, &a.m10.precompose(1, a.delta())?)?;
    sym.into_result()?;
    Ok(CrossedModule {
        base: DifferenceAlgebra {
            alg: AssocAlgebra { space: a.a0().clone(), mult: a.m00.clone() },
            d: x.dop.d0.clone(),
        },
        top: DifferenceAlgebra {
            alg: AssocAlgebra { space: a.a1().clone(), mult: top },
            d: x.dop.d1.clone(),
        },
        left: a.m01.clone(),
        right: a.m10.clone(),
        partial: a.delta().clone(),
    })
}

/// `(A, d)`, `(M, Δ)` and a 3-cocycle `(μ, χ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleData {
    pub da: DifferenceAlgebra,
    pub bm: DiffBimodule,
    pub mu: MultiMap,
    pub chi: MultiMap,
}

/// The skeletal structure with `δ = 0` and `(d0, d1, d2) = (d, Δ, χ)`.
pub fn cocycle_to_skeletal(data: &CocycleData) -> Result<TwoTermDiffAInf> {
    let cx = CochainComplex::new(data.da.clone(), data.bm.clone())?;
    if !cx.is_3_cocycle(&data.mu, &data.chi)? {
        return Err(Error::Precondition("(μ, χ) is not a 3-cocycle".into()));
    }
    let (a0, a1) = (data.da.space().clone(), data.bm.space().clone());
    Ok(TwoTermDiffAInf {
        ainf: AInf2 {
            cx: TwoTermComplex::new(a0.clone(), a1.clone(), Lin::zero(a1, a0))?,
            m00: data.da.mult().clone(),
            m01: data.bm.module.left.clone(),
            m10: data.bm.module.right.clone(),
            mu: data.mu.clone(),
        },
        dop: DiffOp2 {
            d0: data.da.d.clone(),
            d1: data.bm.delta.clone(),
            d2: data.chi.clone(),
        },
    })
}

pub fn skeletal_to_cocycle(x: &TwoTermDiffAInf) -> Result<CocycleData> {
    if !is_skeletal(x) {
        return Err(Error::Precondition("skeletal_to_cocycle needs δ = 0".into()));
    }
    let a = &x.ainf;
    a.check_shape()?;
    let data = CocycleData {
        da: DifferenceAlgebra {
            alg: AssocAlgebra { space: a.a0().clone(), mult: a.m00.clone() },
            d: x.dop.d0.clone(),
        },
        bm: DiffBimodule {
            module: Bimodule { m: a.a1().clone(), left: a.m01.clone(), right: a.m10.clone() },
            delta: x.dop.d1.clone(),
        },
        mu: a.mu.clone(),
        chi: x.dop.d2.clone(),
    };
    let cx = CochainComplex::new(data.da.clone(), data.bm.clone())?;
    if !cx.is_3_cocycle(&data.mu, &data.chi)? {
        return Err(Error::invalid("skeletal structure", x.check()?));
    }
    Ok(data)
}
