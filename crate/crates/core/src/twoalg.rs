//! 2-vector spaces, difference associative 2-algebras and their
//! homomorphisms, and the functors `S`, `T` relating them to 2-term
//! difference A∞-algebras.

use crate::ainf2::{expect_lin, expect_multi, AInf2, AInf2Morphism, TwoTermComplex};
use crate::diffainf2::{DiffAInf2Morphism, DiffOp2, TwoTermDiffAInf};
use crate::diffalg::DifferenceAlgebra;
use crate::exactlin::{compose_lin, DirectSum, Lin, MultiMap, Rational, Space, Subspace, Vector};
use crate::report::Report;
use crate::{Error, Result};

/// A category internal to vector spaces; composition is determined by
/// `s`, `t`, `i` and is not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoVec {
    pub c0: Space,
    pub c1: Space,
    pub s: Lin,
    pub t: Lin,
    pub i: Lin,
}

impl TwoVec {
    /// `f ↦ f − i(s(f))` as a linear map on `C1`.
    pub fn arrow(&self) -> Result<Lin> {
        Lin::identity(self.c1.clone()).sub(&compose_lin(&self.i, &self.s)?)
    }

    pub fn arrow_of(&self, f: &[Rational]) -> Result<Vector> {
        self.arrow()?.apply(f)
    }

    /// `g ∘ f = f + g − i(t(f))` for `t(f) = s(g)`.
    pub fn compose(&self, g: &[Rational], f: &[Rational]) -> Result<Vector> {
        let (tf, sg) = (self.t.apply(f)?, self.s.apply(g)?);
        if tf != sg {
            return Err(Error::Precondition("compose: t(f) ≠ s(g)".into()));
        }
        let itf = self.i.apply(&tf)?;
        Ok(f.iter().zip(g).zip(&itf).map(|((a, b), c)| a + b - c).collect())
    }

    fn check_shape(&self) -> Result<()> {
        let (n0, n1) = (self.c0.dim, self.c1.dim);
        expect_lin(&self.s, n1, n0, "s")?;
        expect_lin(&self.t, n1, n0, "t")?;
        expect_lin(&self.i, n0, n1, "i")
    }

    fn check_into(&self, r: &mut Report) -> Result<()> {
        let id = Lin::identity(self.c0.clone());
        r.expect_equal_lin("si = Id", &compose_lin(&self.s, &self.i)?, &id)?;
        r.expect_equal_lin("ti = Id", &compose_lin(&self.t, &self.i)?, &id)
    }
}

/// Raw data of a difference associative 2-algebra; `assoc` and `dnat` are
/// stored by their values on objects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffAss2 {
    pub tv: TwoVec,
    pub bullet0: MultiMap,
    pub bullet1: MultiMap,
    /// `(x, y, z) ↦ 𝒜_{x,y,z}`
    pub assoc: MultiMap,
    pub d0: Lin,
    pub d1: Lin,
    /// `(x, y) ↦ 𝒟_{x,y}`
    pub dnat: MultiMap,
}

impl DiffAss2 {
    /// `C1 = C0 = A` with identity morphisms only.
    pub fn discrete(da: &DifferenceAlgebra) -> Self {
        let a = da.space().clone();
        let id = Lin::identity(a.clone());
        DiffAss2 {
            tv: TwoVec { c0: a.clone(), c1: a, s: id.clone(), t: id.clone(), i: id },
            bullet0: da.mult().clone(),
            bullet1: da.mult().clone(),
            assoc: da.mult().insert(0, da.mult()).expect("binary product"),
            d0: da.d.clone(),
            d1: da.d.clone(),
            dnat: da.mult().postcompose(&da.d).expect("endomorphism"),
        }
    }

    fn check_shape(&self) -> Result<()> {
        self.tv.check_shape()?;
        let (n0, n1) = (self.tv.c0.dim, self.tv.c1.dim);
        expect_multi(&self.bullet0, &[n0, n0], n0, "• on objects")?;
        expect_multi(&self.bullet1, &[n1, n1], n1, "• on morphisms")?;
        expect_multi(&self.assoc, &[n0, n0, n0], n1, "𝒜")?;
        expect_lin(&self.d0, n0, n0, "D0")?;
        expect_lin(&self.d1, n1, n1, "D1")?;
        expect_multi(&self.dnat, &[n0, n0], n1, "𝒟")
    }

    /// `x ↦ 𝒜⃗` as a map `C0³ → C1`.
    pub fn arrow_assoc(&self) -> Result<MultiMap> {
        self.assoc.postcompose(&self.tv.arrow()?)
    }

    pub fn arrow_dnat(&self) -> Result<MultiMap> {
        self.dnat.postcompose(&self.tv.arrow()?)
    }
}

/// Evaluates every axiom of a difference associative 2-algebra on basis
/// tuples, with the pentagon and (2-diff) in arrow-part form.
pub fn check_diffass2(x: &DiffAss2) -> Result<Report> {
    x.check_shape()?;
    let tv = &x.tv;
    let (s, t, i) = (&tv.s, &tv.t, &tv.i);
    let (b0, b1, d0, d1) = (&x.bullet0, &x.bullet1, &x.d0, &x.d1);
    let arrow = tv.arrow()?;
    let mut r = Report::new("difference associative 2-algebra");
    tv.check_into(&mut r)?;

    r.expect_equal("s(f•g) = s(f)•s(g)", &b1.postcompose(s)?, &b0.precompose_all(&[s, s])?)?;
    r.expect_equal("t(f•g) = t(f)•t(g)", &b1.postcompose(t)?, &b0.precompose_all(&[t, t])?)?;
    r.expect_equal("i(x)•i(y) = i(x•y)", &b1.precompose_all(&[i, i])?, &b0.postcompose(i)?)?;
    let ker_s = Subspace::kernel(s, "ker s").inclusion;
    let to_ker_t = Lin::identity(tv.c1.clone()).sub(&compose_lin(i, t)?)?;
    r.expect_zero("interchange (ker t • ker s)", &b1.precompose_all(&[&to_ker_t, &ker_s])?)?;
    r.expect_zero("interchange (ker s • ker t)", &b1.precompose_all(&[&ker_s, &to_ker_t])?)?;

    let assoc = &x.assoc;
    let arrow_a = x.arrow_assoc()?;
    r.expect_equal("s(𝒜) = (x•y)•z", &assoc.postcompose(s)?, &b0.insert(0, b0)?)?;
    r.expect_equal("t(𝒜) = x•(y•z)", &assoc.postcompose(t)?, &b0.insert(1, b0)?)?;
    r.expect_equal(
        "𝒜 natural",
        &arrow_a.precompose_all(&[t, t, t])?.add(&b1.insert(0, b1)?.postcompose(&arrow)?)?,
        &b1.insert(1, b1)?.postcompose(&arrow)?.add(&arrow_a.precompose_all(&[s, s, s])?)?,
    )?;
    let pent_lhs = arrow_a.insert(2, b0)?.add(&arrow_a.insert(0, b0)?)?;
    let pent_rhs = MultiMap::sum(&[
        b1.precompose(0, i)?.insert(1, assoc)?.postcompose(&arrow)?,
        arrow_a.insert(1, b0)?,
        b1.insert(0, assoc)?.precompose(3, i)?.postcompose(&arrow)?,
    ])?;
    r.expect_equal("pentagon", &pent_lhs, &pent_rhs)?;

    let dnat = &x.dnat;
    let arrow_d = x.arrow_dnat()?;
    r.expect_equal("s(𝒟) = D0(x•y)", &dnat.postcompose(s)?, &b0.postcompose(d0)?)?;
    r.expect_equal("t(𝒟) = D0x•y + x•D0y + D0x•D0y", &dnat.postcompose(t)?, &b0.subset_insertions(&[d0, d0])?)?;
    r.expect_equal(
        "𝒟 natural",
        &arrow_d.precompose_all(&[s, s])?.add(&b1.subset_insertions(&[d1, d1])?.postcompose(&arrow)?)?,
        &b1.postcompose(d1)?.postcompose(&arrow)?.add(&arrow_d.precompose_all(&[t, t])?)?,
    )?;

    r.expect_equal_lin("sD1 = D0s", &compose_lin(s, d1)?, &compose_lin(d0, s)?)?;
    r.expect_equal_lin("tD1 = D0t", &compose_lin(t, d1)?, &compose_lin(d0, t)?)?;
    r.expect_equal_lin("D1i = iD0", &compose_lin(d1, i)?, &compose_lin(i, d0)?)?;

    let i_shift = compose_lin(i, &Lin::identity(tv.c0.clone()).add(d0)?)?;
    let lhs = MultiMap::sum(&[
        b1.precompose(0, &i_shift)?.insert(1, &arrow_d)?,
        arrow_d.insert(1, b0)?,
        arrow_a.postcompose(d1)?,
    ])?;
    let rhs = MultiMap::sum(&[
        arrow_a.subset_insertions(&[d0, d0, d0])?,
        arrow_d.insert(0, b0)?,
        b1.insert(0, &arrow_d)?.precompose(2, &i_shift)?,
    ])?;
    r.expect_equal("(2-diff)", &lhs, &rhs)?;
    Ok(r)
}

/// `𝒜⃗ = 0` and `𝒟⃗ = 0`.
pub fn is_strict_2alg(x: &DiffAss2) -> Result<bool> {
    Ok(x.arrow_assoc()?.is_zero() && x.arrow_dnat()?.is_zero())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffAss2Morphism {
    pub f0: Lin,
    pub f1: Lin,
    /// `F2(x, y): F0x •′ F0y → F0(x•y)`
    pub f2: MultiMap,
    /// `F3(x): D0′F0x → F0D0x`
    pub f3: Lin,
}

impl DiffAss2Morphism {
    pub fn identity(x: &DiffAss2) -> Result<Self> {
        Ok(DiffAss2Morphism {
            f0: Lin::identity(x.tv.c0.clone()),
            f1: Lin::identity(x.tv.c1.clone()),
            f2: x.bullet0.postcompose(&x.tv.i)?,
            f3: compose_lin(&x.tv.i, &x.d0)?,
        })
    }

    fn check_shape(&self, src: &DiffAss2, dst: &DiffAss2) -> Result<()> {
        let (n0, n1) = (src.tv.c0.dim, src.tv.c1.dim);
        let (p0, p1) = (dst.tv.c0.dim, dst.tv.c1.dim);
        expect_lin(&self.f0, n0, p0, "F0")?;
        expect_lin(&self.f1, n1, p1, "F1")?;
        expect_multi(&self.f2, &[n0, n0], p1, "F2")?;
        expect_lin(&self.f3, n0, p1, "F3")
    }
}

/// Linear-functor conditions, the constraints and naturality of `F2`, `F3`,
/// the hexagon and (2-diff-homo) in arrow-part form.
pub fn check_diffass2_morphism(src: &DiffAss2, dst: &DiffAss2, m: &DiffAss2Morphism) -> Result<Report> {
    src.check_shape()?;
    dst.check_shape()?;
    m.check_shape(src, dst)?;
    let (s, t, i) = (&src.tv.s, &src.tv.t, &src.tv.i);
    let (sp, tp, ip) = (&dst.tv.s, &dst.tv.t, &dst.tv.i);
    let arrow_p = dst.tv.arrow()?;
    let (f0, f1, f2, f3) = (&m.f0, &m.f1, &m.f2, &m.f3);
    let (b0, b0p, b1, b1p) = (&src.bullet0, &dst.bullet0, &src.bullet1, &dst.bullet1);
    let mut r = Report::new("homomorphism of difference associative 2-algebras");

    r.expect_equal_lin("s'F1 = F0s", &compose_lin(sp, f1)?, &compose_lin(f0, s)?)?;
    r.expect_equal_lin("t'F1 = F0t", &compose_lin(tp, f1)?, &compose_lin(f0, t)?)?;
    r.expect_equal_lin("F1i = i'F0", &compose_lin(f1, i)?, &compose_lin(ip, f0)?)?;

    let arrow_f2 = f2.postcompose(&arrow_p)?;
    r.expect_equal("s'(F2) = F0x•'F0y", &f2.postcompose(sp)?, &b0p.precompose_all(&[f0, f0])?)?;
    r.expect_equal("t'(F2) = F0(x•y)", &f2.postcompose(tp)?, &b0.postcompose(f0)?)?;
    r.expect_equal(
        "F2 natural",
        &arrow_f2.precompose_all(&[s, s])?.add(&b1.postcompose(f1)?.postcompose(&arrow_p)?)?,
        &b1p.precompose_all(&[f1, f1])?.postcompose(&arrow_p)?.add(&arrow_f2.precompose_all(&[t, t])?)?,
    )?;
    let i_f0 = compose_lin(ip, f0)?;
    let hex_lhs = MultiMap::sum(&[
        dst.arrow_assoc()?.precompose_all(&[f0, f0, f0])?,
        b1p.precompose(0, &i_f0)?.insert(1, &arrow_f2)?,
        arrow_f2.insert(1, b0)?,
    ])?;
    let hex_rhs = MultiMap::sum(&[
        b1p.insert(0, &arrow_f2)?.precompose(2, &i_f0)?,
        arrow_f2.insert(0, b0)?,
        src.arrow_assoc()?.postcompose(f1)?,
    ])?;
    r.expect_equal("hexagon", &hex_lhs, &hex_rhs)?;

    let (d0, d1, d0p, d1p) = (&src.d0, &src.d1, &dst.d0, &dst.d1);
    let arrow_f3 = compose_lin(&arrow_p, f3)?;
    r.expect_equal_lin("s'(F3) = D0'F0", &compose_lin(sp, f3)?, &compose_lin(d0p, f0)?)?;
    r.expect_equal_lin("t'(F3) = F0D0", &compose_lin(tp, f3)?, &compose_lin(f0, d0)?)?;
    r.expect_equal_lin(
        "F3 natural",
        &compose_lin(&arrow_f3, s)?.add(&compose_lin(&arrow_p, &compose_lin(f1, d1)?)?)?,
        &compose_lin(&arrow_p, &compose_lin(d1p, f1)?)?.add(&compose_lin(&arrow_f3, t)?)?,
    )?;
    let lhs = MultiMap::sum(&[
        arrow_f2.postcompose(d1p)?,
        b0.postcompose(&arrow_f3)?,
        src.arrow_dnat()?.postcompose(f1)?,
    ])?;
    let rhs = MultiMap::sum(&[
        dst.arrow_dnat()?.precompose_all(&[f0, f0])?,
        b1p.precompose(0, &arrow_f3)?.precompose(1, &i_f0)?,
        b1p.precompose(0, &i_f0)?.precompose(1, &arrow_f3)?,
        b1p.precompose_all(&[f3, f3])?.postcompose(&arrow_p)?,
        arrow_f2.subset_insertions(&[d0, d0])?,
    ])?;
    r.expect_equal("(2-diff-homo)", &lhs, &rhs)?;
    Ok(r)
}

/// `G ∘ F`, composing the natural isomorphisms in the target 2-vector space.
pub fn compose_diffass2_morphism(dst: &DiffAss2, g: &DiffAss2Morphism, f: &DiffAss2Morphism) -> Result<DiffAss2Morphism> {
    if f.f1.dst().dim != g.f1.src().dim || g.f1.dst().dim != dst.tv.c1.dim {
        return Err(Error::shape("compose: morphisms are not composable"));
    }
    let it = compose_lin(&dst.tv.i, &dst.tv.t)?;
    let g2 = g.f2.precompose_all(&[&f.f0, &f.f0])?;
    let g3 = compose_lin(&g.f3, &f.f0)?;
    Ok(DiffAss2Morphism {
        f0: compose_lin(&g.f0, &f.f0)?,
        f1: compose_lin(&g.f1, &f.f1)?,
        f2: g2.add(&f.f2.postcompose(&g.f1)?)?.sub(&g2.postcompose(&it)?)?,
        f3: g3.add(&compose_lin(&g.f1, &f.f3)?)?.sub(&compose_lin(&it, &g3)?)?,
    })
}

/// `C1 = A0 ⊕ A1` with `(x, h): x → x + δh`.
pub fn functor_t(x: &TwoTermDiffAInf) -> Result<DiffAss2> {
    x.check()?.into_result()?;
    functor_t_unchecked(x)
}

fn t_sum(a: &AInf2) -> DirectSum {
    DirectSum::new("C1", vec![a.a0().clone(), a.a1().clone()])
}

fn functor_t_unchecked(x: &TwoTermDiffAInf) -> Result<DiffAss2> {
    let a = &x.ainf;
    let c1 = t_sum(a);
    let (p0, p1, in0, in1) = (c1.proj(0), c1.proj(1), c1.inj(0), c1.inj(1));
    let delta_p1 = compose_lin(a.delta(), &p1)?;
    let t = p0.add(&delta_p1)?;
    let top = MultiMap::sum(&[
        a.m01.precompose_all(&[&p0, &p1])?,
        a.m10.precompose_all(&[&p1, &p0])?,
        a.m01.precompose_all(&[&delta_p1, &p1])?,
    ])?;
    let bullet1 = a.m00.precompose_all(&[&p0, &p0])?.postcompose(&in0)?.add(&top.postcompose(&in1)?)?;
    let assoc = a.m00.insert(0, &a.m00)?.postcompose(&in0)?.add(&a.mu.postcompose(&in1)?)?;
    let d1 = compose_lin(&compose_lin(&in0, &x.dop.d0)?, &p0)?.add(&compose_lin(&compose_lin(&in1, &x.dop.d1)?, &p1)?)?;
    let dnat = a
        .m00
        .postcompose(&x.dop.d0)?
        .postcompose(&in0)?
        .add(&x.dop.d2.postcompose(&in1)?)?;
    Ok(DiffAss2 {
        tv: TwoVec { c0: a.a0().clone(), c1: c1.total.clone(), s: p0, t, i: in0 },
        bullet0: a.m00.clone(),
        bullet1,
        assoc,
        d0: x.dop.d0.clone(),
        d1,
        dnat,
    })
}

/// `T` on a homomorphism `m: src → dst`.
pub fn functor_t_mor(src: &TwoTermDiffAInf, dst: &TwoTermDiffAInf, m: &DiffAInf2Morphism) -> Result<DiffAss2Morphism> {
    let (cs, cd) = (t_sum(&src.ainf), t_sum(&dst.ainf));
    let (phi0, phi1) = (&m.base.phi0, &m.base.phi1);
    let (q0, q1) = (cd.inj(0), cd.inj(1));
    Ok(DiffAss2Morphism {
        f0: phi0.clone(),
        f1: compose_lin(&compose_lin(&q0, phi0)?, &cs.proj(0))?.add(&compose_lin(&compose_lin(&q1, phi1)?, &cs.proj(1))?)?,
        f2: dst
            .ainf
            .m00
            .precompose_all(&[phi0, phi0])?
            .postcompose(&q0)?
            .add(&m.base.phi2.postcompose(&q1)?)?,
        f3: compose_lin(&q0, &compose_lin(&dst.dop.d0, phi0)?)?.add(&compose_lin(&q1, &m.phi3)?)?,
    })
}

fn ker_s(x: &DiffAss2) -> Subspace {
    Subspace::kernel(&x.tv.s, "ker s")
}

/// `A0 = C0`, `A1 = ker s`, products through identity morphisms, `μ = 𝒜⃗`, `d2 = 𝒟⃗`.
pub fn functor_s(x: &DiffAss2) -> Result<TwoTermDiffAInf> {
    check_diffass2(x)?.into_result()?;
    functor_s_unchecked(x)
}

fn functor_s_unchecked(x: &DiffAss2) -> Result<TwoTermDiffAInf> {
    let k = ker_s(x);
    let (incl, coords) = (&k.inclusion, &k.coords);
    let tv = &x.tv;
    let d1_k = compose_lin(&x.d1, incl)?;
    if !compose_lin(&tv.s, &d1_k)?.is_zero() {
        return Err(Error::Precondition("D1 does not preserve ker s".into()));
    }
    let a0 = tv.c0.clone();
    let a1 = k.space.clone();
    let ainf = AInf2 {
        cx: TwoTermComplex::new(a0, a1, compose_lin(&tv.t, incl)?)?,
        m00: x.bullet0.clone(),
        m01: x.bullet1.precompose_all(&[&tv.i, incl])?.postcompose(coords)?,
        m10: x.bullet1.precompose_all(&[incl, &tv.i])?.postcompose(coords)?,
        mu: x.arrow_assoc()?.postcompose(coords)?,
    };
    Ok(TwoTermDiffAInf {
        ainf,
        dop: DiffOp2 {
            d0: x.d0.clone(),
            d1: compose_lin(coords, &d1_k)?,
            d2: x.arrow_dnat()?.postcompose(coords)?,
        },
    })
}

/// `S` on a homomorphism `m: src → dst`.
pub fn functor_s_mor(src: &DiffAss2, dst: &DiffAss2, m: &DiffAss2Morphism) -> Result<DiffAInf2Morphism> {
    let (ks, kd) = (ker_s(src), ker_s(dst));
    let to_kd = compose_lin(&kd.coords, &dst.tv.arrow()?)?;
    Ok(DiffAInf2Morphism {
        base: AInf2Morphism {
            phi0: m.f0.clone(),
            phi1: compose_lin(&compose_lin(&kd.coords, &m.f1)?, &ks.inclusion)?,
            phi2: m.f2.postcompose(&to_kd)?,
        },
        phi3: compose_lin(&to_kd, &m.f3)?,
    })
}

/// `α_C: T(S(C)) → C` with `(x, h) ↦ i_x + h`, together with `T(S(C))`.
pub fn alpha(x: &DiffAss2) -> Result<(DiffAss2, DiffAss2Morphism)> {
    let ts = functor_t_unchecked(&functor_s(x)?)?;
    let k = ker_s(x);
    let c1 = DirectSum::new("C1", vec![x.tv.c0.clone(), k.space.clone()]);
    let m = DiffAss2Morphism {
        f0: Lin::identity(x.tv.c0.clone()),
        f1: compose_lin(&x.tv.i, &c1.proj(0))?.add(&compose_lin(&k.inclusion, &c1.proj(1))?)?,
        f2: x.bullet0.postcompose(&x.tv.i)?,
        f3: compose_lin(&x.tv.i, &x.d0)?,
    };
    Ok((ts, m))
}

/// The inverse of [`alpha`]: `f ↦ (s(f), f⃗)`.
pub fn alpha_inverse(x: &DiffAss2) -> Result<DiffAss2Morphism> {
    let k = ker_s(x);
    let c1 = DirectSum::new("C1", vec![x.tv.c0.clone(), k.space.clone()]);
    let (q0, q1) = (c1.inj(0), c1.inj(1));
    Ok(DiffAss2Morphism {
        f0: Lin::identity(x.tv.c0.clone()),
        f1: compose_lin(&q0, &x.tv.s)?.add(&compose_lin(&q1, &compose_lin(&k.coords, &x.tv.arrow()?)?)?)?,
        f2: x.bullet0.postcompose(&q0)?,
        f3: compose_lin(&q0, &x.d0)?,
    })
}

/// Transports `x` along an invertible `r: C1 → C1`, keeping `C0`.
pub fn recoordinatize(x: &DiffAss2, r: &Lin) -> Result<DiffAss2> {
    let ri = r.inverse()?;
    let tv = &x.tv;
    Ok(DiffAss2 {
        tv: TwoVec {
            c0: tv.c0.clone(),
            c1: tv.c1.clone(),
            s: compose_lin(&tv.s, &ri)?,
            t: compose_lin(&tv.t, &ri)?,
            i: compose_lin(r, &tv.i)?,
        },
        bullet0: x.bullet0.clone(),
        bullet1: x.bullet1.precompose_all(&[&ri, &ri])?.postcompose(r)?,
        assoc: x.assoc.postcompose(r)?,
        d0: x.d0.clone(),
        d1: compose_lin(&compose_lin(r, &x.d1)?, &ri)?,
        dnat: x.dnat.postcompose(r)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diffainf2::{compose_diff_morphism, gauge_transform, is_strict};
    use crate::exactlin::{frac, int};
    use crate::genkit::catalog;

    fn strict_regular(da: &DifferenceAlgebra) -> TwoTermDiffAInf {
        crate::corresp::crossed_to_strict(&crate::corresp::CrossedModule::identity(da)).unwrap()
    }

    fn samples() -> Vec<TwoTermDiffAInf> {
        let mut out = Vec::new();
        for e in catalog::catalog_algebras().into_iter().filter(|e| e.alg.dim() <= 3) {
            for d in catalog::gen_difference_ops(&e.alg).into_iter().take(3) {
                let x = strict_regular(&DifferenceAlgebra { alg: e.alg.clone(), d });
                let a = &x.ainf;
                let phi2 = MultiMap::from_fn(vec![a.a0().clone(); 2], a.a1().clone(), |o, i| frac(((o + i[0] * 2 + i[1]) % 3) as i64 - 1, 2));
                let phi3 = Lin::from_fn(a.a0().clone(), a.a1().clone(), |r, c| int(((r + c) % 2) as i64));
                let (y, _) = gauge_transform(&x, &phi2, &phi3).unwrap();
                out.push(x);
                out.push(y);
            }
        }
        out
    }

    #[test]
    fn t_images_pass_and_s_inverts_t() {
        for x in samples() {
            let c = functor_t(&x).unwrap();
            let r = check_diffass2(&c).unwrap();
            assert!(r.passed(), "{r}");
            assert_eq!(functor_s(&c).unwrap(), x);
            assert_eq!(is_strict_2alg(&c).unwrap(), is_strict(&x));
        }
    }

    #[test]
    fn discrete_instance_is_strict_and_valid() {
        let m2 = catalog::matrix_algebra();
        let da = DifferenceAlgebra { d: catalog::gen_difference_ops(&m2)[2].clone(), alg: m2 };
        let c = DiffAss2::discrete(&da);
        assert!(check_diffass2(&c).unwrap().passed());
        assert!(is_strict_2alg(&c).unwrap());
        assert!(is_strict(&functor_s(&c).unwrap()));
    }

    #[test]
    fn alpha_is_an_isomorphism_on_recoordinatized_images() {
        let x = &samples()[3];
        let c = functor_t(x).unwrap();
        let n = c.tv.c1.dim;
        let r = Lin::from_fn(c.tv.c1.clone(), c.tv.c1.clone(), |i, j| if i == j { int(1) } else if j == (i + 1) % n { int(2) } else { int(0) });
        let c = recoordinatize(&c, &r).unwrap();
        assert!(check_diffass2(&c).unwrap().passed());
        let (ts, a) = alpha(&c).unwrap();
        assert!(check_diffass2_morphism(&ts, &c, &a).unwrap().passed());
        let b = alpha_inverse(&c).unwrap();
        assert!(check_diffass2_morphism(&c, &ts, &b).unwrap().passed());
        assert_eq!(compose_diffass2_morphism(&c, &a, &b).unwrap(), DiffAss2Morphism::identity(&c).unwrap());
        assert_eq!(compose_diffass2_morphism(&ts, &b, &a).unwrap(), DiffAss2Morphism::identity(&ts).unwrap());
    }

    #[test]
    fn t_and_s_on_morphisms_respect_identities_and_composition() {
        let x = &samples()[2];
        let a = &x.ainf;
        let phi2 = MultiMap::from_fn(vec![a.a0().clone(); 2], a.a1().clone(), |o, i| int((o * i[0] + i[1]) as i64 % 3));
        let phi3 = Lin::from_fn(a.a0().clone(), a.a1().clone(), |r, c| int(r as i64 - c as i64));
        let (y, f) = gauge_transform(x, &phi2, &phi3).unwrap();
        let (z, g) = gauge_transform(&y, &phi2.neg(), &phi3).unwrap();
        let (tx, ty, tz) = (functor_t(x).unwrap(), functor_t(&y).unwrap(), functor_t(&z).unwrap());
        let tf = functor_t_mor(x, &y, &f).unwrap();
        let tg = functor_t_mor(&y, &z, &g).unwrap();
        assert!(check_diffass2_morphism(&tx, &ty, &tf).unwrap().passed());
        let gf = compose_diff_morphism(&g, &f).unwrap();
        assert_eq!(functor_t_mor(x, &z, &gf).unwrap(), compose_diffass2_morphism(&tz, &tg, &tf).unwrap());
        let id = DiffAInf2Morphism::identity(x);
        assert_eq!(functor_t_mor(x, x, &id).unwrap(), DiffAss2Morphism::identity(&tx).unwrap());
        assert_eq!(functor_s_mor(&tx, &ty, &tf).unwrap(), f);
        assert_eq!(functor_s_mor(&tx, &tx, &DiffAss2Morphism::identity(&tx).unwrap()).unwrap(), id);
    }

    #[test]
    fn perturbed_mu_breaks_a_coherence_check() {
        let mut x = samples()[1].clone();
        let v = x.ainf.mu.get(0, &[0, 0, 0]).clone();
        x.ainf.mu.set(0, &[0, 0, 0], v + int(1));
        let c = functor_t_unchecked(&x).unwrap();
        let r = check_diffass2(&c).unwrap();
        assert!(!r.passed());
    }

    #[test]
    fn composition_in_c1_adds_arrow_parts() {
        let x = &samples()[1];
        let c = functor_t(x).unwrap();
        let n0 = x.ainf.a0().dim;
        let n1 = x.ainf.a1().dim;
        let mut f = vec![int(0); n0 + n1];
        f[0] = int(1);
        f[n0] = int(2);
        let tf = c.tv.t.apply(&f).unwrap();
        let mut g = c.tv.i.apply(&tf).unwrap();
        g[n0 + n1 - 1] += int(3);
        let gf = c.tv.compose(&g, &f).unwrap();
        let sum: Vec<_> = c.tv.arrow_of(&f).unwrap().iter().zip(c.tv.arrow_of(&g).unwrap()).map(|(a, b)| a + b).collect();
        assert_eq!(c.tv.arrow_of(&gf).unwrap(), sum);
    }
}
