//! Seeded generators of valid structures and morphisms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::catalog::{self, catalog_algebras, gen_difference_ops};
use crate::cohom::{CochainComplex, DiffCochain};
use crate::corresp::{cocycle_to_skeletal, crossed_to_strict, CocycleData, CrossedModule};
use crate::diffainf2::{base_change, compose_diff_morphism, gauge_transform, DiffAInf2Morphism, TwoTermDiffAInf};
use crate::diffalg::{twist_bimodule, AssocAlgebra, Bimodule, DiffBimodule, DifferenceAlgebra};
use crate::exactlin::{compose_lin, frac, int, Lin, MultiMap, Rational, Space};
use crate::hbimod::{semidirect_diff, split_semidirect, DiffHBimod2, HBimod2, SemidirectCarrier};
use crate::{Error, Result};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A rational `p/q` with `|p| ≤ 2`, `q ∈ {1, 2}`.
pub fn small_rational(rng: &mut impl Rng) -> Rational {
    frac(rng.gen_range(-2..=2), rng.gen_range(1..=2))
}

pub fn random_multi(rng: &mut impl Rng, srcs: Vec<Space>, dst: Space) -> MultiMap {
    MultiMap::from_fn(srcs, dst, |_, _| small_rational(rng))
}

pub fn random_lin(rng: &mut impl Rng, src: Space, dst: Space) -> Lin {
    Lin::from_fn(src, dst, |_, _| small_rational(rng))
}

/// A product of a lower and an upper unitriangular matrix.
pub fn random_invertible(rng: &mut impl Rng, space: &Space) -> Lin {
    let n = space.dim;
    let mut tri = |upper: bool| {
        Lin::from_fn(space.clone(), space.clone(), |r, c| match (r == c, (r < c) == upper) {
            (true, _) => int(1),
            (false, true) => int(rng.gen_range(-1..=1)),
            _ => int(0),
        })
    };
    let (l, u) = (tri(false), tri(true));
    debug_assert_eq!(l.rank(), n);
    compose_lin(&l, &u).expect("square factors")
}

/// Every `(A, d)` with `A` from the catalog and `d` from its closed-form families.
pub fn difference_algebras() -> Vec<DifferenceAlgebra> {
    catalog_algebras()
        .into_iter()
        .flat_map(|e| {
            gen_difference_ops(&e.alg)
                .into_iter()
                .map(move |d| DifferenceAlgebra { alg: e.alg.clone(), d })
        })
        .collect()
}

/// Arbitrary endomorphisms; most are not difference operators.
pub fn random_ops(alg: &AssocAlgebra, seed: u64, count: usize) -> Vec<Lin> {
    let mut r = rng(seed);
    (0..count).map(|_| random_lin(&mut r, alg.space.clone(), alg.space.clone())).collect()
}

/// The regular bimodule and its `d`-twist, both with `Δ = d`.
pub fn coefficient_bimodules(da: &DifferenceAlgebra) -> Result<Vec<DiffBimodule>> {
    let regular = DiffBimodule::regular(da);
    let twisted = DiffBimodule {
        module: twist_bimodule(da, &regular.module)?,
        delta: regular.delta.clone(),
    };
    Ok(vec![regular, twisted])
}

/// A random cochain of the given degree in `C^*((A, d); (M, Δ))`.
pub fn random_cochain(cx: &CochainComplex, degree: usize, seed: u64) -> DiffCochain {
    let mut r = rng(seed);
    let (a, m) = (cx.da.space().clone(), cx.bm.space().clone());
    let vector = |r: &mut ChaCha8Rng| (0..m.dim).map(|_| small_rational(r)).collect();
    match degree {
        0 => DiffCochain::Degree0(vector(&mut r)),
        1 => DiffCochain::Degree1 {
            f: random_multi(&mut r, vec![a], m.clone()),
            chi: vector(&mut r),
        },
        n => DiffCochain::Higher {
            f: random_multi(&mut r, vec![a.clone(); n], m.clone()),
            chi: random_multi(&mut r, vec![a; n - 1], m),
        },
    }
}

/// `(μ, χ) = δ_Diff` of a random 2-cochain, fed through the cocycle
/// correspondence.
pub fn gen_cocycle(da: &DifferenceAlgebra, bm: &DiffBimodule, seed: u64) -> Result<CocycleData> {
    let cx = CochainComplex::new(da.clone(), bm.clone())?;
    let DiffCochain::Higher { f: mu, chi } = cx.diff_coboundary(&random_cochain(&cx, 2, seed))? else {
        unreachable!("the coboundary of a 2-cochain has degree 3")
    };
    Ok(CocycleData {
        da: da.clone(),
        bm: bm.clone(),
        mu,
        chi,
    })
}

pub fn gen_skeletal(da: &DifferenceAlgebra, bm: &DiffBimodule, seed: u64) -> Result<TwoTermDiffAInf> {
    cocycle_to_skeletal(&gen_cocycle(da, bm, seed)?)
}

/// `E12 ⊂ T2` with `d = −Id` on both.
pub fn ideal_crossed_module() -> CrossedModule {
    let t2 = catalog::upper_triangular();
    let n2 = catalog::strictly_upper();
    let (a, h) = (t2.space.clone(), n2.space.clone());
    let mut left = MultiMap::zeros(vec![a.clone(), h.clone()], h.clone());
    left.set(0, &[0, 0], int(1));
    let mut right = MultiMap::zeros(vec![h.clone(), a.clone()], h.clone());
    right.set(0, &[0, 2], int(1));
    let partial = Lin::from_fn(h, a, |r, _| int((r == 1) as i64));
    CrossedModule::with_minus_identity(t2, n2, left, right, partial)
}

/// `∂ = Id_A` and `∂ = 0` over every catalog difference algebra, plus the
/// `−Id`-twisted ideal `E12 ⊂ T2`.
pub fn gen_crossed_modules() -> Vec<CrossedModule> {
    let mut out = Vec::new();
    for da in difference_algebras() {
        out.push(CrossedModule::identity(&da));
        out.push(CrossedModule::zero_partial(&da, &DiffBimodule::regular(&da)));
    }
    out.push(ideal_crossed_module());
    out
}

/// `M0 = M1 = A` regular, `δ = c·Id`, `Δ0 = Δ1 = d`, `ν = θ = 0`.
pub fn regular_hbimod(da: &DifferenceAlgebra, c: i64) -> DiffHBimod2 {
    let b = Bimodule::regular(&da.alg);
    let (m0, m1) = (b.m.relabel("M0"), b.m.relabel("M1"));
    let a = da.space().clone();
    let rl = |m: &MultiMap, srcs: Vec<Space>, dst: &Space| m.clone().relabeled(srcs, dst.clone()).expect("same dimensions");
    let hb = HBimod2::strict(
        m0.clone(),
        m1.clone(),
        Lin::identity(m1.clone()).scale(&int(c)).relabeled(m1.clone(), m0.clone()).expect("same dimensions"),
        rl(&b.left, vec![a.clone(), m0.clone()], &m0),
        rl(&b.right, vec![m0.clone(), a.clone()], &m0),
        rl(&b.left, vec![a.clone(), m1.clone()], &m1),
        rl(&b.right, vec![m1.clone(), a], &m1),
    );
    let delta0 = da.d.clone().relabeled(m0.clone(), m0).expect("same dimensions");
    let delta1 = da.d.clone().relabeled(m1.clone(), m1).expect("same dimensions");
    DiffHBimod2::strict(hb, delta0, delta1)
}

/// Gauge-transforms the semidirect product by a random `(φ2, φ3)` supported
/// on the module directions and reads the result back as a bimodule.
pub fn gauged_hbimod(da: &DifferenceAlgebra, dhb: &DiffHBimod2, seed: u64) -> Result<DiffHBimod2> {
    let x = semidirect_diff(da, dhb)?;
    let c = SemidirectCarrier::new(da.space(), &dhb.base.m0);
    let (a, v, h) = (da.space().clone(), dhb.base.m0.clone(), dhb.base.m1.clone());
    let mut r = rng(seed);
    let f_am = random_multi(&mut r, vec![a.clone(), v.clone()], h.clone());
    let f_ma = random_multi(&mut r, vec![v.clone(), a], h.clone());
    let phi2 = f_am.precompose_all(&[&c.pa, &c.pm])?.add(&f_ma.precompose_all(&[&c.pm, &c.pa])?)?;
    let phi3 = compose_lin(&random_lin(&mut r, v, h), &c.pm)?;
    let (y, _) = gauge_transform(&x, &phi2, &phi3)?;
    let (da2, out) = split_semidirect(da.space(), &dhb.base.m0, &y)?;
    if da2 != *da {
        return Err(Error::Precondition("gauge changed the base algebra".into()));
    }
    Ok(out)
}

/// Strict regular bimodules with `δ ∈ {0, Id}` and their gauged versions,
/// over every catalog difference algebra.
pub fn gen_diff_hbimods() -> Vec<(DifferenceAlgebra, DiffHBimod2)> {
    let mut out = Vec::new();
    for (k, da) in difference_algebras().into_iter().enumerate() {
        for c in [0, 1] {
            let strict = regular_hbimod(&da, c);
            let gauged = gauged_hbimod(&da, &strict, (2 * k + c as usize) as u64).expect("strict input is valid");
            out.push((da.clone(), strict));
            out.push((da.clone(), gauged));
        }
    }
    out
}

pub fn gen_hbimods() -> Vec<(AssocAlgebra, HBimod2)> {
    gen_diff_hbimods().into_iter().map(|(da, d)| (da.alg, d.base)).collect()
}

/// Skeletal, strict, semidirect and gauge-transformed structures whose
/// degree-0 space has dimension at most `max_dim`.
pub fn gen_diff_ainf_corpus(seed: u64, max_dim: usize) -> Vec<TwoTermDiffAInf> {
    let mut out = Vec::new();
    for (k, da) in difference_algebras().into_iter().enumerate() {
        if da.alg.dim() > max_dim {
            continue;
        }
        let s = seed.wrapping_add(k as u64);
        let bm = DiffBimodule::regular(&da);
        let skel = gen_skeletal(&da, &bm, s).expect("coboundaries are cocycles");
        let strict = crossed_to_strict(&CrossedModule::identity(&da)).expect("identity crossed module");
        let moved = gen_morphism(&skel, s).expect("valid").0;
        out.extend([skel, strict, moved]);
        if 2 * da.alg.dim() <= max_dim {
            let semi = semidirect_diff(&da, &gauged_hbimod(&da, &regular_hbimod(&da, 1), s).expect("valid")).expect("valid");
            out.push(gen_morphism(&semi, s).expect("valid").0);
            out.push(semi);
        }
    }
    out
}

/// A random gauge transform followed by a random change of basis, as a
/// single morphism `x → y`.
pub fn gen_morphism(x: &TwoTermDiffAInf, seed: u64) -> Result<(TwoTermDiffAInf, DiffAInf2Morphism)> {
    let mut r = rng(seed);
    let (a0, a1) = (x.ainf.a0().clone(), x.ainf.a1().clone());
    let phi2 = random_multi(&mut r, vec![a0.clone(), a0.clone()], a1.clone());
    let phi3 = random_lin(&mut r, a0.clone(), a1.clone());
    let (g, m1) = gauge_transform(x, &phi2, &phi3)?;
    let (p, q) = (random_invertible(&mut r, &a0), random_invertible(&mut r, &a1));
    let (y, m2) = base_change(&g, &p, &q)?;
    Ok((y, compose_diff_morphism(&m2, &m1)?))
}

/// `x → y → z` with the two composable morphisms.
pub fn gen_morphism_chain(x: &TwoTermDiffAInf, seed: u64, len: usize) -> Result<Vec<(TwoTermDiffAInf, DiffAInf2Morphism)>> {
    let mut out = Vec::with_capacity(len);
    let mut cur = x.clone();
    for i in 0..len {
        let (next, m) = gen_morphism(&cur, seed.wrapping_mul(31).wrapping_add(i as u64))?;
        cur = next.clone();
        out.push((next, m));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corresp::check_crossed_module;
    use crate::diffainf2::{check_diff_morphism, is_skeletal};
    use crate::hbimod::{check_diff_hbimod, check_hbimod};

    #[test]
    fn skeletal_generation_is_deterministic_and_seed_sensitive() {
        let m2 = catalog::matrix_algebra();
        let da = DifferenceAlgebra { d: m2.identity().neg(), alg: m2 };
        let bm = DiffBimodule::regular(&da);
        let x = gen_skeletal(&da, &bm, 7).unwrap();
        assert!(is_skeletal(&x) && x.check().unwrap().passed());
        assert_eq!(gen_skeletal(&da, &bm, 7).unwrap(), x);
        assert_ne!(gen_skeletal(&da, &bm, 8).unwrap().ainf.mu, x.ainf.mu);
    }

    #[test]
    fn zero_cochain_gives_zero_mu() {
        let da = difference_algebras().remove(0);
        let bm = DiffBimodule::regular(&da);
        let cx = CochainComplex::new(da.clone(), bm.clone()).unwrap();
        let DiffCochain::Higher { f, chi } = cx.zero(3).unwrap() else { unreachable!() };
        let x = cocycle_to_skeletal(&CocycleData { da, bm, mu: f, chi }).unwrap();
        assert!(x.ainf.mu.is_zero() && x.dop.d2.is_zero());
    }

    #[test]
    fn generated_crossed_modules_and_hbimods_pass() {
        let cms = gen_crossed_modules();
        assert!(cms.len() >= 50);
        for cm in &cms {
            assert!(check_crossed_module(cm).unwrap().passed());
        }
        for (da, dhb) in gen_diff_hbimods() {
            assert!(check_hbimod(&da.alg, &dhb.base).unwrap().passed());
            assert!(check_diff_hbimod(&da, &dhb).unwrap().passed());
        }
    }

    #[test]
    fn generated_morphisms_satisfy_the_homomorphism_identities() {
        for (k, x) in gen_diff_ainf_corpus(1, 4).into_iter().enumerate() {
            let (y, m) = gen_morphism(&x, k as u64).unwrap();
            assert!(y.check().unwrap().passed());
            let r = check_diff_morphism(&x, &y, &m).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn random_invertible_has_full_rank() {
        let mut r = rng(3);
        for n in 0..5 {
            assert_eq!(random_invertible(&mut r, &Space::new("V", n)).rank(), n);
        }
    }
}
