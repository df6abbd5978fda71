//! The ∗-product on `Ā ⊕ A`, the graph criterion for difference operators,
//! the Gerstenhaber bracket and the derived brackets `l1`, `l2`.

use crate::diffalg::AssocAlgebra;
use crate::exactlin::{compose_lin, frac, DirectSum, Lin, MultiMap};
use crate::report::Report;
use crate::{Error, Result};

/// Default bound on the arity of brackets.
pub const ARITY_CAP: usize = 3;

/// `Ā ⊕ A` with `(ā, x) ∗ (b̄, y) = (ab̄, ay + xb + xy)`; `Ā` occupies the
/// first `dim A` coordinates.
#[derive(Clone, Debug)]
pub struct StarAlgebra {
    pub base: AssocAlgebra,
    pub sum: DirectSum,
    pub mult: MultiMap,
}

impl StarAlgebra {
    pub fn bar_proj(&self) -> Lin {
        self.sum.proj(0)
    }

    pub fn proj(&self) -> Lin {
        self.sum.proj(1)
    }

    pub fn bar_inj(&self) -> Lin {
        self.sum.inj(0)
    }

    pub fn inj(&self) -> Lin {
        self.sum.inj(1)
    }

    /// `f: A → A` viewed as the map `(ā, x) ↦ (0, f(a))`.
    pub fn embed(&self, f: &Lin) -> Result<MultiMap> {
        Ok(compose_lin(&compose_lin(&self.inj(), f)?, &self.bar_proj())?.into_multi())
    }

    /// Keeps only the `Ā^k → A` component.
    pub fn project(&self, h: &MultiMap) -> Result<MultiMap> {
        let bar = compose_lin(&self.bar_inj(), &self.bar_proj())?;
        let onto_a = compose_lin(&self.inj(), &self.proj())?;
        let slots = vec![&bar; h.arity()];
        h.precompose_all(&slots)?.postcompose(&onto_a)
    }

    pub fn check_associative(&self) -> Result<Report> {
        let mut r = Report::new("∗-product");
        r.expect_equal("(u∗v)∗w = u∗(v∗w)", &self.mult.insert(0, &self.mult)?, &self.mult.insert(1, &self.mult)?)?;
        Ok(r)
    }
}

pub fn build_star(alg: &AssocAlgebra) -> Result<StarAlgebra> {
    let bar = alg.space.relabel(format!("{}~", alg.space.label));
    let sum = DirectSum::new("Abar+A", vec![bar, alg.space.clone()]);
    let (pb, pa, ib, ia) = (sum.proj(0), sum.proj(1), sum.inj(0), sum.inj(1));
    let m = &alg.mult;
    let into_a = MultiMap::sum(&[
        m.precompose_all(&[&pb, &pa])?,
        m.precompose_all(&[&pa, &pb])?,
        m.precompose_all(&[&pa, &pa])?,
    ])?;
    let mult = m.precompose_all(&[&pb, &pb])?.postcompose(&ib)?.add(&into_a.postcompose(&ia)?)?;
    Ok(StarAlgebra { base: alg.clone(), sum, mult })
}

/// Whether `{(ā, d(a))}` is closed under `∗`.
pub fn graph_subalgebra_check(alg: &AssocAlgebra, d: &Lin) -> Result<Report> {
    if d.src().dim != alg.dim() || d.dst().dim != alg.dim() {
        return Err(Error::shape("d must be an endomorphism of A"));
    }
    let star = build_star(alg)?;
    let graph = star.bar_inj().add(&compose_lin(&star.inj(), d)?)?;
    let defect = star.proj().sub(&compose_lin(d, &star.bar_proj())?)?;
    let mut r = Report::new("graph of d under ∗");
    r.expect_zero("Graph(d) ∗ Graph(d) ⊆ Graph(d)", &star.mult.precompose_all(&[&graph, &graph])?.postcompose(&defect)?)?;
    Ok(r)
}

/// `Σ_i (−1)^{i(l−1)} f(…, g(x_i, …), …)`.
pub fn insertion(f: &MultiMap, g: &MultiMap) -> Result<MultiMap> {
    let l = g.arity();
    let mut terms = Vec::with_capacity(f.arity());
    for i in 0..f.arity() {
        let t = f.insert(i, g)?;
        terms.push(if i * (l - 1) % 2 == 1 { t.neg() } else { t });
    }
    MultiMap::sum(&terms)
}

/// `[f, g] = f∘̄g − (−1)^{(k−1)(l−1)} g∘̄f`, refusing results above `cap`.
pub fn gerstenhaber(f: &MultiMap, g: &MultiMap, cap: usize) -> Result<MultiMap> {
    let (k, l) = (f.arity(), g.arity());
    if k == 0 || l == 0 {
        return Err(Error::shape("bracket arguments need arity at least one"));
    }
    if k + l - 1 > cap {
        return Err(Error::ArityCap { arity: k + l - 1, cap });
    }
    let back = insertion(g, f)?;
    let back = if (k - 1) * (l - 1) % 2 == 1 { back } else { back.neg() };
    insertion(f, g)?.add(&back)
}

/// `l1(f) = P[π, f]`.
pub fn l1(star: &StarAlgebra, f: &Lin) -> Result<MultiMap> {
    star.project(&gerstenhaber(&star.mult, &star.embed(f)?, ARITY_CAP)?)
}

/// `l2(f, g) = P[[π, f], g]`.
pub fn l2(star: &StarAlgebra, f: &Lin, g: &Lin) -> Result<MultiMap> {
    let inner = gerstenhaber(&star.mult, &star.embed(f)?, ARITY_CAP)?;
    star.project(&gerstenhaber(&inner, &star.embed(g)?, ARITY_CAP)?)
}

/// `l1(d) + ½ l2(d, d)`, a map `(Ā ⊕ A)² → Ā ⊕ A` supported on `Ā² → A`.
pub fn mc_residual(alg: &AssocAlgebra, d: &Lin) -> Result<MultiMap> {
    if d.src().dim != alg.dim() || d.dst().dim != alg.dim() {
        return Err(Error::shape("d must be an endomorphism of A"));
    }
    let star = build_star(alg)?;
    l1(&star, d)?.add(&l2(&star, d, d)?.scale(&frac(1, 2)))
}

pub fn mc_check(alg: &AssocAlgebra, d: &Lin) -> Result<bool> {
    Ok(mc_residual(alg, d)?.is_zero())
}
