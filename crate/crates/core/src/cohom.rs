//! The cochain complex of a difference algebra with coefficients in a
//! difference bimodule.

use crate::diffalg::{check_diff_bimodule, twist_unchecked, AssocAlgebra, Bimodule, DiffBimodule, DifferenceAlgebra};
use crate::exactlin::{is_zero_vector, sub_vectors, Lin, MultiMap, Vector};
use crate::{Error, Result};

/// Largest cochain degree the dense storage is allowed to reach.
pub const MAX_DEGREE: usize = 5;

/// A cochain in `C^n_Diff((A, d); (M, Δ))`.
///
/// Degree `n ≥ 1` carries `f: A^n → M` and `χ ∈ C^{n-1}(A, M^d)`; in degree 1
/// `χ` is an element of `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiffCochain {
    Degree0(Vector),
    Degree1 { f: MultiMap, chi: Vector },
    Higher { f: MultiMap, chi: MultiMap },
}

impl DiffCochain {
    pub fn degree(&self) -> usize {
        match self {
            DiffCochain::Degree0(_) => 0,
            DiffCochain::Degree1 { .. } => 1,
            DiffCochain::Higher { f, .. } => f.arity(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            DiffCochain::Degree0(u) => is_zero_vector(u),
            DiffCochain::Degree1 { f, chi } => f.is_zero() && is_zero_vector(chi),
            DiffCochain::Higher { f, chi } => f.is_zero() && chi.is_zero(),
        }
    }
}

/// Fixed coefficients `(A, d)`, `(M, Δ)` together with the twisted module `M^d`.
#[derive(Clone, Debug)]
pub struct CochainComplex {
    pub da: DifferenceAlgebra,
    pub bm: DiffBimodule,
    pub twisted: Bimodule,
}

impl CochainComplex {
    /// Validates `(A, d)` and `(M, Δ)` before building `M^d`.
    pub fn new(da: DifferenceAlgebra, bm: DiffBimodule) -> Result<Self> {
        da.check()?.into_result()?;
        check_diff_bimodule(&da, &bm)?.into_result()?;
        let twisted = twist_unchecked(&da, &bm.module)?;
        Ok(CochainComplex { da, bm, twisted })
    }

    pub fn zero(&self, degree: usize) -> Result<DiffCochain> {
        cap(degree)?;
        let (a, m) = (self.da.space().clone(), self.bm.space().clone());
        let map = |n: usize| MultiMap::zeros(vec![a.clone(); n], m.clone());
        Ok(match degree {
            0 => DiffCochain::Degree0(vec![Default::default(); m.dim]),
            1 => DiffCochain::Degree1 {
                f: map(1),
                chi: vec![Default::default(); m.dim],
            },
            n => DiffCochain::Higher { f: map(n), chi: map(n - 1) },
        })
    }

    fn check_cochain(&self, c: &DiffCochain) -> Result<()> {
        let (a, m) = (self.da.space().dim, self.bm.space().dim);
        let ok_map = |f: &MultiMap, n: usize| f.dst().dim == m && f.src_dims() == vec![a; n];
        let ok = match c {
            DiffCochain::Degree0(u) => u.len() == m,
            DiffCochain::Degree1 { f, chi } => ok_map(f, 1) && chi.len() == m,
            DiffCochain::Higher { f, chi } => f.arity() >= 2 && ok_map(f, f.arity()) && ok_map(chi, f.arity() - 1),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::shape("cochain does not match the coefficients of the complex"))
        }
    }

    /// `δ_Diff`.
    pub fn diff_coboundary(&self, c: &DiffCochain) -> Result<DiffCochain> {
        self.check_cochain(c)?;
        let n = c.degree();
        cap(n + 1)?;
        let alg = &self.da.alg;
        let (d, delta) = (&self.da.d, &self.bm.delta);
        Ok(match c {
            DiffCochain::Degree0(u) => DiffCochain::Degree1 {
                f: hochschild_d0(&self.bm.module, u)?,
                chi: partial_d_delta0(delta, u)?,
            },
            DiffCochain::Degree1 { f, chi } => DiffCochain::Higher {
                f: hochschild_d(alg, &self.bm.module, f)?,
                chi: hochschild_d0(&self.twisted, chi)?.sub(&partial_d_delta(f, d, delta)?)?,
            },
            DiffCochain::Higher { f, chi } => {
                let mut p = partial_d_delta(f, d, delta)?;
                if n % 2 == 1 {
                    p = p.neg();
                }
                DiffCochain::Higher {
                    f: hochschild_d(alg, &self.bm.module, f)?,
                    chi: hochschild_d(alg, &self.twisted, chi)?.add(&p)?,
                }
            }
        })
    }

    /// Whether `(μ, χ)` is closed under `δ_Diff`.
    pub fn is_3_cocycle(&self, mu: &MultiMap, chi: &MultiMap) -> Result<bool> {
        let c = DiffCochain::Higher { f: mu.clone(), chi: chi.clone() };
        if c.degree() != 3 {
            return Err(Error::shape("a 3-cochain needs μ of arity 3"));
        }
        Ok(self.diff_coboundary(&c)?.is_zero())
    }
}

fn cap(degree: usize) -> Result<()> {
    if degree > MAX_DEGREE {
        return Err(Error::ArityCap { arity: degree, cap: MAX_DEGREE });
    }
    Ok(())
}

/// Hochschild coboundary of an `n`-cochain, `n ≥ 1`.
pub fn hochschild_d(alg: &AssocAlgebra, bm: &Bimodule, f: &MultiMap) -> Result<MultiMap> {
    let n = f.arity();
    if n == 0 {
        return Err(Error::shape("use hochschild_d0 for 0-cochains"));
    }
    cap(n + 1)?;
    let mut terms = vec![bm.left.insert(1, f)?];
    for i in 1..=n {
        let t = f.insert(i - 1, &alg.mult)?;
        terms.push(if i % 2 == 1 { t.neg() } else { t });
    }
    let last = bm.right.insert(0, f)?;
    terms.push(if n.is_multiple_of(2) { last.neg() } else { last });
    MultiMap::sum(&terms)
}

/// `(δu)(a) = a·u − u·a`.
pub fn hochschild_d0(bm: &Bimodule, u: &[crate::exactlin::Rational]) -> Result<MultiMap> {
    bm.left.fix_arg(1, u)?.sub(&bm.right.fix_arg(0, u)?)
}

/// `∂^{d,Δ} f`: `d` in every nonempty set of slots, minus `Δ∘f`.
pub fn partial_d_delta(f: &MultiMap, d: &Lin, delta: &Lin) -> Result<MultiMap> {
    let ds = vec![d; f.arity()];
    f.subset_insertions(&ds)?.sub(&f.postcompose(delta)?)
}

/// `∂^{d,Δ}` on `M` itself: `u ↦ −Δu`.
pub fn partial_d_delta0(delta: &Lin, u: &[crate::exactlin::Rational]) -> Result<Vector> {
    Ok(sub_vectors(&vec![Default::default(); u.len()], &delta.apply(u)?))
}
