//! Associative algebras, difference operators, bimodules over difference
//! algebras and the twisted bimodule `M^d`.
//!
//! A difference operator on `A` is a linear `d` with
//! `d(ab) = d(a)b + a d(b) + d(a)d(b)`.

use crate::exactlin::{Lin, MultiMap, Space};
use crate::report::Report;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssocAlgebra {
    pub space: Space,
    pub mult: MultiMap,
}

impl AssocAlgebra {
    pub fn new(space: Space, mult: MultiMap) -> Result<Self> {
        if mult.arity() != 2 || mult.src_dims() != [space.dim, space.dim] || mult.dst().dim != space.dim {
            return Err(Error::shape(format!("multiplication must be {0}×{0}→{0}", space)));
        }
        Ok(AssocAlgebra { space, mult })
    }

    pub fn dim(&self) -> usize {
        self.space.dim
    }

    pub fn identity(&self) -> Lin {
        Lin::identity(self.space.clone())
    }

    /// `(ab)c = a(bc)` on all basis triples.
    pub fn check_associative(&self) -> Result<Report> {
        let mut r = Report::new("associative algebra");
        r.expect_equal(
            "associativity",
            &self.mult.insert(0, &self.mult)?,
            &self.mult.insert(1, &self.mult)?,
        )?;
        Ok(r)
    }

    /// `φ(ab) = φ(a)φ(b)` on basis pairs.
    pub fn check_endomorphism(&self, phi: &Lin) -> Result<Report> {
        self.check_endo_shape(phi)?;
        let mut r = Report::new("algebra endomorphism");
        r.expect_equal(
            "multiplicative",
            &self.mult.postcompose(phi)?,
            &self.mult.precompose_all(&[phi, phi])?,
        )?;
        Ok(r)
    }

    fn check_endo_shape(&self, f: &Lin) -> Result<()> {
        if f.src().dim != self.dim() || f.dst().dim != self.dim() {
            return Err(Error::shape(format!(
                "expected an endomorphism of {}, got {}→{}",
                self.space,
                f.src(),
                f.dst()
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferenceAlgebra {
    pub alg: AssocAlgebra,
    pub d: Lin,
}

impl DifferenceAlgebra {
    pub fn space(&self) -> &Space {
        &self.alg.space
    }

    pub fn mult(&self) -> &MultiMap {
        &self.alg.mult
    }

    /// `a ↦ a + d(a)`.
    pub fn shifted(&self) -> Result<Lin> {
        self.alg.identity().add(&self.d)
    }

    pub fn check(&self) -> Result<Report> {
        let mut r = Report::new("difference algebra");
        r.absorb("", self.alg.check_associative()?);
        r.absorb("", check_difference(&self.alg, &self.d)?);
        Ok(r)
    }
}

/// Left and right actions of an algebra on a space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    pub m: Space,
    /// `A × M → M`
    pub left: MultiMap,
    /// `M × A → M`
    pub right: MultiMap,
}

impl Bimodule {
    pub fn zero(alg: &AssocAlgebra, m: Space) -> Self {
        Bimodule {
            left: MultiMap::zeros(vec![alg.space.clone(), m.clone()], m.clone()),
            right: MultiMap::zeros(vec![m.clone(), alg.space.clone()], m.clone()),
            m,
        }
    }

    /// `A` acting on itself by multiplication.
    pub fn regular(alg: &AssocAlgebra) -> Self {
        let m = alg.space.relabel("M");
        Bimodule {
            left: alg.mult.clone().relabeled(vec![alg.space.clone(), m.clone()], m.clone()).unwrap(),
            right: alg.mult.clone().relabeled(vec![m.clone(), alg.space.clone()], m.clone()).unwrap(),
            m,
        }
    }

    fn check_shape(&self, alg: &AssocAlgebra) -> Result<()> {
        let (a, m) = (alg.dim(), self.m.dim);
        if self.left.src_dims() != [a, m] || self.left.dst().dim != m {
            return Err(Error::shape("left action must be A×M→M"));
        }
        if self.right.src_dims() != [m, a] || self.right.dst().dim != m {
            return Err(Error::shape("right action must be M×A→M"));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffBimodule {
    pub module: Bimodule,
    pub delta: Lin,
}

impl DiffBimodule {
    pub fn regular(da: &DifferenceAlgebra) -> Self {
        let module = Bimodule::regular(&da.alg);
        let delta = da.d.clone().relabeled(module.m.clone(), module.m.clone()).unwrap();
        DiffBimodule { module, delta }
    }

    pub fn zero(da: &DifferenceAlgebra, dim: usize) -> Self {
        let m = Space::new("M", dim);
        DiffBimodule {
            module: Bimodule::zero(&da.alg, m.clone()),
            delta: Lin::zero(m.clone(), m),
        }
    }

    pub fn space(&self) -> &Space {
        &self.module.m
    }
}

/// Plain bimodule axioms: `(ab)u = a(bu)`, `(ua)b = u(ab)`, `(au)b = a(ub)`.
pub fn check_bimodule(alg: &AssocAlgebra, bm: &Bimodule) -> Result<Report> {
    bm.check_shape(alg)?;
    let (mult, left, right) = (&alg.mult, &bm.left, &bm.right);
    let mut r = Report::new("bimodule");
    r.expect_equal("(ab)u = a(bu)", &left.insert(0, mult)?, &left.insert(1, left)?)?;
    r.expect_equal("(ua)b = u(ab)", &right.insert(0, right)?, &right.insert(1, mult)?)?;
    r.expect_equal("(au)b = a(ub)", &right.insert(0, left)?, &left.insert(1, right)?)?;
    Ok(r)
}

/// Checks `d(ab) = d(a)b + a d(b) + d(a)d(b)` on every basis pair.
pub fn check_difference(alg: &AssocAlgebra, d: &Lin) -> Result<Report> {
    alg.check_endo_shape(d)?;
    let mult = &alg.mult;
    let lhs = mult.postcompose(d)?;
    let rhs = MultiMap::sum(&[
        mult.precompose(0, d)?,
        mult.precompose(1, d)?,
        mult.precompose_all(&[d, d])?,
    ])?;
    let mut r = Report::new("difference operator");
    r.expect_equal("(1)", &lhs, &rhs)?;
    Ok(r)
}

/// Checks the bimodule axioms and the two compatibilities of `Δ` with `d`.
pub fn check_diff_bimodule(da: &DifferenceAlgebra, bm: &DiffBimodule) -> Result<Report> {
    let mut r = check_bimodule(&da.alg, &bm.module)?;
    r.subject = "difference bimodule".into();
    let m = bm.space();
    if bm.delta.src().dim != m.dim || bm.delta.dst().dim != m.dim {
        return Err(Error::shape("Δ must be an endomorphism of M"));
    }
    let (d, delta) = (&da.d, &bm.delta);
    let (left, right) = (&bm.module.left, &bm.module.right);
    let left_rhs = MultiMap::sum(&[
        left.precompose(0, d)?,
        left.precompose(1, delta)?,
        left.precompose_all(&[d, delta])?,
    ])?;
    r.expect_equal("Δ(au)", &left.postcompose(delta)?, &left_rhs)?;
    let right_rhs = MultiMap::sum(&[
        right.precompose(0, delta)?,
        right.precompose(1, d)?,
        right.precompose_all(&[delta, d])?,
    ])?;
    r.expect_equal("Δ(ua)", &right.postcompose(delta)?, &right_rhs)?;
    Ok(r)
}

/// The bimodule `M^d`: actions `(a, u) ↦ (a + d(a))u` and `(u, a) ↦ u(a + d(a))`.
pub fn twist_bimodule(da: &DifferenceAlgebra, bm: &Bimodule) -> Result<Bimodule> {
    check_bimodule(&da.alg, bm)?.into_result()?;
    twist_unchecked(da, bm)
}

pub(crate) fn twist_unchecked(da: &DifferenceAlgebra, bm: &Bimodule) -> Result<Bimodule> {
    let shift = da.shifted()?;
    Ok(Bimodule {
        m: bm.m.clone(),
        left: bm.left.precompose(0, &shift)?,
        right: bm.right.precompose(1, &shift)?,
    })
}

/// `d = φ − Id` for an algebra endomorphism `φ`.
pub fn endo_to_diff(alg: &AssocAlgebra, phi: &Lin) -> Result<Lin> {
    alg.check_endomorphism(phi)?.into_result()?;
    phi.sub(&alg.identity())
}
