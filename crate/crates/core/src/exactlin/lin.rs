use num_traits::{One, Zero};

use super::map::{MultiMap, Space};
use super::rational::{Rational, Vector};
use crate::error::{Error, Result};

/// Linear map `src → dst`, stored as a `dst.dim × src.dim` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lin {
    map: MultiMap,
}

impl Lin {
    pub fn from_multi(map: MultiMap) -> Result<Self> {
        if map.arity() != 1 {
            return Err(Error::shape(format!("expected a unary map, got arity {}", map.arity())));
        }
        Ok(Lin { map })
    }

    pub fn zero(src: Space, dst: Space) -> Self {
        Lin {
            map: MultiMap::zeros(vec![src], dst),
        }
    }

    pub fn identity(space: Space) -> Self {
        Lin::from_fn(space.clone(), space, |r, c| if r == c { Rational::one() } else { Rational::zero() })
    }

    pub fn from_fn(src: Space, dst: Space, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        Lin {
            map: MultiMap::from_fn(vec![src], dst, |o, idx| f(o, idx[0])),
        }
    }

    /// Builds a map from its rows (`rows.len() == dst.dim`).
    pub fn from_rows(src: Space, dst: Space, rows: &[Vec<Rational>]) -> Result<Self> {
        if rows.len() != dst.dim || rows.iter().any(|r| r.len() != src.dim) {
            return Err(Error::shape("from_rows: row count or length mismatch"));
        }
        Ok(Lin::from_fn(src, dst, |r, c| rows[r][c].clone()))
    }

    /// Builds a map whose `j`-th column is `cols[j]`.
    pub fn from_columns(src: Space, dst: Space, cols: &[Vector]) -> Result<Self> {
        if cols.len() != src.dim || cols.iter().any(|c| c.len() != dst.dim) {
            return Err(Error::shape("from_columns: column count or length mismatch"));
        }
        Ok(Lin::from_fn(src, dst, |r, c| cols[c][r].clone()))
    }

    pub fn as_multi(&self) -> &MultiMap {
        &self.map
    }

    pub fn into_multi(self) -> MultiMap {
        self.map
    }

    pub fn src(&self) -> &Space {
        self.map.src(0)
    }

    pub fn dst(&self) -> &Space {
        self.map.dst()
    }

    pub fn entry(&self, row: usize, col: usize) -> &Rational {
        self.map.get(row, &[col])
    }

    pub fn rows(&self) -> Vec<Vector> {
        (0..self.dst().dim)
            .map(|r| (0..self.src().dim).map(|c| self.entry(r, c).clone()).collect())
            .collect()
    }

    pub fn column(&self, col: usize) -> Vector {
        self.map.column(&[col])
    }

    pub fn apply(&self, v: &[Rational]) -> Result<Vector> {
        self.map.apply(&[v.to_vec()])
    }

    pub fn is_zero(&self) -> bool {
        self.map.is_zero()
    }

    pub fn relabeled(self, src: Space, dst: Space) -> Result<Self> {
        Ok(Lin {
            map: self.map.relabeled(vec![src], dst)?,
        })
    }

    pub fn add(&self, other: &Lin) -> Result<Lin> {
        Ok(Lin {
            map: self.map.add(&other.map)?,
        })
    }

    pub fn sub(&self, other: &Lin) -> Result<Lin> {
        Ok(Lin {
            map: self.map.sub(&other.map)?,
        })
    }

    pub fn scale(&self, c: &Rational) -> Lin {
        Lin { map: self.map.scale(c) }
    }

    pub fn neg(&self) -> Lin {
        Lin { map: self.map.neg() }
    }

    /// `self ∘ f`.
    pub fn after(&self, f: &Lin) -> Result<Lin> {
        compose_lin(self, f)
    }

    pub fn rank(&self) -> usize {
        rref(&self.rows(), self.src().dim).pivots.len()
    }

    pub fn kernel_basis(&self) -> Vec<Vector> {
        kernel_basis(self)
    }

    /// Exact inverse of a square invertible map.
    pub fn inverse(&self) -> Result<Lin> {
        let n = self.src().dim;
        if self.dst().dim != n {
            return Err(Error::shape("inverse of a non-square map"));
        }
        let augmented: Vec<Vector> = self
            .rows()
            .into_iter()
            .enumerate()
            .map(|(r, mut row)| {
                row.extend((0..n).map(|c| if c == r { Rational::one() } else { Rational::zero() }));
                row
            })
            .collect();
        let reduced = rref(&augmented, n);
        if reduced.pivots.len() < n {
            return Err(Error::Precondition("map is not invertible".into()));
        }
        let rows: Vec<Vector> = reduced.rows.iter().take(n).map(|r| r[n..].to_vec()).collect();
        Lin::from_rows(self.dst().clone(), self.src().clone(), &rows)
    }

    /// Block diagonal map `self ⊕ other`.
    pub fn direct_sum(&self, other: &Lin, src: Space, dst: Space) -> Result<Lin> {
        let (s1, d1) = (self.src().dim, self.dst().dim);
        if src.dim != s1 + other.src().dim || dst.dim != d1 + other.dst().dim {
            return Err(Error::shape("direct_sum: declared spaces have the wrong dimension"));
        }
        Ok(Lin::from_fn(src, dst, |r, c| match (r < d1, c < s1) {
            (true, true) => self.entry(r, c).clone(),
            (false, false) => other.entry(r - d1, c - s1).clone(),
            _ => Rational::zero(),
        }))
    }
}

impl From<Lin> for MultiMap {
    fn from(l: Lin) -> Self {
        l.map
    }
}

/// `g ∘ f`.
pub fn compose_lin(g: &Lin, f: &Lin) -> Result<Lin> {
    if f.dst().dim != g.src().dim {
        return Err(Error::shape(format!(
            "compose: {} does not feed {}",
            f.dst(),
            g.src()
        )));
    }
    Lin::from_multi(f.as_multi().postcompose(g)?)
}

pub(crate) struct Rref {
    pub rows: Vec<Vector>,
    /// Pivot column of each nonzero row, in order.
    pub pivots: Vec<usize>,
}

/// Reduced row echelon form, pivoting only within the first `pivot_cols` columns.
pub(crate) fn rref(rows: &[Vector], pivot_cols: usize) -> Rref {
    let mut rows = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rational::one() / &rows[r][c];
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    Rref { rows, pivots }
}

/// Exact basis of `ker f`, one vector per free column of the row-reduced
/// matrix. Each basis vector has a 1 in its free coordinate and zeros in the
/// other free coordinates, so coordinates of a kernel element can be read off
/// the free positions.
pub fn kernel_basis(f: &Lin) -> Vec<Vector> {
    let n = f.src().dim;
    let reduced = rref(&f.rows(), n);
    let free = free_columns(&reduced.pivots, n);
    free.iter()
        .map(|&j| {
            let mut v = vec![Rational::zero(); n];
            v[j] = Rational::one();
            for (row, &p) in reduced.pivots.iter().enumerate() {
                v[p] = -reduced.rows[row][j].clone();
            }
            v
        })
        .collect()
}

pub(crate) fn free_columns(pivots: &[usize], n: usize) -> Vec<usize> {
    (0..n).filter(|c| !pivots.contains(c)).collect()
}

/// A subspace `K ⊆ V` given by an exact basis, with the inclusion `K → V`
/// and a coordinate map `V → K` that is a left inverse of the inclusion.
#[derive(Clone, Debug)]
pub struct Subspace {
    pub space: Space,
    pub inclusion: Lin,
    pub coords: Lin,
}

impl Subspace {
    /// Kernel of `f` as a subspace of `f.src()`.
    pub fn kernel(f: &Lin, label: impl Into<String>) -> Subspace {
        let n = f.src().dim;
        let reduced = rref(&f.rows(), n);
        let free = free_columns(&reduced.pivots, n);
        let basis = kernel_basis(f);
        let space = Space::new(label, basis.len());
        let inclusion = Lin::from_columns(space.clone(), f.src().clone(), &basis)
            .expect("kernel basis vectors have the source dimension");
        // Reading the free coordinates recovers kernel coordinates.
        let coords = Lin::from_fn(f.src().clone(), space.clone(), |r, c| {
            if free[r] == c {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        Subspace {
            space,
            inclusion,
            coords,
        }
    }
}

/// A direct sum `V_1 ⊕ … ⊕ V_k` with its injections and projections.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub total: Space,
    pub parts: Vec<Space>,
    offsets: Vec<usize>,
}

impl DirectSum {
    pub fn new(label: impl Into<String>, parts: Vec<Space>) -> Self {
        let mut offsets = Vec::with_capacity(parts.len());
        let mut acc = 0;
        for p in &parts {
            offsets.push(acc);
            acc += p.dim;
        }
        DirectSum {
            total: Space::new(label, acc),
            parts,
            offsets,
        }
    }

    pub fn inj(&self, k: usize) -> Lin {
        let off = self.offsets[k];
        Lin::from_fn(self.parts[k].clone(), self.total.clone(), |r, c| {
            if r == off + c {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn proj(&self, k: usize) -> Lin {
        let off = self.offsets[k];
        Lin::from_fn(self.total.clone(), self.parts[k].clone(), |r, c| {
            if c == off + r {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn join(&self, pieces: &[&[Rational]]) -> Vector {
        assert_eq!(pieces.len(), self.parts.len());
        pieces.iter().flat_map(|p| p.iter().cloned()).collect()
    }

    pub fn split(&self, v: &[Rational], k: usize) -> Vector {
        v[self.offsets[k]..self.offsets[k] + self.parts[k].dim].to_vec()
    }
}
