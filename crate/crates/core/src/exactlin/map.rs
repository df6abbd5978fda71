use std::fmt;

use num_traits::Zero;

use super::rational::{Rational, Vector};
use crate::error::{Error, Result};

/// A finite-dimensional vector space over ℚ with its standard basis.
///
/// Labels are for display only: spaces compare and hash by dimension.
#[derive(Clone, Debug)]
pub struct Space {
    pub dim: usize,
    pub label: String,
}

impl Space {
    pub fn new(label: impl Into<String>, dim: usize) -> Self {
        Space {
            dim,
            label: label.into(),
        }
    }

    pub fn relabel(&self, label: impl Into<String>) -> Self {
        Space::new(label, self.dim)
    }
}

impl PartialEq for Space {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
    }
}

impl Eq for Space {}

impl std::hash::Hash for Space {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.dim.hash(state);
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(dim {})", self.label, self.dim)
    }
}

/// Dense multilinear map `srcs[0] × … × srcs[n-1] → dst`.
///
/// Coefficients are stored row-major over the index tuple
/// `(dst, i_1, …, i_n)`, so `coeffs[flat(o, i)]` is the `o`-th coordinate of
/// the image of the basis tuple `(e_{i_1}, …, e_{i_n})`.
#[derive(Clone, Debug)]
pub struct MultiMap {
    srcs: Vec<Space>,
    dst: Space,
    coeffs: Vec<Rational>,
}

fn product(dims: impl IntoIterator<Item = usize>) -> usize {
    dims.into_iter().product()
}

impl MultiMap {
    pub fn zeros(srcs: Vec<Space>, dst: Space) -> Self {
        assert!(!srcs.is_empty(), "multilinear maps have arity at least one");
        let len = dst.dim * product(srcs.iter().map(|s| s.dim));
        MultiMap {
            srcs,
            dst,
            coeffs: vec![Rational::zero(); len],
        }
    }

    pub fn from_coeffs(srcs: Vec<Space>, dst: Space, coeffs: Vec<Rational>) -> Result<Self> {
        if srcs.is_empty() {
            return Err(Error::shape("multilinear maps have arity at least one"));
        }
        let len = dst.dim * product(srcs.iter().map(|s| s.dim));
        if coeffs.len() != len {
            return Err(Error::shape(format!(
                "expected {len} coefficients, got {}",
                coeffs.len()
            )));
        }
        Ok(MultiMap { srcs, dst, coeffs })
    }

    /// Builds a map by evaluating `f(dst_index, src_indices)` on every index tuple.
    pub fn from_fn(srcs: Vec<Space>, dst: Space, mut f: impl FnMut(usize, &[usize]) -> Rational) -> Self {
        let mut m = MultiMap::zeros(srcs, dst);
        let mut idx = vec![0usize; m.arity()];
        for flat in 0..m.coeffs.len() {
            let o = m.decode(flat, &mut idx);
            m.coeffs[flat] = f(o, &idx);
        }
        m
    }

    /// Builds a map from the images of all basis tuples.
    pub fn from_basis_images(srcs: Vec<Space>, dst: Space, mut image: impl FnMut(&[usize]) -> Vector) -> Self {
        let mut m = MultiMap::zeros(srcs, dst);
        let n = m.src_len();
        let mut idx = vec![0usize; m.arity()];
        for s in 0..n {
            m.decode_src(s, &mut idx);
            let v = image(&idx);
            assert_eq!(v.len(), m.dst.dim, "basis image has wrong length");
            for (o, c) in v.into_iter().enumerate() {
                m.coeffs[o * n + s] = c;
            }
        }
        m
    }

    pub fn arity(&self) -> usize {
        self.srcs.len()
    }

    pub fn srcs(&self) -> &[Space] {
        &self.srcs
    }

    pub fn src(&self, slot: usize) -> &Space {
        &self.srcs[slot]
    }

    pub fn dst(&self) -> &Space {
        &self.dst
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn src_dims(&self) -> Vec<usize> {
        self.srcs.iter().map(|s| s.dim).collect()
    }

    /// Number of basis tuples of the source.
    pub fn src_len(&self) -> usize {
        product(self.srcs.iter().map(|s| s.dim))
    }

    pub fn same_shape(&self, other: &MultiMap) -> bool {
        self.dst.dim == other.dst.dim && self.src_dims() == other.src_dims()
    }

    pub fn relabeled(mut self, srcs: Vec<Space>, dst: Space) -> Result<Self> {
        if srcs.len() != self.srcs.len()
            || dst.dim != self.dst.dim
            || srcs.iter().zip(&self.srcs).any(|(a, b)| a.dim != b.dim)
        {
            return Err(Error::shape("relabel must preserve dimensions"));
        }
        self.srcs = srcs;
        self.dst = dst;
        Ok(self)
    }

    /// Flat position of the source tuple `idx` (without the output index).
    pub fn encode_src(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.arity());
        idx.iter()
            .zip(&self.srcs)
            .fold(0, |acc, (i, s)| acc * s.dim + i)
    }

    fn decode_src(&self, mut flat: usize, idx: &mut [usize]) {
        for (slot, s) in self.srcs.iter().enumerate().rev() {
            idx[slot] = flat % s.dim;
            flat /= s.dim;
        }
    }

    fn decode(&self, flat: usize, idx: &mut [usize]) -> usize {
        let n = self.src_len();
        self.decode_src(flat % n, idx);
        flat / n
    }

    pub fn get(&self, out: usize, idx: &[usize]) -> &Rational {
        &self.coeffs[out * self.src_len() + self.encode_src(idx)]
    }

    pub fn set(&mut self, out: usize, idx: &[usize], value: Rational) {
        let n = self.src_len();
        let s = self.encode_src(idx);
        self.coeffs[out * n + s] = value;
    }

    /// Image of a basis tuple.
    pub fn column(&self, idx: &[usize]) -> Vector {
        let n = self.src_len();
        let s = self.encode_src(idx);
        (0..self.dst.dim).map(|o| self.coeffs[o * n + s].clone()).collect()
    }

    /// Iterates `(dst index, src tuple, coefficient)` over nonzero coefficients.
    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, Vec<usize>, &Rational)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(flat, c)| {
            let mut idx = vec![0; self.arity()];
            let o = self.decode(flat, &mut idx);
            (o, idx, c)
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Source tuples on which `self` and `other` disagree (same shape required).
    pub fn differing_tuples(&self, other: &MultiMap) -> Vec<Vec<usize>> {
        debug_assert!(self.same_shape(other));
        let n = self.src_len();
        let mut out = Vec::new();
        for s in 0..n {
            if (0..self.dst.dim).any(|o| self.coeffs[o * n + s] != other.coeffs[o * n + s]) {
                let mut idx = vec![0; self.arity()];
                self.decode_src(s, &mut idx);
                out.push(idx);
            }
        }
        out
    }

    fn check_same_shape(&self, other: &MultiMap, op: &str) -> Result<()> {
        if self.same_shape(other) {
            Ok(())
        } else {
            Err(Error::shape(format!(
                "{op}: {:?}->{} vs {:?}->{}",
                self.src_dims(),
                self.dst.dim,
                other.src_dims(),
                other.dst.dim
            )))
        }
    }

    pub fn add(&self, other: &MultiMap) -> Result<MultiMap> {
        self.check_same_shape(other, "add")?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(MultiMap { coeffs, ..self.clone_shape() })
    }

    pub fn sub(&self, other: &MultiMap) -> Result<MultiMap> {
        self.check_same_shape(other, "sub")?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(MultiMap { coeffs, ..self.clone_shape() })
    }

    pub fn scale(&self, c: &Rational) -> MultiMap {
        let coeffs = self.coeffs.iter().map(|a| a * c).collect();
        MultiMap { coeffs, ..self.clone_shape() }
    }

    pub fn neg(&self) -> MultiMap {
        let coeffs = self.coeffs.iter().map(|a| -a).collect();
        MultiMap { coeffs, ..self.clone_shape() }
    }

    /// Sums a nonempty list of same-shape maps.
    pub fn sum<'a>(terms: impl IntoIterator<Item = &'a MultiMap>) -> Result<MultiMap> {
        let mut iter = terms.into_iter();
        let mut acc = iter
            .next()
            .ok_or_else(|| Error::shape("sum of an empty list of maps"))?
            .clone();
        for t in iter {
            acc.check_same_shape(t, "sum")?;
            for (a, b) in acc.coeffs.iter_mut().zip(&t.coeffs) {
                *a += b;
            }
        }
        Ok(acc)
    }

    fn clone_shape(&self) -> MultiMap {
        MultiMap {
            srcs: self.srcs.clone(),
            dst: self.dst.clone(),
            coeffs: Vec::new(),
        }
    }

    /// Multilinear evaluation on coordinate vectors.
    pub fn apply(&self, args: &[Vector]) -> Result<Vector> {
        if args.len() != self.arity() {
            return Err(Error::shape(format!(
                "apply: arity {} but {} arguments",
                self.arity(),
                args.len()
            )));
        }
        for (slot, (a, s)) in args.iter().zip(&self.srcs).enumerate() {
            if a.len() != s.dim {
                return Err(Error::shape(format!(
                    "apply: argument {slot} has length {} but {} has dim {}",
                    a.len(),
                    s.label,
                    s.dim
                )));
            }
        }
        let mut out = vec![Rational::zero(); self.dst.dim];
        for (o, idx, c) in self.nonzeros() {
            let mut term = c.clone();
            for (slot, i) in idx.iter().enumerate() {
                let a = &args[slot][*i];
                if a.is_zero() {
                    term.set_zero();
                    break;
                }
                term *= a;
            }
            if !term.is_zero() {
                out[o] += term;
            }
        }
        Ok(out)
    }

    /// Partial composition: plugs `inner` into argument `slot`.
    ///
    /// The result has arity `arity + inner.arity - 1` and evaluates as
    /// `self(x_1, …, inner(y_1, …, y_l), …, x_n)`.
    pub fn insert(&self, slot: usize, inner: &MultiMap) -> Result<MultiMap> {
        if slot >= self.arity() {
            return Err(Error::shape(format!("insert: slot {slot} out of range")));
        }
        if inner.dst.dim != self.srcs[slot].dim {
            return Err(Error::shape(format!(
                "insert: slot {slot} expects {} but inner map lands in {}",
                self.srcs[slot], inner.dst
            )));
        }
        let slot_dim = self.srcs[slot].dim;
        let post: usize = product(self.srcs[slot + 1..].iter().map(|s| s.dim));
        let inner_len = inner.src_len();

        let mut srcs = self.srcs[..slot].to_vec();
        srcs.extend(inner.srcs.iter().cloned());
        srcs.extend(self.srcs[slot + 1..].iter().cloned());
        let mut out = MultiMap::zeros(srcs, self.dst.clone());

        // Nonzero entries of `inner`, bucketed by output coordinate.
        let mut buckets: Vec<Vec<(usize, &Rational)>> = vec![Vec::new(); slot_dim];
        for (flat, c) in inner.coeffs.iter().enumerate() {
            if !c.is_zero() {
                buckets[flat / inner_len].push((flat % inner_len, c));
            }
        }
        for (flat, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let post_idx = flat % post;
            let rest = flat / post;
            let a = rest % slot_dim;
            let head = rest / slot_dim;
            for (g_idx, g) in &buckets[a] {
                let target = (head * inner_len + g_idx) * post + post_idx;
                out.coeffs[target] += c * *g;
            }
        }
        Ok(out)
    }

    /// `self(…, f(x), …)` with `f` applied in argument `slot`.
    pub fn precompose(&self, slot: usize, f: &super::Lin) -> Result<MultiMap> {
        self.insert(slot, f.as_multi())
    }

    /// Applies a linear map to every argument slot in turn.
    pub fn precompose_all(&self, fs: &[&super::Lin]) -> Result<MultiMap> {
        if fs.len() != self.arity() {
            return Err(Error::shape("precompose_all: one map per slot required"));
        }
        let mut acc = self.clone();
        for (slot, f) in fs.iter().enumerate() {
            acc = acc.precompose(slot, f)?;
        }
        Ok(acc)
    }

    /// `f ∘ self`.
    pub fn postcompose(&self, f: &super::Lin) -> Result<MultiMap> {
        if f.src().dim != self.dst.dim {
            return Err(Error::shape(format!(
                "postcompose: map lands in {} but f starts at {}",
                self.dst,
                f.src()
            )));
        }
        let n = self.src_len();
        let mut out = MultiMap::zeros(self.srcs.clone(), f.dst().clone());
        let fm = f.as_multi();
        let fsrc = f.src().dim;
        for (flat, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let o = flat / n;
            let s = flat % n;
            for o2 in 0..f.dst().dim {
                let l = &fm.coeffs[o2 * fsrc + o];
                if !l.is_zero() {
                    out.coeffs[o2 * n + s] += l * c;
                }
            }
        }
        Ok(out)
    }

    /// Sum over every nonempty set `S` of slots of `self` with `fs[k]`
    /// applied in each slot `k ∈ S`.
    pub fn subset_insertions(&self, fs: &[&super::Lin]) -> Result<MultiMap> {
        if fs.len() != self.arity() {
            return Err(Error::shape("subset_insertions: one map per slot required"));
        }
        let n = self.arity();
        let mut terms = Vec::with_capacity((1 << n) - 1);
        for mask in 1usize..(1 << n) {
            let mut acc = self.clone();
            for (slot, f) in fs.iter().enumerate() {
                if mask & (1 << slot) != 0 {
                    acc = acc.precompose(slot, f)?;
                }
            }
            terms.push(acc);
        }
        MultiMap::sum(&terms)
    }

    /// Fixes argument `slot` to the vector `v`, lowering the arity by one.
    pub fn fix_arg(&self, slot: usize, v: &[Rational]) -> Result<MultiMap> {
        if self.arity() < 2 {
            return Err(Error::shape("fix_arg needs arity at least two; use apply"));
        }
        if slot >= self.arity() || v.len() != self.srcs[slot].dim {
            return Err(Error::shape(format!("fix_arg: bad slot {slot} or vector length")));
        }
        let slot_dim = self.srcs[slot].dim;
        let post: usize = product(self.srcs[slot + 1..].iter().map(|s| s.dim));
        let mut srcs = self.srcs.clone();
        srcs.remove(slot);
        let mut out = MultiMap::zeros(srcs, self.dst.clone());
        for (flat, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let post_idx = flat % post;
            let rest = flat / post;
            let a = rest % slot_dim;
            if v[a].is_zero() {
                continue;
            }
            let head = rest / slot_dim;
            out.coeffs[head * post + post_idx] += c * &v[a];
        }
        Ok(out)
    }

    /// Reorders arguments: the result's slot `k` is the original slot `order[k]`.
    pub fn permute_args(&self, order: &[usize]) -> Result<MultiMap> {
        let n = self.arity();
        let mut seen = vec![false; n];
        if order.len() != n || order.iter().any(|&k| k >= n || std::mem::replace(&mut seen[k], true)) {
            return Err(Error::shape("permute_args: not a permutation"));
        }
        let srcs: Vec<Space> = order.iter().map(|&k| self.srcs[k].clone()).collect();
        let mut out = MultiMap::zeros(srcs, self.dst.clone());
        let mut new_idx = vec![0; n];
        for (o, idx, c) in self.nonzeros() {
            for (k, &from) in order.iter().enumerate() {
                new_idx[k] = idx[from];
            }
            out.set(o, &new_idx, c.clone());
        }
        Ok(out)
    }

    /// Interprets an arity-one map as a [`Lin`](super::Lin).
    pub fn into_lin(self) -> Result<super::Lin> {
        super::Lin::from_multi(self)
    }
}

impl PartialEq for MultiMap {
    fn eq(&self, other: &Self) -> bool {
        self.same_shape(other) && self.coeffs == other.coeffs
    }
}

impl Eq for MultiMap {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{basis_vector, int, Lin};

    fn sp(n: usize) -> Space {
        Space::new("V", n)
    }

    /// 2×2 matrix algebra: E_ij E_kl = [j == k] E_il, basis order E11,E12,E21,E22.
    fn m2_mult() -> MultiMap {
        let v = sp(4);
        MultiMap::from_fn(vec![v.clone(), v.clone()], v, |o, idx| {
            let (i, j) = (idx[0] / 2, idx[0] % 2);
            let (k, l) = (idx[1] / 2, idx[1] % 2);
            if j == k && o == 2 * i + l {
                int(1)
            } else {
                int(0)
            }
        })
    }

    #[test]
    fn zero_map_sends_everything_to_zero() {
        let m = MultiMap::zeros(vec![sp(2), sp(3)], sp(2));
        let out = m.apply(&[vec![int(1), int(2)], vec![int(3), int(-1), int(5)]]).unwrap();
        assert_eq!(out, vec![int(0), int(0)]);
    }

    #[test]
    fn identity_on_basis_vector() {
        let id = Lin::identity(sp(3));
        assert_eq!(id.as_multi().apply(&[basis_vector(3, 1)]).unwrap(), basis_vector(3, 1));
    }

    #[test]
    fn matrix_units_multiply() {
        // E11 · E12 = E12
        let out = m2_mult().apply(&[basis_vector(4, 0), basis_vector(4, 1)]).unwrap();
        assert_eq!(out, basis_vector(4, 1));
    }

    #[test]
    fn apply_rejects_wrong_shapes() {
        let m = m2_mult();
        assert!(m.apply(&[basis_vector(4, 0)]).is_err());
        assert!(m.apply(&[basis_vector(3, 0), basis_vector(4, 0)]).is_err());
    }

    #[test]
    fn precompose_with_minus_identity_negates_slot() {
        let m = m2_mult();
        let minus = Lin::identity(sp(4)).scale(&int(-1));
        let p = m.precompose(1, &minus).unwrap();
        assert_eq!(p, m.neg());
        assert_eq!(m.precompose(0, &Lin::identity(sp(4))).unwrap(), m);
    }

    #[test]
    fn postcompose_zero_gives_zero() {
        let z = Lin::zero(sp(4), sp(2));
        assert!(m2_mult().postcompose(&z).unwrap().is_zero());
    }

    #[test]
    fn insert_matches_pointwise_evaluation() {
        let m = m2_mult();
        // (x y) z as a trilinear map
        let left = m.insert(0, &m).unwrap();
        let right = m.insert(1, &m).unwrap();
        assert_eq!(left.arity(), 3);
        assert_eq!(left, right, "matrix multiplication is associative");
        let x = vec![int(1), int(2), int(0), int(-1)];
        let y = vec![int(3), int(0), int(1), int(1)];
        let z = vec![int(0), int(1), int(-2), int(1)];
        let xy = m.apply(&[x.clone(), y.clone()]).unwrap();
        let expect = m.apply(&[xy, z.clone()]).unwrap();
        assert_eq!(left.apply(&[x, y, z]).unwrap(), expect);
    }

    #[test]
    fn fix_arg_and_permute() {
        let m = m2_mult();
        let e11 = basis_vector(4, 0);
        let left_mul = m.fix_arg(0, &e11).unwrap();
        // E11 · E21 = 0, E11 · E12 = E12
        assert_eq!(left_mul.apply(&[basis_vector(4, 2)]).unwrap(), vec![int(0); 4]);
        assert_eq!(left_mul.apply(&[basis_vector(4, 1)]).unwrap(), basis_vector(4, 1));
        let opposite = m.permute_args(&[1, 0]).unwrap();
        assert_eq!(
            opposite.apply(&[basis_vector(4, 1), basis_vector(4, 0)]).unwrap(),
            basis_vector(4, 1)
        );
    }
}
