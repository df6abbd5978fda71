//! Exact linear algebra over ℚ: spaces, dense multilinear maps, composition,
//! evaluation and kernels. Every structure constant in the crate lives here.

mod lin;
mod map;
mod rational;

pub use lin::{compose_lin, kernel_basis, DirectSum, Lin, Subspace};
pub use map::{MultiMap, Space};
pub use rational::{
    add_vectors, basis_vector, format_rational, frac, int, is_zero_vector, one, parse_rational,
    scale_vector, sub_vectors, vector_text, zero, zero_vector, Rational, Vector,
};

/// Evaluates `m` on `args`.
pub fn apply(m: &MultiMap, args: &[Vector]) -> crate::Result<Vector> {
    m.apply(args)
}
