//! Concrete finite-dimensional algebras and closed-form families of
//! difference operators on them.

use crate::diffalg::{endo_to_diff, AssocAlgebra};
use crate::exactlin::{frac, int, Lin, MultiMap, Rational, Space};

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub alg: AssocAlgebra,
    /// Algebra endomorphisms used to produce difference operators `φ − Id`.
    pub endomorphisms: Vec<Lin>,
}

fn algebra_from_table(label: &str, dim: usize, table: impl Fn(usize, usize) -> Vec<(usize, Rational)>) -> AssocAlgebra {
    let space = Space::new(label, dim);
    let mut mult = MultiMap::zeros(vec![space.clone(), space.clone()], space.clone());
    for a in 0..dim {
        for b in 0..dim {
            for (o, c) in table(a, b) {
                mult.set(o, &[a, b], c);
            }
        }
    }
    AssocAlgebra { space, mult }
}

fn lin(alg: &AssocAlgebra, rows: &[&[i64]]) -> Lin {
    Lin::from_fn(alg.space.clone(), alg.space.clone(), |r, c| int(rows[r][c]))
}

fn lin_q(alg: &AssocAlgebra, rows: &[Vec<Rational>]) -> Lin {
    Lin::from_rows(alg.space.clone(), alg.space.clone(), rows).expect("square table")
}

/// The ground field as a 1-dimensional algebra.
pub fn rationals() -> AssocAlgebra {
    algebra_from_table("Q", 1, |_, _| vec![(0, int(1))])
}

/// `ℚ[ε]/(ε²)` with basis `1, ε`.
pub fn dual_numbers() -> AssocAlgebra {
    truncated_poly_named("Q[e]/(e^2)", 2)
}

/// `ℚ[x]/(x^n)` with basis `1, x, …, x^{n-1}`.
pub fn truncated_poly(order: usize) -> AssocAlgebra {
    truncated_poly_named(&format!("Q[x]/(x^{order})"), order)
}

fn truncated_poly_named(label: &str, order: usize) -> AssocAlgebra {
    algebra_from_table(label, order, |a, b| if a + b < order { vec![(a + b, int(1))] } else { vec![] })
}

/// `M2(ℚ)` with basis `E11, E12, E21, E22`.
pub fn matrix_algebra() -> AssocAlgebra {
    algebra_from_table("M2", 4, |a, b| {
        let (i, j) = (a / 2, a % 2);
        let (k, l) = (b / 2, b % 2);
        if j == k {
            vec![(2 * i + l, int(1))]
        } else {
            vec![]
        }
    })
}

/// Upper-triangular 2×2 matrices with basis `E11, E12, E22`.
pub fn upper_triangular() -> AssocAlgebra {
    const UNITS: [(usize, usize); 3] = [(0, 0), (0, 1), (1, 1)];
    algebra_from_table("T2", 3, |a, b| {
        let (i, j) = UNITS[a];
        let (k, l) = UNITS[b];
        if j == k {
            let o = UNITS.iter().position(|&u| u == (i, l)).unwrap();
            vec![(o, int(1))]
        } else {
            vec![]
        }
    })
}

/// Strictly upper-triangular 2×2 matrices, spanned by `E12`.
pub fn strictly_upper() -> AssocAlgebra {
    algebra_from_table("N2", 1, |_, _| vec![])
}

/// Group algebra `ℚ[C2]` with basis `1, g`.
pub fn group_algebra_c2() -> AssocAlgebra {
    algebra_from_table("Q[C2]", 2, |a, b| vec![((a + b) % 2, int(1))])
}

pub fn zero_algebra(dim: usize) -> AssocAlgebra {
    algebra_from_table("Z", dim, |_, _| vec![])
}

/// Conjugation `a ↦ u a u⁻¹` on `M2(ℚ)` by `u = [[1, 1], [0, 1]]`.
pub fn matrix_conjugation() -> Lin {
    conjugation_m2([[1, 1], [0, 1]], [[1, -1], [0, 1]])
}

fn conjugation_m2(u: [[i64; 2]; 2], u_inv: [[i64; 2]; 2]) -> Lin {
    let alg = matrix_algebra();
    Lin::from_fn(alg.space.clone(), alg.space.clone(), |r, c| {
        // (u E_ij u⁻¹)_{kl} = u_ki (u⁻¹)_jl
        let (i, j) = (c / 2, c % 2);
        let (k, l) = (r / 2, r % 2);
        int(u[k][i] * u_inv[j][l])
    })
}

/// Conjugation by `[[1, 1], [0, 1]]` restricted to upper-triangular matrices.
pub fn upper_triangular_conjugation() -> Lin {
    // E11 ↦ E11 − E12, E12 ↦ E12, E22 ↦ E12 + E22
    let alg = upper_triangular();
    lin(&alg, &[&[1, 0, 0], &[-1, 1, 1], &[0, 0, 1]])
}

fn endomorphisms_of(name: &str, alg: &AssocAlgebra) -> Vec<Lin> {
    let n = alg.dim();
    let zero = Lin::zero(alg.space.clone(), alg.space.clone());
    let id = alg.identity();
    let mut out = vec![id, zero];
    match name {
        "dual" => {
            for c in [frac(2, 1), frac(-1, 1), frac(1, 2), frac(0, 1)] {
                out.push(lin_q(alg, &[vec![int(1), int(0)], vec![int(0), c]]));
            }
        }
        "trunc3" => {
            // x ↦ c x + e x², x² ↦ c² x²
            for (c, e) in [(frac(2, 1), frac(1, 1)), (frac(-1, 1), frac(3, 2)), (frac(0, 1), frac(1, 1))] {
                let c2 = &c * &c;
                out.push(lin_q(
                    alg,
                    &[
                        vec![int(1), int(0), int(0)],
                        vec![int(0), c, int(0)],
                        vec![int(0), e, c2],
                    ],
                ));
            }
        }
        "m2" => {
            out.push(matrix_conjugation());
            out.push(conjugation_m2([[0, 1], [1, 0]], [[0, 1], [1, 0]]));
        }
        "t2" => {
            out.push(upper_triangular_conjugation());
            out.push(lin(alg, &[&[1, 0, 0], &[0, 0, 0], &[0, 0, 1]]));
        }
        "c2" => {
            out.push(lin(alg, &[&[1, 0], &[0, -1]]));
            out.push(lin(alg, &[&[1, 1], &[0, 0]]));
        }
        "zero" => {
            out.push(Lin::from_fn(alg.space.clone(), alg.space.clone(), |r, c| frac((r as i64 + 2 * c as i64) - 1, 2)));
        }
        _ => {}
    }
    out.retain(|phi| alg.check_endomorphism(phi).map(|r| r.passed()).unwrap_or(false));
    debug_assert!(out.len() >= 2 || n == 0);
    out
}

pub fn catalog_algebras() -> Vec<CatalogEntry> {
    let algebras = [
        ("Q", "q", rationals()),
        ("dual numbers", "dual", dual_numbers()),
        ("Q[x]/(x^3)", "trunc3", truncated_poly(3)),
        ("M2(Q)", "m2", matrix_algebra()),
        ("upper triangular 2x2", "t2", upper_triangular()),
        ("Q[C2]", "c2", group_algebra_c2()),
        ("zero multiplication (dim 2)", "zero", zero_algebra(2)),
    ];
    algebras
        .into_iter()
        .map(|(name, key, alg)| CatalogEntry {
            name: name.to_string(),
            endomorphisms: endomorphisms_of(key, &alg),
            alg,
        })
        .collect()
}

/// `d = 0`, `d = −Id`, and `d = φ − Id` for the catalog endomorphisms of
/// `alg` (or just the first two when `alg` is not in the catalog).
pub fn gen_difference_ops(alg: &AssocAlgebra) -> Vec<Lin> {
    let entry = catalog_algebras().into_iter().find(|e| e.alg == *alg);
    let mut out = vec![
        Lin::zero(alg.space.clone(), alg.space.clone()),
        alg.identity().neg(),
    ];
    if let Some(e) = entry {
        for phi in &e.endomorphisms {
            let d = endo_to_diff(alg, phi).expect("catalog endomorphisms are multiplicative");
            if !out.contains(&d) {
                out.push(d);
            }
        }
    }
    out
}
