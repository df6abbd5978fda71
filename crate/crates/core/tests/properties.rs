use proptest::prelude::*;

use diffalg::cohom::CochainComplex;
use diffalg::derived::{build_star, gerstenhaber, ARITY_CAP};
use diffalg::diffainf2::check_diff_morphism;
use diffalg::diffalg::{check_difference, endo_to_diff, DiffBimodule};
use diffalg::exactlin::{compose_lin, format_rational, frac, parse_rational, Lin, MultiMap, Space};
use diffalg::format::{parse, print, Structure};
use diffalg::genkit::{catalog, gen};

fn small() -> impl Strategy<Value = i64> {
    -3i64..=3
}

fn lin(dim_src: usize, dim_dst: usize, coeffs: &[i64]) -> Lin {
    let (s, d) = (Space::new("V", dim_src), Space::new("W", dim_dst));
    Lin::from_fn(s, d, |r, c| frac(coeffs[(r * dim_src + c) % coeffs.len()], 1 + (r + c) as i64 % 2))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn rational_literals_round_trip(p in -1000i64..1000, q in 1i64..1000) {
        let r = frac(p, q);
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }

    #[test]
    fn composition_is_associative(a in prop::collection::vec(small(), 1..12), b in prop::collection::vec(small(), 1..12), c in prop::collection::vec(small(), 1..12)) {
        let (f, g, h) = (lin(2, 3, &a), lin(3, 2, &b), lin(2, 3, &c));
        let left = compose_lin(&h, &compose_lin(&g, &f).unwrap()).unwrap();
        let right = compose_lin(&compose_lin(&h, &g).unwrap(), &f).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn endomorphisms_give_difference_operators(k in 0usize..7, j in 0usize..6) {
        let e = &catalog::catalog_algebras()[k];
        let phi = &e.endomorphisms[j % e.endomorphisms.len()];
        let d = endo_to_diff(&e.alg, phi).unwrap();
        prop_assert!(check_difference(&e.alg, &d).unwrap().passed());
    }

    #[test]
    fn coboundary_squares_to_zero(k in 0usize..28, degree in 0usize..=2, seed in any::<u64>()) {
        let das = gen::difference_algebras();
        let da = &das[k % das.len()];
        let cx = CochainComplex::new(da.clone(), DiffBimodule::regular(da)).unwrap();
        let c = gen::random_cochain(&cx, degree, seed);
        prop_assert!(cx.diff_coboundary(&cx.diff_coboundary(&c).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn generated_morphisms_are_valid_and_serialize_exactly(k in 0usize..28, seed in any::<u64>()) {
        let das = gen::difference_algebras();
        let da = &das[k % das.len()];
        prop_assume!(da.alg.dim() <= 3);
        let x = gen::gen_skeletal(da, &DiffBimodule::regular(da), seed).unwrap();
        let (y, m) = gen::gen_morphism(&x, seed).unwrap();
        prop_assert!(y.check().unwrap().passed());
        prop_assert!(check_diff_morphism(&x, &y, &m).unwrap().passed());
        let s = Structure::DiffMorphism { src: x, dst: y, mor: m };
        let text = print(&s);
        let back = parse(&text).unwrap();
        prop_assert_eq!(print(&back), text);
        prop_assert_eq!(back, s);
    }

    #[test]
    fn bracket_is_graded_antisymmetric(a in prop::collection::vec(small(), 1..20), b in prop::collection::vec(small(), 1..20)) {
        let star = build_star(&catalog::dual_numbers()).unwrap();
        let c = star.sum.total.clone();
        let f = MultiMap::from_fn(vec![c.clone(); 2], c.clone(), |o, i| frac(a[(o + 3 * i[0] + 5 * i[1]) % a.len()], 1));
        let g = MultiMap::from_fn(vec![c.clone(); 2], c, |o, i| frac(b[(2 * o + i[0] + 7 * i[1]) % b.len()], 1));
        let fg = gerstenhaber(&f, &g, ARITY_CAP).unwrap();
        let gf = gerstenhaber(&g, &f, ARITY_CAP).unwrap();
        prop_assert_eq!(fg, gf);
    }
}
