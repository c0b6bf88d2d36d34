use proptest::prelude::*;

use mtcodes::cli::codefile::{parse_code_file, serialize_code};
use mtcodes::dimension::{dim_hnf, dim_minors, dim_rank, stacked_matrix, DEFAULT_MAX_MINORS};
use mtcodes::mtcode::twist_shift;
use mtcodes::{Field, MTCode, MTShape, Poly};

const ORDERS: &[u32] = &[2, 3, 4, 5, 7, 8, 9];

fn field(q: u32) -> Field {
    Field::of_order(q).unwrap()
}

fn coeffs(q: u32, max_len: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..q, 0..=max_len)
}

fn poly_pair() -> impl Strategy<Value = (Field, Poly, Poly)> {
    prop::sample::select(ORDERS).prop_flat_map(|q| {
        (coeffs(q, 7), coeffs(q, 7)).prop_map(move |(a, b)| {
            let f = field(q);
            let pa = Poly::from_codes(&f, &a).unwrap();
            let pb = Poly::from_codes(&f, &b).unwrap();
            (f, pa, pb)
        })
    })
}

/// Random small multi-twisted code.
fn mt_code() -> impl Strategy<Value = MTCode> {
    (prop::sample::select(&[2u32, 3, 4, 5][..]), 1usize..=3).prop_flat_map(|(q, ell)| {
        let lambdas = prop::collection::vec(1..q, ell);
        let ms = prop::collection::vec(1usize..=5, ell);
        (Just(q), lambdas, ms, 0usize..=3).prop_flat_map(|(q, lambdas, ms, rho)| {
            let tuple: Vec<_> = ms.iter().map(|&m| prop::collection::vec(0..q, m)).collect();
            let gens = prop::collection::vec(tuple, rho);
            (Just(q), Just(lambdas), Just(ms), gens).prop_map(|(q, lambdas, ms, gens)| {
                let f = field(q);
                MTCode::from_codes(MTShape::from_codes(&f, &lambdas, &ms).unwrap(), &gens).unwrap()
            })
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn field_axioms(q in prop::sample::select(&[4u32, 8, 9, 16, 25, 27, 49, 64, 81, 121, 125, 128][..]), a in 0u32..256, b in 0u32..256, c in 0u32..256) {
        let f = field(q);
        let (a, b, c) = (f.element(a % q).unwrap(), f.element(b % q).unwrap(), f.element(c % q).unwrap());
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), f.zero());
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
            prop_assert_eq!(f.pow(a, q as u64 - 1), f.one());
        }
    }

    #[test]
    fn divmod_reconstructs((_f, a, b) in poly_pair()) {
        prop_assume!(!b.is_zero());
        let (quot, r) = a.divmod(&b).unwrap();
        prop_assert_eq!(quot.mul(&b).unwrap().add(&r).unwrap(), a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn gcd_divides_both((_f, a, b) in poly_pair()) {
        prop_assume!(!(a.is_zero() && b.is_zero()));
        let g = a.gcd(&b).unwrap();
        prop_assert!(g.is_monic());
        prop_assert!(g.divides(&a).unwrap() && g.divides(&b).unwrap());
        prop_assert_eq!(&g, &b.gcd(&a).unwrap());
    }

    #[test]
    fn reciprocal_is_an_involution((_f, a, _b) in poly_pair()) {
        prop_assume!(!a.is_zero() && !a.coeff(0).is_zero());
        let r = a.reciprocal().unwrap();
        prop_assert_eq!(r.degree(), a.degree());
        prop_assert_eq!(r.reciprocal().unwrap(), a.monic());
    }

    #[test]
    fn expansion_is_twist_closed(code in mt_code()) {
        let c = code.expand();
        for row in c.basis().row_iter() {
            prop_assert!(c.contains_vector(&twist_shift(row, code.shape()).unwrap()).unwrap());
        }
    }

    #[test]
    fn duality(code in mt_code()) {
        let c = code.expand();
        let d = c.dual();
        prop_assert_eq!(c.dimension() + d.dimension(), c.n());
        prop_assert_eq!(&d.dual(), &c);
        prop_assert_eq!(c.hull(), d.hull());
    }

    #[test]
    fn dimension_methods_agree(code in mt_code()) {
        let k = dim_rank(&code);
        let m = dim_minors(&code, DEFAULT_MAX_MINORS).unwrap();
        prop_assert_eq!(m.dimension, k);
        prop_assert_eq!(dim_hnf(&code).unwrap().dimension, k);
    }

    #[test]
    fn hnf_transform_and_shape(code in mt_code()) {
        let s = stacked_matrix(&code);
        let h = s.hnf().unwrap();
        prop_assert!(h.basis.is_upper_triangular());
        prop_assert!(h.basis.diagonal().iter().all(Poly::is_monic));
        let t = h.transform.mul(&s).unwrap();
        prop_assert_eq!(t, h.basis.clone());
        // every original row reduces to zero against the basis
        for r in 0..s.rows() {
            prop_assert!(h.basis.reduce_against_triangular(s.row(r)).unwrap().iter().all(Poly::is_zero));
        }
    }

    #[test]
    fn adding_generators_is_monotone((code, extra) in mt_code().prop_flat_map(|c| {
        let q = c.field().order();
        let tuple: Vec<_> = c.shape().block_lengths().iter().map(|&m| prop::collection::vec(0..q, m)).collect();
        (Just(c), tuple)
    })) {
        let f = code.field().clone();
        let extra: Vec<Poly> = extra.iter().map(|v| Poly::from_codes(&f, v).unwrap()).collect();
        let bigger = code.with_generator(extra).unwrap();
        prop_assert!(dim_rank(&bigger) >= dim_rank(&code));
        prop_assert_eq!(dim_hnf(&bigger).unwrap().dimension, dim_rank(&bigger));
        prop_assert!(bigger.expand().contains(&code.expand()).unwrap());
    }

    #[test]
    fn code_file_round_trip(code in mt_code()) {
        let text = serialize_code(&code);
        let back = parse_code_file(&text).unwrap();
        prop_assert_eq!(&back, &code);
        prop_assert_eq!(serialize_code(&back), text);
    }
}
