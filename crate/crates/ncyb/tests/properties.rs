use proptest::prelude::*;

use ncyb::classical::{numeric_state, verify_pair};
use ncyb::matrix::{det, LabeledMat, Label};
use ncyb::quasidet::{gauss_decompose, quasi_det, GaussVariant, Strategy as Pivot};
use ncyb::report::Status;
use ncyb::ring::{qrat, MRatFun, QRat, Ring, StarDual, StarJet, STAR_PAIRS};
use ncyb::sample::Sampler;
use ncyb::ybmap;

fn small() -> impl Strategy<Value = i64> {
    -4i64..=4
}

/// `c0 + c1 x0 + c2 x1 + c3 x0 x1` divided by `1 + d x0²`.
fn ratfun() -> impl Strategy<Value = MRatFun> {
    (proptest::array::uniform4(small()), 0i64..=3).prop_map(|(c, d)| {
        let (x, y) = (MRatFun::var(0), MRatFun::var(1));
        let k = |v: i64| MRatFun::from_int(v);
        let num = k(c[0]).add(&k(c[1]).mul(&x)).add(&k(c[2]).mul(&y)).add(&k(c[3]).mul(&x).mul(&y));
        let den = k(1).add(&k(d).mul(&x).mul(&x));
        num.div(&den).unwrap()
    })
}

/// Polynomial in the first two conjugate pairs, with a first-order part.
fn star() -> impl Strategy<Value = StarDual> {
    (proptest::array::uniform4(small()), proptest::array::uniform2(small())).prop_map(|(c, e)| {
        let v = |i: usize| MRatFun::var(i);
        let k = |i: i64| MRatFun::from_int(i);
        let (x0, k0, x1, k1) = (v(StarDual::x_var(0)), v(StarDual::k_var(0)), v(StarDual::x_var(1)), v(StarDual::k_var(1)));
        let c0 = k(c[0]).add(&k(c[1]).mul(&x0).mul(&k0)).add(&k(c[2]).mul(&k1)).add(&k(c[3]).mul(&x1).mul(&k0));
        let c1 = k(e[0]).mul(&x0).add(&k(e[1]).mul(&k1));
        StarDual::new(c0, c1)
    })
}

fn point() -> impl Strategy<Value = Vec<QRat>> {
    proptest::collection::vec((1i64..=7, 1i64..=5), 2 * STAR_PAIRS).prop_map(|v| v.into_iter().map(|(n, d)| qrat(n, d)).collect())
}

fn int_matrix() -> impl Strategy<Value = LabeledMat<QRat>> {
    (2usize..=4).prop_flat_map(|n| {
        proptest::collection::vec(-6i64..=6, n * n).prop_map(move |v| LabeledMat::from_fn(n, n, |i, j| qrat(v[i * n + j], 1)))
    })
}

fn no_fail(checks: &[ncyb::report::Check]) -> Result<(), TestCaseError> {
    match checks.iter().find(|c| c.status == Status::Fail) {
        Some(c) => Err(TestCaseError::fail(format!("{}: {:?}", c.name, c.detail))),
        None => Ok(()),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rational_functions_form_a_field(a in ratfun(), b in ratfun(), c in ratfun()) {
        prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert!(a.sub(&a).is_zero());
        if let Some(ai) = a.inv() {
            prop_assert!(a.mul(&ai).is_one());
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in ratfun(), b in ratfun(), p in point()) {
        if let (Some(x), Some(y)) = (a.eval(&p), b.eval(&p)) {
            prop_assert_eq!(a.mul(&b).eval(&p), Some(&x * &y));
            prop_assert_eq!(a.add(&b).eval(&p), Some(&x + &y));
        }
    }

    #[test]
    fn star_product_is_associative(a in star(), b in star(), c in star()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn jets_are_ring_homomorphisms(a in star(), b in star(), p in point()) {
        let j = |f: &StarDual| StarJet::at(f, &p);
        if let (Some(ja), Some(jb), Some(jab)) = (j(&a), j(&b), j(&a.mul(&b))) {
            prop_assert_eq!(jab, ja.mul(&jb));
        }
    }

    #[test]
    fn commutative_quasideterminant_is_a_determinant_ratio(a in int_matrix(), i in 1usize..=4, j in 1usize..=4) {
        let n = a.nrows();
        let (i, j) = ((i - 1) % n + 1, (j - 1) % n + 1);
        let minor = det(&a.without(Label::plain(i), Label::plain(j)).unwrap());
        prop_assume!(!Ring::is_zero(&minor));
        let sign = if (i + j) % 2 == 0 { qrat(1, 1) } else { qrat(-1, 1) };
        let oracle = sign * det(&a) / minor;
        for s in [Pivot::Recursive, Pivot::ViaInverse] {
            match quasi_det(&a, Label::plain(i), Label::plain(j), s) {
                Ok(v) => prop_assert_eq!(&v, &oracle),
                // the recursive expansion can meet a singular inner minor
                Err(_) => prop_assert_eq!(s, Pivot::Recursive),
            }
        }
    }

    #[test]
    fn gauss_factors_reconstruct(a in int_matrix()) {
        for variant in [GaussVariant::Senior, GaussVariant::Junior] {
            if let Ok(g) = gauss_decompose(&a, variant) {
                let prod = match variant {
                    GaussVariant::Senior => g.e.mat_mul(&g.h).unwrap().mat_mul(&g.f).unwrap(),
                    GaussVariant::Junior => g.f.mat_mul(&g.h).unwrap().mat_mul(&g.e).unwrap(),
                };
                prop_assert_eq!(prod, a.clone());
            }
        }
    }

    #[test]
    fn classical_pair_identities_hold(seed in any::<u64>(), n in 2usize..=4) {
        let st = numeric_state(n, 2, &mut Sampler::new(seed));
        no_fail(&verify_pair(&st.pair(0, 1), "prop"))?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn quantum_map_identities_hold(seed in any::<u64>()) {
        no_fail(&ybmap::verify_random(2, 2, seed, 1))?;
    }
}
