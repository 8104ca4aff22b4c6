mod common;

use common::*;
use iafn::autfn::{aut_commutator, compose, identity_endo, inner, inner_series, invert};
use iafn::freelie::{assoc_to_lie, bracket, lie_to_assoc};
use iafn::intlinalg::{hermite_normal_form, row_rank, smith_normal_form};
use iafn::magnus::{expand, Depth};
use iafn::{IntMatrix, LieElement, Word};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const N: usize = 3;

fn word() -> impl Strategy<Value = Word> {
    prop::collection::vec((1..=N, prop_oneof![Just(-2i64), Just(-1), Just(1), Just(2)]), 0..7)
        .prop_map(|s| Word::from_syllables(&s))
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn unimodular(r: &mut ChaCha8Rng, k: usize) -> IntMatrix {
    let mut u: Vec<Vec<i64>> = (0..k).map(|i| (0..k).map(|j| i64::from(i == j)).collect()).collect();
    for _ in 0..3 * k {
        let (i, j) = (r.gen_range(0..k), r.gen_range(0..k));
        if i == j {
            continue;
        }
        if r.gen_bool(0.3) {
            u.swap(i, j);
        } else {
            let f = r.gen_range(-2..=2);
            let src = u[j].clone();
            for (x, y) in u[i].iter_mut().zip(&src) {
                *x += f * y;
            }
        }
    }
    IntMatrix::from_rows(k, &u)
}

fn random_matrix(r: &mut ChaCha8Rng) -> IntMatrix {
    let (rows, cols) = (r.gen_range(1..6), r.gen_range(1..6));
    let dense: Vec<Vec<i64>> = (0..rows)
        .map(|_| (0..cols).map(|_| if r.gen_bool(0.4) { 0 } else { r.gen_range(-6..=6) }).collect())
        .collect();
    IntMatrix::from_rows(cols, &dense)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn bracket_antisymmetry_and_jacobi(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (a, b, c) = (random_lie(&mut r, N, 3), random_lie(&mut r, N, 3), random_lie(&mut r, N, 2));
        prop_assert_eq!(bracket(&a, &b), -&bracket(&b, &a));
        let jac = &(&bracket(&a, &bracket(&b, &c)) + &bracket(&b, &bracket(&c, &a))) + &bracket(&c, &bracket(&a, &b));
        prop_assert!(jac.is_zero());
        prop_assert!(bracket(&a, &a).is_zero());
    }

    #[test]
    fn bracket_is_associative_commutator(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (a, b) = (random_lie(&mut r, N, 3), random_lie(&mut r, N, 3));
        let (pa, pb) = (lie_to_assoc(&a), lie_to_assoc(&b));
        prop_assert_eq!(lie_to_assoc(&bracket(&a, &b)), &pa.mul(&pb) - &pb.mul(&pa));
    }

    #[test]
    fn assoc_lie_round_trip(seed in any::<u64>(), d in 1usize..6) {
        let mut r = rng(seed);
        let e = random_homogeneous_lie(&mut r, N, d);
        prop_assert_eq!(assoc_to_lie(&lie_to_assoc(&e), d).unwrap(), e);
    }

    #[test]
    fn expansion_matches_naive_oracle(w in word(), d in 1usize..6) {
        prop_assert_eq!(series_map(&expand(&w, N, d).unwrap()), naive_expand(&w, d));
    }

    #[test]
    fn expansion_is_multiplicative(u in word(), v in word()) {
        let d = 5;
        let lhs = expand(&u.mul(&v), N, d).unwrap();
        prop_assert_eq!(lhs, expand(&u, N, d).unwrap().mul(&expand(&v, N, d).unwrap()).unwrap());
        prop_assert!(expand(&u, N, d).unwrap().mul(&expand(&u.inverse(), N, d).unwrap()).unwrap().is_one());
    }

    #[test]
    fn commutator_depth_and_leading_term(u in word(), v in word()) {
        let d = 6;
        let su = expand(&u, N, d).unwrap();
        let sv = expand(&v, N, d).unwrap();
        let c = expand(&Word::commutator(&u, &v), N, d).unwrap();
        if let (Depth::Degree(a), Depth::Degree(b)) = (su.lcs_depth().unwrap(), sv.lcs_depth().unwrap()) {
            if a + b <= d {
                prop_assert!(c.lcs_depth().unwrap().is_at_least(a + b).unwrap());
                let expected = bracket(&su.leading_lie().unwrap().1, &sv.leading_lie().unwrap().1);
                let got = assoc_to_lie(&c.homogeneous(a + b), a + b).unwrap();
                prop_assert_eq!(got, expected);
            }
        }
    }

    #[test]
    fn compose_associative_and_invertible(seed in any::<u64>()) {
        let mut r = rng(seed);
        let d = 4;
        let (f, g, h) = (random_endo(&mut r, N, d, 3), random_endo(&mut r, N, d, 3), random_endo(&mut r, N, d, 3));
        let left = compose(&compose(&f, &g).unwrap(), &h).unwrap();
        let right = compose(&f, &compose(&g, &h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        let fi = invert(&f);
        prop_assert_eq!(compose(&f, &fi).unwrap(), identity_endo(N, d));
        prop_assert_eq!(compose(&fi, &f).unwrap(), identity_endo(N, d));
        prop_assert_eq!(invert(&fi), f);
    }

    #[test]
    fn composition_acts_on_words(seed in any::<u64>(), w in word()) {
        let mut r = rng(seed);
        let d = 4;
        let (f, g) = (random_endo(&mut r, N, d, 2), random_endo(&mut r, N, d, 2));
        let fg = compose(&f, &g).unwrap();
        prop_assert_eq!(fg.apply_word(&w).unwrap(), f.apply(&g.apply_word(&w).unwrap()).unwrap());
    }

    #[test]
    fn filtration_inequality(seed in any::<u64>()) {
        let mut r = rng(seed);
        let d = 5;
        let f = random_endo(&mut r, N, d, 3);
        let g = random_endo(&mut r, N, d, 3);
        if let (Depth::Degree(a), Depth::Degree(b)) = (f.johnson_depth(), g.johnson_depth()) {
            let c = aut_commutator(&f, &g).unwrap();
            prop_assert_ne!(c.johnson_depth().is_at_least(a + b - 1), Some(false));
        }
    }

    #[test]
    fn inner_commutator_identity(seed in any::<u64>(), g in word()) {
        let mut r = rng(seed);
        let d = 4;
        let phi = random_endo(&mut r, N, d, 3);
        let lhs = aut_commutator(&inner(&g, N, d).unwrap(), &phi).unwrap();
        let gi = expand(&g.inverse(), N, d).unwrap();
        let h = gi.mul(&invert(&phi).apply_word(&g).unwrap()).unwrap();
        prop_assert_eq!(lhs, inner_series(&h).unwrap());
    }

    #[test]
    fn johnson_image_is_additive(seed in any::<u64>()) {
        let mut r = rng(seed);
        let d = 4;
        let (f, g) = (random_endo(&mut r, N, d, 3), random_endo(&mut r, N, d, 3));
        let fg = compose(&f, &g).unwrap();
        let (df, dg, dfg) = (f.johnson_depth(), g.johnson_depth(), fg.johnson_depth());
        if let (Depth::Degree(k), true, true) = (df, dg == df, dfg == df) {
            let (_, a) = f.johnson_image().unwrap();
            let (_, b) = g.johnson_image().unwrap();
            let (_, s) = fg.johnson_image().unwrap();
            let sum: Vec<LieElement> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
            prop_assert_eq!(s, sum, "depth {}", k);
        }
    }

    #[test]
    fn rank_three_ways(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m = random_matrix(&mut r);
        let snf_rank = smith_normal_form(&m).iter().filter(|v| !v.is_zero()).count();
        let h = hermite_normal_form(&m);
        let hnf_rank = (0..h.nrows()).filter(|&i| !h.row_entries(i).is_empty()).count();
        let b = bareiss_rank(&m);
        prop_assert_eq!(row_rank(&m), b);
        prop_assert_eq!(snf_rank, b);
        prop_assert_eq!(hnf_rank, b);
    }

    #[test]
    fn normal_forms_under_unimodular_change(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m = random_matrix(&mut r);
        let u = unimodular(&mut r, m.nrows());
        let v = unimodular(&mut r, m.ncols());
        let s = smith_normal_form(&m);
        prop_assert_eq!(smith_normal_form(&u.mul(&m).unwrap().mul(&v).unwrap()), s.clone());
        prop_assert_eq!(hermite_normal_form(&u.mul(&m).unwrap()).to_dense(), hermite_normal_form(&m).to_dense());
        let h = hermite_normal_form(&m);
        prop_assert_eq!(hermite_normal_form(&h).to_dense(), h.to_dense());
        let nz: Vec<&BigInt> = s.iter().filter(|v| !v.is_zero()).collect();
        for w in nz.windows(2) {
            prop_assert!((w[1] % w[0]).is_zero());
        }
        let det_like: BigInt = nz.iter().map(|v| (*v).clone()).product();
        prop_assert!(det_like > BigInt::zero() || nz.is_empty());
    }
}
