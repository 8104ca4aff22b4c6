//! Independent oracles and random generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use iafn::autfn::{chi, compose, identity_endo, inner, invert};
use iafn::freelie::lyndon_words;
use iafn::{IAEndo, IntMatrix, LieElement, TruncSeries, Word};
use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;

/// Rank by fraction-free (Bareiss) elimination over the rationals.
pub fn bareiss_rank(m: &IntMatrix) -> usize {
    let mut a = m.to_dense();
    let (rows, cols) = (m.nrows(), m.ncols());
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&i| !a[i][col].is_zero()) else { continue };
        a.swap(rank, p);
        for i in rank + 1..rows {
            for j in col + 1..cols {
                a[i][j] = (&a[rank][col] * &a[i][j] - &a[i][col] * &a[rank][j]) / &prev;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Lyndon words counted from the definition: strictly below every rotation.
pub fn brute_lyndon_count(n: usize, c: usize) -> u64 {
    let mut count = 0;
    let mut w = vec![0u8; c];
    loop {
        if (1..c).all(|r| w.iter().cycle().skip(r).take(c).cmp(w.iter()) == std::cmp::Ordering::Greater) {
            count += 1;
        }
        let mut k = c;
        loop {
            if k == 0 {
                return count;
            }
            k -= 1;
            if (w[k] as usize) + 1 < n {
                w[k] += 1;
                break;
            }
            w[k] = 0;
        }
    }
}

type Poly = BTreeMap<Vec<u8>, i64>;

fn poly_mul(a: &Poly, b: &Poly, trunc: usize) -> Poly {
    let mut out = Poly::new();
    for (u, x) in a {
        for (v, y) in b {
            if u.len() + v.len() <= trunc {
                let mut w = u.clone();
                w.extend(v);
                *out.entry(w).or_default() += x * y;
            }
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

/// Magnus expansion by direct multiplication of `(1 + X)` and
/// `1 - X + X² - ...` factors.
pub fn naive_expand(w: &Word, trunc: usize) -> Poly {
    let mut acc: Poly = [(vec![], 1)].into();
    for &(l, e) in w.syllables() {
        let mut f = Poly::new();
        f.insert(vec![], 1);
        if e > 0 {
            f.insert(vec![l], 1);
        } else {
            for k in 1..=trunc {
                f.insert(vec![l; k], if k % 2 == 0 { 1 } else { -1 });
            }
        }
        for _ in 0..e.unsigned_abs() {
            acc = poly_mul(&acc, &f, trunc);
        }
    }
    acc
}

pub fn series_map(s: &TruncSeries) -> Poly {
    s.terms().into_iter().filter(|(_, v)| *v != 0).collect()
}

pub fn random_word(rng: &mut impl Rng, n: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    let syl: Vec<(usize, i64)> =
        (0..len).map(|_| (rng.gen_range(1..=n), [-2, -1, 1, 2][rng.gen_range(0..4)])).collect();
    Word::from_syllables(&syl)
}

/// Random nonzero-ish Lie element with terms in degrees `1..=max_deg`.
pub fn random_lie(rng: &mut impl Rng, n: usize, max_deg: usize) -> LieElement {
    let mut e = LieElement::zero(n);
    for _ in 0..rng.gen_range(1..=3) {
        let d = rng.gen_range(1..=max_deg);
        let words = lyndon_words(n, d);
        let w = &words[rng.gen_range(0..words.len())];
        e = &e + &LieElement::lyndon(n, w).scale(rng.gen_range(-3..=3));
    }
    e
}

/// Homogeneous random Lie element of degree `d`.
pub fn random_homogeneous_lie(rng: &mut impl Rng, n: usize, d: usize) -> LieElement {
    let words = lyndon_words(n, d);
    let mut e = LieElement::zero(n);
    for _ in 0..rng.gen_range(1..=3) {
        let w = &words[rng.gen_range(0..words.len())];
        e = &e + &LieElement::lyndon(n, w).scale(rng.gen_range(-3..=3));
    }
    e
}

/// Random product of `χ_ij^{±1}` and an occasional inner automorphism.
pub fn random_endo(rng: &mut impl Rng, n: usize, trunc: usize, max_factors: usize) -> IAEndo {
    let mut acc = identity_endo(n, trunc);
    for _ in 0..rng.gen_range(1..=max_factors) {
        let f = if rng.gen_bool(0.2) {
            inner(&random_word(rng, n, 2), n, trunc).unwrap()
        } else {
            let i = rng.gen_range(1..=n);
            let j = (i + rng.gen_range(1..n) - 1) % n + 1;
            chi(i, j, n, trunc).unwrap()
        };
        let f = if rng.gen_bool(0.5) { invert(&f) } else { f };
        acc = compose(&acc, &f).unwrap();
    }
    acc
}
