//! Fixtures shared by the benchmarks.

use iafn::autfn::{chi, compose, invert};
use iafn::IAEndo;

/// `χ21 χ12⁻¹ χ23 χ31` on `F_3` at truncation `trunc`.
pub fn mixed_endo(trunc: usize) -> IAEndo {
    let f = [chi(2, 1, 3, trunc), chi(1, 2, 3, trunc).map(|e| invert(&e)), chi(2, 3, 3, trunc), chi(3, 1, 3, trunc)];
    f.into_iter().map(|e| e.expect("valid indices")).reduce(|a, b| compose(&a, &b).expect("same parameters")).unwrap()
}
