//! IA-endomorphisms of the free group modulo the `(D+1)`-st power of the
//! augmentation ideal.
//!
//! An endomorphism is stored as the truncated expansions of the images of the
//! generators. Products act on the left, `(φψ)(x) = φ(ψ(x))`, and inner
//! automorphisms are `τ_g(x) = g x g⁻¹`; with these two conventions
//! `(τ_g, φ) = τ_{g⁻¹ φ⁻¹(g)}` holds exactly.

use std::fmt;

use crate::error::{Error, Result};
use crate::freelie::LieElement;
use crate::magnus::{expand, Depth, TruncSeries, Word};

#[derive(Clone, PartialEq, Eq)]
pub struct IAEndo {
    n: usize,
    trunc: usize,
    images: Vec<TruncSeries>,
}

impl IAEndo {
    /// Wraps generator images, checking the IA condition: each image is
    /// `1 + X_i + (terms of degree >= 2)`.
    pub fn from_images(images: Vec<TruncSeries>) -> Result<Self> {
        let n = images.len();
        let trunc = images.first().map_or(0, TruncSeries::truncation);
        for (i, s) in images.iter().enumerate() {
            if s.n() != n || s.truncation() != trunc {
                return Err(Error::ParameterMismatch { n1: n, d1: trunc, n2: s.n(), d2: s.truncation() });
            }
            let linear_ok = trunc == 0 || (0..n).all(|j| s.coeff(&[j as u8]) == i64::from(i == j));
            if s.constant() != 1 || !linear_ok {
                return Err(Error::IndexViolation(vec![i + 1], n));
            }
        }
        Ok(IAEndo { n, trunc, images })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn truncation(&self) -> usize {
        self.trunc
    }

    /// Expansion of the image of `x_i`, 1-based.
    pub fn image(&self, i: usize) -> &TruncSeries {
        &self.images[i - 1]
    }

    pub fn images(&self) -> &[TruncSeries] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.johnson_depth().is_sentinel()
    }

    fn check_params(&self, other: &IAEndo) -> Result<()> {
        if self.n != other.n || self.trunc != other.trunc {
            return Err(Error::ParameterMismatch { n1: self.n, d1: self.trunc, n2: other.n, d2: other.trunc });
        }
        Ok(())
    }

    /// Image of a group element given by its expansion.
    pub fn apply(&self, s: &TruncSeries) -> Result<TruncSeries> {
        let one = TruncSeries::one(self.n, self.trunc);
        let shifted: Vec<TruncSeries> = self.images.iter().map(|a| a.sub(&one)).collect::<Result<_>>()?;
        s.substitute(&shifted)
    }

    pub fn apply_word(&self, w: &Word) -> Result<TruncSeries> {
        self.apply(&expand(w, self.n, self.trunc)?)
    }

    /// `φ(x_i) x_i⁻¹` for each generator.
    fn deviations(&self) -> Vec<TruncSeries> {
        (1..=self.n)
            .map(|i| {
                let xi_inv = expand(&Word::x(i).inverse(), self.n, self.trunc).expect("letter in range");
                self.images[i - 1].mul(&xi_inv).expect("matching parameters")
            })
            .collect()
    }

    /// The `k` with `φ ∈ I_k A ∖ I_{k+1} A`, or the sentinel when `φ` is
    /// trivial up to the truncation degree.
    pub fn johnson_depth(&self) -> Depth {
        let mut best: Option<usize> = None;
        for dev in self.deviations() {
            if let Depth::Degree(k) = dev.lcs_depth().expect("IA images are units") {
                best = Some(best.map_or(k, |b| b.min(k)));
            }
        }
        match best {
            Some(k) => Depth::Degree(k),
            None => Depth::IdentityAtTruncation(self.trunc),
        }
    }

    /// Degree-`k` Lie components of `φ(x_i) x_i⁻¹`, `k` the Johnson depth.
    pub fn johnson_image(&self) -> Result<(usize, Vec<LieElement>)> {
        let k = match self.johnson_depth() {
            Depth::Degree(k) => k,
            Depth::IdentityAtTruncation(d) => return Err(Error::IdentityAtTruncation(d)),
        };
        let slots = self.deviations().iter().map(|dev| crate::freelie::assoc_to_lie(&dev.homogeneous(k), k)).collect::<Result<_>>()?;
        Ok((k, slots))
    }

    /// Johnson image at a prescribed degree: the degree-`k` components of
    /// `φ(x_i) x_i⁻¹`, which are zero when the depth exceeds `k`. Fails if the
    /// depth is below `k`.
    pub fn johnson_image_at(&self, k: usize) -> Result<Vec<LieElement>> {
        assert!(k <= self.trunc, "degree {k} above truncation {}", self.trunc);
        let devs = self.deviations();
        for dev in &devs {
            if let Depth::Degree(d) = dev.lcs_depth()? {
                if d < k {
                    return Err(Error::DepthViolation { word: format!("{self:?}"), depth: d, expected: k });
                }
            }
        }
        devs.iter().map(|dev| crate::freelie::assoc_to_lie(&dev.homogeneous(k), k)).collect()
    }
}

impl fmt::Debug for IAEndo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IAEndo(n={}, D={}) {{", self.n, self.trunc)?;
        for (i, s) in self.images.iter().enumerate() {
            writeln!(f, "  x{} -> {:?}", i + 1, s)?;
        }
        write!(f, "}}")
    }
}

pub fn identity_endo(n: usize, trunc: usize) -> IAEndo {
    IAEndo { n, trunc, images: (1..=n).map(|i| TruncSeries::generator(n, trunc, i)).collect() }
}

fn from_word_images(n: usize, trunc: usize, words: &[Word]) -> Result<IAEndo> {
    IAEndo::from_images(words.iter().map(|w| expand(w, n, trunc)).collect::<Result<_>>()?)
}

/// `χ_ij : x_i ↦ x_j⁻¹ x_i x_j`, other generators fixed.
pub fn chi(i: usize, j: usize, n: usize, trunc: usize) -> Result<IAEndo> {
    if i == j || !(1..=n).contains(&i) || !(1..=n).contains(&j) {
        return Err(Error::IndexViolation(vec![i, j], n));
    }
    let words: Vec<Word> = (1..=n)
        .map(|k| if k == i { Word::x(j).inverse().mul(&Word::x(i)).mul(&Word::x(j)) } else { Word::x(k) })
        .collect();
    from_word_images(n, trunc, &words)
}

/// `χ_ijk : x_i ↦ x_i (x_j⁻¹, x_k⁻¹)`, other generators fixed.
pub fn chi3(i: usize, j: usize, k: usize, n: usize, trunc: usize) -> Result<IAEndo> {
    let in_range = [i, j, k].iter().all(|v| (1..=n).contains(v));
    if !in_range || i == j || i == k || j >= k {
        return Err(Error::IndexViolation(vec![i, j, k], n));
    }
    let words: Vec<Word> = (1..=n)
        .map(|m| {
            if m == i {
                Word::x(i).mul(&Word::commutator(&Word::x(j).inverse(), &Word::x(k).inverse()))
            } else {
                Word::x(m)
            }
        })
        .collect();
    from_word_images(n, trunc, &words)
}

/// `τ_g : x ↦ g x g⁻¹`.
pub fn inner(g: &Word, n: usize, trunc: usize) -> Result<IAEndo> {
    inner_series(&expand(g, n, trunc)?)
}

/// Conjugation by a group element given as a series with constant term 1.
pub fn inner_series(g: &TruncSeries) -> Result<IAEndo> {
    let gi = g.inv()?;
    let (n, trunc) = (g.n(), g.truncation());
    let images = (1..=n).map(|i| g.mul(&TruncSeries::generator(n, trunc, i))?.mul(&gi)).collect::<Result<_>>()?;
    IAEndo::from_images(images)
}

/// `φ ∘ ψ`.
pub fn compose(phi: &IAEndo, psi: &IAEndo) -> Result<IAEndo> {
    phi.check_params(psi)?;
    let images = psi.images.iter().map(|s| phi.apply(s)).collect::<Result<_>>()?;
    Ok(IAEndo { n: phi.n, trunc: phi.trunc, images })
}

/// Two-sided inverse, by degree-by-degree lifting of a right inverse.
pub fn invert(phi: &IAEndo) -> IAEndo {
    let (n, trunc) = (phi.n, phi.trunc);
    let target = identity_endo(n, trunc);
    let mut candidate = target.clone();
    // each round fixes at least one more degree of φ∘candidate
    for _ in 0..trunc {
        let err = compose(phi, &candidate).expect("matching parameters");
        if err == target {
            break;
        }
        let images = candidate
            .images
            .iter()
            .zip(err.images.iter().zip(&target.images))
            .map(|(c, (e, t))| c.sub(&e.sub(t).unwrap()).unwrap())
            .collect();
        candidate = IAEndo { n, trunc, images };
    }
    debug_assert_eq!(compose(phi, &candidate).unwrap(), target);
    candidate
}

/// `(φ, ψ) = φ⁻¹ ψ⁻¹ φ ψ`.
pub fn aut_commutator(phi: &IAEndo, psi: &IAEndo) -> Result<IAEndo> {
    phi.check_params(psi)?;
    let left = compose(&invert(phi), &invert(psi))?;
    compose(&left, &compose(phi, psi)?)
}

pub fn johnson_depth(phi: &IAEndo) -> Depth {
    phi.johnson_depth()
}

pub fn johnson_image(phi: &IAEndo) -> Result<(usize, Vec<LieElement>)> {
    phi.johnson_image()
}
