//! Free-group words and their truncated Magnus expansions.
//!
//! A word is sent to the unit `x_i ↦ 1 + X_i` of the free associative
//! algebra over Z, truncated above degree `D`. A word lies in the `k`-th term
//! of the lower central series exactly when its expansion is `1` plus terms of
//! degree at least `k`, and the lowest nonconstant component is then the
//! image of the word in the associated graded Lie algebra.
//!
//! Series are stored as one dense bucket per degree; monomials of degree `d`
//! are packed as base-`n` integers with the first letter most significant.
//! A bucket that is identically zero is kept empty.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::freelie::{assoc_to_lie, checked, pack, unpack, word_string, AssocPoly, LieElement};

/// A freely reduced word in `x_1 .. x_n` and their inverses.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    /// `(0-based letter, nonzero exponent)`, no two adjacent letters equal.
    syllables: Vec<(u8, i64)>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    /// The generator `x_i`, 1-based.
    pub fn x(i: usize) -> Self {
        Self::power(i, 1)
    }

    /// `x_i^e`, 1-based.
    pub fn power(i: usize, e: i64) -> Self {
        assert!((1..=256).contains(&i), "generator index {i} out of range");
        let mut w = Word::identity();
        w.push((i - 1) as u8, e);
        w
    }

    /// Builds a reduced word from `(1-based letter, exponent)` pairs.
    pub fn from_syllables(s: &[(usize, i64)]) -> Self {
        let mut w = Word::identity();
        for &(i, e) in s {
            w = w.mul(&Word::power(i, e));
        }
        w
    }

    fn push(&mut self, l: u8, e: i64) {
        if e == 0 {
            return;
        }
        match self.syllables.last_mut() {
            Some((last, f)) if *last == l => {
                *f += e;
                if *f == 0 {
                    self.syllables.pop();
                }
            }
            _ => self.syllables.push((l, e)),
        }
    }

    /// `(0-based letter, exponent)` syllables.
    pub fn syllables(&self) -> &[(u8, i64)] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Length as a reduced word in the generators and their inverses.
    pub fn len(&self) -> usize {
        self.syllables.iter().map(|s| s.1.unsigned_abs() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Largest 1-based generator index occurring, 0 for the identity.
    pub fn max_letter(&self) -> usize {
        self.syllables.iter().map(|s| s.0 as usize + 1).max().unwrap_or(0)
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &(l, e) in &other.syllables {
            w.push(l, e);
        }
        w
    }

    pub fn inverse(&self) -> Word {
        Word { syllables: self.syllables.iter().rev().map(|&(l, e)| (l, -e)).collect() }
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(Word::identity(), |acc, _| acc.mul(&base))
    }

    /// `(a, b) = a⁻¹ b⁻¹ a b`.
    pub fn commutator(a: &Word, b: &Word) -> Word {
        a.inverse().mul(&b.inverse()).mul(a).mul(b)
    }
}

/// `((w1, w2), ..., wm)`.
pub fn left_normed_commutator(ws: &[Word]) -> Word {
    let (first, rest) = ws.split_first().expect("empty commutator");
    rest.iter().fold(first.clone(), |acc, w| Word::commutator(&acc, w))
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .syllables
            .iter()
            .map(|&(l, e)| if e == 1 { format!("x{}", l + 1) } else { format!("x{}^{}", l + 1, e) })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses whitespace- or `*`-separated syllables such as `x1 x2^-1 x3^2`;
    /// `1` is the identity.
    fn from_str(s: &str) -> Result<Word> {
        let mut w = Word::identity();
        for tok in s.split(|c: char| c.is_whitespace() || c == '*').filter(|t| !t.is_empty()) {
            if tok == "1" {
                continue;
            }
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => (b, e.parse::<i64>().map_err(|_| Error::Parse(format!("bad exponent in {tok:?}")))?),
                None => (tok, 1),
            };
            let idx = base
                .strip_prefix('x')
                .and_then(|d| d.parse::<usize>().ok())
                .filter(|&i| (1..=256).contains(&i))
                .ok_or_else(|| Error::Parse(format!("bad generator {tok:?}")))?;
            w = w.mul(&Word::power(idx, exp));
        }
        Ok(w)
    }
}

/// Lower-central-series depth of a truncated series.
///
/// The sentinel means "no nonconstant term up to the truncation degree", i.e.
/// depth at least `D + 1`; it is deliberately not ordered against numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Depth {
    Degree(usize),
    IdentityAtTruncation(usize),
}

impl Depth {
    pub fn degree(self) -> Option<usize> {
        match self {
            Depth::Degree(k) => Some(k),
            Depth::IdentityAtTruncation(_) => None,
        }
    }

    /// Whether the depth is at least `k`; `None` when truncation cannot tell.
    pub fn is_at_least(self, k: usize) -> Option<bool> {
        match self {
            Depth::Degree(d) => Some(d >= k),
            Depth::IdentityAtTruncation(trunc) => (k <= trunc + 1).then_some(true),
        }
    }

    pub fn is_sentinel(self) -> bool {
        matches!(self, Depth::IdentityAtTruncation(_))
    }
}

impl fmt::Display for Depth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Depth::Degree(k) => write!(f, "{k}"),
            Depth::IdentityAtTruncation(d) => write!(f, ">{d}"),
        }
    }
}

/// A noncommutative power series in `X_1 .. X_n` truncated above degree `D`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncSeries {
    n: usize,
    trunc: usize,
    buckets: Vec<Vec<i64>>,
}

fn bucket_len(n: usize, d: usize) -> usize {
    n.checked_pow(d as u32).expect("bucket size overflow")
}

fn nonzeros(b: &[i64]) -> Vec<(usize, i64)> {
    b.iter().enumerate().filter(|(_, v)| **v != 0).map(|(i, v)| (i, *v)).collect()
}

/// `out[i * shift + j] += a[i] * b[j]` over nonzero entries of `b`.
fn accumulate(out: &mut [i64], a: &[i64], b_nz: &[(usize, i64)], shift: usize) {
    for (i, &va) in a.iter().enumerate() {
        if va == 0 {
            continue;
        }
        let base = i * shift;
        for &(j, vb) in b_nz {
            let slot = &mut out[base + j];
            *slot = checked(slot.checked_add(checked(va.checked_mul(vb))));
        }
    }
}

impl TruncSeries {
    pub fn one(n: usize, trunc: usize) -> Self {
        let mut buckets = vec![Vec::new(); trunc + 1];
        buckets[0] = vec![1];
        TruncSeries { n, trunc, buckets }
    }

    pub fn zero(n: usize, trunc: usize) -> Self {
        TruncSeries { n, trunc, buckets: vec![Vec::new(); trunc + 1] }
    }

    /// `1 + X_i`, 1-based.
    pub fn generator(n: usize, trunc: usize, i: usize) -> Self {
        let mut s = Self::one(n, trunc);
        s.add_term(&[(i - 1) as u8], 1);
        s
    }

    /// Series with the given `(0-based monomial, coefficient)` terms;
    /// monomials above the truncation degree are dropped.
    pub fn from_terms(n: usize, trunc: usize, terms: &[(&[u8], i64)]) -> Self {
        let mut s = Self::zero(n, trunc);
        for (w, v) in terms {
            if w.len() <= trunc {
                s.add_term(w, *v);
            }
        }
        s
    }

    fn add_term(&mut self, w: &[u8], v: i64) {
        let d = w.len();
        assert!(w.iter().all(|&l| (l as usize) < self.n), "letter out of range");
        if self.buckets[d].is_empty() {
            self.buckets[d] = vec![0; bucket_len(self.n, d)];
        }
        let slot = &mut self.buckets[d][pack(w, self.n) as usize];
        *slot = checked(slot.checked_add(v));
        self.normalize_bucket(d);
    }

    fn normalize_bucket(&mut self, d: usize) {
        if self.buckets[d].iter().all(|&v| v == 0) {
            self.buckets[d].clear();
        }
    }

    fn normalize(&mut self) {
        for d in 0..=self.trunc {
            self.normalize_bucket(d);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn truncation(&self) -> usize {
        self.trunc
    }

    pub fn constant(&self) -> i64 {
        self.buckets[0].first().copied().unwrap_or(0)
    }

    pub fn coeff(&self, w: &[u8]) -> i64 {
        match self.buckets.get(w.len()) {
            Some(b) if !b.is_empty() => b[pack(w, self.n) as usize],
            _ => 0,
        }
    }

    /// All nonzero terms as `(0-based monomial, coefficient)`, by degree then
    /// lexicographically.
    pub fn terms(&self) -> Vec<(Vec<u8>, i64)> {
        let mut out = Vec::new();
        for (d, b) in self.buckets.iter().enumerate() {
            for (code, v) in nonzeros(b) {
                out.push((unpack(code as u64, self.n, d), v));
            }
        }
        out
    }

    pub fn is_one(&self) -> bool {
        self.constant() == 1 && self.buckets[1..].iter().all(Vec::is_empty)
    }

    fn check_params(&self, other: &TruncSeries) -> Result<()> {
        if self.n != other.n || self.trunc != other.trunc {
            return Err(Error::ParameterMismatch { n1: self.n, d1: self.trunc, n2: other.n, d2: other.trunc });
        }
        Ok(())
    }

    /// Same series viewed at a lower truncation degree.
    pub fn truncate(&self, trunc: usize) -> TruncSeries {
        assert!(trunc <= self.trunc);
        TruncSeries { n: self.n, trunc, buckets: self.buckets[..=trunc].to_vec() }
    }

    pub fn add(&self, other: &TruncSeries) -> Result<TruncSeries> {
        self.check_params(other)?;
        Ok(self.add_unchecked(other, 1))
    }

    pub fn sub(&self, other: &TruncSeries) -> Result<TruncSeries> {
        self.check_params(other)?;
        Ok(self.add_unchecked(other, -1))
    }

    fn add_unchecked(&self, other: &TruncSeries, sign: i64) -> TruncSeries {
        let mut out = self.clone();
        for d in 0..=self.trunc {
            let b = &other.buckets[d];
            if b.is_empty() {
                continue;
            }
            if out.buckets[d].is_empty() {
                out.buckets[d] = vec![0; b.len()];
            }
            for (x, y) in out.buckets[d].iter_mut().zip(b) {
                *x = checked(x.checked_add(checked(y.checked_mul(sign))));
            }
            out.normalize_bucket(d);
        }
        out
    }

    pub fn mul(&self, other: &TruncSeries) -> Result<TruncSeries> {
        self.check_params(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &TruncSeries) -> TruncSeries {
        let n = self.n;
        let mut out = TruncSeries::zero(n, self.trunc);
        let other_nz: Vec<Vec<(usize, i64)>> = other.buckets.iter().map(|b| nonzeros(b)).collect();
        for (d1, a) in self.buckets.iter().enumerate() {
            if a.is_empty() {
                continue;
            }
            for (d2, b) in other_nz.iter().enumerate().take(self.trunc - d1 + 1) {
                if b.is_empty() {
                    continue;
                }
                let d = d1 + d2;
                if out.buckets[d].is_empty() {
                    out.buckets[d] = vec![0; bucket_len(n, d)];
                }
                accumulate(&mut out.buckets[d], a, b, bucket_len(n, d2));
            }
        }
        out.normalize();
        out
    }

    /// Multiplicative inverse of a series with constant term 1.
    pub fn inv(&self) -> Result<TruncSeries> {
        if self.constant() != 1 {
            return Err(Error::NonUnit(self.constant()));
        }
        let n = self.n;
        let mut out = TruncSeries::one(n, self.trunc);
        for d in 1..=self.trunc {
            let mut acc = vec![0i64; bucket_len(n, d)];
            for k in 1..=d {
                let a = &self.buckets[k];
                let b = &out.buckets[d - k];
                if a.is_empty() || b.is_empty() {
                    continue;
                }
                accumulate(&mut acc, a, &nonzeros(b), bucket_len(n, d - k));
            }
            for v in acc.iter_mut() {
                *v = checked(v.checked_neg());
            }
            out.buckets[d] = acc;
            out.normalize_bucket(d);
        }
        Ok(out)
    }

    /// `self * (1 + X_l)^e` for a 0-based letter `l`.
    fn mul_letter_power(&self, l: u8, e: i64) -> TruncSeries {
        let n = self.n;
        // generalized binomial coefficients C(e, k)
        let mut coeffs = vec![1i64];
        for k in 1..=self.trunc as i64 {
            let prev = *coeffs.last().unwrap() as i128;
            let next = prev * (e - k + 1) as i128 / k as i128;
            coeffs.push(i64::try_from(next).expect("integer coefficient overflow"));
        }
        let mut out = TruncSeries::zero(n, self.trunc);
        for (d1, a) in self.buckets.iter().enumerate() {
            if a.is_empty() {
                continue;
            }
            let mut power_code = 0usize; // code of l^k
            let mut shift = 1usize;
            for (k, &ck) in coeffs.iter().enumerate().take(self.trunc - d1 + 1) {
                if k > 0 {
                    power_code = power_code * n + l as usize;
                    shift *= n;
                }
                if ck == 0 {
                    continue;
                }
                let d = d1 + k;
                if out.buckets[d].is_empty() {
                    out.buckets[d] = vec![0; bucket_len(n, d)];
                }
                accumulate(&mut out.buckets[d], a, &[(power_code, ck)], shift);
            }
        }
        out.normalize();
        out
    }

    /// Degree-`d` component as an associative polynomial.
    pub fn homogeneous(&self, d: usize) -> AssocPoly {
        let mut p = AssocPoly::zero(self.n);
        if let Some(b) = self.buckets.get(d) {
            for (code, v) in nonzeros(b) {
                p.add_term(unpack(code as u64, self.n, d), v);
            }
        }
        p
    }

    /// Least degree of a nonconstant term.
    pub fn lcs_depth(&self) -> Result<Depth> {
        if self.constant() != 1 {
            return Err(Error::NonUnit(self.constant()));
        }
        Ok(match (1..=self.trunc).find(|&d| !self.buckets[d].is_empty()) {
            Some(d) => Depth::Degree(d),
            None => Depth::IdentityAtTruncation(self.trunc),
        })
    }

    /// Lowest nonconstant component as a Lie element, with its degree.
    pub fn leading_lie(&self) -> Result<(usize, LieElement)> {
        match self.lcs_depth()? {
            Depth::Degree(k) => Ok((k, assoc_to_lie(&self.homogeneous(k), k)?)),
            Depth::IdentityAtTruncation(d) => Err(Error::IdentityAtTruncation(d)),
        }
    }

    /// Image under the algebra endomorphism `X_j ↦ images[j]`. Every image
    /// must have zero constant term.
    pub fn substitute(&self, images: &[TruncSeries]) -> Result<TruncSeries> {
        assert_eq!(images.len(), self.n, "one image per letter");
        for a in images {
            self.check_params(a)?;
            assert_eq!(a.constant(), 0, "substituted series must have zero constant term");
        }
        let buckets = self.subst_rec(images, 0, 0, self.trunc);
        let mut out = TruncSeries { n: self.n, trunc: self.trunc, buckets };
        out.normalize();
        Ok(out)
    }

    /// Substitution into the sub-series of monomials with prefix `code` of
    /// length `k`, truncated at degree `limit` (buckets `0..=limit`).
    fn subst_rec(&self, images: &[TruncSeries], k: usize, code: usize, limit: usize) -> Vec<Vec<i64>> {
        let n = self.n;
        let mut out: Vec<Vec<i64>> = vec![Vec::new(); limit + 1];
        if let Some(&c) = self.buckets[k].get(code) {
            if c != 0 {
                out[0] = vec![c];
            }
        }
        if limit == 0 {
            return out;
        }
        for j in 0..n {
            let child = code * n + j;
            if !self.subtree_nonzero(k + 1, child) {
                continue;
            }
            let sub = self.subst_rec(images, k + 1, child, limit - 1);
            let sub_nz: Vec<Vec<(usize, i64)>> = sub.iter().map(|b| nonzeros(b)).collect();
            // images[j] has no constant term, so degree d1 >= 1
            for d1 in 1..=limit {
                let a = &images[j].buckets[d1];
                if a.is_empty() {
                    continue;
                }
                for (d2, b_nz) in sub_nz.iter().enumerate().take(limit - d1 + 1) {
                    if b_nz.is_empty() {
                        continue;
                    }
                    let d = d1 + d2;
                    if out[d].is_empty() {
                        out[d] = vec![0; bucket_len(n, d)];
                    }
                    accumulate(&mut out[d], a, b_nz, bucket_len(n, d2));
                }
            }
        }
        out
    }

    fn subtree_nonzero(&self, k: usize, code: usize) -> bool {
        let n = self.n;
        let mut width = 1usize;
        for d in k..=self.trunc {
            let b = &self.buckets[d];
            if !b.is_empty() && b[code * width..(code + 1) * width].iter().any(|&v| v != 0) {
                return true;
            }
            width *= n;
        }
        false
    }
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0 (mod deg>{})", self.trunc);
        }
        let parts: Vec<String> = terms
            .iter()
            .map(|(w, v)| if w.is_empty() { v.to_string() } else { format!("{v}*X{}", word_string(w)) })
            .collect();
        write!(f, "{} (mod deg>{})", parts.join(" + "), self.trunc)
    }
}

/// Magnus expansion of a word over `n` letters, truncated above degree `trunc`.
pub fn expand(w: &Word, n: usize, trunc: usize) -> Result<TruncSeries> {
    if let Some(&(l, _)) = w.syllables.iter().find(|s| s.0 as usize >= n) {
        return Err(Error::LetterOutOfRange { letter: l as usize + 1, n });
    }
    let mut s = TruncSeries::one(n, trunc);
    for &(l, e) in &w.syllables {
        s = s.mul_letter_power(l, e);
    }
    Ok(s)
}

/// Convenience: lower-central-series depth of a word at truncation `trunc`.
pub fn word_depth(w: &Word, n: usize, trunc: usize) -> Result<Depth> {
    expand(w, n, trunc)?.lcs_depth()
}
