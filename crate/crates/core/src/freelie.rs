//! The free Lie algebra over the integers on `n` letters.
//!
//! Elements are written in the Lyndon basis: every Lyndon word `w` of length
//! `c` stands for its standard bracketing `P_w`, and these form a Z-basis of
//! the degree-`c` component. Products are computed in the free associative
//! algebra and mapped back with [`assoc_to_lie`], which is a triangular solve:
//! the lexicographically smallest monomial of `P_w` is `w` itself, with
//! coefficient 1.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::intlinalg::{quotient_invariants, IntMatrix, QuotientInvariants};

/// A Lyndon word over letters `0..n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LyndonWord(Vec<u8>);

/// Strictly smaller than each proper rotation (equivalently, each proper
/// suffix).
pub fn is_lyndon(w: &[u8]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w < &w[i..])
}

impl LyndonWord {
    pub fn new(letters: Vec<u8>) -> Option<Self> {
        is_lyndon(&letters).then_some(LyndonWord(letters))
    }

    pub fn letter(i: u8) -> Self {
        LyndonWord(vec![i])
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// `w = uv` with `v` the longest proper Lyndon suffix; `None` for letters.
    pub fn standard_factorization(&self) -> Option<(LyndonWord, LyndonWord)> {
        (1..self.0.len())
            .find(|&i| is_lyndon(&self.0[i..]))
            .map(|i| (LyndonWord(self.0[..i].to_vec()), LyndonWord(self.0[i..].to_vec())))
    }

    pub fn bracketing(&self) -> Bracketing {
        match self.standard_factorization() {
            None => Bracketing::Letter(self.0[0]),
            Some((u, v)) => Bracketing::Bracket(Box::new(u.bracketing()), Box::new(v.bracketing())),
        }
    }
}

impl fmt::Debug for LyndonWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", word_string(&self.0))
    }
}

impl fmt::Display for LyndonWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bracketing())
    }
}

/// 1-based letter string, e.g. `[0, 1]` prints as `12` (or `1.2` when n > 9).
pub(crate) fn word_string(w: &[u8]) -> String {
    if w.iter().all(|&l| l < 9) {
        w.iter().map(|l| char::from(b'1' + l)).collect()
    } else {
        w.iter().map(|l| (l + 1).to_string()).collect::<Vec<_>>().join(".")
    }
}

/// A binary bracketing tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bracketing {
    Letter(u8),
    Bracket(Box<Bracketing>, Box<Bracketing>),
}

impl fmt::Display for Bracketing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bracketing::Letter(i) => write!(f, "x{}", i + 1),
            Bracketing::Bracket(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LyndonBasisElement {
    pub word: LyndonWord,
    pub bracketing: Bracketing,
}

impl LyndonBasisElement {
    pub fn degree(&self) -> usize {
        self.word.degree()
    }
}

/// All Lyndon words of length `c` over `n` letters in lexicographic order.
pub fn lyndon_words(n: usize, c: usize) -> Vec<Vec<u8>> {
    assert!((1..=255).contains(&n) && c >= 1);
    let top = (n - 1) as u8;
    let mut out = Vec::new();
    let mut w: Vec<u8> = vec![0];
    loop {
        if w.len() == c {
            out.push(w.clone());
        }
        let m = w.len();
        while w.len() < c {
            w.push(w[w.len() - m]);
        }
        while w.last() == Some(&top) {
            w.pop();
        }
        match w.last_mut() {
            Some(l) => *l += 1,
            None => break,
        }
    }
    out
}

pub fn lyndon_basis(n: usize, c: usize) -> Vec<LyndonBasisElement> {
    lyndon_words(n, c)
        .into_iter()
        .map(|w| {
            let word = LyndonWord(w);
            let bracketing = word.bracketing();
            LyndonBasisElement { word, bracketing }
        })
        .collect()
}

pub fn mobius(mut d: u64) -> i64 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= d {
        if d.is_multiple_of(p) {
            d /= p;
            if d.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if d > 1 {
        sign = -sign;
    }
    sign
}

/// Rank of the degree-`c` component of the free Lie algebra on `n` letters,
/// `(1/c) Σ_{d|c} μ(d) n^{c/d}`.
pub fn witt_rank(n: usize, c: usize) -> u64 {
    assert!(n >= 1 && c >= 1);
    let mut sum: i128 = 0;
    for d in 1..=c {
        if c.is_multiple_of(d) {
            let p = (n as i128).checked_pow((c / d) as u32).expect("Witt rank overflow");
            sum += mobius(d as u64) as i128 * p;
        }
    }
    debug_assert_eq!(sum % c as i128, 0);
    u64::try_from(sum / c as i128).expect("Witt rank overflow")
}

// ---------------------------------------------------------------------------
// Per-degree tables: Lyndon words, their indices, and expansions P_w.
//
// Homogeneous monomials of degree c are packed as base-n integers with the
// first letter most significant, so numeric order is lexicographic order.

pub(crate) fn pack(w: &[u8], n: usize) -> u64 {
    w.iter().fold(0u64, |acc, &l| acc * n as u64 + l as u64)
}

pub(crate) fn unpack(mut code: u64, n: usize, c: usize) -> Vec<u8> {
    let mut w = vec![0u8; c];
    for slot in w.iter_mut().rev() {
        *slot = (code % n as u64) as u8;
        code /= n as u64;
    }
    w
}

pub(crate) struct DegreeTable {
    pub words: Vec<Vec<u8>>,
    pub index: HashMap<u64, usize>,
    /// Expansion of each basis element, sorted by monomial code.
    pub expansions: Vec<Vec<(u64, i64)>>,
}

type TableCache = RwLock<HashMap<(usize, usize), Arc<DegreeTable>>>;

fn table_cache() -> &'static TableCache {
    static CACHE: OnceLock<TableCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

pub(crate) fn degree_table(n: usize, c: usize) -> Arc<DegreeTable> {
    if let Some(t) = table_cache().read().unwrap().get(&(n, c)) {
        return t.clone();
    }
    let words = lyndon_words(n, c);
    let index = words.iter().enumerate().map(|(i, w)| (pack(w, n), i)).collect();
    let expansions = if c == 1 {
        words.iter().map(|w| vec![(w[0] as u64, 1)]).collect()
    } else {
        let lower: Vec<Arc<DegreeTable>> = (1..c).map(|d| degree_table(n, d)).collect();
        words
            .par_iter()
            .map(|w| {
                let lw = LyndonWord(w.clone());
                let (u, v) = lw.standard_factorization().unwrap();
                let (du, dv) = (u.degree(), v.degree());
                let pu = &lower[du - 1].expansions[lower[du - 1].index[&pack(&u.0, n)]];
                let pv = &lower[dv - 1].expansions[lower[dv - 1].index[&pack(&v.0, n)]];
                let mut acc: BTreeMap<u64, i64> = BTreeMap::new();
                hom_mul_into(&mut acc, pu, pv, dv, n, 1);
                hom_mul_into(&mut acc, pv, pu, du, n, -1);
                acc.into_iter().filter(|e| e.1 != 0).collect()
            })
            .collect()
    };
    let table = Arc::new(DegreeTable { words, index, expansions });
    table_cache().write().unwrap().entry((n, c)).or_insert(table).clone()
}

/// `acc += sign * a * b` where `b` is homogeneous of degree `db`.
fn hom_mul_into(acc: &mut BTreeMap<u64, i64>, a: &[(u64, i64)], b: &[(u64, i64)], db: usize, n: usize, sign: i64) {
    let shift = (n as u64).pow(db as u32);
    for &(ca, va) in a {
        for &(cb, vb) in b {
            let v = checked(va.checked_mul(vb).and_then(|p| p.checked_mul(sign)));
            let e = acc.entry(ca * shift + cb).or_insert(0);
            *e = checked(e.checked_add(v));
        }
    }
}

pub(crate) fn checked(v: Option<i64>) -> i64 {
    v.expect("integer coefficient overflow")
}

/// Index of a Lyndon word inside `lyndon_basis(n, word.len())`.
pub fn lyndon_index(n: usize, word: &[u8]) -> Option<usize> {
    degree_table(n, word.len()).index.get(&pack(word, n)).copied()
}

/// Solves a homogeneous polynomial (packed codes) against the Lyndon basis.
/// Returns `(basis index, coefficient)` pairs in increasing index order.
pub(crate) fn solve_homogeneous(mut p: BTreeMap<u64, i64>, n: usize, c: usize) -> Result<Vec<(usize, i64)>> {
    let table = degree_table(n, c);
    let mut out = Vec::new();
    while let Some((&code, &a)) = p.iter().next() {
        let Some(&idx) = table.index.get(&code) else {
            return Err(Error::NotLieElement { monomial: word_string(&unpack(code, n, c)) });
        };
        for &(m, v) in &table.expansions[idx] {
            let e = p.entry(m).or_insert(0);
            *e = checked(e.checked_sub(checked(a.checked_mul(v))));
            if *e == 0 {
                p.remove(&m);
            }
        }
        out.push((idx, a));
    }
    out.sort_unstable_by_key(|e| e.0);
    Ok(out)
}

// ---------------------------------------------------------------------------
// Associative polynomials

/// A noncommutative integer polynomial in `X_1..X_n`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct AssocPoly {
    pub n: usize,
    terms: BTreeMap<Vec<u8>, i64>,
}

impl AssocPoly {
    pub fn zero(n: usize) -> Self {
        AssocPoly { n, terms: BTreeMap::new() }
    }

    /// The monomial `X_{i1} ... X_{ik}` (0-based letters).
    pub fn monomial(n: usize, letters: &[u8], coeff: i64) -> Self {
        let mut p = Self::zero(n);
        p.add_term(letters.to_vec(), coeff);
        p
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Vec<u8>, i64)>) -> Self {
        let mut p = Self::zero(n);
        for (w, v) in terms {
            p.add_term(w, v);
        }
        p
    }

    pub fn add_term(&mut self, w: Vec<u8>, v: i64) {
        assert!(w.iter().all(|&l| (l as usize) < self.n), "letter out of range");
        let e = self.terms.entry(w.clone()).or_insert(0);
        *e = checked(e.checked_add(v));
        if *e == 0 {
            self.terms.remove(&w);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u8], i64)> {
        self.terms.iter().map(|(w, v)| (w.as_slice(), *v))
    }

    pub fn coeff(&self, w: &[u8]) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn mul(&self, other: &AssocPoly) -> AssocPoly {
        assert_eq!(self.n, other.n);
        let mut out = AssocPoly::zero(self.n);
        for (a, va) in &self.terms {
            for (b, vb) in &other.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term(w, checked(va.checked_mul(*vb)));
            }
        }
        out
    }
}

impl Add for &AssocPoly {
    type Output = AssocPoly;
    fn add(self, rhs: &AssocPoly) -> AssocPoly {
        assert_eq!(self.n, rhs.n);
        let mut out = self.clone();
        for (w, v) in &rhs.terms {
            out.add_term(w.clone(), *v);
        }
        out
    }
}

impl Sub for &AssocPoly {
    type Output = AssocPoly;
    fn sub(self, rhs: &AssocPoly) -> AssocPoly {
        assert_eq!(self.n, rhs.n);
        let mut out = self.clone();
        for (w, v) in &rhs.terms {
            out.add_term(w.clone(), checked(v.checked_neg()));
        }
        out
    }
}

impl fmt::Debug for AssocPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, v)| if w.is_empty() { v.to_string() } else { format!("{v}*X{}", word_string(w)) })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

// ---------------------------------------------------------------------------
// Lie elements

/// An integer combination of Lyndon basis elements.
#[derive(Clone, PartialEq, Eq)]
pub struct LieElement {
    pub n: usize,
    terms: BTreeMap<LyndonWord, i64>,
}

impl LieElement {
    pub fn zero(n: usize) -> Self {
        LieElement { n, terms: BTreeMap::new() }
    }

    /// The generator `x_i`, 1-based.
    pub fn x(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n, "generator x{i} out of range for rank {n}");
        Self::basis(n, LyndonWord::letter((i - 1) as u8))
    }

    pub fn basis(n: usize, w: LyndonWord) -> Self {
        let mut e = Self::zero(n);
        e.add_term(w, 1);
        e
    }

    /// Basis element for a Lyndon word given by its 0-based letters.
    /// Panics if the word is not Lyndon.
    pub fn lyndon(n: usize, letters: &[u8]) -> Self {
        Self::basis(n, LyndonWord::new(letters.to_vec()).expect("not a Lyndon word"))
    }

    pub fn add_term(&mut self, w: LyndonWord, v: i64) {
        assert!(w.0.iter().all(|&l| (l as usize) < self.n), "letter out of range");
        let e = self.terms.entry(w.clone()).or_insert(0);
        *e = checked(e.checked_add(v));
        if *e == 0 {
            self.terms.remove(&w);
        }
    }

    /// Builds the element with the given coordinates in `lyndon_basis(n, c)`.
    pub fn from_coordinates(n: usize, c: usize, coords: &[(usize, i64)]) -> Self {
        let table = degree_table(n, c);
        let mut e = Self::zero(n);
        for &(i, v) in coords {
            e.add_term(LyndonWord(table.words[i].clone()), v);
        }
        e
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LyndonWord, i64)> {
        self.terms.iter().map(|(w, v)| (w, *v))
    }

    pub fn coeff(&self, w: &LyndonWord) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common degree of all terms; `None` for zero or mixed degrees.
    pub fn degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(LyndonWord::degree);
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    /// Homogeneous components keyed by degree.
    pub fn components(&self) -> BTreeMap<usize, LieElement> {
        let mut out: BTreeMap<usize, LieElement> = BTreeMap::new();
        for (w, v) in &self.terms {
            out.entry(w.degree()).or_insert_with(|| LieElement::zero(self.n)).add_term(w.clone(), *v);
        }
        out
    }

    /// Coordinates of the degree-`c` component in `lyndon_basis(n, c)`.
    pub fn coordinates(&self, c: usize) -> Vec<(usize, i64)> {
        let table = degree_table(self.n, c);
        let mut out: Vec<(usize, i64)> = self
            .terms
            .iter()
            .filter(|(w, _)| w.degree() == c)
            .map(|(w, v)| (table.index[&pack(&w.0, self.n)], *v))
            .collect();
        out.sort_unstable_by_key(|e| e.0);
        out
    }

    pub fn scale(&self, k: i64) -> LieElement {
        let mut out = LieElement::zero(self.n);
        for (w, v) in &self.terms {
            out.add_term(w.clone(), checked(v.checked_mul(k)));
        }
        out
    }

    /// Homogeneous component of degree `c` as packed monomial codes.
    pub(crate) fn packed_component(&self, c: usize) -> BTreeMap<u64, i64> {
        let table = degree_table(self.n, c);
        let mut acc = BTreeMap::new();
        for (w, v) in self.terms.iter().filter(|(w, _)| w.degree() == c) {
            let idx = table.index[&pack(&w.0, self.n)];
            for &(m, e) in &table.expansions[idx] {
                let slot = acc.entry(m).or_insert(0i64);
                *slot = checked(slot.checked_add(checked(v.checked_mul(e))));
            }
        }
        acc.retain(|_, v| *v != 0);
        acc
    }
}

impl Add for &LieElement {
    type Output = LieElement;
    fn add(self, rhs: &LieElement) -> LieElement {
        assert_eq!(self.n, rhs.n, "alphabet mismatch");
        let mut out = self.clone();
        for (w, v) in &rhs.terms {
            out.add_term(w.clone(), *v);
        }
        out
    }
}

impl Sub for &LieElement {
    type Output = LieElement;
    fn sub(self, rhs: &LieElement) -> LieElement {
        self + &(-rhs)
    }
}

impl Neg for &LieElement {
    type Output = LieElement;
    fn neg(self) -> LieElement {
        self.scale(-1)
    }
}

impl Mul<&LieElement> for i64 {
    type Output = LieElement;
    fn mul(self, rhs: &LieElement) -> LieElement {
        rhs.scale(self)
    }
}

impl fmt::Debug for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, v)) in self.terms.iter().enumerate() {
            let sign = match (k, *v < 0) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            match v.abs() {
                1 => write!(f, "{sign}{w}")?,
                a => write!(f, "{sign}{a}*{w}")?,
            }
        }
        Ok(())
    }
}

fn packed_to_assoc(n: usize, c: usize, p: &BTreeMap<u64, i64>, out: &mut AssocPoly) {
    for (&m, &v) in p {
        out.add_term(unpack(m, n, c), v);
    }
}

/// Image of a Lie element in the free associative algebra, `[u,v] ↦ uv − vu`.
pub fn lie_to_assoc(e: &LieElement) -> AssocPoly {
    let mut out = AssocPoly::zero(e.n);
    for &c in e.components().keys() {
        packed_to_assoc(e.n, c, &e.packed_component(c), &mut out);
    }
    out
}

/// The unique Lie element whose associative image is `p`.
pub fn assoc_to_lie(p: &AssocPoly, c: usize) -> Result<LieElement> {
    let n = p.n;
    if let Some((w, _)) = p.terms().find(|(w, _)| w.len() != c) {
        return Err(Error::NotLieElement { monomial: format!("X{}", word_string(w)) });
    }
    if c == 0 {
        return Ok(LieElement::zero(n));
    }
    let packed: BTreeMap<u64, i64> = p.terms().map(|(w, v)| (pack(w, n), v)).collect();
    let coords = solve_homogeneous(packed, n, c)?;
    Ok(LieElement::from_coordinates(n, c, &coords))
}

/// Lie bracket in Lyndon normal form.
pub fn bracket(a: &LieElement, b: &LieElement) -> LieElement {
    assert_eq!(a.n, b.n, "alphabet mismatch");
    let n = a.n;
    let mut out = LieElement::zero(n);
    let ca = a.components();
    let cb = b.components();
    for &da in ca.keys() {
        let pa: Vec<(u64, i64)> = a.packed_component(da).into_iter().collect();
        for &db in cb.keys() {
            let pb: Vec<(u64, i64)> = b.packed_component(db).into_iter().collect();
            let mut acc = BTreeMap::new();
            hom_mul_into(&mut acc, &pa, &pb, db, n, 1);
            hom_mul_into(&mut acc, &pb, &pa, da, n, -1);
            acc.retain(|_, v| *v != 0);
            let coords = solve_homogeneous(acc, n, da + db).expect("commutator of Lie elements is Lie");
            out = &out + &LieElement::from_coordinates(n, da + db, &coords);
        }
    }
    out
}

/// Left-normed bracket `[e1, e2, ..., ek]`.
pub fn left_normed_bracket(es: &[LieElement]) -> LieElement {
    let (first, rest) = es.split_first().expect("empty bracket");
    rest.iter().fold(first.clone(), |acc, e| bracket(&acc, e))
}

/// `[p, X_i] = p X_i − X_i p` on a homogeneous packed polynomial of degree `d`.
fn bracket_with_letter(p: &BTreeMap<u64, i64>, i: u8, d: usize, n: usize) -> BTreeMap<u64, i64> {
    let lead = (i as u64) * (n as u64).pow(d as u32);
    let mut out = BTreeMap::new();
    for (&m, &v) in p {
        *out.entry(m * n as u64 + i as u64).or_insert(0) += v;
        let e = out.entry(lead + m).or_insert(0);
        *e = checked(e.checked_sub(v));
    }
    out.retain(|_, v| *v != 0);
    out
}

/// Matrix whose row space is the degree-`c` part of the ideal generated by
/// `gens`, in coordinates of `lyndon_basis(n, c)`.
///
/// Rows are the left-normed brackets `[g, x_{i1}, ..., x_{im}]` with
/// `deg g + m = c`, ordered by generator and then lexicographically by the
/// letter sequence. Generators of degree above `c` contribute nothing.
pub fn ideal_graded_span(n: usize, gens: &[LieElement], c: usize) -> Result<IntMatrix> {
    let cols = witt_rank(n, c) as usize;
    let mut m = IntMatrix::empty(cols);
    for g in gens {
        assert_eq!(g.n, n, "alphabet mismatch");
        if g.is_zero() {
            continue;
        }
        let d = g.degree().ok_or_else(|| Error::Inhomogeneous(g.to_string()))?;
        if d > c {
            continue;
        }
        let mut level = vec![g.packed_component(d)];
        for deg in d..c {
            level = (0..level.len() * n)
                .into_par_iter()
                .map(|t| bracket_with_letter(&level[t / n], (t % n) as u8, deg, n))
                .collect();
        }
        let rows: Vec<Vec<(usize, i64)>> =
            level.into_par_iter().map(|p| solve_homogeneous(p, n, c)).collect::<Result<_>>()?;
        for r in rows {
            m.push_row_i64(&r);
        }
    }
    Ok(m)
}

/// Invariants of `L^c / J^c` for the ideal `J` generated by `gens`.
pub fn graded_quotient(n: usize, gens: &[LieElement], c: usize) -> Result<QuotientInvariants> {
    let span = ideal_graded_span(n, gens, c)?;
    quotient_invariants(&span, witt_rank(n, c) as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> LieElement {
        LieElement::x(n, i)
    }

    #[test]
    fn lyndon_basis_examples() {
        let b = lyndon_basis(2, 2);
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].word.letters(), &[0, 1]);
        // enumerated by brute force over {1,2,3}^3: 112 113 122 123 132 133 223 233
        let words: Vec<String> = lyndon_basis(3, 3).iter().map(|e| word_string(e.word.letters())).collect();
        assert_eq!(words, ["112", "113", "122", "123", "132", "133", "223", "233"]);
        assert_eq!(lyndon_basis(6, 3).len(), 70);
    }

    #[test]
    fn standard_factorization_examples() {
        let w = LyndonWord::new(vec![0, 0, 1, 1]).unwrap();
        let (u, v) = w.standard_factorization().unwrap();
        assert_eq!((u.letters(), v.letters()), (&[0u8][..], &[0u8, 1, 1][..]));
        assert_eq!(w.to_string(), "[x1,[[x1,x2],x2]]");
        let w = LyndonWord::new(vec![0, 1, 0, 1, 1]).unwrap();
        assert_eq!(w.standard_factorization().unwrap().1.letters(), &[0, 1, 1]);
        assert!(LyndonWord::new(vec![1, 0]).is_none());
        assert!(LyndonWord::new(vec![0, 1, 0, 1]).is_none());
    }

    #[test]
    fn witt_examples() {
        assert_eq!(witt_rank(3, 1), 3);
        assert_eq!(witt_rank(3, 6), (729 - 27 - 9 + 3) / 6);
        assert_eq!(witt_rank(3, 6), 116);
        assert_eq!(witt_rank(2, 6), 9);
        assert_eq!(witt_rank(6, 5), 1554);
        assert_eq!(witt_rank(6, 6), 7735);
    }

    #[test]
    fn mobius_values() {
        let expect = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0];
        for (i, m) in expect.iter().enumerate() {
            assert_eq!(mobius(i as u64 + 1), *m, "mu({})", i + 1);
        }
    }

    #[test]
    fn bracket_examples() {
        assert!(bracket(&x(2, 1), &x(2, 1)).is_zero());
        assert_eq!(bracket(&x(2, 2), &x(2, 1)), -&LieElement::lyndon(2, &[0, 1]));
        let x12 = bracket(&x(2, 1), &x(2, 2));
        assert_eq!(bracket(&x12, &x(2, 1)), -&LieElement::lyndon(2, &[0, 0, 1]));
    }

    #[test]
    fn bracket_oracle_in_envelope() {
        // [[x1,x2],x1] expanded by hand: (X1X2 - X2X1)X1 - X1(X1X2 - X2X1)
        let e = bracket(&bracket(&x(2, 1), &x(2, 2)), &x(2, 1));
        let expect = AssocPoly::from_terms(2, [(vec![0, 1, 0], 2), (vec![1, 0, 0], -1), (vec![0, 0, 1], -1)]);
        assert_eq!(lie_to_assoc(&e), expect);
    }

    #[test]
    fn lie_to_assoc_examples() {
        assert_eq!(lie_to_assoc(&x(2, 1)), AssocPoly::monomial(2, &[0], 1));
        let c = bracket(&x(2, 1), &x(2, 2));
        assert_eq!(lie_to_assoc(&c), AssocPoly::from_terms(2, [(vec![0, 1], 1), (vec![1, 0], -1)]));
        assert!(lie_to_assoc(&LieElement::zero(3)).is_zero());
    }

    #[test]
    fn assoc_to_lie_examples() {
        let p = AssocPoly::from_terms(2, [(vec![0, 1], 1), (vec![1, 0], -1)]);
        assert_eq!(assoc_to_lie(&p, 2).unwrap(), bracket(&x(2, 1), &x(2, 2)));
        let bad = AssocPoly::monomial(2, &[0, 1], 1);
        assert!(matches!(assoc_to_lie(&bad, 2), Err(Error::NotLieElement { .. })));
        let wrong_degree = AssocPoly::monomial(2, &[0], 1);
        assert!(assoc_to_lie(&wrong_degree, 2).is_err());
    }

    #[test]
    fn unit_triangularity() {
        for n in 1..=3 {
            for c in 1..=6 {
                let t = degree_table(n, c);
                for (i, w) in t.words.iter().enumerate() {
                    let code = pack(w, n);
                    let first = t.expansions[i][0];
                    assert_eq!(first, (code, 1), "P_w of {} must start with w", word_string(w));
                }
            }
        }
    }

    #[test]
    fn ideal_span_examples() {
        let g = bracket(&x(2, 1), &x(2, 2));
        let m = ideal_graded_span(2, &[g], 2).unwrap();
        assert_eq!(crate::intlinalg::row_rank(&m), 1);

        // the ideal generated by x1 contains every bracket of degree 3 on two letters
        let m = ideal_graded_span(2, &[x(2, 1)], 3).unwrap();
        assert_eq!(m.nrows(), 4);
        assert_eq!(crate::intlinalg::row_rank(&m), 2);
        let q = graded_quotient(2, &[x(2, 1)], 3).unwrap();
        assert_eq!(q.free_rank, 0);
        assert!(q.torsion.is_empty());
    }

    #[test]
    fn ideal_span_rejects_inhomogeneous() {
        let g = &x(2, 1) + &bracket(&x(2, 1), &x(2, 2));
        assert!(matches!(ideal_graded_span(2, &[g], 3), Err(Error::Inhomogeneous(_))));
    }

    #[test]
    fn lyndon_index_lookup() {
        assert_eq!(lyndon_index(3, &[0, 1]), Some(0));
        assert_eq!(lyndon_index(3, &[1, 2]), Some(2));
        assert_eq!(lyndon_index(3, &[1, 0]), None);
    }
}
