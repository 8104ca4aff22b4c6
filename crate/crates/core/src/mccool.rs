//! The McCool group of basis-conjugating automorphisms, its presentations,
//! and graded Johnson ranks of its subgroups.
//!
//! Subgroups are described by a [`SubgroupSpec`]: named generators together
//! with a recipe for realizing each one as an [`IAEndo`] at a chosen
//! truncation. Words in those names are [`GenWord`]s.
//!
//! The degree-`c` rank of a subgroup `K` is the rank of
//! `γ_c(K) I_{c+2}A / I_{c+2}A`. It is computed by evaluating weight-`c`
//! commutators in the generators and stacking their degree-`(c+1)` Johnson
//! images, which embed `I_{c+1}A / I_{c+2}A` into `n` copies of `L^{c+1}`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::autfn::{aut_commutator, chi, chi3, compose, identity_endo, inner, invert, IAEndo};
use crate::error::{Error, Result};
use crate::freelie::{lyndon_words, witt_rank, LyndonWord};
use crate::intlinalg::{serialize_bigints, smith_normal_form, IntMatrix};
use crate::magnus::Word;

/// Freely reduced word over named generators.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GenWord {
    letters: Vec<(String, i64)>,
}

impl GenWord {
    pub fn identity() -> Self {
        GenWord::default()
    }

    pub fn letter(name: &str) -> Self {
        GenWord { letters: vec![(name.to_string(), 1)] }
    }

    pub fn from_letters<S: AsRef<str>>(letters: &[(S, i64)]) -> Self {
        let mut w = GenWord::identity();
        for (name, e) in letters {
            w.push(name.as_ref(), *e);
        }
        w
    }

    fn push(&mut self, name: &str, e: i64) {
        if e == 0 {
            return;
        }
        if let Some(last) = self.letters.last_mut() {
            if last.0 == name {
                last.1 += e;
                if last.1 == 0 {
                    self.letters.pop();
                }
                return;
            }
        }
        self.letters.push((name.to_string(), e));
    }

    pub fn letters(&self) -> &[(String, i64)] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Syllable count.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn mul(&self, other: &GenWord) -> GenWord {
        let mut w = self.clone();
        for (name, e) in &other.letters {
            w.push(name, *e);
        }
        w
    }

    pub fn inverse(&self) -> GenWord {
        GenWord { letters: self.letters.iter().rev().map(|(s, e)| (s.clone(), -e)).collect() }
    }

    /// `(a, b) = a⁻¹ b⁻¹ a b`.
    pub fn commutator(a: &GenWord, b: &GenWord) -> GenWord {
        a.inverse().mul(&b.inverse()).mul(a).mul(b)
    }
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (k, (name, e)) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            if *e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GenWord({self})")
    }
}

impl FromStr for GenWord {
    type Err = Error;

    /// Parses `"u2 b1^-1 u2^-1"`; tokens may also be separated by `*`, and
    /// `"1"` is the identity.
    fn from_str(s: &str) -> Result<Self> {
        let mut w = GenWord::identity();
        for tok in s.split(|c: char| c.is_whitespace() || c == '*').filter(|t| !t.is_empty()) {
            if tok == "1" {
                continue;
            }
            let (name, e) = match tok.split_once('^') {
                Some((name, e)) => (name, e.parse::<i64>().map_err(|_| Error::Parse(tok.to_string()))?),
                None => (tok, 1),
            };
            let valid = name.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::Parse(tok.to_string()));
            }
            w.push(name, e);
        }
        Ok(w)
    }
}

/// Recipe for an IA-automorphism, parametrized by truncation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Realization {
    Chi(usize, usize),
    Chi3(usize, usize, usize),
    Inner(Word),
    /// Left-action product in list order.
    Product(Vec<Realization>),
}

impl Realization {
    pub fn realize(&self, n: usize, trunc: usize) -> Result<IAEndo> {
        match self {
            Realization::Chi(i, j) => chi(*i, *j, n, trunc),
            Realization::Chi3(i, j, k) => chi3(*i, *j, *k, n, trunc),
            Realization::Inner(g) => inner(g, n, trunc),
            Realization::Product(fs) => {
                let mut acc = identity_endo(n, trunc);
                for f in fs {
                    acc = compose(&acc, &f.realize(n, trunc)?)?;
                }
                Ok(acc)
            }
        }
    }
}

/// A finitely generated subgroup of `IA(F_n)` given by named generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupSpec {
    pub name: String,
    pub n: usize,
    generators: Vec<(String, Realization)>,
}

impl SubgroupSpec {
    pub fn new(name: &str, n: usize, generators: Vec<(String, Realization)>) -> Self {
        SubgroupSpec { name: name.to_string(), n, generators }
    }

    pub fn names(&self) -> Vec<&str> {
        self.generators.iter().map(|(s, _)| s.as_str()).collect()
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn realization(&self, name: &str) -> Result<&Realization> {
        self.generators
            .iter()
            .find(|(s, _)| s == name)
            .map(|(_, r)| r)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn realize(&self, name: &str, trunc: usize) -> Result<IAEndo> {
        self.realization(name)?.realize(self.n, trunc)
    }

    /// Realizations of all generators, in declaration order.
    pub fn realize_all(&self, trunc: usize) -> Result<Vec<IAEndo>> {
        self.generators.par_iter().map(|(_, r)| r.realize(self.n, trunc)).collect()
    }

    /// Spec with the same generators, renamed and listed in the given order.
    pub fn restrict(&self, name: &str, keep: &[&str]) -> Result<SubgroupSpec> {
        let gens = keep.iter().map(|k| Ok((k.to_string(), self.realization(k)?.clone()))).collect::<Result<_>>()?;
        Ok(SubgroupSpec::new(name, self.n, gens))
    }
}

fn chi_name(i: usize, j: usize) -> String {
    format!("chi{i}{j}")
}

/// Names `chi_ij` of the generators of `M_n`, ordered by `(i, j)`.
pub fn mccool_generators(n: usize) -> Vec<String> {
    assert!((2..=9).contains(&n), "generator names need 2 <= n <= 9");
    let mut out = Vec::with_capacity(n * (n - 1));
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                out.push(chi_name(i, j));
            }
        }
    }
    out
}

/// The McCool group `M_n` on its generators `chi_ij : x_i ↦ x_j⁻¹ x_i x_j`.
pub fn mccool(n: usize) -> SubgroupSpec {
    let mut gens = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                gens.push((chi_name(i, j), Realization::Chi(i, j)));
            }
        }
    }
    SubgroupSpec::new(&format!("M{n}"), n, gens)
}

fn distinct(ix: &[usize]) -> bool {
    ix.iter().enumerate().all(|(a, x)| ix[a + 1..].iter().all(|y| y != x))
}

/// McCool relators `(χ_ij, χ_kj)`, `(χ_ij, χ_kq)`, `(χ_ij χ_kj, χ_ik)` over
/// distinct subscripts, in that family order.
pub fn mccool_relations(n: usize) -> Vec<GenWord> {
    let c = |i, j| GenWord::letter(&chi_name(i, j));
    let mut fam1 = Vec::new();
    let mut fam2 = Vec::new();
    let mut fam3 = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                if !distinct(&[i, j, k]) {
                    continue;
                }
                fam1.push(GenWord::commutator(&c(i, j), &c(k, j)));
                fam3.push(GenWord::commutator(&c(i, j).mul(&c(k, j)), &c(i, k)));
                for q in 1..=n {
                    if distinct(&[i, j, k, q]) {
                        fam2.push(GenWord::commutator(&c(i, j), &c(k, q)));
                    }
                }
            }
        }
    }
    fam1.into_iter().chain(fam2).chain(fam3).collect()
}

fn product(pairs: &[(usize, usize)]) -> Realization {
    Realization::Product(pairs.iter().map(|&(i, j)| Realization::Chi(i, j)).collect())
}

/// `M_3` on `b1 = χ21, b2 = χ12, b3 = χ23, u2 = χ31χ21, u4 = χ32χ12,
/// u6 = χ23χ13`.
pub fn m3_bu() -> SubgroupSpec {
    let gens = vec![
        ("b1".to_string(), Realization::Chi(2, 1)),
        ("b2".to_string(), Realization::Chi(1, 2)),
        ("b3".to_string(), Realization::Chi(2, 3)),
        ("u2".to_string(), product(&[(3, 1), (2, 1)])),
        ("u4".to_string(), product(&[(3, 2), (1, 2)])),
        ("u6".to_string(), product(&[(2, 3), (1, 3)])),
    ];
    SubgroupSpec::new("M3", 3, gens)
}

/// Generators and the nine relators of the `b/u` presentation of `M_3`.
pub fn m3_presentation() -> (SubgroupSpec, Vec<GenWord>) {
    let rels = [
        "u2^-1 b1^-1 u2 b1",
        "u2^-1 b2 u4^-1 u2 u4 b2^-1",
        "u2^-1 b3^-1 u2 b3",
        "u4^-1 b1 u2^-1 u4 u2 b1^-1",
        "u4^-1 b2^-1 u4 b2",
        "u4^-1 u6^-1 b3 u4 b3^-1 u6",
        "u6^-1 b1^-1 u6 b1",
        "u6^-1 b2^-1 u6 b2",
        "u6^-1 b3^-1 u6 b3",
    ];
    (m3_bu(), rels.iter().map(|r| r.parse().expect("well-formed relator")).collect())
}

/// `H = ⟨χ21, χ12, χ23⟩ ≤ M_3`.
pub fn subgroup_h() -> SubgroupSpec {
    m3_bu().restrict("H", &["b1", "b2", "b3"]).expect("names exist")
}

/// `H` on the names `x = χ21, y = χ12, z = χ23`.
pub fn subgroup_h_xyz() -> SubgroupSpec {
    let gens = vec![
        ("x".to_string(), Realization::Chi(2, 1)),
        ("y".to_string(), Realization::Chi(1, 2)),
        ("z".to_string(), Realization::Chi(2, 3)),
    ];
    SubgroupSpec::new("H", 3, gens)
}

/// `E = Inn(F_3)` on `u2, u4, u6`.
pub fn subgroup_e() -> SubgroupSpec {
    m3_bu().restrict("E", &["u2", "u4", "u6"]).expect("names exist")
}

/// `H_1 = ⟨χ21, χ23⟩`.
pub fn subgroup_h1() -> SubgroupSpec {
    m3_bu().restrict("H1", &["b1", "b3"]).expect("names exist")
}

/// Left-action product of the realized letters of `w`.
pub fn evaluate(w: &GenWord, spec: &SubgroupSpec, trunc: usize) -> Result<IAEndo> {
    let mut cache: HashMap<&str, (IAEndo, Option<IAEndo>)> = HashMap::new();
    let mut acc = identity_endo(spec.n, trunc);
    for (name, e) in &w.letters {
        if !cache.contains_key(name.as_str()) {
            cache.insert(name, (spec.realize(name, trunc)?, None));
        }
        let entry = cache.get_mut(name.as_str()).unwrap();
        if *e < 0 && entry.1.is_none() {
            entry.1 = Some(invert(&entry.0));
        }
        let f = if *e > 0 { &entry.0 } else { entry.1.as_ref().unwrap() };
        for _ in 0..e.unsigned_abs() {
            acc = compose(&acc, f)?;
        }
    }
    Ok(acc)
}

fn lyndon_commutator(w: &[u8], names: &[&str]) -> GenWord {
    let lw = LyndonWord::new(w.to_vec()).expect("Lyndon word");
    match lw.standard_factorization() {
        None => GenWord::letter(names[w[0] as usize]),
        Some((u, v)) => GenWord::commutator(&lyndon_commutator(u.letters(), names), &lyndon_commutator(v.letters(), names)),
    }
}

/// Group commutators of weight `c` shaped by the standard bracketing of the
/// Lyndon words of length `c` over `gen_names`. Their classes span
/// `γ_c / γ_{c+1}` of the generated group.
pub fn weight_c_commutators(gen_names: &[&str], c: usize) -> Vec<GenWord> {
    assert!(c >= 1, "weight must be positive");
    lyndon_words(gen_names.len(), c).iter().map(|w| lyndon_commutator(w, gen_names)).collect()
}

/// Realizations of the weight-`c` commutators of `weight_c_commutators`,
/// in the same order. Shared sub-commutators are evaluated once.
pub fn weight_c_endos(spec: &SubgroupSpec, c: usize, trunc: usize) -> Result<Vec<IAEndo>> {
    let m = spec.rank();
    let mut memo: HashMap<Vec<u8>, IAEndo> = HashMap::new();
    for (a, e) in spec.realize_all(trunc)?.into_iter().enumerate() {
        memo.insert(vec![a as u8], e);
    }
    for len in 2..=c {
        let words = lyndon_words(m, len);
        let level: Vec<(Vec<u8>, IAEndo)> = words
            .into_par_iter()
            .map(|w| {
                let (u, v) = LyndonWord::new(w.clone()).unwrap().standard_factorization().unwrap();
                let e = aut_commutator(&memo[u.letters()], &memo[v.letters()])?;
                Ok((w, e))
            })
            .collect::<Result<_>>()?;
        memo.extend(level);
    }
    Ok(lyndon_words(m, c).iter().map(|w| memo[w].clone()).collect())
}

/// Rows of degree-`k` Johnson coordinates, `n` blocks of `Witt(n, k)`.
pub fn johnson_rows(endos: &[IAEndo], k: usize) -> Result<IntMatrix> {
    let Some(first) = endos.first() else {
        return Ok(IntMatrix::empty(0));
    };
    let n = first.n();
    let w = witt_rank(n, k) as usize;
    let rows: Vec<Vec<(usize, i64)>> = endos
        .par_iter()
        .map(|e| {
            let slots = e.johnson_image_at(k)?;
            Ok(slots.iter().enumerate().flat_map(|(s, l)| l.coordinates(k).into_iter().map(move |(j, v)| (s * w + j, v))).collect())
        })
        .collect::<Result<_>>()?;
    let mut m = IntMatrix::empty(n * w);
    for r in rows {
        m.push_row_i64(&r);
    }
    Ok(m)
}

/// Rank of a lattice and the nontrivial elementary divisors of its
/// embedding in the ambient coordinate space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeRank {
    pub rank: usize,
    #[serde(serialize_with = "serialize_bigints")]
    pub torsion: Vec<BigInt>,
}

impl LatticeRank {
    pub fn of(m: &IntMatrix) -> Self {
        let d = smith_normal_form(m);
        LatticeRank {
            rank: d.iter().filter(|v| !v.is_zero()).count(),
            torsion: d.into_iter().filter(|v| !v.is_zero() && !v.is_one()).collect(),
        }
    }
}

/// Degree-`c` Johnson rows of a subgroup at truncation `trunc >= c + 1`.
pub fn subgroup_johnson_rows(spec: &SubgroupSpec, c: usize, trunc: usize) -> Result<IntMatrix> {
    assert!(trunc > c, "truncation {trunc} must exceed weight {c}");
    johnson_rows(&weight_c_endos(spec, c, trunc)?, c + 1)
}

/// Rank of `γ_c(K) I_{c+2}A / I_{c+2}A` at the default truncation `c + 2`.
pub fn graded_johnson_rank(spec: &SubgroupSpec, c: usize) -> Result<LatticeRank> {
    graded_johnson_rank_at(spec, c, c + 2)
}

pub fn graded_johnson_rank_at(spec: &SubgroupSpec, c: usize, trunc: usize) -> Result<LatticeRank> {
    Ok(LatticeRank::of(&subgroup_johnson_rows(spec, c, trunc)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DirectSum {
    pub rank_a: usize,
    pub rank_b: usize,
    pub rank_joint: usize,
    pub is_direct: bool,
}

/// Whether the degree-`c` graded pieces of `a` and `b` meet trivially.
pub fn direct_sum_check(a: &SubgroupSpec, b: &SubgroupSpec, c: usize, trunc: usize) -> Result<DirectSum> {
    let ra = subgroup_johnson_rows(a, c, trunc)?;
    let rb = subgroup_johnson_rows(b, c, trunc)?;
    let joint = ra.vstack(&rb)?;
    let (rank_a, rank_b, rank_joint) = (LatticeRank::of(&ra).rank, LatticeRank::of(&rb).rank, LatticeRank::of(&joint).rank);
    Ok(DirectSum { rank_a, rank_b, rank_joint, is_direct: rank_a + rank_b == rank_joint })
}

/// For a subgroup known to be free on its generators: whether the degree-`c`
/// graded piece has full rank `Witt(m, c)` and no torsion.
pub fn andreadakis_check(spec: &SubgroupSpec, c: usize, trunc: usize) -> Result<bool> {
    let r = graded_johnson_rank_at(spec, c, trunc)?;
    Ok(r.rank as u64 == witt_rank(spec.rank(), c) && r.torsion.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genword_reduction_and_parsing() {
        let w: GenWord = "u2 b1 b1^-1 u2^2".parse().unwrap();
        assert_eq!(w.to_string(), "u2^3");
        assert!(GenWord::commutator(&w, &w).is_identity());
        assert!("1".parse::<GenWord>().unwrap().is_identity());
        assert!("2a".parse::<GenWord>().is_err());
        assert!("a^x".parse::<GenWord>().is_err());
        let c = GenWord::commutator(&GenWord::letter("a"), &GenWord::letter("b"));
        assert_eq!(c.to_string(), "a^-1 b^-1 a b");
        assert_eq!(c.to_string().parse::<GenWord>().unwrap(), c);
    }

    #[test]
    fn generator_counts() {
        assert_eq!(mccool_generators(2).len(), 2);
        assert_eq!(mccool_generators(3).len(), 6);
        assert_eq!(mccool_generators(4).len(), 12);
    }

    #[test]
    fn relation_counts() {
        assert!(mccool_relations(2).is_empty());
        // ordered distinct triples, 3! each; no four distinct indices
        assert_eq!(mccool_relations(3).len(), 12);
        assert_eq!(mccool_relations(4).len(), 24 + 24 + 24);
    }

    #[test]
    fn relators_hold() {
        let spec = mccool(3);
        for r in mccool_relations(3) {
            assert!(evaluate(&r, &spec, 6).unwrap().is_identity(), "{r}");
        }
        let (bu, rels) = m3_presentation();
        assert_eq!(rels.len(), 9);
        for r in rels {
            assert!(evaluate(&r, &bu, 6).unwrap().is_identity(), "{r}");
        }
    }

    #[test]
    fn u_generators_are_inner() {
        let d = 5;
        let bu = m3_bu();
        for (name, i) in [("u2", 1), ("u4", 2), ("u6", 3)] {
            assert_eq!(bu.realize(name, d).unwrap(), inner(&Word::x(i).inverse(), 3, d).unwrap());
        }
    }

    #[test]
    fn evaluate_examples() {
        let spec = subgroup_h();
        assert!(evaluate(&GenWord::identity(), &spec, 4).unwrap().is_identity());
        assert_eq!(evaluate(&GenWord::letter("b1"), &spec, 4).unwrap(), chi(2, 1, 3, 4).unwrap());
        let w: GenWord = "b1 b2^-1 b3^2".parse().unwrap();
        assert!(evaluate(&w.mul(&w.inverse()), &spec, 4).unwrap().is_identity());
        assert!(evaluate(&w.mul(&w.inverse().mul(&w)), &spec, 4).unwrap() == evaluate(&w, &spec, 4).unwrap());
        assert_eq!(evaluate(&GenWord::letter("q"), &spec, 4), Err(Error::UnknownGenerator("q".into())));
    }

    #[test]
    fn commutator_lists() {
        assert_eq!(weight_c_commutators(&["a", "b", "c"], 1).len(), 3);
        assert_eq!(weight_c_commutators(&["a", "b", "c"], 2).len(), 3);
        assert_eq!(weight_c_commutators(&["a", "b", "c", "d", "e", "f"], 3).len(), 70);
        let w = &weight_c_commutators(&["a", "b"], 3)[0];
        let ab = GenWord::commutator(&GenWord::letter("a"), &GenWord::letter("b"));
        assert_eq!(w, &GenWord::commutator(&GenWord::letter("a"), &ab));
    }

    #[test]
    fn memoized_commutators_match_words() {
        let spec = subgroup_h();
        let words = weight_c_commutators(&spec.names(), 3);
        let endos = weight_c_endos(&spec, 3, 4).unwrap();
        for (w, e) in words.iter().zip(&endos) {
            assert_eq!(&evaluate(w, &spec, 4).unwrap(), e);
        }
    }

    #[test]
    fn small_ranks() {
        let e = graded_johnson_rank(&subgroup_e(), 1).unwrap();
        assert_eq!(e, LatticeRank { rank: 3, torsion: vec![] });
        assert_eq!(graded_johnson_rank(&subgroup_h(), 2).unwrap().rank, 3);
        assert_eq!(graded_johnson_rank(&subgroup_h1(), 2).unwrap().rank, 1);
        let ds = direct_sum_check(&subgroup_h(), &subgroup_e(), 1, 3).unwrap();
        assert_eq!(ds, DirectSum { rank_a: 3, rank_b: 3, rank_joint: 6, is_direct: true });
        assert!(!direct_sum_check(&subgroup_e(), &subgroup_e(), 1, 3).unwrap().is_direct);
        assert!(andreadakis_check(&subgroup_h(), 2, 4).unwrap());
    }

    #[test]
    fn rank_invariant_under_generator_change() {
        let h = subgroup_h();
        let alt = SubgroupSpec::new(
            "H'",
            3,
            vec![
                ("p".into(), Realization::Chi(2, 3)),
                ("q".into(), product(&[(2, 1), (1, 2)])),
                ("r".into(), Realization::Product(vec![Realization::Chi(1, 2), Realization::Chi(2, 1), invert_chi(1, 2)])),
            ],
        );
        let direct = graded_johnson_rank(&h, 1).unwrap().rank;
        assert_eq!(direct, 3);
        assert_eq!(graded_johnson_rank(&alt, 1).unwrap().rank, direct);
        let joint = subgroup_johnson_rows(&h, 1, 3).unwrap().vstack(&subgroup_johnson_rows(&alt, 1, 3).unwrap()).unwrap();
        assert_eq!(LatticeRank::of(&joint).rank, direct);
    }

    fn invert_chi(i: usize, j: usize) -> Realization {
        // χ_ij⁻¹ = τ_{x_j} with the other conjugations undone
        Realization::Product(vec![Realization::Inner(Word::x(j)), inner_fix(i, j)])
    }

    fn inner_fix(i: usize, j: usize) -> Realization {
        // undoes the conjugation on every generator other than x_i
        let others: Vec<Realization> = (1..=3).filter(|&k| k != i && k != j).map(|k| Realization::Chi(k, j)).collect();
        Realization::Product(others)
    }

    #[test]
    fn chi_inverse_recipe() {
        let r = invert_chi(1, 2).realize(3, 5).unwrap();
        assert_eq!(r, invert(&chi(1, 2, 3, 5).unwrap()));
    }
}
