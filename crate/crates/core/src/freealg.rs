//! The free algebra on `v_1, ..., v_n` over `Q(q)`: elements, products,
//! ν-commutators, bracketings, the anti-automorphism ω and the relation
//! generators.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qarith::{q_binomial, q_int, LaurentInt, RatFn};
use crate::rootdata::RootDatum;
use crate::words::{cfl_factorize, costandard_factorization, lr_cmp, Word};

/// Which power of `q` twists a commutator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Nu {
    Q,
    QInv,
}

impl Nu {
    fn sign(self) -> i64 {
        match self {
            Nu::Q => 1,
            Nu::QInv => -1,
        }
    }
}

/// A finite linear combination of words. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct FreeElement {
    rank: usize,
    terms: BTreeMap<Word, RatFn>,
}

impl FreeElement {
    pub fn zero(rank: usize) -> Self {
        FreeElement { rank, terms: BTreeMap::new() }
    }

    /// The unit, i.e. the empty word.
    pub fn one(rank: usize) -> Self {
        Self::word(rank, Word::empty())
    }

    pub fn word(rank: usize, w: Word) -> Self {
        Self::monomial(rank, w, RatFn::one())
    }

    pub fn letter(rank: usize, i: u8) -> Self {
        Self::word(rank, Word::letter(i))
    }

    pub fn monomial(rank: usize, w: Word, c: RatFn) -> Self {
        let mut x = Self::zero(rank);
        x.add_term(w, c);
        x
    }

    pub fn scalar(rank: usize, c: RatFn) -> Self {
        Self::monomial(rank, Word::empty(), c)
    }

    pub fn from_terms(rank: usize, terms: impl IntoIterator<Item = (Word, RatFn)>) -> Self {
        let mut x = Self::zero(rank);
        for (w, c) in terms {
            x.add_term(w, c);
        }
        x
    }

    pub fn rank(&self) -> usize {
        self.rank
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

    /// Terms in increasing lex order of words.
    pub fn iter(&self) -> impl Iterator<Item = (&Word, &RatFn)> {
        self.terms.iter()
    }

    pub fn terms(&self) -> &BTreeMap<Word, RatFn> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Word, RatFn> {
        self.terms
    }

    pub fn coeff(&self, w: &Word) -> RatFn {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, w: Word, c: RatFn) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = &*e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// `self += c * x`.
    pub fn add_scaled(&mut self, x: &FreeElement, c: &RatFn) {
        if c.is_zero() {
            return;
        }
        for (w, a) in &x.terms {
            self.add_term(w.clone(), a * c);
        }
    }

    pub fn scale(&self, c: &RatFn) -> FreeElement {
        if c.is_zero() {
            return Self::zero(self.rank);
        }
        FreeElement {
            rank: self.rank,
            terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect(),
        }
    }

    pub fn checked_add(&self, other: &FreeElement) -> Result<FreeElement> {
        self.same_rank(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &RatFn::one());
        Ok(out)
    }

    pub fn multiply(&self, other: &FreeElement) -> Result<FreeElement> {
        self.same_rank(other)?;
        let mut out = Self::zero(self.rank);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        Ok(out)
    }

    fn same_rank(&self, other: &FreeElement) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::Contract(format!("rank mismatch: {} vs {}", self.rank, other.rank)));
        }
        Ok(())
    }

    /// Length of the longest word in the support.
    pub fn max_len(&self) -> Option<usize> {
        self.terms.keys().map(Word::len).max()
    }

    /// The common content of every word, if there is one.
    pub fn homogeneous_content(&self) -> Option<Vec<u32>> {
        let mut it = self.terms.keys().map(|w| w.content(self.rank));
        let first = it.next()?;
        it.all(|c| c == first).then_some(first)
    }

    /// Terms whose word has maximal length.
    pub fn top_part(&self) -> FreeElement {
        match self.max_len() {
            None => self.clone(),
            Some(m) => self.filter(|w| w.len() == m),
        }
    }

    pub fn filter(&self, keep: impl Fn(&Word) -> bool) -> FreeElement {
        FreeElement {
            rank: self.rank,
            terms: self.terms.iter().filter(|(w, _)| keep(w)).map(|(w, c)| (w.clone(), c.clone())).collect(),
        }
    }

    /// The ≺-largest word of the support with its coefficient.
    pub fn leading_term(&self) -> Option<(&Word, &RatFn)> {
        self.terms.iter().max_by(|a, b| lr_cmp(a.0, b.0))
    }

    /// Terms ordered ≺-decreasing, the leading term first.
    pub fn terms_lr_desc(&self) -> Vec<(&Word, &RatFn)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| lr_cmp(b.0, a.0));
        v
    }

    pub fn map_coeffs(&self, f: impl Fn(&RatFn) -> RatFn) -> FreeElement {
        Self::from_terms(self.rank, self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    /// Reverses every word and applies bar to every coefficient.
    pub fn omega(&self) -> FreeElement {
        Self::from_terms(self.rank, self.terms.iter().map(|(w, c)| (w.reversed(), c.bar())))
    }

    /// Bar-conjugates the coefficients, keeping words.
    pub fn bar_coeffs(&self) -> FreeElement {
        self.map_coeffs(RatFn::bar)
    }

    pub fn to_json(&self) -> FreeElementJson {
        FreeElementJson {
            rank: self.rank,
            terms: self
                .terms_lr_desc()
                .into_iter()
                .map(|(w, c)| TermJson { word: w.to_string(), coeff: c.to_string() })
                .collect(),
        }
    }
}

/// Serialized form: terms in the same order as the text form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeElementJson {
    pub rank: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub word: String,
    pub coeff: String,
}

impl FreeElementJson {
    pub fn to_element(&self) -> Result<FreeElement> {
        let mut x = FreeElement::zero(self.rank);
        for t in &self.terms {
            let w = crate::words::parse_word(&t.word, self.rank)?;
            let c: RatFn = t.coeff.parse().map_err(|e| Error::InvalidInput(format!("{e}")))?;
            x.add_term(w, c);
        }
        Ok(x)
    }
}

fn word_text(w: &Word) -> String {
    if w.is_empty() {
        "()".to_string()
    } else {
        w.to_string()
    }
}

/// Text form: `coeff*word` terms, leading term first, joined by ` + ` and
/// ` - `, the sign taken from the top coefficient of the numerator. Unit
/// coefficients are omitted; non-monomial coefficients are parenthesized;
/// the empty word prints as `()`.
impl fmt::Display for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(word_text))
    }
}

impl FreeElement {
    /// The text form with a custom rendering of words, e.g. `[1.2]` for
    /// Lyndon coordinates.
    pub fn format_with(&self, word: impl Fn(&Word) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (w, c)) in self.terms_lr_desc().into_iter().enumerate() {
            let negative = c.signum_lead() < 0;
            let mag = if negative { -c } else { c.clone() };
            out.push_str(match (k, negative) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            });
            if !mag.is_one() {
                out.push_str(&mag.to_factor_string());
                out.push('*');
            }
            out.push_str(&word(w));
        }
        out
    }
}

impl fmt::Debug for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeElement({self})")
    }
}

impl Add for &FreeElement {
    type Output = FreeElement;
    fn add(self, rhs: &FreeElement) -> FreeElement {
        self.checked_add(rhs).expect("rank mismatch")
    }
}

impl Sub for &FreeElement {
    type Output = FreeElement;
    fn sub(self, rhs: &FreeElement) -> FreeElement {
        assert_eq!(self.rank, rhs.rank, "rank mismatch");
        let mut out = self.clone();
        out.add_scaled(rhs, &RatFn::from_int(-1));
        out
    }
}

impl Mul for &FreeElement {
    type Output = FreeElement;
    fn mul(self, rhs: &FreeElement) -> FreeElement {
        self.multiply(rhs).expect("rank mismatch")
    }
}

impl Neg for &FreeElement {
    type Output = FreeElement;
    fn neg(self) -> FreeElement {
        self.scale(&RatFn::from_int(-1))
    }
}

/// `[x, y]_ν = xy - ν^{(|x|,|y|)} yx` for homogeneous `x`, `y`.
pub fn nu_commutator(x: &FreeElement, y: &FreeElement, nu: Nu, datum: &RootDatum) -> Result<FreeElement> {
    let cx = content_of(x)?;
    let cy = content_of(y)?;
    let e = nu.sign() * datum.pairing_u(&cx, &cy);
    let mut out = x.multiply(y)?;
    out.add_scaled(&y.multiply(x)?, &-RatFn::q_pow(e));
    Ok(out)
}

fn content_of(x: &FreeElement) -> Result<Vec<u32>> {
    if x.is_zero() {
        return Ok(vec![0; x.rank()]);
    }
    x.homogeneous_content()
        .ok_or_else(|| Error::Contract(format!("{x} is not homogeneous")))
}

/// The ν-bracketing of a word: along co-standard factorizations for Lyndon
/// words, and the product over CFL factors otherwise.
pub fn bracket(l: &Word, nu: Nu, datum: &RootDatum) -> FreeElement {
    let rank = datum.rank;
    let factors = cfl_factorize(l).factors;
    let mut out = FreeElement::one(rank);
    for f in factors {
        out = &out * &bracket_lyndon(&f, nu, datum);
    }
    out
}

fn bracket_lyndon(l: &Word, nu: Nu, datum: &RootDatum) -> FreeElement {
    if l.len() == 1 {
        return FreeElement::word(datum.rank, l.clone());
    }
    let (a, b) = costandard_factorization(l).expect("Lyndon words of length > 1 factor");
    let x = bracket_lyndon(&a, nu, datum);
    let y = bracket_lyndon(&b, nu, datum);
    nu_commutator(&x, &y, nu, datum).expect("brackets of words are homogeneous")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PresetMode {
    Graded,
    Canonical,
    Pbw,
    Custom,
}

impl PresetMode {
    pub fn name(self) -> &'static str {
        match self {
            PresetMode::Graded => "graded",
            PresetMode::Canonical => "canonical",
            PresetMode::Pbw => "pbw",
            PresetMode::Custom => "custom",
        }
    }
}

/// The relation parameters `c_i = q_i ξ_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationPreset {
    pub mode: PresetMode,
    pub c: Vec<RatFn>,
}

impl RelationPreset {
    /// All `c_i = 0`: the homogeneous Serre relations.
    pub fn graded(datum: &RootDatum) -> Self {
        RelationPreset { mode: PresetMode::Graded, c: vec![RatFn::zero(); datum.rank] }
    }

    /// `ξ_i = q_i^{-1}`, so all `c_i = 1`.
    pub fn canonical(datum: &RootDatum) -> Self {
        RelationPreset { mode: PresetMode::Canonical, c: vec![RatFn::one(); datum.rank] }
    }

    /// `ξ_i = -q_i^{-2}`, so `c_i = -q_i^{-1}`.
    pub fn pbw(datum: &RootDatum) -> Self {
        let c = datum.d.iter().map(|&d| -RatFn::q_pow(-(d as i64))).collect();
        RelationPreset { mode: PresetMode::Pbw, c }
    }

    pub fn custom(datum: &RootDatum, c: Vec<RatFn>) -> Result<Self> {
        if c.len() != datum.rank {
            return Err(Error::InvalidInput(format!("expected {} parameters, got {}", datum.rank, c.len())));
        }
        Ok(RelationPreset { mode: PresetMode::Custom, c })
    }

    pub fn from_mode(datum: &RootDatum, mode: PresetMode) -> Result<Self> {
        match mode {
            PresetMode::Graded => Ok(Self::graded(datum)),
            PresetMode::Canonical => Ok(Self::canonical(datum)),
            PresetMode::Pbw => Ok(Self::pbw(datum)),
            PresetMode::Custom => Err(Error::InvalidInput("custom presets need explicit parameters".into())),
        }
    }

    /// Whether the relations are fixed by bar on coefficients.
    pub fn is_bar_stable(&self) -> bool {
        self.c.iter().all(|c| c.bar() == *c)
    }
}

fn power_word(i: u8, k: usize) -> Vec<u8> {
    vec![i; k]
}

/// `LHS - RHS` of the relation for the pair `(i, j)` of 1-based letters.
pub fn iserre_relation(datum: &RootDatum, preset: &RelationPreset, i: u8, j: u8) -> Result<FreeElement> {
    let n = datum.rank;
    if i == j || i == 0 || j == 0 || i as usize > n || j as usize > n {
        return Err(Error::InvalidInput(format!("relation indices ({i}, {j}) invalid for rank {n}")));
    }
    let (ii, jj) = (i as usize - 1, j as usize - 1);
    let a = datum.cartan[ii][jj];
    let di = datum.d[ii];
    let m = (1 - a) as usize;
    let mut out = FreeElement::zero(n);
    for k in 0..=m {
        let mut w = power_word(i, m - k);
        w.push(j);
        w.extend(power_word(i, k));
        let mut c = RatFn::from(q_binomial(m as u32, k as u32, di));
        if k % 2 == 1 {
            c = -c;
        }
        out.add_term(Word::new(w), c);
    }
    let ci = &preset.c[ii];
    if ci.is_zero() {
        return Ok(out);
    }
    let wd = |v: &[u8]| Word::new(v.to_vec());
    let lint = |x: LaurentInt| RatFn::from(x);
    match a {
        0 => {}
        -1 => out.add_term(wd(&[j]), -ci.clone()),
        -2 => {
            let k = ci * &lint(q_int(2, di).pow(2));
            out.add_term(wd(&[i, j]), -k.clone());
            out.add_term(wd(&[j, i]), k);
        }
        -3 => {
            let two = q_int(2, di);
            let three2 = q_int(3, di).pow(2);
            let k1 = ci * &lint(&three2 + &LaurentInt::one());
            let inner = &(&two * &q_int(4, di)) + &(&LaurentInt::q_pow(2 * di as i64) + &LaurentInt::q_pow(-2 * di as i64));
            let k2 = ci * &lint(&two * &inner);
            let k3 = &(ci * ci) * &lint(three2);
            out.add_term(wd(&[i, i, j]), -k1.clone());
            out.add_term(wd(&[j, i, i]), -k1);
            out.add_term(wd(&[i, j, i]), k2);
            out.add_term(wd(&[j]), k3);
        }
        _ => return Err(Error::Internal(format!("unexpected Cartan entry {a}"))),
    }
    Ok(out)
}

/// All relation generators, one per ordered pair `i != j`.
pub fn all_relations(datum: &RootDatum, preset: &RelationPreset) -> Vec<(u8, u8, FreeElement)> {
    let n = datum.rank as u8;
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                out.push((i, j, iserre_relation(datum, preset, i, j).expect("valid indices")));
            }
        }
    }
    out
}
