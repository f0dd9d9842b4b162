//! Good Lyndon words, the Lyndon basis and its transition to the good-word
//! basis, the braid operators `τ_i`, PBW root vectors and their comparison
//! with Lyndon brackets.
//!
//! Elements "in good words" are [`FreeElement`]s whose words are all good;
//! a word `g` there stands for the monomial `B_g`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::freealg::{bracket, FreeElement, Nu, PresetMode};
use crate::qarith::{q_factorial, RatFn};
use crate::rootdata::{beta_sequence, Root, ReducedWord};
use crate::straighten::StraightenTable;
use crate::words::{enumerate_lyndon, lr_cmp, LrKey, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodLyndonSet {
    pub by_root: BTreeMap<Root, Word>,
    /// The same words in increasing lex order.
    pub words: Vec<Word>,
}

impl GoodLyndonSet {
    pub fn word_for(&self, beta: &[i64]) -> Option<&Word> {
        self.by_root.get(beta)
    }
}

pub fn good_lyndon_set(table: &StraightenTable) -> Result<GoodLyndonSet> {
    let mut by_root = BTreeMap::new();
    for beta in table.datum().positive_roots() {
        let content: Vec<u32> = beta.iter().map(|&x| x as u32).collect();
        let mut found = Vec::new();
        for l in enumerate_lyndon(&content) {
            if table.is_good(&l)? {
                found.push(l);
            }
        }
        if found.len() != 1 {
            return Err(Error::Internal(format!(
                "root {beta:?} has {} good Lyndon words, expected one",
                found.len()
            )));
        }
        by_root.insert(beta, found.pop().expect("one element"));
    }
    let mut words: Vec<Word> = by_root.values().cloned().collect();
    words.sort();
    Ok(GoodLyndonSet { by_root, words })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    pub label: Word,
    /// Coordinates in the good-word basis.
    pub expansion: FreeElement,
}

/// `B_[g]` in the good-word basis.
pub fn lyndon_basis_element(table: &StraightenTable, g: &Word) -> Result<BasisElement> {
    if !table.is_good(g)? {
        return Err(Error::InvalidInput(format!("{g} is not a good word")));
    }
    let expansion = table.normal_form(&bracket(g, Nu::QInv, table.datum()))?;
    match expansion.leading_term() {
        Some((w, c)) if w == g && c.is_one() => {}
        _ => return Err(Error::Internal(format!("B_[{g}] is not unitriangular: {expansion}"))),
    }
    Ok(BasisElement { label: g.clone(), expansion })
}

/// Converts between Lyndon and good-word coordinates, caching expansions.
pub struct LyndonCoords<'t> {
    table: &'t StraightenTable,
    expansions: HashMap<Word, FreeElement>,
}

impl<'t> LyndonCoords<'t> {
    pub fn new(table: &'t StraightenTable) -> Self {
        LyndonCoords { table, expansions: HashMap::new() }
    }

    pub fn table(&self) -> &'t StraightenTable {
        self.table
    }

    /// `B_[g]` in good words.
    pub fn expansion(&mut self, g: &Word) -> Result<&FreeElement> {
        if !self.expansions.contains_key(g) {
            let e = lyndon_basis_element(self.table, g)?.expansion;
            self.expansions.insert(g.clone(), e);
        }
        Ok(&self.expansions[g])
    }

    /// Rewrites an element given in good words in the Lyndon basis.
    pub fn g_to_l(&mut self, x: &FreeElement) -> Result<FreeElement> {
        let rank = x.rank();
        let mut work: BTreeMap<LrKey, RatFn> = x.iter().map(|(w, c)| (LrKey(w.clone()), c.clone())).collect();
        let mut out = FreeElement::zero(rank);
        while let Some((LrKey(w), c)) = work.pop_last() {
            let e = self.expansion(&w)?.clone();
            for (u, a) in e.iter() {
                if *u == w {
                    continue;
                }
                let key = LrKey(u.clone());
                let s = work.get(&key).cloned().unwrap_or_default() - &(a * &c);
                if s.is_zero() {
                    work.remove(&key);
                } else {
                    work.insert(key, s);
                }
            }
            out.add_term(w, c);
        }
        Ok(out)
    }

    /// Rewrites an element given in the Lyndon basis in good words.
    pub fn l_to_g(&mut self, x: &FreeElement) -> Result<FreeElement> {
        let mut out = FreeElement::zero(x.rank());
        for (w, c) in x.iter() {
            let e = self.expansion(w)?.clone();
            out.add_scaled(&e, c);
        }
        Ok(out)
    }

    /// Smallest set containing `targets` and closed under taking supports
    /// of Lyndon expansions, in ≺-increasing order.
    pub fn downset(&mut self, targets: &[Word]) -> Result<Vec<Word>> {
        let mut seen: BTreeSet<LrKey> = BTreeSet::new();
        let mut stack: Vec<Word> = targets.to_vec();
        while let Some(w) = stack.pop() {
            if !seen.insert(LrKey(w.clone())) {
                continue;
            }
            let e = self.expansion(&w)?.clone();
            for u in e.terms().keys() {
                if !seen.contains(&LrKey(u.clone())) {
                    stack.push(u.clone());
                }
            }
        }
        Ok(seen.into_iter().map(|k| k.0).collect())
    }
}

/// Both directions of the Lyndon to good-word change of basis on a
/// ≺-closed set of good words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transition {
    /// ≺-increasing.
    pub labels: Vec<Word>,
    /// `B_[g] = Σ_w l_in_g[g][w] B_w`.
    pub l_in_g: BTreeMap<Word, FreeElement>,
    /// `B_g = Σ_w g_in_l[g][w] B_[w]`.
    pub g_in_l: BTreeMap<Word, FreeElement>,
}

impl Transition {
    pub fn is_unitriangular(&self) -> bool {
        let check = |m: &BTreeMap<Word, FreeElement>| {
            m.iter().all(|(g, e)| {
                e.coeff(g).is_one() && e.terms().keys().all(|w| w == g || lr_cmp(w, g).is_lt())
            })
        };
        check(&self.l_in_g) && check(&self.g_in_l)
    }

    pub fn is_laurent_integral(&self) -> bool {
        self.l_in_g.values().chain(self.g_in_l.values()).all(|e| e.iter().all(|(_, c)| c.is_laurent_integral()))
    }
}

pub fn transition_l_to_g(table: &StraightenTable, downset: &[Word]) -> Result<Transition> {
    let mut coords = LyndonCoords::new(table);
    let mut labels: Vec<Word> = downset.to_vec();
    labels.sort_by(lr_cmp);
    labels.dedup();
    let members: BTreeSet<&Word> = labels.iter().collect();
    let mut l_in_g = BTreeMap::new();
    let mut g_in_l = BTreeMap::new();
    for g in &labels {
        let e = coords.expansion(g)?.clone();
        if let Some(w) = e.terms().keys().find(|w| !members.contains(w)) {
            return Err(Error::Contract(format!("downset is not closed: B_[{g}] involves {w}")));
        }
        l_in_g.insert(g.clone(), e);
        let inv = coords.g_to_l(&FreeElement::word(table.rank(), g.clone()))?;
        g_in_l.insert(g.clone(), inv);
    }
    Ok(Transition { labels, l_in_g, g_in_l })
}

fn require_pbw(table: &StraightenTable) -> Result<()> {
    if table.preset().mode != PresetMode::Pbw {
        return Err(Error::UnsupportedPreset { required: "pbw" });
    }
    Ok(())
}

/// `B_i^{(s)} = B_i^s / [s]_i!` as a free-algebra element.
fn divided_power(rank: usize, i: u8, s: u32, d: u32) -> FreeElement {
    let w = Word::new(vec![i; s as usize]);
    FreeElement::monomial(rank, w, RatFn::from(q_factorial(s, d)).inv())
}

/// The image `τ_i(B_j)` as a free-algebra element, 1-based letters.
pub fn tau_generator(table: &StraightenTable, i: u8, j: u8) -> Result<FreeElement> {
    let datum = table.datum();
    let n = datum.rank;
    if i == 0 || j == 0 || i as usize > n || j as usize > n {
        return Err(Error::InvalidInput(format!("indices ({i}, {j}) out of range for rank {n}")));
    }
    let a = datum.cartan[i as usize - 1][j as usize - 1];
    let d = datum.d[i as usize - 1];
    let qi = |e: i64| RatFn::q_pow(e * d as i64);
    let bi = FreeElement::letter(n, i);
    let bj = FreeElement::letter(n, j);
    let comm = |k: i64| &(&bi * &bj) - &(&bj * &bi).scale(&qi(k));
    Ok(match a {
        0 | 2 => bj,
        -1 => comm(1),
        -2 | -3 => {
            let m = (-a) as u32;
            let mut out = FreeElement::zero(n);
            for s in 0..=m {
                let term = &(&divided_power(n, i, m - s, d) * &bj) * &divided_power(n, i, s, d);
                let sign = if s % 2 == 0 { RatFn::one() } else { -RatFn::one() };
                out.add_scaled(&term, &(&sign * &qi(s as i64)));
            }
            if a == -2 {
                &out + &bj
            } else {
                let denom = &qi(1) * &RatFn::from(q_factorial(3, d));
                let extra = comm(3).scale(&denom.inv());
                &(&out + &extra) + &comm(1)
            }
        }
        _ => return Err(Error::Internal(format!("unexpected Cartan entry {a}"))),
    })
}

/// Applies `τ_i` to an element in good words and returns its normal form.
pub fn tau_apply(table: &StraightenTable, i: u8, x: &FreeElement) -> Result<FreeElement> {
    require_pbw(table)?;
    let n = table.rank();
    let images: Vec<FreeElement> = (1..=n as u8).map(|j| tau_generator(table, i, j)).collect::<Result<_>>()?;
    substitute(table, x, &images)
}

/// Substitutes `images[j-1]` for every letter `j` and normalizes, one
/// factor at a time so that intermediate lengths stay small.
pub fn substitute(table: &StraightenTable, x: &FreeElement, images: &[FreeElement]) -> Result<FreeElement> {
    let n = table.rank();
    let mut out = FreeElement::zero(n);
    for (w, c) in x.iter() {
        let mut acc = FreeElement::scalar(n, c.clone());
        for &l in w.letters() {
            acc = table.normal_form(&(&acc * &images[l as usize - 1]))?;
        }
        out.add_scaled(&acc, &RatFn::one());
    }
    table.normal_form(&out)
}

/// `B_{β_j} = τ_{i_1} ... τ_{i_{j-1}}(B_{i_j})`, 1-based `j`.
pub fn pbw_vector(table: &StraightenTable, rw: &ReducedWord, j: usize) -> Result<BasisElement> {
    require_pbw(table)?;
    let betas = beta_sequence(table.datum(), rw)?;
    if j == 0 || j > betas.len() {
        return Err(Error::InvalidInput(format!("index {j} out of range 1..={}", betas.len())));
    }
    let n = table.rank();
    let mut x = FreeElement::letter(n, rw.0[j - 1] as u8);
    for k in (0..j - 1).rev() {
        x = tau_apply(table, rw.0[k] as u8, &x)?;
    }
    let label = x.leading_term().map(|(w, _)| w.clone()).unwrap_or_default();
    Ok(BasisElement { label, expansion: x })
}

/// The reduced word of `w0` whose root sequence lists the positive roots in
/// the lex order of their good Lyndon words.
pub fn lyndon_reduced_word(table: &StraightenTable) -> Result<ReducedWord> {
    let datum = table.datum();
    let gl = good_lyndon_set(table)?;
    let mut roots: Vec<(&Word, &Root)> = gl.by_root.iter().map(|(b, l)| (l, b)).collect();
    roots.sort();
    let mut word: Vec<usize> = Vec::new();
    for (_, beta) in roots {
        // s_{i_{k-1}} ... s_{i_1}(β_k) must be simple
        let mut v = beta.clone();
        for &i in &word {
            v = datum.reflect(i - 1, &v);
        }
        let simple = (0..datum.rank).find(|&i| v == datum.simple_root(i));
        match simple {
            Some(i) => word.push(i + 1),
            None => return Err(Error::Internal(format!("Lyndon order is not convex at {beta:?}"))),
        }
    }
    let rw = ReducedWord(word);
    beta_sequence(datum, &rw)?;
    Ok(rw)
}

/// Comparison of `B_β` with the Lyndon bracket of the same root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KappaReport {
    pub beta: Root,
    pub lyndon: Word,
    pub kappa: RatFn,
    /// `B_β - κ B_[l(β)]` in good words.
    pub remainder: FreeElement,
    pub remainder_max_len: usize,
}

pub fn kappa_check(table: &StraightenTable, rw: &ReducedWord, beta: &[i64]) -> Result<KappaReport> {
    require_pbw(table)?;
    let betas = beta_sequence(table.datum(), rw)?;
    let j = betas
        .iter()
        .position(|b| b.as_slice() == beta)
        .ok_or_else(|| Error::InvalidInput(format!("{beta:?} is not a positive root")))?;
    let b = pbw_vector(table, rw, j + 1)?.expansion;
    let gl = good_lyndon_set(table)?;
    let l = gl.word_for(beta).expect("every positive root has a good Lyndon word").clone();
    let lb = lyndon_basis_element(table, &l)?.expansion;
    let top_b = b.top_part();
    let top_l = lb.top_part();
    let kappa = &top_b.coeff(&l) / &top_l.coeff(&l);
    if kappa.is_zero() || top_b != top_l.scale(&kappa) {
        return Err(Error::Internal(format!(
            "top parts of B_beta and B_[{l}] are not proportional for root {beta:?}"
        )));
    }
    let remainder = &b - &lb.scale(&kappa);
    let remainder_max_len = remainder.max_len().unwrap_or(0);
    Ok(KappaReport { beta: beta.to_vec(), lyndon: l, kappa, remainder, remainder_max_len })
}

/// Rank of a family of elements over `Q(q)`.
pub fn rank_of(elements: &[FreeElement]) -> usize {
    let mut pivots: BTreeMap<Word, FreeElement> = BTreeMap::new();
    for e in elements {
        let mut row = e.clone();
        let hits: Vec<Word> = row.terms().keys().filter(|w| pivots.contains_key(*w)).cloned().collect();
        for w in hits {
            let c = row.coeff(&w);
            row = &row - &pivots[&w].scale(&c);
        }
        let lead = row.iter().next().map(|(w, c)| (w.clone(), c.clone()));
        if let Some((w, c)) = lead {
            let row = row.scale(&c.inv());
            for other in pivots.values_mut() {
                let b = other.coeff(&w);
                if !b.is_zero() {
                    *other = &*other - &row.scale(&b);
                }
            }
            pivots.insert(w, row);
        }
    }
    pivots.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::RelationPreset;
    use crate::rootdata::{longest_reduced_word, ReducedWordPreset, RootDatum};
    use crate::straighten::build_table;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }
    fn r(s: &str) -> RatFn {
        s.parse().unwrap()
    }
    fn table(t: &str, pbw: bool, len: usize) -> StraightenTable {
        let d: RootDatum = t.parse().unwrap();
        let p = if pbw { RelationPreset::pbw(&d) } else { RelationPreset::canonical(&d) };
        build_table(&d, &p, len).unwrap()
    }

    #[test]
    fn good_lyndon_examples() {
        let words = |t: &str| good_lyndon_set(&table(t, false, 6)).unwrap().words;
        assert_eq!(words("A2"), vec![w("1"), w("1.2"), w("2")]);
        assert_eq!(words("B2"), vec![w("1"), w("1.2"), w("1.2.2"), w("2")]);
        assert_eq!(
            words("G2"),
            vec![w("1"), w("1.1.1.2"), w("1.1.2"), w("1.1.2.1.2"), w("1.2"), w("2")]
        );
    }

    #[test]
    fn lyndon_elements() {
        let t = table("A2", false, 4);
        let e = lyndon_basis_element(&t, &w("1.2")).unwrap();
        assert_eq!(e.expansion.coeff(&w("2.1")), r("-q"));
        assert_eq!(e.expansion.len(), 2);
        assert!(lyndon_basis_element(&t, &w("1.1.2")).is_err());
    }

    #[test]
    fn a2_transition() {
        let t = table("A2", false, 4);
        let tr = transition_l_to_g(&t, &[w("2.1"), w("1.2"), w("1"), w("2")]).unwrap();
        assert_eq!(tr.labels, vec![w("2"), w("1"), w("2.1"), w("1.2")]);
        assert_eq!(tr.g_in_l[&w("1.2")].coeff(&w("2.1")), r("q"));
        assert!(tr.is_unitriangular());
        assert!(tr.is_laurent_integral());
        assert!(transition_l_to_g(&t, &[w("1.2")]).is_err());
    }

    #[test]
    fn a2_tau() {
        let t = table("A2", true, 4);
        let b2 = FreeElement::letter(2, 2);
        let x = tau_apply(&t, 1, &b2).unwrap();
        assert_eq!(x, t.normal_form(&bracket(&w("1.2"), Nu::QInv, t.datum())).unwrap());
        let y = tau_apply(&t, 1, &tau_apply(&t, 2, &FreeElement::letter(2, 1)).unwrap()).unwrap();
        assert_eq!(y, b2);
        let a3 = table("A3", true, 4);
        assert_eq!(tau_apply(&a3, 1, &FreeElement::letter(3, 3)).unwrap(), FreeElement::letter(3, 3));
        assert!(tau_apply(&table("A2", false, 3), 1, &b2).is_err());
    }

    #[test]
    fn a2_pbw_vectors() {
        let t = table("A2", true, 4);
        let rw = longest_reduced_word(t.datum(), &ReducedWordPreset::TypeAChain).unwrap();
        let b = pbw_vector(&t, &rw, 2).unwrap();
        assert_eq!(b.expansion, lyndon_basis_element(&t, &w("1.2")).unwrap().expansion);
        assert_eq!(pbw_vector(&t, &rw, 3).unwrap().expansion, FreeElement::letter(2, 2));
        let k = kappa_check(&t, &rw, &[1, 1]).unwrap();
        assert!(k.kappa.is_one());
        assert!(k.remainder.is_zero());
    }

    #[test]
    fn ranks() {
        let a = FreeElement::word(2, w("1"));
        let b = FreeElement::word(2, w("2"));
        assert_eq!(rank_of(&[a.clone(), b.clone(), &a + &b]), 2);
        assert_eq!(rank_of(&[]), 0);
    }
}
