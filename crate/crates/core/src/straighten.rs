//! Normal forms in the good-word basis.
//!
//! The table is filled lazily, one content at a time, smallest contents
//! first. For a content `c` of height `m` the candidate words are those whose
//! two length `m - 1` factors are already irreducible. Every element
//! `u R v` whose top part has content `c` is reduced through the rules known
//! so far and fed into an incremental row echelon form over `Q(q)`, pivoting
//! on the lex-smallest remaining word (the ≺-largest one). Each pivot `p`
//! becomes a rule `p -> tail` with `tail` already in normal form. The build
//! of `c` is accepted only when the number of candidates left irreducible
//! equals the Kostant count of `c`.
//!
//! Every proper factor of a rule's leading word is irreducible, so a word
//! with irreducible prefix has at most one suffix that is a leading word.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::path::Path;
use std::sync::{Arc, Mutex, MutexGuard};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::freealg::{all_relations, FreeElement, PresetMode, RelationPreset};
use crate::qarith::RatFn;
use crate::rootdata::RootDatum;
use crate::words::{parse_word, LrKey, Word};

pub use crate::rootdata::kostant_count;

/// Version tag of the cache format.
pub const CACHE_VERSION: u32 = 1;

type Terms = Arc<Vec<(Word, RatFn)>>;
type Content = Vec<u32>;

#[derive(Default)]
struct Inner {
    built: BTreeSet<Content>,
    rules: HashMap<Word, Terms>,
    good: HashMap<Content, Vec<Word>>,
    good_set: HashSet<Word>,
    memo: HashMap<Content, HashMap<Word, Terms>>,
}

pub struct StraightenTable {
    datum: RootDatum,
    preset: RelationPreset,
    max_len: usize,
    verify_rows: bool,
    relations: Vec<(Content, FreeElement)>,
    inner: Mutex<Inner>,
}

impl std::fmt::Debug for StraightenTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "StraightenTable({}, {}, max_len {})", self.datum, self.preset.mode.name(), self.max_len)
    }
}

/// Creates a table. Strata are computed on demand; call
/// [`StraightenTable::build_all`] to fill every content up to a height.
pub fn build_table(datum: &RootDatum, preset: &RelationPreset, max_len: usize) -> Result<StraightenTable> {
    StraightenTable::new(datum.clone(), preset.clone(), max_len)
}

/// All contents of the given height.
pub fn contents_of_height(rank: usize, h: u32) -> Vec<Content> {
    fn rec(rank: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Content>) {
        if cur.len() + 1 == rank {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for k in (0..=left).rev() {
            cur.push(k);
            rec(rank, left - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(rank, h, &mut Vec::new(), &mut out);
    out
}

fn sub_contents(c: &[u32]) -> Vec<Content> {
    let mut out: Vec<Content> = vec![Vec::new()];
    for &ci in c {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=ci).map(move |k| {
                    let mut v = v.clone();
                    v.push(k);
                    v
                })
            })
            .collect();
    }
    out.retain(|v| v.iter().any(|&x| x > 0));
    out.sort_by_key(|v| (v.iter().sum::<u32>(), v.clone()));
    out
}

fn le(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn height(c: &[u32]) -> usize {
    c.iter().sum::<u32>() as usize
}

impl StraightenTable {
    pub fn new(datum: RootDatum, preset: RelationPreset, max_len: usize) -> Result<Self> {
        if max_len < 1 {
            return Err(Error::InvalidInput("max_len must be at least 1".into()));
        }
        if preset.c.len() != datum.rank {
            return Err(Error::InvalidInput("preset rank differs from the root datum".into()));
        }
        let relations = all_relations(&datum, &preset)
            .into_iter()
            .map(|(_, _, r)| {
                let top = r.top_part().homogeneous_content().expect("relation tops are homogeneous");
                (top, r)
            })
            .collect();
        Ok(StraightenTable {
            datum,
            preset,
            max_len,
            verify_rows: false,
            relations,
            inner: Mutex::new(Inner::default()),
        })
    }

    /// Reduce every spanning element of each stratum instead of stopping
    /// once the rank reaches its certified value. Slower; every element
    /// must then reduce to zero.
    pub fn with_full_verification(mut self, on: bool) -> Self {
        self.verify_rows = on;
        self
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn preset(&self) -> &RelationPreset {
        &self.preset
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn rank(&self) -> usize {
        self.datum.rank
    }

    fn lock(&self) -> MutexGuard<'_, Inner> {
        self.inner.lock().unwrap_or_else(|e| e.into_inner())
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len > self.max_len {
            return Err(Error::BoundExceeded { required: len, max_len: self.max_len });
        }
        Ok(())
    }

    fn check_word(&self, w: &Word) -> Result<()> {
        if w.letters().iter().any(|&l| l == 0 || l as usize > self.rank()) {
            return Err(Error::InvalidInput(format!("word {w} has letters outside 1..={}", self.rank())));
        }
        self.check_len(w.len())
    }

    /// Computes every stratum of height at most `h`.
    pub fn build_all(&self, h: usize) -> Result<()> {
        self.check_len(h)?;
        let mut inner = self.lock();
        for c in contents_of_height(self.rank(), h as u32) {
            self.ensure(&mut inner, &c)?;
        }
        Ok(())
    }

    /// The B_G expansion of `x`.
    pub fn normal_form(&self, x: &FreeElement) -> Result<FreeElement> {
        if x.rank() != self.rank() {
            return Err(Error::Contract("rank mismatch".into()));
        }
        for w in x.terms().keys() {
            self.check_word(w)?;
        }
        let mut inner = self.lock();
        let mut out = FreeElement::zero(self.rank());
        for (w, c) in x.iter() {
            self.ensure(&mut inner, &w.content(self.rank()))?;
            let nf = self.nf_word(&mut inner, w)?;
            for (g, a) in nf.iter() {
                out.add_term(g.clone(), a * c);
            }
        }
        Ok(out)
    }

    pub fn normal_form_word(&self, w: &Word) -> Result<FreeElement> {
        self.normal_form(&FreeElement::word(self.rank(), w.clone()))
    }

    pub fn is_good(&self, w: &Word) -> Result<bool> {
        self.check_word(w)?;
        let mut inner = self.lock();
        self.ensure(&mut inner, &w.content(self.rank()))?;
        Ok(Self::good_inner(&inner, w))
    }

    /// Good words of a content, increasing lex.
    pub fn good_words(&self, content: &[u32]) -> Result<Vec<Word>> {
        if content.len() != self.rank() {
            return Err(Error::InvalidInput("content length differs from the rank".into()));
        }
        let h = height(content);
        self.check_len(h)?;
        if h == 0 {
            return Ok(vec![Word::empty()]);
        }
        let mut inner = self.lock();
        self.ensure(&mut inner, content)?;
        Ok(inner.good[content].clone())
    }

    /// Good words of a fixed length, increasing lex.
    pub fn good_words_of_len(&self, len: usize) -> Result<Vec<Word>> {
        let mut out = Vec::new();
        for c in contents_of_height(self.rank(), len as u32) {
            out.extend(self.good_words(&c)?);
        }
        out.sort();
        Ok(out)
    }

    /// Rules whose leading word has the given content, by leading word.
    pub fn rules_for(&self, content: &[u32]) -> Result<Vec<(Word, FreeElement)>> {
        self.check_len(height(content))?;
        let mut inner = self.lock();
        self.ensure(&mut inner, content)?;
        let mut v: Vec<(Word, FreeElement)> = inner
            .rules
            .iter()
            .filter(|(w, _)| w.content(self.rank()) == content)
            .map(|(w, t)| (w.clone(), FreeElement::from_terms(self.rank(), t.iter().cloned())))
            .collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(v)
    }

    /// Number of strata and rules computed so far.
    pub fn stats(&self) -> (usize, usize) {
        let inner = self.lock();
        (inner.built.len(), inner.rules.len())
    }

    fn good_inner(inner: &Inner, w: &Word) -> bool {
        w.len() <= 1 || inner.good_set.contains(w)
    }

    fn ensure(&self, inner: &mut Inner, c: &[u32]) -> Result<()> {
        if height(c) == 0 || inner.built.contains(c) {
            return Ok(());
        }
        self.check_len(height(c))?;
        for s in sub_contents(c) {
            if !inner.built.contains(&s) {
                self.build_stratum(inner, &s)?;
            }
        }
        Ok(())
    }

    fn candidates(&self, inner: &Inner, c: &[u32]) -> Vec<Word> {
        let m = height(c);
        if m == 1 {
            let i = c.iter().position(|&x| x == 1).expect("height one");
            return vec![Word::letter(i as u8 + 1)];
        }
        let mut out = Vec::new();
        for a in 0..c.len() {
            if c[a] == 0 {
                continue;
            }
            let mut pc = c.to_vec();
            pc[a] -= 1;
            for g in &inner.good[&pc] {
                let mut v = g.letters().to_vec();
                v.push(a as u8 + 1);
                let w = Word::new(v);
                if Self::good_inner(inner, &w.slice(1..m)) {
                    out.push(w);
                }
            }
        }
        out.sort();
        out
    }

    fn build_stratum(&self, inner: &mut Inner, c: &[u32]) -> Result<()> {
        let m = height(c);
        let cands = self.candidates(inner, c);
        let target = kostant_count(&self.datum, c) as usize;
        if cands.len() < target {
            return Err(Error::Internal(format!(
                "content {c:?}: {} candidate words, fewer than the Kostant count {target}",
                cands.len()
            )));
        }
        let needed = cands.len() - target;
        let cand_set: HashSet<&Word> = cands.iter().collect();
        let mut pivots: BTreeMap<Word, BTreeMap<Word, RatFn>> = BTreeMap::new();
        if needed > 0 || self.verify_rows {
            for (top, rel) in &self.relations {
                if !le(top, c) {
                    continue;
                }
                let rest: Vec<u32> = c.iter().zip(top).map(|(a, b)| a - b).collect();
                let fillers = if height(&rest) == 0 { vec![Word::empty()] } else { crate::words::enumerate_words(&rest) };
                for x in &fillers {
                    for p in 0..=x.len() {
                        if !self.verify_rows && pivots.len() == needed {
                            break;
                        }
                        let (u, v) = (x.slice(0..p), x.slice(p..x.len()));
                        let mut row: BTreeMap<Word, RatFn> = BTreeMap::new();
                        for (w, a) in rel.iter() {
                            let full = u.concat(w).concat(&v);
                            let nf = self.nf_word(inner, &full)?;
                            for (g, b) in nf.iter() {
                                add_into(&mut row, g.clone(), &(a * b));
                            }
                        }
                        self.insert_row(&mut pivots, row, m, c)?;
                        if pivots.len() > needed {
                            return Err(Error::Internal(format!(
                                "content {c:?}: rank exceeds the certified value {needed}"
                            )));
                        }
                    }
                }
            }
        }
        if pivots.len() != needed {
            return Err(Error::Internal(format!(
                "content {c:?}: {} rules found, expected {needed} from the Kostant count",
                pivots.len()
            )));
        }
        for (p, row) in pivots {
            debug_assert!(cand_set.contains(&p));
            let tail: Vec<(Word, RatFn)> = row.into_iter().filter(|(w, _)| *w != p).map(|(w, a)| (w, -a)).collect();
            inner.rules.insert(p, Arc::new(tail));
        }
        let good: Vec<Word> = cands.into_iter().filter(|w| !inner.rules.contains_key(w)).collect();
        inner.good_set.extend(good.iter().cloned());
        inner.good.insert(c.to_vec(), good);
        inner.built.insert(c.to_vec());
        inner.memo.remove(c);
        Ok(())
    }

    /// Adds a reduced row to the echelon form kept in fully reduced shape.
    fn insert_row(
        &self,
        pivots: &mut BTreeMap<Word, BTreeMap<Word, RatFn>>,
        mut row: BTreeMap<Word, RatFn>,
        m: usize,
        c: &[u32],
    ) -> Result<()> {
        let present: Vec<(Word, RatFn)> =
            row.iter().filter(|(w, _)| pivots.contains_key(*w)).map(|(w, a)| (w.clone(), a.clone())).collect();
        for (p, a) in present {
            for (w, b) in &pivots[&p] {
                add_into(&mut row, w.clone(), &-(&a * b));
            }
        }
        let lead = row.iter().find(|(w, _)| w.len() == m).map(|(w, a)| (w.clone(), a.clone()));
        let Some((p, a)) = lead else {
            if row.is_empty() {
                return Ok(());
            }
            return Err(Error::Internal(format!(
                "content {c:?}: a relation reduces to a nonzero combination of shorter good words"
            )));
        };
        if !a.is_one() {
            let inv = a.inv();
            for v in row.values_mut() {
                *v = &*v * &inv;
            }
        }
        for other in pivots.values_mut() {
            if let Some(b) = other.get(&p).cloned() {
                for (w, x) in &row {
                    add_into(other, w.clone(), &-(&b * x));
                }
            }
        }
        pivots.insert(p, row);
        Ok(())
    }

    /// Normal form of one word; its content and all smaller ones are built.
    fn nf_word(&self, inner: &mut Inner, w: &Word) -> Result<Terms> {
        let rank = self.rank();
        if w.len() <= 1 {
            return Ok(Arc::new(vec![(w.clone(), RatFn::one())]));
        }
        if let Some(t) = inner.memo.get(&w.content(rank)).and_then(|m| m.get(w)) {
            return Ok(t.clone());
        }
        let mut work: BTreeMap<LrKey, RatFn> = BTreeMap::new();
        let mut out: BTreeMap<Word, RatFn> = BTreeMap::new();
        work.insert(LrKey(w.clone()), RatFn::one());
        while let Some((LrKey(x), a)) = work.pop_last() {
            if x.len() <= 1 {
                add_into(&mut out, x, &a);
                continue;
            }
            let cached = inner.memo.get(&x.content(rank)).and_then(|m| m.get(&x)).cloned();
            if let Some(t) = cached {
                for (g, b) in t.iter() {
                    add_into(&mut out, g.clone(), &(&a * b));
                }
                continue;
            }
            let n = x.len();
            let prefix = x.slice(0..n - 1);
            if !Self::good_inner(inner, &prefix) {
                let last = x.letters()[n - 1];
                let pn = self.nf_word(inner, &prefix)?;
                for (g, b) in pn.iter() {
                    let mut v = g.letters().to_vec();
                    v.push(last);
                    add_work(&mut work, Word::new(v), &(&a * b));
                }
                continue;
            }
            let hit = (0..n - 1).find_map(|k| {
                let s = x.slice(k..n);
                inner.rules.get(&s).map(|t| (k, t.clone()))
            });
            match hit {
                None => add_into(&mut out, x, &a),
                Some((k, tail)) => {
                    let u = x.slice(0..k);
                    for (t, b) in tail.iter() {
                        add_work(&mut work, u.concat(t), &(&a * b));
                    }
                }
            }
        }
        let res: Terms = Arc::new(out.into_iter().collect());
        inner.memo.entry(w.content(rank)).or_default().insert(w.clone(), res.clone());
        Ok(res)
    }

    pub fn to_cache(&self) -> CacheFile {
        let inner = self.lock();
        let mut rules: Vec<CacheRule> = inner
            .rules
            .iter()
            .map(|(lead, tail)| CacheRule {
                lead: lead.to_string(),
                tail: tail.iter().map(|(w, a)| (w.to_string(), a.to_string())).collect(),
            })
            .collect();
        rules.sort_by(|a, b| a.lead.cmp(&b.lead));
        CacheFile {
            version: CACHE_VERSION,
            kind: format!("{:?}", self.datum.kind),
            rank: self.rank(),
            preset: self.preset.mode.name().to_string(),
            c: self.preset.c.iter().map(|x| x.to_string()).collect(),
            max_len: self.max_len,
            strata: inner.built.iter().cloned().collect(),
            rules,
        }
    }

    /// Restores strata from a cache file written for the same datum, preset
    /// and bound.
    pub fn load_cache(&self, cache: &CacheFile) -> Result<()> {
        let mine = (CACHE_VERSION, format!("{:?}", self.datum.kind), self.rank(), self.preset.mode.name(), self.max_len);
        let theirs = (cache.version, cache.kind.clone(), cache.rank, cache.preset.as_str(), cache.max_len);
        let c: Vec<String> = self.preset.c.iter().map(|x| x.to_string()).collect();
        if mine != theirs || c != cache.c {
            return Err(Error::InvalidInput("cache file was written for a different table".into()));
        }
        let mut rules = HashMap::new();
        for r in &cache.rules {
            let lead = parse_word(&r.lead, self.rank())?;
            let mut tail = Vec::with_capacity(r.tail.len());
            for (w, a) in &r.tail {
                let a: RatFn = a.parse().map_err(|e| Error::InvalidInput(format!("{e}")))?;
                tail.push((parse_word(w, self.rank())?, a));
            }
            rules.insert(lead, Arc::new(tail));
        }
        let mut strata = cache.strata.clone();
        strata.sort_by_key(|v| (height(v), v.clone()));
        let mut inner = Inner { rules, ..Inner::default() };
        for s in &strata {
            if s.len() != self.rank() || height(s) == 0 || height(s) > self.max_len {
                return Err(Error::InvalidInput(format!("bad stratum {s:?} in cache")));
            }
            if sub_contents(s).iter().any(|x| x != s && !inner.built.contains(x)) {
                return Err(Error::InvalidInput(format!("cache stratum {s:?} lacks its substrata")));
            }
            let good: Vec<Word> =
                self.candidates(&inner, s).into_iter().filter(|w| !inner.rules.contains_key(w)).collect();
            if good.len() as u64 != kostant_count(&self.datum, s) {
                return Err(Error::InvalidInput(format!("cache stratum {s:?} fails the Kostant count")));
            }
            inner.good_set.extend(good.iter().cloned());
            inner.good.insert(s.clone(), good);
            inner.built.insert(s.clone());
        }
        *self.lock() = inner;
        Ok(())
    }

    pub fn save_cache_file(&self, path: &Path) -> Result<()> {
        let text = serde_json::to_string(&self.to_cache()).map_err(|e| Error::Internal(e.to_string()))?;
        if let Some(dir) = path.parent() {
            std::fs::create_dir_all(dir).map_err(|e| Error::InvalidInput(format!("{}: {e}", dir.display())))?;
        }
        std::fs::write(path, text).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
    }

    pub fn load_cache_file(&self, path: &Path) -> Result<()> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
        let cache: CacheFile =
            serde_json::from_str(&text).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
        self.load_cache(&cache)
    }

    /// Cache file name for this table's key.
    pub fn cache_file_name(&self) -> Option<String> {
        if self.preset.mode == PresetMode::Custom {
            return None;
        }
        Some(format!(
            "{}-{}-len{}-v{}.json",
            self.datum,
            self.preset.mode.name(),
            self.max_len,
            CACHE_VERSION
        ))
    }
}

fn add_into(map: &mut BTreeMap<Word, RatFn>, w: Word, a: &RatFn) {
    if a.is_zero() {
        return;
    }
    match map.entry(w) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(a.clone());
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = &*e.get() + a;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

fn add_work(map: &mut BTreeMap<LrKey, RatFn>, w: Word, a: &RatFn) {
    if a.is_zero() {
        return;
    }
    match map.entry(LrKey(w)) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(a.clone());
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = &*e.get() + a;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheFile {
    pub version: u32,
    pub kind: String,
    pub rank: usize,
    pub preset: String,
    pub c: Vec<String>,
    pub max_len: usize,
    pub strata: Vec<Vec<u32>>,
    pub rules: Vec<CacheRule>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheRule {
    pub lead: String,
    pub tail: Vec<(String, String)>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::q_int;

    fn dt(s: &str) -> RootDatum {
        s.parse().unwrap()
    }
    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }
    fn el(rank: usize, t: &[(&str, RatFn)]) -> FreeElement {
        FreeElement::from_terms(rank, t.iter().map(|(a, b)| (w(a), b.clone())))
    }
    fn r(s: &str) -> RatFn {
        s.parse().unwrap()
    }
    fn canonical(t: &str, len: usize) -> StraightenTable {
        let d = dt(t);
        let p = RelationPreset::canonical(&d);
        build_table(&d, &p, len).unwrap()
    }

    #[test]
    fn a2_rules() {
        let t = canonical("A2", 3);
        let two = RatFn::from(q_int(2, 1));
        assert_eq!(
            t.normal_form_word(&w("1.1.2")).unwrap(),
            el(2, &[("1.2.1", two.clone()), ("2.1.1", r("-1")), ("2", r("1"))])
        );
        assert_eq!(
            t.normal_form_word(&w("1.2.2")).unwrap(),
            el(2, &[("2.1.2", two), ("2.2.1", r("-1")), ("1", r("1"))])
        );
        assert!(t.is_good(&w("1.2.1")).unwrap());
        assert!(!t.is_good(&w("1.1.2")).unwrap());
        assert!(t.is_good(&w("2")).unwrap());
        let rules = t.rules_for(&[2, 1]).unwrap();
        assert_eq!(rules.len(), 1);
        assert_eq!(rules[0].0, w("1.1.2"));
    }

    #[test]
    fn graded_rules_are_homogeneous() {
        let d = dt("A2");
        let t = build_table(&d, &RelationPreset::graded(&d), 4).unwrap();
        t.build_all(4).unwrap();
        let nf = t.normal_form_word(&w("1.1.2")).unwrap();
        assert!(nf.iter().all(|(g, _)| g.len() == 3));
    }

    #[test]
    fn bound_and_input_errors() {
        let t = canonical("A2", 3);
        assert!(matches!(
            t.normal_form_word(&w("1.1.2.2")),
            Err(Error::BoundExceeded { required: 4, max_len: 3 })
        ));
        assert!(matches!(t.is_good(&w("3")), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn kostant_certificate_holds_per_content() {
        let t = canonical("B2", 5);
        for h in 1..=5 {
            for c in contents_of_height(2, h) {
                let good = t.good_words(&c).unwrap();
                assert_eq!(good.len() as u64, kostant_count(t.datum(), &c), "{c:?}");
            }
        }
    }

    #[test]
    fn full_verification_agrees() {
        let d = dt("B2");
        let p = RelationPreset::canonical(&d);
        let fast = build_table(&d, &p, 5).unwrap();
        let slow = build_table(&d, &p, 5).unwrap().with_full_verification(true);
        fast.build_all(5).unwrap();
        slow.build_all(5).unwrap();
        assert_eq!(fast.to_cache(), slow.to_cache());
    }

    #[test]
    fn cache_round_trip() {
        let t = canonical("A2", 5);
        t.build_all(4).unwrap();
        let cache = t.to_cache();
        let u = canonical("A2", 5);
        u.load_cache(&cache).unwrap();
        assert_eq!(u.to_cache(), cache);
        let x = w("1.1.2.2");
        assert_eq!(u.normal_form_word(&x).unwrap(), t.normal_form_word(&x).unwrap());
        let other = canonical("A2", 6);
        assert!(other.load_cache(&cache).is_err());
    }

    #[test]
    fn content_helpers() {
        assert_eq!(contents_of_height(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(sub_contents(&[1, 1]), vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
    }
}
