//! Words over the letters `1..n`, the two word orders, Lyndon words and
//! their factorizations.
//!
//! The derived `Ord` on [`Word`] is the lexicographic order in which a
//! proper prefix is smaller. The length-first order that reverses lex
//! among equal lengths is [`lr_cmp`].

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A finite sequence of letters. Letters are 1-based; the rank is supplied
/// by the caller wherever it matters.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(letters: Vec<u8>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(i: u8) -> Self {
        Word(vec![i])
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Letter multiplicities, i.e. the degree in `N^rank`.
    pub fn content(&self, rank: usize) -> Vec<u32> {
        let mut c = vec![0u32; rank];
        for &l in &self.0 {
            c[l as usize - 1] += 1;
        }
        c
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word(self.0[range].to_vec())
    }

    /// Lyndon test on a nonempty word by direct suffix comparison.
    pub(crate) fn is_lyndon_nonempty(&self) -> bool {
        let w = &self.0;
        (1..w.len()).all(|j| w[..] < w[j..])
    }

    pub fn max_letter(&self) -> u8 {
        self.0.iter().copied().max().unwrap_or(0)
    }
}

impl From<Vec<u8>> for Word {
    fn from(v: Vec<u8>) -> Self {
        Word(v)
    }
}

impl From<&[u8]> for Word {
    fn from(v: &[u8]) -> Self {
        Word(v.to_vec())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(".")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;
    /// Parses the dotted format without a rank check.
    fn from_str(s: &str) -> Result<Word> {
        if s.is_empty() {
            return Ok(Word::empty());
        }
        s.split('.')
            .map(|t| {
                t.parse::<u8>()
                    .ok()
                    .filter(|&l| l >= 1)
                    .ok_or_else(|| Error::InvalidInput(format!("bad letter {t:?} in word {s:?}")))
            })
            .collect::<Result<Vec<u8>>>()
            .map(Word)
    }
}

/// Parses a dotted word and checks every letter lies in `1..=rank`.
pub fn parse_word(s: &str, rank: usize) -> Result<Word> {
    let w: Word = s.trim().parse()?;
    if let Some(&bad) = w.0.iter().find(|&&l| l as usize > rank) {
        return Err(Error::InvalidInput(format!("letter {bad} out of range 1..={rank} in {s:?}")));
    }
    Ok(w)
}

/// Lexicographic order; a proper prefix is smaller.
pub fn lex_cmp(x: &Word, y: &Word) -> Ordering {
    x.cmp(y)
}

/// The order ≺: shorter words first, equal lengths in reverse lex order.
pub fn lr_cmp(x: &Word, y: &Word) -> Ordering {
    x.len().cmp(&y.len()).then_with(|| y.cmp(x))
}

/// Wrapper whose `Ord` is [`lr_cmp`], for ordered collections.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LrKey(pub Word);

impl Ord for LrKey {
    fn cmp(&self, other: &Self) -> Ordering {
        lr_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for LrKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn is_lyndon(w: &Word) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::Contract("is_lyndon of the empty word".into()));
    }
    Ok(w.is_lyndon_nonempty())
}

/// Nonincreasing factorization into Lyndon words (Duval's algorithm).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CflFactorization {
    pub factors: Vec<Word>,
}

pub fn cfl_factorize(w: &Word) -> CflFactorization {
    let s = w.letters();
    let mut factors = Vec::new();
    let mut i = 0;
    while i < s.len() {
        let (mut j, mut k) = (i + 1, i);
        while j < s.len() && s[k] <= s[j] {
            if s[k] < s[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        while i <= k {
            factors.push(Word::from(&s[i..i + j - k]));
            i += j - k;
        }
    }
    CflFactorization { factors }
}

/// Splits a Lyndon word of length > 1 after its longest proper Lyndon prefix.
pub fn costandard_factorization(l: &Word) -> Result<(Word, Word)> {
    if l.len() < 2 || !l.is_lyndon_nonempty() {
        return Err(Error::Contract(format!("co-standard factorization of {l}: not a Lyndon word of length > 1")));
    }
    let s = l.letters();
    let cut = (1..s.len())
        .rev()
        .find(|&k| Word::from(&s[..k]).is_lyndon_nonempty())
        .expect("a letter is always a Lyndon prefix");
    Ok((Word::from(&s[..cut]), Word::from(&s[cut..])))
}

/// All words with the given letter multiplicities, in increasing lex order.
pub fn enumerate_words(content: &[u32]) -> Vec<Word> {
    let total: u32 = content.iter().sum();
    let mut out = Vec::new();
    let mut remaining = content.to_vec();
    let mut cur = Vec::with_capacity(total as usize);
    fn rec(remaining: &mut [u32], cur: &mut Vec<u8>, left: u32, out: &mut Vec<Word>) {
        if left == 0 {
            out.push(Word(cur.clone()));
            return;
        }
        for i in 0..remaining.len() {
            if remaining[i] > 0 {
                remaining[i] -= 1;
                cur.push(i as u8 + 1);
                rec(remaining, cur, left - 1, out);
                cur.pop();
                remaining[i] += 1;
            }
        }
    }
    if total > 0 {
        rec(&mut remaining, &mut cur, total, &mut out);
    }
    out
}

/// Lyndon words with the given content, increasing lex order.
pub fn enumerate_lyndon(content: &[u32]) -> Vec<Word> {
    enumerate_words(content).into_iter().filter(Word::is_lyndon_nonempty).collect()
}

/// All words of exactly the given length over `1..=rank`, increasing lex.
pub fn all_words(rank: usize, len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (1..=rank as u8).map(move |l| {
                    let mut v = w.0.clone();
                    v.push(l);
                    Word(v)
                })
            })
            .collect();
    }
    out
}
