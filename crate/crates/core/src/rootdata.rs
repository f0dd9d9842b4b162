//! Cartan data of the simple types, positive roots, reflections and
//! reduced words for the longest Weyl group element.
//!
//! Conventions follow the Bourbaki numbering of Dynkin diagrams with short
//! roots normalized to `(α, α) = 2`. In particular `B2` has `α1` long with
//! `(α1, α2) = -2`, and `G2` has `α1` short.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// A vector of simple-root coefficients.
pub type Root = Vec<i64>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    pub kind: Kind,
    pub rank: usize,
    /// `cartan[i][j] = a_ij = 2(α_i, α_j) / (α_i, α_i)`.
    pub cartan: Vec<Vec<i64>>,
    /// `d_i = (α_i, α_i) / 2`.
    pub d: Vec<u32>,
    /// `form[i][j] = (α_i, α_j)`.
    pub form: Vec<Vec<i64>>,
}

/// Accepted `(kind, rank)` combinations.
fn valid(kind: Kind, rank: usize) -> bool {
    match kind {
        Kind::A => (1..=8).contains(&rank),
        Kind::B | Kind::C => (2..=5).contains(&rank),
        Kind::D => (4..=6).contains(&rank),
        Kind::E => (6..=8).contains(&rank),
        Kind::F => rank == 4,
        Kind::G => rank == 2,
    }
}

pub fn datum_from_type(kind: Kind, rank: usize) -> Result<RootDatum> {
    if !valid(kind, rank) {
        return Err(Error::InvalidInput(format!("unsupported type {kind:?}{rank}")));
    }
    let n = rank;
    // Squared lengths and simple edges (i, j) with (α_i, α_j) < 0.
    let mut sq = vec![2i64; n];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let chain = |edges: &mut Vec<(usize, usize)>, upto: usize| {
        for i in 0..upto.saturating_sub(1) {
            edges.push((i, i + 1));
        }
    };
    match kind {
        Kind::A => chain(&mut edges, n),
        Kind::B => {
            chain(&mut edges, n);
            for s in sq.iter_mut().take(n - 1) {
                *s = 4;
            }
        }
        Kind::C => {
            chain(&mut edges, n);
            sq[n - 1] = 4;
        }
        Kind::D => {
            chain(&mut edges, n - 1);
            edges.push((n - 3, n - 1));
        }
        Kind::E => {
            // 1-3-4-5-6-7-8 with 2 attached to 4 (0-based: 0-2-3-4-..., 1-3)
            edges.push((0, 2));
            edges.push((1, 3));
            for i in 2..n - 1 {
                edges.push((i, i + 1));
            }
        }
        Kind::F => {
            chain(&mut edges, 4);
            sq[0] = 4;
            sq[1] = 4;
        }
        Kind::G => {
            edges.push((0, 1));
            sq[1] = 6;
        }
    }
    let mut form = vec![vec![0i64; n]; n];
    for i in 0..n {
        form[i][i] = sq[i];
    }
    for &(i, j) in &edges {
        // (α_i, α_j) = -max(|α_i|², |α_j|²) / 2 on a simple edge
        let v = -(sq[i].max(sq[j]) / 2);
        form[i][j] = v;
        form[j][i] = v;
    }
    let cartan = (0..n)
        .map(|i| (0..n).map(|j| 2 * form[i][j] / form[i][i]).collect())
        .collect();
    let d = sq.iter().map(|&s| (s / 2) as u32).collect();
    Ok(RootDatum { kind, rank, cartan, d, form })
}

impl FromStr for RootDatum {
    type Err = Error;
    /// Parses type strings such as `A2`, `B3`, `E6`, `G2`.
    fn from_str(s: &str) -> Result<RootDatum> {
        let s = s.trim();
        let bad = || Error::InvalidInput(format!("bad type string {s:?}"));
        let mut chars = s.chars();
        let kind = match chars.next().ok_or_else(bad)?.to_ascii_uppercase() {
            'A' => Kind::A,
            'B' => Kind::B,
            'C' => Kind::C,
            'D' => Kind::D,
            'E' => Kind::E,
            'F' => Kind::F,
            'G' => Kind::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        datum_from_type(kind, rank)
    }
}

impl fmt::Display for RootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.kind, self.rank)
    }
}

/// Formats a root as comma-separated coordinates.
pub fn format_root(r: &[i64]) -> String {
    r.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

impl RootDatum {
    pub fn pairing(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut s = 0;
        for i in 0..self.rank {
            if x[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                s += x[i] * self.form[i][j] * y[j];
            }
        }
        s
    }

    /// Pairing of two contents (nonnegative degree vectors).
    pub fn pairing_u(&self, x: &[u32], y: &[u32]) -> i64 {
        let xi: Vec<i64> = x.iter().map(|&v| v as i64).collect();
        let yi: Vec<i64> = y.iter().map(|&v| v as i64).collect();
        self.pairing(&xi, &yi)
    }

    pub fn simple_root(&self, i: usize) -> Root {
        let mut r = vec![0; self.rank];
        r[i] = 1;
        r
    }

    /// `s_i(λ) = λ - <λ, α_i^∨> α_i`, with `i` zero-based.
    pub fn reflect(&self, i: usize, lambda: &[i64]) -> Vec<i64> {
        let coroot_pairing: i64 = (0..self.rank).map(|j| lambda[j] * self.cartan[i][j]).sum();
        let mut out = lambda.to_vec();
        out[i] -= coroot_pairing;
        out
    }

    /// Positive roots ordered by height, then coordinates.
    pub fn positive_roots(&self) -> Vec<Root> {
        let mut seen: BTreeSet<(i64, Root)> = BTreeSet::new();
        let mut queue: Vec<Root> = (0..self.rank).map(|i| self.simple_root(i)).collect();
        let mut known: HashSet<Root> = queue.iter().cloned().collect();
        while let Some(r) = queue.pop() {
            seen.insert((r.iter().sum(), r.clone()));
            for i in 0..self.rank {
                let s = self.reflect(i, &r);
                if s.iter().all(|&c| c >= 0) && known.insert(s.clone()) {
                    queue.push(s);
                }
            }
        }
        seen.into_iter().map(|(_, r)| r).collect()
    }

    pub fn max_root_height(&self) -> usize {
        self.positive_roots().iter().map(|r| r.iter().sum::<i64>() as usize).max().unwrap_or(0)
    }

    /// `N(λ) = ((λ, λ) - Σ k_i (α_i, α_i)) / 2`.
    pub fn n_of(&self, lambda: &[u32]) -> i64 {
        let l: Vec<i64> = lambda.iter().map(|&v| v as i64).collect();
        let diag: i64 = (0..self.rank).map(|i| l[i] * self.form[i][i]).sum();
        (self.pairing(&l, &l) - diag) / 2
    }

    fn apply_word(&self, word: &[usize], lambda: &[i64]) -> Vec<i64> {
        let mut v = lambda.to_vec();
        for &i in word.iter().rev() {
            v = self.reflect(i, &v);
        }
        v
    }
}

/// Sequence of simple-reflection indices (1-based), `w0 = s_{i_1} ... s_{i_N}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedWord(pub Vec<usize>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReducedWordPreset {
    /// `s_1 s_2 .. s_n s_1 .. s_{n-1} .. s_1 s_2 s_1`, type A only.
    TypeAChain,
    /// Append the smallest index that increases the length until `w0`.
    Greedy,
    User(Vec<usize>),
}

pub fn longest_reduced_word(datum: &RootDatum, preset: &ReducedWordPreset) -> Result<ReducedWord> {
    let rw = match preset {
        ReducedWordPreset::TypeAChain => {
            if datum.kind != Kind::A {
                return Err(Error::InvalidInput("the type-A reduced word preset needs type A".into()));
            }
            let n = datum.rank;
            let mut v = Vec::new();
            for k in (1..=n).rev() {
                v.extend(1..=k);
            }
            ReducedWord(v)
        }
        ReducedWordPreset::Greedy => {
            let mut word: Vec<usize> = Vec::new();
            loop {
                // w s_i is longer than w iff w(α_i) > 0
                let zero_based: Vec<usize> = word.iter().map(|i| i - 1).collect();
                let next = (0..datum.rank).find(|&i| {
                    datum.apply_word(&zero_based, &datum.simple_root(i)).iter().all(|&c| c >= 0)
                });
                match next {
                    Some(i) => word.push(i + 1),
                    None => break,
                }
            }
            ReducedWord(word)
        }
        ReducedWordPreset::User(v) => ReducedWord(v.clone()),
    };
    beta_sequence(datum, &rw)?;
    Ok(rw)
}

/// `β_j = s_{i_1} .. s_{i_{j-1}}(α_{i_j})`; validates that the roots are
/// distinct, positive and exhaust the positive roots.
pub fn beta_sequence(datum: &RootDatum, rw: &ReducedWord) -> Result<Vec<Root>> {
    if rw.0.iter().any(|&i| i == 0 || i > datum.rank) {
        return Err(Error::InvalidInput(format!("reduced word {:?} has an index out of range", rw.0)));
    }
    let zero_based: Vec<usize> = rw.0.iter().map(|i| i - 1).collect();
    let mut betas = Vec::with_capacity(zero_based.len());
    let mut seen = HashSet::new();
    for j in 0..zero_based.len() {
        let b = datum.apply_word(&zero_based[..j], &datum.simple_root(zero_based[j]));
        if b.iter().any(|&c| c < 0) || !seen.insert(b.clone()) {
            return Err(Error::InvalidInput(format!("{:?} is not a reduced word", rw.0)));
        }
        betas.push(b);
    }
    let n_pos = datum.positive_roots().len();
    if betas.len() != n_pos {
        return Err(Error::InvalidInput(format!(
            "{:?} has length {}, the longest element has length {n_pos}",
            rw.0,
            betas.len()
        )));
    }
    Ok(betas)
}

/// Number of multisets of positive roots summing to `content`.
pub fn kostant_count(datum: &RootDatum, content: &[u32]) -> u64 {
    let dims: Vec<usize> = content.iter().map(|&c| c as usize + 1).collect();
    let size: usize = dims.iter().product();
    let mut dp = vec![0u64; size];
    dp[0] = 1;
    let index = |v: &[usize]| v.iter().zip(&dims).rev().fold(0, |acc, (&x, &d)| acc * d + x);
    for root in datum.positive_roots() {
        if root.iter().zip(content).any(|(&r, &c)| r as u32 > c) {
            continue;
        }
        // increasing mixed-radix order makes v - root come before v
        let mut v = vec![0usize; dims.len()];
        for _ in 0..size {
            if v.iter().zip(&root).all(|(&x, &r)| x as i64 >= r) {
                let prev: Vec<usize> = v.iter().zip(&root).map(|(&x, &r)| x - r as usize).collect();
                let add = dp[index(&prev)];
                dp[index(&v)] += add;
            }
            for k in 0..dims.len() {
                v[k] += 1;
                if v[k] < dims[k] {
                    break;
                }
                v[k] = 0;
            }
        }
    }
    dp[size - 1]
}
