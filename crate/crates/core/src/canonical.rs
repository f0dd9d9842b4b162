//! The pair set X, the integrality condition, the bar involution in
//! Lyndon coordinates and the canonical basis.

use std::collections::{BTreeMap, HashMap};

use crate::bases::{good_lyndon_set, GoodLyndonSet, LyndonCoords};
use crate::error::{Error, Result};
use crate::freealg::FreeElement;
use crate::qarith::{solve_bar_antisymmetric, LaurentInt, RatFn};
use crate::straighten::StraightenTable;
use crate::words::{lr_cmp, Word};

/// Pairs `l1 < l2` of good Lyndon words whose concatenation is not good.
pub fn x_pairs(table: &StraightenTable, gl: &GoodLyndonSet) -> Result<Vec<(Word, Word)>> {
    let mut out = Vec::new();
    for (a, l1) in gl.words.iter().enumerate() {
        for l2 in &gl.words[a + 1..] {
            if !table.is_good(&l1.concat(l2))? {
                out.push((l1.clone(), l2.clone()));
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IcPair {
    pub l1: Word,
    pub l2: Word,
    pub normal_form: FreeElement,
    pub integral: bool,
    /// First good word, ≺-decreasing, whose coefficient is not Laurent.
    pub witness: Option<(Word, RatFn)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IcReport {
    pub pairs: Vec<IcPair>,
    pub holds: bool,
}

impl IcReport {
    /// The failing pair with the ≺-smallest product; among pairs with the
    /// same product, the one with the longest `l1` (the co-standard split).
    pub fn first_failure(&self) -> Option<&IcPair> {
        self.pairs.iter().filter(|p| !p.integral).min_by(|a, b| {
            lr_cmp(&a.l1.concat(&a.l2), &b.l1.concat(&b.l2)).then(b.l1.len().cmp(&a.l1.len()))
        })
    }

    pub fn violation(&self) -> Option<Error> {
        self.first_failure().map(|p| {
            let (word, c) = p.witness.clone().expect("failing pairs carry a witness");
            Error::IcViolation { l1: p.l1.clone(), l2: p.l2.clone(), word, witness: c.to_string() }
        })
    }
}

pub fn check_ic(table: &StraightenTable) -> Result<IcReport> {
    let gl = good_lyndon_set(table)?;
    let mut pairs = Vec::new();
    for (l1, l2) in x_pairs(table, &gl)? {
        let nf = table.normal_form_word(&l1.concat(&l2))?;
        let witness = nf
            .terms_lr_desc()
            .into_iter()
            .find(|(_, c)| !c.is_laurent_integral())
            .map(|(w, c)| (w.clone(), c.clone()));
        pairs.push(IcPair { l1, l2, normal_form: nf, integral: witness.is_none(), witness });
    }
    let holds = pairs.iter().all(|p| p.integral);
    Ok(IcReport { pairs, holds })
}

fn require_bar_stable(table: &StraightenTable) -> Result<()> {
    if !table.preset().is_bar_stable() {
        return Err(Error::UnsupportedPreset { required: "canonical" });
    }
    Ok(())
}

/// `bar(B_[g])` in Lyndon coordinates.
pub fn bar_in_l(coords: &mut LyndonCoords<'_>, g: &Word) -> Result<FreeElement> {
    require_bar_stable(coords.table())?;
    let e = coords.expansion(g)?.bar_coeffs();
    coords.g_to_l(&e)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalElement {
    pub label: Word,
    /// `p_{g,w}` in the Lyndon basis.
    pub l_coords: BTreeMap<Word, LaurentInt>,
    /// The same element in good words.
    pub g_coords: FreeElement,
}

impl CanonicalElement {
    /// Bar-fixed (every good-word coordinate is bar-invariant), `p_{g,g} = 1`
    /// and `p_{g,w} ∈ qZ[q]` otherwise.
    pub fn verify(&self) -> bool {
        let bar_fixed = self.g_coords.iter().all(|(_, c)| c.bar() == *c);
        let unit = self.l_coords.get(&self.label).is_some_and(LaurentInt::is_one);
        let lower = self
            .l_coords
            .iter()
            .filter(|(w, _)| **w != self.label)
            .all(|(_, p)| p.min_exp().is_some_and(|e| e >= 1));
        bar_fixed && unit && lower
    }

    pub fn l_element(&self, rank: usize) -> FreeElement {
        FreeElement::from_terms(rank, self.l_coords.iter().map(|(w, p)| (w.clone(), RatFn::from(p.clone()))))
    }
}

/// Solves for canonical basis elements, sharing bar matrices across calls.
pub struct CanonicalSolver<'t> {
    coords: LyndonCoords<'t>,
    bars: HashMap<Word, FreeElement>,
    ic: IcReport,
}

impl<'t> CanonicalSolver<'t> {
    /// Fails with the first witness when the integrality condition fails.
    pub fn new(table: &'t StraightenTable) -> Result<Self> {
        require_bar_stable(table)?;
        let ic = check_ic(table)?;
        if let Some(e) = ic.violation() {
            return Err(e);
        }
        Ok(CanonicalSolver { coords: LyndonCoords::new(table), bars: HashMap::new(), ic })
    }

    pub fn ic_report(&self) -> &IcReport {
        &self.ic
    }

    fn bar(&mut self, w: &Word) -> Result<FreeElement> {
        if let Some(b) = self.bars.get(w) {
            return Ok(b.clone());
        }
        let b = bar_in_l(&mut self.coords, w)?;
        self.bars.insert(w.clone(), b.clone());
        Ok(b)
    }

    pub fn element(&mut self, g: &Word) -> Result<CanonicalElement> {
        let table = self.coords.table();
        if !table.is_good(g)? {
            return Err(Error::InvalidInput(format!("{g} is not a good word")));
        }
        let down = self.coords.downset(std::slice::from_ref(g))?;
        let mut p: BTreeMap<Word, LaurentInt> = BTreeMap::new();
        p.insert(g.clone(), LaurentInt::one());
        let mut bars = Vec::with_capacity(down.len());
        for w in &down {
            bars.push(self.bar(w)?);
        }
        // p_u - bar(p_u) = Σ_{u ≺ w ⪯ g} bar(p_w) h_{u,w}; u runs downward
        for k in (0..down.len()).rev() {
            let u = &down[k];
            if u == g {
                continue;
            }
            let mut rhs = RatFn::zero();
            for (w, h) in down.iter().zip(&bars).skip(k + 1) {
                if let Some(pw) = p.get(w) {
                    let huw = h.coeff(u);
                    if !huw.is_zero() {
                        rhs = &rhs + &(&RatFn::from(pw.bar()) * &huw);
                    }
                }
            }
            if rhs.is_zero() {
                continue;
            }
            let r = rhs.as_laurent().cloned().ok_or_else(|| {
                Error::Internal(format!("non-integral bar coefficient {rhs} at {u} for {g}"))
            })?;
            let pu = solve_bar_antisymmetric(&r).map_err(|e| Error::Internal(format!("{e} at {u} for {g}")))?;
            if !pu.is_zero() {
                p.insert(u.clone(), pu);
            }
        }
        let l_el = FreeElement::from_terms(table.rank(), p.iter().map(|(w, c)| (w.clone(), RatFn::from(c.clone()))));
        let g_coords = self.coords.l_to_g(&l_el)?;
        let el = CanonicalElement { label: g.clone(), l_coords: p, g_coords };
        if !el.verify() {
            return Err(Error::Internal(format!("canonical element for {g} failed verification")));
        }
        Ok(el)
    }
}

/// Canonical basis elements for every good word `g ⪯ up_to`, ≺-increasing.
pub fn canonical_basis(table: &StraightenTable, up_to: &Word) -> Result<Vec<CanonicalElement>> {
    let mut solver = CanonicalSolver::new(table)?;
    let mut labels = Vec::new();
    for len in 1..=up_to.len() {
        labels.extend(table.good_words_of_len(len)?.into_iter().filter(|w| lr_cmp(w, up_to).is_le()));
    }
    labels.sort_by(lr_cmp);
    labels.into_iter().map(|g| solver.element(&g)).collect()
}
