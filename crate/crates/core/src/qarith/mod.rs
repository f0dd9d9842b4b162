//! Exact coefficient arithmetic in `Z[q, q^-1]` and `Q(q)`.
//!
//! [`LaurentInt`] is a dense integer Laurent polynomial; [`RatFn`] is a
//! reduced fraction of two of them. Both are immutable values with exact
//! equality. The text forms produced by `Display` are stable and are the
//! coefficient format used by every output surface and the table cache.

mod parse;
mod poly;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use parse::ParseCoeffError;

/// An element of `Z[q, q^-1]`.
///
/// Stored densely: `coeffs[k]` is the coefficient of `q^(low + k)`. The first
/// and last stored coefficients are nonzero; zero is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentInt {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentInt {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c * q^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        Self { low: e, coeffs: vec![c] }
    }

    pub fn q_pow(e: i64) -> Self {
        Self::monomial(1, e)
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut acc = Self::zero();
        for (e, c) in terms {
            acc = &acc + &Self::monomial(c, e);
        }
        acc
    }

    fn from_raw(low: i64, mut coeffs: Vec<BigInt>) -> Self {
        poly::trim(&mut coeffs);
        let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead_zeros);
        Self { low: low + lead_zeros as i64, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True for `±q^k`, the units of the ring.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].abs().is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn min_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn max_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        let k = e - self.low;
        if k < 0 || k as usize >= self.coeffs.len() {
            BigInt::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    /// Nonzero terms as `(exponent, coefficient)`, increasing exponent.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.low + k as i64, c))
    }

    /// `q -> q^-1`.
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self { low: -self.max_exp().unwrap(), coeffs }
    }

    /// `q -> q^d`.
    pub fn substitute_power(&self, d: i64) -> Self {
        assert!(d >= 1);
        Self::from_terms(self.terms().map(|(e, c)| (e * d, c.clone())))
    }

    pub fn shift(&self, e: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { low: self.low + e, coeffs: self.coeffs.clone() }
    }

    /// Part with strictly positive exponents.
    pub fn positive_part(&self) -> Self {
        Self::from_terms(self.terms().filter(|(e, _)| *e > 0).map(|(e, c)| (e, c.clone())))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    fn neg_ref(&self) -> Self {
        Self { low: self.low, coeffs: self.coeffs.iter().map(|x| -x).collect() }
    }

    /// Exact quotient in `Z[q, q^-1]` if one exists.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        let r = RatFn::new(self.clone(), other.clone());
        r.as_laurent().cloned()
    }

    fn lead_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }
}

impl fmt::Debug for LaurentInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentInt({self})")
    }
}

impl fmt::Display for LaurentInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if neg {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            if e == 0 {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}")?;
            }
            if e == 1 {
                f.write_str("q")?;
            } else {
                write!(f, "q^{e}")?;
            }
        }
        Ok(())
    }
}

impl Add for &LaurentInt {
    type Output = LaurentInt;
    fn add(self, rhs: &LaurentInt) -> LaurentInt {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.max_exp().unwrap().max(rhs.max_exp().unwrap());
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - low) as usize + k] += c;
        }
        for (k, c) in rhs.coeffs.iter().enumerate() {
            coeffs[(rhs.low - low) as usize + k] += c;
        }
        LaurentInt::from_raw(low, coeffs)
    }
}

impl Sub for &LaurentInt {
    type Output = LaurentInt;
    fn sub(self, rhs: &LaurentInt) -> LaurentInt {
        self + &rhs.neg_ref()
    }
}

impl Mul for &LaurentInt {
    type Output = LaurentInt;
    fn mul(self, rhs: &LaurentInt) -> LaurentInt {
        if self.is_zero() || rhs.is_zero() {
            return LaurentInt::zero();
        }
        LaurentInt::from_raw(self.low + rhs.low, poly::mul(&self.coeffs, &rhs.coeffs))
    }
}

impl Neg for &LaurentInt {
    type Output = LaurentInt;
    fn neg(self) -> LaurentInt {
        self.neg_ref()
    }
}

macro_rules! forward_owned {
    ($t:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t { (&self).$m(&rhs) }
        }
        impl $tr<&$t> for $t {
            type Output = $t;
            fn $m(self, rhs: &$t) -> $t { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(LaurentInt, Add add, Sub sub, Mul mul);
impl Neg for LaurentInt {
    type Output = LaurentInt;
    fn neg(self) -> LaurentInt {
        self.neg_ref()
    }
}

/// An element of `Q(q)` as a reduced fraction of Laurent polynomials.
///
/// Canonical form: `den` is an ordinary polynomial in `q` with nonzero
/// constant term and positive leading coefficient, and shares no nonunit
/// factor with `num` (integer content included). Powers of `q` and signs
/// live in `num`. Canonical forms are unique, so derived equality is exact.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFn {
    num: LaurentInt,
    den: LaurentInt,
}

impl Default for RatFn {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatFn {
    pub fn zero() -> Self {
        Self { num: LaurentInt::zero(), den: LaurentInt::one() }
    }

    pub fn one() -> Self {
        Self::from(LaurentInt::one())
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Self::from(LaurentInt::from_int(c))
    }

    pub fn q_pow(e: i64) -> Self {
        Self::from(LaurentInt::q_pow(e))
    }

    /// `num / den`, reduced. Panics on a zero denominator.
    pub fn new(num: LaurentInt, den: LaurentInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_unit() {
            // den = ±q^k
            let sign = den.coeffs[0].clone();
            let num = num.shift(-den.low).scale(&sign);
            return Self { num, den: LaurentInt::one() };
        }
        // Clear q powers: num = q^a N, den = q^b D with N(0), D(0) != 0.
        let a = num.low;
        let b = den.low;
        let g = poly::gcd(&num.coeffs, &den.coeffs);
        let mut n = poly::div_exact(&num.coeffs, &g);
        let mut d = poly::div_exact(&den.coeffs, &g);
        if d.last().is_some_and(|c| c.is_negative()) {
            for c in n.iter_mut() {
                *c = -&*c;
            }
            for c in d.iter_mut() {
                *c = -&*c;
            }
        }
        let num = LaurentInt::from_raw(a - b, n);
        let den = LaurentInt::from_raw(0, d);
        Self { num, den }
    }

    pub fn num(&self) -> &LaurentInt {
        &self.num
    }

    pub fn den(&self) -> &LaurentInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True iff the value lies in `Z[q, q^-1]`.
    pub fn is_laurent_integral(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_laurent(&self) -> Option<&LaurentInt> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn bar(&self) -> Self {
        if self.den.is_one() {
            return Self { num: self.num.bar(), den: LaurentInt::one() };
        }
        Self::new(self.num.bar(), self.den.bar())
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Integer-valued leading coefficient sign of the numerator; used for
    /// deterministic normalizations.
    pub fn signum_lead(&self) -> i32 {
        match self.num.lead_coeff() {
            None => 0,
            Some(c) if c.is_negative() => -1,
            Some(_) => 1,
        }
    }

    fn needs_parens(&self) -> bool {
        !self.den.is_one() || self.num.coeffs.iter().filter(|c| !c.is_zero()).count() > 1
    }

    /// Text form suitable as a multiplier: parenthesized unless it is a
    /// single monomial.
    pub fn to_factor_string(&self) -> String {
        if self.needs_parens() {
            format!("({self})")
        } else {
            self.to_string()
        }
    }
}

impl From<LaurentInt> for RatFn {
    fn from(num: LaurentInt) -> Self {
        Self { num, den: LaurentInt::one() }
    }
}

impl From<i64> for RatFn {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl fmt::Debug for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFn({self})")
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl std::str::FromStr for RatFn {
    type Err = ParseCoeffError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse::parse_ratfn(s)
    }
}

impl std::str::FromStr for LaurentInt {
    type Err = ParseCoeffError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse::parse_laurent(s)
    }
}

impl Add for &RatFn {
    type Output = RatFn;
    fn add(self, rhs: &RatFn) -> RatFn {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFn::from(&self.num + &rhs.num);
        }
        if self.den == rhs.den {
            return RatFn::new(&self.num + &rhs.num, self.den.clone());
        }
        RatFn::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFn {
    type Output = RatFn;
    fn sub(self, rhs: &RatFn) -> RatFn {
        self + &(-rhs)
    }
}

impl Mul for &RatFn {
    type Output = RatFn;
    fn mul(self, rhs: &RatFn) -> RatFn {
        if self.is_zero() || rhs.is_zero() {
            return RatFn::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFn::from(&self.num * &rhs.num);
        }
        RatFn::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl std::ops::Div for &RatFn {
    type Output = RatFn;
    fn div(self, rhs: &RatFn) -> RatFn {
        assert!(!rhs.is_zero(), "division by zero");
        if rhs.den.is_one() && rhs.num.is_unit() {
            let inv = LaurentInt::monomial(rhs.num.coeffs[0].clone(), -rhs.num.low);
            return self * &RatFn::from(inv);
        }
        RatFn::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        RatFn { num: -&self.num, den: self.den.clone() }
    }
}

forward_owned!(RatFn, Add add, Sub sub, Mul mul);
impl std::ops::Div for RatFn {
    type Output = RatFn;
    fn div(self, rhs: RatFn) -> RatFn {
        &self / &rhs
    }
}
impl Neg for RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        -&self
    }
}

impl PartialOrd for LaurentInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Arbitrary but fixed total order, used only for deterministic sorting.
impl Ord for LaurentInt {
    fn cmp(&self, other: &Self) -> Ordering {
        self.low.cmp(&other.low).then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

/// The quantum integer `[k]_i` with `q_i = q^d`.
pub fn q_int(k: u32, d: u32) -> LaurentInt {
    assert!(d >= 1, "d must be positive");
    let d = d as i64;
    // [k] = q^{(k-1)d} + q^{(k-3)d} + ... + q^{-(k-1)d}
    LaurentInt::from_terms((0..k as i64).map(|t| ((k as i64 - 1 - 2 * t) * d, 1)))
}

/// The quantum factorial `[k]_i!`.
pub fn q_factorial(k: u32, d: u32) -> LaurentInt {
    (1..=k).fold(LaurentInt::one(), |acc, j| &acc * &q_int(j, d))
}

/// The quantum binomial coefficient `[m choose k]_i`. Requires `k <= m`.
pub fn q_binomial(m: u32, k: u32, d: u32) -> LaurentInt {
    assert!(k <= m, "q_binomial requires k <= m");
    let num = (m - k + 1..=m).fold(LaurentInt::one(), |acc, j| &acc * &q_int(j, d));
    num.checked_div(&q_factorial(k, d))
        .expect("quantum binomials are Laurent polynomials")
}

/// Coefficient involution `q -> q^-1`.
pub fn bar_coeff(x: &RatFn) -> RatFn {
    x.bar()
}

pub fn is_laurent_integral(x: &RatFn) -> bool {
    x.is_laurent_integral()
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{0} is not bar-antiinvariant")]
pub struct NotAntiInvariant(pub String);

/// The unique `p` in `qZ[q]` with `p - bar(p) = r`, for bar-antiinvariant `r`.
pub fn solve_bar_antisymmetric(r: &LaurentInt) -> Result<LaurentInt, NotAntiInvariant> {
    if r.bar() != -r {
        return Err(NotAntiInvariant(r.to_string()));
    }
    Ok(r.positive_part())
}
