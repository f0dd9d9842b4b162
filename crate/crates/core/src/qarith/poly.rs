//! Dense univariate polynomials over Z, stored low degree first.
//!
//! Only what the fraction normalizer needs: content, primitive part,
//! pseudo-remainder gcd and exact division.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) type Poly = Vec<BigInt>;

pub(crate) fn trim(p: &mut Poly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn content(p: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn primitive(p: &[BigInt]) -> Poly {
    let c = content(p);
    if c.is_zero() || c.is_one() {
        return p.to_vec();
    }
    p.iter().map(|x| x / &c).collect()
}

/// Pseudo-remainder of `a` by `b` (b nonzero), made primitive.
fn prem_primitive(a: &[BigInt], b: &[BigInt]) -> Poly {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r: Poly = a.to_vec();
    trim(&mut r);
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        // r <- lb * r - lr * x^(dr-db) * b
        for c in r.iter_mut() {
            *c *= lb;
        }
        let shift = dr - db;
        for (k, bc) in b.iter().enumerate() {
            r[k + shift] -= &lr * bc;
        }
        trim(&mut r);
        let c = content(&r);
        if !c.is_zero() && !c.is_one() {
            for x in r.iter_mut() {
                *x /= &c;
            }
        }
    }
    r
}

/// Gcd over Z[x], normalized with positive leading coefficient.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> Poly {
    let ca = content(a);
    let cb = content(b);
    if ca.is_zero() {
        return normalize_sign(b.to_vec());
    }
    if cb.is_zero() {
        return normalize_sign(a.to_vec());
    }
    let c = ca.gcd(&cb);
    let mut x = primitive(a);
    let mut y = primitive(b);
    trim(&mut x);
    trim(&mut y);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while y.len() > 1 {
        let r = prem_primitive(&x, &y);
        x = y;
        y = r;
        if y.is_empty() {
            break;
        }
    }
    let g = if y.is_empty() { x } else { vec![BigInt::one()] };
    let g = primitive(&g);
    normalize_sign(g.into_iter().map(|v| v * &c).collect())
}

fn normalize_sign(mut p: Poly) -> Poly {
    trim(&mut p);
    if p.last().is_some_and(|c| c.is_negative()) {
        for c in p.iter_mut() {
            *c = -&*c;
        }
    }
    p
}

/// Exact quotient `a / b` over Z[x]. Panics if the division is not exact;
/// callers only divide by a gcd.
pub(crate) fn div_exact(a: &[BigInt], b: &[BigInt]) -> Poly {
    let mut r: Poly = a.to_vec();
    trim(&mut r);
    if r.is_empty() {
        return r;
    }
    let db = b.len() - 1;
    let lb = &b[db];
    if r.len() < b.len() {
        panic!("inexact polynomial division");
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let (qc, rem) = r[dr].div_rem(lb);
        assert!(rem.is_zero(), "inexact polynomial division");
        let shift = dr - db;
        for (k, bc) in b.iter().enumerate() {
            r[k + shift] -= &qc * bc;
        }
        q[shift] = qc;
        trim(&mut r);
    }
    assert!(r.is_empty(), "inexact polynomial division");
    trim(&mut q);
    q
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}
