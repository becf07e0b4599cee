//! Dense univariate polynomial helpers over the rationals, plus exact
//! cyclotomic polynomial computation over the integers.
//!
//! Polynomials are coefficient vectors in ascending degree order. These are
//! internal building blocks for the quotient-ring arithmetic in the parent
//! module; degrees stay small (at most 42 here), so the naive algorithms are
//! the right ones.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::sync::Mutex;
use std::sync::OnceLock;

pub type Q = BigRational;

pub fn trim(v: &mut Vec<Q>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

pub fn poly_add(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut out = vec![Q::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(&mut out);
    out
}

pub fn poly_sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut out = vec![Q::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(&mut out);
    out
}

pub fn poly_mul(a: &[Q], b: &[Q]) -> Vec<Q> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

pub fn poly_scale(a: &[Q], c: &Q) -> Vec<Q> {
    let mut out: Vec<Q> = a.iter().map(|x| x * c).collect();
    trim(&mut out);
    out
}

/// Remainder of `a` modulo the monic polynomial `m`.
pub fn poly_rem_monic(a: &[Q], m: &[Q]) -> Vec<Q> {
    debug_assert!(m.last().is_some_and(One::is_one));
    let deg_m = m.len() - 1;
    let mut r: Vec<Q> = a.to_vec();
    trim(&mut r);
    while r.len() > deg_m {
        let lead = r.pop().unwrap();
        if lead.is_zero() {
            continue;
        }
        let shift = r.len() - deg_m;
        for (i, c) in m.iter().take(deg_m).enumerate() {
            let idx = shift + i;
            let delta = &lead * c;
            r[idx] -= delta;
        }
        trim(&mut r);
    }
    r
}

/// Inverse of `a` modulo the monic irreducible polynomial `m`, by the
/// extended Euclidean algorithm. Returns `None` when `a` reduces to zero.
pub fn poly_inv_mod(a: &[Q], m: &[Q]) -> Option<Vec<Q>> {
    let a = poly_rem_monic(a, m);
    if a.is_empty() {
        return None;
    }
    // Invariants: r0 = s0*a (mod m), r1 = s1*a (mod m).
    let mut r0 = m.to_vec();
    let mut r1 = a;
    let mut s0: Vec<Q> = Vec::new();
    let mut s1: Vec<Q> = vec![Q::one()];
    while !r1.is_empty() {
        let (q, rem) = poly_divmod(&r0, &r1);
        let s_next = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, rem);
        s0 = std::mem::replace(&mut s1, s_next);
    }
    // r0 is a nonzero constant gcd (m irreducible, a nonzero).
    debug_assert_eq!(r0.len(), 1);
    let inv_c = Q::one() / r0[0].clone();
    Some(poly_rem_monic(&poly_scale(&s0, &inv_c), m))
}

/// Quotient and remainder of `a` by nonzero `b` over the rationals.
pub fn poly_divmod(a: &[Q], b: &[Q]) -> (Vec<Q>, Vec<Q>) {
    assert!(!b.is_empty(), "division by zero polynomial");
    let deg_b = b.len() - 1;
    let lead_b = b.last().unwrap();
    let mut r = a.to_vec();
    trim(&mut r);
    if r.len() <= deg_b {
        return (Vec::new(), r);
    }
    let mut q = vec![Q::zero(); r.len() - deg_b];
    while r.len() > deg_b {
        let coeff = r.last().unwrap() / lead_b;
        let shift = r.len() - 1 - deg_b;
        q[shift] = coeff.clone();
        for (i, c) in b.iter().enumerate() {
            let delta = &coeff * c;
            r[shift + i] -= delta;
        }
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

fn zpoly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division of integer polynomials; panics if it does not divide.
fn zpoly_div_exact(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r: Vec<BigInt> = a.to_vec();
    while r.last().is_some_and(Zero::is_zero) {
        r.pop();
    }
    let deg_b = b.len() - 1;
    let lead_b = b.last().unwrap();
    let mut q = vec![BigInt::zero(); r.len().saturating_sub(deg_b)];
    while r.len() > deg_b {
        let lead_r = r.last().unwrap();
        let (c, rem) = num_integer::Integer::div_rem(lead_r, lead_b);
        assert!(rem.is_zero(), "non-exact polynomial division");
        let shift = r.len() - 1 - deg_b;
        q[shift] = c.clone();
        for (i, bc) in b.iter().enumerate() {
            let delta = &c * bc;
            r[shift + i] -= delta;
        }
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    assert!(r.is_empty(), "non-exact polynomial division");
    q
}

/// The n-th cyclotomic polynomial with integer coefficients,
/// by the recursion Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    static CACHE: OnceLock<Mutex<BTreeMap<u32, Vec<BigInt>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let result = if n == 1 {
        vec![BigInt::from(-1), BigInt::from(1)]
    } else {
        // x^n - 1
        let mut num = vec![BigInt::zero(); (n + 1) as usize];
        num[0] = BigInt::from(-1);
        num[n as usize] = BigInt::from(1);
        let mut den = vec![BigInt::from(1)];
        for d in 1..n {
            if n.is_multiple_of(d) {
                den = zpoly_mul(&den, &cyclotomic_polynomial(d));
            }
        }
        zpoly_div_exact(&num, &den)
    };
    cache.lock().unwrap().insert(n, result.clone());
    result
}

/// Euler totient, the degree of the n-th cyclotomic field.
pub fn euler_phi(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Exact square root of a rational if it is a perfect square.
pub fn rational_sqrt(q: &Q) -> Option<Q> {
    if q.is_negative() {
        return None;
    }
    if q.is_zero() {
        return Some(Q::zero());
    }
    let (num, den) = (q.numer(), q.denom());
    let sn = num_integer::Roots::sqrt(num);
    let sd = num_integer::Roots::sqrt(den);
    if &(&sn * &sn) == num && &(&sd * &sd) == den {
        Some(Q::new(sn, sd))
    } else {
        None
    }
}
