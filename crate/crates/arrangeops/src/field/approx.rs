//! Certified floating approximation of field elements.
//!
//! Everything here works with intervals whose endpoints are exact rationals,
//! so enclosures are rigorous; endpoints are rounded outward to dyadics after
//! each operation to keep them small. Transcendental values (pi, cos, sin)
//! come from classical series with explicit remainder bounds.

use super::{Coeffs, FieldElement, FieldKind, Q};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A closed interval with exact rational endpoints.
#[derive(Clone, Debug)]
pub struct Interval {
    pub lo: Q,
    pub hi: Q,
}

impl Interval {
    pub fn point(q: Q) -> Self {
        Interval {
            lo: q.clone(),
            hi: q,
        }
    }

    pub fn zero() -> Self {
        Interval::point(Q::zero())
    }

    pub fn width(&self) -> Q {
        &self.hi - &self.lo
    }

    pub fn contains(&self, q: &Q) -> bool {
        self.lo <= *q && *q <= self.hi
    }

    pub fn midpoint_f64(&self) -> f64 {
        let mid = (&self.lo + &self.hi) / Q::from_integer(BigInt::from(2));
        rational_to_f64(&mid)
    }

    pub fn certified_sign(&self) -> Option<i32> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Interval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Interval {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
        }
    }

    pub fn neg(&self) -> Self {
        Interval {
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = products.iter().min().unwrap().clone();
        let hi = products.iter().max().unwrap().clone();
        Interval { lo, hi }
    }

    /// Multiply by an exact rational.
    pub fn scale(&self, q: &Q) -> Self {
        if q.is_negative() {
            Interval {
                lo: &self.hi * q,
                hi: &self.lo * q,
            }
        } else {
            Interval {
                lo: &self.lo * q,
                hi: &self.hi * q,
            }
        }
    }

    pub fn add_rat(&self, q: &Q) -> Self {
        Interval {
            lo: &self.lo + q,
            hi: &self.hi + q,
        }
    }

    /// Widen by +- r.
    pub fn widen(&self, r: &Q) -> Self {
        Interval {
            lo: &self.lo - r,
            hi: &self.hi + r,
        }
    }

    /// Round endpoints outward to denominators 2^bits.
    pub fn round_out(&self, bits: u32) -> Self {
        Interval {
            lo: dyadic_floor(&self.lo, bits),
            hi: dyadic_ceil(&self.hi, bits),
        }
    }

    fn abs_hi(&self) -> Q {
        let a = self.lo.abs();
        let b = self.hi.abs();
        if a > b {
            a
        } else {
            b
        }
    }
}

fn pow2(bits: u32) -> BigInt {
    BigInt::one() << bits
}

fn dyadic_floor(q: &Q, bits: u32) -> Q {
    let scaled = q * Q::from_integer(pow2(bits));
    Q::new(scaled.floor().to_integer(), pow2(bits))
}

fn dyadic_ceil(q: &Q, bits: u32) -> Q {
    let scaled = q * Q::from_integer(pow2(bits));
    Q::new(scaled.ceil().to_integer(), pow2(bits))
}

fn rational_to_f64(q: &Q) -> f64 {
    // Exact enough for plotting; scale down through the integer parts.
    let n = q.numer();
    let d = q.denom();
    let nf = bigint_to_f64(n);
    let df = bigint_to_f64(d);
    nf / df
}

fn bigint_to_f64(n: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    n.to_f64().unwrap_or(f64::INFINITY)
}

/// Enclosure of sqrt(d) for a positive integer d at the given precision.
pub fn sqrt_interval_of_int(d: &BigInt, bits: u32) -> Interval {
    debug_assert!(d.is_positive());
    let scaled = d * pow2(2 * bits);
    let s = num_integer::Roots::sqrt(&scaled);
    Interval {
        lo: Q::new(s.clone(), pow2(bits)),
        hi: Q::new(s + 1, pow2(bits)),
    }
}

/// Enclosure of sqrt over a nonnegative interval.
fn sqrt_interval(iv: &Interval, bits: u32) -> Interval {
    Interval {
        lo: sqrt_rational_lower(&iv.lo, bits),
        hi: sqrt_rational_upper(&iv.hi, bits),
    }
}

fn sqrt_rational_lower(q: &Q, bits: u32) -> Q {
    if q.is_negative() || q.is_zero() {
        return Q::zero();
    }
    // sqrt(a/b) = sqrt(a b) / b
    let m = q.numer() * q.denom();
    let s = num_integer::Roots::sqrt(&(m * pow2(2 * bits)));
    Q::new(s, q.denom() * pow2(bits))
}

fn sqrt_rational_upper(q: &Q, bits: u32) -> Q {
    if q.is_negative() || q.is_zero() {
        return Q::zero();
    }
    let m = q.numer() * q.denom();
    let s = num_integer::Roots::sqrt(&(m * pow2(2 * bits)));
    Q::new(s + 1, q.denom() * pow2(bits))
}

/// Enclosure of pi by Machin's formula with explicit alternating-series tails.
fn pi_interval(bits: u32) -> Interval {
    let a = arctan_inv(5, bits + 8).scale(&Q::from_integer(BigInt::from(16)));
    let b = arctan_inv(239, bits + 8).scale(&Q::from_integer(BigInt::from(4)));
    a.sub(&b).round_out(bits + 4)
}

/// arctan(1/m) as an interval, m >= 2.
fn arctan_inv(m: u64, bits: u32) -> Interval {
    let eps = Q::new(BigInt::one(), pow2(bits));
    let m2 = Q::from_integer(BigInt::from(m) * BigInt::from(m));
    let mut term = Q::new(BigInt::one(), BigInt::from(m));
    let mut sum = Q::zero();
    let mut j = 0u32;
    loop {
        let contrib = &term / Q::from_integer(BigInt::from(2 * j + 1));
        if contrib < eps {
            // Alternating series with decreasing terms: the tail is bounded
            // by the first omitted term.
            return Interval {
                lo: &sum - &contrib,
                hi: &sum + &contrib,
            };
        }
        if j.is_multiple_of(2) {
            sum += &contrib;
        } else {
            sum -= &contrib;
        }
        term = &term / &m2;
        j += 1;
    }
}

/// Enclosures of cos(2 pi j / n) and sin(2 pi j / n).
fn cos_sin_two_pi(j: u64, n: u64, bits: u32) -> (Interval, Interval) {
    let work = bits + 16;
    let angle = pi_interval(work).scale(&Q::new(BigInt::from(2 * (j % n)), BigInt::from(n)));
    let c = taylor_cos(&angle, work).round_out(bits + 4);
    let s = taylor_sin(&angle, work).round_out(bits + 4);
    (c, s)
}

/// cos over an interval, via Taylor terms with the Lagrange tail bound.
fn taylor_cos(x: &Interval, bits: u32) -> Interval {
    let eps = Q::new(BigInt::one(), pow2(bits));
    let x2 = x.mul(x).round_out(bits + 8);
    let mut term = Interval::point(Q::one());
    let mut acc = Interval::zero();
    let mut k = 0u32;
    loop {
        // term encloses x^(2k)/(2k)!
        let bound = term.abs_hi();
        if bound < eps && Q::from_integer(BigInt::from(2 * k)) > x.abs_hi() {
            return acc.widen(&bound);
        }
        if k.is_multiple_of(2) {
            acc = acc.add(&term);
        } else {
            acc = acc.sub(&term);
        }
        let denom =
            Q::from_integer(BigInt::from((2 * k + 1) as i64) * BigInt::from((2 * k + 2) as i64));
        term = term.mul(&x2).scale(&(Q::one() / denom)).round_out(bits + 8);
        k += 1;
    }
}

fn taylor_sin(x: &Interval, bits: u32) -> Interval {
    let eps = Q::new(BigInt::one(), pow2(bits));
    let x2 = x.mul(x).round_out(bits + 8);
    let mut term = x.clone();
    let mut acc = Interval::zero();
    let mut k = 0u32;
    loop {
        let bound = term.abs_hi();
        if bound < eps && Q::from_integer(BigInt::from(2 * k + 1)) > x.abs_hi() {
            return acc.widen(&bound);
        }
        if k.is_multiple_of(2) {
            acc = acc.add(&term);
        } else {
            acc = acc.sub(&term);
        }
        let denom =
            Q::from_integer(BigInt::from((2 * k + 2) as i64) * BigInt::from((2 * k + 3) as i64));
        term = term.mul(&x2).scale(&(Q::one() / denom)).round_out(bits + 8);
        k += 1;
    }
}

impl FieldElement {
    /// Rigorous complex enclosure of the element under the canonical
    /// embedding (zeta_n to exp(2 pi i / n), sqrt d to the principal root).
    pub fn approx_interval(&self, bits: u32) -> Result<(Interval, Interval)> {
        let mut work = bits + 8;
        loop {
            let (re, im) = self.approx_at(work)?;
            let goal = Q::new(BigInt::one(), pow2(bits));
            if re.width() <= goal && im.width() <= goal {
                return Ok((re, im));
            }
            work *= 2;
        }
    }

    fn approx_at(&self, bits: u32) -> Result<(Interval, Interval)> {
        match self.field.kind() {
            FieldKind::Rational => {
                let q = self.as_rational().unwrap();
                Ok((Interval::point(q), Interval::zero()))
            }
            FieldKind::Quadratic(d) => {
                let Coeffs::Simple(v) = &self.coeffs else {
                    unreachable!()
                };
                let (a, b) = (&v[0], &v[1]);
                if d.is_positive() {
                    let sq = sqrt_interval_of_int(d, bits);
                    Ok((sq.scale(b).add_rat(a), Interval::zero()))
                } else {
                    let sq = sqrt_interval_of_int(&-d.clone(), bits);
                    Ok((Interval::point(a.clone()), sq.scale(b)))
                }
            }
            FieldKind::Cyclotomic(n) => {
                let Coeffs::Simple(v) = &self.coeffs else {
                    unreachable!()
                };
                let mut re = Interval::zero();
                let mut im = Interval::zero();
                for (i, c) in v.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let (ci, si) = cos_sin_two_pi(i as u64, *n as u64, bits);
                    re = re.add(&ci.scale(c));
                    im = im.add(&si.scale(c));
                }
                Ok((re.round_out(bits + 4), im.round_out(bits + 4)))
            }
            FieldKind::SqrtExt { delta, .. } => {
                let Coeffs::Ext(v) = &self.coeffs else {
                    unreachable!()
                };
                let (dre, dim) = delta.approx_at(bits)?;
                if !(dim.lo.is_zero() && dim.hi.is_zero()) {
                    return Err(Error::Unsupported(
                        "approximation of towers over non-real radicands".into(),
                    ));
                }
                // Principal square root of a real radicand: real when
                // delta > 0, purely imaginary when delta < 0.
                let rho: (Interval, Interval) = if dre.lo.is_positive() {
                    (sqrt_interval(&dre, bits), Interval::zero())
                } else if dre.hi.is_negative() {
                    (Interval::zero(), sqrt_interval(&dre.neg(), bits))
                } else {
                    // Sign not yet certified; the caller's refinement loop
                    // retries at higher precision (delta is exactly nonzero).
                    return Ok((
                        Interval {
                            lo: Q::from_integer(BigInt::from(-1)),
                            hi: Q::one(),
                        },
                        Interval {
                            lo: Q::from_integer(BigInt::from(-1)),
                            hi: Q::one(),
                        },
                    ));
                };
                let (are, aim) = v[0].approx_at(bits)?;
                let (bre, bim) = v[1].approx_at(bits)?;
                // (a) + (b)(rho): complex product for the b*rho part.
                let prod_re = bre.mul(&rho.0).sub(&bim.mul(&rho.1));
                let prod_im = bre.mul(&rho.1).add(&bim.mul(&rho.0));
                Ok((
                    are.add(&prod_re).round_out(bits + 4),
                    aim.add(&prod_im).round_out(bits + 4),
                ))
            }
        }
    }

    /// Floating approximation with the enclosure width below 2^-bits
    /// (the final conversion to f64 adds at most one ulp).
    pub fn approx_complex(&self, bits: u32) -> Result<(f64, f64)> {
        let (re, im) = self.approx_interval(bits)?;
        Ok((re.midpoint_f64(), im.midpoint_f64()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_encloses_known_value() {
        let pi = pi_interval(80);
        // 3.14159265358979323846...
        let lo = Q::new(
            BigInt::from(314159265358979i64),
            BigInt::from(100000000000000i64),
        );
        let hi = Q::new(
            BigInt::from(314159265358980i64),
            BigInt::from(100000000000000i64),
        );
        assert!(pi.lo > lo && pi.hi < hi);
        assert!(pi.width() < Q::new(BigInt::one(), pow2(78)));
    }

    #[test]
    fn cos_sin_quarter_turn() {
        let (c, s) = cos_sin_two_pi(1, 4, 64);
        assert!(c.contains(&Q::zero()));
        assert!(s.contains(&Q::one()));
        assert!(c.width() < Q::new(BigInt::one(), pow2(60)));
    }

    #[test]
    fn sqrt_of_five() {
        let iv = sqrt_interval_of_int(&BigInt::from(5), 64);
        // 2.2360679...
        let approx = iv.midpoint_f64();
        assert!((approx - 2.2360679774997896).abs() < 1e-12);
    }
}
