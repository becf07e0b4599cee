//! Exact arithmetic over the rationals and the number fields the geometry
//! needs: quadratic fields Q(sqrt d), cyclotomic fields Q(zeta_n), and
//! square-root extensions of any of those.
//!
//! Elements are stored in the power basis of the field generator and reduced
//! modulo the defining polynomial, so equality with zero is a coefficient
//! check and every predicate in the crate is exact. Square-root extensions
//! keep their coefficients as base-field elements, which gives towers like
//! Q(sqrt 5)(rho) with rho^2 = -(2+sqrt 5) without a general factorization
//! machine.

mod approx;
mod poly;

pub use approx::Interval;
pub use poly::{cyclotomic_polynomial, euler_phi, rational_sqrt, Q};

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// A base field of the tower: the rationals, a quadratic field, a cyclotomic
/// field, or a square-root extension of another field.
#[derive(Clone)]
pub enum FieldKind {
    Rational,
    /// Q(sqrt d) for a squarefree integer d, d != 0, 1.
    Quadratic(BigInt),
    /// Q(zeta_n), the n-th cyclotomic field, of degree phi(n).
    Cyclotomic(u32),
    /// base(rho) with rho^2 = delta, where delta is not a square certified
    /// in the base field.
    SqrtExt {
        base: Field,
        delta: FieldElement,
    },
}

struct FieldRepr {
    kind: FieldKind,
    /// Degree over the immediate base field (1, 2, or phi(n)).
    rel_degree: usize,
    /// Monic defining polynomial over Q for the simple kinds; empty for
    /// square-root extensions (their modulus is x^2 - delta conceptually).
    modulus: Vec<Q>,
}

/// A field descriptor. Cheap to clone; equality is structural.
#[derive(Clone)]
pub struct Field(Arc<FieldRepr>);

impl Field {
    pub fn rational() -> Field {
        Field(Arc::new(FieldRepr {
            kind: FieldKind::Rational,
            rel_degree: 1,
            modulus: vec![-Q::one(), Q::one()],
        }))
    }

    /// Q(sqrt d). Fails unless d is a squarefree integer other than 0 and 1.
    pub fn quadratic(d: impl Into<BigInt>) -> Result<Field> {
        let d: BigInt = d.into();
        if d.is_zero() || d.is_one() {
            return Err(Error::InvalidArgument(format!(
                "quadratic field requires d != 0, 1 (got {d})"
            )));
        }
        if !is_squarefree(&d) {
            return Err(Error::InvalidArgument(format!("{d} is not squarefree")));
        }
        let modulus = vec![Q::from_integer(-d.clone()), Q::zero(), Q::one()];
        Ok(Field(Arc::new(FieldRepr {
            kind: FieldKind::Quadratic(d),
            rel_degree: 2,
            modulus,
        })))
    }

    /// The n-th cyclotomic field, with the n-th cyclotomic polynomial
    /// computed exactly.
    pub fn cyclotomic(n: u32) -> Result<Field> {
        if n == 0 {
            return Err(Error::InvalidArgument(
                "cyclotomic index must be >= 1".into(),
            ));
        }
        let modulus: Vec<Q> = cyclotomic_polynomial(n)
            .into_iter()
            .map(Q::from_integer)
            .collect();
        let rel_degree = modulus.len() - 1;
        Ok(Field(Arc::new(FieldRepr {
            kind: FieldKind::Cyclotomic(n),
            rel_degree,
            modulus,
        })))
    }

    fn sqrt_ext(base: Field, delta: FieldElement) -> Field {
        Field(Arc::new(FieldRepr {
            kind: FieldKind::SqrtExt { base, delta },
            rel_degree: 2,
            modulus: Vec::new(),
        }))
    }

    pub fn kind(&self) -> &FieldKind {
        &self.0.kind
    }

    /// Degree of the field over Q.
    pub fn degree(&self) -> usize {
        match self.kind() {
            FieldKind::SqrtExt { base, .. } => 2 * base.degree(),
            _ => self.0.rel_degree,
        }
    }

    fn rel_degree(&self) -> usize {
        self.0.rel_degree
    }

    pub fn zero(&self) -> FieldElement {
        self.from_rational(Q::zero())
    }

    pub fn one(&self) -> FieldElement {
        self.from_rational(Q::one())
    }

    pub fn from_int(&self, n: i64) -> FieldElement {
        self.from_rational(Q::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(&self, q: Q) -> FieldElement {
        match self.kind() {
            FieldKind::SqrtExt { base, .. } => {
                let coeffs = vec![base.from_rational(q), base.zero()];
                FieldElement {
                    field: self.clone(),
                    coeffs: Coeffs::Ext(coeffs),
                }
            }
            _ => {
                let mut v = vec![Q::zero(); self.rel_degree()];
                v[0] = q;
                FieldElement {
                    field: self.clone(),
                    coeffs: Coeffs::Simple(v),
                }
            }
        }
    }

    /// Element from power-basis coefficients over Q (simple fields only).
    pub fn from_coeffs(&self, coeffs: Vec<Q>) -> Result<FieldElement> {
        match self.kind() {
            FieldKind::SqrtExt { .. } => Err(Error::InvalidArgument(
                "square-root towers take base-field coefficients, not rationals".into(),
            )),
            _ => {
                if coeffs.len() > self.rel_degree() {
                    let reduced = poly::poly_rem_monic(&coeffs, &self.0.modulus);
                    Ok(self.reduced_element(reduced))
                } else {
                    let mut v = coeffs;
                    v.resize(self.rel_degree(), Q::zero());
                    Ok(FieldElement {
                        field: self.clone(),
                        coeffs: Coeffs::Simple(v),
                    })
                }
            }
        }
    }

    /// Element of a square-root extension from (a, b) meaning a + b*rho.
    pub fn from_base_pair(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        match self.kind() {
            FieldKind::SqrtExt { base, .. } => {
                if a.field != *base || b.field != *base {
                    return Err(Error::FieldMismatch(
                        "tower coefficients must lie in the base field".into(),
                    ));
                }
                Ok(FieldElement {
                    field: self.clone(),
                    coeffs: Coeffs::Ext(vec![a, b]),
                })
            }
            _ => Err(Error::InvalidArgument("not a square-root extension".into())),
        }
    }

    fn reduced_element(&self, mut v: Vec<Q>) -> FieldElement {
        v.resize(self.rel_degree(), Q::zero());
        FieldElement {
            field: self.clone(),
            coeffs: Coeffs::Simple(v),
        }
    }

    /// The canonical generator: 1, sqrt d, zeta_n, or rho.
    pub fn generator(&self) -> FieldElement {
        match self.kind() {
            FieldKind::Rational => self.one(),
            FieldKind::SqrtExt { base, .. } => FieldElement {
                field: self.clone(),
                coeffs: Coeffs::Ext(vec![base.zero(), base.one()]),
            },
            _ => {
                if self.rel_degree() == 1 {
                    // zeta_1 = 1, zeta_2 = -1: the generator reduces mod Phi_n.
                    let g = poly::poly_rem_monic(&[Q::zero(), Q::one()], &self.0.modulus);
                    self.reduced_element(g)
                } else {
                    let mut v = vec![Q::zero(); self.rel_degree()];
                    v[1] = Q::one();
                    self.reduced_element(v)
                }
            }
        }
    }

    /// zeta_n^k in a cyclotomic field (k may be any integer).
    pub fn zeta_pow(&self, k: i64) -> Result<FieldElement> {
        let FieldKind::Cyclotomic(n) = self.kind() else {
            return Err(Error::Unsupported(
                "zeta powers need a cyclotomic field".into(),
            ));
        };
        let n = *n as i64;
        let k = k.rem_euclid(n) as usize;
        let mut raw = vec![Q::zero(); k + 1];
        raw[k] = Q::one();
        Ok(self.reduced_element(poly::poly_rem_monic(&raw, &self.0.modulus)))
    }

    /// Largest m with all m-th roots of unity in the field, when known.
    pub fn roots_of_unity_order(&self) -> Option<u32> {
        match self.kind() {
            FieldKind::Rational => Some(2),
            FieldKind::Quadratic(d) => {
                if *d == BigInt::from(-1) {
                    Some(4)
                } else if *d == BigInt::from(-3) {
                    Some(6)
                } else {
                    Some(2)
                }
            }
            FieldKind::Cyclotomic(n) => Some(if n % 2 == 0 { *n } else { 2 * *n }),
            FieldKind::SqrtExt { .. } => None,
        }
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.0, &other.0) {
            return true;
        }
        match (self.kind(), other.kind()) {
            (FieldKind::Rational, FieldKind::Rational) => true,
            (FieldKind::Quadratic(a), FieldKind::Quadratic(b)) => a == b,
            (FieldKind::Cyclotomic(a), FieldKind::Cyclotomic(b)) => a == b,
            (
                FieldKind::SqrtExt {
                    base: b1,
                    delta: d1,
                },
                FieldKind::SqrtExt {
                    base: b2,
                    delta: d2,
                },
            ) => b1 == b2 && d1 == d2,
            _ => false,
        }
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            FieldKind::Rational => write!(f, "Q"),
            FieldKind::Quadratic(d) => write!(f, "Q(sqrt {d})"),
            FieldKind::Cyclotomic(n) => write!(f, "Q(zeta_{n})"),
            FieldKind::SqrtExt { base, delta } => write!(f, "{base:?}(sqrt of {delta})"),
        }
    }
}

fn is_squarefree(d: &BigInt) -> bool {
    let mut n = d.abs();
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        let sq = &p * &p;
        if (&n % &sq).is_zero() {
            return false;
        }
        while (&n % &p).is_zero() {
            n /= &p;
        }
        p += 1;
    }
    true
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
enum Coeffs {
    Simple(Vec<Q>),
    Ext(Vec<FieldElement>),
}

/// An exact element of a [`Field`], reduced to its unique representative of
/// degree below the field degree.
#[derive(Clone)]
pub struct FieldElement {
    field: Field,
    coeffs: Coeffs,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs == other.coeffs
    }
}

impl Eq for FieldElement {}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElement {
    /// Structural total order on the reduced representation, used as an
    /// exact sort key when grouping geometric data. Elements compared this
    /// way are expected to live in the same field.
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs.cmp(&other.coeffs)
    }
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        match &self.coeffs {
            Coeffs::Simple(v) => v.iter().all(Zero::is_zero),
            Coeffs::Ext(v) => v.iter().all(FieldElement::is_zero),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.field.one()
    }

    /// Power-basis coefficients over Q (simple fields only).
    pub fn coeffs(&self) -> Option<&[Q]> {
        match &self.coeffs {
            Coeffs::Simple(v) => Some(v),
            Coeffs::Ext(_) => None,
        }
    }

    /// Tower coefficients (a, b) with the element equal to a + b*rho.
    pub fn tower_coeffs(&self) -> Option<(&FieldElement, &FieldElement)> {
        match &self.coeffs {
            Coeffs::Ext(v) => Some((&v[0], &v[1])),
            Coeffs::Simple(_) => None,
        }
    }

    /// The rational value of the element, when it is rational.
    pub fn as_rational(&self) -> Option<Q> {
        match &self.coeffs {
            Coeffs::Simple(v) => {
                if v[1..].iter().all(Zero::is_zero) {
                    Some(v[0].clone())
                } else {
                    None
                }
            }
            Coeffs::Ext(v) => {
                if v[1].is_zero() {
                    v[0].as_rational()
                } else {
                    None
                }
            }
        }
    }

    fn expect_same_field(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch(format!(
                "{:?} vs {:?}",
                self.field, other.field
            )))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.expect_same_field(other)?;
        Ok(match (&self.coeffs, &other.coeffs) {
            (Coeffs::Simple(a), Coeffs::Simple(b)) => {
                self.field.reduced_element(poly::poly_add(a, b))
            }
            (Coeffs::Ext(a), Coeffs::Ext(b)) => FieldElement {
                field: self.field.clone(),
                coeffs: Coeffs::Ext(vec![a[0].checked_add(&b[0])?, a[1].checked_add(&b[1])?]),
            },
            _ => unreachable!("same field, same representation"),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        match &self.coeffs {
            Coeffs::Simple(v) => self.field.reduced_element(v.iter().map(|c| -c).collect()),
            Coeffs::Ext(v) => FieldElement {
                field: self.field.clone(),
                coeffs: Coeffs::Ext(vec![v[0].neg(), v[1].neg()]),
            },
        }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.expect_same_field(other)?;
        Ok(match (&self.coeffs, &other.coeffs) {
            (Coeffs::Simple(a), Coeffs::Simple(b)) => {
                let prod = poly::poly_mul(a, b);
                self.field
                    .reduced_element(poly::poly_rem_monic(&prod, &self.field.0.modulus))
            }
            (Coeffs::Ext(x), Coeffs::Ext(y)) => {
                let FieldKind::SqrtExt { delta, .. } = self.field.kind() else {
                    unreachable!()
                };
                // (a + b rho)(c + d rho) = (ac + bd delta) + (ad + bc) rho
                let (a, b) = (&x[0], &x[1]);
                let (c, d) = (&y[0], &y[1]);
                let re = a
                    .checked_mul(c)?
                    .checked_add(&b.checked_mul(d)?.checked_mul(delta)?)?;
                let im = a.checked_mul(d)?.checked_add(&b.checked_mul(c)?)?;
                FieldElement {
                    field: self.field.clone(),
                    coeffs: Coeffs::Ext(vec![re, im]),
                }
            }
            _ => unreachable!("same field, same representation"),
        })
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.coeffs {
            Coeffs::Simple(v) => {
                let inv =
                    poly::poly_inv_mod(v, &self.field.0.modulus).ok_or(Error::DivisionByZero)?;
                self.field.reduced_element(inv)
            }
            Coeffs::Ext(v) => {
                let FieldKind::SqrtExt { delta, .. } = self.field.kind() else {
                    unreachable!()
                };
                // 1/(a + b rho) = (a - b rho) / (a^2 - b^2 delta)
                let (a, b) = (&v[0], &v[1]);
                let norm = a
                    .checked_mul(a)?
                    .checked_sub(&b.checked_mul(b)?.checked_mul(delta)?)?;
                if norm.is_zero() {
                    // Only possible when delta was in fact a square in the
                    // base field; the descriptor invariant excludes certified
                    // squares but an uncertified one can sneak through.
                    return Err(Error::DivisionByZero);
                }
                let ninv = norm.inv()?;
                FieldElement {
                    field: self.field.clone(),
                    coeffs: Coeffs::Ext(vec![a.checked_mul(&ninv)?, b.neg().checked_mul(&ninv)?]),
                }
            }
        })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.checked_mul(&other.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        if e == 0 {
            return Ok(self.field.one());
        }
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut acc = self.field.one();
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.checked_mul(&sq)?;
            }
            exp >>= 1;
            if exp > 0 {
                sq = sq.checked_mul(&sq)?;
            }
        }
        Ok(acc)
    }

    /// Apply the Galois automorphism zeta -> zeta^j of a cyclotomic field.
    pub fn galois_apply(&self, j: u32) -> Result<Self> {
        let FieldKind::Cyclotomic(n) = self.field.kind() else {
            return Err(Error::Unsupported(
                "Galois substitution needs a cyclotomic field".into(),
            ));
        };
        let n = *n;
        let Coeffs::Simple(v) = &self.coeffs else {
            unreachable!()
        };
        let mut raw = vec![Q::zero(); n as usize];
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                let idx = ((i as u64 * j as u64) % n as u64) as usize;
                raw[idx] += c;
            }
        }
        Ok(self
            .field
            .reduced_element(poly::poly_rem_monic(&raw, &self.field.0.modulus)))
    }

    /// All Galois conjugates sigma_j(a) for gcd(j, n) = 1, deduplicated.
    pub fn galois_conjugates(&self) -> Result<Vec<Self>> {
        let FieldKind::Cyclotomic(n) = self.field.kind() else {
            return Err(Error::Unsupported(
                "Galois conjugates need a cyclotomic field".into(),
            ));
        };
        let n = *n;
        let mut out: Vec<Self> = Vec::new();
        for j in 1..=n.max(1) {
            if num_integer::gcd(j, n) == 1 {
                let img = self.galois_apply(j)?;
                if !out.contains(&img) {
                    out.push(img);
                }
            }
        }
        Ok(out)
    }

    /// Complex conjugation: identity on real fields, the nontrivial
    /// automorphism on imaginary quadratic fields, zeta -> zeta^(n-1) on
    /// cyclotomic fields.
    pub fn complex_conjugate(&self) -> Result<Self> {
        match self.field.kind() {
            FieldKind::Rational => Ok(self.clone()),
            FieldKind::Quadratic(d) => {
                if d.is_negative() {
                    let Coeffs::Simple(v) = &self.coeffs else {
                        unreachable!()
                    };
                    Ok(self
                        .field
                        .reduced_element(vec![v[0].clone(), -v[1].clone()]))
                } else {
                    Ok(self.clone())
                }
            }
            FieldKind::Cyclotomic(n) => self.galois_apply(n - 1),
            FieldKind::SqrtExt { .. } => Err(Error::Unsupported(
                "complex conjugation on square-root towers".into(),
            )),
        }
    }

    /// Exact test for |a| = 1 under the complex embeddings, via a * conj(a) = 1.
    pub fn is_on_unit_circle(&self) -> Result<bool> {
        let conj = self.complex_conjugate()?;
        Ok(self.checked_mul(&conj)?.is_one())
    }

    /// Exact sign at the designated real embedding (sqrt d > 0), for rational
    /// and real quadratic fields. Nonzero signs are certified by interval
    /// refinement of sqrt d, doubling the precision from 64 bits.
    pub fn sign_at_real_embedding(&self) -> Result<i32> {
        match self.field.kind() {
            FieldKind::Rational => {
                let Coeffs::Simple(v) = &self.coeffs else {
                    unreachable!()
                };
                Ok(sign_of(&v[0]))
            }
            FieldKind::Quadratic(d) if d.is_positive() => {
                let Coeffs::Simple(v) = &self.coeffs else {
                    unreachable!()
                };
                let (a, b) = (&v[0], &v[1]);
                if b.is_zero() {
                    return Ok(sign_of(a));
                }
                if a.is_zero() {
                    return Ok(sign_of(b));
                }
                if a.is_positive() == b.is_positive() {
                    return Ok(sign_of(a));
                }
                // Mixed signs: a + b sqrt(d) is nonzero because sqrt(d) is
                // irrational, so refinement terminates.
                let mut bits = 64u32;
                loop {
                    let sq = approx::sqrt_interval_of_int(d, bits);
                    let iv = sq.scale(b).add_rat(a);
                    if let Some(s) = iv.certified_sign() {
                        return Ok(s);
                    }
                    bits *= 2;
                }
            }
            _ => Err(Error::Unsupported(
                "real-embedding sign needs Q or a real quadratic field".into(),
            )),
        }
    }

    /// Exact square root within the field, when one can be certified.
    pub fn sqrt_in_field(&self) -> Option<Self> {
        match self.field.kind() {
            FieldKind::Rational => {
                let q = self.as_rational()?;
                rational_sqrt(&q).map(|r| self.field.from_rational(r))
            }
            FieldKind::Quadratic(d) => {
                let Coeffs::Simple(v) = &self.coeffs else {
                    unreachable!()
                };
                let (a, b) = (&v[0], &v[1]);
                let dq = Q::from_integer(d.clone());
                if b.is_zero() {
                    if let Some(r) = rational_sqrt(a) {
                        return Some(self.field.from_rational(r));
                    }
                    // a = y^2 d needs y^2 = a/d.
                    if let Some(y) = rational_sqrt(&(a / &dq)) {
                        return self.field.from_coeffs(vec![Q::zero(), y]).ok();
                    }
                    return None;
                }
                // (x + y sqrt d)^2 = a + b sqrt d forces
                // x^2 = (a +- sqrt(a^2 - d b^2)) / 2 and y = b / (2x).
                let disc = a * a - &dq * b * b;
                let s = rational_sqrt(&disc)?;
                let two = Q::from_integer(BigInt::from(2));
                for x2 in [(a + &s) / &two, (a - &s) / &two] {
                    if let Some(x) = rational_sqrt(&x2) {
                        if !x.is_zero() {
                            let y = b / (&two * &x);
                            let cand = self.field.from_coeffs(vec![x, y]).ok()?;
                            if cand.checked_mul(&cand).ok()? == *self {
                                return Some(cand);
                            }
                        }
                    }
                }
                None
            }
            // No square certification for cyclotomic fields or towers; the
            // caller extends instead, which keeps arithmetic sound at the
            // cost of canonicity.
            _ => {
                let q = self.as_rational()?;
                rational_sqrt(&q).map(|r| self.field.from_rational(r))
            }
        }
    }

    /// Map the element into a larger field: the identity, a rational into any
    /// field, Q(zeta_m) into Q(zeta_n) for m | n, or a base-field element
    /// into a square-root extension of it.
    pub fn embed_into(&self, target: &Field) -> Result<Self> {
        if self.field == *target {
            return Ok(self.clone());
        }
        if let Some(q) = self.as_rational() {
            return Ok(target.from_rational(q));
        }
        match (self.field.kind(), target.kind()) {
            (FieldKind::Cyclotomic(m), FieldKind::Cyclotomic(n)) if n % m == 0 => {
                let step = (n / m) as i64;
                let Coeffs::Simple(v) = &self.coeffs else {
                    unreachable!()
                };
                let mut acc = target.zero();
                for (i, c) in v.iter().enumerate() {
                    if !c.is_zero() {
                        let term = target.zeta_pow(step * i as i64)?;
                        let scaled = term.checked_mul(&target.from_rational(c.clone()))?;
                        acc = acc.checked_add(&scaled)?;
                    }
                }
                Ok(acc)
            }
            (_, FieldKind::SqrtExt { base, .. }) => {
                let in_base = self.embed_into(base)?;
                target.from_base_pair(in_base, base.zero())
            }
            _ => Err(Error::Unsupported(format!(
                "no embedding of {:?} into {:?}",
                self.field, target
            ))),
        }
    }
}

fn sign_of(q: &Q) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.coeffs {
            Coeffs::Simple(v) => {
                let sym = match self.field.kind() {
                    FieldKind::Quadratic(d) => format!("sqrt{d}"),
                    FieldKind::Cyclotomic(n) => format!("zeta{n}"),
                    _ => "x".to_string(),
                };
                let mut parts = Vec::new();
                for (i, c) in v.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let term = match i {
                        0 => format!("{c}"),
                        1 => format!("{c}*{sym}"),
                        _ => format!("{c}*{sym}^{i}"),
                    };
                    parts.push(term);
                }
                if parts.is_empty() {
                    write!(f, "0")
                } else {
                    write!(f, "{}", parts.join(" + "))
                }
            }
            Coeffs::Ext(v) => write!(f, "({}) + ({})*rho", v[0], v[1]),
        }
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! binop_impl {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).expect("field arithmetic")
            }
        }
    };
}

binop_impl!(Add, add, checked_add);
binop_impl!(Sub, sub, checked_sub);
binop_impl!(Mul, mul, checked_mul);
binop_impl!(Div, div, checked_div);

impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::neg(self)
    }
}

/// Result of adjoining a square root of `delta` to a field.
pub struct AdjoinedRoot {
    pub field: Field,
    pub root: FieldElement,
    /// False when delta was a certified square and the field is unchanged.
    pub extended: bool,
}

impl AdjoinedRoot {
    /// Carry an element of the original field into the (possibly extended) one.
    pub fn embed(&self, x: &FieldElement) -> Result<FieldElement> {
        if self.extended {
            x.embed_into(&self.field)
        } else {
            Ok(x.clone())
        }
    }
}

/// Adjoin a square root of `delta` to its field. If `delta` is a certified
/// square the same field comes back with the root; otherwise a square-root
/// extension with a designated generator rho, rho^2 = delta.
pub fn adjoin_sqrt(delta: &FieldElement) -> Result<AdjoinedRoot> {
    if delta.is_zero() {
        return Err(Error::InvalidArgument("cannot adjoin sqrt(0)".into()));
    }
    if let Some(root) = delta.sqrt_in_field() {
        return Ok(AdjoinedRoot {
            field: delta.field().clone(),
            root,
            extended: false,
        });
    }
    let field = Field::sqrt_ext(delta.field().clone(), delta.clone());
    let root = field.generator();
    Ok(AdjoinedRoot {
        field,
        root,
        extended: true,
    })
}

/// Parse a rational from a decimal-free "p/q" or "p" string.
pub fn parse_rational(s: &str) -> Result<Q> {
    s.trim()
        .parse::<Q>()
        .map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))
}
