//! The discrete dynamics of the lines-through-three-double-points operator:
//! exact iteration with period detection, the closed-form coordinates of the
//! iterates, the parameter and moduli maps and their semi-conjugacy, the
//! inverse operator, orbit-union profiles, Galois orbit unions, the
//! cross-ratio relation along the orbit, and parameter classification.
//!
//! On the labelled family the operator acts by t -> -1/t^2; on the moduli
//! invariant it acts by the degree-two Chebyshev polynomial z -> 2z^2 - 1,
//! and the invariant map (t^2 + t^-2)/2 intertwines the two.

use crate::arrangement::{Arrangement, SingularityProfile};
use crate::error::{Error, Result};
use crate::field::{adjoin_sqrt, Field, FieldElement};
use crate::geom::{cross_ratio_pairs, ProjPoint};
use crate::unassuming::{c_abc, family_invariant};
use num_bigint::BigInt;
use num_traits::One;
use std::fmt;

/// A value on the projective line: a field element or the point at infinity.
#[derive(Clone, PartialEq, Eq)]
pub enum P1 {
    Finite(FieldElement),
    Infinity(Field),
}

impl P1 {
    pub fn finite(e: FieldElement) -> Self {
        P1::Finite(e)
    }

    pub fn infinity(field: Field) -> Self {
        P1::Infinity(field)
    }

    pub fn field(&self) -> &Field {
        match self {
            P1::Finite(e) => e.field(),
            P1::Infinity(f) => f,
        }
    }

    pub fn as_finite(&self) -> Option<&FieldElement> {
        match self {
            P1::Finite(e) => Some(e),
            P1::Infinity(_) => None,
        }
    }
}

impl fmt::Debug for P1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            P1::Finite(e) => write!(f, "{e}"),
            P1::Infinity(_) => write!(f, "inf"),
        }
    }
}

/// The action on the labelled family parameter: z -> -1/z^2
/// (0 and infinity swap).
pub fn parameter_map(z: &P1) -> Result<P1> {
    match z {
        P1::Infinity(f) => Ok(P1::Finite(f.zero())),
        P1::Finite(e) => {
            if e.is_zero() {
                Ok(P1::Infinity(e.field().clone()))
            } else {
                Ok(P1::Finite(e.checked_mul(e)?.inv()?.neg()))
            }
        }
    }
}

/// The invariant of the labelled parameter: z -> (z^2 + z^-2)/2, sending
/// 0 and infinity to infinity.
pub fn period_map(z: &P1) -> Result<P1> {
    match z {
        P1::Infinity(f) => Ok(P1::Infinity(f.clone())),
        P1::Finite(e) => {
            if e.is_zero() {
                Ok(P1::Infinity(e.field().clone()))
            } else {
                Ok(P1::Finite(family_invariant(e)?))
            }
        }
    }
}

/// The induced action on the moduli invariant: the degree-two Chebyshev
/// polynomial z -> 2z^2 - 1, fixing infinity.
pub fn chebyshev_map(z: &P1) -> Result<P1> {
    match z {
        P1::Infinity(f) => Ok(P1::Infinity(f.clone())),
        P1::Finite(e) => {
            let two = e.field().from_int(2);
            let one = e.field().one();
            Ok(P1::Finite(
                two.checked_mul(&e.checked_mul(e)?)?.checked_sub(&one)?,
            ))
        }
    }
}

/// The exponent sequence controlling the iterate coordinates:
/// (2^k - (-1)^k) / 3, so 0, 1, 1, 3, 5, 11, 21, 43, ...
pub fn jacobsthal(k: u32) -> BigInt {
    let two_k = BigInt::one() << k;
    let sign = if k.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    (two_k - sign) / BigInt::from(3)
}

/// Parameters (a_k, b_k, c_k) of the k-th iterate of C(1, 1, t):
/// a_k = t^(nu_k * (-1)^k), b_k = 1/a_k, c_k = t * a_k.
pub fn closed_form_abc(
    t: &FieldElement,
    k: u32,
) -> Result<(FieldElement, FieldElement, FieldElement)> {
    if t.is_zero() {
        return Err(Error::InvalidArgument(
            "closed form needs a nonzero parameter".into(),
        ));
    }
    let nu = jacobsthal(k);
    let signed: BigInt = if k.is_multiple_of(2) { nu } else { -nu };
    let exp = i64::try_from(&signed)
        .map_err(|_| Error::InvalidArgument(format!("iterate index {k} too large")))?;
    let a = t.pow(exp)?;
    let b = a.inv()?;
    let c = t.checked_mul(&a)?;
    Ok((a, b, c))
}

/// One orbit of the operator, with detected period data.
#[derive(Clone, Debug)]
pub struct OrbitReport {
    pub seed: Arrangement,
    /// The iterates, starting with the seed, up to the first repetition,
    /// emptiness, or the step bound.
    pub terms: Vec<Arrangement>,
    /// Cycle length when a repetition was found.
    pub period: Option<usize>,
    /// Index of the first term the repetition returned to.
    pub preperiod: Option<usize>,
    /// The orbit reached the empty arrangement.
    pub terminated: bool,
    /// Union of all recorded terms.
    pub union: Arrangement,
    pub union_profile: SingularityProfile,
}

/// Iterate the operator from a seed, recording every term, stopping on the
/// empty arrangement, on a repetition (set equality against all earlier
/// terms), or after `max_steps` applications.
pub fn iterate_lambda(seed: &Arrangement, max_steps: usize) -> Result<OrbitReport> {
    if max_steps == 0 {
        return Err(Error::InvalidArgument("need at least one step".into()));
    }
    let mut terms = vec![seed.clone()];
    let mut period = None;
    let mut preperiod = None;
    let mut terminated = false;
    for _ in 0..max_steps {
        let next = terms.last().unwrap().lambda_op(2, 3)?;
        if next.is_empty() {
            terms.push(next);
            terminated = true;
            break;
        }
        if let Some(j) = terms.iter().position(|t| t.set_equal(&next)) {
            preperiod = Some(j);
            period = Some(terms.len() - j);
            break;
        }
        terms.push(next);
    }
    let mut union = terms[0].clone();
    for t in &terms[1..] {
        union = union.union(t)?;
    }
    let union_profile = union.profile();
    Ok(OrbitReport {
        seed: seed.clone(),
        terms,
        period,
        preperiod,
        terminated,
        union,
        union_profile,
    })
}

/// Multiplicative order of -2 modulo an odd n > 1: the predicted period of
/// the parameter map on a primitive n-th root of unity.
pub fn predicted_chi_period(n: u64) -> Result<u64> {
    if n <= 1 || n.is_multiple_of(2) {
        return Err(Error::InvalidArgument(
            "parameter-period prediction needs odd n > 1".into(),
        ));
    }
    let base = (n - 2) % n; // -2 mod n
    let mut acc = base;
    let mut k = 1;
    while acc != 1 {
        acc = (acc * base) % n;
        k += 1;
        if k > n {
            return Err(Error::Expectation(format!("-2 has no order mod {n}")));
        }
    }
    Ok(k)
}

/// Read off (u, v, w) from an arrangement in diagonal-family form, i.e. six
/// lines with normals (0, +-u, 1), (+-v, 0, 1), (+-w, 1, 0).
pub fn parse_cabc_form(a: &Arrangement) -> Result<(FieldElement, FieldElement, FieldElement)> {
    if a.len() != 6 {
        return Err(Error::InvalidArgument(
            "diagonal form needs exactly six lines".into(),
        ));
    }
    let mut group_a: Vec<FieldElement> = Vec::new(); // canonical (0, 1, s): u = 1/s
    let mut group_b: Vec<FieldElement> = Vec::new(); // canonical (1, 0, s): v = 1/s
    let mut group_c: Vec<FieldElement> = Vec::new(); // canonical (1, s, 0): w = 1/s
    for l in a.lines() {
        let c = l.coords();
        if c[0].is_zero() && !c[1].is_zero() && !c[2].is_zero() {
            group_a.push(c[2].inv()?);
        } else if !c[0].is_zero() && c[1].is_zero() && !c[2].is_zero() {
            group_b.push(c[2].inv()?);
        } else if !c[0].is_zero() && !c[1].is_zero() && c[2].is_zero() {
            group_c.push(c[1].inv()?);
        } else {
            return Err(Error::InvalidArgument(
                "line does not fit the diagonal-family pattern".into(),
            ));
        }
    }
    let extract = |group: &[FieldElement]| -> Result<FieldElement> {
        if group.len() != 2 || group[0] != group[1].neg() {
            return Err(Error::InvalidArgument(
                "pencil is not a symmetric parameter pair".into(),
            ));
        }
        Ok(group[0].clone())
    };
    Ok((extract(&group_a)?, extract(&group_b)?, extract(&group_c)?))
}

/// The two antecedents of an arrangement C(u, v, w) under the operator:
/// C(r, w r, (w/u) r) for r a square root of uv/w or of -uv/w, adjoining the
/// root when it does not exist in the field. The sign choices inside the
/// triple only permute the labelling, not the line set.
pub fn preimages(a: &Arrangement) -> Result<Vec<Arrangement>> {
    let (u, v, w) = parse_cabc_form(a)?;
    let delta = u.checked_mul(&v)?.checked_div(&w)?;
    let mut out = Vec::with_capacity(2);
    for d in [delta.clone(), delta.neg()] {
        let adj = adjoin_sqrt(&d)?;
        let rho = adj.root.clone();
        let w_e = adj.embed(&w)?;
        let u_e = adj.embed(&u)?;
        let b = w_e.checked_mul(&rho)?;
        let c = w_e.checked_div(&u_e)?.checked_mul(&rho)?;
        out.push(c_abc(&rho, &b, &c)?);
    }
    Ok(out)
}

/// The unique real antecedent of a real arrangement C(u, v, w): the square
/// root with positive radicand at the designated real embedding.
pub fn real_preimage(a: &Arrangement) -> Result<Arrangement> {
    let (u, v, w) = parse_cabc_form(a)?;
    let delta = u.checked_mul(&v)?.checked_div(&w)?;
    let sign = delta.sign_at_real_embedding()?;
    let radicand = if sign > 0 { delta } else { delta.neg() };
    let adj = adjoin_sqrt(&radicand)?;
    let rho = adj.root.clone();
    let w_e = adj.embed(&w)?;
    let u_e = adj.embed(&u)?;
    let b = w_e.checked_mul(&rho)?;
    let c = w_e.checked_div(&u_e)?.checked_mul(&rho)?;
    c_abc(&rho, &b, &c)
}

/// Singularities of the union of the first k+1 iterates for a generic seed:
/// t2 = 12(k^2 - k + 1), t3 = 12k, t_{2k+2} = 3.
pub fn union_profile_formula(k: usize) -> Result<SingularityProfile> {
    if k == 0 {
        return Err(Error::InvalidArgument("union formula needs k >= 1".into()));
    }
    Ok(SingularityProfile::from_pairs([
        (2, 12 * (k * k - k + 1)),
        (3, 12 * k),
        (2 * k + 2, 3),
    ]))
}

/// Order of a root of unity in its field; errors when the element is not a
/// root of unity.
pub fn root_of_unity_order(t: &FieldElement) -> Result<u32> {
    let bound = t
        .field()
        .roots_of_unity_order()
        .ok_or_else(|| Error::Unsupported("unknown unit group for this field".into()))?;
    let mut acc = t.clone();
    for k in 1..=bound {
        if acc.is_one() {
            return Ok(k);
        }
        acc = acc.checked_mul(t)?;
    }
    Err(Error::InvalidArgument("not a root of unity".into()))
}

/// The union of the full operator orbits of C(1, 1, t') over all Galois
/// conjugates t' of a primitive odd-order root of unity t, computed in the
/// diagonal coordinate system throughout.
pub fn galois_orbit_union(t: &FieldElement) -> Result<Arrangement> {
    let n = root_of_unity_order(t)?;
    if n <= 1 || n % 2 == 0 {
        return Err(Error::InvalidArgument(
            "Galois orbit union needs a primitive odd-order root of unity".into(),
        ));
    }
    let conjugates = t.galois_conjugates()?;
    let mut union = Arrangement::empty(t.field().clone());
    for tc in &conjugates {
        union = union.union(&closed_form_orbit_union(tc)?)?;
    }
    Ok(union)
}

/// Union of one purely periodic orbit of C(1, 1, t) via the coordinate
/// recurrence (a, b, c) -> (b/c, a c, b/a).
pub fn closed_form_orbit_union(t: &FieldElement) -> Result<Arrangement> {
    let field = t.field().clone();
    let one = field.one();
    let first = c_abc(&one, &one, t)?;
    let mut union = first.clone();
    let (mut a, mut b, mut c) = (one.clone(), one, t.clone());
    for _ in 0..512 {
        let next_a = b.checked_div(&c)?;
        let next_b = a.checked_mul(&c)?;
        let next_c = b.checked_div(&a)?;
        (a, b, c) = (next_a, next_b, next_c);
        let term = c_abc(&a, &b, &c)?;
        if term.set_equal(&first) {
            return Ok(union);
        }
        union = union.union(&term)?;
    }
    Err(Error::Expectation(
        "orbit did not close within 512 steps".into(),
    ))
}

/// Union of the operator orbits of the parameter arrangements seeded at
/// every 2^(n+1)-th root of unity other than the degenerate values 1 and -1.
/// Each seed dies out through the quadrilateral after at most n+1 steps, and
/// the union assembles the Ceva arrangement of index 2^(n+1).
///
/// Seeding only the primitive 2^(n+1)-th roots is not enough from n = 2 on
/// (their orbits miss the lines contributed by the lower 2-power roots), so
/// the full non-degenerate root set is used.
pub fn power_of_two_assembly(n: u32) -> Result<Arrangement> {
    if n == 0 || n > 12 {
        return Err(Error::InvalidArgument(
            "supported range is 1 <= n <= 12".into(),
        ));
    }
    let pow = 1u32 << (n + 1);
    let field = Field::cyclotomic(pow)?;
    let mut union = Arrangement::empty(field.clone());
    for j in 1..pow {
        if j == pow / 2 {
            continue; // beta = -1, the quadrilateral parameter
        }
        let beta = field.zeta_pow(j as i64)?;
        let report = iterate_lambda(&crate::unassuming::c0_of(&beta)?, n as usize + 4)?;
        if !report.terminated {
            return Err(Error::Expectation(format!(
                "orbit at a {pow}-th root did not die out"
            )));
        }
        for term in &report.terms {
            union = union.union(term)?;
        }
    }
    Ok(union)
}

/// Verify the cross-ratio relation between consecutive iterate parameter
/// pairs on the three triangle lines: the pairs at steps k and k+1 have
/// cross-ratio orbit {r^2, r^-2} with r = (T - 1)/(T + 1), T = t^(2^k),
/// and the three families agree.
pub fn cross_ratio_check(t: &FieldElement, k: u32) -> Result<bool> {
    if t.is_zero() || t.is_one() || t.neg().is_one() {
        return Err(Error::InvalidArgument(
            "cross-ratio relation needs t not in {0, 1, -1}".into(),
        ));
    }
    if k == 0 || k > 30 {
        return Err(Error::InvalidArgument(
            "supported range is 1 <= k <= 30".into(),
        ));
    }
    let field = t.field().clone();
    let (a0, b0, c0) = closed_form_abc(t, k)?;
    let (a1, b1, c1) = closed_form_abc(t, k + 1)?;

    // Target set {r^2, r^-2} with r = (t^(2^k) - 1)/(t^(2^k) + 1).
    let big = t.pow(1i64 << k)?;
    let one = field.one();
    let denom = big.checked_add(&one)?;
    if denom.is_zero() {
        return Err(Error::Degenerate("parameter power equals -1".into()));
    }
    let r = big.checked_sub(&one)?.checked_div(&denom)?;
    if r.is_zero() {
        return Err(Error::Degenerate("parameter power equals 1".into()));
    }
    let r2 = r.checked_mul(&r)?;
    let r2i = r2.inv()?;
    let mut target = [r2, r2i];
    target.sort();

    // Points on the three triangle lines with the parameter pairs.
    let on_l1 = |s: &FieldElement| ProjPoint::new([field.zero(), s.clone(), field.one()]);
    let on_l2 = |s: &FieldElement| ProjPoint::new([s.clone(), field.zero(), field.one()]);
    let on_l3 = |s: &FieldElement| ProjPoint::new([s.clone(), field.one(), field.zero()]);

    for (p, q) in [
        (on_l1(&a0)?, on_l1(&a0.neg())?),
        (on_l2(&b0)?, on_l2(&b0.neg())?),
        (on_l3(&c0)?, on_l3(&c0.neg())?),
    ]
    .into_iter()
    .zip([
        (on_l1(&a1)?, on_l1(&a1.neg())?),
        (on_l2(&b1)?, on_l2(&b1.neg())?),
        (on_l3(&c1)?, on_l3(&c1.neg())?),
    ]) {
        let set = cross_ratio_pairs((&p.0, &p.1), (&q.0, &q.1))?;
        if set != target {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Classification of a family parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParameterClass {
    /// In the degenerate set {0, 1, -1, +-2 +- sqrt 5} (or infinity).
    Degenerate,
    /// On the unit circle: the orbit can be periodic.
    Circle,
    /// Off the unit circle: the orbit is provably aperiodic.
    OffCircle,
}

/// Classify a parameter exactly. The membership +-2 +- sqrt5 is tested as
/// (t -+ 2)^2 = 5, which works uniformly in every field.
pub fn classify_parameter(t: &FieldElement) -> Result<ParameterClass> {
    let field = t.field();
    let one = field.one();
    if t.is_zero() || *t == one || *t == one.neg() {
        return Ok(ParameterClass::Degenerate);
    }
    let five = field.from_int(5);
    let two = field.from_int(2);
    let minus = t.checked_sub(&two)?;
    let plus = t.checked_add(&two)?;
    if minus.checked_mul(&minus)? == five || plus.checked_mul(&plus)? == five {
        return Ok(ParameterClass::Degenerate);
    }
    if t.is_on_unit_circle()? {
        Ok(ParameterClass::Circle)
    } else {
        Ok(ParameterClass::OffCircle)
    }
}

/// Exact cycle length of a map's orbit from a starting value (the eventual
/// period, with the preperiod also returned).
pub fn detect_cycle<F>(start: &P1, step: F, max_steps: usize) -> Result<Option<(usize, usize)>>
where
    F: Fn(&P1) -> Result<P1>,
{
    let mut history = vec![start.clone()];
    for _ in 0..max_steps {
        let next = step(history.last().unwrap())?;
        if let Some(j) = history.iter().position(|z| *z == next) {
            return Ok(Some((history.len() - j, j)));
        }
        history.push(next);
    }
    Ok(None)
}
